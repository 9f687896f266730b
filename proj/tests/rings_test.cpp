#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "embedcheck/rings/group_ring.hpp"
#include "embedcheck/rings/laurent_upoly.hpp"
#include "embedcheck/rings/normal_form.hpp"
#include "embedcheck/rings/poly_text.hpp"

using namespace embedcheck;

namespace {

const std::vector<std::string> XY{"x", "y"};

ZPoly Z(const std::string& s) { return parse_laurent_z(s, XY); }

ZPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms, int span)
{
    std::uniform_int_distribution<int> e(-span, span), c(-4, 4), n(0, terms);
    ZPoly p(IntegerRing{}, nvars);
    int k = n(rng);
    for (int i = 0; i < k; ++i) {
        Exponents ex(nvars);
        for (auto& v : ex)
            v = e(rng);
        p.add_term(ex, Integer(c(rng)));
    }
    return p;
}

std::vector<Exponents> random_unimodular(std::mt19937_64& rng, std::size_t n)
{
    // product of a few elementary matrices
    std::vector<Exponents> m(n, Exponents(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> q(-2, 2);
    for (int s = 0; s < 4; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        int k = q(rng);
        for (std::size_t j = 0; j < n; ++j)
            m[a][j] += k * m[b][j];
    }
    if (pick(rng) == 0)
        for (auto& v : m[0])
            v = -v;
    return m;
}

// images of the composite: variable i -> sum_j A[i][j] * image_of_B(j)
std::vector<Exponents> compose(const std::vector<Exponents>& A, const std::vector<Exponents>& B)
{
    std::size_t n = A.size();
    std::vector<Exponents> r(n, Exponents(B[0].size(), 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j)
            for (std::size_t k = 0; k < B[j].size(); ++k)
                r[i][k] += A[i][j] * B[j][k];
    return r;
}

} // namespace

TEST_CASE("canonical text form")
{
    ZPoly p = Z("3*x^-1*y^2 - 1");
    CHECK(p.to_string(XY) == "3*x^-1*y^2 - 1");
    CHECK(Z("1 - y + y*x").to_string(XY) == "x*y - y + 1");
    CHECK(Z("(x-1)^2").to_string(XY) == "x^2 - 2*x + 1");
    CHECK(Z("x y^{-2}").to_string(XY) == "x*y^-2");
    CHECK(Z("xy").to_string(XY) == "x*y");
    CHECK(Z("0").to_string(XY) == "0");
    CHECK(ZPoly(IntegerRing{}, 1).to_string() == "0");
    CHECK(parse_laurent_q("1/2*t - 3/4", std::vector<std::string>{"t"}).to_string() == "1/2*t - 3/4");
    CHECK_THROWS_AS(Z("x + z"), PolyParseError);
    CHECK_THROWS_AS(Z("(x+1)^-1"), PolyParseError);
    CHECK_THROWS_AS(Z("x/2"), PolyParseError);
    CHECK(default_variable_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("text round trip on random polynomials")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        ZPoly p = random_poly(rng, 2, 6, 3);
        CHECK(Z(p.to_string(XY)) == p);
    }
}

TEST_CASE("ring axioms on random elements")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        ZPoly a = random_poly(rng, 2, 4, 2), b = random_poly(rng, 2, 4, 2), c = random_poly(rng, 2, 4, 2);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("exact division")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
        ZPoly a = random_poly(rng, 2, 4, 2), b = random_poly(rng, 2, 4, 2);
        if (b.is_zero())
            continue;
        auto q = (a * b).exact_divide(b);
        REQUIRE(q.has_value());
        REQUIRE(*q == a);
    }
    CHECK_FALSE(Z("x + 1").exact_divide(Z("x + 2")).has_value());
    CHECK_FALSE(Z("x^2 + 1").exact_divide(Z("x - 1")).has_value());
    CHECK_FALSE(Z("x").exact_divide(Z("2")).has_value());
    CHECK(*Z("x^-3 - 1").exact_divide(Z("x^-1 - 1")) == Z("x^-2 + x^-1 + 1"));
}

TEST_CASE("substitute_monomial")
{
    std::vector<std::string> ar{"a", "r"};
    ZPoly ar_poly = parse_laurent_z("a*r", ar);
    std::vector<Exponents> id{{1, 0}, {0, 1}};
    CHECK(ar_poly.substitute_monomial(id, 2).to_string(XY) == "x*y");
    ZPoly r = parse_laurent_z("r^2 - r + 1", ar);
    CHECK(r.substitute_monomial(id, 2).to_string(XY) == "y^2 - y + 1");
    std::vector<Exponents> bad{{1, 0}};
    CHECK_THROWS(r.substitute_monomial(bad, 2));
}

TEST_CASE("substitute_monomial functoriality")
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        ZPoly p = random_poly(rng, 3, 5, 2);
        auto B1 = random_unimodular(rng, 3), B2 = random_unimodular(rng, 3);
        // x_i -> m_i under B2, then under B1 = x_i -> B2-image with B1 substituted
        ZPoly step = p.substitute_monomial(B2, 3).substitute_monomial(B1, 3);
        ZPoly direct = p.substitute_monomial(compose(B2, B1), 3);
        REQUIRE(step == direct);
    }
}

TEST_CASE("normal_form_mod")
{
    ZPoly m = Z("x^2 - x + 1");
    CHECK(normal_form_mod(Z("3*y"), m, 3).is_zero());
    CHECK(normal_form_mod(Z("x^2 - x + 1 + 3*x^5"), m, 3).is_zero());
    CHECK(normal_form_mod(Z("x"), m, 3) == Z("x"));
    CHECK(normal_form_mod(Z("x^-1"), m, 0) == Z("1 - x"));
    CHECK(normal_form_mod(Z("x + 1"), m, 3) == Z("x + 1"));
    CHECK_THROWS(normal_form_mod(Z("x"), Z("2*x^2 + 1"), 3));
    CHECK_THROWS(normal_form_mod(Z("x"), Z("x*y + 1"), 3));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 1000; ++i) {
        ZPoly p = random_poly(rng, 2, 4, 3), q = random_poly(rng, 2, 4, 3);
        REQUIRE(normal_form_mod(p * m + q.scaled(3), m, 3).is_zero());
        // normal form is a function of the class
        ZPoly a = random_poly(rng, 2, 4, 3);
        REQUIRE(normal_form_mod(a + p * m + q.scaled(3), m, 3) == normal_form_mod(a, m, 3));
    }
}

TEST_CASE("group ring of G_k")
{
    GkRing R2(2);
    CHECK(R2.rho() * R2.a() == R2.rho());
    CHECK(R2.a(2) == R2.one());
    CHECK(R2.to_string(R2.rho()) == "a + 1");
    for (std::int64_t k = 2; k <= 8; ++k) {
        GkRing R(k);
        CHECK((R.rho() * (R.a() - R.one())).is_zero());
        CHECK((R.rho() * (R.one() - R.a())).is_zero());
        for (std::int64_t n = 1; n < k; ++n)
            CHECK(R.rho() * R.nu(n) == R.integer(n) * R.rho());
        CHECK(R.a(k) == R.one());
        CHECK(R.a(-1) == R.a(k - 1));
        CHECK(R.augmentation(R.rho()) == k);
    }
    CHECK_THROWS(GkRing(1));
}

TEST_CASE("univariate Laurent division over Q and F_p")
{
    std::mt19937_64 rng(5);
    PrimeField F7(7);
    for (int i = 0; i < 1000; ++i) {
        QUPoly a = QUPoly::from_sparse(to_rational(random_poly(rng, 1, 6, 4)));
        QUPoly b = QUPoly::from_sparse(to_rational(random_poly(rng, 1, 4, 3)));
        if (b.is_zero())
            continue;
        auto [q, r] = a.divmod(b);
        REQUIRE(q * b + r == a);
        REQUIRE((r.is_zero() || r.span() < b.span()));
        FpUPoly fa = FpUPoly::from_sparse(to_prime_field(random_poly(rng, 1, 6, 4), F7));
        FpUPoly fb = FpUPoly::from_sparse(to_prime_field(random_poly(rng, 1, 4, 3), F7));
        if (fb.is_zero())
            continue;
        auto [fq, fr] = fa.divmod(fb);
        REQUIRE(fq * fb + fr == fa);
        REQUIRE((fr.is_zero() || fr.span() < fb.span()));
    }
    QUPoly p = QUPoly::from_sparse(parse_laurent_q("2*t^-1 - 2*t", std::vector<std::string>{"t"}));
    CHECK(p.normalized().to_string() == "t^2 - 1");
}

TEST_CASE("prime field")
{
    PrimeField F((std::uint64_t{1} << 61) - 1);
    auto x = F.from_int(123456789);
    CHECK(F.is_one(x * F.inverse(x)));
    CHECK(F.from_int(-1).v == F.p - 1);
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS(PrimeField(1));
}
