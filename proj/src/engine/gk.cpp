#include "embedcheck/engine/gk.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "embedcheck/fox/fox.hpp"
#include "embedcheck/rings/group_ring.hpp"

namespace embedcheck {

namespace {

using Elem = GkRing::Elem;
using Vec2 = std::array<Elem, 2>;

Elem from_poly(const GkRing& R, const ZPoly& p)
{
    Elem x = R.zero();
    for (const auto& [e, c] : p.terms())
        x += R.t(e[0]) * R.a(e[1]) * R.integer(c.get_si());
    return x;
}

bool is_zero(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

// row vector c times the 2x2 boundary matrix (rows = 2-cells)
Vec2 boundary_of(const Vec2& c, const std::array<Vec2, 2>& d)
{
    return {c[0] * d[0][0] + c[1] * d[1][0], c[0] * d[0][1] + c[1] * d[1][1]};
}

Json vec_json(const GkRing& R, const Vec2& v) { return Json::array({R.to_string(v[0]), R.to_string(v[1])}); }

} // namespace

CriterionRecord verify_gk_complex(std::int64_t k, std::int64_t n)
{
    if (k < 2)
        throw std::invalid_argument("verify_gk_complex: need k >= 2");
    if (n <= 0 || n >= k)
        throw std::invalid_argument("verify_gk_complex: need 0 < n < k");
    if (std::gcd(n, k) != 1)
        throw std::invalid_argument("verify_gk_complex: need gcd(n, k) = 1");

    GkRing R(k);
    // generators a, t; relators [t, a^n] (cell e_1) and a^k (cell e_2)
    Word a = Word::generator(0), t = Word::generator(1);
    GroupPresentation P({"a", "t"}, {commutator(t, a.power(n)), a.power(k)});
    RingMap phi{AbGroupSpec{1, {k}}, {{0, 1}, {1, 0}}};
    auto J = jacobian(P, phi).relations;
    std::array<Vec2, 2> d2{Vec2{from_poly(R, J(0, 0)), from_poly(R, J(0, 1))},
                           Vec2{from_poly(R, J(1, 0)), from_poly(R, J(1, 1))}};
    const Vec2 d1{R.a() - R.one(), R.t() - R.one()};
    const Elem one = R.one();
    const Elem rho = R.rho();
    const Elem nu = R.nu(n);
    const Elem N = R.integer(n);

    CriterionRecord rec;
    rec.id = "gk.complex";
    rec.tested["k"] = k;
    rec.tested["n"] = n;
    auto& inv = rec.invariants;
    inv["d1"] = vec_json(R, d1);
    inv["d2"] = Json::array({vec_json(R, d2[0]), vec_json(R, d2[1])});

    // d1 d2 = 0 on both 2-cells
    bool composite = true;
    for (const auto& row : d2)
        composite = composite && (row[0] * d1[0] + row[1] * d1[1]).is_zero();
    inv["d1_d2_zero"] = composite;

    // the closed form with e_1 -> ((t-1) nu_n, 1-a), e_2 -> (rho, 0)
    std::array<Vec2, 2> closed{Vec2{(R.t() - one) * nu, one - R.a()}, Vec2{rho, R.zero()}};
    inv["closed_form_equal"] = closed[0][0] == d2[0][0] && closed[0][1] == d2[0][1] && closed[1][0] == d2[1][0] &&
                               closed[1][1] == d2[1][1];
    bool closed_zero = true;
    for (const auto& row : closed)
        closed_zero = closed_zero && (row[0] * d1[0] + row[1] * d1[1]).is_zero();
    inv["closed_form_d1_d2_zero"] = closed_zero;

    // H_0 = Z[G]/(a-1, t-1): a and t generate G_k and the entries lie in the
    // augmentation ideal
    bool h0 = R.augmentation(d1[0]) == 0 && R.augmentation(d1[1]) == 0;
    inv["h0_is_Z"] = h0;

    const Vec2 g{rho, -(N * (R.t() - one))};
    const Vec2 h{R.zero(), R.a() - one};
    bool g_ker = is_zero(boundary_of(g, d2));
    bool h_ker = is_zero(boundary_of(h, d2));
    inv["g"] = vec_json(R, g);
    inv["h"] = vec_json(R, h);
    inv["g_in_kernel"] = g_ker;
    inv["h_in_kernel"] = h_ker;

    Vec2 lhs{(R.a() - one) * g[0], (R.a() - one) * g[1]};
    Vec2 rhs{N * (R.t() - one) * h[0], N * (R.t() - one) * h[1]};
    bool rel = lhs[0] == rhs[0] && lhs[1] == rhs[1];
    bool rel_neg = lhs[0] == -rhs[0] && lhs[1] == -rhs[1];
    inv["relation_a_g_equals_n_t_h"] = rel;
    inv["relation_a_g_equals_minus_n_t_h"] = rel_neg;
    Vec2 rh{rho * h[0], rho * h[1]};
    bool rho_h = is_zero(rh);
    inv["rho_h_zero"] = rho_h;

    rec.verdict = composite && h0 && g_ker && h_ker && rel && rho_h ? Verdict::pass : Verdict::fail;
    return rec;
}

} // namespace embedcheck
