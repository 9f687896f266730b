#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "embedcheck/fox/crowell.hpp"
#include "embedcheck/fox/reidemeister_schreier.hpp"
#include "embedcheck/group/parser.hpp"
#include "embedcheck/surgery/catalog.hpp"

using namespace embedcheck;

namespace {

const std::string CATALOG = std::string(EMBEDCHECK_DATA_DIR) + "/standard.cat";

const std::vector<SurgeryDescription>& catalog()
{
    static const auto c = load_catalog(CATALOG);
    return c;
}

const SurgeryDescription& entry(const std::string& name)
{
    auto* e = find_entry(catalog(), name);
    REQUIRE(e != nullptr);
    return *e;
}

// permutations of {0..n-1}; composition p*q = p after q
using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q)
{
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i)
        r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

Perm invert(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

Perm evaluate(const Word& w, const std::vector<Perm>& img)
{
    Perm r(img[0].size());
    std::iota(r.begin(), r.end(), 0);
    for (const auto& l : w.letters()) {
        Perm x = l.exp > 0 ? img[l.gen] : invert(img[l.gen]);
        for (std::int64_t k = 0; k < std::abs(l.exp); ++k)
            r = compose(r, x);
    }
    return r;
}

// unit quaternions +-1, +-i, +-j, +-k as (sign, unit index)
struct Quat {
    int sign = 1, unit = 0; // unit: 0 = 1, 1 = i, 2 = j, 3 = k
    bool operator==(const Quat&) const = default;
};

Quat qmul(Quat a, Quat b)
{
    static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return {a.sign * b.sign * sign[a.unit][b.unit], table[a.unit][b.unit]};
}

Quat qinv(Quat a) { return a.unit == 0 ? a : Quat{-a.sign, a.unit}; }

Quat qeval(const Word& w, const std::vector<Quat>& img)
{
    Quat r;
    for (const auto& l : w.letters())
        for (std::int64_t k = 0; k < std::abs(l.exp); ++k)
            r = qmul(r, l.exp > 0 ? img[l.gen] : qinv(img[l.gen]));
    return r;
}

std::vector<Quat> q8_elements()
{
    std::vector<Quat> out;
    for (int u = 0; u < 4; ++u)
        for (int s : {1, -1})
            out.push_back({s, u});
    return out;
}

struct Invariants {
    std::string h1;
    std::vector<std::string> covers;
    bool operator==(const Invariants&) const = default;
};

// H_1 plus H_1 of infinite cyclic covers (over Q and F_3) for covectors on a basis
template <class Field>
std::string cover_text(const GroupPresentation& P, const std::vector<std::int64_t>& f, const Field& F)
{
    auto h = infinite_cyclic_cover_homology(P, f, F).h1;
    std::string s = "free " + std::to_string(h.free_rank);
    for (const auto& d : h.factors)
        s += " [" + d.to_string() + "]";
    return s;
}

Invariants invariants(const GroupPresentation& P, const std::vector<Word>& basis)
{
    Invariants inv{abelianize(P).to_string(), {}};
    auto coords = coordinates_in_basis(P, basis);
    for (std::vector<std::int64_t> c : {std::vector<std::int64_t>{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}}) {
        std::vector<std::int64_t> f;
        for (const auto& row : coords)
            f.push_back(row[0] * c[0] + row[1] * c[1]);
        inv.covers.push_back(cover_text(P, f, RationalField{}));
        inv.covers.push_back(cover_text(P, f, PrimeField(3)));
    }
    return inv;
}

} // namespace

TEST_CASE("shipped catalog loads and validates")
{
    const auto& c = catalog();
    CHECK(c.size() == 11);
    for (const auto& e : c) {
        INFO(e.name);
        CHECK(validate_entry(e).empty());
    }
    for (const char* n : {"unknot", "trefoil", "4^2_1", "4^2_1+stevedore", "5^2_1", "8^2_13", "9^3_21", "Wh+reef", "M_2,4",
                          "6^3_2", "S2xS1+P"})
        CHECK(find_entry(c, n) != nullptr);
}

TEST_CASE("surgered groups and H_1")
{
    auto P = surgered_group(entry("unknot"));
    CHECK(P.generator_count() == 1);
    REQUIRE(P.relator_count() == 1);
    CHECK(P.relators()[0].empty());
    CHECK(h1_of_surgery(entry("unknot")).to_string() == "Z");
    CHECK(h1_of_surgery(entry("trefoil")).to_string() == "Z");
    CHECK(h1_of_surgery(entry("8^2_13")).to_string() == "Z^2");
    CHECK(h1_of_surgery(entry("Wh+reef")).to_string() == "Z^2");
    CHECK(h1_of_surgery(entry("4^2_1")).to_string() == "Z/2 + Z/2");
    CHECK(h1_of_surgery(entry("4^2_1+stevedore")).to_string() == "Z/2 + Z/2");
    CHECK(h1_of_surgery(entry("M_2,4")).to_string() == "Z/4 + Z/4");
    CHECK(h1_of_surgery(entry("9^3_21")).to_string() == "Z^3");
    CHECK(h1_of_surgery(entry("6^3_2")).to_string() == "Z^3");
    CHECK(h1_of_surgery(entry("5^2_1")).to_string() == "Z^2");
    CHECK(h1_of_surgery(entry("S2xS1+P")).to_string() == "Z");

    auto L = linking_matrix(entry("4^2_1"));
    CHECK(L(0, 0) == 0);
    CHECK(L(0, 1) == 2);
    CHECK(L(1, 0) == 2);
    CHECK(L(1, 1) == 0);
    auto L13 = linking_matrix(entry("8^2_13"));
    CHECK(L13.is_zero());
    CHECK_THROWS_AS(linking_matrix(entry("M_2,4")), SurgeryError);
}

TEST_CASE("h1_of_surgery agrees with the linking matrix under random framings")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> fr(-6, 6);
    std::vector<const SurgeryDescription*> links;
    for (const auto& e : catalog())
        if (e.kind == EntryKind::link)
            links.push_back(&e);
    for (int it = 0; it < 1000; ++it) {
        SurgeryDescription S = *links[static_cast<std::size_t>(it) % links.size()];
        for (auto& f : S.framings)
            f = fr(rng);
        auto A = h1_of_surgery(S); // throws on disagreement
        auto C = cokernel_Z(linking_matrix(S));
        REQUIRE(A.free_rank == C.free_rank);
        REQUIRE(A.torsion == C.factors);
    }
}

TEST_CASE("trivial links")
{
    for (std::size_t b = 0; b <= 4; ++b) {
        SurgeryDescription S;
        S.name = "trivial";
        std::vector<std::string> names;
        for (std::size_t i = 0; i < b; ++i) {
            names.push_back("m" + std::to_string(i + 1));
            S.meridians.push_back(Word::generator(i));
            S.longitudes.push_back(Word{});
            S.framings.push_back(0);
        }
        if (b == 0)
            names.push_back("u"); // presentations need a generator; u is an extra free factor
        S.group = GroupPresentation(names, {});
        if (b == 0)
            continue;
        CHECK(validate_entry(S).empty());
        CHECK(h1_of_surgery(S).free_rank == b);
        CHECK(h1_of_surgery(S).torsion.empty());
        CHECK(designated_basis(S) == S.meridians);
    }
}

TEST_CASE("validation failures")
{
    SurgeryDescription S = entry("trefoil");
    S.meridians.push_back(S.meridians[0]);
    auto bad = validate_entry(S);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("count mismatch") != std::string::npos);

    SurgeryDescription T = entry("trefoil");
    T.longitudes[0] = parse_word("b a^2 b a^-3", T.group.names());
    bad = validate_entry(T);
    REQUIRE(!bad.empty());
    CHECK(bad[0].find("exponent sum") != std::string::npos);

    SurgeryDescription D = entry("5^2_1");
    D.basis = {parse_word("x", D.group.names()), parse_word("x y^2 x", D.group.names())};
    CHECK(!validate_entry(D).empty());
}

TEST_CASE("catalog parse errors carry line numbers")
{
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_catalog(text);
        } catch (const CatalogError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("[entry]\nname = k\nkind = link\ngens = a\nmeridian = a\nmeridian = a\nlongitude = 1\nframing = 0\n") == 1);
    CHECK(line_of("[entry]\nname = k\nkind = link\ngens = a\nmeridian = q\n") == 5);
    CHECK(line_of("[entry]\nname = k\nkind = knot\n") == 3);
    CHECK(line_of("# c\n\nname = k\n") == 3);
    CHECK(line_of("[entry]\nname = k\nrel = a\n") == 3);
    CHECK(line_of("[entry]\nname = k\nkind = link\ngens = a\nmeridian = a\nlongitude = 1\nframing = 1/2\n") == 7);
    CHECK(line_of("[entry]\nname = k\nkind = direct\ngens = a\ncolour = red\n") == 5);
    CHECK(line_of("[entry]\nname = k\nkind = direct\ngens = a\n[entry]\nname = k\nkind = direct\ngens = b\n") == 5);
    CHECK(line_of("[entry]\nname = k\nkind = direct\ngens = a\nrel = a^\n") == 5);
    try {
        parse_catalog("[entry]\nname = k\nkind = link\ngens = a, b\nmeridian = a\nmeridian = b\nlongitude = 1\nframing = 0, 0\n");
        FAIL("expected an error");
    } catch (const CatalogError& e) {
        CHECK(std::string(e.what()).find("count mismatch") != std::string::npos);
    }
}

TEST_CASE("catalog round trip")
{
    auto text = serialize_catalog(catalog());
    auto again = parse_catalog(text);
    CHECK(again == catalog());
    CHECK(serialize_catalog(again) == text);
}

TEST_CASE("knot longitudes commute with meridians in permutation representations")
{
    // every pair (a -> 5-cycle or other fixed class representative, b -> any
    // permutation of S_5) satisfying the knot relator
    struct Knot {
        std::string gens, rel, longitude;
    };
    std::vector<Knot> knots{{"a, b", "aba = bab", "b a^2 b a^-4"},
                            {"a, s", "a s^-1 a^-1 s a s^-1 a^-1 s a = s a s^-1 a^-1 s a s^-1 a^-1 s",
                             "s a^-1 s^-1 a s a^-1 s^-1 a a s^-1 a^-1 s a s^-1 a^-1 s"}};
    std::vector<Perm> reps{{1, 2, 3, 4, 0}, {1, 2, 0, 4, 3}, {1, 0, 3, 2, 4}, {1, 2, 3, 0, 4}, {1, 2, 0, 3, 4}, {1, 0, 2, 3, 4}};
    Perm all{0, 1, 2, 3, 4};
    for (const auto& k : knots) {
        auto P = parse_presentation("gens: " + k.gens + "\nrel: " + k.rel + "\n");
        Word lon = parse_word(k.longitude, P.names());
        Word m = Word::generator(0);
        std::size_t nonabelian = 0;
        for (const auto& a : reps) {
            Perm s = all;
            do {
                std::vector<Perm> img{a, s};
                if (evaluate(P.relators()[0], img) != all)
                    continue;
                if (compose(a, s) == compose(s, a))
                    continue;
                ++nonabelian;
                Perm L = evaluate(lon, img), A = evaluate(m, img);
                REQUIRE(compose(L, A) == compose(A, L));
            } while (std::next_permutation(s.begin(), s.end()));
        }
        CHECK(nonabelian > 0);
    }
}

TEST_CASE("quaternion manifold: double covers against Q(8)")
{
    auto P = surgered_group(entry("4^2_1"));
    // a surjection onto Q(8) exists
    auto Q = q8_elements();
    bool onto = false;
    for (auto x : Q)
        for (auto y : Q) {
            std::vector<Quat> img{x, y};
            bool ok = std::all_of(P.relators().begin(), P.relators().end(),
                                  [&](const Word& r) { return qeval(r, img) == Quat{}; });
            if (!ok)
                continue;
            // generated subgroup
            std::vector<Quat> sub{Quat{}};
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (auto g : img) {
                    Quat h = qmul(sub[i], g);
                    if (std::find(sub.begin(), sub.end(), h) == sub.end())
                        sub.push_back(h);
                }
            onto = onto || sub.size() == 8;
        }
    CHECK(onto);
    // index-2 subgroups of Q(8) are <i>, <j>, <k>, each cyclic of order 4
    for (int u = 1; u <= 3; ++u) {
        Quat g{1, u};
        std::vector<Quat> sub{Quat{}};
        for (Quat p = g; !(p == Quat{}); p = qmul(p, g))
            sub.push_back(p);
        CHECK(sub.size() == 4);
    }
    auto A = abelianize(P);
    auto epis = epimorphisms_to_cyclic(A, 2);
    REQUIRE(epis.size() == 3);
    for (const auto& f : epis)
        CHECK(cover_h1(rs_cover(P, f)).h1.to_string() == "Z/4");
}

TEST_CASE("reduced presentations agree with the surgered link groups")
{
    // hand-reduced presentations of pi_1(M) after eliminating generators with
    // the longitude relations
    auto P13 = parse_presentation("gens: s, t, v, w, x, y\n"
                                  "rel: yv = wy\n"
                                  "rel: t y t^-1 x = w t y t^-1\n"
                                  "rel: x^2 t y^-1 t^-1 y s^-1 w^-1 x v^-1\n"
                                  "rel: sv = ts\nrel: vs = xv\nrel: wt = tw\nrel: xs = tx\n");
    const auto& E13 = entry("8^2_13");
    auto S13 = surgered_group(E13);
    CHECK(invariants(P13, {parse_word("x", P13.names()), parse_word("y", P13.names())}) ==
          invariants(S13, designated_basis(E13)));

    // Wh+reef with b = Ba, c = Ga, t = rT
    auto PW = parse_presentation("gens: a, B, G, r, s, T, v\n"
                                 "rel: [r,a] = G^-1 B r B^-1 r^-1 = r G^-1 r^-1\n"
                                 "rel: G a G^-1 a^-1 = B\n"
                                 "rel: s r T s = r T s r T\n"
                                 "rel: a s^-1 v s a^-1 = G r\n"
                                 "rel: vs = rv\n"
                                 "rel: v = T s r T s^-1 T^-1 = B^-1 s^-1 T s^2 r T s^-1\n");
    const auto& EW = entry("Wh+reef");
    auto SW = surgered_group(EW);
    CHECK(invariants(PW, {parse_word("a", PW.names()), parse_word("r", PW.names())}) ==
          invariants(SW, designated_basis(EW)));
}

TEST_CASE("coordinates in a basis")
{
    const auto& E = entry("8^2_13");
    auto P = surgered_group(E);
    auto c = coordinates_in_basis(P, designated_basis(E));
    auto x = *P.index_of("x"), y = *P.index_of("y");
    CHECK(c[x] == std::vector<std::int64_t>{1, 0});
    CHECK(c[y] == std::vector<std::int64_t>{0, 1});
    CHECK_THROWS_AS(coordinates_in_basis(P, {Word::generator(x)}), SurgeryError);
    CHECK_THROWS_AS(coordinates_in_basis(P, {Word::generator(x, 2), Word::generator(y)}), SurgeryError);
}
