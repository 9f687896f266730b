// Acceptance suite. One PASS/FAIL line per criterion; exit status 0 iff the
// red set is exactly the one recorded as unattainable in the README.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "embedcheck/engine/gk.hpp"
#include "embedcheck/engine/run.hpp"
#include "embedcheck/fox/crowell.hpp"
#include "embedcheck/fox/fox.hpp"
#include "embedcheck/fox/reidemeister_schreier.hpp"
#include "embedcheck/linalg/module.hpp"
#include "embedcheck/linalg/smith.hpp"
#include "embedcheck/linalg/unit_elimination.hpp"
#include "embedcheck/rings/poly_text.hpp"
#include "embedcheck/surgery/catalog.hpp"

using namespace embedcheck;

namespace {

const std::vector<SurgeryDescription>& catalog()
{
    static const auto cat = load_catalog(std::string(EMBEDCHECK_DATA_DIR) + "/standard.cat");
    return cat;
}

EntryContext ctx_of(const std::string& name)
{
    auto* e = find_entry(catalog(), name);
    if (!e)
        throw std::runtime_error("missing catalog entry " + name);
    return EntryContext::from(*e);
}

// collects failed checks of one criterion
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

// ---- random generators for the property suites

Word random_word(std::mt19937_64& rng, std::size_t ngens, int len)
{
    std::uniform_int_distribution<std::size_t> g(0, ngens - 1);
    std::uniform_int_distribution<int> e(-2, 2), n(0, len);
    Word w;
    int k = n(rng);
    for (int i = 0; i < k; ++i)
        w.push({g(rng), e(rng)});
    return w;
}

Word random_commutator_word(std::mt19937_64& rng, std::size_t ngens, int len)
{
    Word w = random_word(rng, ngens, len);
    auto s = w.exponent_sums(ngens);
    for (std::size_t j = 0; j < ngens; ++j)
        w *= Word::generator(j, -s[j]);
    return w;
}

GroupPresentation random_presentation(std::mt19937_64& rng, std::size_t g, int maxrels, int len)
{
    std::uniform_int_distribution<int> nr(0, maxrels);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Word> rels;
    int k = nr(rng);
    for (int i = 0; i < k; ++i)
        rels.push_back(random_commutator_word(rng, g, len));
    return GroupPresentation(names, rels);
}

std::vector<std::int64_t> random_primitive(std::mt19937_64& rng, std::size_t g)
{
    std::uniform_int_distribution<int> v(-2, 2);
    for (;;) {
        std::vector<std::int64_t> f(g);
        for (auto& x : f)
            x = v(rng);
        if (is_epimorphism_to_Z(f))
            return f;
    }
}

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

std::vector<Exponents> random_monomial_map(std::mt19937_64& rng, std::size_t from, std::size_t to)
{
    std::uniform_int_distribution<int> q(-2, 2);
    std::vector<Exponents> m(from, Exponents(to, 0));
    for (auto& row : m)
        for (auto& v : row)
            v = q(rng);
    return m;
}

// variable i -> sum_j A[i][j] * B[j]
std::vector<Exponents> compose(const std::vector<Exponents>& A, const std::vector<Exponents>& B)
{
    std::vector<Exponents> r(A.size(), Exponents(B[0].size(), 0));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j)
            for (std::size_t k = 0; k < B[j].size(); ++k)
                r[i][k] += A[i][j] * B[j][k];
    return r;
}

// ---- criteria

Check criterion_8_2_13()
{
    Check c;
    auto ctx = ctx_of("8^2_13");
    c.expect(ctx.h1.free_rank == 2 && ctx.h1.torsion.empty(), "H_1 = Z^2 (got " + ctx.h1.to_string() + ")");
    auto E = eliminate_units(alexander_presentation(ctx));
    std::vector<std::string> xy{"x", "y"};
    ZPoly m = parse_laurent_z("x^2 - x + 1", xy);
    bool in_ideal = maximal_minors_in_ideal(E, m, Integer(3), 0);
    c.expect(in_ideal, "maximal minors lie in (3, x^2 - x + 1)");
    auto d3 = specialized_quotient_dimension(E, 0, m, 3);
    c.expect(d3 == 2, "dim_F3 at y = 1 mod x^2 - x + 1 is 2 (got " + std::to_string(d3) + ")");
    auto rz = rationally_zero(E);
    c.expect(rz == TriState::yes, "module tensor Q is zero (got " + to_string(rz) + ")");
    // not a condition, printed so a red line shows what the module is instead
    if (!c.ok())
        c.failures.push_back("(note) augmentation dimension over Q: " + std::to_string(augmentation_dimension(E)));
    return c;
}

Check criterion_wh_reef()
{
    Check c;
    auto ctx = ctx_of("Wh+reef");
    ReportConfig cfg;
    cfg.basis_bound = 3;
    auto r = check_beta2(ctx, cfg);
    std::size_t bases = 0, passed = 0;
    for (const auto& rec : r.records)
        if (rec.id == "beta2.basis") {
            ++bases;
            passed += rec.verdict == Verdict::pass;
        }
    c.expect(bases > 0, "some bases tested");
    c.expect(passed == 0, std::to_string(passed) + " of " + std::to_string(bases) + " bases pass");
    c.expect(r.overall == Overall::fails_all_bases_within_bound, "overall is FAILS_ALL_BASES_WITHIN_BOUND");
    auto d = augmentation_dimension(alexander_presentation(ctx));
    c.expect(d == 1, "dim_Q at (a - 1, r - 1) is 1 (got " + std::to_string(d) + ")");
    return c;
}

// Fox derivative d/d(gen) of a word given as syllables, every generator -> t,
// as a map exponent -> coefficient
std::map<std::int64_t, long> hand_fox(const std::vector<std::pair<int, int>>& syl, int gen)
{
    std::map<std::int64_t, long> out;
    std::int64_t p = 0;
    for (auto [g, e] : syl) {
        if (g == gen) {
            if (e > 0)
                for (int i = 0; i < e; ++i)
                    out[p + i] += 1;
            else
                for (int i = 1; i <= -e; ++i)
                    out[p - i] -= 1;
        }
        p += e;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// shift to lowest exponent 0, leading coefficient 1
std::map<std::int64_t, Rational> normalized(const std::map<std::int64_t, Rational>& f)
{
    std::map<std::int64_t, Rational> out;
    if (f.empty())
        return out;
    auto lo = f.begin()->first;
    auto lead = f.rbegin()->second;
    for (const auto& [e, v] : f)
        out[e - lo] = v / lead;
    return out;
}

Check criterion_beta1()
{
    Check c;
    ReportConfig cfg;
    auto un = check_beta1(ctx_of("unknot"), cfg);
    c.expect(un.overall == Overall::consistent_within_bound, "unknot is consistent");
    c.expect(!un.records.empty() && un.records[0].invariants.value("pi_prime_perfect", "") == "yes",
             "unknot: pi' perfect");

    auto tr = check_beta1(ctx_of("trefoil"), cfg);
    c.expect(tr.overall == Overall::obstructed, "trefoil is OBSTRUCTED");
    // aba = bab, i.e. a b a b^-1 a^-1 b^-1
    auto fox = hand_fox({{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}, 0);
    std::map<std::int64_t, Rational> oracle;
    for (const auto& [e, v] : fox)
        oracle[e] = Rational(v);
    oracle = normalized(oracle);
    bool matched = false;
    if (!tr.records.empty() && tr.records[0].invariants.contains("nonzero_h1_of_cover")) {
        const auto& q = tr.records[0].invariants["nonzero_h1_of_cover"]["Q"];
        std::vector<std::string> t{"t"};
        if (q["free_rank"] == 0 && q["factors"].size() == 1) {
            auto got = parse_laurent_q(q["factors"][0].get<std::string>(), t);
            std::map<std::int64_t, Rational> gm;
            for (const auto& [e, v] : got.terms())
                gm[e[0]] = v;
            matched = normalized(gm) == oracle;
            c.expect(q["factors"][0] == "t^2 - t + 1", "factor prints as t^2 - t + 1");
        }
    }
    c.expect(matched, "trefoil invariant factor matches the hand Fox computation");
    return c;
}

Check criterion_9_3_21()
{
    Check c;
    auto ctx = ctx_of("9^3_21");
    for (const auto& v : primitive_vectors(3, 2)) {
        auto r = completion_rank(ctx, IMat{v});
        if (r < 1) {
            std::ostringstream s;
            s << "completion rank 0 at (" << v[0] << ", " << v[1] << ", " << v[2] << ")";
            c.expect(false, s.str());
        }
    }
    auto b = check_beta3plus(ctx, ReportConfig{});
    c.expect(b.overall == Overall::fails_all_bases_within_bound,
             "overall is FAILS_ALL_BASES_WITHIN_BOUND (got " + to_string(b.overall) + ")");
    return c;
}

Check criterion_torsion()
{
    Check c;
    ReportConfig cfg;
    auto r = check_torsion_case(ctx_of("4^2_1"), cfg);
    std::size_t epis = 0;
    for (const auto& rec : r.records)
        if (rec.id == "torsion.epimorphism") {
            ++epis;
            c.expect(rec.invariants["h1"] == "Z/4", "4^2_1 double cover H_1 = Z/4 (got " +
                                                        rec.invariants["h1"].get<std::string>() + ")");
        }
    c.expect(epis == 3, "4^2_1 has three double covers");
    c.expect(r.overall == Overall::consistent_within_bound, "4^2_1 passes");

    auto ctx = ctx_of("M_2,4");
    const auto& names = ctx.group.names();
    auto at = [&](const std::string& n) {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
    };
    const std::size_t ix = at("x"), iu = at("u");
    auto m = check_torsion_case(ctx, cfg);
    // lambda_{i,j}: x -> i, u -> j
    auto lambda = [&](std::int64_t i, std::int64_t j) -> const CriterionRecord* {
        for (const auto& rec : m.records)
            if (rec.id == "torsion.epimorphism") {
                const auto& g = rec.tested["on_generators"];
                if (g[ix] == i && g[iu] == j)
                    return &rec;
            }
        return nullptr;
    };
    for (auto [i, j] : {std::pair{1, 0}, std::pair{2, 1}}) {
        auto* rec = lambda(i, j);
        std::string nm = "lambda_" + std::to_string(i) + "," + std::to_string(j);
        c.expect(rec != nullptr, nm + " is an epimorphism");
        if (rec)
            c.expect(rec->invariants["generator_count"].get<std::size_t>() <= 3,
                     nm + " cover H_1 needs at most 3 generators (got " + rec->invariants["h1"].get<std::string>() +
                         ")");
    }
    return c;
}

Check criterion_stevedore()
{
    Check c;
    auto r = check_torsion_case(ctx_of("4^2_1+stevedore"), ReportConfig{});
    std::size_t noncyclic = 0, epis = 0;
    std::string seen;
    for (const auto& rec : r.records)
        if (rec.id == "torsion.epimorphism") {
            ++epis;
            noncyclic += rec.invariants["generator_count"].get<std::size_t>() > 1;
            seen += (seen.empty() ? "" : ", ") + rec.invariants["h1"].get<std::string>();
        }
    c.expect(epis == 3, "three double covers");
    c.expect(noncyclic == 2, "exactly two non-cyclic double covers (got " + seen + ")");
    c.expect(r.overall == Overall::obstructed, "OBSTRUCTED (got " + to_string(r.overall) + ")");
    return c;
}

Check criterion_gk()
{
    Check c;
    for (std::int64_t k = 2; k <= 6; ++k)
        for (std::int64_t n = 1; n < k; ++n) {
            if (std::gcd(n, k) != 1)
                continue;
            auto r = verify_gk_complex(k, n);
            std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            if (r.verdict == Verdict::pass)
                continue;
            std::string why;
            for (auto key : {"d1_d2_zero", "g_in_kernel", "h_in_kernel", "relation_a_g_equals_n_t_h", "rho_h_zero"})
                if (r.invariants.value(key, false) != true)
                    why += std::string(why.empty() ? "" : ", ") + key + " false";
            c.expect(false, tag + ": " + why);
        }
    return c;
}

// property suites
constexpr int cases = 1000;

Check suite_fox()
{
    Check c;
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<int> v(-3, 3), tors(2, 5), coin(0, 2);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
        Word w = random_word(rng, 3, 10);
        RingMap phi;
        phi.target.free_rank = 2;
        if (coin(rng) == 0)
            phi.target.torsion = {tors(rng)};
        for (int j = 0; j < 3; ++j) {
            Exponents e(phi.target.nvars());
            for (auto& x : e)
                x = v(rng);
            phi.target.reduce(e);
            phi.images.push_back(e);
        }
        bad += !fundamental_identity_check(w, phi);
    }
    c.expect(bad == 0, "Fox fundamental identity: " + std::to_string(bad) + " failures");
    return c;
}

Check suite_smith()
{
    Check c;
    std::mt19937_64 rng(1002);
    std::uniform_int_distribution<int> dim(0, 5), val(-9, 9), zero(0, 3);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
        std::size_t m = dim(rng), n = dim(rng);
        IntMatrix A(m, n, Integer(0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                A(i, j) = zero(rng) == 0 ? 0 : val(rng);
        bad += !verify_smith(A, smith_normal_form_Z(A), IntegerEuclid{});
    }
    c.expect(bad == 0, "SNF over Z: " + std::to_string(bad) + " failures");

    std::uniform_int_distribution<int> d2(1, 4), co(-3, 3), ex(-2, 2), nt(0, 3);
    bad = 0;
    for (int it = 0; it < cases; ++it) {
        std::size_t m = d2(rng), n = d2(rng);
        Matrix<QUPoly> A(m, n, QUPoly(RationalField{}));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QPoly p(RationalField{}, 1);
                for (int s = nt(rng); s > 0; --s)
                    p.add_term({ex(rng)}, Rational(co(rng)));
                A(i, j) = QUPoly::from_sparse(p);
            }
        bad += !verify_smith(A, smith_normal_form_laurent(A), UPolyEuclid<RationalField>{});
    }
    c.expect(bad == 0, "SNF over Q[t^+-1]: " + std::to_string(bad) + " failures");
    return c;
}

Check suite_schreier()
{
    Check c;
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<int> gens(1, 3), mod(2, 5), v(0, 4);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
        std::size_t g = static_cast<std::size_t>(gens(rng));
        auto P = random_presentation(rng, g, 3, 5);
        std::int64_t l = mod(rng);
        CyclicMap f{l, std::vector<std::int64_t>(g), {}};
        do {
            for (auto& x : f.on_generators)
                x = v(rng) % l;
        } while (!is_surjective(f));
        auto C = rs_cover(P, f);
        const auto gl = static_cast<std::size_t>(l);
        bad += C.group.generator_count() != gl * g - gl + 1 || C.group.relator_count() != gl * P.relator_count();
    }
    c.expect(bad == 0, "Schreier counts: " + std::to_string(bad) + " failures");
    return c;
}

Check suite_crowell()
{
    Check c;
    std::mt19937_64 rng(1004);
    std::uniform_int_distribution<int> gens(1, 3);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
        auto P = random_presentation(rng, static_cast<std::size_t>(gens(rng)), 3, 6);
        auto f = random_primitive(rng, P.generator_count());
        auto h = infinite_cyclic_cover_homology(P, f, RationalField{});
        bad += h.alexander.free_rank != h.h1.free_rank + 1;
    }
    c.expect(bad == 0, "Crowell rank bookkeeping: " + std::to_string(bad) + " failures");
    return c;
}

Check suite_surgery()
{
    Check c;
    std::vector<const SurgeryDescription*> links;
    for (const auto& e : catalog())
        if (e.kind == EntryKind::link)
            links.push_back(&e);
    int bad = 0;
    auto agree = [&](const SurgeryDescription& S) {
        try {
            auto A = h1_of_surgery(S);
            auto C = cokernel_Z(linking_matrix(S));
            return A.free_rank == C.free_rank && A.torsion == C.factors;
        } catch (const SurgeryError&) {
            return false;
        }
    };
    for (const auto* e : links)
        bad += !agree(*e);
    c.expect(bad == 0, "catalog entries: " + std::to_string(bad) + " disagree");
    std::mt19937_64 rng(1005);
    std::uniform_int_distribution<int> fr(-6, 6);
    bad = 0;
    for (int it = 0; it < cases; ++it) {
        SurgeryDescription S = *links[static_cast<std::size_t>(it) % links.size()];
        for (auto& f : S.framings)
            f = fr(rng);
        bad += !agree(S);
    }
    c.expect(bad == 0, "random framings: " + std::to_string(bad) + " disagree");
    return c;
}

Check suite_substitute()
{
    Check c;
    std::mt19937_64 rng(1006);
    std::uniform_int_distribution<std::size_t> nv(1, 3);
    int bad = 0;
    for (int it = 0; it < cases; ++it) {
        std::size_t a = nv(rng), b = nv(rng), d = nv(rng);
        ZPoly p = random_poly(rng, a, 5, 2), q = random_poly(rng, a, 5, 2);
        auto F = random_monomial_map(rng, a, b), G = random_monomial_map(rng, b, d);
        auto sub = [](const ZPoly& x, const std::vector<Exponents>& M, std::size_t n) {
            return x.substitute_monomial(M, n);
        };
        // (G o F)^* = G^* F^*, and each substitution is a ring map
        bad += sub(sub(p, F, b), G, d) != sub(p, compose(F, G), d);
        bad += sub(p * q, F, b) != sub(p, F, b) * sub(q, F, b);
        bad += sub(p + q, F, b) != sub(p, F, b) + sub(q, F, b);
    }
    c.expect(bad == 0, "substitute_monomial: " + std::to_string(bad) + " failures");
    return c;
}

Check criterion_properties()
{
    Check c;
    for (auto* suite : {suite_fox, suite_smith, suite_schreier, suite_crowell, suite_surgery, suite_substitute}) {
        auto s = suite();
        c.failures.insert(c.failures.end(), s.failures.begin(), s.failures.end());
    }
    return c;
}

Check criterion_sweep()
{
    Check c;
    std::set<std::string> names{"unknot", "4^2_1", "5^2_1", "6^3_2"};
    for (const auto& e : catalog())
        if (e.known == KnownStatus::embeds_abelian)
            names.insert(e.name);
    for (const auto& n : names) {
        auto* e = find_entry(catalog(), n);
        if (!e) {
            c.expect(false, "missing entry " + n);
            continue;
        }
        auto r = run_report(*e);
        c.expect(r.overall != Overall::obstructed, n + " is OBSTRUCTED");
    }
    return c;
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<Check()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> all{
        {"1", "8^2_13 golden computation", criterion_8_2_13},
        {"2", "Wh+reef fails every beta = 2 basis", criterion_wh_reef},
        {"3", "beta = 1 battery: unknot perfect, trefoil obstructed", criterion_beta1},
        {"4", "9^3_21 completion ranks and beta = 3 battery", criterion_9_3_21},
        {"5", "torsion battery: M(4^2_1) and M_2,4", criterion_torsion},
        {"5s", "stretch: stevedore-tied 4^2_1 obstructed by two double covers", criterion_stevedore},
        {"6", "G_k complex", criterion_gk},
        {"7", "property suites", criterion_properties},
        {"8", "abelianly embeddable entries are never obstructed", criterion_sweep},
    };
    // red on faithful implementation; see README
    const std::set<std::string> expected_red{"1", "5s", "6"};

    std::set<std::string> red;
    for (const auto& cr : all) {
        Check c;
        try {
            c = cr.run();
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        if (!c.ok())
            red.insert(cr.id);
        std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << cr.id << "  " << cr.title << "\n";
        for (const auto& f : c.failures)
            std::cout << "         " << f << "\n";
        std::cout.flush();
    }
    std::cout << "\n" << (all.size() - red.size()) << " of " << all.size() << " criteria pass\n";
    if (red != expected_red) {
        std::cout << "red set differs from the expected one\n";
        return 1;
    }
    std::cout << "red set matches the expected one (1, 5s, 6)\n";
    return 0;
}
