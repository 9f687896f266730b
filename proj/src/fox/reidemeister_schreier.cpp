#include "embedcheck/fox/reidemeister_schreier.hpp"

#include <deque>
#include <stdexcept>

namespace embedcheck {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace

Word rs_rewrite(const CoverPresentation& C, const Word& w, std::int64_t c)
{
    const std::int64_t l = C.index;
    const std::size_t g = C.map.on_generators.size();
    Word out;
    c = mod(c, l);
    for (const auto& let : w.letters()) {
        const std::int64_t fg = C.map.on_generators[let.gen];
        if (let.exp > 0) {
            for (std::int64_t i = 0; i < let.exp; ++i) {
                auto s = C.slot[static_cast<std::size_t>(c) * g + let.gen];
                if (s >= 0)
                    out.push({static_cast<std::size_t>(s), 1});
                c = mod(c + fg, l);
            }
        } else {
            for (std::int64_t i = 0; i < -let.exp; ++i) {
                c = mod(c - fg, l);
                auto s = C.slot[static_cast<std::size_t>(c) * g + let.gen];
                if (s >= 0)
                    out.push({static_cast<std::size_t>(s), -1});
            }
        }
    }
    return out;
}

CoverPresentation rs_cover(const GroupPresentation& P, const CyclicMap& f)
{
    const std::int64_t l = f.modulus;
    if (l < 2)
        throw std::invalid_argument("rs_cover: index must be at least 2");
    if (f.on_generators.size() != P.generator_count())
        throw std::invalid_argument("rs_cover: one value per generator required");
    if (!is_surjective(f))
        throw std::invalid_argument("rs_cover: map is not surjective");
    for (std::size_t r = 0; r < P.relator_count(); ++r) {
        std::int64_t s = 0;
        for (const auto& let : P.relators()[r].letters())
            s += let.exp * f.on_generators[let.gen];
        if (mod(s, l) != 0)
            throw std::invalid_argument("rs_cover: map does not kill relator " + std::to_string(r + 1));
    }
    const std::size_t g = P.generator_count();
    CoverPresentation C;
    C.index = l;
    C.map = f;
    C.map.on_generators.clear();
    for (auto v : f.on_generators)
        C.map.on_generators.push_back(mod(v, l));
    const auto& fv = C.map.on_generators;

    // Breadth-first Schreier tree.
    std::vector<bool> seen(static_cast<std::size_t>(l), false);
    C.representatives.assign(static_cast<std::size_t>(l), Word{});
    std::vector<bool> tree(static_cast<std::size_t>(l) * g, false);
    std::deque<std::int64_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        std::int64_t c = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < g; ++j) {
            if (fv[j] == 0)
                continue;
            for (int sign : {1, -1}) {
                std::int64_t to = mod(c + sign * fv[j], l);
                if (seen[static_cast<std::size_t>(to)])
                    continue;
                seen[static_cast<std::size_t>(to)] = true;
                C.representatives[static_cast<std::size_t>(to)] =
                    C.representatives[static_cast<std::size_t>(c)] * Word::generator(j, sign);
                std::int64_t from = sign > 0 ? c : to;
                tree[static_cast<std::size_t>(from) * g + j] = true;
                queue.push_back(to);
            }
        }
    }

    std::vector<std::string> names;
    C.slot.assign(static_cast<std::size_t>(l) * g, -1);
    for (std::int64_t c = 0; c < l; ++c)
        for (std::size_t j = 0; j < g; ++j) {
            std::size_t k = static_cast<std::size_t>(c) * g + j;
            if (tree[k])
                continue;
            C.slot[k] = static_cast<std::int64_t>(names.size());
            C.labels.push_back({c, j});
            names.push_back(P.names()[j] + "_" + std::to_string(c));
        }

    std::vector<Word> rels;
    for (const auto& r : P.relators())
        for (std::int64_t c = 0; c < l; ++c)
            rels.push_back(rs_rewrite(C, r, c));
    C.group = GroupPresentation(std::move(names), std::move(rels));

    const Word tau = C.representatives[1];
    for (const auto& [c, j] : C.labels) {
        Word s = C.representatives[static_cast<std::size_t>(c)] * Word::generator(j) *
                 C.representatives[static_cast<std::size_t>(mod(c + fv[j], l))].inverse();
        C.deck.push_back(rs_rewrite(C, tau * s * tau.inverse(), 0));
    }
    return C;
}

CoverHomology cover_h1(const CoverPresentation& C)
{
    CoverHomology out;
    out.h1 = abelianize(C.group);
    const auto& A = out.h1;
    const std::size_t n = A.coordinate_count();
    const std::size_t gens = C.group.generator_count();
    // coordinates of each deck image of a Schreier generator
    IntMatrix deck_gen(gens, n, Integer(0));
    for (std::size_t j = 0; j < gens; ++j) {
        auto sums = C.deck[j].exponent_sums(gens);
        for (std::size_t k = 0; k < gens; ++k) {
            if (sums[k] == 0)
                continue;
            for (std::size_t c = 0; c < n; ++c)
                deck_gen(j, c) += Integer(static_cast<long>(sums[k])) * A.generator_images(k, c);
        }
    }
    out.deck_action = A.basis_words * deck_gen;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = A.free_rank; c < n; ++c) {
            Integer& v = out.deck_action(i, c);
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), A.torsion[c - A.free_rank].get_mpz_t());
        }
    return out;
}

} // namespace embedcheck
