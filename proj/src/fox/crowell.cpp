#include "embedcheck/fox/crowell.hpp"

#include <numeric>

#include "embedcheck/linalg/function_field.hpp"

namespace embedcheck {

bool is_epimorphism_to_Z(const std::vector<std::int64_t>& f)
{
    std::int64_t g = 0;
    for (auto v : f)
        g = std::gcd(g, v);
    return g == 1;
}

Matrix<ZPoly> cyclic_jacobian(const GroupPresentation& P, const std::vector<std::int64_t>& f)
{
    if (f.size() != P.generator_count())
        throw std::invalid_argument("map to Z: one value per generator required");
    if (!is_epimorphism_to_Z(f))
        throw std::invalid_argument("map to Z is not surjective");
    std::vector<Exponents> images;
    for (auto v : f)
        images.push_back({v});
    return jacobian(P, RingMap::free_abelian(images)).relations;
}

namespace {

ZPoly x_minus_one(std::size_t k, std::size_t i) { return ZPoly::variable(IntegerRing{}, k, i) - ZPoly::one(IntegerRing{}, k); }

ZPoly exact(const ZPoly& a, const ZPoly& b)
{
    auto q = a.exact_divide(b);
    if (!q)
        throw std::logic_error("Koszul decomposition: inexact division");
    return *q;
}

std::size_t pair_index(std::size_t k, std::size_t p, std::size_t q)
{
    // lexicographic index of (p, q), p < q < k
    std::size_t idx = 0;
    for (std::size_t a = 0; a < p; ++a)
        idx += k - 1 - a;
    return idx + (q - p - 1);
}

} // namespace

std::vector<ZPoly> koszul_boundary(std::size_t k, std::size_t p, std::size_t q)
{
    std::vector<ZPoly> v(k, ZPoly(IntegerRing{}, k));
    v[q] = x_minus_one(k, p);
    v[p] = -x_minus_one(k, q);
    return v;
}

std::vector<ZPoly> koszul_coordinates(const std::vector<ZPoly>& z_in)
{
    const std::size_t k = z_in.size();
    std::vector<ZPoly> c(k * (k - 1) / 2, ZPoly(IntegerRing{}, k));
    std::vector<ZPoly> z = z_in;
    for (std::size_t top = k; top-- > 1;) {
        // z_top lies in (x_0 - 1, ..., x_{top-1} - 1); split it telescopically.
        ZPoly rest = z[top];
        for (std::size_t i = 0; i < top; ++i) {
            ZPoly next = rest.at_one(i);
            ZPoly a = exact(rest - next, x_minus_one(k, i));
            rest = next;
            if (a.is_zero())
                continue;
            c[pair_index(k, i, top)] += a;
            auto d = koszul_boundary(k, i, top);
            for (std::size_t r = 0; r < k; ++r)
                z[r] -= a * d[r];
        }
        if (!rest.is_zero() || !z[top].is_zero())
            throw std::logic_error("Koszul decomposition: input is not a syzygy");
    }
    if (k >= 1 && !z[0].is_zero())
        throw std::logic_error("Koszul decomposition: input is not a syzygy");
    return c;
}

ModulePresentation crowell_kernel_presentation(const GroupPresentation& P, const std::vector<Exponents>& images,
                                               const std::vector<Word>& lifts)
{
    const std::size_t g = P.generator_count();
    const std::size_t k = lifts.size();
    if (images.size() != g)
        throw std::invalid_argument("crowell_kernel_presentation: one image per generator required");
    if (k == 0)
        throw std::invalid_argument("crowell_kernel_presentation: k >= 1 required");
    RingMap phi = RingMap::free_abelian(images);
    for (std::size_t i = 0; i < k; ++i) {
        Exponents e = phi.image(lifts[i]);
        for (std::size_t j = 0; j < k; ++j)
            if (e[j] != (i == j ? 1 : 0))
                throw std::invalid_argument("crowell_kernel_presentation: lift words do not map to a basis");
    }

    // Extended presentation with generators B_i and relators B_i^-1 lift_i.
    std::vector<std::string> names = P.names();
    for (std::size_t i = 0; i < k; ++i)
        names.push_back("__B" + std::to_string(i));
    std::vector<Word> rels = P.relators();
    for (std::size_t i = 0; i < k; ++i)
        rels.push_back(Word::generator(g + i, -1) * lifts[i]);
    std::vector<Exponents> ext = images;
    for (std::size_t i = 0; i < k; ++i) {
        Exponents e(k, 0);
        e[i] = 1;
        ext.push_back(e);
    }
    RingMap ephi = RingMap::free_abelian(ext);
    for (std::size_t r = 0; r < rels.size(); ++r)
        if (!ephi.kills(rels[r]))
            throw RelatorNotKilled(r);
    Matrix<ZPoly> J = fox_matrix(rels, g + k, ephi);

    // D(j, i) = d w_j / d B_i with w_j = B_1^{h_j1} ... B_k^{h_jk}.
    std::vector<std::vector<ZPoly>> D(g);
    for (std::size_t j = 0; j < g; ++j) {
        Word w;
        for (std::size_t i = 0; i < k; ++i)
            w *= Word::generator(g + i, images[j][i]);
        for (std::size_t i = 0; i < k; ++i)
            D[j].push_back(fox_derivative(w, g + i, ephi));
    }

    const std::size_t npairs = k * (k - 1) / 2;
    Matrix<ZPoly> R(0, g + npairs, ZPoly(IntegerRing{}, k));
    for (std::size_t r = 0; r < J.rows(); ++r) {
        std::vector<ZPoly> row(g + npairs, ZPoly(IntegerRing{}, k));
        std::vector<ZPoly> z(k, ZPoly(IntegerRing{}, k));
        for (std::size_t i = 0; i < k; ++i)
            z[i] = J(r, g + i);
        for (std::size_t j = 0; j < g; ++j) {
            row[j] = J(r, j);
            if (J(r, j).is_zero())
                continue;
            for (std::size_t i = 0; i < k; ++i)
                z[i] += J(r, j) * D[j][i];
        }
        auto c = koszul_coordinates(z);
        for (std::size_t p = 0; p < npairs; ++p)
            row[g + p] = c[p];
        R.append_row(row);
    }
    // Relations among the Koszul generators: boundaries of triples.
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = p + 1; q < k; ++q)
            for (std::size_t s = q + 1; s < k; ++s) {
                std::vector<ZPoly> row(g + npairs, ZPoly(IntegerRing{}, k));
                row[g + pair_index(k, q, s)] = x_minus_one(k, p);
                row[g + pair_index(k, p, s)] = -x_minus_one(k, q);
                row[g + pair_index(k, p, q)] = x_minus_one(k, s);
                R.append_row(row);
            }
    return {AbGroupSpec{k, {}}, R};
}

ModulePresentation crowell_kernel_presentation(const GroupPresentation& P, const std::vector<Exponents>& images)
{
    if (images.empty())
        throw std::invalid_argument("crowell_kernel_presentation: no generators");
    const std::size_t k = images[0].size();
    std::vector<Word> lifts;
    for (std::size_t i = 0; i < k; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < images.size() && !found; ++j) {
            bool unit = true;
            for (std::size_t c = 0; c < k; ++c)
                unit = unit && images[j][c] == (c == i ? 1 : 0);
            if (unit) {
                lifts.push_back(Word::generator(j));
                found = true;
            }
        }
        if (!found)
            throw std::invalid_argument("crowell_kernel_presentation: no generator maps to basis vector " +
                                        std::to_string(i + 1));
    }
    return crowell_kernel_presentation(P, images, lifts);
}

std::size_t completion_rank(const GroupPresentation& P, const std::vector<Exponents>& images)
{
    RingMap phi = RingMap::free_abelian(images);
    auto J = jacobian(P, phi).relations;
    auto Jq = J.map(QPoly(RationalField{}, phi.nvars()), [](const ZPoly& p) { return to_rational(p); });
    std::size_t r = rank_over_function_field(Jq);
    std::size_t rank_a = P.generator_count() - r;
    if (rank_a == 0)
        throw std::logic_error("completion_rank: Alexander module of rank 0");
    return rank_a - 1;
}

} // namespace embedcheck
