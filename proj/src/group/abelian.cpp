#include "embedcheck/group/abelian.hpp"

namespace embedcheck {

std::string AbelianStructure::to_string() const
{
    std::string s;
    if (free_rank == 1)
        s = "Z";
    else if (free_rank > 1)
        s = "Z^" + std::to_string(free_rank);
    for (const auto& d : torsion)
        s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
    return s.empty() ? "0" : s;
}

IntMatrix exponent_sum_matrix(const GroupPresentation& P)
{
    IntMatrix E(P.relator_count(), P.generator_count(), Integer(0));
    auto rows = P.exponent_sum_rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            E(i, j) = Integer(static_cast<long>(rows[i][j]));
    return E;
}

AbelianStructure abelian_structure(const IntMatrix& E)
{
    // Row vectors x in Z^g change coordinates by x -> x V; the relations then
    // become diagonal.
    auto f = smith_normal_form_Z(E);
    const std::size_t g = E.cols();
    std::vector<std::size_t> tors_idx, free_idx;
    AbelianStructure a;
    for (std::size_t i = 0; i < g; ++i) {
        if (i < f.rank) {
            if (f.diagonal[i] != 1) {
                tors_idx.push_back(i);
                a.torsion.push_back(f.diagonal[i]);
            }
        } else {
            free_idx.push_back(i);
        }
    }
    a.free_rank = free_idx.size();
    std::vector<std::size_t> order = free_idx;
    order.insert(order.end(), tors_idx.begin(), tors_idx.end());
    const std::size_t n = order.size();
    a.generator_images = IntMatrix(g, n, Integer(0));
    a.basis_words = IntMatrix(n, g, Integer(0));
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t k = order[c];
        for (std::size_t j = 0; j < g; ++j) {
            Integer v = f.V(j, k);
            if (c >= a.free_rank) {
                const Integer& d = a.torsion[c - a.free_rank];
                mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
            }
            a.generator_images(j, c) = v;
            a.basis_words(c, j) = f.Vinv(k, j);
        }
    }
    return a;
}

AbelianStructure abelianize(const GroupPresentation& P) { return abelian_structure(exponent_sum_matrix(P)); }

} // namespace embedcheck
