#include "embedcheck/group/epimorphism.hpp"

#include <numeric>
#include <stdexcept>

namespace embedcheck {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

} // namespace

CyclicMap cyclic_map_from_coordinates(const AbelianStructure& A, std::int64_t l, std::vector<std::int64_t> coords)
{
    if (coords.size() != A.coordinate_count())
        throw std::invalid_argument("cyclic map: wrong number of coordinate values");
    CyclicMap f;
    f.modulus = l;
    for (std::size_t i = 0; i < A.torsion.size(); ++i) {
        auto& v = coords[A.free_rank + i];
        Integer dv = A.torsion[i] * Integer(static_cast<long>(v));
        if (l == 0 ? dv != 0 : mpz_fdiv_ui(dv.get_mpz_t(), static_cast<unsigned long>(l)) != 0)
            throw std::invalid_argument("cyclic map does not respect the torsion of H_1");
    }
    if (l > 0)
        for (auto& v : coords)
            v = mod(v, l);
    f.on_coordinates = coords;
    const std::size_t g = A.generator_images.rows();
    f.on_generators.assign(g, 0);
    for (std::size_t j = 0; j < g; ++j) {
        Integer s = 0;
        for (std::size_t c = 0; c < coords.size(); ++c)
            s += A.generator_images(j, c) * Integer(static_cast<long>(coords[c]));
        if (l > 0)
            f.on_generators[j] = static_cast<std::int64_t>(mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(l)));
        else
            f.on_generators[j] = s.get_si();
    }
    return f;
}

bool is_surjective(const CyclicMap& f)
{
    std::int64_t g = f.modulus;
    for (auto v : f.on_generators)
        g = std::gcd(g, v);
    return g == 1;
}

std::vector<CyclicMap> epimorphisms_to_cyclic(const AbelianStructure& A, std::int64_t l, std::int64_t bound)
{
    if (l < 0)
        throw std::invalid_argument("epimorphisms_to_cyclic: negative modulus");
    const std::size_t n = A.coordinate_count();
    std::vector<CyclicMap> out;
    // allowed values per coordinate
    std::vector<std::vector<std::int64_t>> choices(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (l == 0) {
            if (c < A.free_rank)
                for (std::int64_t v = -bound; v <= bound; ++v)
                    choices[c].push_back(v);
            else
                choices[c] = {0};
        } else {
            for (std::int64_t v = 0; v < l; ++v) {
                if (c >= A.free_rank) {
                    Integer dv = A.torsion[c - A.free_rank] * Integer(static_cast<long>(v));
                    if (mpz_fdiv_ui(dv.get_mpz_t(), static_cast<unsigned long>(l)) != 0)
                        continue;
                }
                choices[c].push_back(v);
            }
        }
    }
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::int64_t> vals(n);
    if (n == 0)
        return out;
    for (;;) {
        for (std::size_t c = 0; c < n; ++c)
            vals[c] = choices[c][idx[c]];
        std::int64_t g = l;
        for (auto v : vals)
            g = std::gcd(g, v);
        bool keep = g == 1;
        if (keep && l == 0) {
            for (auto v : vals)
                if (v != 0) {
                    keep = v > 0;
                    break;
                }
        }
        if (keep)
            out.push_back(cyclic_map_from_coordinates(A, l, vals));
        std::size_t c = n;
        while (c > 0) {
            --c;
            if (++idx[c] < choices[c].size())
                break;
            idx[c] = 0;
            if (c == 0)
                return out;
        }
    }
}

std::vector<CyclicMap> epimorphisms_to_cyclic(const GroupPresentation& P, std::int64_t l, std::int64_t bound)
{
    return epimorphisms_to_cyclic(abelianize(P), l, bound);
}

} // namespace embedcheck
