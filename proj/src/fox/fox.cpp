#include "embedcheck/fox/fox.hpp"

namespace embedcheck {

Exponents RingMap::image(const Word& w) const
{
    Exponents e(nvars(), 0);
    for (const auto& l : w.letters()) {
        const auto& im = images.at(l.gen);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] += l.exp * im[i];
    }
    target.reduce(e);
    return e;
}

ZPoly RingMap::group_element(const Exponents& e) const
{
    Exponents r = e;
    target.reduce(r);
    return ZPoly::monomial(IntegerRing{}, std::move(r), Integer(1));
}

bool RingMap::kills(const Word& w) const
{
    auto e = image(w);
    return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

RingMap RingMap::from_cyclic(const CyclicMap& f)
{
    RingMap m;
    if (f.modulus == 0)
        m.target = AbGroupSpec{1, {}};
    else
        m.target = AbGroupSpec{0, {f.modulus}};
    for (auto v : f.on_generators)
        m.images.push_back({v});
    return m;
}

RingMap RingMap::free_abelian(std::vector<Exponents> images)
{
    RingMap m;
    m.target = AbGroupSpec{images.empty() ? 0 : images[0].size(), {}};
    m.images = std::move(images);
    return m;
}

ZPoly fox_derivative(const Word& w, std::size_t gen, const RingMap& phi)
{
    const std::size_t n = phi.nvars();
    ZPoly d(IntegerRing{}, n);
    Exponents prefix(n, 0);
    for (const auto& l : w.letters()) {
        const auto& im = phi.images.at(l.gen);
        if (l.gen == gen) {
            // g^e: prefix (1 + g + ... + g^{e-1}) or -prefix (g^-1 + ... + g^e)
            Exponents cur = prefix;
            if (l.exp > 0) {
                for (std::int64_t i = 0; i < l.exp; ++i) {
                    Exponents r = cur;
                    phi.target.reduce(r);
                    d.add_term(std::move(r), Integer(1));
                    for (std::size_t k = 0; k < n; ++k)
                        cur[k] += im[k];
                }
            } else {
                for (std::int64_t i = 0; i < -l.exp; ++i) {
                    for (std::size_t k = 0; k < n; ++k)
                        cur[k] -= im[k];
                    Exponents r = cur;
                    phi.target.reduce(r);
                    d.add_term(std::move(r), Integer(-1));
                }
            }
        }
        for (std::size_t k = 0; k < n; ++k)
            prefix[k] += l.exp * im[k];
        phi.target.reduce(prefix);
    }
    return d;
}

Matrix<ZPoly> fox_matrix(const std::vector<Word>& words, std::size_t ngens, const RingMap& phi)
{
    if (phi.images.size() != ngens)
        throw std::invalid_argument("fox_matrix: one image per generator required");
    Matrix<ZPoly> J(words.size(), ngens, ZPoly(IntegerRing{}, phi.nvars()));
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < ngens; ++j)
            J(i, j) = fox_derivative(words[i], j, phi);
    return J;
}

ModulePresentation jacobian(const GroupPresentation& P, const RingMap& phi)
{
    for (std::size_t i = 0; i < P.relator_count(); ++i)
        if (!phi.kills(P.relators()[i]))
            throw RelatorNotKilled(i);
    return {phi.target, fox_matrix(P.relators(), P.generator_count(), phi)};
}

bool fundamental_identity_check(const Word& w, const RingMap& phi)
{
    const std::size_t n = phi.nvars();
    ZPoly lhs(IntegerRing{}, n);
    ZPoly one = ZPoly::one(IntegerRing{}, n);
    std::size_t ngens = phi.images.size();
    for (std::size_t j = 0; j < ngens; ++j)
        lhs += reduce_torsion(fox_derivative(w, j, phi) * (phi.group_element(phi.images[j]) - one), phi.target);
    return lhs == phi.group_element(phi.image(w)) - one;
}

Matrix<ZPoly> substitute_matrix(const Matrix<ZPoly>& M, const std::vector<Exponents>& images, std::size_t nvars)
{
    return M.map(ZPoly(IntegerRing{}, nvars), [&](const ZPoly& p) { return p.substitute_monomial(images, nvars); });
}

} // namespace embedcheck
