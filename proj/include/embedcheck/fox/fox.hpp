#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedcheck/group/epimorphism.hpp"
#include "embedcheck/group/presentation.hpp"
#include "embedcheck/linalg/matrix.hpp"
#include "embedcheck/rings/group_ring.hpp"

namespace embedcheck {

/// Homomorphism from a free group to an abelian group A, given by the image
/// (an element of A as an exponent vector) of each generator. Induces the
/// coefficient map Z[F] -> Z[A].
struct RingMap {
    AbGroupSpec target;
    std::vector<Exponents> images;

    std::size_t nvars() const { return target.nvars(); }
    Exponents image(const Word& w) const;
    ZPoly group_element(const Exponents& e) const;
    bool kills(const Word& w) const;

    /// a_j -> t^{f(a_j)} (f into Z) or a^{f(a_j)} in Z/l.
    static RingMap from_cyclic(const CyclicMap& f);
    /// images given as integer vectors in Z^k (no torsion)
    static RingMap free_abelian(std::vector<Exponents> images);
};

/// Relator i is not sent to the identity by the coefficient map.
class RelatorNotKilled : public std::runtime_error {
public:
    explicit RelatorNotKilled(std::size_t index)
        : std::runtime_error("coefficient map does not kill relator " + std::to_string(index + 1)), index_(index)
    {
    }
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Finitely presented module over Z[A]: coker of `relations`
/// (rows = relations, columns = generators).
struct ModulePresentation {
    AbGroupSpec ring;
    Matrix<ZPoly> relations;
    std::size_t generator_count() const { return relations.cols(); }
};

/// Image of the Fox derivative d w / d g_gen in Z[A].
ZPoly fox_derivative(const Word& w, std::size_t gen, const RingMap& phi);

/// Fox Jacobian (row i = relator i). Throws RelatorNotKilled when phi does
/// not factor through the group.
ModulePresentation jacobian(const GroupPresentation& P, const RingMap& phi);
/// Same without the relator check (used for covers of free groups etc.).
Matrix<ZPoly> fox_matrix(const std::vector<Word>& words, std::size_t ngens, const RingMap& phi);

/// sum_j (d w / d g_j)(phi(g_j) - 1) == phi(w) - 1
bool fundamental_identity_check(const Word& w, const RingMap& phi);

/// Apply a monomial substitution to every entry.
Matrix<ZPoly> substitute_matrix(const Matrix<ZPoly>& M, const std::vector<Exponents>& images, std::size_t nvars);

} // namespace embedcheck
