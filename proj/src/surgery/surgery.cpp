#include "embedcheck/surgery/surgery.hpp"

#include "embedcheck/linalg/module.hpp"

namespace embedcheck {

namespace {

std::vector<Integer> canonical_coordinates(const AbelianStructure& A, const Word& w, std::size_t ngens)
{
    auto s = w.exponent_sums(ngens);
    std::vector<Integer> c(A.coordinate_count(), Integer(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t j = 0; j < ngens; ++j)
            c[k] += A.generator_images(j, k) * static_cast<long>(s[j]);
        if (k >= A.free_rank) {
            const Integer& d = A.torsion[k - A.free_rank];
            mpz_fdiv_r(c[k].get_mpz_t(), c[k].get_mpz_t(), d.get_mpz_t());
        }
    }
    return c;
}

bool is_unimodular(const IntMatrix& M)
{
    if (M.rows() != M.cols())
        return false;
    if (M.rows() == 0)
        return true;
    auto f = smith_normal_form_Z(M);
    if (f.rank != M.rows())
        return false;
    for (const auto& d : f.diagonal)
        if (d != 1)
            return false;
    return true;
}

// meridian coordinate matrix: row i = canonical coordinates of meridian i
IntMatrix meridian_matrix(const SurgeryDescription& S, const AbelianStructure& A)
{
    IntMatrix M(S.components(), A.coordinate_count(), Integer(0));
    for (std::size_t i = 0; i < S.components(); ++i) {
        auto c = canonical_coordinates(A, S.meridians[i], S.group.generator_count());
        for (std::size_t k = 0; k < c.size(); ++k)
            M(i, k) = c[k];
    }
    return M;
}

Word word_from_exponents(const IntMatrix& E, std::size_t row)
{
    Word w;
    for (std::size_t j = 0; j < E.cols(); ++j)
        w *= Word::generator(j, E(row, j).get_si());
    return w;
}

} // namespace

std::string to_string(EntryKind k) { return k == EntryKind::link ? "link" : "direct"; }

std::string to_string(KnownStatus k)
{
    switch (k) {
    case KnownStatus::embeds_abelian:
        return "abelian";
    case KnownStatus::no_abelian_embedding:
        return "none";
    default:
        return "unknown";
    }
}

std::vector<std::string> validate_entry(const SurgeryDescription& S)
{
    std::vector<std::string> bad;
    if (S.name.empty())
        bad.push_back("missing name");
    if (S.kind == EntryKind::direct) {
        if (!S.meridians.empty() || !S.longitudes.empty() || !S.framings.empty())
            bad.push_back("direct entry with meridian, longitude or framing data");
        if (!S.basis.empty()) {
            auto A = abelianize(S.group);
            if (S.basis.size() != A.free_rank) {
                bad.push_back("basis has " + std::to_string(S.basis.size()) + " words but H_1 has free rank " +
                              std::to_string(A.free_rank));
            } else {
                IntMatrix B(A.free_rank, A.free_rank, Integer(0));
                for (std::size_t i = 0; i < S.basis.size(); ++i) {
                    auto c = canonical_coordinates(A, S.basis[i], S.group.generator_count());
                    for (std::size_t k = 0; k < A.free_rank; ++k)
                        B(i, k) = c[k];
                }
                if (!is_unimodular(B))
                    bad.push_back("basis words do not form a basis of the free part of H_1");
            }
        }
        return bad;
    }

    const std::size_t c = S.meridians.size();
    if (S.longitudes.size() != c || S.framings.size() != c) {
        bad.push_back("count mismatch: " + std::to_string(c) + " meridians, " + std::to_string(S.longitudes.size()) +
                      " longitudes, " + std::to_string(S.framings.size()) + " framings");
        return bad;
    }
    if (!S.basis.empty())
        bad.push_back("link entry with basis words");
    auto A = abelianize(S.group);
    if (A.free_rank != c || !A.torsion.empty()) {
        bad.push_back("link group H_1 is " + A.to_string() + ", expected Z^" + std::to_string(c));
        return bad;
    }
    if (!is_unimodular(meridian_matrix(S, A))) {
        bad.push_back("meridians do not form a basis of H_1 of the link complement");
        return bad;
    }
    IntMatrix L(c, c, Integer(0));
    for (std::size_t i = 0; i < c; ++i) {
        auto row = meridian_coordinates(S, S.longitudes[i]);
        for (std::size_t j = 0; j < c; ++j)
            L(i, j) = row[j];
        if (row[i] != 0)
            bad.push_back("longitude " + std::to_string(i + 1) + " has exponent sum " + row[i].get_str() +
                          " over its own meridian, expected 0");
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            if (L(i, j) != L(j, i))
                bad.push_back("linking numbers of components " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " disagree (" + L(i, j).get_str() + " vs " +
                              L(j, i).get_str() + ")");
    return bad;
}

GroupPresentation surgered_group(const SurgeryDescription& S)
{
    if (S.kind == EntryKind::direct)
        return S.group;
    if (S.longitudes.size() != S.meridians.size() || S.framings.size() != S.meridians.size())
        throw SurgeryError("count mismatch in surgery description '" + S.name + "'");
    std::vector<Word> extra;
    for (std::size_t i = 0; i < S.meridians.size(); ++i)
        extra.push_back(S.meridians[i].power(S.framings[i]) * S.longitudes[i]);
    return S.group.with_relators(extra);
}

std::vector<Integer> meridian_coordinates(const SurgeryDescription& S, const Word& w)
{
    auto A = abelianize(S.group);
    const std::size_t c = S.components();
    if (A.free_rank != c || !A.torsion.empty())
        throw SurgeryError("link group of '" + S.name + "' does not have H_1 = Z^" + std::to_string(c));
    IntMatrix M = meridian_matrix(S, A);
    // x = y M  =>  y = x M^-1, with M^-1 = V U from U M V = I
    auto f = smith_normal_form_Z(M);
    for (std::size_t i = 0; i < c; ++i)
        if (f.diagonal.size() <= i || f.diagonal[i] != 1)
            throw SurgeryError("meridians of '" + S.name + "' are not a basis of H_1");
    IntMatrix Minv = f.V * f.U;
    auto x = canonical_coordinates(A, w, S.group.generator_count());
    std::vector<Integer> y(c, Integer(0));
    for (std::size_t j = 0; j < c; ++j)
        for (std::size_t k = 0; k < c; ++k)
            y[j] += x[k] * Minv(k, j);
    return y;
}

IntMatrix linking_matrix(const SurgeryDescription& S)
{
    if (S.kind != EntryKind::link)
        throw SurgeryError("'" + S.name + "' is a direct entry and has no linking matrix");
    const std::size_t c = S.components();
    IntMatrix L(c, c, Integer(0));
    for (std::size_t i = 0; i < c; ++i) {
        auto row = meridian_coordinates(S, S.longitudes[i]);
        for (std::size_t j = 0; j < c; ++j)
            if (j != i)
                L(i, j) = row[j];
        L(i, i) = Integer(static_cast<long>(S.framings[i]));
    }
    return L;
}

AbelianStructure h1_of_surgery(const SurgeryDescription& S)
{
    auto A = abelianize(surgered_group(S));
    if (S.kind == EntryKind::link) {
        auto C = cokernel_Z(linking_matrix(S));
        if (C.free_rank != A.free_rank || C.factors != A.torsion)
            throw SurgeryError("H_1 of '" + S.name + "' is " + A.to_string() +
                               " but the linking matrix gives a different group");
    }
    return A;
}

std::vector<std::vector<std::int64_t>> coordinates_in_basis(const GroupPresentation& P, const std::vector<Word>& basis)
{
    auto A = abelianize(P);
    const std::size_t b = A.free_rank;
    if (basis.size() != b)
        throw SurgeryError("expected " + std::to_string(b) + " basis words, got " + std::to_string(basis.size()));
    IntMatrix B(b, b, Integer(0));
    for (std::size_t i = 0; i < b; ++i) {
        auto c = canonical_coordinates(A, basis[i], P.generator_count());
        for (std::size_t k = 0; k < b; ++k)
            B(i, k) = c[k];
    }
    if (!is_unimodular(B))
        throw SurgeryError("basis words do not form a basis of the free part of H_1");
    IntMatrix Binv = b == 0 ? B : [&] {
        auto f = smith_normal_form_Z(B);
        return IntMatrix(f.V * f.U);
    }();
    std::vector<std::vector<std::int64_t>> out(P.generator_count(), std::vector<std::int64_t>(b, 0));
    for (std::size_t j = 0; j < P.generator_count(); ++j)
        for (std::size_t k = 0; k < b; ++k) {
            Integer v = 0;
            for (std::size_t m = 0; m < b; ++m)
                v += A.generator_images(j, m) * Binv(m, k);
            out[j][k] = v.get_si();
        }
    return out;
}

std::vector<Word> designated_basis(const SurgeryDescription& S)
{
    if (S.kind == EntryKind::direct && !S.basis.empty())
        return S.basis;
    auto A = abelianize(surgered_group(S));
    if (S.kind == EntryKind::link && A.free_rank == S.components() && A.torsion.empty())
        return S.meridians;
    std::vector<Word> out;
    for (std::size_t k = 0; k < A.free_rank; ++k)
        out.push_back(word_from_exponents(A.basis_words, k));
    return out;
}

} // namespace embedcheck
