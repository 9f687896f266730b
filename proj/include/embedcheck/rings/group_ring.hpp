#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

/// Z^r + Z/k_1 + ... + Z/k_s, described by its free rank and torsion orders.
/// Group elements are exponent vectors of length r+s with the torsion part in [0, k_i).
struct AbGroupSpec {
    std::size_t free_rank = 0;
    std::vector<std::int64_t> torsion;

    std::size_t nvars() const { return free_rank + torsion.size(); }
    void reduce(Exponents& e) const
    {
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            auto& v = e.at(free_rank + i);
            v %= torsion[i];
            if (v < 0)
                v += torsion[i];
        }
    }
    bool operator==(const AbGroupSpec&) const = default;
};

template <class Ring>
LaurentPoly<Ring> reduce_torsion(const LaurentPoly<Ring>& p, const AbGroupSpec& g)
{
    if (g.torsion.empty())
        return p;
    LaurentPoly<Ring> r(p.ring(), p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        g.reduce(ne);
        r.add_term(std::move(ne), c);
    }
    return r;
}

/// Element of the group ring Ring[G] for a finitely generated abelian G.
template <class Ring>
class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(std::shared_ptr<const AbGroupSpec> g, LaurentPoly<Ring> p)
        : group_(std::move(g)), p_(reduce_torsion(p, *group_))
    {
        if (p_.nvars() != group_->nvars())
            throw std::invalid_argument("GroupRingElem: variable count mismatch");
    }

    const LaurentPoly<Ring>& poly() const { return p_; }
    const AbGroupSpec& group() const { return *group_; }
    bool is_zero() const { return p_.is_zero(); }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b)
    {
        return {a.group_, a.p_ + b.p_};
    }
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b)
    {
        return {a.group_, a.p_ - b.p_};
    }
    friend GroupRingElem operator-(const GroupRingElem& a) { return {a.group_, -a.p_}; }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b)
    {
        return {a.group_, a.p_ * b.p_};
    }
    GroupRingElem& operator+=(const GroupRingElem& o) { return *this = *this + o; }
    GroupRingElem& operator-=(const GroupRingElem& o) { return *this = *this - o; }
    GroupRingElem& operator*=(const GroupRingElem& o) { return *this = *this * o; }
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) { return a.p_ == b.p_; }

    GroupRingElem scaled(const typename Ring::Elem& c) const { return {group_, p_.scaled(c)}; }

    std::string to_string(std::span<const std::string> names) const { return p_.to_string(names); }

private:
    std::shared_ptr<const AbGroupSpec> group_;
    LaurentPoly<Ring> p_;
};

/// Z[G_k], G_k = Z + Z/k, with t the free generator and a the torsion one.
class GkRing {
public:
    using Elem = GroupRingElem<IntegerRing>;

    explicit GkRing(std::int64_t k);

    std::int64_t k() const { return k_; }
    Elem zero() const;
    Elem one() const;
    Elem integer(std::int64_t c) const;
    Elem t(std::int64_t power = 1) const;
    Elem a(std::int64_t power = 1) const;
    /// nu_n = 1 + a + ... + a^(n-1)
    Elem nu(std::int64_t n) const;
    /// rho = nu_k, the norm element of Z/k
    Elem rho() const { return nu(k_); }
    /// Augmentation Z[G_k] -> Z.
    Integer augmentation(const Elem& x) const;
    std::string to_string(const Elem& x) const;

private:
    std::int64_t k_;
    std::shared_ptr<const AbGroupSpec> group_;
};

} // namespace embedcheck
