#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedcheck/rings/coefficients.hpp"

namespace embedcheck {

using Exponents = std::vector<std::int64_t>;

/// Variable names used when a caller supplies none: t for one variable,
/// x,y,z for two or three, x1..xn otherwise.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Sparse multivariate Laurent polynomial with coefficients in `Ring`.
///
/// Terms are kept in a map keyed by exponent vector, so iteration is in
/// ascending lexicographic order and no zero coefficient is ever stored.
/// The canonical text form lists terms by descending total degree, ties in
/// descending lexicographic order.
template <class Ring>
class LaurentPoly {
public:
    using Coeff = typename Ring::Elem;
    using TermMap = std::map<Exponents, Coeff>;

    LaurentPoly() = default;
    LaurentPoly(Ring ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

    static LaurentPoly constant(Ring ring, std::size_t nvars, const Coeff& c)
    {
        LaurentPoly p(ring, nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static LaurentPoly one(Ring ring, std::size_t nvars) { return constant(ring, nvars, ring.one()); }
    static LaurentPoly monomial(Ring ring, Exponents exps, const Coeff& c)
    {
        LaurentPoly p(ring, exps.size());
        p.add_term(std::move(exps), c);
        return p;
    }
    static LaurentPoly variable(Ring ring, std::size_t nvars, std::size_t i, std::int64_t power = 1)
    {
        Exponents e(nvars, 0);
        e.at(i) = power;
        return monomial(ring, std::move(e), ring.one());
    }

    const Ring& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() ||
               (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                  [](std::int64_t e) { return e == 0; }));
    }
    /// Units of a Laurent ring over a domain are (unit coefficient) * monomial.
    bool is_unit() const { return terms_.size() == 1 && ring_.is_unit(terms_.begin()->second); }

    Coeff constant_term() const
    {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? ring_.zero() : it->second;
    }
    Coeff coefficient(const Exponents& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? ring_.zero() : it->second;
    }
    /// Lexicographically largest term.
    std::pair<Exponents, Coeff> leading_term() const
    {
        if (terms_.empty())
            throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    void add_term(Exponents e, const Coeff& c)
    {
        if (e.size() != nvars_)
            throw std::invalid_argument("exponent vector length mismatch");
        if (ring_.is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (ring_.is_zero(it->second))
                terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, Coeff(-c));
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(LaurentPoly a)
    {
        for (auto& [e, c] : a.terms_)
            c = -c;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        a.check_compatible(b);
        LaurentPoly r(a.ring_, a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                Coeff c = ca * cb;
                r.add_term(e, c);
            }
        }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    LaurentPoly scaled(const Coeff& c) const
    {
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e, v] : terms_)
            r.add_term(e, Coeff(v * c));
        return r;
    }
    /// Multiply by the monomial with exponent vector `shift`.
    LaurentPoly shifted(const Exponents& shift) const
    {
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e, v] : terms_) {
            Exponents ne = e;
            for (std::size_t i = 0; i < nvars_; ++i)
                ne[i] += shift.at(i);
            r.terms_.emplace(std::move(ne), v);
        }
        return r;
    }

    /// Componentwise minimum / maximum exponent over the support.
    Exponents min_exponents() const { return extreme(false); }
    Exponents max_exponents() const { return extreme(true); }

    /// Ring homomorphism sending variable i to the monomial images[i]
    /// (an exponent vector in `target_nvars` variables).
    LaurentPoly substitute_monomial(std::span<const Exponents> images, std::size_t target_nvars) const
    {
        if (images.size() != nvars_)
            throw std::invalid_argument("substitute_monomial: expected one image per variable");
        for (const auto& img : images)
            if (img.size() != target_nvars)
                throw std::invalid_argument("substitute_monomial: image dimension mismatch");
        LaurentPoly r(ring_, target_nvars);
        for (const auto& [e, c] : terms_) {
            Exponents ne(target_nvars, 0);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (std::size_t j = 0; j < target_nvars; ++j)
                    ne[j] += e[i] * images[i][j];
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    /// Set variable i to 1 (the variable stays in the ring with exponent 0).
    LaurentPoly at_one(std::size_t i) const
    {
        LaurentPoly r(ring_, nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            ne.at(i) = 0;
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    /// Drop the variables not listed in `keep`; they must not occur.
    LaurentPoly restrict_variables(std::span<const std::size_t> keep) const
    {
        LaurentPoly r(ring_, keep.size());
        for (const auto& [e, c] : terms_) {
            Exponents ne(keep.size());
            for (std::size_t j = 0; j < keep.size(); ++j)
                ne[j] = e.at(keep[j]);
            std::int64_t dropped = 0;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (std::find(keep.begin(), keep.end(), i) == keep.end())
                    dropped |= e[i];
            if (dropped != 0)
                throw std::invalid_argument("restrict_variables: dropped variable occurs");
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    /// Evaluate at a point of the coefficient field (or at units of Z).
    Coeff evaluate(std::span<const Coeff> point) const
    {
        if (point.size() != nvars_)
            throw std::invalid_argument("evaluate: point dimension mismatch");
        Coeff sum = ring_.zero();
        for (const auto& [e, c] : terms_) {
            Coeff t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                t = t * power(point[i], e[i]);
            sum += t;
        }
        return sum;
    }

    /// Quotient q with q * d == *this, or nullopt when d does not divide.
    ///
    /// Division by lexicographic leading terms; lex order is compatible with
    /// the group structure of Z^n, so an exact quotient is found term by term
    /// and its support is confined to the box [min - min_d, max - max_d].
    std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const
    {
        check_compatible(d);
        if (d.is_zero())
            return std::nullopt;
        LaurentPoly q(ring_, nvars_);
        if (is_zero())
            return q;
        const Exponents lo = vec_sub(min_exponents(), d.min_exponents());
        const Exponents hi = vec_sub(max_exponents(), d.max_exponents());
        const auto [dlead_e, dlead_c] = d.leading_term();
        LaurentPoly rem = *this;
        while (!rem.is_zero()) {
            const auto [re, rc] = rem.leading_term();
            Exponents qe = vec_sub(re, dlead_e);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (qe[i] < lo[i] || qe[i] > hi[i])
                    return std::nullopt;
            auto qc = ring_.exact_quotient(rc, dlead_c);
            if (!qc)
                return std::nullopt;
            LaurentPoly qt = monomial(ring_, qe, *qc);
            q.add_term(qe, *qc);
            rem -= qt * d;
        }
        return q;
    }

    template <class Target, class Map>
    LaurentPoly<Target> map_coefficients(Target target, Map&& f) const
    {
        LaurentPoly<Target> r(target, nvars_);
        for (const auto& [e, c] : terms_)
            r.add_term(e, f(c));
        return r;
    }

    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const
    {
        auto names = default_variable_names(nvars_);
        return to_string(names);
    }

private:
    void check_compatible(const LaurentPoly& o) const
    {
        if (o.nvars_ != nvars_)
            throw std::invalid_argument("LaurentPoly: variable count mismatch");
    }
    Exponents extreme(bool take_max) const
    {
        if (terms_.empty())
            return Exponents(nvars_, 0);
        Exponents r = terms_.begin()->first;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < nvars_; ++i)
                r[i] = take_max ? std::max(r[i], e[i]) : std::min(r[i], e[i]);
        return r;
    }
    static Exponents vec_sub(const Exponents& a, const Exponents& b)
    {
        Exponents r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            r[i] = a[i] - b[i];
        return r;
    }
    Coeff power(const Coeff& base, std::int64_t e) const
    {
        Coeff b = base;
        if (e < 0) {
            if constexpr (Ring::is_field) {
                b = ring_.inverse(base);
            } else {
                if (!ring_.is_unit(base))
                    throw std::domain_error("evaluate: negative power of a non-unit");
                b = base; // +-1 is its own inverse
            }
            e = -e;
        }
        Coeff acc = ring_.one();
        for (; e; e >>= 1) {
            if (e & 1)
                acc = acc * b;
            b = b * b;
        }
        return acc;
    }

    Ring ring_{};
    std::size_t nvars_ = 0;
    TermMap terms_;
};

using ZPoly = LaurentPoly<IntegerRing>;
using QPoly = LaurentPoly<RationalField>;
using FpPoly = LaurentPoly<PrimeField>;

ZPoly parse_laurent_z(std::string_view text, std::span<const std::string> names);
QPoly parse_laurent_q(std::string_view text, std::span<const std::string> names);

/// Coefficient changes used throughout: Z -> Q and Z -> F_p.
QPoly to_rational(const ZPoly& p);
FpPoly to_prime_field(const ZPoly& p, const PrimeField& field);

template <class Ring>
std::string LaurentPoly<Ring>::to_string(std::span<const std::string> names) const
{
    if (names.size() < nvars_)
        throw std::invalid_argument("to_string: not enough variable names");
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    // Total degree descending, then lexicographic descending.
    std::vector<const typename TermMap::value_type*> order;
    for (const auto& kv : terms_)
        order.push_back(&kv);
    auto degree = [](const Exponents& e) {
        std::int64_t d = 0;
        for (auto v : e)
            d += v;
        return d;
    };
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        auto da = degree(a->first), db = degree(b->first);
        return da != db ? da > db : a->first > b->first;
    });
    for (const auto* term : order) {
        const auto& [e, c] = *term;
        bool neg = ring_.is_negative(c);
        Coeff mag = neg ? Coeff(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += ring_.to_string(mag);
        else if (ring_.is_one(mag))
            out += mono;
        else
            out += ring_.to_string(mag) + "*" + mono;
    }
    return out;
}

} // namespace embedcheck
