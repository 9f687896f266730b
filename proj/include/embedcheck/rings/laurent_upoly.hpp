#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

/// Dense univariate Laurent polynomial over a field: sum c[i] t^(low+i).
/// Kept trimmed (nonzero first and last coefficient), zero has no coefficients.
template <class Field>
class LaurentUPoly {
public:
    using Coeff = typename Field::Elem;

    LaurentUPoly() = default;
    explicit LaurentUPoly(Field f) : field_(f) {}
    LaurentUPoly(Field f, std::int64_t low, std::vector<Coeff> coeffs)
        : field_(f), low_(low), c_(std::move(coeffs))
    {
        trim();
    }

    static LaurentUPoly constant(Field f, const Coeff& c) { return LaurentUPoly(f, 0, {c}); }
    static LaurentUPoly monomial(Field f, std::int64_t e, const Coeff& c) { return LaurentUPoly(f, e, {c}); }
    /// t^e - 1
    static LaurentUPoly t_power_minus_one(Field f, std::int64_t e)
    {
        LaurentUPoly r = monomial(f, e, f.one());
        r -= constant(f, f.one());
        return r;
    }

    static LaurentUPoly from_sparse(const LaurentPoly<Field>& p)
    {
        if (p.nvars() != 1)
            throw std::invalid_argument("LaurentUPoly: expected a univariate polynomial");
        LaurentUPoly r(p.ring());
        if (p.is_zero())
            return r;
        std::int64_t lo = p.min_exponents()[0], hi = p.max_exponents()[0];
        std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), p.ring().zero());
        for (const auto& [e, v] : p.terms())
            c[static_cast<std::size_t>(e[0] - lo)] = v;
        return LaurentUPoly(p.ring(), lo, std::move(c));
    }
    LaurentPoly<Field> to_sparse() const
    {
        LaurentPoly<Field> p(field_, 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            p.add_term({low_ + static_cast<std::int64_t>(i)}, c_[i]);
        return p;
    }

    const Field& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    std::int64_t low() const { return low_; }
    std::int64_t high() const { return low_ + static_cast<std::int64_t>(c_.size()) - 1; }
    /// high - low; the Euclidean norm of the Laurent ring.
    std::int64_t span() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_unit() const { return c_.size() == 1; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    Coeff coeff(std::int64_t e) const
    {
        if (c_.empty() || e < low_ || e > high())
            return field_.zero();
        return c_[static_cast<std::size_t>(e - low_)];
    }
    Coeff leading() const { return c_.back(); }

    LaurentUPoly& operator+=(const LaurentUPoly& o) { return add(o, false); }
    LaurentUPoly& operator-=(const LaurentUPoly& o) { return add(o, true); }
    friend LaurentUPoly operator+(LaurentUPoly a, const LaurentUPoly& b) { return a += b; }
    friend LaurentUPoly operator-(LaurentUPoly a, const LaurentUPoly& b) { return a -= b; }
    friend LaurentUPoly operator-(LaurentUPoly a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend LaurentUPoly operator*(const LaurentUPoly& a, const LaurentUPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return LaurentUPoly(a.field_);
        std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.field_.is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentUPoly(a.field_, a.low_ + b.low_, std::move(c));
    }
    LaurentUPoly& operator*=(const LaurentUPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentUPoly& a, const LaurentUPoly& b)
    {
        return a.c_.size() == b.c_.size() && (a.c_.empty() || a.low_ == b.low_) && a.c_ == b.c_;
    }

    LaurentUPoly scaled(const Coeff& s) const
    {
        std::vector<Coeff> c = c_;
        for (auto& v : c)
            v = v * s;
        return LaurentUPoly(field_, low_, std::move(c));
    }
    LaurentUPoly shifted(std::int64_t e) const
    {
        LaurentUPoly r = *this;
        r.low_ += e;
        return r;
    }

    /// Euclidean division: *this = q*d + r with r = 0 or span(r) < span(d).
    std::pair<LaurentUPoly, LaurentUPoly> divmod(const LaurentUPoly& d) const
    {
        if (d.is_zero())
            throw std::domain_error("LaurentUPoly: division by zero");
        // Work with ordinary polynomials: a = t^la * A, d = t^ld * D, D(0) != 0.
        if (is_zero())
            return {LaurentUPoly(field_), LaurentUPoly(field_)};
        std::vector<Coeff> rem = c_;
        const std::size_t dn = d.c_.size();
        const Coeff inv_lead = field_.inverse(d.c_.back());
        if (rem.size() < dn)
            return {LaurentUPoly(field_), *this};
        std::vector<Coeff> q(rem.size() - dn + 1, field_.zero());
        for (std::size_t i = rem.size(); i-- >= dn;) {
            Coeff f = rem[i] * inv_lead;
            if (field_.is_zero(f))
                continue;
            q[i - dn + 1] = f;
            for (std::size_t j = 0; j < dn; ++j)
                rem[i - dn + 1 + j] -= f * d.c_[j];
        }
        rem.resize(dn - 1);
        return {LaurentUPoly(field_, low_ - d.low_, std::move(q)), LaurentUPoly(field_, low_, std::move(rem))};
    }

    /// Unit u with u * (*this) monic with lowest term t^0; u = 1 for zero.
    LaurentUPoly normalizing_unit() const
    {
        if (is_zero())
            return constant(field_, field_.one());
        return monomial(field_, -low_, field_.inverse(c_.back()));
    }
    LaurentUPoly normalized() const { return normalizing_unit() * *this; }
    /// Inverse of a unit c t^e.
    LaurentUPoly unit_inverse() const
    {
        if (!is_unit())
            throw std::domain_error("LaurentUPoly: not a unit");
        return monomial(field_, -low_, field_.inverse(c_[0]));
    }

    std::string to_string(const std::string& var = "t") const
    {
        std::vector<std::string> names{var};
        return to_sparse().to_string(names);
    }

private:
    LaurentUPoly& add(const LaurentUPoly& o, bool negate)
    {
        if (o.is_zero())
            return *this;
        if (is_zero()) {
            field_ = o.field_;
            low_ = o.low_;
            c_.assign(o.c_.size(), field_.zero());
        }
        std::int64_t lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
        std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            c[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            auto& slot = c[static_cast<std::size_t>(o.low_ - lo) + i];
            if (negate)
                slot -= o.c_[i];
            else
                slot += o.c_[i];
        }
        low_ = lo;
        c_ = std::move(c);
        trim();
        return *this;
    }
    void trim()
    {
        while (!c_.empty() && field_.is_zero(c_.back()))
            c_.pop_back();
        std::size_t k = 0;
        while (k < c_.size() && field_.is_zero(c_[k]))
            ++k;
        if (k) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
            low_ += static_cast<std::int64_t>(k);
        }
        if (c_.empty())
            low_ = 0;
    }

    Field field_{};
    std::int64_t low_ = 0;
    std::vector<Coeff> c_;
};

using QUPoly = LaurentUPoly<RationalField>;
using FpUPoly = LaurentUPoly<PrimeField>;

} // namespace embedcheck
