#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace embedcheck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z/p for a word-sized prime p. Carries its modulus so that
/// generic code can use plain operators.
struct FpElem {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    friend FpElem operator+(FpElem a, FpElem b)
    {
        std::uint64_t s = a.v + b.v;
        if (s >= a.p)
            s -= a.p;
        return {s, a.p};
    }
    friend FpElem operator-(FpElem a, FpElem b)
    {
        return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
    }
    friend FpElem operator-(FpElem a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
    friend FpElem operator*(FpElem a, FpElem b)
    {
        auto prod = static_cast<unsigned __int128>(a.v) * b.v;
        return {static_cast<std::uint64_t>(prod % a.p), a.p};
    }
    FpElem& operator+=(FpElem b) { return *this = *this + b; }
    FpElem& operator-=(FpElem b) { return *this = *this - b; }
    FpElem& operator*=(FpElem b) { return *this = *this * b; }
    friend bool operator==(FpElem a, FpElem b) { return a.v == b.v; }
};

/// The integers. Coefficient policy for LaurentPoly and friends.
struct IntegerRing {
    using Elem = Integer;
    static constexpr bool is_field = false;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const Integer& v) const { return v; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_unit(const Elem& a) const { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool is_negative(const Elem& a) const { return sgn(a) < 0; }

    std::optional<Elem> exact_quotient(const Elem& a, const Elem& b) const
    {
        if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            return std::nullopt;
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const = default;
};

struct RationalField {
    using Elem = Rational;
    static constexpr bool is_field = true;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_integer(const Integer& v) const { return Elem(v); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_unit(const Elem& a) const { return sgn(a) != 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool is_negative(const Elem& a) const { return sgn(a) < 0; }

    Elem inverse(const Elem& a) const
    {
        if (sgn(a) == 0)
            throw std::domain_error("inverse of zero");
        return Elem(1) / a;
    }
    std::optional<Elem> exact_quotient(const Elem& a, const Elem& b) const
    {
        if (sgn(b) == 0)
            return std::nullopt;
        return Elem(a / b);
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const = default;
};

/// Z/p for a prime p < 2^61.
struct PrimeField {
    using Elem = FpElem;
    static constexpr bool is_field = true;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime)
    {
        if (prime < 2 || prime >= (std::uint64_t{1} << 61))
            throw std::invalid_argument("prime field modulus out of range");
    }

    Elem zero() const { return {0, p}; }
    Elem one() const { return {1 % p, p}; }
    Elem from_integer(const Integer& v) const
    {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return {r.get_ui(), p};
    }
    Elem from_int(std::int64_t v) const
    {
        auto m = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
        if (m < 0)
            m += static_cast<std::int64_t>(p);
        return {static_cast<std::uint64_t>(m), p};
    }
    bool is_zero(const Elem& a) const { return a.v == 0; }
    bool is_unit(const Elem& a) const { return a.v != 0; }
    bool is_one(const Elem& a) const { return a.v == 1; }
    bool is_negative(const Elem&) const { return false; }

    Elem inverse(const Elem& a) const
    {
        if (a.v == 0)
            throw std::domain_error("inverse of zero");
        // Fermat: a^(p-2)
        Elem base = a, acc = one();
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1)
                acc *= base;
            base *= base;
        }
        return acc;
    }
    std::optional<Elem> exact_quotient(const Elem& a, const Elem& b) const
    {
        if (b.v == 0)
            return std::nullopt;
        return a * inverse(b);
    }
    std::string to_string(const Elem& a) const { return std::to_string(a.v); }
    std::string name() const { return "F" + std::to_string(p); }
    bool operator==(const PrimeField&) const = default;
};

bool is_prime(std::uint64_t n);

} // namespace embedcheck
