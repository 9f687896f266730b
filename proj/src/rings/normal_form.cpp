#include "embedcheck/rings/normal_form.hpp"

#include <stdexcept>

namespace embedcheck {

namespace {

ZPoly reduce_coefficients(const ZPoly& p, const Integer& c)
{
    if (c == 0)
        return p;
    ZPoly r(IntegerRing{}, p.nvars());
    for (const auto& [e, v] : p.terms()) {
        Integer m;
        mpz_fdiv_r(m.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
        r.add_term(e, m);
    }
    return r;
}

// Division by a monic polynomial in variable xv with constant term nonzero;
// p must have nonnegative xv-exponents.
ZPoly remainder(ZPoly p, const ZPoly& m, std::size_t xv, std::int64_t d, const Integer& c)
{
    for (;;) {
        p = reduce_coefficients(p, c);
        const Exponents* top = nullptr;
        for (const auto& [e, v] : p.terms())
            if (e[xv] >= d && (!top || e[xv] > (*top)[xv]))
                top = &e;
        if (!top)
            return p;
        Exponents shift = *top;
        shift[xv] -= d;
        Integer coeff = p.coefficient(*top);
        p -= m.shifted(shift).scaled(coeff);
    }
}

} // namespace

ZPoly normal_form_mod(const ZPoly& p, const ZPoly& m_in, const Integer& c, std::size_t xv)
{
    if (c < 0)
        throw std::invalid_argument("normal_form_mod: negative modulus");
    if (m_in.nvars() != p.nvars() || xv >= p.nvars())
        throw std::invalid_argument("normal_form_mod: variable mismatch");
    if (m_in.is_zero())
        throw std::invalid_argument("normal_form_mod: zero divisor");
    for (const auto& [e, v] : m_in.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != xv && e[i] != 0)
                throw std::invalid_argument("normal_form_mod: divisor must be univariate");

    const std::int64_t lo = m_in.min_exponents()[xv];
    Exponents down(p.nvars(), 0);
    down[xv] = -lo;
    ZPoly m = m_in.shifted(down);
    const std::int64_t d = m.max_exponents()[xv];
    Exponents top(p.nvars(), 0);
    top[xv] = d;
    const Integer lead = m.coefficient(top);
    const Integer trail = m.constant_term();
    if (abs(lead) != 1 || abs(trail) != 1)
        throw std::invalid_argument("normal_form_mod: divisor is not monic in x with unit constant term");
    if (lead < 0)
        m = -m;
    if (d == 0)
        return ZPoly(IntegerRing{}, p.nvars()); // m is a unit
    if (p.is_zero())
        return p;

    // x^-1 = -m0 * (m - m0) / x  modulo m, with m0 = +-1.
    const Integer m0 = m.constant_term();
    ZPoly xinv(IntegerRing{}, p.nvars());
    for (const auto& [e, v] : m.terms()) {
        if (e[xv] == 0)
            continue;
        Exponents ne = e;
        ne[xv] -= 1;
        xinv.add_term(ne, Integer(-m0 * v));
    }

    const std::int64_t k = std::max<std::int64_t>(0, -p.min_exponents()[xv]);
    Exponents up(p.nvars(), 0);
    up[xv] = k;
    ZPoly r = remainder(p.shifted(up), m, xv, d, c);
    for (std::int64_t i = 0; i < k; ++i)
        r = remainder(r * xinv, m, xv, d, c);
    return r;
}

} // namespace embedcheck
