#include "embedcheck/rings/laurent_poly.hpp"

#include <cctype>

#include "embedcheck/rings/poly_text.hpp"

namespace embedcheck {

std::vector<std::string> default_variable_names(std::size_t nvars)
{
    switch (nvars) {
    case 0:
        return {};
    case 1:
        return {"t"};
    case 2:
        return {"x", "y"};
    case 3:
        return {"x", "y", "z"};
    default:
        break;
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nvars; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

QPoly to_rational(const ZPoly& p)
{
    return p.map_coefficients(RationalField{}, [](const Integer& c) { return Rational(c); });
}

FpPoly to_prime_field(const ZPoly& p, const PrimeField& field)
{
    return p.map_coefficients(field, [&](const Integer& c) { return field.from_integer(c); });
}

ZPoly parse_laurent_z(std::string_view text, std::span<const std::string> names)
{
    QPoly q = parse_laurent_q(text, names);
    ZPoly r(IntegerRing{}, names.size());
    for (const auto& [e, c] : q.terms()) {
        if (c.get_den() != 1)
            throw PolyParseError("non-integer coefficient " + c.get_str(), 0);
        r.add_term(e, c.get_num());
    }
    return r;
}

QPoly parse_laurent_q(std::string_view text, std::span<const std::string> names)
{
    return PolyParser(text, names).parse();
}

} // namespace embedcheck
