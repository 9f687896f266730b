#pragma once

#include "embedcheck/rings/laurent_poly.hpp"

namespace embedcheck {

/// Normal form of p in Z[x^+-1, y^+-1] modulo the ideal (m, c), where m is a
/// polynomial in x alone whose leading and trailing coefficients are +-1, and
/// c >= 0 is an integer (0 means no reduction of coefficients).
///
/// The result has x-exponents in [0, deg m) and coefficients in [0, c) when
/// c > 0; it is zero exactly when p lies in the ideal. Works for any number of
/// variables: `xvar` selects the variable m is written in, the others are
/// carried along as coefficients.
ZPoly normal_form_mod(const ZPoly& p, const ZPoly& m, const Integer& c, std::size_t xvar = 0);

} // namespace embedcheck
