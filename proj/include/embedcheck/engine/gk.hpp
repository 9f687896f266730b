#pragma once

#include <cstdint>

#include "embedcheck/engine/report.hpp"

namespace embedcheck {

/// Chain complex C(k, n) over Z[G_k], G_k = Z + Z/k, of the 2-complex of
/// <a, t | t a^n t^-1 a^-n, a^k>. Checks the boundary composite, H_0 and the
/// kernel generators g = rho e_1 - n(t-1) e_2, h = (a-1) e_2 with their
/// relations. Throws std::invalid_argument unless k >= 2, 0 < n < k and
/// gcd(n, k) = 1.
CriterionRecord verify_gk_complex(std::int64_t k, std::int64_t n);

} // namespace embedcheck
