#include "embedcheck/linalg/smith.hpp"

namespace embedcheck {

SmithForm<Integer> smith_normal_form_Z(const IntMatrix& A) { return smith_normal_form(A, IntegerEuclid{}); }

} // namespace embedcheck
