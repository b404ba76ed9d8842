#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lr3 {

// Exact arbitrary-precision scalars. cpp_rational keeps fractions normalized
// (gcd reduced, positive denominator), so equality is plain comparison.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace lr3
