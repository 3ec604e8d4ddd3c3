#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skein {

// All module arithmetic is exact; coefficients grow without bound under
// symmetrizer sums, so they are arbitrary-precision throughout.
using Int = boost::multiprecision::cpp_int;

}  // namespace skein
