#pragma once

#include <gmpxx.h>

#include <string>

namespace cockcroft {

/// Arbitrary-precision signed integer used for exponents and coefficients.
using Integer = mpz_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace cockcroft
