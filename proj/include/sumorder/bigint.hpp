#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sumorder {

// Exact signed integers of unbounded size. Coefficients overflow 64 bits
// around k = 13 in the main table, so everything downstream of the
// polynomial kernel stays in this type.
using bigint = boost::multiprecision::cpp_int;

inline std::string to_decimal(const bigint& x) { return x.str(); }

inline bigint parse_decimal(const std::string& s) { return bigint(s); }

}  // namespace sumorder
