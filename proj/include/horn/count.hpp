#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace horn {

/// Exact, arbitrary-precision model/family count.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// Decimal rendering with ',' every three digits ("1,373,701").
std::string with_separators(const Count& c);

/// 2^k as an exact count.
inline Count pow2(unsigned k) {
  Count c = 1;
  c <<= k;
  return c;
}

}  // namespace horn
