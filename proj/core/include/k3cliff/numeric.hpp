#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace k3cliff {

// All lattice arithmetic is exact. A wrapped intersection number would
// fabricate a false certificate, so every computation runs on cpp_int.
using Int = boost::multiprecision::cpp_int;

// ceil(a / b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

// Checked narrowing for serialization; certificate payloads are small.
inline std::int64_t to_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi)
    throw std::overflow_error("value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace k3cliff
