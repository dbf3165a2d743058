#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>

namespace dspan {

// All domain quantities (multiplicities, sums, membership queries) are exact
// unbounded integers: d^k outgrows any fixed width almost immediately.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_int(const BigInt& base, std::size_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && v <= std::numeric_limits<std::uint64_t>::max();
}

// Precondition: fits_u64(v).
inline std::uint64_t to_u64(const BigInt& v) {
  return v.convert_to<std::uint64_t>();
}

}  // namespace dspan
