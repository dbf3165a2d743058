#include "dspan/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dspan/errors.hpp"

namespace dspan {

bool SpanSet::contains(std::uint64_t n) const {
  return std::binary_search(elements.begin(), elements.end(), n);
}

SpanSet oracle_span(const DCollection& a, std::uint64_t max_sum) {
  // Keep sum + 1 representable even for absurd bounds.
  max_sum = std::min(max_sum, std::numeric_limits<std::uint64_t>::max() - 1);
  const BigInt total = sum_value(a);
  if (total > max_sum) {
    throw oracle_bound_exceeded("collection sum " + total.str() +
                                " exceeds the oracle bound " +
                                std::to_string(max_sum));
  }
  const std::uint64_t sum = to_u64(total);

  std::vector<std::uint8_t> reachable(sum + 1, 0);
  reachable[0] = 1;
  // Any place above 0 being occupied forces d <= sum, so the running token
  // value d^i stays within uint64 for every place we actually visit.
  std::uint64_t base = a.places() >= 2 ? to_u64(a.base()) : 0;
  std::uint64_t token_value = 1;
  for (std::size_t i = 0; i < a.places(); ++i) {
    if (i > 0) token_value *= base;
    const std::uint64_t count = to_u64(a.mults()[i]);  // a_i <= a_i * d^i <= sum
    for (std::uint64_t t = 0; t < count; ++t) {
      for (std::uint64_t s = sum; s >= token_value; --s) {
        reachable[s] |= reachable[s - token_value];
      }
    }
  }

  SpanSet out;
  for (std::uint64_t s = 0; s <= sum; ++s) {
    if (reachable[s]) out.elements.push_back(s);
  }
  return out;
}

bool oracle_contains(const DCollection& a, const BigInt& n,
                     std::uint64_t max_sum) {
  const SpanSet span = oracle_span(a, max_sum);
  if (n < 0 || n > span.elements.back()) return false;
  return span.contains(to_u64(n));
}

bool oracle_equal(const DCollection& a, const DCollection& b,
                  std::uint64_t max_sum) {
  return oracle_span(a, max_sum).elements == oracle_span(b, max_sum).elements;
}

}  // namespace dspan
