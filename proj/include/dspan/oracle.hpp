#pragma once

#include <cstdint>
#include <vector>

#include "dspan/collection.hpp"

namespace dspan {

// Exhaustively computed span of a small collection. Ground truth for the
// structural procedures; deliberately naive, never the production path.
struct SpanSet {
  std::vector<std::uint64_t> elements;  // strictly increasing

  bool contains(std::uint64_t n) const;

  bool operator==(const SpanSet&) const = default;
};

// Resource guard, not a semantic limit: collections whose sum exceeds the
// bound are rejected with a distinct, catchable error.
inline constexpr std::uint64_t kDefaultOracleBound = 1000000;

// The exact span, computed by a reachability sweep over achievable sums,
// one pass per token instance.
SpanSet oracle_span(const DCollection& a,
                    std::uint64_t max_sum = kDefaultOracleBound);

bool oracle_contains(const DCollection& a, const BigInt& n,
                     std::uint64_t max_sum = kDefaultOracleBound);

// Set equality of the two spans. Unlike span_equal, the bases may differ.
bool oracle_equal(const DCollection& a, const DCollection& b,
                  std::uint64_t max_sum = kDefaultOracleBound);

}  // namespace dspan
