#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dspan/collection.hpp"

namespace dspan {

// One segment of the critical-index decomposition of a normal collection.
// The block contributes the scaled interval d^shift * {0, 1, ..., length}
// to the span, and block_sum = length * d^shift.
struct IrreducibleBlock {
  std::size_t shift = 0;  // lowest place of the block
  std::size_t top = 0;    // critical index ending the block
  BigInt block_sum;       // sum of the block's tokens
  BigInt length;          // block_sum / d^shift

  bool operator==(const IrreducibleBlock&) const = default;
};

// span(A) as a direct sum of block intervals: every span element has a
// unique tuple of per-block components. Blocks are ordered by increasing
// shift and partition the index range of the underlying normal collection.
struct Decomposition {
  BigInt base;
  std::vector<IrreducibleBlock> blocks;
};

// All critical indices of a normal nonempty collection, in increasing
// order: every j with a_j < d-1, plus the top index k (always last).
std::vector<std::size_t> critical_indices(const DCollection& a);

// Cuts a normal nonempty collection at its critical indices, one block per
// critical index. A single block means the collection is irreducible.
// Throws not_normal / empty_collection; callers must normalize first.
Decomposition decompose(const DCollection& a);

// decompose(normalize(a)); the empty collection yields an empty block list.
Decomposition span_profile(const DCollection& a);

// Decides n in span(a) by greedy component extraction over the
// decomposition, walking blocks from the highest shift down and clamping
// each component at the block length.
bool contains(const DCollection& a, const BigInt& n);

// Least nonnegative integer not in span(a): first-block sum + 1, or
// sum + 1 when the collection is irreducible or empty.
BigInt mex(const DCollection& a);

// |span(a)|: product over blocks of (length + 1).
BigInt span_size(const DCollection& a);

// Span elements in strictly increasing order, at most `limit` of them,
// generated from the direct-sum structure (odometer over block
// components), never by subset enumeration. Rejects limit = 0.
std::vector<BigInt> enumerate_span(const DCollection& a, std::uint64_t limit);

// span(a) == span(b), decided as normalize(a) == normalize(b). The two
// collections must share a base.
bool span_equal(const DCollection& a, const DCollection& b);

// Whether the (required-valid) exchange at place i preserves the span:
// true iff place i of normalize_up_to(a, i) exceeds 2(d-1).
bool exchange_preserves_span(const DCollection& a, std::size_t i);

}  // namespace dspan
