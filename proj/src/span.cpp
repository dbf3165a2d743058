#include "dspan/span.hpp"

#include <utility>

#include "dspan/errors.hpp"

namespace dspan {

std::vector<std::size_t> critical_indices(const DCollection& a) {
  if (a.empty()) {
    throw empty_collection(
        "critical indices are defined for nonempty collections");
  }
  if (!is_normal(a)) {
    throw not_normal("collection is not normal; normalize it first");
  }
  const BigInt low = a.base() - 1;
  const std::size_t k = a.places() - 1;
  std::vector<std::size_t> indices;
  for (std::size_t j = 0; j < k; ++j) {
    if (a.mults()[j] < low) indices.push_back(j);
  }
  indices.push_back(k);  // the top index is always critical
  return indices;
}

Decomposition decompose(const DCollection& a) {
  const std::vector<std::size_t> critical = critical_indices(a);
  Decomposition dec{a.base(), {}};
  dec.blocks.reserve(critical.size());
  std::size_t shift = 0;
  for (std::size_t top : critical) {
    IrreducibleBlock block;
    block.shift = shift;
    block.top = top;
    BigInt length = 0;  // sum of the block scaled down by d^shift
    BigInt place_value = 1;
    for (std::size_t t = shift; t <= top; ++t) {
      length += a.mults()[t] * place_value;
      place_value *= a.base();
    }
    block.length = length;
    block.block_sum = length * pow_int(a.base(), shift);
    dec.blocks.push_back(std::move(block));
    shift = top + 1;
  }
  return dec;
}

Decomposition span_profile(const DCollection& a) {
  if (a.empty()) return Decomposition{a.base(), {}};
  return decompose(normalize(a));
}

bool contains(const DCollection& a, const BigInt& n) {
  if (n < 0) return false;
  const Decomposition dec = span_profile(a);
  BigInt total = 0;
  for (const IrreducibleBlock& block : dec.blocks) total += block.block_sum;
  if (n > total) return false;
  BigInt residual = n;
  for (auto it = dec.blocks.rbegin(); it != dec.blocks.rend(); ++it) {
    const BigInt place_value = pow_int(dec.base, it->shift);
    BigInt component = residual / place_value;
    if (component > it->length) component = it->length;
    residual -= component * place_value;
  }
  return residual == 0;
}

BigInt mex(const DCollection& a) {
  const Decomposition dec = span_profile(a);
  if (dec.blocks.empty()) return 1;  // span of the empty collection is {0}
  // A single block covers {0..sum}, so this is sum + 1 in that case too.
  return dec.blocks.front().block_sum + 1;
}

BigInt span_size(const DCollection& a) {
  BigInt size = 1;
  for (const IrreducibleBlock& block : span_profile(a).blocks) {
    size *= block.length + 1;
  }
  return size;
}

std::vector<BigInt> enumerate_span(const DCollection& a, std::uint64_t limit) {
  if (limit == 0) throw invalid_argument("enumeration limit must be positive");
  const Decomposition dec = span_profile(a);
  const std::size_t s = dec.blocks.size();

  // Ticking block i resets all lower blocks from full to zero, so the value
  // always grows by d^shift_i minus the total of the lower blocks. The
  // telescoping prefix bound keeps every delta positive, which is exactly
  // why odometer order is numeric order.
  std::vector<BigInt> delta(s);
  BigInt prefix = 0;
  for (std::size_t i = 0; i < s; ++i) {
    delta[i] = pow_int(dec.base, dec.blocks[i].shift) - prefix;
    prefix += dec.blocks[i].block_sum;
  }

  std::vector<BigInt> out;
  std::vector<BigInt> components(s, BigInt(0));
  BigInt value = 0;
  out.push_back(value);
  while (out.size() < limit) {
    std::size_t i = 0;
    while (i < s && components[i] == dec.blocks[i].length) {
      components[i] = 0;
      ++i;
    }
    if (i == s) break;  // the whole span has been produced
    components[i] += 1;
    value += delta[i];
    out.push_back(value);
  }
  return out;
}

bool span_equal(const DCollection& a, const DCollection& b) {
  if (a.base() != b.base()) {
    throw base_mismatch(
        "span equality across different bases is only decidable by the "
        "oracle");
  }
  return normalize(a) == normalize(b);
}

bool exchange_preserves_span(const DCollection& a, std::size_t i) {
  if (a.mult_at(i) < a.base()) {
    throw invalid_exchange("cannot exchange at place " + std::to_string(i) +
                           ": multiplicity " + a.mult_at(i).str() +
                           " is below the base " + a.base().str());
  }
  return is_proper_exchange(normalize_up_to(a, i), i);
}

}  // namespace dspan
