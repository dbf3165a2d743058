#pragma once

#include <cstddef>
#include <vector>

#include "dspan/bigint.hpp"

namespace dspan {

// A finite multiset of powers of a fixed integer base d > 1, encoded as a
// multiplicity sequence: mults()[i] counts tokens of value d^i.
//
// Values are always canonical: the multiplicity sequence carries no trailing
// zeros (the empty sequence is the empty collection), so representational
// equality is semantic equality.
class DCollection {
 public:
  DCollection(BigInt base, std::vector<BigInt> mults);

  const BigInt& base() const { return base_; }
  const std::vector<BigInt>& mults() const { return mults_; }

  // Number of stored places; k + 1 for a nonempty collection.
  std::size_t places() const { return mults_.size(); }
  bool empty() const { return mults_.empty(); }

  // Multiplicity at place i; places beyond the top read as zero.
  const BigInt& mult_at(std::size_t i) const;

  bool operator==(const DCollection&) const = default;

 private:
  BigInt base_;
  std::vector<BigInt> mults_;
};

// Indices at which to attempt an exchange, in application order. Whether a
// step actually fires depends on the collection state when it is reached.
struct ExchangeSchedule {
  std::vector<std::size_t> steps;
};

// Canonical constructor; rejects base < 2 and negative multiplicities,
// trims trailing zeros.
DCollection make_collection(BigInt base, std::vector<BigInt> mults);

// Total value sum_i a_i * d^i.
BigInt sum_value(const DCollection& a);

// Componentwise a_i <= b_i (missing places read as zero).
bool dominates(const DCollection& a, const DCollection& b);

// Replace d tokens of value d^i by one token of value d^(i+1). Requires
// a_i >= d; throws invalid_exchange otherwise (including i past the top).
DCollection elementary_exchange(const DCollection& a, std::size_t i);

// An exchange at place i is proper when a_i > 2(d-1); proper exchanges
// provably preserve the span. Out-of-range i reads a_i = 0.
bool is_proper_exchange(const DCollection& a, std::size_t i);

// Every multiplicity at most 2(d-1).
bool is_normal(const DCollection& a);

// Normal form: sweep places upward, applying proper exchanges until every
// multiplicity is at most 2(d-1). Preserves the sum and the span.
DCollection normalize(const DCollection& a);

// Same sweep, but exchanges only at places strictly below j; places >= j
// receive carries without ever being exchanged themselves.
DCollection normalize_up_to(const DCollection& a, std::size_t j);

// Applies each scheduled index in order, exchanging only where the proper
// threshold holds (other steps are skipped), then finishes with normalize.
// The result equals normalize(a) for every schedule.
DCollection normalize_with_schedule(const DCollection& a,
                                    const ExchangeSchedule& schedule);

}  // namespace dspan
