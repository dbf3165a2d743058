#include "dspan/collection.hpp"

#include <limits>
#include <string>
#include <utility>

#include "dspan/errors.hpp"

namespace dspan {

namespace {

const BigInt& zero() {
  static const BigInt z(0);
  return z;
}

// a_i > 2(d-1) is the same condition as a_i >= 2d-1 on integers.
BigInt proper_threshold(const BigInt& base) { return 2 * (base - 1); }

// The normalization sweep shared by normalize and normalize_up_to: walk
// places upward and, wherever the multiplicity exceeds 2(d-1), apply as many
// exchanges at that place as it takes to land in [d-1, 2(d-1)]. Batching the
// exchanges keeps the sweep linear even for huge multiplicities; the result
// is identical to applying them one at a time.
std::vector<BigInt> run_proper_exchanges(const DCollection& a,
                                         std::size_t place_limit) {
  const BigInt& d = a.base();
  const BigInt threshold = proper_threshold(d);
  std::vector<BigInt> mults = a.mults();
  for (std::size_t i = 0; i < mults.size() && i < place_limit; ++i) {
    if (mults[i] > threshold) {
      const BigInt count = (mults[i] - threshold + d - 1) / d;
      mults[i] -= count * d;
      if (i + 1 >= mults.size()) mults.resize(i + 2);  // carry makes a new top
      mults[i + 1] += count;
    }
  }
  return mults;
}

}  // namespace

DCollection::DCollection(BigInt base, std::vector<BigInt> mults)
    : base_(std::move(base)), mults_(std::move(mults)) {
  if (base_ < 2) {
    throw invalid_collection("base must be at least 2, got " + base_.str());
  }
  for (const BigInt& m : mults_) {
    if (m < 0) {
      throw invalid_collection("negative multiplicity " + m.str());
    }
  }
  while (!mults_.empty() && mults_.back() == 0) mults_.pop_back();
}

const BigInt& DCollection::mult_at(std::size_t i) const {
  return i < mults_.size() ? mults_[i] : zero();
}

DCollection make_collection(BigInt base, std::vector<BigInt> mults) {
  return DCollection(std::move(base), std::move(mults));
}

BigInt sum_value(const DCollection& a) {
  BigInt total = 0;
  BigInt place_value = 1;
  for (const BigInt& m : a.mults()) {
    total += m * place_value;
    place_value *= a.base();
  }
  return total;
}

bool dominates(const DCollection& a, const DCollection& b) {
  if (a.base() != b.base()) {
    throw base_mismatch("cannot compare collections over bases " +
                        a.base().str() + " and " + b.base().str());
  }
  if (a.places() > b.places()) return false;  // a's top multiplicity is > 0
  for (std::size_t i = 0; i < a.places(); ++i) {
    if (a.mults()[i] > b.mults()[i]) return false;
  }
  return true;
}

DCollection elementary_exchange(const DCollection& a, std::size_t i) {
  if (a.mult_at(i) < a.base()) {
    throw invalid_exchange("cannot exchange at place " + std::to_string(i) +
                           ": multiplicity " + a.mult_at(i).str() +
                           " is below the base " + a.base().str());
  }
  std::vector<BigInt> mults = a.mults();  // a_i >= d >= 2, so i is in range
  mults[i] -= a.base();
  if (i + 1 >= mults.size()) mults.resize(i + 2);
  mults[i + 1] += 1;
  return DCollection(a.base(), std::move(mults));
}

bool is_proper_exchange(const DCollection& a, std::size_t i) {
  return a.mult_at(i) > proper_threshold(a.base());
}

bool is_normal(const DCollection& a) {
  const BigInt threshold = proper_threshold(a.base());
  for (const BigInt& m : a.mults()) {
    if (m > threshold) return false;
  }
  return true;
}

DCollection normalize(const DCollection& a) {
  return DCollection(a.base(),
                     run_proper_exchanges(a, std::numeric_limits<std::size_t>::max()));
}

DCollection normalize_up_to(const DCollection& a, std::size_t j) {
  return DCollection(a.base(), run_proper_exchanges(a, j));
}

DCollection normalize_with_schedule(const DCollection& a,
                                    const ExchangeSchedule& schedule) {
  const BigInt threshold = proper_threshold(a.base());
  DCollection current = a;
  for (std::size_t i : schedule.steps) {
    if (current.mult_at(i) > threshold) {
      current = elementary_exchange(current, i);
    }
  }
  return normalize(current);
}

}  // namespace dspan
