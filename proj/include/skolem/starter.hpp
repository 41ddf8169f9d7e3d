#pragma once

/**
 * @file starter.hpp
 * @brief Pair sets over Z_n* and the starter, strong and Skolem predicates.
 *
 * A starter for Z_n (n = 2t + 1) is a set of t unordered pairs whose members
 * cover Z_n* exactly and whose signed differences +-(x - y) also cover Z_n*.
 * It is strong when the t pair sums mod n are pairwise distinct, and Skolem
 * when, writing each pair as x < y over the integers 1..n-1, the differences
 * y - x are exactly 1..t.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skolem/number_theory.hpp"

namespace skolem {

/// An unordered pair stored with lo < hi.
struct Pair {
  std::uint32_t lo;
  std::uint32_t hi;

  std::uint32_t difference() const { return hi - lo; }

  friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Canonical set of (n-1)/2 pairs over {1, ..., n-1}.
///
/// Construction rejects the wrong pair count, out-of-range members, x == y
/// and repeated pairs. Members may repeat across different pairs; that is a
/// starter failure, not malformed input.
class PairSet {
 public:
  PairSet(Modulus n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);
  PairSet(std::uint64_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

  const Modulus& modulus() const { return modulus_; }
  std::uint32_t n() const { return modulus_.value(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  friend bool operator==(const PairSet&, const PairSet&) = default;
  /// Lexicographic on (n, pairs); used for canonical witness ordering.
  friend bool operator<(const PairSet& a, const PairSet& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.pairs_ < b.pairs_;
  }

 private:
  Modulus modulus_;
  std::vector<Pair> pairs_;
};

/// n mod 8 in {1, 3}. Throws PreconditionError for even n or n < 3.
bool skolem_admissible(std::uint64_t n);

enum class WitnessKind {
  MissingElement,     // value absent from the union of pairs
  DuplicateElement,   // value appears in more than one pair
  DifferenceCollision,  // pairs sharing the difference class {d, n-d}
  SumCollision,       // pairs sharing the sum mod n
  SkolemDifferenceAbsent,  // no pair has integer difference `value`
};

const char* to_string(WitnessKind k);

/// One structured failure fact. `value` is the element, difference class
/// (reported as min(d, n-d)), sum, or missing Skolem difference.
struct Witness {
  WitnessKind kind;
  std::uint32_t value;
  std::vector<Pair> pairs;

  friend bool operator==(const Witness&, const Witness&) = default;
  std::string describe() const;
};

struct PropertyCheck {
  bool holds = false;
  std::vector<Witness> witnesses;
};

struct SkolemCheck {
  bool holds = false;
  /// ordering[i - 1] is the pair with integer difference i.
  std::optional<std::vector<Pair>> ordering;
  std::vector<Witness> witnesses;
};

PropertyCheck verify_starter(const PairSet& s);

/// Starter with pairwise distinct sums mod n. A non-starter yields false,
/// carrying its starter witnesses alongside any sum collisions.
PropertyCheck verify_strong(const PairSet& s);

/// Throws PreconditionError when s is not a starter.
SkolemCheck verify_skolem(const PairSet& s);

struct VerificationReport {
  bool is_starter = false;
  bool is_strong = false;
  bool is_skolem = false;
  /// Informational only; never folded into is_strong.
  bool has_zero_sum = false;
  std::optional<std::vector<Pair>> skolem_ordering;
  std::vector<Witness> witnesses;

  bool strong_skolem() const { return is_starter && is_strong && is_skolem; }
};

/// Runs all three predicates. For a non-starter is_skolem is false, but
/// absent Skolem differences are still listed as witnesses.
VerificationReport full_report(const PairSet& s);

}  // namespace skolem
