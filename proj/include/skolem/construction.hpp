#pragma once

/**
 * @file construction.hpp
 * @brief Quadratic-residue starters over Z_q.
 *
 * For a prime q = 3 (mod 4), q != 3, a generator alpha of QR(q) and a
 * non-residue beta with beta + 1 != 0, the set
 *
 *     S_beta = { {alpha^i, beta * alpha^i} : i = 1, ..., (q-1)/2 }
 *
 * is a strong starter. When q = 3 (mod 8), both beta = 2 and
 * beta = 2^-1 = (q+1)/2 make S_beta Skolem as well: every pair's integer
 * difference lands in the half-set {1, ..., (q-1)/2}.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skolem/number_theory.hpp"
#include "skolem/starter.hpp"

namespace skolem {

/// Validated (q, alpha, beta). Only constructible through make().
class ConstructionParams {
 public:
  /// Throws PreconditionError naming the first violated condition:
  /// q prime, q = 3 (mod 4), q != 3, alpha a generator of QR(q),
  /// beta a non-residue, beta not in {1, q-1}.
  static ConstructionParams make(std::uint64_t q, std::uint64_t alpha, std::uint64_t beta);

  const Modulus& q() const { return q_; }
  const ZnElement& alpha() const { return alpha_; }
  const ZnElement& beta() const { return beta_; }

 private:
  ConstructionParams(Modulus q, ZnElement alpha, ZnElement beta)
      : q_(q), alpha_(alpha), beta_(beta) {}

  Modulus q_;
  ZnElement alpha_;
  ZnElement beta_;
};

PairSet build_s_beta(const ConstructionParams& p);

enum class BetaChoice { Two, Half };

const char* to_string(BetaChoice b);

/// beta = 2 or beta = (q+1)/2 for the given modulus.
std::uint32_t beta_value(std::uint64_t q, BetaChoice b);

/// The strong Skolem starter S_2 or S_{(q+1)/2}. alpha defaults to the
/// smallest generator of QR(q). Throws PreconditionError when q is not a
/// prime, q = 3, or q != 3 (mod 8).
PairSet build_strong_skolem(std::uint64_t q, BetaChoice beta,
                            std::optional<std::uint64_t> alpha = std::nullopt);

struct CertificateEntry {
  Pair pair;
  std::uint32_t difference;
  bool in_half_set;
};

struct HalfSetCertificate {
  std::vector<CertificateEntry> entries;
  /// Every difference lies in {1..t} and together they are exactly {1..t}.
  bool valid = false;
  std::string failure;
};

/// Checks that each pair's ordered difference lies in {1, ..., (q-1)/2} and
/// that the differences fill that set. Failure is reported, not thrown.
HalfSetCertificate half_set_certificate(const PairSet& s);

struct TheoremStarter {
  std::uint32_t q;
  BetaChoice beta_choice;
  std::uint32_t alpha;
  PairSet starter;
};

/// Both beta choices, canonical alpha, for every prime q = 3 (mod 8) with
/// 11 <= q <= q_max. Sorted by q then beta (Two before Half). Work is split
/// across `threads` workers when threads > 1.
std::vector<TheoremStarter> enumerate_theorem_starters(std::uint64_t q_max, unsigned threads = 1);

}  // namespace skolem
