#pragma once

/**
 * @file number_theory.hpp
 * @brief Exact modular arithmetic over odd moduli.
 *
 * Residues are stored as 32-bit values; every product is formed in 64-bit
 * intermediates, which is why moduli are capped at 2^31 - 1.
 *
 * Residuosity is decided by Euler's criterion: for a prime q and x != 0,
 * x^((q-1)/2) is 1 for a quadratic residue and q-1 for a non-residue.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "skolem/errors.hpp"

namespace skolem {

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

/// Deterministic primality for the whole 64-bit range (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// (base^exp) mod m for m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An odd modulus n >= 3, n <= kMaxModulus, with its primality cached.
class Modulus {
 public:
  /// Throws PreconditionError if n is even, below 3, or above kMaxModulus.
  explicit Modulus(std::uint64_t n);

  std::uint32_t value() const { return n_; }
  bool is_prime() const { return prime_; }
  /// (n - 1) / 2, the number of pairs in a starter over Z_n.
  std::uint32_t half() const { return (n_ - 1) / 2; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }

 private:
  std::uint32_t n_;
  bool prime_;
};

/// A residue class in Z_n. Mixing moduli in arithmetic throws.
class ZnElement {
 public:
  /// Reduces v into [0, n).
  ZnElement(std::int64_t v, Modulus m);

  std::uint32_t value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  ZnElement operator+(const ZnElement& rhs) const;
  ZnElement operator-(const ZnElement& rhs) const;
  ZnElement operator*(const ZnElement& rhs) const;
  ZnElement operator-() const;
  ZnElement pow(std::uint64_t exp) const;

  friend bool operator==(const ZnElement& a, const ZnElement& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  /// Orders by value; only meaningful within one modulus.
  friend std::strong_ordering operator<=>(const ZnElement& a, const ZnElement& b) {
    return a.value_ <=> b.value_;
  }

 private:
  void require_same_modulus(const ZnElement& rhs) const;

  std::uint32_t value_;
  Modulus modulus_;
};

enum class Residuosity { Zero, Residue, NonResidue };

const char* to_string(Residuosity r);

/// Euler's criterion. Throws PreconditionError for a non-prime modulus.
Residuosity legendre_class(const ZnElement& x);

/// Multiplicative inverse via the extended Euclidean algorithm.
/// Throws PreconditionError for x = 0 or gcd(x, n) != 1.
ZnElement mod_inverse(const ZnElement& x);

/// Smallest k >= 1 with x^k = 1. Requires a prime modulus and x != 0.
std::uint64_t multiplicative_order(const ZnElement& x);

/// Residuosity classification of Z_q for a prime q, immutable once built.
class QrTable {
 public:
  const Modulus& modulus() const { return modulus_; }
  /// Quadratic residues of Z_q*, ascending.
  std::span<const ZnElement> residues() const { return residues_; }
  /// Non-residues of Z_q*, ascending.
  std::span<const ZnElement> non_residues() const { return non_residues_; }
  /// Smallest residue of multiplicative order (q-1)/2.
  const ZnElement& smallest_generator() const { return smallest_generator_; }

  Residuosity classify(std::uint32_t v) const;

 private:
  friend QrTable build_qr_table(const Modulus& q);
  QrTable(Modulus m, std::vector<Residuosity> classes, std::vector<ZnElement> qr,
          std::vector<ZnElement> nqr, ZnElement generator);

  Modulus modulus_;
  std::vector<Residuosity> classes_;
  std::vector<ZnElement> residues_;
  std::vector<ZnElement> non_residues_;
  ZnElement smallest_generator_;
};

/// Throws PreconditionError unless q is prime.
QrTable build_qr_table(const Modulus& q);

/// Every generator of the cyclic group QR(q), ascending.
std::vector<ZnElement> qr_generators(const Modulus& q);

/// True iff x generates QR(q): x is a residue of order exactly (q-1)/2.
bool is_qr_generator(const ZnElement& x);

}  // namespace skolem
