#include "skolem/number_theory.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace skolem {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Distinct prime factors by trial division; n < 2^31 keeps this cheap.
std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void require_prime(const Modulus& m, const char* what) {
  if (!m.is_prime()) {
    throw PreconditionError(std::string(what) + ": modulus " + std::to_string(m.value()) +
                            " is not prime");
  }
}

// Order test at the divisors h/p of h = (q-1)/2.
bool has_order(std::uint64_t x, std::uint64_t order, std::span<const std::uint64_t> factors,
               std::uint64_t q) {
  if (pow_mod(x, order, q) != 1) return false;
  return std::none_of(factors.begin(), factors.end(),
                      [&](std::uint64_t p) { return pow_mod(x, order / p, q) == 1; });
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw PreconditionError("modulus must be odd and >= 3, got " + std::to_string(n));
  }
  if (n > kMaxModulus) {
    throw PreconditionError("modulus " + std::to_string(n) + " exceeds 2^31 - 1");
  }
  n_ = static_cast<std::uint32_t>(n);
  prime_ = skolem::is_prime(n);
}

ZnElement::ZnElement(std::int64_t v, Modulus m) : value_(0), modulus_(m) {
  const std::int64_t n = m.value();
  std::int64_t r = v % n;
  if (r < 0) r += n;
  value_ = static_cast<std::uint32_t>(r);
}

void ZnElement::require_same_modulus(const ZnElement& rhs) const {
  if (!(modulus_ == rhs.modulus_)) {
    throw PreconditionError("arithmetic between Z_" + std::to_string(modulus_.value()) +
                            " and Z_" + std::to_string(rhs.modulus_.value()));
  }
}

ZnElement ZnElement::operator+(const ZnElement& rhs) const {
  require_same_modulus(rhs);
  return {static_cast<std::int64_t>(value_) + rhs.value_, modulus_};
}

ZnElement ZnElement::operator-(const ZnElement& rhs) const {
  require_same_modulus(rhs);
  return {static_cast<std::int64_t>(value_) - rhs.value_, modulus_};
}

ZnElement ZnElement::operator*(const ZnElement& rhs) const {
  require_same_modulus(rhs);
  return {static_cast<std::int64_t>(mul_mod(value_, rhs.value_, modulus_.value())), modulus_};
}

ZnElement ZnElement::operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }

ZnElement ZnElement::pow(std::uint64_t exp) const {
  return {static_cast<std::int64_t>(pow_mod(value_, exp, modulus_.value())), modulus_};
}

const char* to_string(Residuosity r) {
  switch (r) {
    case Residuosity::Zero:
      return "ZERO";
    case Residuosity::Residue:
      return "QR";
    case Residuosity::NonResidue:
      return "NQR";
  }
  return "?";
}

Residuosity legendre_class(const ZnElement& x) {
  require_prime(x.modulus(), "legendre_class");
  if (x.is_zero()) return Residuosity::Zero;
  const std::uint64_t q = x.modulus().value();
  const std::uint64_t e = pow_mod(x.value(), (q - 1) / 2, q);
  if (e == 1) return Residuosity::Residue;
  if (e == q - 1) return Residuosity::NonResidue;
  // Unreachable for prime q.
  throw PreconditionError("Euler criterion produced " + std::to_string(e));
}

ZnElement mod_inverse(const ZnElement& x) {
  const std::int64_t n = x.modulus().value();
  if (x.is_zero()) throw PreconditionError("mod_inverse: 0 has no inverse");
  std::int64_t r0 = n, r1 = x.value();
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    s0 = std::exchange(s1, s0 - quot * s1);
  }
  if (r0 != 1) {
    throw PreconditionError("mod_inverse: " + std::to_string(x.value()) +
                            " is not a unit mod " + std::to_string(n));
  }
  return {s0, x.modulus()};
}

std::uint64_t multiplicative_order(const ZnElement& x) {
  require_prime(x.modulus(), "multiplicative_order");
  if (x.is_zero()) throw PreconditionError("multiplicative_order: 0 is not a unit");
  const std::uint64_t q = x.modulus().value();
  std::uint64_t order = q - 1;
  for (std::uint64_t p : prime_factors(q - 1)) {
    while (order % p == 0 && pow_mod(x.value(), order / p, q) == 1) order /= p;
  }
  return order;
}

bool is_qr_generator(const ZnElement& x) {
  require_prime(x.modulus(), "is_qr_generator");
  if (x.is_zero()) return false;
  const std::uint64_t q = x.modulus().value();
  const std::uint64_t h = (q - 1) / 2;
  const auto factors = prime_factors(h);
  return has_order(x.value(), h, factors, q);
}

QrTable::QrTable(Modulus m, std::vector<Residuosity> classes, std::vector<ZnElement> qr,
                 std::vector<ZnElement> nqr, ZnElement generator)
    : modulus_(m),
      classes_(std::move(classes)),
      residues_(std::move(qr)),
      non_residues_(std::move(nqr)),
      smallest_generator_(generator) {}

Residuosity QrTable::classify(std::uint32_t v) const { return classes_.at(v % modulus_.value()); }

QrTable build_qr_table(const Modulus& q) {
  require_prime(q, "build_qr_table");
  const std::uint32_t n = q.value();
  std::vector<Residuosity> classes(n, Residuosity::Zero);
  std::vector<ZnElement> qr, nqr;
  qr.reserve(q.half());
  nqr.reserve(q.half());
  for (std::uint32_t v = 1; v < n; ++v) {
    const ZnElement x(v, q);
    classes[v] = legendre_class(x);
    (classes[v] == Residuosity::Residue ? qr : nqr).push_back(x);
  }
  const std::uint64_t h = q.half();
  const auto factors = prime_factors(h);
  const auto gen = std::find_if(qr.begin(), qr.end(), [&](const ZnElement& x) {
    return has_order(x.value(), h, factors, n);
  });
  // QR(q) is cyclic, so a generator always exists.
  const ZnElement generator = *gen;
  return QrTable(q, std::move(classes), std::move(qr), std::move(nqr), generator);
}

std::vector<ZnElement> qr_generators(const Modulus& q) {
  const QrTable table = build_qr_table(q);
  const std::uint64_t h = q.half();
  const auto factors = prime_factors(h);
  std::vector<ZnElement> out;
  for (const ZnElement& x : table.residues()) {
    if (has_order(x.value(), h, factors, q.value())) out.push_back(x);
  }
  return out;
}

}  // namespace skolem
