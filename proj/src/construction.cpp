#include "skolem/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace skolem {
namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

ConstructionParams ConstructionParams::make(std::uint64_t q, std::uint64_t alpha,
                                            std::uint64_t beta) {
  const Modulus m(q);
  if (!m.is_prime()) throw PreconditionError("q = " + str(q) + " is not prime");
  if (q == 3) throw PreconditionError("q = 3 is degenerate: QR(3) = {1} is trivial");
  if (q % 4 != 3) {
    throw PreconditionError("q = " + str(q) + " ≡ " + str(q % 4) + " (mod 4): need q ≡ 3 (mod 4)");
  }
  if (alpha == 0 || alpha >= q) throw PreconditionError("alpha = " + str(alpha) + " is not in Z_q*");
  if (beta == 0 || beta >= q) throw PreconditionError("beta = " + str(beta) + " is not in Z_q*");

  const ZnElement a(static_cast<std::int64_t>(alpha), m);
  const ZnElement b(static_cast<std::int64_t>(beta), m);
  if (!is_qr_generator(a)) {
    throw PreconditionError("alpha = " + str(alpha) + " does not generate QR(" + str(q) + ")");
  }
  if (beta == 1) throw PreconditionError("beta = 1 gives degenerate pairs");
  if (beta == q - 1) throw PreconditionError("beta = q - 1 violates beta + 1 != 0");
  if (legendre_class(b) != Residuosity::NonResidue) {
    throw PreconditionError("beta = " + str(beta) + " is a quadratic residue mod " + str(q) +
                            "; pairs would not cover Z_q*");
  }
  return {m, a, b};
}

PairSet build_s_beta(const ConstructionParams& p) {
  const std::uint32_t t = p.q().half();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(t);
  ZnElement power = p.alpha();
  for (std::uint32_t i = 1; i <= t; ++i) {
    pairs.emplace_back(power.value(), (p.beta() * power).value());
    power = power * p.alpha();
  }
  return PairSet(p.q(), std::move(pairs));
}

const char* to_string(BetaChoice b) { return b == BetaChoice::Two ? "2" : "half"; }

std::uint32_t beta_value(std::uint64_t q, BetaChoice b) {
  return b == BetaChoice::Two ? 2 : static_cast<std::uint32_t>((q + 1) / 2);
}

PairSet build_strong_skolem(std::uint64_t q, BetaChoice beta, std::optional<std::uint64_t> alpha) {
  const Modulus m(q);
  if (!m.is_prime()) throw PreconditionError("q = " + str(q) + " is not prime");
  if (q == 3) throw PreconditionError("q = 3 is degenerate: QR(3) = {1} is trivial");
  if (q % 8 != 3) {
    throw PreconditionError("q ≡ " + str(q % 8) +
                            " (mod 8): Main Theorem inapplicable, needs q ≡ 3 (mod 8)");
  }
  const std::uint64_t a = alpha ? *alpha : build_qr_table(m).smallest_generator().value();
  return build_s_beta(ConstructionParams::make(q, a, beta_value(q, beta)));
}

HalfSetCertificate half_set_certificate(const PairSet& s) {
  const std::uint32_t t = s.modulus().half();
  HalfSetCertificate cert;
  std::vector<bool> seen(t + 1, false);
  for (const Pair& p : s.pairs()) {
    const std::uint32_t d = p.difference();
    const bool in_half = d >= 1 && d <= t;
    cert.entries.push_back({p, d, in_half});
    if (!in_half) {
      if (cert.failure.empty()) {
        cert.failure = "difference " + str(d) + " of {" + str(p.lo) + "," + str(p.hi) +
                       "} lies outside 1.." + str(t);
      }
    } else if (seen[d]) {
      if (cert.failure.empty()) cert.failure = "difference " + str(d) + " occurs twice";
    } else {
      seen[d] = true;
    }
  }
  cert.valid = cert.failure.empty();
  return cert;
}

std::vector<TheoremStarter> enumerate_theorem_starters(std::uint64_t q_max, unsigned threads) {
  std::vector<std::uint32_t> primes;
  for (std::uint64_t q = 11; q <= std::min(q_max, kMaxModulus); q += 8) {
    if (is_prime(q)) primes.push_back(static_cast<std::uint32_t>(q));
  }

  const auto make_rows = [](std::uint32_t q) {
    const std::uint32_t alpha = build_qr_table(Modulus(q)).smallest_generator().value();
    std::vector<TheoremStarter> rows;
    for (BetaChoice b : {BetaChoice::Two, BetaChoice::Half}) {
      PairSet s = build_strong_skolem(q, b, alpha);
      if (!full_report(s).strong_skolem()) {
        throw std::logic_error("constructed starter for q = " + std::to_string(q) +
                               " failed verification");
      }
      rows.push_back({q, b, alpha, std::move(s)});
    }
    return rows;
  };

  std::vector<std::vector<TheoremStarter>> per_prime(primes.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, primes.size()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < primes.size(); ++k) per_prime[k] = make_rows(primes[k]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < primes.size(); k += workers) per_prime[k] = make_rows(primes[k]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<TheoremStarter> out;
  for (auto& rows : per_prime) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace skolem
