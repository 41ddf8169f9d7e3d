#include "skolem/starter.hpp"

#include <algorithm>
#include <sstream>

namespace skolem {
namespace {

// Pairs grouped by an integer key in [0, size).
std::vector<std::vector<Pair>> group_by(const PairSet& s, std::size_t size, auto key) {
  std::vector<std::vector<Pair>> groups(size);
  for (const Pair& p : s.pairs()) groups[key(p)].push_back(p);
  return groups;
}

void collect_collisions(const std::vector<std::vector<Pair>>& groups, WitnessKind kind,
                        std::vector<Witness>& out) {
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].size() > 1) {
      out.push_back({kind, static_cast<std::uint32_t>(k), groups[k]});
    }
  }
}

std::vector<Witness> cover_and_difference_witnesses(const PairSet& s) {
  const std::uint32_t n = s.n();
  std::vector<Witness> out;

  std::vector<std::vector<Pair>> holders(n);
  for (const Pair& p : s.pairs()) {
    holders[p.lo].push_back(p);
    holders[p.hi].push_back(p);
  }
  for (std::uint32_t v = 1; v < n; ++v) {
    if (holders[v].empty()) out.push_back({WitnessKind::MissingElement, v, {}});
  }
  for (std::uint32_t v = 1; v < n; ++v) {
    if (holders[v].size() > 1) out.push_back({WitnessKind::DuplicateElement, v, holders[v]});
  }

  // Each pair covers the class {d, n - d}; starterhood needs every class once.
  const auto classes = group_by(s, s.modulus().half() + 1, [n](const Pair& p) {
    const std::uint32_t d = p.difference();
    return std::min(d, n - d);
  });
  collect_collisions(classes, WitnessKind::DifferenceCollision, out);
  return out;
}

std::vector<Witness> sum_witnesses(const PairSet& s) {
  const std::uint32_t n = s.n();
  std::vector<Witness> out;
  collect_collisions(group_by(s, n, [n](const Pair& p) { return (p.lo + p.hi) % n; }),
                     WitnessKind::SumCollision, out);
  return out;
}

// Integer differences y - x against the target set {1, ..., t}.
SkolemCheck skolem_differences(const PairSet& s) {
  const std::uint32_t t = s.modulus().half();
  std::vector<std::optional<Pair>> by_diff(t + 1);
  for (const Pair& p : s.pairs()) {
    if (p.difference() <= t) by_diff[p.difference()] = p;
  }
  SkolemCheck out;
  for (std::uint32_t i = 1; i <= t; ++i) {
    if (!by_diff[i]) out.witnesses.push_back({WitnessKind::SkolemDifferenceAbsent, i, {}});
  }
  out.holds = out.witnesses.empty();
  if (out.holds) {
    std::vector<Pair> ordering;
    ordering.reserve(t);
    for (std::uint32_t i = 1; i <= t; ++i) ordering.push_back(*by_diff[i]);
    out.ordering = std::move(ordering);
  }
  return out;
}

std::string pair_text(const Pair& p) {
  return "{" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
}

}  // namespace

PairSet::PairSet(Modulus n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs)
    : modulus_(n) {
  const std::uint32_t m = n.value();
  if (pairs.size() != n.half()) {
    throw PreconditionError("Z_" + std::to_string(m) + " needs " + std::to_string(n.half()) +
                            " pairs, got " + std::to_string(pairs.size()));
  }
  pairs_.reserve(pairs.size());
  for (auto [x, y] : pairs) {
    if (x == 0 || y == 0 || x >= m || y >= m) {
      throw PreconditionError("pair {" + std::to_string(x) + "," + std::to_string(y) +
                              "} has a member outside 1.." + std::to_string(m - 1));
    }
    if (x == y) throw PreconditionError("pair {" + std::to_string(x) + "," + std::to_string(y) + "} is degenerate");
    pairs_.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(pairs_.begin(), pairs_.end());
  const auto dup = std::adjacent_find(pairs_.begin(), pairs_.end());
  if (dup != pairs_.end()) throw PreconditionError("pair " + pair_text(*dup) + " listed twice");
}

PairSet::PairSet(std::uint64_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs)
    : PairSet(Modulus(n), std::move(pairs)) {}

bool skolem_admissible(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw PreconditionError("Skolem admissibility needs odd n >= 3, got " + std::to_string(n));
  }
  return n % 8 == 1 || n % 8 == 3;
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::MissingElement:
      return "missing_element";
    case WitnessKind::DuplicateElement:
      return "duplicate_element";
    case WitnessKind::DifferenceCollision:
      return "difference_collision";
    case WitnessKind::SumCollision:
      return "sum_collision";
    case WitnessKind::SkolemDifferenceAbsent:
      return "skolem_difference_absent";
  }
  return "?";
}

std::string Witness::describe() const {
  std::ostringstream os;
  switch (kind) {
    case WitnessKind::MissingElement:
      os << "element " << value << " is not covered";
      break;
    case WitnessKind::DuplicateElement:
      os << "element " << value << " appears in";
      break;
    case WitnessKind::DifferenceCollision:
      os << "difference +-" << value << " repeated by";
      break;
    case WitnessKind::SumCollision:
      os << "sum " << value << " repeated by";
      break;
    case WitnessKind::SkolemDifferenceAbsent:
      os << "no pair has integer difference " << value;
      break;
  }
  for (const Pair& p : pairs) os << ' ' << pair_text(p);
  return os.str();
}

PropertyCheck verify_starter(const PairSet& s) {
  PropertyCheck out;
  out.witnesses = cover_and_difference_witnesses(s);
  out.holds = out.witnesses.empty();
  return out;
}

PropertyCheck verify_strong(const PairSet& s) {
  PropertyCheck out = verify_starter(s);
  const bool starter = out.holds;
  auto sums = sum_witnesses(s);
  out.holds = starter && sums.empty();
  out.witnesses.insert(out.witnesses.end(), sums.begin(), sums.end());
  return out;
}

SkolemCheck verify_skolem(const PairSet& s) {
  if (!verify_starter(s).holds) {
    throw PreconditionError("verify_skolem: pair set over Z_" + std::to_string(s.n()) +
                            " is not a starter");
  }
  return skolem_differences(s);
}

VerificationReport full_report(const PairSet& s) {
  VerificationReport r;
  r.witnesses = cover_and_difference_witnesses(s);
  r.is_starter = r.witnesses.empty();

  auto sums = sum_witnesses(s);
  r.is_strong = r.is_starter && sums.empty();
  r.witnesses.insert(r.witnesses.end(), sums.begin(), sums.end());
  r.has_zero_sum = std::any_of(s.pairs().begin(), s.pairs().end(),
                               [n = s.n()](const Pair& p) { return (p.lo + p.hi) % n == 0; });

  SkolemCheck sk = skolem_differences(s);
  r.is_skolem = r.is_starter && sk.holds;
  if (r.is_skolem) r.skolem_ordering = std::move(sk.ordering);
  r.witnesses.insert(r.witnesses.end(), sk.witnesses.begin(), sk.witnesses.end());
  return r;
}

}  // namespace skolem
