#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive backtracking over Skolem starters of Z_n.
 *
 * A Skolem starter is fixed by choosing, for every difference d = 1..t, a
 * pair (x, x + d) of unused members of {1, ..., n-1}. The search assigns the
 * differences in a static order and, when strong starters are requested,
 * prunes on repeated pair sums mod n.
 *
 * Counts are raw labelled counts: no two starters are identified under any
 * automorphism of Z_n.
 *
 * The top level of the tree (every placement of the first difference in the
 * order) forms the task list. Workers pull tasks, share nothing, and results
 * are merged in task order, so a run with any thread count returns the same
 * count and the same witness list as a single-threaded run.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skolem/starter.hpp"

namespace skolem {

enum class SearchMode {
  CountAll,      // exact count; keeps the first `limit` witnesses if limit is set
  FirstWitness,  // stops at the first starter in depth-first task order
  EnumerateAll,  // exact count and every witness (capped by limit)
};

enum class DifferenceOrder { LargestFirst, SmallestFirst };

/// Largest n searched without override_ceiling, per mode.
inline constexpr std::uint32_t kExhaustiveCeiling = 27;
inline constexpr std::uint32_t kFirstWitnessCeiling = 57;

std::uint32_t default_ceiling(SearchMode mode);

struct SearchConfig {
  std::uint32_t n = 11;
  SearchMode mode = SearchMode::CountAll;
  std::optional<std::size_t> limit;
  bool require_strong = true;
  DifferenceOrder order = DifferenceOrder::LargestFirst;
  unsigned threads = 1;
  /// Replaces default_ceiling(mode) when set.
  std::optional<std::uint32_t> ceiling;
  bool override_ceiling = false;
};

/// n above the tractability ceiling without override.
class CeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchResult {
  std::uint32_t n = 0;
  std::uint64_t count = 0;
  /// Canonically sorted, except in FirstWitness mode (single element).
  std::vector<PairSet> witnesses;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Called once per emitted witness, serialized across workers. At most
/// `limit` calls when a limit is set. In FirstWitness mode it fires once,
/// after the search settles.
using WitnessSink = std::function<void(const PairSet&)>;

/// Throws PreconditionError for an inadmissible n, limit == 0 or threads == 0,
/// CeilingExceeded above the ceiling. Every witness is re-verified with
/// full_report before it is kept or emitted; a failure throws std::logic_error.
SearchResult search_skolem_starters(const SearchConfig& cfg, const WitnessSink& sink = {});

struct CrossValidationRow {
  std::uint32_t q;
  std::uint64_t strong_skolem_count;
  bool found_two;
  bool found_half;
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
};

/// Thrown when a constructed starter is absent from the enumerated set.
class CrossValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// For each prime q = 3 (mod 8) in [11, q_max], enumerates every strong
/// Skolem starter of Z_q and checks both constructed starters are among them.
CrossValidationReport cross_validate_construction(std::uint64_t q_max, unsigned threads = 1,
                                                  bool override_ceiling = false);

}  // namespace skolem
