#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skolem/construction.hpp"
#include "skolem/format.hpp"
#include "skolem/search.hpp"

using namespace skolem;

namespace {

SearchResult run(std::uint32_t n, SearchMode mode, bool strong, unsigned threads = 1,
                 DifferenceOrder order = DifferenceOrder::LargestFirst) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.mode = mode;
  cfg.require_strong = strong;
  cfg.threads = threads;
  cfg.order = order;
  return search_skolem_starters(cfg);
}

oracle::PairList pairs_of(const PairSet& s) {
  oracle::PairList out;
  for (const Pair& p : s.pairs()) out.emplace_back(p.lo, p.hi);
  return out;
}

}  // namespace

// Counts frozen from two independent brute-force enumerations (all perfect
// matchings for n <= 11; left-to-right position filling for n <= 27).
struct Frozen {
  std::uint32_t n;
  std::uint64_t skolem;
  std::uint64_t strong_skolem;
};
constexpr Frozen kFrozen[] = {{9, 6, 0}, {11, 10, 2}, {17, 504, 56}, {19, 2656, 194}};

TEST_CASE("frozen counts agree with the position-order oracle") {
  for (const auto& f : kFrozen) {
    const auto c = oracle::position_order_counts(f.n);
    CHECK(c.skolem == f.skolem);
    CHECK(c.strong_skolem == f.strong_skolem);
  }
}

TEST_CASE("search counts match the frozen values") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.n);
    CHECK(run(f.n, SearchMode::CountAll, false).count == f.skolem);
    CHECK(run(f.n, SearchMode::CountAll, true).count == f.strong_skolem);
  }
}

TEST_CASE("n = 11 strong enumeration is exactly the two constructed starters") {
  const SearchResult r = run(11, SearchMode::EnumerateAll, true);
  CHECK(r.count == 2);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0] == PairSet(11, fixtures::paper_tables()[0].skolem_order));
  CHECK(r.witnesses[1] == PairSet(11, fixtures::paper_tables()[1].skolem_order));

  const auto brute = oracle::brute_force_strong_skolem(11);
  REQUIRE(brute.size() == r.witnesses.size());
  for (std::size_t i = 0; i < brute.size(); ++i) CHECK(pairs_of(r.witnesses[i]) == brute[i]);
}

TEST_CASE("n = 9 has no strong Skolem starter") {
  CHECK(oracle::brute_force_strong_skolem(9).empty());
  const SearchResult r = run(9, SearchMode::CountAll, true);
  CHECK(r.count == 0);
  CHECK(r.witnesses.empty());
  CHECK(r.nodes_explored > 0);
  CHECK(run(9, SearchMode::FirstWitness, true).witnesses.empty());
}

TEST_CASE("n = 3 is the smallest admissible order") {
  const SearchResult r = run(3, SearchMode::EnumerateAll, true);
  CHECK(r.count == 1);
  CHECK(r.witnesses.at(0) == PairSet(3, {{1, 2}}));
}

TEST_CASE("inadmissible n and bad configs are rejected") {
  CHECK_THROWS_AS(run(5, SearchMode::CountAll, true), PreconditionError);
  CHECK_THROWS_AS(run(15, SearchMode::CountAll, false), PreconditionError);
  CHECK_THROWS_AS(run(10, SearchMode::CountAll, false), PreconditionError);
  CHECK_THROWS_AS(run(1, SearchMode::CountAll, false), PreconditionError);
  SearchConfig cfg;
  cfg.limit = 0;
  CHECK_THROWS_AS(search_skolem_starters(cfg), PreconditionError);
  cfg.limit.reset();
  cfg.threads = 0;
  CHECK_THROWS_AS(search_skolem_starters(cfg), PreconditionError);
}

TEST_CASE("tractability ceiling") {
  SearchConfig cfg;
  cfg.n = 33;
  cfg.mode = SearchMode::EnumerateAll;
  CHECK_THROWS_AS(search_skolem_starters(cfg), CeilingExceeded);
  cfg.ceiling = 9;
  cfg.n = 11;
  CHECK_THROWS_AS(search_skolem_starters(cfg), CeilingExceeded);
  cfg.override_ceiling = true;
  CHECK(search_skolem_starters(cfg).count == 2);
  CHECK(default_ceiling(SearchMode::CountAll) == 27);
  CHECK(default_ceiling(SearchMode::EnumerateAll) == 27);
  CHECK(default_ceiling(SearchMode::FirstWitness) == 57);
}

TEST_CASE("count is independent of the difference order") {
  for (std::uint32_t n : {9u, 11u, 17u, 19u}) {
    for (bool strong : {false, true}) {
      const auto a = run(n, SearchMode::CountAll, strong, 1, DifferenceOrder::LargestFirst);
      const auto b = run(n, SearchMode::CountAll, strong, 1, DifferenceOrder::SmallestFirst);
      CHECK(a.count == b.count);
    }
  }
  // Enumerated sets agree too, not only their sizes.
  const auto a = run(19, SearchMode::EnumerateAll, true, 1, DifferenceOrder::LargestFirst);
  const auto b = run(19, SearchMode::EnumerateAll, true, 1, DifferenceOrder::SmallestFirst);
  CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("strong pruning agrees with filtering unpruned witnesses") {
  for (std::uint32_t n : {11u, 17u, 19u}) {
    const auto all = run(n, SearchMode::EnumerateAll, false);
    std::vector<PairSet> filtered;
    for (const PairSet& w : all.witnesses) {
      const auto r = full_report(w);
      CHECK(r.is_skolem);
      if (r.is_strong) filtered.push_back(w);
    }
    const auto strong = run(n, SearchMode::EnumerateAll, true);
    CHECK(filtered == strong.witnesses);
    CHECK(strong.count == filtered.size());
    CHECK(all.count == all.witnesses.size());
  }
}

TEST_CASE("parallel search matches single-threaded search") {
  for (std::uint32_t n : {11u, 17u, 19u}) {
    for (bool strong : {false, true}) {
      const auto one = run(n, SearchMode::EnumerateAll, strong, 1);
      for (unsigned threads : {2u, 3u, 8u}) {
        const auto many = run(n, SearchMode::EnumerateAll, strong, threads);
        CHECK(many.count == one.count);
        CHECK(many.witnesses == one.witnesses);
        CHECK(many.nodes_explored == one.nodes_explored);
      }
    }
  }
  const auto first1 = run(19, SearchMode::FirstWitness, true, 1);
  const auto first8 = run(19, SearchMode::FirstWitness, true, 8);
  REQUIRE(first1.witnesses.size() == 1);
  CHECK(first1.witnesses == first8.witnesses);
}

TEST_CASE("limit caps kept and streamed witnesses deterministically") {
  SearchConfig cfg;
  cfg.n = 19;
  cfg.mode = SearchMode::EnumerateAll;
  cfg.limit = 5;
  std::vector<PairSet> streamed;
  const auto one = search_skolem_starters(cfg, [&](const PairSet& s) { streamed.push_back(s); });
  CHECK(one.count == 194);
  CHECK(one.witnesses.size() == 5);
  CHECK(streamed.size() == 5);
  std::vector<PairSet> sorted = streamed;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == one.witnesses);

  cfg.threads = 6;
  std::vector<PairSet> streamed6;
  const auto six = search_skolem_starters(cfg, [&](const PairSet& s) { streamed6.push_back(s); });
  CHECK(six.witnesses == one.witnesses);
  CHECK(streamed6 == streamed);

  cfg.mode = SearchMode::CountAll;
  cfg.limit = 3;
  const auto counted = search_skolem_starters(cfg);
  CHECK(counted.count == 194);
  CHECK(counted.witnesses.size() == 3);
  cfg.limit.reset();
  CHECK(search_skolem_starters(cfg).witnesses.empty());
}

TEST_CASE("every witness re-verifies and streams in the text format") {
  SearchConfig cfg;
  cfg.n = 17;
  cfg.mode = SearchMode::EnumerateAll;
  std::string stream;
  const auto r = search_skolem_starters(cfg, [&](const PairSet& s) { stream += to_text(s); });
  const auto parsed = parse_text_stream(stream);
  CHECK(parsed.size() == r.count);
  for (const PairSet& w : parsed) {
    const auto rep = full_report(w);
    CHECK(rep.is_strong);
    CHECK(rep.is_skolem);
  }
}

TEST_CASE("every admissible order from 11 to 57 has a strong Skolem starter") {
  for (std::uint32_t n = 11; n <= 57; n += 2) {
    if (n % 8 != 1 && n % 8 != 3) continue;
    CAPTURE(n);
    const auto r = run(n, SearchMode::FirstWitness, true);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.count == 1);
    CHECK(full_report(r.witnesses[0]).strong_skolem());
  }
  CHECK_THROWS_AS(run(59, SearchMode::FirstWitness, true), CeilingExceeded);
}

TEST_CASE("strong counts at the exhaustive ceiling") {
  // Frozen from the position-order oracle, run once offline (minutes in an
  // interpreter); the search takes a few seconds.
  CHECK(run(25, SearchMode::CountAll, true).count == 9622);
  CHECK(run(27, SearchMode::CountAll, true, 4).count == 47116);
}

TEST_CASE("cross_validate_construction") {
  CHECK(cross_validate_construction(10).rows.empty());
  const auto r11 = cross_validate_construction(11);
  REQUIRE(r11.rows.size() == 1);
  CHECK(r11.rows[0].q == 11);
  CHECK(r11.rows[0].strong_skolem_count == 2);
  CHECK(r11.rows[0].found_two);
  CHECK(r11.rows[0].found_half);

  const auto r19 = cross_validate_construction(19, 4);
  REQUIRE(r19.rows.size() == 2);
  CHECK(r19.rows[1].q == 19);
  CHECK(r19.rows[1].strong_skolem_count == 194);
  CHECK(r19.rows[1].found_two);
  CHECK(r19.rows[1].found_half);

  CHECK_THROWS_AS(cross_validate_construction(43), CeilingExceeded);
}
