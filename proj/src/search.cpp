#include "skolem/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "skolem/construction.hpp"

namespace skolem {
namespace {

constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

struct TaskResult {
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  // First witnesses in depth-first order, capped by the config limit.
  std::vector<PairSet> witnesses;
};

PairSet materialize(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& chosen,
                    bool require_strong) {
  PairSet s(n, chosen);
  const VerificationReport r = full_report(s);
  if (!r.is_skolem || (require_strong && !r.is_strong)) {
    throw std::logic_error("search produced a pair set that fails verification over Z_" +
                           std::to_string(n));
  }
  return s;
}

class Backtracker {
 public:
  Backtracker(const SearchConfig& cfg, std::vector<std::uint32_t> order,
              const std::atomic<std::size_t>* first_found)
      : n_(cfg.n),
        strong_(cfg.require_strong),
        mode_(cfg.mode),
        keep_(cfg.mode == SearchMode::FirstWitness ? 1
              : cfg.limit                          ? *cfg.limit
              : cfg.mode == SearchMode::EnumerateAll ? std::numeric_limits<std::size_t>::max()
                                                     : 0),
        order_(std::move(order)),
        first_found_(first_found),
        used_(n_, 0),
        sum_used_(n_, 0) {
    chosen_.reserve(order_.size());
  }

  // Subtree under the placement of order_[0] at `x`.
  TaskResult run(std::size_t task_index, std::uint32_t x) {
    result_ = {};
    task_index_ = task_index;
    stop_ = false;
    if (place(x, order_[0])) {
      descend(1);
      unplace(x, order_[0]);
    }
    return std::move(result_);
  }

 private:
  bool place(std::uint32_t x, std::uint32_t d) {
    const std::uint32_t y = x + d;
    const std::uint32_t sum = (x + y) % n_;
    if (used_[x] || used_[y] || (strong_ && sum_used_[sum])) return false;
    used_[x] = used_[y] = 1;
    if (strong_) sum_used_[sum] = 1;
    chosen_.emplace_back(x, y);
    ++result_.nodes;
    return true;
  }

  void unplace(std::uint32_t x, std::uint32_t d) {
    const std::uint32_t y = x + d;
    used_[x] = used_[y] = 0;
    if (strong_) sum_used_[(x + y) % n_] = 0;
    chosen_.pop_back();
  }

  void descend(std::size_t level) {
    if (stop_) return;
    if (level == order_.size()) {
      leaf();
      return;
    }
    if (mode_ == SearchMode::FirstWitness &&
        first_found_->load(std::memory_order_relaxed) < task_index_) {
      stop_ = true;
      return;
    }
    const std::uint32_t d = order_[level];
    for (std::uint32_t x = 1; x + d < n_ && !stop_; ++x) {
      if (place(x, d)) {
        descend(level + 1);
        unplace(x, d);
      }
    }
  }

  void leaf() {
    ++result_.count;
    if (result_.witnesses.size() < keep_) {
      result_.witnesses.push_back(materialize(n_, chosen_, strong_));
    }
    if (mode_ == SearchMode::FirstWitness) stop_ = true;
  }

  std::uint32_t n_;
  bool strong_;
  SearchMode mode_;
  std::size_t keep_;
  std::vector<std::uint32_t> order_;
  const std::atomic<std::size_t>* first_found_;
  std::vector<char> used_;
  std::vector<char> sum_used_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen_;
  TaskResult result_;
  std::size_t task_index_ = 0;
  bool stop_ = false;
};

void validate(const SearchConfig& cfg) {
  if (cfg.n < 3 || cfg.n % 2 == 0 || !skolem_admissible(cfg.n)) {
    throw PreconditionError("n = " + std::to_string(cfg.n) + " ≡ " + std::to_string(cfg.n % 8) +
                            " (mod 8): Skolem starters need n ≡ 1 or 3 (mod 8)");
  }
  if (cfg.limit && *cfg.limit == 0) throw PreconditionError("limit must be at least 1");
  if (cfg.threads == 0) throw PreconditionError("threads must be at least 1");
  const std::uint32_t ceiling = cfg.ceiling.value_or(default_ceiling(cfg.mode));
  if (!cfg.override_ceiling && cfg.n > ceiling) {
    throw CeilingExceeded("n = " + std::to_string(cfg.n) + " exceeds the search ceiling " +
                          std::to_string(ceiling) + "; pass an explicit override to run it");
  }
}

}  // namespace

std::uint32_t default_ceiling(SearchMode mode) {
  return mode == SearchMode::FirstWitness ? kFirstWitnessCeiling : kExhaustiveCeiling;
}

SearchResult search_skolem_starters(const SearchConfig& cfg, const WitnessSink& sink) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t n = cfg.n;
  const std::uint32_t t = (n - 1) / 2;

  std::vector<std::uint32_t> order(t);
  std::iota(order.begin(), order.end(), 1u);
  if (cfg.order == DifferenceOrder::LargestFirst) std::reverse(order.begin(), order.end());

  std::vector<std::uint32_t> tasks;
  for (std::uint32_t x = 1; x + order[0] < n; ++x) tasks.push_back(x);

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::size_t> first_found{kNoTask};

  // Completed tasks are streamed to the sink in task order.
  std::mutex flush_mutex;
  std::vector<char> done(tasks.size(), 0);
  std::size_t flushed = 0;
  std::size_t emitted = 0;
  const std::size_t emit_cap = cfg.limit.value_or(std::numeric_limits<std::size_t>::max());
  const bool streaming = sink && cfg.mode == SearchMode::EnumerateAll;

  const auto finish_task = [&](std::size_t k) {
    if (!streaming) return;
    std::lock_guard lock(flush_mutex);
    done[k] = 1;
    while (flushed < tasks.size() && done[flushed]) {
      for (const PairSet& w : results[flushed].witnesses) {
        if (emitted == emit_cap) break;
        sink(w);
        ++emitted;
      }
      ++flushed;
    }
  };

  const auto worker = [&] {
    Backtracker bt(cfg, order, &first_found);
    for (std::size_t k; (k = next_task.fetch_add(1)) < tasks.size();) {
      if (cfg.mode == SearchMode::FirstWitness && first_found.load() < k) break;
      results[k] = bt.run(k, tasks[k]);
      if (cfg.mode == SearchMode::FirstWitness && results[k].count > 0) {
        std::size_t cur = first_found.load();
        while (k < cur && !first_found.compare_exchange_weak(cur, k)) {
        }
      }
      finish_task(k);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, tasks.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            worker();
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SearchResult out;
  out.n = n;
  for (const TaskResult& r : results) out.nodes_explored += r.nodes;

  if (cfg.mode == SearchMode::FirstWitness) {
    const std::size_t k = first_found.load();
    if (k != kNoTask) {
      out.count = 1;
      out.witnesses.push_back(results[k].witnesses.front());
      if (sink) sink(out.witnesses.front());
    }
  } else {
    const std::size_t keep = cfg.limit.value_or(std::numeric_limits<std::size_t>::max());
    for (TaskResult& r : results) {
      out.count += r.count;
      for (PairSet& w : r.witnesses) {
        if (out.witnesses.size() == keep) break;
        out.witnesses.push_back(std::move(w));
      }
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
  }
  out.wall_time = std::chrono::steady_clock::now() - start;
  return out;
}

CrossValidationReport cross_validate_construction(std::uint64_t q_max, unsigned threads,
                                                  bool override_ceiling) {
  CrossValidationReport report;
  for (std::uint64_t q = 11; q <= q_max; q += 8) {
    if (!is_prime(q)) continue;
    SearchConfig cfg;
    cfg.n = static_cast<std::uint32_t>(q);
    cfg.mode = SearchMode::EnumerateAll;
    cfg.require_strong = true;
    cfg.threads = threads;
    cfg.override_ceiling = override_ceiling;
    const SearchResult found = search_skolem_starters(cfg);

    CrossValidationRow row{cfg.n, found.count, false, false};
    for (BetaChoice b : {BetaChoice::Two, BetaChoice::Half}) {
      const PairSet built = build_strong_skolem(q, b);
      const bool present = std::binary_search(found.witnesses.begin(), found.witnesses.end(), built);
      if (!present) {
        std::string pairs;
        for (const Pair& p : built.pairs()) {
          pairs += " {" + std::to_string(p.lo) + "," + std::to_string(p.hi) + "}";
        }
        throw CrossValidationError("constructed starter for q = " + std::to_string(q) +
                                   ", beta = " + to_string(b) +
                                   " not found by exhaustive search:" + pairs);
      }
      (b == BetaChoice::Two ? row.found_two : row.found_half) = true;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace skolem
