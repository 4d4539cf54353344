/*
 * (C) Copyright 2026 rado developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "core/errors.hpp"

namespace rado {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Exact:
      return "exact";
    case SearchStatus::ExceedsCap:
      return "exceeds_cap";
    case SearchStatus::Timeout:
      return "timeout";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr Int kMaxCap = 100000;
constexpr int kMaxColors = 63;
constexpr std::uint64_t kPollMask = 0x1FFF;

// Per-position constraint table.  For position p it stores, for every
// solution tuple whose maximum entry is p, the set of distinct positions of
// that tuple other than p itself.  Extending a coloring to p with color c is
// legal iff no stored set is entirely colored c.  An empty set (the constant
// tuple (p, ..., p)) blocks every color.
//
// Position sets are deduplicated across tuples and across equations: whether
// a tuple is monochromatic depends only on which positions it touches.
struct ConstraintTable {
  Int cap = 0;
  std::vector<std::vector<std::int32_t>> elems;  // per p: concatenated sets
  std::vector<std::vector<std::int32_t>> offs;   // per p: set boundaries
};

ConstraintTable build_table(std::span<const Equation> eqs, Int cap) {
  ConstraintTable table;
  table.cap = cap;
  table.elems.resize(static_cast<std::size_t>(cap) + 1);
  table.offs.assign(static_cast<std::size_t>(cap) + 1, {0});
  std::vector<std::set<std::vector<std::int32_t>>> seen(
      static_cast<std::size_t>(cap) + 1);
  std::vector<std::int32_t> others;
  for (const Equation& eq : eqs) {
    const auto& cs = eq.coeffs();
    const int m = static_cast<int>(cs.size());
    std::vector<Int> x(m, 1);
    // One pass over [1, cap]^{k-1}; equivalent to collecting
    // enumerate_solutions_with_max(eq, p) for every p <= cap (unit-tested).
    while (true) {
      Int lhs = 0;
      for (int i = 0; i < m; ++i) lhs += cs[i] * x[i];
      const Int z = lhs - eq.shift();
      if (z >= 1 && z <= cap) {
        Int p = z;
        for (int i = 0; i < m; ++i) p = std::max(p, x[i]);
        others.clear();
        for (int i = 0; i < m; ++i) {
          if (x[i] != p) others.push_back(static_cast<std::int32_t>(x[i]));
        }
        if (z != p) others.push_back(static_cast<std::int32_t>(z));
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        seen[static_cast<std::size_t>(p)].insert(others);
      }
      int i = m - 1;
      while (i >= 0 && x[i] == cap) {
        x[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++x[i];
    }
  }
  for (Int p = 1; p <= cap; ++p) {
    auto& elems = table.elems[static_cast<std::size_t>(p)];
    auto& offs = table.offs[static_cast<std::size_t>(p)];
    for (const auto& set : seen[static_cast<std::size_t>(p)]) {
      elems.insert(elems.end(), set.begin(), set.end());
      offs.push_back(static_cast<std::int32_t>(elems.size()));
    }
  }
  return table;
}

struct Job {
  std::vector<std::int8_t> prefix;  // colors of 1..depth
  int max_used;
};

// Depth-first extension of canonical colorings position by position.  Colors
// are tried in ascending order, capped at one past the largest color used so
// far, so the tree contains exactly the canonical colorings and the first
// coloring reaching any depth is the lexicographically least good one of
// that length.
struct DfsEngine {
  const ConstraintTable* table = nullptr;
  int num_colors = 1;
  Int cap = 0;
  std::atomic<bool>* stop = nullptr;  // shared early-stop across workers
  bool has_deadline = false;
  Clock::time_point deadline;

  std::vector<std::int8_t> col;  // col[p] for p in 1..cap; col[0] unused
  Int best = 0;
  std::vector<std::int8_t> best_col;
  bool hit_cap = false;
  bool timed_out = false;
  std::uint64_t nodes = 0;

  void reset(Int start_best = 0) {
    col.assign(static_cast<std::size_t>(cap) + 1, 0);
    best = start_best;
    best_col.clear();
    hit_cap = false;
    timed_out = false;
    nodes = 0;
  }

  bool poll() {
    if (stop && stop->load(std::memory_order_relaxed)) return true;
    if (has_deadline && Clock::now() >= deadline) {
      timed_out = true;
      if (stop) stop->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  bool allowed(Int p, int c) const {
    const auto& offs = table->offs[static_cast<std::size_t>(p)];
    const auto& elems = table->elems[static_cast<std::size_t>(p)];
    const std::size_t count = offs.size() - 1;
    for (std::size_t ti = 0; ti < count; ++ti) {
      bool mono = true;
      for (std::int32_t idx = offs[ti]; idx < offs[ti + 1]; ++idx) {
        if (col[static_cast<std::size_t>(elems[static_cast<std::size_t>(
                idx)])] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
    return true;
  }

  void note_depth(Int p) {
    if (p > best) {
      best = p;
      best_col.assign(col.begin() + 1, col.begin() + 1 + p);
      if (p >= cap) {
        hit_cap = true;
        if (stop) stop->store(true, std::memory_order_relaxed);
      }
    }
  }

  bool aborted() const {
    return hit_cap || timed_out ||
           (stop && stop->load(std::memory_order_relaxed));
  }

  void run(Int p, int max_used) {
    const int cmax = std::min(max_used + 1, num_colors);
    for (int c = 1; c <= cmax; ++c) {
      if ((++nodes & kPollMask) == 0 && poll()) return;
      if (!allowed(p, c)) continue;
      col[static_cast<std::size_t>(p)] = c;
      note_depth(p);
      if (hit_cap) return;
      if (p < cap) {
        run(p + 1, std::max(max_used, c));
        if (aborted()) return;
      }
    }
  }

  // Like run() but stops descending at frontier_depth, collecting every good
  // canonical coloring of that length as a job for the workers.
  void run_frontier(Int p, int max_used, Int frontier_depth,
                    std::vector<Job>& jobs) {
    const int cmax = std::min(max_used + 1, num_colors);
    for (int c = 1; c <= cmax; ++c) {
      if ((++nodes & kPollMask) == 0 && poll()) return;
      if (!allowed(p, c)) continue;
      col[static_cast<std::size_t>(p)] = c;
      note_depth(p);
      if (hit_cap) return;
      if (p == frontier_depth) {
        jobs.push_back(Job{{col.begin() + 1, col.begin() + 1 + p},
                           std::max(max_used, c)});
      } else {
        run_frontier(p + 1, std::max(max_used, c), frontier_depth, jobs);
        if (aborted()) return;
      }
    }
  }
};

struct EngineResult {
  Int best = 0;
  std::vector<std::int8_t> witness;
  bool hit_cap = false;
  bool timed_out = false;
};

void merge_outcome(EngineResult& into, Int best,
                   const std::vector<std::int8_t>& witness, bool hit_cap,
                   bool timed_out) {
  if (best > into.best ||
      (best == into.best && !witness.empty() &&
       (into.witness.empty() || witness < into.witness))) {
    into.best = best;
    into.witness = witness;
  }
  into.hit_cap = into.hit_cap || hit_cap;
  into.timed_out = into.timed_out || timed_out;
}

// Longest length <= cap reachable by a good coloring for the conjunction of
// constraints in `table`.  Exhaustive unless it hits the cap or the budget.
EngineResult search_lengths(const ConstraintTable& table, int num_colors,
                            Int cap, const SearchOptions& options) {
  EngineResult result;
  DfsEngine engine;
  engine.table = &table;
  engine.num_colors = num_colors;
  engine.cap = cap;
  if (options.budget) {
    engine.has_deadline = true;
    engine.deadline = Clock::now() + *options.budget;
  }

  const Int frontier_depth =
      std::min<Int>(std::max(options.partition_depth, 1), cap);
  if (options.threads <= 1 || frontier_depth >= cap) {
    engine.reset();
    engine.run(1, 0);
    merge_outcome(result, engine.best, engine.best_col, engine.hit_cap,
                  engine.timed_out);
    return result;
  }

  std::atomic<bool> stop{false};
  engine.stop = &stop;
  engine.reset();
  std::vector<Job> jobs;
  engine.run_frontier(1, 0, frontier_depth, jobs);
  merge_outcome(result, engine.best, engine.best_col, engine.hit_cap,
                engine.timed_out);
  if (result.hit_cap || result.timed_out || jobs.empty()) return result;

  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(options.threads),
                            jobs.size()));
  std::atomic<std::size_t> next_job{0};
  std::mutex merge_mutex;
  auto worker = [&]() {
    DfsEngine local;
    local.table = &table;
    local.num_colors = num_colors;
    local.cap = cap;
    local.stop = &stop;
    local.has_deadline = engine.has_deadline;
    local.deadline = engine.deadline;
    EngineResult mine;
    while (true) {
      const std::size_t index =
          next_job.fetch_add(1, std::memory_order_relaxed);
      if (index >= jobs.size()) break;
      if (stop.load(std::memory_order_relaxed)) {
        // Another worker hit the cap or the deadline passed; if the deadline
        // passed, record that this worker did not finish either.
        if (local.has_deadline && Clock::now() >= local.deadline) {
          mine.timed_out = true;
        }
        break;
      }
      const Job& job = jobs[index];
      local.reset();
      std::copy(job.prefix.begin(), job.prefix.end(), local.col.begin() + 1);
      local.best = frontier_depth;
      local.best_col = job.prefix;
      local.run(frontier_depth + 1, job.max_used);
      merge_outcome(mine, local.best, local.best_col, local.hit_cap,
                    local.timed_out);
      if (mine.hit_cap || mine.timed_out) break;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    merge_outcome(result, mine.best, mine.witness, mine.hit_cap,
                  mine.timed_out);
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  // A stop caused by a timeout means no exactness claim survives.
  if (!result.hit_cap && stop.load() && engine.has_deadline &&
      Clock::now() >= engine.deadline) {
    result.timed_out = true;
  }
  return result;
}

void validate_search_args(int num_colors, Int cap) {
  if (num_colors < 1 || num_colors > kMaxColors) {
    throw std::invalid_argument("number of colors must lie in [1, 63]");
  }
  if (cap < 1 || cap > kMaxCap) {
    throw std::invalid_argument("cap must lie in [1, 100000]");
  }
}

Coloring to_coloring(int num_colors, const std::vector<std::int8_t>& colors) {
  return Coloring(num_colors, std::vector<int>(colors.begin(), colors.end()));
}

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

}  // namespace

std::optional<Coloring> find_good_coloring(const Equation& eq, int num_colors,
                                           Int n,
                                           const SearchOptions& options) {
  if (n < 0) throw std::invalid_argument("length must be >= 0");
  if (n == 0) return Coloring(num_colors, {});
  validate_search_args(num_colors, n);
  const Equation eqs[] = {eq};
  const ConstraintTable table = build_table(eqs, n);
  const EngineResult er = search_lengths(table, num_colors, n, options);
  if (er.hit_cap) {
    Coloring witness = to_coloring(num_colors, er.witness);
    if (!is_good_coloring(eq, witness)) {
      throw std::logic_error("engine returned an invalid witness");
    }
    return witness;
  }
  if (er.timed_out) {
    throw timeout_error("budget expired before the length was decided");
  }
  return std::nullopt;
}

RadoResult rado_number(const Equation& eq, int num_colors, Int cap,
                       const SearchOptions& options) {
  validate_search_args(num_colors, cap);
  const auto start = Clock::now();
  const Equation eqs[] = {eq};
  const ConstraintTable table = build_table(eqs, cap);
  const EngineResult er = search_lengths(table, num_colors, cap, options);

  SearchStatus status = SearchStatus::Exact;
  Int value = er.best + 1;
  if (er.hit_cap) {
    status = SearchStatus::ExceedsCap;
    value = cap;
  } else if (er.timed_out) {
    status = SearchStatus::Timeout;
    value = er.best;
  }
  Coloring witness = to_coloring(num_colors, er.witness);
  if (!is_good_coloring(eq, witness)) {
    throw std::logic_error("engine returned an invalid witness");
  }
  return RadoResult{eq, num_colors, status, value, std::move(witness),
                    since(start)};
}

ExcellenceResult max_excellent_length(std::span<const Int> coeffs,
                                      int num_colors, Int cap,
                                      const SearchOptions& options) {
  validate_search_args(num_colors, cap);
  const auto start = Clock::now();
  std::vector<Int> cs(coeffs.begin(), coeffs.end());
  const Int s = Equation(cs, 0).s();
  std::vector<Equation> eqs;
  eqs.reserve(static_cast<std::size_t>(s) + 1);
  for (Int j = 0; j <= s; ++j) eqs.emplace_back(cs, -j);
  const ConstraintTable table = build_table(eqs, cap);
  const EngineResult er = search_lengths(table, num_colors, cap, options);

  SearchStatus status = SearchStatus::Exact;
  Int value = er.best;
  if (er.hit_cap) {
    status = SearchStatus::ExceedsCap;
    value = cap;
  } else if (er.timed_out) {
    status = SearchStatus::Timeout;
    value = er.best;
  }
  Coloring witness = to_coloring(num_colors, er.witness);
  if (!is_excellent_coloring(cs, witness)) {
    throw std::logic_error("engine returned an invalid witness");
  }
  return ExcellenceResult{std::move(cs), num_colors,          status,
                          value,         std::move(witness), since(start)};
}

}  // namespace rado
