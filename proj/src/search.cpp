#include "turan/search.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <utility>

#include "turan/freeness.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

// Fixed prefix depth for splitting the branch tree into subtasks. Must not
// depend on the worker count or the results would either.
constexpr int kPrefixDepth = 8;

// The refined completion bound scans undecided pairs; restrict it to the
// deepest levels where the scan is short and most likely to prune.
constexpr int kRefineWindow = 64;

constexpr long long kDefaultLocalBudget = 50000;

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.emplace_back(u, v);
  return pairs;
}

struct Candidate {
  long long arcs;
  Digraph graph;
};

// More arcs wins; equal arc counts resolve to the lexicographically least
// adjacency matrix so results are canonical.
bool better(const Candidate& a, const Candidate& b) {
  if (a.arcs != b.arcs) return a.arcs > b.arcs;
  return lex_less(a.graph, b.graph);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxOrder)
    throw std::invalid_argument("search: n out of range");
  if (cfg.t < 1) throw std::invalid_argument("search: t must be >= 1");
  if (cfg.node_budget <= 0)
    throw std::invalid_argument("search: node budget must be positive");
  if (cfg.workers < 1)
    throw std::invalid_argument("search: workers must be >= 1");
  if (cfg.seed_digraph) {
    if (cfg.seed_digraph->order() != cfg.n)
      throw std::invalid_argument("search: seed digraph has wrong order");
    if (!is_free(*cfg.seed_digraph, FreenessParams(cfg.t)))
      throw std::invalid_argument("search: seed digraph is not free at t");
  }
}

SearchResult finish_result(Candidate best, bool optimal, long long nodes,
                           double elapsed, long long bound, int t) {
  if (!is_free(best.graph, FreenessParams(t)))
    throw std::logic_error("search produced a non-free digraph");
  return SearchResult{best.arcs, std::move(best.graph), optimal,
                      nodes,     elapsed,               bound};
}

// ---------------------------------------------------------------------------
// exhaustive enumeration (n <= 5)
// ---------------------------------------------------------------------------

struct EnumCtx {
  const std::vector<std::pair<int, int>>& pairs;
  int t;
  Path2Table table;
  std::optional<Candidate> best;
  long long nodes = 0;
};

// Absent branch first, so leaves appear in ascending row-major bit order and
// the first digraph attaining the final maximum is the lexicographic least.
void enum_dfs(EnumCtx& c, int k) {
  ++c.nodes;
  const int total = static_cast<int>(c.pairs.size());
  const long long arcs = c.table.graph().size();
  const long long incumbent = c.best ? c.best->arcs : -1;
  if (arcs + (total - k) <= incumbent) return;
  if (k == total) {
    c.best = Candidate{arcs, c.table.graph()};  // strictly better by the bound check
    return;
  }
  auto [u, v] = c.pairs[k];
  enum_dfs(c, k + 1);
  if (c.table.can_add(u, v, c.t)) {
    c.table.add_arc(u, v);
    enum_dfs(c, k + 1);
    c.table.remove_arc(u, v);
  }
}

// ---------------------------------------------------------------------------
// branch and bound
// ---------------------------------------------------------------------------

struct BnbShared {
  std::vector<std::pair<int, int>> pairs;
  int n;
  int t;
  int depth;  // prefix length
  bool has_deadline;
  Clock::time_point deadline;
  Candidate baseline;
  // For symmetry pruning: pair_image[s][p] = index of the pair obtained by
  // applying transposition s to pair p.
  std::vector<std::vector<int>> pair_image;
};

std::vector<std::vector<int>> transposition_pair_maps(
    const std::vector<std::pair<int, int>>& pairs, int n) {
  std::vector<std::vector<int>> maps;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
    index[pairs[p].first][pairs[p].second] = p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> m(pairs.size());
      auto apply = [&](int v) { return v == i ? j : v == j ? i : v; };
      for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
        m[p] = index[apply(pairs[p].first)][apply(pairs[p].second)];
      maps.push_back(std::move(m));
    }
  return maps;
}

// True when the decided prefix [0, k) is already provably lex-greater than
// its image under some vertex transposition; every completion then has a
// lex-smaller isomorphic mate elsewhere in the tree, so the subtree can be
// skipped without losing the canonical maximizer.
bool prefix_dominated(const BnbShared& sh, const Digraph& g, int k) {
  for (const auto& m : sh.pair_image) {
    for (int p = 0; p < k; ++p) {
      int q = m[p];
      if (q >= k) break;
      bool bp = g.has_arc(sh.pairs[p].first, sh.pairs[p].second);
      bool bq = g.has_arc(sh.pairs[q].first, sh.pairs[q].second);
      if (bp != bq) {
        if (bp && !bq) return true;
        break;
      }
    }
  }
  return false;
}

struct SubtaskOutcome {
  Candidate best;
  long long nodes = 0;
  bool aborted = false;
};

// Iterative depth-first search over pair decisions starting at the prefix
// depth (explicit stack; the recursion would be n(n-1) frames deep).
void bnb_dfs(const BnbShared& sh, Path2Table& table, long long budget,
             SubtaskOutcome& out) {
  const int total = static_cast<int>(sh.pairs.size());
  // phase 0: node not yet expanded; 1: present-child running; 2: absent-child
  std::vector<std::uint8_t> stack;
  stack.push_back(0);
  while (!stack.empty()) {
    const int k = sh.depth + static_cast<int>(stack.size()) - 1;
    std::uint8_t& phase = stack.back();
    if (phase == 1) {
      table.remove_arc(sh.pairs[k].first, sh.pairs[k].second);
      phase = 2;
      stack.push_back(0);
      continue;
    }
    if (phase == 2) {
      stack.pop_back();
      continue;
    }

    if (out.nodes >= budget) {
      out.aborted = true;
      return;
    }
    ++out.nodes;
    if (sh.has_deadline && (out.nodes & 1023) == 0 &&
        Clock::now() >= sh.deadline) {
      out.aborted = true;
      return;
    }
    if (!sh.pair_image.empty() && k > 0 &&
        prefix_dominated(sh, table.graph(), k)) {
      stack.pop_back();
      continue;
    }

    const long long arcs = table.graph().size();
    const long long needed = out.best.arcs - arcs;  // arcs still required to tie
    if (total - k < needed) {
      stack.pop_back();
      continue;
    }
    if (needed > 0 && total - k <= kRefineWindow) {
      // Admissible refinement: an undecided arc that cannot be added to the
      // current partial digraph can never appear in any completion, since
      // multiplicity violations persist under arc addition.
      long long usable = 0;
      bool enough = false;
      for (int j = k; j < total && !enough; ++j)
        if (table.can_add(sh.pairs[j].first, sh.pairs[j].second, sh.t))
          enough = ++usable >= needed;
      if (!enough) {
        stack.pop_back();
        continue;
      }
    }
    if (k == total) {
      Candidate cand{arcs, table.graph()};
      if (better(cand, out.best)) out.best = std::move(cand);
      stack.pop_back();
      continue;
    }

    auto [u, v] = sh.pairs[k];
    if (table.can_add(u, v, sh.t)) {
      table.add_arc(u, v);
      phase = 1;
    } else {
      phase = 2;
    }
    stack.push_back(0);
  }
}

// Replays a prefix mask into a fresh table; bit (depth-1-j) of the mask is
// pair j's decision, so descending masks enumerate prefixes in the same
// order the present-first search would reach them. Returns false when some
// present decision already breaks freeness (subtree contains nothing).
bool replay_prefix(const BnbShared& sh, unsigned mask, Path2Table& table) {
  for (int j = 0; j < sh.depth; ++j) {
    if ((mask >> (sh.depth - 1 - j)) & 1) {
      auto [u, v] = sh.pairs[j];
      if (!table.can_add(u, v, sh.t)) return false;
      table.add_arc(u, v);
    }
  }
  return true;
}

SubtaskOutcome run_subtask(const BnbShared& sh, unsigned mask,
                           long long budget) {
  SubtaskOutcome out{sh.baseline, 0, false};
  Path2Table table(sh.n);
  if (!replay_prefix(sh, mask, table)) return out;  // filtered earlier; defensive
  bnb_dfs(sh, table, budget, out);
  return out;
}

}  // namespace

SearchResult exhaustive_max(int n, int t) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("exhaustive_max: n must be between 1 and 5");
  if (t < 1) throw std::invalid_argument("exhaustive_max: t must be >= 1");
  const auto start = Clock::now();
  auto pairs = ordered_pairs(n);
  EnumCtx ctx{pairs, t, Path2Table(n), std::nullopt, 0};
  enum_dfs(ctx, 0);
  return finish_result(std::move(*ctx.best), true, ctx.nodes,
                       seconds_since(start),
                       static_cast<long long>(pairs.size()), t);
}

SearchResult branch_and_bound(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto start = Clock::now();
  const long long universe = static_cast<long long>(cfg.n) * (cfg.n - 1);

  // Every digraph is free when at most t midpoints exist at all.
  if (cfg.n <= cfg.t + 2)
    return finish_result(Candidate{universe, Digraph::complete(cfg.n)}, true,
                         0, seconds_since(start), universe, cfg.t);

  auto pairs = ordered_pairs(cfg.n);
  const int depth = std::min<int>(kPrefixDepth, static_cast<int>(pairs.size()));
  const bool has_deadline = cfg.time_budget_secs > 0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(
                      has_deadline ? cfg.time_budget_secs : 0.0));
  Candidate baseline = cfg.seed_digraph
                           ? Candidate{cfg.seed_digraph->size(), *cfg.seed_digraph}
                           : Candidate{0, Digraph(cfg.n)};
  std::vector<std::vector<int>> pair_image;
  if (cfg.symmetry && cfg.n <= 8)
    pair_image = transposition_pair_maps(pairs, cfg.n);
  const BnbShared sh{std::move(pairs), cfg.n,    cfg.t,
                     depth,            has_deadline, deadline,
                     std::move(baseline), std::move(pair_image)};

  const int total = static_cast<int>(sh.pairs.size());
  // Feasible prefixes in a fixed order, arc-heavy prefixes first to match
  // the present-before-absent branch order. A prefix whose optimistic
  // completion cannot reach the baseline arc count is dropped up front.
  std::vector<unsigned> tasks;
  for (unsigned mask = (1u << sh.depth); mask-- > 0;) {
    Path2Table probe(cfg.n);
    if (!replay_prefix(sh, mask, probe)) continue;
    if (probe.graph().size() + (total - sh.depth) < sh.baseline.arcs) continue;
    tasks.push_back(mask);
  }

  // Budgets are fixed per subtask so that results cannot depend on worker
  // scheduling. No budget rollover between subtasks for the same reason.
  const long long ntasks = static_cast<long long>(tasks.size());
  auto task_budget = [&](std::size_t i) -> long long {
    if (cfg.node_budget == kUnlimited) return kUnlimited;
    long long base = cfg.node_budget / std::max<long long>(ntasks, 1);
    long long extra = static_cast<long long>(i) <
                              cfg.node_budget % std::max<long long>(ntasks, 1)
                          ? 1
                          : 0;
    return base + extra;
  };

  std::vector<SubtaskOutcome> results(tasks.size(),
                                      SubtaskOutcome{sh.baseline, 0, false});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      if (sh.has_deadline && Clock::now() >= sh.deadline) {
        results[i].aborted = true;
        continue;
      }
      results[i] = run_subtask(sh, tasks[i], task_budget(i));
    }
  };
  const int nworkers =
      std::max(1, std::min<int>(cfg.workers, static_cast<int>(tasks.size())));
  if (nworkers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (int i = 0; i < nworkers; ++i) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  Candidate best = sh.baseline;
  long long nodes = 0;
  bool aborted = false;
  for (auto& r : results) {
    if (better(r.best, best)) best = r.best;
    nodes += r.nodes;
    aborted = aborted || r.aborted;
  }
  return finish_result(std::move(best), !aborted, nodes, seconds_since(start),
                       total, cfg.t);
}

SearchResult local_search(const SearchConfig& cfg) {
  validate_config(cfg);
  const auto start = Clock::now();
  const int n = cfg.n;
  const int t = cfg.t;
  const long long universe = static_cast<long long>(n) * (n - 1);

  if (n <= t + 2)
    return finish_result(Candidate{universe, Digraph::complete(n)}, false, 0,
                         seconds_since(start), universe, t);

  Digraph seed = [&] {
    if (cfg.seed_digraph) return *cfg.seed_digraph;
    if (n >= t + 6) {
      try {
        return build_extremal(n, t).graph;
      } catch (const std::invalid_argument&) {
      }
      try {
        // the parity-dispatched family can be empty while d1 still exists
        return build_d1(n, t).graph;
      } catch (const std::invalid_argument&) {
      }
    }
    return Digraph(n);
  }();
  auto pairs = ordered_pairs(n);
  const int total = static_cast<int>(pairs.size());

  Path2Table table(seed);
  auto greedy_fill = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [u, v] : pairs)
        if (!table.graph().has_arc(u, v) && table.can_add(u, v, t)) {
          table.add_arc(u, v);
          changed = true;
        }
    }
  };
  greedy_fill();
  Candidate best{table.graph().size(), table.graph()};

  std::mt19937_64 rng(cfg.rng_seed);
  auto random_pair = [&] { return pairs[rng() % pairs.size()]; };

  const long long budget = cfg.node_budget == kUnlimited ? kDefaultLocalBudget
                                                         : cfg.node_budget;
  const bool timed = cfg.time_budget_secs > 0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(
                      timed ? cfg.time_budget_secs : 0.0));

  long long attempts = 0;
  int stall = 0;
  int kicks = 0;
  const int kStallLimit = 200;
  while (attempts < budget) {
    ++attempts;
    if (timed && (attempts & 255) == 0 && Clock::now() >= deadline) break;
    const long long arcs = table.graph().size();
    if (arcs == universe) break;  // nothing to improve
    if (arcs > 0) {
      // plateau move: lift one arc, try to place another
      auto [ru, rv] = random_pair();
      if (!table.graph().has_arc(ru, rv)) continue;
      table.remove_arc(ru, rv);
      auto [au, av] = random_pair();
      bool placed = false;
      if ((au != ru || av != rv) && !table.graph().has_arc(au, av) &&
          table.can_add(au, av, t)) {
        table.add_arc(au, av);
        placed = true;
      }
      if (!placed) {
        table.add_arc(ru, rv);
        continue;
      }
      greedy_fill();
    } else {
      greedy_fill();
    }
    Candidate cand{table.graph().size(), table.graph()};
    if (better(cand, best)) {
      best = std::move(cand);
      stall = 0;
    } else if (++stall > kStallLimit) {
      // kick: restart from the best digraph minus a few random arcs,
      // digging deeper each time the plateau comes back
      table = Path2Table(best.graph);
      int strength = 3 + (kicks++ % 8);
      for (int i = 0; i < strength; ++i) {
        auto [u, v] = random_pair();
        if (table.graph().has_arc(u, v)) table.remove_arc(u, v);
      }
      greedy_fill();
      stall = 0;
    }
  }
  return finish_result(std::move(best), false, attempts, seconds_since(start),
                       static_cast<long long>(total), t);
}

}  // namespace turan
