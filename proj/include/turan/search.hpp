#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "turan/constructions.hpp"
#include "turan/digraph.hpp"

namespace turan {

inline constexpr long long kUnlimited = std::numeric_limits<long long>::max();

struct SearchConfig {
  int n = 0;
  int t = 1;
  long long node_budget = kUnlimited;
  double time_budget_secs = 0;  // <= 0 means unlimited
  bool symmetry = false;        // prefix-leader pruning, applied for n <= 8
  std::optional<Digraph> seed_digraph;  // starting incumbent, must be free
  std::uint64_t rng_seed = 1;
  int workers = 1;
};

struct SearchResult {
  long long best_arcs;
  Digraph best;
  bool optimal;  // true only when the space was exhausted within budgets
  long long nodes;
  double elapsed_secs;
  long long bound_used;  // optimistic completion bound at the root
};

// Enumerates every digraph on n vertices (n <= 5), pruning branches that
// break freeness or cannot beat the incumbent. Reports the maximum arc
// count with the lexicographically least maximizer in row-major bit order.
SearchResult exhaustive_max(int n, int t);

// Exact search over ordered-pair decisions in row-major order, arc-present
// branch first, with incremental midpoint counters and an admissible
// completion bound. The branch tree is split at a fixed shallow depth into
// prefix subtasks; subtask results and node counts do not depend on the
// worker count, and budgets are divided per subtask, so identical configs
// give identical results for any worker count. Ties on arc count resolve
// to the lexicographically least digraph.
SearchResult branch_and_bound(const SearchConfig& cfg);

// Seeded hill climbing over single-arc additions and freeness-preserving
// (remove, add) swaps, with random kicks off plateaus. Never claims
// optimality. Deterministic for a fixed rng_seed when no wall-clock budget
// is set. The default seed digraph is the extremal construction when
// n >= t+6, the complete digraph when n <= t+2, and empty otherwise.
SearchResult local_search(const SearchConfig& cfg);

struct RangeRecord {
  int n = 0;
  int t = 0;
  bool built = false;  // false when the dispatched family is empty at (n,t)
  Family family = Family::d1;
  long long arcs = 0;
  long long phi = 0;
  long long g = 0;
  bool free_fast = false;
  std::optional<bool> free_naive;  // checked for n <= 30
  bool neighbor_bound_pass = false;
  bool successor_bound_pass = false;
  bool pass = false;
  std::string note;  // failure detail, empty on pass
};

struct RangeReport {
  int t = 0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<RangeRecord> records;  // ascending n
  bool pass = false;
};

// For each n in [n_lo, n_hi]: builds the extremal construction, checks
// freeness (bitset checker, plus the naive oracle for n <= 30), compares
// the arc count to phi(n,t), and runs the neighbor- and successor-bound
// suites (100 seeded (u,S) samples; every v). Requires t >= 2, n_lo >= t+6.
RangeReport verify_range(int t, int n_lo, int n_hi);

}  // namespace turan
