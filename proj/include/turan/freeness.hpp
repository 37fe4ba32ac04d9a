#pragma once

#include <optional>

#include "turan/digraph.hpp"

namespace turan {

// Multiplicity bound: a digraph is "free" at t when no ordered pair of
// distinct vertices is joined by more than t directed 2-paths. The bound
// formulas elsewhere need t >= 2; the predicate itself is fine from t >= 1.
struct FreenessParams {
  int t;
  explicit FreenessParams(int t_) : t(t_) {
    if (t_ < 1) throw std::invalid_argument("FreenessParams: t must be >= 1");
  }
};

// Violating pair with its full midpoint set: |midpoints| >= threshold+1
// distinct vertices m with source->m and m->target.
struct Witness {
  int source;
  int target;
  VertexSet midpoints;
  int threshold;
};

// Number of distinct midpoints of 2-paths u -> m -> w. Requires u != w:
// a directed path has distinct vertices, so the pair (u,u) is not a pattern.
int path2_count(const Digraph& d, int u, int w);

struct Path2Max {
  int count;
  int source;
  int target;
};

// Maximum midpoint multiplicity over all ordered pairs, with the
// lexicographically least attaining pair. Requires order >= 2.
Path2Max max_path2(const Digraph& d);

bool is_free(const Digraph& d, FreenessParams p);

// None iff free; otherwise the lexicographically least violating pair with
// the complete midpoint intersection.
std::optional<Witness> find_witness(const Digraph& d, FreenessParams p);

// Same contract as is_free, computed by an explicit (u, m, w) triple loop
// over a plain boolean matrix. Deliberately shares no code with the bitset
// checker so the two can serve as oracles for each other.
bool is_free_naive(const Digraph& d, FreenessParams p);

// On a free digraph, arcs from N+(u) into any S not containing u number at
// most t|S|. Returns whether that bound holds for this (u, S).
bool check_neighbor_bound(const Digraph& d, FreenessParams p, int u,
                          const VertexSet& S);

// On a free digraph, every u outside N+(v) (and != v) has at most
// d+(v) - tau(v) + t successors inside N+(v). Returns whether that bound
// holds at v for all such u.
bool check_successor_bound(const Digraph& d, FreenessParams p, int v);

// Per-ordered-pair midpoint counters kept consistent across arc edits.
// Owns its digraph copy; one owner per table (search workers do not share).
class Path2Table {
 public:
  explicit Path2Table(int order) : d_(order), counts_(order * order, 0) {}

  explicit Path2Table(const Digraph& d) : d_(d.order()), counts_(d.order() * d.order(), 0) {
    for (int u = 0; u < d.order(); ++u)
      d.out_neighbors(u).for_each([&](int v) { add_arc(u, v); });
  }

  const Digraph& graph() const { return d_; }

  int count(int u, int w) const { return counts_[index(u, w)]; }

  // Whether setting u->v keeps every pair count at or below t.
  // True if the arc is already present (adding it changes nothing).
  bool can_add(int u, int v, int t) const;

  void add_arc(int u, int v);
  void remove_arc(int u, int v);

 private:
  std::size_t index(int u, int w) const {
    return static_cast<std::size_t>(u) * d_.order() + w;
  }

  Digraph d_;
  std::vector<int> counts_;
};

}  // namespace turan
