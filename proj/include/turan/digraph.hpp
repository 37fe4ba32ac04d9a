#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace turan {

// Hard cap on the number of vertices. Everything fits in fixed-width
// bit rows below this, so set operations stay branch-free word loops.
inline constexpr int kMaxOrder = 512;

namespace detail {

inline int words_for(int n) { return (n + 63) / 64; }

inline int popcount_and(std::span<const std::uint64_t> a,
                        std::span<const std::uint64_t> b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace detail

// Subset of the vertices of a digraph of a fixed order ("universe").
// Bits at positions >= universe are always zero.
class VertexSet {
 public:
  explicit VertexSet(int universe) : universe_(universe) {
    if (universe < 0 || universe > kMaxOrder)
      throw std::invalid_argument("VertexSet: universe out of range");
    words_.assign(detail::words_for(universe), 0);
  }

  static VertexSet all(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    check_vertex(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(int v) {
    check_vertex(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_vertex(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.mask_tail();
    return s;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const VertexSet&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= universe_)
      throw std::out_of_range("VertexSet: vertex out of range");
  }
  void check_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw std::invalid_argument("VertexSet: universe mismatch");
  }
  void mask_tail() {
    if (universe_ & 63) {
      words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }
  }

  int universe_;
  std::vector<std::uint64_t> words_;
};

// Strict digraph on a fixed vertex set {0, ..., order-1}: no loops, no
// parallel arcs. Row u of the adjacency relation is kept as a bit vector
// (bit v set means arc u->v); the transposed rows are maintained alongside
// so predecessor sets are O(1) lookups too.
//
// Library code treats digraphs as values: algorithms take const references,
// and the arc-editing helpers below return modified copies. The in-place
// set_arc/clear_arc mutators exist for builders and parsers that assemble a
// value before sharing it.
class Digraph {
 public:
  explicit Digraph(int order) : order_(order), wpr_(detail::words_for(order)) {
    if (order < 1 || order > kMaxOrder)
      throw std::invalid_argument("Digraph: order out of range");
    out_.assign(static_cast<std::size_t>(order_) * wpr_, 0);
    in_.assign(static_cast<std::size_t>(order_) * wpr_, 0);
  }

  static Digraph complete(int order) {
    Digraph d(order);
    for (int u = 0; u < order; ++u)
      for (int v = 0; v < order; ++v)
        if (u != v) d.set_arc(u, v);
    return d;
  }

  int order() const { return order_; }
  int words_per_row() const { return wpr_; }
  long long size() const { return arcs_; }

  bool has_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (out_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1;
  }

  // Idempotent; rejects loops and out-of-range vertices.
  void set_arc(int u, int v) {
    check_arc(u, v);
    std::uint64_t& w = out_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (w & bit) return;
    w |= bit;
    in_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] |= std::uint64_t{1}
                                                          << (u & 63);
    ++arcs_;
  }

  void clear_arc(int u, int v) {
    check_arc(u, v);
    std::uint64_t& w = out_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (!(w & bit)) return;
    w &= ~bit;
    in_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] &=
        ~(std::uint64_t{1} << (u & 63));
    --arcs_;
  }

  std::span<const std::uint64_t> out_row(int u) const {
    check_vertex(u);
    return {out_.data() + static_cast<std::size_t>(u) * wpr_,
            static_cast<std::size_t>(wpr_)};
  }

  std::span<const std::uint64_t> in_row(int v) const {
    check_vertex(v);
    return {in_.data() + static_cast<std::size_t>(v) * wpr_,
            static_cast<std::size_t>(wpr_)};
  }

  VertexSet out_neighbors(int u) const { return row_to_set(out_row(u)); }
  VertexSet in_neighbors(int v) const { return row_to_set(in_row(v)); }

  int out_degree(int u) const {
    int c = 0;
    for (std::uint64_t w : out_row(u)) c += std::popcount(w);
    return c;
  }

  int in_degree(int v) const {
    int c = 0;
    for (std::uint64_t w : in_row(v)) c += std::popcount(w);
    return c;
  }

  bool operator==(const Digraph&) const = default;

 private:
  VertexSet row_to_set(std::span<const std::uint64_t> row) const {
    VertexSet s(order_);
    for (int w = 0; w < wpr_; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        int b = std::countr_zero(word);
        s.insert(w * 64 + b);
        word &= word - 1;
      }
    }
    return s;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= order_)
      throw std::out_of_range("Digraph: vertex out of range");
  }
  void check_arc(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Digraph: loops are not allowed");
  }

  int order_;
  int wpr_;
  long long arcs_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

Digraph add_arc(Digraph d, int u, int v);
Digraph remove_arc(Digraph d, int u, int v);

// e(S,T): number of arcs with tail in S and head in T.
long long arc_count(const Digraph& d, const VertexSet& S, const VertexSet& T);

// |N+(u) ∩ N-(u)|: vertices joined to u by a 2-cycle.
int tau(const Digraph& d, int u);

// max over w of the number of arcs from w into V \ N+(u).
int alpha(const Digraph& d, int u);

enum class DegreeSide { out, in };

struct MaxDegree {
  int degree = 0;
  DegreeSide side = DegreeSide::out;  // ties resolve to the out side
};

MaxDegree max_degree(const Digraph& d);

struct InducedSubgraph {
  Digraph graph;
  std::vector<int> vertices;  // vertices[i] = original index of new vertex i
};

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& S);

// Row-major comparison of the adjacency bit matrices (0 sorts before 1).
bool lex_less(const Digraph& a, const Digraph& b);

}  // namespace turan
