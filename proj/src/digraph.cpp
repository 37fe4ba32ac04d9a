#include "turan/digraph.hpp"

namespace turan {

Digraph add_arc(Digraph d, int u, int v) {
  d.set_arc(u, v);
  return d;
}

Digraph remove_arc(Digraph d, int u, int v) {
  d.clear_arc(u, v);
  return d;
}

long long arc_count(const Digraph& d, const VertexSet& S, const VertexSet& T) {
  if (S.universe() != d.order() || T.universe() != d.order())
    throw std::invalid_argument("arc_count: set universe mismatch");
  long long total = 0;
  S.for_each([&](int u) { total += detail::popcount_and(d.out_row(u), T.words()); });
  return total;
}

int tau(const Digraph& d, int u) {
  return detail::popcount_and(d.out_row(u), d.in_row(u));
}

int alpha(const Digraph& d, int u) {
  VertexSet outside = d.out_neighbors(u).complement();
  int best = 0;
  for (int w = 0; w < d.order(); ++w) {
    int c = detail::popcount_and(d.out_row(w), outside.words());
    if (c > best) best = c;
  }
  return best;
}

MaxDegree max_degree(const Digraph& d) {
  MaxDegree m;
  m.degree = -1;
  for (int v = 0; v < d.order(); ++v) {
    int dout = d.out_degree(v);
    if (dout > m.degree) m = {dout, DegreeSide::out};
  }
  for (int v = 0; v < d.order(); ++v) {
    int din = d.in_degree(v);
    if (din > m.degree) m = {din, DegreeSide::in};
  }
  return m;
}

InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& S) {
  if (S.universe() != d.order())
    throw std::invalid_argument("induced_subgraph: set universe mismatch");
  if (S.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> verts = S.elements();  // ascending original indices
  Digraph g(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && d.has_arc(verts[i], verts[j]))
        g.set_arc(static_cast<int>(i), static_cast<int>(j));
  return {std::move(g), std::move(verts)};
}

bool lex_less(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("lex_less: order mismatch");
  for (int u = 0; u < a.order(); ++u) {
    auto ra = a.out_row(u);
    auto rb = b.out_row(u);
    for (std::size_t w = 0; w < ra.size(); ++w) {
      std::uint64_t diff = ra[w] ^ rb[w];
      if (diff) {
        // lowest differing bit is the earliest column; 0 sorts first
        int k = std::countr_zero(diff);
        return ((ra[w] >> k) & 1) == 0;
      }
    }
  }
  return false;
}

}  // namespace turan
