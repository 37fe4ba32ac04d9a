#include "turan/freeness.hpp"

namespace turan {

int path2_count(const Digraph& d, int u, int w) {
  if (u == w)
    throw std::invalid_argument("path2_count: endpoints must be distinct");
  return detail::popcount_and(d.out_row(u), d.in_row(w));
}

Path2Max max_path2(const Digraph& d) {
  if (d.order() < 2)
    throw std::invalid_argument("max_path2: order must be at least 2");
  Path2Max best{-1, 0, 0};
  for (int u = 0; u < d.order(); ++u) {
    auto row = d.out_row(u);
    for (int w = 0; w < d.order(); ++w) {
      if (w == u) continue;
      int c = detail::popcount_and(row, d.in_row(w));
      if (c > best.count) best = {c, u, w};
    }
  }
  return best;
}

bool is_free(const Digraph& d, FreenessParams p) {
  if (d.order() < 2) return true;
  for (int u = 0; u < d.order(); ++u) {
    auto row = d.out_row(u);
    for (int w = 0; w < d.order(); ++w) {
      if (w == u) continue;
      if (detail::popcount_and(row, d.in_row(w)) > p.t) return false;
    }
  }
  return true;
}

std::optional<Witness> find_witness(const Digraph& d, FreenessParams p) {
  if (d.order() < 2) return std::nullopt;
  for (int u = 0; u < d.order(); ++u) {
    auto row = d.out_row(u);
    for (int w = 0; w < d.order(); ++w) {
      if (w == u) continue;
      if (detail::popcount_and(row, d.in_row(w)) > p.t) {
        VertexSet mids = d.out_neighbors(u) & d.in_neighbors(w);
        return Witness{u, w, std::move(mids), p.t};
      }
    }
  }
  return std::nullopt;
}

bool is_free_naive(const Digraph& d, FreenessParams p) {
  const int n = d.order();
  if (n < 2) return true;
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && d.has_arc(u, v)) adj[static_cast<std::size_t>(u) * n + v] = 1;
  std::vector<int> cnt(static_cast<std::size_t>(n) * n, 0);
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u) {
      if (u == m || !adj[static_cast<std::size_t>(u) * n + m]) continue;
      for (int w = 0; w < n; ++w) {
        if (w == m || w == u) continue;
        if (adj[static_cast<std::size_t>(m) * n + w])
          ++cnt[static_cast<std::size_t>(u) * n + w];
      }
    }
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if (u != w && cnt[static_cast<std::size_t>(u) * n + w] > p.t) return false;
  return true;
}

bool check_neighbor_bound(const Digraph& d, FreenessParams p, int u,
                          const VertexSet& S) {
  if (S.universe() != d.order())
    throw std::invalid_argument("check_neighbor_bound: universe mismatch");
  if (S.contains(u))
    throw std::invalid_argument("check_neighbor_bound: u must not lie in S");
  long long arcs = arc_count(d, d.out_neighbors(u), S);
  return arcs <= static_cast<long long>(p.t) * S.count();
}

bool check_successor_bound(const Digraph& d, FreenessParams p, int v) {
  auto succ = d.out_row(v);
  int bound = d.out_degree(v) - tau(d, v) + p.t;
  for (int u = 0; u < d.order(); ++u) {
    if (u == v || d.has_arc(v, u)) continue;  // u must lie outside N+(v)
    if (detail::popcount_and(d.out_row(u), succ) > bound) return false;
  }
  return true;
}

bool Path2Table::can_add(int u, int v, int t) const {
  if (u == v)
    throw std::invalid_argument("Path2Table: loops are not allowed");
  if (d_.has_arc(u, v)) return true;
  // New 2-paths appear as u -> v -> b and a -> u -> v.
  bool ok = true;
  d_.out_neighbors(v).for_each([&](int b) {
    if (b != u && counts_[index(u, b)] >= t) ok = false;
  });
  if (!ok) return false;
  d_.in_neighbors(u).for_each([&](int a) {
    if (a != v && counts_[index(a, v)] >= t) ok = false;
  });
  return ok;
}

void Path2Table::add_arc(int u, int v) {
  if (d_.has_arc(u, v)) return;
  d_.out_neighbors(v).for_each([&](int b) {
    if (b != u) ++counts_[index(u, b)];
  });
  d_.in_neighbors(u).for_each([&](int a) {
    if (a != v) ++counts_[index(a, v)];
  });
  d_.set_arc(u, v);
}

void Path2Table::remove_arc(int u, int v) {
  if (!d_.has_arc(u, v)) return;
  d_.clear_arc(u, v);
  d_.out_neighbors(v).for_each([&](int b) {
    if (b != u) --counts_[index(u, b)];
  });
  d_.in_neighbors(u).for_each([&](int a) {
    if (a != v) --counts_[index(a, v)];
  });
}

}  // namespace turan
