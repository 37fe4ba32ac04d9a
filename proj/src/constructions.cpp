#include "turan/constructions.hpp"

#include <algorithm>

#include "turan/freeness.hpp"

namespace turan {

namespace {

struct Range {
  int begin = 0;
  int end = 0;  // half-open
  int size() const { return end - begin; }
};

std::vector<Range> class_ranges(const std::vector<int>& sizes) {
  std::vector<Range> r;
  int at = 0;
  for (int s : sizes) {
    r.push_back({at, at + s});
    at += s;
  }
  return r;
}

void all_arcs(Digraph& d, const Range& from, const Range& to) {
  for (int u = from.begin; u < from.end; ++u)
    for (int v = to.begin; v < to.end; ++v)
      if (u != v) d.set_arc(u, v);
}

void complete_inside(Digraph& d, std::initializer_list<Range> classes) {
  std::vector<int> verts;
  for (const Range& r : classes)
    for (int v = r.begin; v < r.end; ++v) verts.push_back(v);
  for (int u : verts)
    for (int v : verts)
      if (u != v) d.set_arc(u, v);
}

// Consecutive pairs (first with second, third with fourth, ...).
void disjoint_two_cycles(Digraph& d, const Range& r) {
  if (r.size() % 2 != 0)
    throw std::logic_error("disjoint_two_cycles: odd class size");
  for (int v = r.begin; v + 1 < r.end; v += 2) {
    d.set_arc(v, v + 1);
    d.set_arc(v + 1, v);
  }
}

// Gives every consumer exactly `per_consumer` distinct predecessors from the
// supplier list. Each consumer takes the suppliers with the most remaining
// capacity (ties to the lower index), which keeps the residual instance
// feasible whenever the whole instance is; a stuck state is a defect.
void assign_predecessors(Digraph& d, const std::vector<int>& suppliers,
                         std::vector<int>& capacity, const Range& consumers,
                         int per_consumer) {
  const int s = static_cast<int>(suppliers.size());
  std::vector<int> order(s);
  for (int i = 0; i < s; ++i) order[i] = i;
  for (int v = consumers.begin; v < consumers.end; ++v) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (capacity[a] != capacity[b]) return capacity[a] > capacity[b];
      return a < b;
    });
    if (per_consumer > s || (per_consumer > 0 && capacity[order[per_consumer - 1]] <= 0))
      throw std::logic_error("assign_predecessors: capacity exhausted");
    for (int j = 0; j < per_consumer; ++j) {
      --capacity[order[j]];
      d.set_arc(suppliers[order[j]], v);
    }
  }
}

long long floor2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void check_domain(int n, int t, const char* who) {
  if (t < 2) throw std::invalid_argument(std::string(who) + ": requires t >= 2");
  if (n < t + 6)
    throw std::invalid_argument(std::string(who) + ": requires n >= t+6");
  if (n > kMaxOrder)
    throw std::invalid_argument(std::string(who) + ": n exceeds the order cap");
}

PartitionSpec make_spec(Family f, int n, int t, std::vector<int> sizes) {
  PartitionSpec spec;
  spec.family = f;
  spec.n = n;
  spec.t = t;
  spec.sizes = std::move(sizes);
  spec.class_of.assign(n, 0);
  int at = 0;
  for (std::size_t k = 0; k < spec.sizes.size(); ++k)
    for (int i = 0; i < spec.sizes[k]; ++i) spec.class_of[at++] = static_cast<int>(k);
  if (at != n) throw std::logic_error("make_spec: sizes do not sum to n");
  return spec;
}

Construction finish(Digraph d, PartitionSpec spec) {
  if (!is_free(d, FreenessParams(spec.t)))
    throw std::logic_error("construction is not free at t; builder defect");
  return {std::move(d), std::move(spec)};
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::d1: return "d1";
    case Family::d2: return "d2";
    case Family::d3: return "d3";
  }
  throw std::logic_error("to_string: bad family");
}

int PartitionSpec::class_begin(int k) const {
  int at = 0;
  for (int i = 0; i < k; ++i) at += sizes[i];
  return at;
}

int PartitionSpec::class_end(int k) const { return class_begin(k) + sizes[k]; }

VertexSet PartitionSpec::class_set(int k) const {
  VertexSet s(n);
  for (int v = class_begin(k); v < class_end(k); ++v) s.insert(v);
  return s;
}

std::vector<int> partition_sizes(Family f, int n, int t) {
  check_domain(n, t, "partition_sizes");
  const int h1 = static_cast<int>(floor2(n - t));      // floor((n-t)/2)
  const int h2 = static_cast<int>(floor2(n - t - 1));  // floor((n-t-1)/2)
  switch (f) {
    case Family::d1:
      return {h1, h2, t, 1};
    case Family::d2:
      if (h1 % 2 == 0 || h2 % 2 != 0)
        throw std::invalid_argument(
            "partition_sizes: d2 needs floor((n-t)/2) odd and floor((n-t-1)/2) even");
      return {h1 - 1, h2, t - 2, 1, 1, 2};
    case Family::d3:
      if (h1 % 2 == 0 || h2 % 2 == 0)
        throw std::invalid_argument(
            "partition_sizes: d3 needs floor((n-t)/2) and floor((n-t-1)/2) both odd");
      return {h1 - 1, h1, t - 1, 1, 1, 1};
  }
  throw std::logic_error("partition_sizes: bad family");
}

Construction build_d1(int n, int t) {
  auto sizes = partition_sizes(Family::d1, n, t);
  auto cls = class_ranges(sizes);
  const Range U1 = cls[0], U2 = cls[1], U3 = cls[2], U4 = cls[3];

  // Each U1 vertex needs t distinct predecessors; a U2 vertex can serve at
  // most min(t, |U1|) of them, a U3 vertex at most one. Small n relative to
  // t makes this unsatisfiable, and then the family is empty.
  const long long supply =
      static_cast<long long>(U2.size()) * std::min(t, U1.size()) + t;
  if (static_cast<long long>(t) * U1.size() > supply)
    throw std::invalid_argument(
        "build_d1: infeasible at (n=" + std::to_string(n) +
        ", t=" + std::to_string(t) +
        "): predecessor demand exceeds class capacity; the family is empty");

  Digraph d(n);
  all_arcs(d, U1, U2);
  all_arcs(d, U1, U3);
  all_arcs(d, U1, U4);
  all_arcs(d, U3, U2);
  complete_inside(d, {U3, U4});

  // Exactly t predecessors per U1 vertex, drawn from U2 (capacity t each)
  // then U3 (capacity 1 each).
  std::vector<int> suppliers;
  std::vector<int> capacity;
  for (int v = U2.begin; v < U2.end; ++v) {
    suppliers.push_back(v);
    capacity.push_back(t);
  }
  for (int v = U3.begin; v < U3.end; ++v) {
    suppliers.push_back(v);
    capacity.push_back(1);
  }
  assign_predecessors(d, suppliers, capacity, U1, t);

  return finish(std::move(d), make_spec(Family::d1, n, t, sizes));
}

Construction build_d2(int n, int t) {
  auto sizes = partition_sizes(Family::d2, n, t);
  auto cls = class_ranges(sizes);
  const Range U1 = cls[0], U2 = cls[1], U3 = cls[2], U4 = cls[3], U5 = cls[4],
              U6 = cls[5];

  // t distinct predecessors per U1 vertex must come from U2 alone.
  if (U2.size() < t)
    throw std::invalid_argument(
        "build_d2: infeasible at (n=" + std::to_string(n) +
        ", t=" + std::to_string(t) + "): |U2| < t; the family is empty");

  Digraph d(n);
  all_arcs(d, U1, U2);
  all_arcs(d, U1, U3);
  all_arcs(d, U1, U6);
  all_arcs(d, U4, U2);
  all_arcs(d, U4, U3);
  all_arcs(d, U4, U5);
  all_arcs(d, U4, U6);
  all_arcs(d, U3, U2);
  all_arcs(d, U3, U4);
  all_arcs(d, U5, U2);
  all_arcs(d, U5, U4);
  all_arcs(d, U6, U4);
  complete_inside(d, {U3, U5, U6});
  disjoint_two_cycles(d, U1);
  disjoint_two_cycles(d, U2);

  // Exactly t predecessors per U1 vertex from U2, capacity t per supplier.
  std::vector<int> suppliers;
  std::vector<int> capacity;
  for (int v = U2.begin; v < U2.end; ++v) {
    suppliers.push_back(v);
    capacity.push_back(t);
  }
  assign_predecessors(d, suppliers, capacity, U1, t);

  return finish(std::move(d), make_spec(Family::d2, n, t, sizes));
}

Construction build_d3(int n, int t) {
  auto sizes = partition_sizes(Family::d3, n, t);
  auto cls = class_ranges(sizes);
  const Range U1 = cls[0], U2 = cls[1], U3 = cls[2], U4 = cls[3], U5 = cls[4],
              U6 = cls[5];

  // t distinct predecessors per U1 vertex must come from U2 alone.
  if (U2.size() < t)
    throw std::invalid_argument(
        "build_d3: infeasible at (n=" + std::to_string(n) +
        ", t=" + std::to_string(t) + "): |U2| < t; the family is empty");

  Digraph d(n);
  all_arcs(d, U1, U2);
  all_arcs(d, U1, U3);
  all_arcs(d, U1, U5);
  all_arcs(d, U4, U2);
  all_arcs(d, U4, U3);
  all_arcs(d, U4, U5);
  all_arcs(d, U4, U6);
  all_arcs(d, U3, U2);
  all_arcs(d, U3, U4);
  all_arcs(d, U6, U2);
  all_arcs(d, U6, U4);
  complete_inside(d, {U3, U5, U6});
  disjoint_two_cycles(d, U1);
  // U2 has no internal arcs.

  // The U4 vertex takes its single U2 predecessor from the first U2 vertex,
  // whose remaining budget toward U1 drops to t-1; then each U1 vertex takes
  // exactly t predecessors from U2 (capacity t per supplier toward U1+U4).
  std::vector<int> suppliers;
  std::vector<int> capacity;
  for (int v = U2.begin; v < U2.end; ++v) {
    suppliers.push_back(v);
    capacity.push_back(t);
  }
  d.set_arc(U2.begin, U4.begin);
  capacity[0] -= 1;
  assign_predecessors(d, suppliers, capacity, U1, t);

  return finish(std::move(d), make_spec(Family::d3, n, t, sizes));
}

Construction build_extremal(int n, int t) {
  check_domain(n, t, "build_extremal");
  const long long h1 = floor2(n - t);
  const long long h2 = floor2(n - t - 1);
  if (h1 % 2 == 0) return build_d1(n, t);
  if (h2 % 2 == 0) return build_d2(n, t);
  return build_d3(n, t);
}

}  // namespace turan
