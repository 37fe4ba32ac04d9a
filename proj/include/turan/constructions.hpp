#pragma once

#include <string>

#include "turan/digraph.hpp"

namespace turan {

enum class Family { d1, d2, d3 };

std::string to_string(Family f);

// Class decomposition of a construction: classes occupy contiguous ascending
// vertex ranges in the order U1, U2, U3, U4 (, U5, U6).
struct PartitionSpec {
  Family family;
  int n = 0;
  int t = 0;
  std::vector<int> sizes;     // 4 classes for d1, 6 for d2/d3
  std::vector<int> class_of;  // vertex -> class index (0-based)

  int class_begin(int k) const;
  int class_end(int k) const;
  VertexSet class_set(int k) const;
};

// Class sizes for a family at (n, t); validates the family's domain and
// parity preconditions. Sizes always sum to n.
std::vector<int> partition_sizes(Family f, int n, int t);

struct Construction {
  Digraph graph;
  PartitionSpec spec;
};

// The three extremal families. Every builder verifies freeness of the
// result at bound t before returning; a violation is a defect and throws.
//
// d1 needs t >= 2, n >= t+6 and always has g(n,t)-1 arcs.
// d2 additionally needs floor((n-t)/2) odd and floor((n-t-1)/2) even.
// d3 additionally needs both floors odd. d2/d3 have phi(n,t) arcs.
Construction build_d1(int n, int t);
Construction build_d2(int n, int t);
Construction build_d3(int n, int t);

// Parity dispatch to whichever family attains phi(n,t) arcs:
// floor((n-t)/2) even -> d1; odd with floor((n-t-1)/2) even -> d2;
// both odd -> d3.
Construction build_extremal(int n, int t);

}  // namespace turan
