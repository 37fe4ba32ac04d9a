#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace turan {

using Rational = boost::rational<long long>;

// g(n,t) = ceil((n+t)/2) * floor((n-t)/2) + t*n + 1, evaluated exactly.
long long g_value(long long n, long long t);

// g(n,t)-1 when floor((n-t)/2) is even, g(n,t) otherwise.
long long phi_value(long long n, long long t);

// (n^2 - t^2)/4 + t*n - t as an exact rational; a lower estimate of phi
// for n >= t+1.
Rational phi_lower_estimate(long long n, long long t);

// Smallest integer n covered by the exact/interval result:
// max(t^3 + 4t^2 + 3t + 4, ceil(17 t^2 / 2) + 30t + 27). Requires t >= 2.
long long theorem_threshold(long long t);

enum class BoundRegime {
  theorem_exact,      // value pinned exactly
  theorem_interval,   // pinned to {g-1, g}
  construction_only,  // lower bound from an explicit free digraph
  vacuous,            // no claim
};

std::string to_string(BoundRegime r);

// Bounds on the maximum size of a free digraph of order n at bound t.
struct ExBounds {
  long long lower = 0;
  long long upper = 0;
  bool exact = false;
  BoundRegime regime = BoundRegime::vacuous;
};

// Regime dispatch:
//   n >= theorem_threshold(t): exact g when floor((n-t)/2) is odd,
//                              else the interval [g-1, g];
//   n >= t+6:                  [phi, n(n-1)] from the constructions;
//   n <= t+2:                  exact n(n-1), every digraph is free;
//   otherwise:                 vacuous [0, n(n-1)].
// Requires n >= 1 and t >= 2.
ExBounds ex_bounds(long long n, long long t);

}  // namespace turan
