#include "turan/formulas.hpp"

namespace turan {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

void check_positive(long long n, long long t, const char* who) {
  if (n < 1 || t < 1)
    throw std::invalid_argument(std::string(who) + ": n and t must be positive");
}

}  // namespace

long long g_value(long long n, long long t) {
  check_positive(n, t, "g_value");
  return ceil_div(n + t, 2) * floor_div(n - t, 2) + t * n + 1;
}

long long phi_value(long long n, long long t) {
  check_positive(n, t, "phi_value");
  long long half = floor_div(n - t, 2);
  return (half % 2 == 0) ? g_value(n, t) - 1 : g_value(n, t);
}

Rational phi_lower_estimate(long long n, long long t) {
  if (t < 1 || n <= t)
    throw std::invalid_argument("phi_lower_estimate: requires n >= t+1, t >= 1");
  return Rational(n * n - t * t, 4) + Rational(t * n - t);
}

long long theorem_threshold(long long t) {
  if (t < 2) throw std::invalid_argument("theorem_threshold: requires t >= 2");
  long long cubic = t * t * t + 4 * t * t + 3 * t + 4;
  long long quadratic = ceil_div(17 * t * t, 2) + 30 * t + 27;
  return std::max(cubic, quadratic);
}

std::string to_string(BoundRegime r) {
  switch (r) {
    case BoundRegime::theorem_exact: return "theorem-exact";
    case BoundRegime::theorem_interval: return "theorem-interval";
    case BoundRegime::construction_only: return "construction-only";
    case BoundRegime::vacuous: return "vacuous";
  }
  throw std::logic_error("to_string: bad regime");
}

ExBounds ex_bounds(long long n, long long t) {
  if (n < 1) throw std::invalid_argument("ex_bounds: n must be positive");
  if (t < 2) throw std::invalid_argument("ex_bounds: requires t >= 2");
  const long long universe = n * (n - 1);
  if (n >= theorem_threshold(t)) {
    long long g = g_value(n, t);
    if (floor_div(n - t, 2) % 2 != 0)
      return {g, g, true, BoundRegime::theorem_exact};
    return {g - 1, g, false, BoundRegime::theorem_interval};
  }
  if (n >= t + 6)
    return {phi_value(n, t), universe, false, BoundRegime::construction_only};
  if (n <= t + 2)
    return {universe, universe, true, BoundRegime::theorem_exact};
  return {0, universe, false, BoundRegime::vacuous};
}

}  // namespace turan
