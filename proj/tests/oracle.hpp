#pragma once

// Slow reference implementations, independent of the library's engines.
// Kept deliberately naive: plain map-based multiplication, no pruning, brute
// extremality checks. The fast paths are tested against these.

#include <vector>

#include "lgtoric/laurent.hpp"

namespace lgtoric::oracle {

/// Constant terms of f^0..f^N by repeated full multiplication.
std::vector<Int> naive_periods(const LaurentPolynomial& f, long N);

/// Full expansion of f^i, no pruning.
LaurentPolynomial naive_power(const LaurentPolynomial& f, long i);

/// Brute-force extremality: p is a vertex of conv(points) iff it is not a
/// convex combination of the others (exact rational elimination).
bool is_extreme_point(const Vec& p, const std::vector<Vec>& others);

} // namespace lgtoric::oracle
