#pragma once

#include "zonotile/rational.hpp"

namespace zonotile {

/// Eulerian numbers E(d, r): permutations of [d] with exactly r descents.
/// Memoized; E(d, r) = 0 outside 0 <= r <= d-1 (except E(0, 0) = 1).
class EulerianTable {
 public:
  static const mpz_class& value(int d, int r);
  /// E(d, r) / d! as an exact rational.
  static Rat probability(int d, int r);
  static mpz_class factorial(int d);
};

}  // namespace zonotile
