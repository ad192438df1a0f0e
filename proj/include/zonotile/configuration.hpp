#pragma once

#include "zonotile/linalg.hpp"
#include "zonotile/smallset.hpp"

namespace zonotile {

/// Raised on malformed user input (bad points, degenerate heights, wrong
/// sizes). The CLI maps this family to its input-error exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// n points in Q^{d-1} together with their lift to Q^d (last coordinate 1).
/// The lift must linearly span Q^d; this is checked on construction.
struct Configuration {
  int d = 0;
  std::vector<RatVec> points;  // n entries, each of size d-1
  std::vector<RatVec> lift;    // derived, each of size d

  int n() const { return static_cast<int>(points.size()); }

  static Configuration from_points(int d, std::vector<RatVec> pts);

  /// Column submatrix of the lift indexed by a mask, in increasing order.
  RatMat lift_columns(Mask cols) const;
};

/// |det| of the lift columns indexed by B; zero iff B is not a basis.
/// Throws InputError unless |B| = d.
Rat basis_volume(const Configuration& cfg, Mask B);

/// All d-subsets B with basis_volume(B) > 0, in lexicographic mask order.
std::vector<Mask> bases(const Configuration& cfg);

}  // namespace zonotile
