#pragma once

#include "zonotile/tiling.hpp"

#include <set>

namespace zonotile {

/// Raised when a tiling does not admit a flip along the requested circuit.
struct FlipUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The local data of a flip along a circuit: per contraction basis J, the
/// common residual label set A(F, J) and its level |A(F, J)| + 1.
struct FlipRecord {
  Circuit circuit;          // canonical representative
  int orientation = +1;     // sign s with sigma_T(s * circuit) = +1
  std::vector<Mask> ctr;    // contraction bases J
  std::vector<Mask> parts;  // A(F, J), aligned with ctr
  std::vector<int> levels;  // |A(F, J)| + 1, aligned with ctr
  std::set<int> level_set;
};

/// Computes the flip data of `t` along the circuit with the given support;
/// the sign is chosen internally so the oriented circuit is positive for `t`.
/// Throws InputError when c is not a circuit and FlipUnavailable when the
/// tiles around the circuit do not share a residual label set.
FlipRecord flip_data(const Tiling& t, const Circuit& c);

/// Applies the flip and returns the new tiling, fully validated. The flip
/// toggles membership of each support element in the labels of the bases
/// (supp - j) + J and leaves every other tile unchanged.
Tiling apply_flip(const Tiling& t, const Circuit& c);

/// Circuits along which `t` admits a (combinatorial) flip, i.e. apply_flip
/// succeeds and produces a valid tiling. No realizability filtering.
std::vector<Circuit> combinatorial_flips(const Tiling& t);

/// Circuits whose sign can be negated while keeping the orientation
/// realizable by a height vector, decided by the exact feasibility oracle.
/// For a regular tiling these are exactly the available flips.
std::vector<Circuit> available_wall_flips(const CircuitOrientation& o);

}  // namespace zonotile
