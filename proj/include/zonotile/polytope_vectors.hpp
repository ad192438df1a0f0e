#pragma once

#include "zonotile/tiling.hpp"

namespace zonotile {

/// Volume-weighted indicator of the level-k tile labels:
/// sum over tiles with |A| = k of vol(B) e_A. Zero vector outside [1, n-d].
RatVec level_vector(const Tiling& t, int k);

/// The Gelfand-Kapranov-Zelevinsky vertex of the triangulation carried by the
/// empty-label tiles: sum of vol(B)/(d-1)! e_B over tiles with A empty.
RatVec gkz_vector(const Tiling& t);

/// Vertex of the fiber zonotope: (1/Vol Z) sum of vol(B) (e_A + e_B / 2).
RatVec fiber_vector(const Tiling& t);

/// Vertex of the fiber polytope of the hypersimplex projection, for
/// k in [1, n-1]; Eulerian-weighted combination over levels k-d+1 .. k-1.
RatVec section_fiber_vector(const Tiling& t, int k);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // offending k and values on failure
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Evaluates the four vertex identities relating the fiber/GKZ vectors and
/// the level vectors (including the duality with the opposite tiling), each
/// by computing both sides independently.
IdentityReport verify_vertex_identities(const Tiling& t);

}  // namespace zonotile
