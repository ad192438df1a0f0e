#pragma once

#include "zonotile/context.hpp"

namespace zonotile {

/// Per-configuration volume statistics. `gamma[k]` is the total basis volume
/// of the tiles at level k (independent of the tiling used to compute it),
/// `drop[k][i]` the amount gamma[k] falls when point i is deleted (with the
/// convention that deleting a coloop drops everything), and `beta[k]` the
/// (d-1)-volume of the horizontal section of the zonotope at height k.
struct LevelData {
  std::vector<Rat> gamma;      // indices 0..n-d
  std::vector<RatVec> drop;    // indices 0..n-d, each of size n
  std::vector<Rat> beta;       // indices 0..n
};

/// Computed from one deterministic regular tiling; cached on the context.
const LevelData& level_data(const Context& ctx);

/// gamma_k; zero outside [0, n-d].
Rat level_volume(const Context& ctx, int k);

/// delta(k): coordinate i equals gamma_k minus gamma_k of the configuration
/// with point i deleted. Zero vector outside [0, n-d].
RatVec level_volume_drop(const Context& ctx, int k);

/// beta_k = Vol^{d-1}(Q_k), via the Eulerian-weighted combination of the
/// gamma values; zero outside [1, n-1]. For d = 1 a section is a single
/// point, of measure one.
Rat section_volume(const Context& ctx, int k);

/// Independent geometric route (d <= 3 only): measures the section of the
/// zonotope directly from the projected subset sums.
Rat section_volume_geometric(const Context& ctx, int k);

}  // namespace zonotile
