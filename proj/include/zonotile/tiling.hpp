#pragma once

#include "zonotile/context.hpp"

namespace zonotile {

struct InvalidTiling : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A labeled tile: the parallelepiped spanned by the basis B, shifted by the
/// sum of the lift vectors in A. Tiles compare by the label pair, never by
/// geometry.
struct Tile {
  Mask A = 0;
  Mask B = 0;
  friend bool operator==(const Tile&, const Tile&) = default;
};

/// A fine zonotopal tiling, stored combinatorially as the assignment
/// basis -> label set A (total over all bases, per the bases bijection).
class Tiling {
 public:
  Tiling(ContextPtr ctx, std::vector<Mask> labels);

  const ContextPtr& context() const { return ctx_; }
  const Configuration& config() const { return ctx_->cfg; }
  int n() const { return ctx_->n(); }
  int d() const { return ctx_->d(); }

  int num_tiles() const { return static_cast<int>(labels_.size()); }
  Mask label_at(int basis_idx) const { return labels_[basis_idx]; }
  Mask basis_at(int basis_idx) const { return ctx_->basis_list[basis_idx]; }
  Tile tile_at(int basis_idx) const { return {labels_[basis_idx], basis_at(basis_idx)}; }
  const std::vector<Mask>& labels() const { return labels_; }

  /// Label set of a specific basis; throws when B is not a basis.
  Mask label_of(Mask B) const;

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.labels_ == b.labels_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Mask> labels_;
};

/// Labels built from a circuit orientation via external semi-activity: j is
/// in the label of B iff the circuit supported in B + {j} with j positive is
/// oriented positively.
std::vector<Mask> labels_from_orientation(const CircuitOrientation& o);

/// The regular tiling of a generic height vector. Validates the result.
Tiling tiling_from_heights(const ContextPtr& ctx, const RatVec& h);

/// As above but from an orientation already known to be realizable or
/// otherwise consistent; set `validate` for the full consistency check.
Tiling tiling_from_orientation(const CircuitOrientation& o, bool validate = true);

/// All vertex labels: subsets I with A <= I <= A + B for some tile. Sorted.
std::vector<Mask> vertex_labels(const Tiling& t);

/// The orientation induced by the vertex labels (each circuit must be
/// oriented exactly one way; otherwise InvalidTiling).
CircuitOrientation orientation_from_tiling(const Tiling& t);

/// Checks the bases bijection (structural) and the one-way orientation
/// property; throws InvalidTiling with a description on failure.
void validate_tiling(const Tiling& t);

/// Tile labels complemented within the ground set: A -> [n] - (A + B).
Tiling opposite(const Tiling& t);

}  // namespace zonotile
