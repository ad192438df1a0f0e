#pragma once

#include "zonotile/flips.hpp"
#include "zonotile/tiling.hpp"

#include <functional>

namespace zonotile {

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AtlasOptions {
  long long max_chambers = 20'000'000;
  bool record_adjacency = true;
};

/// The set of realizable generic circuit orientations (one per regular fine
/// zonotopal tiling), each with a witness height vector, plus the wall
/// adjacency between them.
class ChamberAtlas {
 public:
  ChamberAtlas(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  const ContextPtr& context() const { return ctx_; }
  int size() const { return static_cast<int>(orientations_.size()); }

  const std::vector<int8_t>& signs(int chamber) const { return orientations_[chamber]; }
  CircuitOrientation orientation(int chamber) const;
  const RatVec& witness(int chamber) const { return witnesses_[chamber]; }
  Tiling tiling(int chamber) const;
  const std::vector<Mask>& labels(int chamber) const { return labels_[chamber]; }

  struct Wall {
    int a, b;      // chamber ids, a < b
    int circuit;   // index into the context's circuit list
  };
  const std::vector<Wall>& walls() const { return walls_; }

  /// Levels of the flip crossing a wall (set of level(F, J) over J).
  std::set<int> wall_levels(const Wall& w) const;

  /// Finds the chamber of a generic height vector; -1 when absent (cannot
  /// happen for a complete atlas of the same configuration).
  int find(const CircuitOrientation& o) const;

 private:
  friend ChamberAtlas enumerate_regular(const ContextPtr&, const AtlasOptions&);
  ContextPtr ctx_;
  std::vector<std::vector<int8_t>> orientations_;
  std::vector<RatVec> witnesses_;
  std::vector<std::vector<Mask>> labels_;  // tile labels per chamber
  std::vector<Wall> walls_;
};

/// Breadth-first enumeration of all chambers of the secondary hyperplane
/// arrangement, starting from the canonical height. Neighbor candidates
/// negate one circuit pair; realizability is decided exactly (projection
/// witnesses, cached Farkas certificates, and the rational simplex oracle as
/// the final word).
ChamberAtlas enumerate_regular(const ContextPtr& ctx, const AtlasOptions& opt = {});

/// Streaming form: calls `visit` once per chamber with the orientation signs
/// and the tile labels; adjacency is not recorded. Used for counts on
/// configurations too large to keep a full atlas.
void for_each_regular_orientation(
    const ContextPtr& ctx,
    const std::function<void(const std::vector<int8_t>&, const std::vector<Mask>&)>& visit,
    const AtlasOptions& opt = {});

/// The vertex/edge data of the level-k polytope, read off the atlas.
struct HspSkeleton {
  int k = 0;
  std::vector<RatVec> vertices;            // distinct level vectors, sorted
  std::vector<int> representative;         // one chamber id per vertex
  std::vector<std::pair<int, int>> edges;  // vertex id pairs, a < b, deduped
  int dimension = 0;                       // affine dimension of the vertex set
  int diameter = 0;                        // eccentricity max over the 1-skeleton
};

HspSkeleton hsp_skeleton(const ChamberAtlas& atlas, int k);

/// k-equivalence classes: connected components of the wall graph using only
/// walls whose flip level set avoids k. Returns the class id per chamber and
/// checks the class/vertex bijection.
std::vector<int> k_equivalence_classes(const ChamberAtlas& atlas, int k);

}  // namespace zonotile
