#pragma once

#include "zonotile/circuits.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace zonotile {

struct LevelData;

/// Immutable per-configuration caches: bases with volumes, circuits with
/// their dependence vectors and contraction bases, and the lookup table that
/// drives tiling reconstruction from a circuit orientation. Built once and
/// shared; safe for concurrent reads.
struct Context {
  Configuration cfg;

  std::vector<Mask> basis_list;  // lexicographic mask order
  std::unordered_map<Mask, int> basis_index;
  std::vector<Rat> volume;  // aligned with basis_list
  Rat zonotope_volume;      // sum of all basis volumes

  std::vector<Circuit> circuit_list;  // canonical, sorted
  std::unordered_map<Mask, int> circuit_by_support;
  std::vector<RatVec> alpha;                  // dependence_vector per circuit
  std::vector<std::vector<Mask>> ctr_bases;   // contraction bases per circuit

  // For basis B and j outside B there is a unique circuit supported in
  // B + {j} containing j. A label j belongs to the tile of B exactly when
  // that circuit's orientation equals `want`.
  struct ExtEntry {
    int8_t j;
    int32_t circuit;
    int8_t want;  // +1 when j lies in the plus part of the canonical circuit
  };
  std::vector<std::vector<ExtEntry>> ext;  // aligned with basis_list

  // Lazily computed level statistics (see volumes.hpp).
  mutable std::once_flag level_once;
  mutable std::shared_ptr<const LevelData> level_cache;

  int n() const { return cfg.n(); }
  int d() const { return cfg.d; }
  int num_bases() const { return static_cast<int>(basis_list.size()); }
  int num_circuits() const { return static_cast<int>(circuit_list.size()); }

  const Circuit& circuit_at(int idx) const { return circuit_list[idx]; }

  /// Index of the canonical circuit with the given support; -1 if none.
  int find_circuit(Mask support) const {
    auto it = circuit_by_support.find(support);
    return it == circuit_by_support.end() ? -1 : it->second;
  }

  static std::shared_ptr<const Context> make(Configuration cfg);
};

using ContextPtr = std::shared_ptr<const Context>;

/// A total map from canonical circuits to +-1, tied to its context.
struct CircuitOrientation {
  ContextPtr ctx;
  std::vector<int8_t> sign;  // aligned with ctx->circuit_list

  int of(const Circuit& c) const;  // sign under canonicalization
  friend bool operator==(const CircuitOrientation& a, const CircuitOrientation& b) {
    return a.sign == b.sign;
  }
};

struct NonGenericHeight : InputError {
  Circuit witness;
  explicit NonGenericHeight(const Circuit& c)
      : InputError("non-generic height vector: orthogonal to the dependence vector of circuit " +
                   signed_set_to_string(c)),
        witness(c) {}
};

/// True iff <h, alpha(C)> is nonzero for every circuit.
bool is_generic(const Context& ctx, const RatVec& h);

/// Signs of <h, alpha(C)>; throws NonGenericHeight naming a violating circuit.
CircuitOrientation orientation_from_heights(const ContextPtr& ctx, const RatVec& h);

/// Deterministic generic height: h_i = M^(n-i) for the smallest power-of-two
/// M that avoids every hyperplane (doubling on failure).
RatVec canonical_height(const Context& ctx);

}  // namespace zonotile
