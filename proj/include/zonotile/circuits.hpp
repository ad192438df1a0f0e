#pragma once

#include "zonotile/configuration.hpp"

namespace zonotile {

/// A pair of disjoint subsets of [n].
struct SignedSet {
  Mask plus = 0;
  Mask minus = 0;

  Mask support() const { return plus | minus; }
  SignedSet negated() const { return {minus, plus}; }
  int sign_of(int i) const { return contains(plus, i) ? +1 : (contains(minus, i) ? -1 : 0); }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

/// A signed set whose support is a minimal linearly dependent subset of the
/// lift. Stored canonically: the smallest support element lies in `plus`.
using Circuit = SignedSet;

std::string signed_set_to_string(const SignedSet& s);

/// All circuits of the lift of `cfg`, one canonical representative per +- pair,
/// sorted by (support, plus) as masks.
std::vector<Circuit> circuits(const Configuration& cfg);

/// Bases of the oriented matroid contracted by the support of C: all J
/// disjoint from supp(C) such that J together with supp(C) minus any one
/// element is a basis.
std::vector<Mask> contraction_bases(const Configuration& cfg, const Circuit& c);

/// The linear-dependence vector supported on supp(C), with coordinates
/// sign_C(j) * basis_volume(supp(C) \ {j} | J). Requires J to be a
/// contraction basis of C.
RatVec dependence_vector(const Configuration& cfg, const Circuit& c, Mask J);

/// Sum of dependence_vector over all contraction bases of C.
RatVec dependence_vector(const Configuration& cfg, const Circuit& c);

}  // namespace zonotile
