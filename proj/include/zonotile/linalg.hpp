#pragma once

#include "zonotile/rational.hpp"

#include <optional>

namespace zonotile {

/// Dense rational matrix, row-major.
struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

/// Determinant by fraction-aware Gaussian elimination. Square only.
Rat det(RatMat m);

/// Rank over Q.
int rank(RatMat m);

/// Basis of the right kernel {x : M x = 0}, as rows. Entries are scaled to
/// primitive integer vectors (a positive multiple of a reduced echelon basis).
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Solves M x = b exactly; std::nullopt when inconsistent. For underdetermined
/// systems returns one solution (free variables set to zero).
std::optional<RatVec> solve(RatMat m, RatVec b);

/// The positive rescaling of v with coprime integer entries.
RatVec primitive_vector(RatVec v);

}  // namespace zonotile
