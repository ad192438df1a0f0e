#include "zonotile/circuits.hpp"

#include <algorithm>
#include <sstream>

namespace zonotile {

Configuration Configuration::from_points(int d, std::vector<RatVec> pts) {
  if (d < 1) throw InputError("configuration: d must be positive");
  if (static_cast<int>(pts.size()) < d)
    throw InputError("configuration: need at least d points");
  if (static_cast<int>(pts.size()) > kMaxGroundSet)
    throw InputError("configuration: at most 30 points supported");
  Configuration cfg;
  cfg.d = d;
  for (const RatVec& p : pts)
    if (static_cast<int>(p.size()) != d - 1)
      throw InputError("configuration: every point must have d-1 coordinates");
  cfg.points = std::move(pts);
  cfg.lift.reserve(cfg.points.size());
  for (const RatVec& p : cfg.points) {
    RatVec v = p;
    v.push_back(Rat(1));
    cfg.lift.push_back(std::move(v));
  }
  RatMat m(d, cfg.n());
  for (int c = 0; c < cfg.n(); ++c)
    for (int r = 0; r < d; ++r) m.at(r, c) = cfg.lift[c][r];
  if (rank(m) != d)
    throw InputError("configuration: points do not affinely span Q^{d-1}");
  return cfg;
}

RatMat Configuration::lift_columns(Mask cols) const {
  std::vector<int> idx = mask_to_vec(cols);
  RatMat m(d, static_cast<int>(idx.size()));
  for (size_t c = 0; c < idx.size(); ++c)
    for (int r = 0; r < d; ++r) m.at(r, static_cast<int>(c)) = lift[idx[c]][r];
  return m;
}

Rat basis_volume(const Configuration& cfg, Mask B) {
  if (popcount(B) != cfg.d)
    throw InputError("basis_volume: subset must have exactly d elements");
  return det(cfg.lift_columns(B)).abs();
}

std::vector<Mask> bases(const Configuration& cfg) {
  std::vector<Mask> out;
  for (Mask B : subsets_of_size(cfg.n(), cfg.d))
    if (!basis_volume(cfg, B).is_zero()) out.push_back(B);
  return out;
}

std::string signed_set_to_string(const SignedSet& s) {
  return "(" + mask_to_string(s.plus) + "," + mask_to_string(s.minus) + ")";
}

namespace {

// Signs of the (unique up to scale) kernel vector of the lift columns in
// `support`, when that kernel is one-dimensional; empty otherwise.
std::optional<SignedSet> dependence_signs(const Configuration& cfg, Mask support) {
  RatMat m = cfg.lift_columns(support);
  std::vector<RatVec> ker = kernel_basis(m);
  if (ker.size() != 1) return std::nullopt;
  std::vector<int> idx = mask_to_vec(support);
  SignedSet s;
  for (size_t i = 0; i < idx.size(); ++i) {
    int sg = ker[0][i].sign();
    if (sg == 0) return std::nullopt;  // not a full-support dependence
    if (sg > 0)
      s.plus |= Mask{1} << idx[i];
    else
      s.minus |= Mask{1} << idx[i];
  }
  if (contains(s.minus, idx[0])) s = s.negated();
  return s;
}

}  // namespace

std::vector<Circuit> circuits(const Configuration& cfg) {
  std::vector<Circuit> out;
  // Rank-d circuits have supports of size at most d+1; a support S is a
  // circuit support iff its columns have a one-dimensional kernel with no
  // zero coordinate (minimality).
  for (int s = 2; s <= cfg.d + 1; ++s) {
    for (Mask S : subsets_of_size(cfg.n(), s)) {
      std::optional<SignedSet> c = dependence_signs(cfg, S);
      if (c) out.push_back(*c);
    }
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) {
    if (a.support() != b.support()) return a.support() < b.support();
    return a.plus < b.plus;
  });
  return out;
}

std::vector<Mask> contraction_bases(const Configuration& cfg, const Circuit& c) {
  Mask supp = c.support();
  int want = cfg.d - (popcount(supp) - 1);
  std::vector<Mask> out;
  Mask rest = full_mask(cfg.n()) & ~supp;
  std::vector<int> rest_idx = mask_to_vec(rest);
  for (Mask pick : subsets_of_size(static_cast<int>(rest_idx.size()), want)) {
    Mask J = 0;
    for (int b : mask_to_vec(pick)) J |= Mask{1} << rest_idx[b];
    bool ok = true;
    for (int j : mask_to_vec(supp)) {
      Mask B = (supp & ~(Mask{1} << j)) | J;
      if (basis_volume(cfg, B).is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(J);
  }
  return out;
}

RatVec dependence_vector(const Configuration& cfg, const Circuit& c, Mask J) {
  Mask supp = c.support();
  if (J & supp) throw InputError("dependence_vector: J meets the circuit support");
  RatVec v(cfg.n(), Rat(0));
  for (int j : mask_to_vec(supp)) {
    Mask B = (supp & ~(Mask{1} << j)) | J;
    if (popcount(B) != cfg.d || basis_volume(cfg, B).is_zero())
      throw InputError("dependence_vector: J is not a contraction basis of the circuit");
    v[j] = Rat(c.sign_of(j)) * basis_volume(cfg, B);
  }
  return v;
}

RatVec dependence_vector(const Configuration& cfg, const Circuit& c) {
  RatVec total(cfg.n(), Rat(0));
  for (Mask J : contraction_bases(cfg, c)) total = total + dependence_vector(cfg, c, J);
  return total;
}

}  // namespace zonotile
