#include "zonotile/polytope_vectors.hpp"

#include "zonotile/eulerian.hpp"
#include "zonotile/volumes.hpp"

namespace zonotile {

namespace {

void add_indicator(RatVec& acc, Mask s, const Rat& w) {
  for (int i : mask_to_vec(s)) acc[i] += w;
}

}  // namespace

RatVec level_vector(const Tiling& t, int k) {
  const Context& ctx = *t.context();
  RatVec v(ctx.n(), Rat(0));
  if (k < 1 || k > ctx.n() - ctx.d()) return v;
  for (int i = 0; i < t.num_tiles(); ++i)
    if (popcount(t.label_at(i)) == k) add_indicator(v, t.label_at(i), ctx.volume[i]);
  return v;
}

RatVec gkz_vector(const Tiling& t) {
  const Context& ctx = *t.context();
  Rat scale = Rat(1) / Rat(EulerianTable::factorial(ctx.d() - 1));
  RatVec v(ctx.n(), Rat(0));
  for (int i = 0; i < t.num_tiles(); ++i)
    if (t.label_at(i) == 0) add_indicator(v, t.basis_at(i), ctx.volume[i] * scale);
  return v;
}

RatVec fiber_vector(const Tiling& t) {
  const Context& ctx = *t.context();
  RatVec v(ctx.n(), Rat(0));
  Rat half(1, 2);
  for (int i = 0; i < t.num_tiles(); ++i) {
    add_indicator(v, t.label_at(i), ctx.volume[i]);
    add_indicator(v, t.basis_at(i), ctx.volume[i] * half);
  }
  Rat inv = Rat(1) / ctx.zonotope_volume;
  for (Rat& x : v) x *= inv;
  return v;
}

RatVec section_fiber_vector(const Tiling& t, int k) {
  const Context& ctx = *t.context();
  int n = ctx.n(), d = ctx.d();
  if (k < 1 || k > n - 1)
    throw InputError("section_fiber_vector: k must lie in [1, n-1]");
  RatVec v(n, Rat(0));
  if (d == 1) {
    // The section is a point; its fiber polytope is the hypersimplex itself
    // and the tiling picks out the single vertex label of size k.
    for (Mask s : vertex_labels(t))
      if (popcount(s) == k) {
        add_indicator(v, s, Rat(1));
        return v;
      }
    throw std::logic_error("section_fiber_vector: missing vertex label");
  }
  for (int i = 0; i < t.num_tiles(); ++i) {
    int r = k - popcount(t.label_at(i));
    if (r < 1 || r > d - 1) continue;
    Rat e(EulerianTable::value(d - 1, r - 1));
    add_indicator(v, t.label_at(i), ctx.volume[i] * e * Rat(d));
    add_indicator(v, t.basis_at(i), ctx.volume[i] * e * Rat(r));
  }
  Rat denom = Rat(EulerianTable::factorial(d)) * section_volume(ctx, k);
  Rat inv = Rat(1) / denom;
  for (Rat& x : v) x *= inv;
  return v;
}

namespace {

std::string diff_detail(int k, const RatVec& lhs, const RatVec& rhs) {
  return "k=" + std::to_string(k) + " lhs=" + to_string(lhs) + " rhs=" + to_string(rhs);
}

}  // namespace

IdentityReport verify_vertex_identities(const Tiling& t) {
  const Context& ctx = *t.context();
  int n = ctx.n(), d = ctx.d();
  IdentityReport rep;

  std::vector<RatVec> lv(n - d + 2);
  for (int k = 0; k <= n - d + 1; ++k) lv[k] = level_vector(t, k);
  auto level = [&](int k) -> RatVec {
    if (k < 0 || k > n - d + 1) return RatVec(n, Rat(0));
    return lv[k];
  };

  {
    // Fiber vector against the level vectors and half the total drop.
    RatVec rhs(n, Rat(0));
    for (int k = 1; k <= n - d; ++k) rhs = rhs + level(k);
    RatVec drops(n, Rat(0));
    for (int k = 0; k <= n - d; ++k) drops = drops + level_volume_drop(ctx, k);
    rhs = rhs + Rat(1, 2) * drops;
    Rat inv = Rat(1) / ctx.zonotope_volume;
    for (Rat& x : rhs) x *= inv;
    RatVec lhs = fiber_vector(t);
    bool ok = lhs == rhs;
    rep.checks.push_back({"fiber-sum", ok, ok ? "" : diff_detail(-1, lhs, rhs)});
  }

  {
    // Section fiber vectors against the Eulerian-weighted combination.
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= n - 1 && ok; ++k) {
      RatVec rhs(n, Rat(0));
      for (int r = 0; r <= d - 1; ++r)
        rhs = rhs + Rat(EulerianTable::value(d, r)) * level(k - r);
      for (int r = 1; r <= d - 1; ++r)
        rhs = rhs + Rat(r) * Rat(EulerianTable::value(d - 1, r - 1)) *
                        level_volume_drop(ctx, k - r);
      Rat inv = Rat(1) / (Rat(EulerianTable::factorial(d)) * section_volume(ctx, k));
      for (Rat& x : rhs) x *= inv;
      RatVec lhs = section_fiber_vector(t, k);
      if (!(lhs == rhs)) {
        ok = false;
        detail = diff_detail(k, lhs, rhs);
      }
    }
    rep.checks.push_back({"section-fiber-k", ok, detail});
  }

  {
    // GKZ vector against level one plus the bottom drop.
    RatVec rhs = level(1) + level_volume_drop(ctx, 0);
    Rat inv = Rat(1) / Rat(EulerianTable::factorial(d - 1));
    for (Rat& x : rhs) x *= inv;
    RatVec lhs = gkz_vector(t);
    bool ok = lhs == rhs;
    rep.checks.push_back({"gkz", ok, ok ? "" : diff_detail(-1, lhs, rhs)});
  }

  {
    // Duality with the opposite tiling.
    Tiling op = opposite(t);
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= n - d && ok; ++k) {
      RatVec lhs = level(k) + level_vector(op, n - d - k + 1);
      RatVec rhs(n, level_volume(ctx, k - 1));
      rhs = rhs - level_volume_drop(ctx, k - 1);
      if (!(lhs == rhs)) {
        ok = false;
        detail = diff_detail(k, lhs, rhs);
      }
    }
    rep.checks.push_back({"duality", ok, detail});
  }

  return rep;
}

}  // namespace zonotile
