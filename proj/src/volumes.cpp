#include "zonotile/volumes.hpp"

#include "zonotile/eulerian.hpp"
#include "zonotile/tiling.hpp"

#include <algorithm>

namespace zonotile {

namespace {

// gamma profile of an arbitrary sub-configuration (indices 0..n-d), read off
// one deterministic regular tiling.
std::vector<Rat> gamma_profile(const Configuration& cfg) {
  ContextPtr ctx = Context::make(cfg);
  Tiling t = tiling_from_orientation(
      orientation_from_heights(ctx, canonical_height(*ctx)), /*validate=*/false);
  std::vector<Rat> gamma(cfg.n() - cfg.d + 1, Rat(0));
  for (int i = 0; i < t.num_tiles(); ++i)
    gamma[popcount(t.label_at(i))] += ctx->volume[i];
  return gamma;
}

std::shared_ptr<const LevelData> compute_level_data(const Context& ctx) {
  auto out = std::make_shared<LevelData>();
  const Configuration& cfg = ctx.cfg;
  int n = cfg.n(), d = cfg.d;
  out->gamma = gamma_profile(cfg);

  out->drop.assign(n - d + 1, RatVec(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    std::vector<RatVec> pts;
    for (int j = 0; j < n; ++j)
      if (j != i) pts.push_back(cfg.points[j]);
    RatMat m(d, n - 1);
    for (int c = 0; c < n - 1; ++c)
      for (int r = 0; r < d - 1; ++r) m.at(r, c) = pts[c][r];
    for (int c = 0; c < n - 1; ++c) m.at(d - 1, c) = Rat(1);
    bool coloop = (n - 1 < d) || rank(m) < d;
    std::vector<Rat> sub;
    if (!coloop) sub = gamma_profile(Configuration::from_points(d, pts));
    for (int k = 0; k <= n - d; ++k) {
      Rat minus = (!coloop && k < static_cast<int>(sub.size())) ? sub[k] : Rat(0);
      out->drop[k][i] = out->gamma[k] - minus;
    }
  }

  out->beta.assign(n + 1, Rat(0));
  for (int k = 1; k <= n - 1; ++k) {
    if (d == 1) {
      out->beta[k] = Rat(1);
      continue;
    }
    Rat b;
    for (int r = 1; r <= d - 1; ++r) {
      int kk = k - r;
      if (kk < 0 || kk > n - d) continue;
      b += out->gamma[kk] * Rat(EulerianTable::value(d - 1, r - 1)) /
           Rat(EulerianTable::factorial(d - 1));
    }
    out->beta[k] = b;
  }
  return out;
}

}  // namespace

const LevelData& level_data(const Context& ctx) {
  std::call_once(ctx.level_once, [&ctx] { ctx.level_cache = compute_level_data(ctx); });
  return *ctx.level_cache;
}

Rat level_volume(const Context& ctx, int k) {
  const LevelData& ld = level_data(ctx);
  if (k < 0 || k > ctx.n() - ctx.d()) return Rat(0);
  return ld.gamma[k];
}

RatVec level_volume_drop(const Context& ctx, int k) {
  const LevelData& ld = level_data(ctx);
  if (k < 0 || k > ctx.n() - ctx.d()) return RatVec(ctx.n(), Rat(0));
  return ld.drop[k];
}

Rat section_volume(const Context& ctx, int k) {
  if (k < 1 || k > ctx.n() - 1) return Rat(0);
  return level_data(ctx).beta[k];
}

Rat section_volume_geometric(const Context& ctx, int k) {
  const Configuration& cfg = ctx.cfg;
  int n = cfg.n(), d = cfg.d;
  if (k < 1 || k > n - 1) return Rat(0);
  if (d == 1) return Rat(1);
  if (d == 2) {
    std::vector<Rat> xs;
    for (const RatVec& p : cfg.points) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    Rat lo, hi;
    for (int i = 0; i < k; ++i) lo += xs[i];
    for (int i = n - k; i < n; ++i) hi += xs[i];
    return hi - lo;
  }
  if (d == 3) {
    // Area of the convex hull of the k-subset sums of the plane points.
    std::vector<std::array<Rat, 2>> pts;
    for (Mask S : subsets_of_size(n, k)) {
      Rat x, y;
      for (int i : mask_to_vec(S)) {
        x += cfg.points[i][0];
        y += cfg.points[i][1];
      }
      pts.push_back({x, y});
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto cross = [](const std::array<Rat, 2>& o, const std::array<Rat, 2>& a,
                    const std::array<Rat, 2>& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    // Monotone chain.
    std::vector<std::array<Rat, 2>> hull;
    for (int pass = 0; pass < 2; ++pass) {
      size_t start = hull.size();
      for (const auto& p : pts) {
        while (hull.size() >= start + 2 &&
               cross(hull[hull.size() - 2], hull[hull.size() - 1], p).sign() <= 0)
          hull.pop_back();
        hull.push_back(p);
      }
      hull.pop_back();
      std::reverse(pts.begin(), pts.end());
    }
    Rat twice;
    for (size_t i = 0; i < hull.size(); ++i) {
      const auto& a = hull[i];
      const auto& b = hull[(i + 1) % hull.size()];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return twice.abs() / Rat(2);
  }
  throw InputError("section_volume_geometric: only d <= 3 supported");
}

}  // namespace zonotile
