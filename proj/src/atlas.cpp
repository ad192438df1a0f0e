#include "zonotile/atlas.hpp"

#include "zonotile/polytope_vectors.hpp"
#include "zonotile/simplex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <map>
#include <unordered_map>

namespace zonotile {

namespace {

constexpr int kMaxDim = 16;       // reduced coordinates kept in fixed arrays
constexpr int kMaxCircuits = 128;
constexpr int64_t kRowBound = int64_t{1} << 24;   // |u| entries on the fast path
constexpr int64_t kWitBound = int64_t{1} << 40;   // |z| entries on the fast path

using I128 = __int128;

// ---------------------------------------------------------------------------
// Orientation keys: one bit per circuit (set = positive).

struct Key {
  std::array<uint64_t, 2> w{0, 0};
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    uint64_t h = k.w[0] * 0x9e3779b97f4a7c15ULL;
    h ^= (k.w[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return static_cast<size_t>(h * 0xbf58476d1ce4e5b9ULL);
  }
};

Key key_of(const std::vector<int8_t>& signs) {
  Key k;
  for (size_t i = 0; i < signs.size(); ++i)
    if (signs[i] > 0) k.w[i >> 6] |= uint64_t{1} << (i & 63);
  return k;
}

void flip_bit(Key& k, int i) { k.w[i >> 6] ^= uint64_t{1} << (i & 63); }

bool bit_of(const Key& k, int i) { return (k.w[i >> 6] >> (i & 63)) & 1; }

// ---------------------------------------------------------------------------
// Witnesses in reduced coordinates: int64 on the fast path, mpz otherwise.

struct Witness {
  bool small = true;
  std::array<int64_t, kMaxDim> s{};
  std::vector<mpz_class> big;
};

// ---------------------------------------------------------------------------
// A dense feasibility simplex on doubles; only steers the exact machinery.

struct FloatLp {
  enum Status { kFeasible, kInfeasible, kUnknown };
  Status status = kUnknown;
  std::vector<double> x;
  std::vector<double> dual;
};

FloatLp float_feasible(const std::vector<std::array<double, kMaxDim>>& rows, int dim) {
  const int m = static_cast<int>(rows.size());
  const int cols = 2 * dim + 2 * m;
  const int slack0 = 2 * dim, art0 = 2 * dim + m;
  const double eps = 1e-9;
  std::vector<std::vector<double>> T(m, std::vector<double>(cols + 1, 0.0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) {
      T[i][j] = rows[i][j];
      T[i][dim + j] = -rows[i][j];
    }
    T[i][slack0 + i] = -1.0;
    T[i][art0 + i] = 1.0;
    T[i][cols] = 1.0;
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = art0 + i;
  std::vector<double> obj(cols + 1, 0.0);
  for (int j = 0; j <= cols; ++j) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += T[i][j];
    obj[j] = ((j >= art0 && j < cols) ? 1.0 : 0.0) - s;
  }
  FloatLp out;
  int iters = 0, cap = 40 * (m + dim);
  for (;;) {
    if (++iters > cap) return out;  // unknown
    int enter = -1;
    double best = -eps;
    for (int j = 0; j < cols; ++j)
      if (obj[j] < best) {
        best = obj[j];
        enter = j;
      }
    if (enter < 0) break;
    int leave = -1;
    double ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] < eps) continue;
      double r = T[i][cols] / T[i][enter];
      if (leave < 0 || r < ratio) {
        leave = i;
        ratio = r;
      }
    }
    if (leave < 0) return out;  // numerically unbounded: unknown
    double inv = 1.0 / T[leave][enter];
    for (int j = 0; j <= cols; ++j) T[leave][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || std::abs(T[i][enter]) < 1e-12) continue;
      double f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    double f = obj[enter];
    for (int j = 0; j <= cols; ++j) obj[j] -= f * T[leave][j];
    basis[leave] = enter;
  }
  double opt = -obj[cols];
  if (opt < 1e-7) {
    out.status = FloatLp::kFeasible;
    out.x.assign(dim, 0.0);
    for (int i = 0; i < m; ++i) {
      if (basis[i] < dim)
        out.x[basis[i]] += T[i][cols];
      else if (basis[i] < 2 * dim)
        out.x[basis[i] - dim] -= T[i][cols];
    }
  } else {
    out.status = FloatLp::kInfeasible;
    out.dual.assign(m, 0.0);
    for (int i = 0; i < m; ++i) out.dual[i] = 1.0 - obj[art0 + i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// The breadth-first chamber enumerator.

struct Enumerator {
  const Context& ctx;
  int m = 0;    // number of circuit pairs
  int dim = 0;  // reduced dimension (n - d)

  std::vector<RatVec> kernel;                    // rows spanning ker(lift)
  std::vector<RatVec> u_rat;                     // reduced constraint rows
  std::vector<std::array<int64_t, kMaxDim>> u64; // fast-path copy
  std::vector<std::vector<mpz_class>> umpz;
  std::vector<std::array<double, kMaxDim>> udbl;
  std::vector<std::array<double, kMaxDim>> uunit;  // rows scaled to unit length
  bool fast_rows = true;

  // Farkas certificate cache: minimal sign patterns with a positive
  // dependence. A candidate orientation matching a pattern (or its global
  // negation) on the support is infeasible. Patterns are matched against the
  // packed orientation key; hot certificates move to the front of their
  // per-circuit lists.
  struct Cert {
    Key support;  // bits of the participating circuits
    Key pattern;  // positive bits within the support
  };
  std::vector<Cert> certs;
  std::vector<std::vector<int>> certs_touching;  // per circuit
  std::unordered_map<std::string, int> cert_seen;

  // Statistics, surfaced for tuning.
  long long n_prefilter_hit = 0, n_cert_hit = 0, n_float = 0, n_exact_lp = 0;
  long long n_f_feas = 0, n_f_feas_fail = 0, n_f_infeas = 0, n_f_infeas_fail = 0, n_f_unknown = 0, n_x_feas = 0;

  explicit Enumerator(const Context& c) : ctx(c) {
    m = ctx.num_circuits();
    if (m > kMaxCircuits)
      throw ResourceLimit("enumerate_regular: too many circuits for the atlas key");
    RatMat lift(ctx.d(), ctx.n());
    for (int col = 0; col < ctx.n(); ++col)
      for (int row = 0; row < ctx.d(); ++row) lift.at(row, col) = ctx.cfg.lift[col][row];
    kernel = kernel_basis(lift);
    dim = static_cast<int>(kernel.size());
    if (dim > kMaxDim)
      throw ResourceLimit("enumerate_regular: reduced dimension exceeds the supported bound");

    u_rat.resize(m);
    u64.resize(m);
    umpz.resize(m);
    udbl.resize(m);
    uunit.resize(m);
    for (int c = 0; c < m; ++c) {
      RatVec a = primitive_vector(ctx.alpha[c]);
      RatVec row(dim);
      for (int r = 0; r < dim; ++r) row[r] = dot(kernel[r], a);
      row = primitive_vector(std::move(row));
      u_rat[c] = row;
      umpz[c].resize(dim);
      for (int r = 0; r < dim; ++r) {
        mpz_class v = row[r].num();
        umpz[c][r] = v;
        udbl[c][r] = v.get_d();
        if (!v.fits_slong_p() || std::abs(v.get_si()) > kRowBound)
          fast_rows = false;
        else
          u64[c][r] = v.get_si();
      }
      double norm = 0;
      for (int r = 0; r < dim; ++r) norm += udbl[c][r] * udbl[c][r];
      norm = std::sqrt(norm);
      for (int r = 0; r < dim; ++r) uunit[c][r] = udbl[c][r] / norm;
    }
  }

  int sign_dot(int c, const Witness& z) const {
    if (fast_rows && z.small) {
      I128 s = 0;
      for (int r = 0; r < dim; ++r) s += static_cast<I128>(u64[c][r]) * z.s[r];
      return s > 0 ? 1 : (s < 0 ? -1 : 0);
    }
    mpz_class s(0);
    for (int r = 0; r < dim; ++r) {
      if (z.small)
        s += umpz[c][r] * static_cast<long>(z.s[r]);
      else
        s += umpz[c][r] * z.big[r];
    }
    return sgn(s);
  }

  bool matches(const Witness& z, const std::vector<int8_t>& signs) const {
    for (int c = 0; c < m; ++c)
      if (sign_dot(c, z) != signs[c]) return false;
    return true;
  }

  // Pushes a floating direction toward the Chebyshev center of its sign cone
  // by subgradient ascent on the normalized minimum slack. Pure steering; the
  // caller verifies the result exactly.
  void center(std::vector<double>& x, const std::vector<int8_t>& signs,
              int iterations = 80) const {
    double nrm = 0;
    for (double v : x) nrm += v * v;
    if (!(nrm > 0) || !std::isfinite(nrm)) return;
    nrm = std::sqrt(nrm);
    for (double& v : x) v /= nrm;
    double eta = 0.25;
    for (int iter = 0; iter < iterations; ++iter) {
      int worst = -1;
      double worst_slack = 0;
      for (int c = 0; c < m; ++c) {
        double s = 0;
        for (int r = 0; r < dim; ++r) s += uunit[c][r] * x[r];
        s *= signs[c];
        if (worst < 0 || s < worst_slack) {
          worst = c;
          worst_slack = s;
        }
      }
      for (int r = 0; r < dim; ++r) x[r] += eta * signs[worst] * uunit[worst][r];
      double n2 = 0;
      for (double v : x) n2 += v * v;
      n2 = std::sqrt(n2);
      for (double& v : x) v /= n2;
      eta *= iterations > 100 ? 0.985 : 0.93;
    }
  }

  std::optional<Witness> center_and_shrink(std::vector<double> x,
                                           const std::vector<int8_t>& signs) const {
    if (auto w = shrink(x, signs)) {
      std::vector<double> c = x;
      center(c, signs);
      if (auto wc = shrink(c, signs)) return wc;
      return w;
    }
    center(x, signs);
    return shrink(x, signs);
  }

  // Rounds a floating direction to an integer point and verifies it exactly.
  std::optional<Witness> shrink(const std::vector<double>& dir,
                                const std::vector<int8_t>& signs) const {
    double amax = 0;
    for (double v : dir) amax = std::max(amax, std::abs(v));
    if (!(amax > 0) || !std::isfinite(amax)) return std::nullopt;
    for (int bits : {18, 26, 34, 39}) {
      double scale = std::ldexp(1.0, bits) / amax;
      Witness w;
      for (int r = 0; r < dim; ++r) {
        double v = dir[r] * scale;
        if (std::abs(v) >= 1.8e18) return std::nullopt;
        w.s[r] = static_cast<int64_t>(std::llround(v));
      }
      if (matches(w, signs)) return w;
    }
    return std::nullopt;
  }

  Witness exact_witness(const RatVec& z, const std::vector<int8_t>& signs) const {
    std::vector<double> dir(dim);
    for (int r = 0; r < dim; ++r) dir[r] = z[r].to_double();
    if (auto w = center_and_shrink(dir, signs)) return *w;
    // Keep the exact point, cleared to integers.
    mpz_class l(1);
    for (const Rat& x : z)
      if (!x.is_zero()) l = lcm(l, x.den());
    Witness w;
    w.small = false;
    w.big.resize(dim);
    for (int r = 0; r < dim; ++r) w.big[r] = mpz_class(z[r].num() * (l / z[r].den()));
    return w;
  }

  // Projection acceptance: drops the witness onto the hyperplane of circuit
  // `c`; if the projection strictly satisfies every other constraint, the
  // hyperplane supports a facet and the flipped orientation is realizable.
  // On success produces a witness for the neighbor.
  std::optional<Witness> project_accept(const Witness& z, const std::vector<int8_t>& signs,
                                        int c, const std::vector<int8_t>& flipped) {
    std::vector<mpz_class> zp;          // exact projection (scaled)
    std::array<I128, kMaxDim> zp128{};  // fast-path copy
    bool fast = fast_rows && z.small;
    if (fast) {
      I128 g = 0, p = 0;
      for (int r = 0; r < dim; ++r) {
        g += static_cast<I128>(u64[c][r]) * u64[c][r];
        p += static_cast<I128>(u64[c][r]) * z.s[r];
      }
      for (int r = 0; r < dim; ++r)
        zp128[r] = static_cast<I128>(z.s[r]) * g - p * u64[c][r];
      for (int x = 0; x < m; ++x) {
        if (x == c) continue;
        I128 s = 0;
        for (int r = 0; r < dim; ++r) s += static_cast<I128>(u64[x][r]) * zp128[r];
        if (!((s > 0 && signs[x] > 0) || (s < 0 && signs[x] < 0))) return std::nullopt;
      }
    } else {
      mpz_class g(0), p(0);
      zp.resize(dim);
      for (int r = 0; r < dim; ++r) {
        mpz_class zr = z.small ? mpz_class(static_cast<long>(z.s[r])) : z.big[r];
        g += umpz[c][r] * umpz[c][r];
        p += umpz[c][r] * zr;
      }
      for (int r = 0; r < dim; ++r) {
        mpz_class zr = z.small ? mpz_class(static_cast<long>(z.s[r])) : z.big[r];
        zp[r] = zr * g - p * umpz[c][r];
      }
      for (int x = 0; x < m; ++x) {
        if (x == c) continue;
        mpz_class s(0);
        for (int r = 0; r < dim; ++r) s += umpz[x][r] * zp[r];
        if (sgn(s) != signs[x]) return std::nullopt;
      }
    }
    // The projection lies on the wall; nudge across and shrink.
    std::vector<double> dir(dim);
    double un = 0, zn = 0;
    for (int r = 0; r < dim; ++r) {
      dir[r] = fast ? static_cast<double>(zp128[r]) : zp[r].get_d();
      un += udbl[c][r] * udbl[c][r];
      zn += dir[r] * dir[r];
    }
    double step = std::sqrt(zn / un);
    {
      std::vector<double> cand(dim);
      for (int r = 0; r < dim; ++r)
        cand[r] = dir[r] - signs[c] * 1e-7 * step * udbl[c][r];
      if (auto w = center_and_shrink(std::move(cand), flipped)) return w;
    }
    for (double frac : {1e-10, 1e-13, 1e-4}) {
      std::vector<double> cand(dim);
      for (int r = 0; r < dim; ++r)
        cand[r] = dir[r] - signs[c] * frac * step * udbl[c][r];
      if (auto w = shrink(cand, flipped)) return w;
    }
    // Exact crossing: z2 = 2T zp - sign * u_c with T large enough.
    {
      std::vector<mpz_class> zpz(dim);
      for (int r = 0; r < dim; ++r)
        zpz[r] = fast ? mpz_class(static_cast<double>(0)) : zp[r];
      if (fast)
        for (int r = 0; r < dim; ++r) {
          // materialize the 128-bit value
          I128 v = zp128[r];
          bool neg = v < 0;
          if (neg) v = -v;
          mpz_class hi = static_cast<unsigned long>(static_cast<uint64_t>(v >> 64));
          mpz_class lo = static_cast<unsigned long>(static_cast<uint64_t>(v));
          zpz[r] = (hi << 64) + lo;
          if (neg) zpz[r] = -zpz[r];
        }
      mpz_class T(1);
      for (int x = 0; x < m; ++x) {
        if (x == c) continue;
        mpz_class v(0), w(0);
        for (int r = 0; r < dim; ++r) {
          v += umpz[x][r] * zpz[r];
          w += umpz[x][r] * umpz[c][r];
        }
        v *= signs[x];                      // positive slack
        w *= static_cast<int>(signs[x]) * static_cast<int>(signs[c]);
        if (w > 0) {
          mpz_class need = w / (2 * v) + 1;
          if (need > T) T = need;
        }
      }
      Witness w2;
      w2.small = false;
      w2.big.resize(dim);
      for (int r = 0; r < dim; ++r)
        w2.big[r] = 2 * T * zpz[r] - static_cast<int>(signs[c]) * umpz[c][r];
      std::vector<double> d2(dim);
      for (int r = 0; r < dim; ++r) d2[r] = w2.big[r].get_d();
      if (auto w = shrink(d2, flipped)) return w;
      if (matches(w2, flipped)) return w2;
    }
    return std::nullopt;
  }

  bool cert_rejects(const Key& key, int c) {
    std::vector<int>& lst = certs_touching[c];
    for (size_t pos = 0; pos < lst.size(); ++pos) {
      const Cert& ct = certs[lst[pos]];
      uint64_t m0 = key.w[0] & ct.support.w[0];
      uint64_t m1 = key.w[1] & ct.support.w[1];
      bool same = m0 == ct.pattern.w[0] && m1 == ct.pattern.w[1];
      bool opp = m0 == (ct.support.w[0] ^ ct.pattern.w[0]) &&
                 m1 == (ct.support.w[1] ^ ct.pattern.w[1]);
      if (same || opp) {
        ++n_cert_hit;
        if (pos > 0) std::swap(lst[pos], lst[pos / 2]);  // move toward front
        return true;
      }
    }
    return false;
  }

  void add_cert(std::vector<std::pair<int, int8_t>> rows) {
    if (rows.empty()) return;
    std::sort(rows.begin(), rows.end());
    int flip = rows[0].second;  // canonical: first sign positive
    if (flip < 0)
      for (auto& [x, s] : rows) s = -s;
    std::string key;
    key.reserve(rows.size() * 3);
    for (auto [x, s] : rows) {
      key.push_back(static_cast<char>(x));
      key.push_back(s > 0 ? '+' : '-');
    }
    auto [it, inserted] = cert_seen.emplace(std::move(key), static_cast<int>(certs.size()));
    if (!inserted) return;
    Cert ct;
    for (auto [x, s] : rows) {
      flip_bit(ct.support, x);
      if (s > 0) flip_bit(ct.pattern, x);
      certs_touching[x].push_back(static_cast<int>(certs.size()));
    }
    certs.push_back(ct);
  }

  RatMat signed_columns(const std::vector<int8_t>& flipped, const std::vector<int>& support) {
    RatMat mtx(dim, static_cast<int>(support.size()));
    for (size_t j = 0; j < support.size(); ++j)
      for (int r = 0; r < dim; ++r)
        mtx.at(r, static_cast<int>(j)) = Rat(flipped[support[j]]) * u_rat[support[j]][r];
    return mtx;
  }

  // Caratheodory reduction: shrink a positive dependence until its support
  // carries a one-dimensional kernel, then record the sign pattern.
  void add_minimized_cert(const std::vector<int8_t>& flipped, std::vector<int> support,
                          RatVec y) {
    for (;;) {
      std::vector<int> live;
      RatVec ylive;
      for (size_t j = 0; j < support.size(); ++j)
        if (y[j].sign() > 0) {
          live.push_back(support[j]);
          ylive.push_back(y[j]);
        }
      support = std::move(live);
      y = std::move(ylive);
      if (support.empty()) return;
      std::vector<RatVec> ker = kernel_basis(signed_columns(flipped, support));
      if (ker.empty()) return;  // not a dependence; nothing to record
      if (ker.size() == 1) break;
      // Pick a kernel vector not proportional to y and walk to a boundary.
      const RatVec* k = nullptr;
      for (const RatVec& cand : ker) {
        Rat ratio;
        bool proportional = true;
        for (size_t j = 0; j < support.size() && proportional; ++j) {
          if (cand[j].is_zero()) {
            proportional = false;  // y is strictly positive here
          } else if (ratio.is_zero()) {
            ratio = cand[j] / y[j];
          } else if (cand[j] / y[j] != ratio) {
            proportional = false;
          }
        }
        if (!proportional) {
          k = &cand;
          break;
        }
      }
      if (!k) break;  // all kernel vectors proportional: treat as minimal
      bool has_pos = false;
      for (size_t j = 0; j < support.size(); ++j) has_pos |= (*k)[j].sign() > 0;
      RatVec kk = *k;
      if (!has_pos)
        for (Rat& v : kk) v = -v;
      Rat t;
      bool t_set = false;
      for (size_t j = 0; j < support.size(); ++j) {
        if (kk[j].sign() <= 0) continue;
        Rat cand = y[j] / kk[j];
        if (!t_set || cand < t) {
          t = cand;
          t_set = true;
        }
      }
      if (!t_set) break;
      for (size_t j = 0; j < support.size(); ++j) y[j] -= t * kk[j];
    }
    std::vector<std::pair<int, int8_t>> rows;
    for (size_t j = 0; j < support.size(); ++j)
      if (y[j].sign() > 0) rows.emplace_back(support[j], flipped[support[j]]);
    if (!rows.empty()) add_cert(std::move(rows));
  }

  // Tries to certify infeasibility from a candidate support set. Fast path:
  // a one-dimensional one-signed kernel. Otherwise decide the restricted
  // subsystem exactly (it is small) and minimize its Farkas certificate.
  bool certify_support(const std::vector<int8_t>& flipped, std::vector<int> support) {
    if (support.size() < 2) return false;
    std::vector<RatVec> ker = kernel_basis(signed_columns(flipped, support));
    if (ker.size() == 1) {
      int sg = 0;
      bool clean = true;
      for (size_t j = 0; j < support.size() && clean; ++j) {
        int s = ker[0][j].sign();
        if (s == 0) continue;
        if (sg == 0) sg = s;
        clean = s == sg;
      }
      if (clean && sg != 0) {
        RatVec y = ker[0];
        if (sg < 0)
          for (Rat& v : y) v = -v;
        add_minimized_cert(flipped, std::move(support), std::move(y));
        return true;
      }
    }
    if (ker.empty()) return false;  // independent columns cannot certify
    // Restricted exact decision.
    std::vector<RatVec> sys;
    sys.reserve(support.size());
    for (int x : support) {
      RatVec row = u_rat[x];
      if (flipped[x] < 0)
        for (Rat& v : row) v = -v;
      sys.push_back(std::move(row));
    }
    LpResult lp = feasible_system(sys);
    if (lp.feasible) return false;
    add_minimized_cert(flipped, std::move(support), std::move(lp.farkas));
    return true;
  }

  // Reflects the chamber witness across the candidate wall in floats and
  // recenters; cheap first guess for the neighbor's interior.
  std::optional<Witness> reflect_accept(const Witness& z, int c,
                                        const std::vector<int8_t>& flipped) const {
    std::vector<double> x(dim);
    for (int r = 0; r < dim; ++r)
      x[r] = z.small ? static_cast<double>(z.s[r]) : z.big[r].get_d();
    double zc = 0, uu = 0;
    for (int r = 0; r < dim; ++r) {
      zc += udbl[c][r] * x[r];
      uu += udbl[c][r] * udbl[c][r];
    }
    double f = 2 * zc / uu;
    for (int r = 0; r < dim; ++r) x[r] -= f * udbl[c][r];
    center(x, flipped);
    return shrink(x, flipped);
  }

  // Full decision for a flipped orientation; fills `neighbor` on success.
  bool candidate_feasible(const Key& key, const Witness& z, const std::vector<int8_t>& signs,
                          int c, const std::vector<int8_t>& flipped, Witness& neighbor) {
    if (cert_rejects(key, c)) return false;
    if (auto w = reflect_accept(z, c, flipped)) {
      ++n_prefilter_hit;
      neighbor = std::move(*w);
      return true;
    }
    if (auto w = project_accept(z, signs, c, flipped)) {
      ++n_prefilter_hit;
      neighbor = std::move(*w);
      return true;
    }
    // Harder centering before resorting to the float simplex.
    {
      std::vector<double> x(dim);
      for (int r = 0; r < dim; ++r)
        x[r] = z.small ? static_cast<double>(z.s[r]) : z.big[r].get_d();
      double zc = 0, uu = 0;
      for (int r = 0; r < dim; ++r) {
        zc += udbl[c][r] * x[r];
        uu += udbl[c][r] * udbl[c][r];
      }
      double f = 2 * zc / uu;
      for (int r = 0; r < dim; ++r) x[r] -= f * udbl[c][r];
      center(x, flipped, 500);
      if (auto w = shrink(x, flipped)) {
        ++n_prefilter_hit;
        neighbor = std::move(*w);
        return true;
      }
    }
    ++n_float;
    std::vector<std::array<double, kMaxDim>> rows(m);
    for (int x = 0; x < m; ++x)
      for (int r = 0; r < dim; ++r) rows[x][r] = flipped[x] * udbl[x][r];
    FloatLp fl = float_feasible(rows, dim);
    if (fl.status == FloatLp::kFeasible) {
      ++n_f_feas;
      if (auto w = center_and_shrink(fl.x, flipped)) {
        neighbor = std::move(*w);
        return true;
      }
      ++n_f_feas_fail;
    } else if (fl.status == FloatLp::kInfeasible) {
      ++n_f_infeas;
      std::vector<int> support;
      for (int x = 0; x < m; ++x)
        if (fl.dual[x] > 1e-7) support.push_back(x);
      if (certify_support(flipped, std::move(support))) return false;
      ++n_f_infeas_fail;
    } else {
      ++n_f_unknown;
    }
    // Exact oracle.
    ++n_exact_lp;
    std::vector<RatVec> sys(m);
    for (int x = 0; x < m; ++x) {
      sys[x] = u_rat[x];
      if (flipped[x] < 0)
        for (Rat& v : sys[x]) v = -v;
    }
    LpResult lp = feasible_system(sys);
    if (lp.feasible) {
      ++n_x_feas;
      neighbor = exact_witness(lp.witness, flipped);
      return true;
    }
    std::vector<int> support;
    RatVec y;
    for (int x = 0; x < m; ++x)
      if (lp.farkas[x].sign() > 0) {
        support.push_back(x);
        y.push_back(lp.farkas[x]);
      }
    add_minimized_cert(flipped, std::move(support), std::move(y));
    return false;
  }

  RatVec lift_witness(const Witness& z) const {
    RatVec h(ctx.n(), Rat(0));
    for (int r = 0; r < dim; ++r) {
      Rat coef = z.small ? Rat(static_cast<long long>(z.s[r])) : Rat(z.big[r]);
      if (coef.is_zero()) continue;
      for (int i = 0; i < ctx.n(); ++i) h[i] += coef * kernel[r][i];
    }
    return h;
  }

  Witness start_witness(const std::vector<int8_t>& signs, const RatVec& h0) const {
    // Project h0 to the kernel component: solve (K K^T) t = K h0, z = t.
    RatMat gram(dim, dim);
    RatVec rhs(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) gram.at(i, j) = dot(kernel[i], kernel[j]);
      rhs[i] = dot(kernel[i], h0);
    }
    std::optional<RatVec> t = solve(std::move(gram), std::move(rhs));
    if (!t) throw std::logic_error("atlas: kernel Gram solve failed");
    return exact_witness(*t, signs);
  }

  template <typename VisitFn, typename WallFn>
  long long run(const AtlasOptions& opt, VisitFn&& visit, WallFn&& wall) {
    certs_touching.assign(m, {});
    RatVec h0 = canonical_height(ctx);
    std::vector<int8_t> signs0(m);
    for (int c = 0; c < m; ++c) signs0[c] = static_cast<int8_t>(dot(h0, ctx.alpha[c]).sign());
    Witness w0 = start_witness(signs0, h0);
    if (!matches(w0, signs0)) throw std::logic_error("atlas: start witness mismatch");

    std::unordered_map<Key, int, KeyHash> seen;
    std::deque<std::pair<Key, Witness>> queue;
    Key k0 = key_of(signs0);
    seen.emplace(k0, 0);
    queue.emplace_back(k0, std::move(w0));
    long long processed = 0;

    std::vector<int8_t> signs(m), flipped(m);
    while (!queue.empty()) {
      auto [key, z] = std::move(queue.front());
      queue.pop_front();
      int cur = static_cast<int>(processed++);
      for (int c = 0; c < m; ++c) signs[c] = bit_of(key, c) ? 1 : -1;
      visit(cur, signs, z);

      flipped = signs;
      for (int c = 0; c < m; ++c) {
        flipped[c] = static_cast<int8_t>(-signs[c]);
        Key nk = key;
        flip_bit(nk, c);
        auto it = seen.find(nk);
        if (it != seen.end()) {
          // Chambers differing in one sign always share a facet. Record the
          // wall from the side processed first: the neighbor is recorded iff
          // it has not been popped yet (ids follow pop order).
          if (it->second >= static_cast<int>(processed)) wall(cur, it->second, c);
          flipped[c] = signs[c];
          continue;
        }
        Witness nb;
        if (candidate_feasible(nk, z, signs, c, flipped, nb)) {
          int id = static_cast<int>(seen.size());
          if (id >= opt.max_chambers)
            throw ResourceLimit("enumerate_regular: chamber budget exhausted");
          seen.emplace(nk, id);
          wall(cur, id, c);
          queue.emplace_back(nk, std::move(nb));
        }
        flipped[c] = signs[c];
      }
    }
    if (std::getenv("ZONOTILE_ATLAS_STATS"))
      std::fprintf(stderr,
                   "atlas: chambers=%lld certs=%zu prefilter=%lld cert_hit=%lld float=%lld "
                   "exact_lp=%lld ff=%lld fff=%lld fi=%lld fif=%lld fu=%lld xf=%lld\n",
                   processed, certs.size(), n_prefilter_hit, n_cert_hit, n_float, n_exact_lp,
                   n_f_feas, n_f_feas_fail, n_f_infeas, n_f_infeas_fail, n_f_unknown, n_x_feas);
    return processed;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

CircuitOrientation ChamberAtlas::orientation(int chamber) const {
  CircuitOrientation o;
  o.ctx = ctx_;
  o.sign = orientations_[chamber];
  return o;
}

Tiling ChamberAtlas::tiling(int chamber) const { return Tiling(ctx_, labels_[chamber]); }

std::set<int> ChamberAtlas::wall_levels(const Wall& w) const {
  const std::vector<Mask>& lab = labels_[w.a];
  const Circuit& c = ctx_->circuit_list[w.circuit];
  Mask supp = c.support();
  int j0 = mask_to_vec(supp)[0];
  std::set<int> out;
  for (Mask J : ctx_->ctr_bases[w.circuit]) {
    Mask B = (supp & ~(Mask{1} << j0)) | J;
    Mask A = lab[ctx_->basis_index.at(B)];
    out.insert(popcount(A & ~(Mask{1} << j0)) + 1);
  }
  return out;
}

int ChamberAtlas::find(const CircuitOrientation& o) const {
  for (int i = 0; i < size(); ++i)
    if (orientations_[i] == o.sign) return i;
  return -1;
}

ChamberAtlas enumerate_regular(const ContextPtr& ctx, const AtlasOptions& opt) {
  ChamberAtlas atlas(ctx);
  Enumerator e(*ctx);
  CircuitOrientation o;
  o.ctx = ctx;
  e.run(
      opt,
      [&](int, const std::vector<int8_t>& signs, const Witness& z) {
        atlas.orientations_.push_back(signs);
        atlas.witnesses_.push_back(e.lift_witness(z));
        o.sign = signs;
        atlas.labels_.push_back(labels_from_orientation(o));
      },
      [&](int a, int b, int c) {
        if (opt.record_adjacency)
          atlas.walls_.push_back({std::min(a, b), std::max(a, b), c});
      });
  return atlas;
}

void for_each_regular_orientation(
    const ContextPtr& ctx,
    const std::function<void(const std::vector<int8_t>&, const std::vector<Mask>&)>& visit,
    const AtlasOptions& opt) {
  Enumerator e(*ctx);
  CircuitOrientation o;
  o.ctx = ctx;
  e.run(
      opt,
      [&](int, const std::vector<int8_t>& signs, const Witness&) {
        o.sign = signs;
        visit(signs, labels_from_orientation(o));
      },
      [](int, int, int) {});
}

// ---------------------------------------------------------------------------
// Level-k skeleton and k-equivalence.

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

RatVec chamber_level_vector(const ChamberAtlas& atlas, int chamber, int k) {
  const Context& ctx = *atlas.context();
  RatVec v(ctx.n(), Rat(0));
  const std::vector<Mask>& lab = atlas.labels(chamber);
  for (size_t i = 0; i < lab.size(); ++i)
    if (popcount(lab[i]) == k)
      for (int j : mask_to_vec(lab[i])) v[j] += ctx.volume[i];
  return v;
}

}  // namespace

std::vector<int> k_equivalence_classes(const ChamberAtlas& atlas, int k) {
  UnionFind uf(atlas.size());
  for (const ChamberAtlas::Wall& w : atlas.walls()) {
    std::set<int> levels = atlas.wall_levels(w);
    if (!levels.count(k)) uf.unite(w.a, w.b);
  }
  std::vector<int> cls(atlas.size());
  std::unordered_map<int, int> remap;
  for (int i = 0; i < atlas.size(); ++i) {
    int root = uf.find(i);
    auto [it, fresh] = remap.emplace(root, static_cast<int>(remap.size()));
    cls[i] = it->second;
  }
  return cls;
}

HspSkeleton hsp_skeleton(const ChamberAtlas& atlas, int k) {
  const Context& ctx = *atlas.context();
  if (k < 1 || k > ctx.n() - ctx.d())
    throw InputError("hsp_skeleton: k must lie in [1, n-d]");
  HspSkeleton sk;
  sk.k = k;

  std::map<RatVec, int> by_value;
  std::vector<int> vertex_of(atlas.size());
  for (int i = 0; i < atlas.size(); ++i) {
    RatVec v = chamber_level_vector(atlas, i, k);
    auto [it, fresh] = by_value.emplace(std::move(v), -1);
    if (fresh) it->second = -1;
    vertex_of[i] = 0;  // filled after ids are assigned
  }
  {
    int id = 0;
    for (auto& [v, slot] : by_value) slot = id++;
  }
  sk.vertices.resize(by_value.size());
  sk.representative.assign(by_value.size(), -1);
  for (int i = 0; i < atlas.size(); ++i) {
    RatVec v = chamber_level_vector(atlas, i, k);
    int id = by_value.at(v);
    vertex_of[i] = id;
    if (sk.representative[id] < 0) {
      sk.representative[id] = i;
      sk.vertices[id] = std::move(v);
    }
  }

  // The class/vertex bijection: chambers joined by non-level-k walls must
  // share a value, and distinct classes must carry distinct values.
  std::vector<int> cls = k_equivalence_classes(atlas, k);
  {
    std::unordered_map<int, int> class_vertex;
    int num_classes = 0;
    for (int i = 0; i < atlas.size(); ++i) {
      auto [it, fresh] = class_vertex.emplace(cls[i], vertex_of[i]);
      if (fresh)
        ++num_classes;
      else if (it->second != vertex_of[i])
        throw std::logic_error("hsp_skeleton: k-equivalent chambers with distinct vertices");
    }
    if (num_classes != static_cast<int>(sk.vertices.size()))
      throw std::logic_error("hsp_skeleton: class count differs from vertex count");
  }

  std::set<std::pair<int, int>> edges;
  for (const ChamberAtlas::Wall& w : atlas.walls()) {
    if (!atlas.wall_levels(w).count(k)) continue;
    int a = vertex_of[w.a], b = vertex_of[w.b];
    if (a == b) throw std::logic_error("hsp_skeleton: level-k wall inside a class");
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  sk.edges.assign(edges.begin(), edges.end());

  // Affine dimension of the vertex set.
  if (sk.vertices.size() > 1) {
    RatMat diff(static_cast<int>(sk.vertices.size()) - 1, ctx.n());
    for (size_t i = 1; i < sk.vertices.size(); ++i)
      for (int j = 0; j < ctx.n(); ++j)
        diff.at(static_cast<int>(i) - 1, j) = sk.vertices[i][j] - sk.vertices[0][j];
    sk.dimension = rank(std::move(diff));
  }

  // Diameter of the 1-skeleton.
  int nv = static_cast<int>(sk.vertices.size());
  std::vector<std::vector<int>> adj(nv);
  for (auto [a, b] : sk.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int diam = 0;
  for (int s = 0; s < nv; ++s) {
    std::vector<int> dist(nv, -1);
    std::deque<int> bfs{s};
    dist[s] = 0;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop_front();
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          bfs.push_back(y);
        }
    }
    for (int x = 0; x < nv; ++x) {
      if (dist[x] < 0 && nv > 1)
        throw std::logic_error("hsp_skeleton: disconnected skeleton");
      diam = std::max(diam, dist[x]);
    }
  }
  sk.diameter = diam;
  return sk;
}

}  // namespace zonotile
