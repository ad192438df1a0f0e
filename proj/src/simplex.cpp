#include "zonotile/simplex.hpp"

#include <stdexcept>

namespace zonotile {

// Phase-I tableau for  A x >= 1  with free x:
//   x = u - w,  A u - A w - s + z = 1,  u, w, s, z >= 0,  minimize sum(z).
// Columns: [u(0..nv) | w | s(m) | z(m)]; the initial basis is z.
LpResult feasible_system(const std::vector<RatVec>& rows) {
  const int m = static_cast<int>(rows.size());
  LpResult res;
  if (m == 0) {
    res.feasible = true;
    return res;
  }
  const int nv = static_cast<int>(rows[0].size());
  for (const RatVec& r : rows)
    if (static_cast<int>(r.size()) != nv)
      throw std::invalid_argument("feasible_system: ragged rows");

  const int cols = 2 * nv + 2 * m;
  const int slack0 = 2 * nv, art0 = 2 * nv + m;
  std::vector<RatVec> T(m, RatVec(cols + 1, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) {
      T[i][j] = rows[i][j];
      T[i][nv + j] = -rows[i][j];
    }
    T[i][slack0 + i] = Rat(-1);
    T[i][art0 + i] = Rat(1);
    T[i][cols] = Rat(1);
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = art0 + i;

  // Reduced costs for minimizing sum(z) with the artificial basis:
  // obj[j] = c_j - sum_i T[i][j]; the artificial columns start at zero.
  RatVec obj(cols + 1, Rat(0));
  for (int j = 0; j <= cols; ++j) {
    Rat s;
    for (int i = 0; i < m; ++i) s += T[i][j];
    obj[j] = ((j >= art0 && j < cols) ? Rat(1) : Rat(0)) - s;
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (obj[j].sign() < 0) {
        enter = j;
        break;  // Bland: lowest index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter].sign() <= 0) continue;
      Rat ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("feasible_system: phase-I objective unbounded");
    Rat inv = Rat(1) / T[leave][enter];
    for (int j = 0; j <= cols; ++j)
      if (!T[leave][j].is_zero()) T[leave][j] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      Rat f = T[i][enter];
      for (int j = 0; j <= cols; ++j)
        if (!T[leave][j].is_zero()) T[i][j] -= f * T[leave][j];
    }
    if (!obj[enter].is_zero()) {
      Rat f = obj[enter];
      for (int j = 0; j <= cols; ++j)
        if (!T[leave][j].is_zero()) obj[j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  // Optimal value of sum(z) is -obj[cols].
  if (obj[cols].is_zero()) {
    res.feasible = true;
    res.witness.assign(nv, Rat(0));
    for (int i = 0; i < m; ++i) {
      if (basis[i] < nv)
        res.witness[basis[i]] += T[i][cols];
      else if (basis[i] < 2 * nv)
        res.witness[basis[i] - nv] -= T[i][cols];
    }
  } else {
    // Dual values off the artificial reduced costs give a Farkas certificate:
    // y >= 0, y^T A = 0, sum(y) > 0.
    res.feasible = false;
    res.farkas.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) res.farkas[i] = Rat(1) - obj[art0 + i];
  }
  return res;
}

LpResult feasible(const std::vector<std::pair<RatVec, int>>& rows) {
  std::vector<RatVec> sys;
  sys.reserve(rows.size());
  for (const auto& [a, s] : rows) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("feasible: each sign must be +1 or -1");
    RatVec r = a;
    if (s < 0)
      for (Rat& x : r) x = -x;
    sys.push_back(std::move(r));
  }
  return feasible_system(sys);
}

}  // namespace zonotile
