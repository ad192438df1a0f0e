#include "zonotile/linalg.hpp"

#include "zonotile/smallset.hpp"

#include <sstream>

namespace zonotile {

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

std::vector<Mask> subsets_of_size(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask m = full_mask(k);
  Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next bitmask with the same popcount.
    Mask c = m & -m;
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::string mask_to_string(Mask m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : mask_to_vec(m)) {
    if (!first) os << ",";
    os << (i + 1);
    first = false;
  }
  os << "}";
  return os.str();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return Rat(n);
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    return Rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat::parse: bad rational literal '" + s + "'");
  }
}

Rat det(RatMat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: non-square matrix");
  int n = m.rows;
  if (n == 0) return Rat(1);
  if (n == 1) return m.at(0, 0);
  if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (n == 3) {
    return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
           m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
           m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  }
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int k = 0; k < n; ++k) std::swap(m.at(piv, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Rat f = m.at(r, c) * inv;
      for (int k = c; k < n; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return d;
}

namespace {

// Row echelon in place; returns pivot column per pivot row.
std::vector<int> echelon(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(piv, k), m.at(r, k));
    Rat inv = Rat(1) / m.at(r, c);
    for (int k = c; k < m.cols; ++k) m.at(r, k) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rat f = m.at(i, c);
      for (int k = c; k < m.cols; ++k) m.at(i, k) -= f * m.at(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

std::vector<RatVec> kernel_basis(const RatMat& m) {
  RatMat e = m;
  std::vector<int> pivots = echelon(e);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(m.cols, Rat(0));
    v[c] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(static_cast<int>(r), c);
    basis.push_back(primitive_vector(std::move(v)));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat m, RatVec b) {
  if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: size mismatch");
  RatMat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = echelon(aug);
  for (int c : pivots)
    if (c == m.cols) return std::nullopt;  // pivot in the constants column
  RatVec x(m.cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

RatVec primitive_vector(RatVec v) {
  mpz_class l(1);
  for (const Rat& x : v)
    if (!x.is_zero()) l = lcm(l, x.den());
  mpz_class g(0);
  for (Rat& x : v) {
    x *= Rat(l);
    g = gcd(g, x.num());
  }
  if (g > 1)
    for (Rat& x : v) x /= Rat(g);
  return v;
}

}  // namespace zonotile
