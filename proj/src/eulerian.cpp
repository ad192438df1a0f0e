#include "zonotile/eulerian.hpp"

#include <mutex>
#include <vector>

namespace zonotile {

namespace {

struct Table {
  std::vector<std::vector<mpz_class>> rows;  // rows[d][r] for 0 <= r < max(d,1)
  std::mutex mu;

  void ensure(int d) {
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) <= d) {
      int k = static_cast<int>(rows.size());
      if (k == 0) {
        rows.push_back({mpz_class(1)});  // the empty permutation
        continue;
      }
      std::vector<mpz_class> row(k);
      for (int r = 0; r < k; ++r) {
        // E(k, r) = (k - r) E(k-1, r-1) + (r + 1) E(k-1, r)
        mpz_class left = (r >= 1 && r - 1 < static_cast<int>(rows[k - 1].size()))
                             ? rows[k - 1][r - 1] * (k - r)
                             : mpz_class(0);
        mpz_class right = (r < static_cast<int>(rows[k - 1].size()))
                              ? rows[k - 1][r] * (r + 1)
                              : mpz_class(0);
        if (k == 1) left = (r == 0) ? mpz_class(1) : mpz_class(0), right = 0;
        row[r] = left + right;
      }
      rows.push_back(std::move(row));
    }
  }
};

Table& table() {
  static Table t;
  return t;
}

const mpz_class& zero() {
  static const mpz_class z(0);
  return z;
}

}  // namespace

const mpz_class& EulerianTable::value(int d, int r) {
  if (d < 0) return zero();
  if (r < 0 || r >= std::max(d, 1)) return zero();
  table().ensure(d);
  return table().rows[d][r];
}

Rat EulerianTable::probability(int d, int r) {
  return Rat(value(d, r)) / Rat(factorial(d));
}

mpz_class EulerianTable::factorial(int d) {
  mpz_class f(1);
  for (int i = 2; i <= d; ++i) f *= i;
  return f;
}

}  // namespace zonotile
