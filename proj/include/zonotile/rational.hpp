#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonotile {

/// Exact rational scalar. Thin wrapper over GMP's mpq_class that keeps every
/// value canonical (lowest terms, positive denominator) and serializes as
/// "p/q" (or "p" for integers).
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(int v) : q_(v) {}
  Rat(long v) : q_(static_cast<long int>(v)) {}
  Rat(long long v) { q_ = from_ll(v); }
  Rat(const mpz_class& v) : q_(v) {}
  Rat(const mpq_class& v) : q_(v) { q_.canonicalize(); }
  Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }
  Rat(long long num, long long den) : q_(from_ll(num), from_ll(den)) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }

  /// Parses "p", "-p", or "p/q". Throws std::invalid_argument on junk.
  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }

  double to_double() const { return q_.get_d(); }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_str();
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(a.q_ / b.q_));
  }
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

 private:
  static mpz_class from_ll(long long v) {
    mpz_class z;
    if (v >= 0) {
      z = static_cast<unsigned long>(v & 0xffffffffULL);
      mpz_class hi = static_cast<unsigned long>(static_cast<unsigned long long>(v) >> 32);
      z += hi << 32;
    } else {
      z = -from_ll(-(v + 1)) - 1;
    }
    return z;
  }
  mpq_class q_;
};

using RatVec = std::vector<Rat>;

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec+: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec-: size mismatch");
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator*(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const RatVec& v);

}  // namespace zonotile
