#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starq {

/// Exact arbitrary-precision rational scalar.
///
/// Always stored in lowest terms with positive denominator; the canonical
/// zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "p" or "p/q" with optional sign.
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return q_.get_str(); }

  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }

 private:
  mpq_class q_;
};

inline Rational half() { return Rational(1, 2); }

/// Rising factorial (a)_r = a(a+1)...(a+r-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned r) {
  Rational p(1);
  Rational f = a;
  for (unsigned i = 0; i < r; ++i) {
    p *= f;
    f += Rational(1);
  }
  return p;
}

inline Rational factorial(unsigned k) {
  Rational p(1);
  for (unsigned i = 2; i <= k; ++i) p *= Rational(static_cast<long>(i));
  return p;
}

/// Generalized binomial a(a-1)...(a-k+1)/k! for rational a.
inline Rational binomial(const Rational& a, unsigned k) {
  Rational p(1);
  Rational f = a;
  for (unsigned i = 0; i < k; ++i) {
    p *= f;
    f -= Rational(1);
  }
  return p / factorial(k);
}

/// delta! / (r! s! t!).
inline Rational trinomial(unsigned delta, unsigned r, unsigned s, unsigned t) {
  return factorial(delta) / (factorial(r) * factorial(s) * factorial(t));
}

}  // namespace starq
