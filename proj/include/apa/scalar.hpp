#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apa {

using Rational = mpq_class;

/// Coefficient field for a whole run: Q(i)(theta) with theta^d equal to a
/// fixed positive rational, d in {1,2,4}.  theta is pinned to the positive
/// real root, i to the upper half plane; conjugation fixes theta and sends
/// i to -i.  Every scalar of a run lives over one Field instance.
class Field {
 public:
  Field(int degree, Rational theta_power);

  int degree() const { return d_; }
  const Rational& theta_power() const { return root_; }
  int coeff_count() const { return 2 * d_; }

  bool operator==(const Field& o) const { return d_ == o.d_ && root_ == o.root_; }

  /// Smallest tower containing delta and delta^{1/2} for a rational modulus.
  static Field for_delta(const Rational& delta);
  /// Smallest tower containing sqrt(Q) and Q^{1/4} for integer spin count Q.
  static Field for_spin(long q);

  /// Rational interval around theta, refined until width <= eps. d=1: exact.
  void theta_interval(const Rational& eps, Rational& lo, Rational& hi) const;

 private:
  int d_;
  Rational root_;
  mutable Rational lo_, hi_;  // current refinement, lo^d < root < hi^d
};

/// Element of Q(i)(theta). Coefficients indexed by 2*j + b for theta^j * i^b.
class Scalar {
 public:
  Scalar() : f_(nullptr) {}
  explicit Scalar(const Field* f) : f_(f), c_(f->coeff_count()) {}
  Scalar(const Field* f, const Rational& rat) : f_(f), c_(f->coeff_count()) { c_[0] = rat; }

  static Scalar zero(const Field* f) { return Scalar(f); }
  static Scalar one(const Field* f) { return Scalar(f, 1); }
  static Scalar i(const Field* f);
  static Scalar theta(const Field* f);

  const Field* field() const { return f_; }
  const Rational& coeff(int j, int b) const { return c_[2 * j + b]; }
  Rational& coeff(int j, int b) { return c_[2 * j + b]; }

  bool is_zero() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  Scalar conj() const;
  /// Multiplicative inverse; throws on zero.
  Scalar inverse() const;

  bool is_conj_fixed() const;
  /// Sign of a conjugation-fixed element under the positive-root embedding.
  /// Throws if the element is not conjugation fixed.
  int sign_real() const;

  /// theta^j i^b basis order, each coefficient as "p/q".
  std::vector<std::string> coeff_strings() const;
  std::string str() const;

 private:
  const Field* f_;
  std::vector<Rational> c_;
};

Scalar operator*(const Rational& r, const Scalar& s);

/// Exact integer power, negative exponents through inverse().
Scalar pow(const Scalar& base, long e);

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace apa
