#include "apa/scalar.hpp"

namespace apa {

namespace {

bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  mpz_class num = r.get_num(), den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

Rational pow_rat(const Rational& r, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= r;
  return out;
}

}  // namespace

Field::Field(int degree, Rational theta_power) : d_(degree), root_(std::move(theta_power)) {
  require(d_ == 1 || d_ == 2 || d_ == 4, "field degree must be 1, 2 or 4");
  require(sgn(root_) > 0, "theta^d must be a positive rational");
  if (d_ > 1) {
    // x^d - root is irreducible over Q (d = 2 or 4) iff root is not a
    // rational square; sign_real relies on this.
    Rational probe;
    require(!rational_sqrt(root_, probe), "theta^d is a rational square; use a smaller degree");
  }
  // initial bracket for theta > 0
  lo_ = 0;
  hi_ = root_ < 1 ? Rational(1) : root_ + 1;
}

Field Field::for_delta(const Rational& delta) {
  require(sgn(delta) > 0, "delta must be positive");
  Rational root;
  if (rational_sqrt(delta, root)) return Field(1, 1);
  return Field(2, delta);  // theta = sqrt(delta) = delta^{1/2}
}

Field Field::for_spin(long q) {
  require(q >= 2, "spin count must be >= 2");
  Rational Q(q), s, t;
  if (rational_sqrt(Q, s)) {
    if (rational_sqrt(s, t)) return Field(1, 1);  // Q = t^4
    return Field(2, s);                           // theta^2 = sqrt(Q), theta = Q^{1/4}
  }
  return Field(4, Q);  // theta^4 = Q
}

void Field::theta_interval(const Rational& eps, Rational& lo, Rational& hi) const {
  if (d_ == 1) { lo = hi = 1; return; }
  while (hi_ - lo_ > eps) {
    Rational mid = (lo_ + hi_) / 2;
    if (pow_rat(mid, d_) < root_) lo_ = mid; else hi_ = mid;
  }
  lo = lo_;
  hi = hi_;
}

Scalar Scalar::i(const Field* f) {
  Scalar s(f);
  s.c_[1] = 1;
  return s;
}

Scalar Scalar::theta(const Field* f) {
  Scalar s(f);
  if (f->degree() == 1) s.c_[0] = f->theta_power();  // theta itself rational only if d=1
  else s.c_[2] = 1;
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& x : c_) if (sgn(x) != 0) return false;
  return true;
}

bool Scalar::operator==(const Scalar& o) const {
  return c_ == o.c_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  const int d = f_->degree();
  Scalar r(f_);
  for (int j = 0; j < d; ++j)
    for (int b = 0; b < 2; ++b) {
      const Rational& x = c_[2 * j + b];
      if (sgn(x) == 0) continue;
      for (int j2 = 0; j2 < d; ++j2)
        for (int b2 = 0; b2 < 2; ++b2) {
          const Rational& y = o.c_[2 * j2 + b2];
          if (sgn(y) == 0) continue;
          Rational prod = x * y;
          int jj = j + j2, bb = b + b2;
          if (bb >= 2) { bb -= 2; prod = -prod; }      // i^2 = -1
          if (jj >= d) { jj -= d; prod *= f_->theta_power(); }
          r.c_[2 * jj + bb] += prod;
        }
    }
  return r;
}

Scalar operator*(const Rational& r, const Scalar& s) {
  Scalar out = s;
  for (int j = 0; j < s.field()->degree(); ++j)
    for (int b = 0; b < 2; ++b) out.coeff(j, b) *= r;
  return out;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  for (int j = 0; j < f_->degree(); ++j) r.c_[2 * j + 1] = -r.c_[2 * j + 1];
  return r;
}

Scalar Scalar::inverse() const {
  require(!is_zero(), "inverse of zero");
  // Solve a*x = 1 in the 2d-dimensional Q-algebra by Gaussian elimination on
  // the multiplication-by-a matrix.
  const int n = f_->coeff_count();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int col = 0; col < n; ++col) {
    Scalar e(f_);
    e.c_[col] = 1;
    Scalar ae = *this * e;
    for (int row = 0; row < n; ++row) m[row][col] = ae.c_[row];
  }
  m[0][n] = 1;
  int row = 0;
  std::vector<int> pivot_col(n, -1);
  for (int col = 0; col < n && row < n; ++col) {
    int p = -1;
    for (int r2 = row; r2 < n; ++r2)
      if (sgn(m[r2][col]) != 0) { p = r2; break; }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (int c2 = col; c2 <= n; ++c2) m[row][c2] *= inv;
    for (int r2 = 0; r2 < n; ++r2) {
      if (r2 == row || sgn(m[r2][col]) == 0) continue;
      Rational factor = m[r2][col];
      for (int c2 = col; c2 <= n; ++c2) m[r2][c2] -= factor * m[row][c2];
    }
    pivot_col[row] = col;
    ++row;
  }
  Scalar x(f_);
  for (int r2 = 0; r2 < row; ++r2)
    if (pivot_col[r2] >= 0) x.c_[pivot_col[r2]] = m[r2][n];
  // a is invertible in a field, so the system is always consistent.
  return x;
}

bool Scalar::is_conj_fixed() const {
  for (int j = 0; j < f_->degree(); ++j)
    if (sgn(c_[2 * j + 1]) != 0) return false;
  return true;
}

int Scalar::sign_real() const {
  require(is_conj_fixed(), "sign_real on non-real scalar");
  const int d = f_->degree();
  bool all_zero = true;
  for (int j = 0; j < d; ++j) all_zero = all_zero && sgn(c_[2 * j]) == 0;
  if (all_zero) return 0;
  if (d == 1) return sgn(c_[0]);
  // Evaluate p(theta) with interval arithmetic; irreducibility of x^d - root
  // guarantees p(theta) != 0, so refinement terminates.
  Rational eps(1, 4);
  for (;;) {
    Rational lo, hi;
    f_->theta_interval(eps, lo, hi);
    Rational plo = 0, phi = 0;
    Rational tlo = 1, thi = 1;
    for (int j = 0; j < d; ++j) {
      const Rational& a = c_[2 * j];
      if (sgn(a) > 0) { plo += a * tlo; phi += a * thi; }
      else if (sgn(a) < 0) { plo += a * thi; phi += a * tlo; }
      tlo *= lo;
      thi *= hi;
    }
    if (sgn(plo) > 0) return 1;
    if (sgn(phi) < 0) return -1;
    eps /= 16;
  }
}

std::vector<std::string> Scalar::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& x : c_) out.push_back(x.get_str());
  return out;
}

std::string Scalar::str() const {
  std::string s = "(";
  auto parts = coeff_strings();
  for (size_t t = 0; t < parts.size(); ++t) {
    if (t) s += ",";
    s += parts[t];
  }
  return s + ")";
}

Scalar pow(const Scalar& base, long e) {
  Scalar b = e < 0 ? base.inverse() : base;
  long n = e < 0 ? -e : e;
  Scalar r = Scalar::one(base.field());
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace apa
