#include "apa/matrix.hpp"

#include <algorithm>

namespace apa {

Matrix Matrix::identity(const Field* f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix product shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) += o.at(i, j);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) -= o.at(i, j);
  return r;
}

Matrix Matrix::conj_transpose() const {
  Matrix r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return false;
  return true;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  require(int(v.size()) == cols_, "matrix apply shape mismatch");
  std::vector<Scalar> out(rows_, Scalar::zero(f_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

namespace {

// Row echelon on an augmented block [A | B]; returns pivot columns of A.
struct Echelon {
  Matrix m;
  std::vector<int> pivot_cols;  // per reduced row
};

Echelon reduce(const Matrix& a, const Matrix* b) {
  const Field* f = a.field();
  int aug = b ? b->cols() : 0;
  Matrix m(f, a.rows(), a.cols() + aug);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < aug; ++j) m.at(i, a.cols() + j) = b->at(i, j);
  }
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), "solve_linear: row counts differ");
  const Field* f = a.field();
  Echelon e = reduce(a, &b);
  int nr = int(e.pivot_cols.size());
  // Inconsistency: a zero A-row with nonzero augmented part.
  for (int r = nr; r < e.m.rows(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      if (!e.m.at(r, a.cols() + j).is_zero()) return std::nullopt;
  Matrix x(f, a.cols(), b.cols());
  for (int r = 0; r < nr; ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(e.pivot_cols[r], j) = e.m.at(r, a.cols() + j);
  return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a) {
  const Field* f = a.field();
  Echelon e = reduce(a, nullptr);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(a.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[e.pivot_cols[r]] = -e.m.at(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Matrix& a) { return int(reduce(a, nullptr).pivot_cols.size()); }

LdlResult ldl_certificate(const Matrix& a) {
  require(a.is_hermitian(), "ldl_certificate requires a Hermitian matrix");
  const Field* f = a.field();
  const int n = a.rows();
  Matrix m = a;  // Schur complements computed in place
  std::vector<int> order;     // pivot rows in elimination order
  std::vector<bool> done(n, false);

  auto lift_witness = [&](const std::vector<Scalar>& w_active,
                          const std::vector<int>& active) {
    // Lift a Schur-block witness w to the full space: v_active = w,
    // v_pivots solves A[pivots,pivots] v = -A[pivots,active] w.
    std::vector<Scalar> v(n, Scalar::zero(f));
    for (size_t t = 0; t < active.size(); ++t) v[active[t]] = w_active[t];
    if (!order.empty()) {
      int np = int(order.size());
      Matrix app(f, np, np), rhs(f, np, 1);
      for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) app.at(i, j) = a.at(order[i], order[j]);
      for (int i = 0; i < np; ++i) {
        Scalar s = Scalar::zero(f);
        for (size_t t = 0; t < active.size(); ++t)
          s += a.at(order[i], active[t]) * w_active[t];
        rhs.at(i, 0) = -s;
      }
      auto sol = solve_linear(app, rhs);
      for (int i = 0; i < np; ++i) v[order[i]] = sol->at(i, 0);
    }
    return v;
  };

  int pivots = 0;
  for (;;) {
    std::vector<int> active;
    for (int i = 0; i < n; ++i)
      if (!done[i]) active.push_back(i);
    if (active.empty()) break;

    int piv = -1;
    for (int i : active)
      if (!m.at(i, i).is_zero()) { piv = i; break; }

    if (piv < 0) {
      // All remaining diagonal entries vanish.  Any nonzero off-diagonal
      // entry yields an explicit indefinite direction.
      int wi = -1, wj = -1;
      for (size_t s = 0; s < active.size() && wi < 0; ++s)
        for (size_t t = s + 1; t < active.size(); ++t)
          if (!m.at(active[s], active[t]).is_zero()) { wi = int(s); wj = int(t); break; }
      if (wi < 0) return {LdlKind::PositiveSemiDefinite, pivots, {}};
      // 2x2 block [[0, x],[x*, 0]]: v = alpha e_i + e_j with
      // conj(alpha) x = -1/2 gives <v, S v> = -1.
      const Scalar& x = m.at(active[wi], active[wj]);
      Scalar alpha = (Rational(-1, 2) * x.inverse()).conj();
      std::vector<Scalar> w(active.size(), Scalar::zero(f));
      w[wi] = alpha;
      w[wj] = Scalar::one(f);
      return {LdlKind::Indefinite, pivots, lift_witness(w, active)};
    }

    int sign = m.at(piv, piv).sign_real();
    if (sign < 0) {
      std::vector<Scalar> w(active.size(), Scalar::zero(f));
      for (size_t t = 0; t < active.size(); ++t)
        if (active[t] == piv) w[t] = Scalar::one(f);
      return {LdlKind::Indefinite, pivots, lift_witness(w, active)};
    }

    // Positive pivot: eliminate.
    Scalar dinv = m.at(piv, piv).inverse();
    for (int i : active) {
      if (i == piv || m.at(i, piv).is_zero()) continue;
      Scalar factor = m.at(i, piv) * dinv;
      for (int j : active) {
        if (j == piv) continue;
        if (!m.at(piv, j).is_zero()) m.at(i, j) -= factor * m.at(piv, j);
      }
    }
    for (int i : active) {
      if (i == piv) continue;
      m.at(i, piv) = Scalar::zero(f);
      m.at(piv, i) = Scalar::zero(f);
    }
    done[piv] = true;
    order.push_back(piv);
    ++pivots;
    if (pivots == n) break;
  }
  return {pivots == n ? LdlKind::PositiveDefinite : LdlKind::PositiveSemiDefinite, pivots, {}};
}

}  // namespace apa
