#pragma once

#include <optional>
#include <vector>

#include "apa/scalar.hpp"

namespace apa {

/// Dense matrix over the run's scalar field.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), f_(nullptr) {}
  Matrix(const Field* f, int rows, int cols)
      : rows_(rows), cols_(cols), f_(f), a_(size_t(rows) * cols, Scalar::zero(f)) {}

  static Matrix identity(const Field* f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field* field() const { return f_; }

  Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix conj_transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_hermitian() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  int rows_, cols_;
  const Field* f_;
  std::vector<Scalar> a_;
};

/// Exact solution X of A X = B, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Basis of the right null space {v : A v = 0}.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a);

int rank(const Matrix& a);

enum class LdlKind { PositiveDefinite, PositiveSemiDefinite, Indefinite };

struct LdlResult {
  LdlKind kind;
  int rank = 0;
  std::vector<Scalar> witness;  // populated for Indefinite: <v, A v> < 0
};

/// Exact pivoted LDL^dagger verdict for a Hermitian matrix.  Throws on
/// non-Hermitian input.  Indefinite results carry an explicit witness.
LdlResult ldl_certificate(const Matrix& a);

}  // namespace apa
