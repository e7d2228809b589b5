#pragma once

#include <map>
#include <vector>

#include "apa/color.hpp"
#include "apa/matrix.hpp"
#include "apa/scalar.hpp"

namespace apa {

class Backend;

/// Element of a planar-algebra space P_{eps k}: finite coefficient map over
/// the backend's basis of that color.
class PAElement {
 public:
  PAElement() : b_(nullptr) {}
  PAElement(const Backend* b, Color c) : b_(b), c_(c) {}

  const Backend* backend() const { return b_; }
  Color color() const { return c_; }
  const std::map<long, Scalar>& coeffs() const { return m_; }

  bool is_zero() const;
  void add_term(long basis, const Scalar& s);
  PAElement operator+(const PAElement& o) const;
  PAElement operator-(const PAElement& o) const;
  PAElement operator*(const Scalar& s) const;
  PAElement& operator+=(const PAElement& o);
  bool operator==(const PAElement& o) const;

  std::vector<Scalar> dense() const;
  static PAElement from_dense(const Backend* b, Color c, const std::vector<Scalar>& v);

 private:
  const Backend* b_;
  Color c_;
  std::map<long, Scalar> m_;
};

/// Abstract planar backend: colored basis tables plus the primitive tangle
/// actions every derived operation is compiled from.  All maps are linear
/// (or bilinear) extensions of the *_basis hooks.
class Backend {
 public:
  virtual ~Backend() = default;

  const Field* field() const { return f_; }
  const Scalar& delta() const { return delta_; }
  const Scalar& delta_half() const { return delta_half_; }

  virtual std::string name() const = 0;
  virtual long dim(Color c) const = 0;

  /// Glue the last m points of basis vector (cx,bx) to the first m points of
  /// (cy,by); innermost arc joins x's last point to y's first.
  virtual PAElement contract_basis(Color cx, long bx, Color cy, long by, int m) const = 0;
  /// One-click rotation; dir=+1 moves the first boundary point to the back.
  virtual PAElement rotate_basis(Color c, long b, int dir) const = 0;
  /// Linear part of the star: left-right reflection (point i -> 2n+1-i).
  virtual PAElement reflect_basis(Color c, long b) const = 0;
  /// Evaluate a bare Temperley-Lieb diagram (non-crossing matching given by
  /// the partner array) as an element of this backend.
  virtual PAElement diagram_element(Color c, const std::vector<int>& partner) const = 0;
  /// Identify P_{eps 0} with scalars.
  virtual Scalar closure_scalar(Color c, long b) const = 0;

  // Linear extensions.
  PAElement contract(const PAElement& x, const PAElement& y, int m) const;
  PAElement rotate(const PAElement& x, int clicks) const;
  PAElement reflect(const PAElement& x) const;
  PAElement star(const PAElement& x) const;
  Scalar scalar_of(const PAElement& x) const;

  PAElement zero(Color c) const { return PAElement(this, c); }
  PAElement basis_element(Color c, long i) const;
  PAElement unit(Color c) const;       // nested identity diagram
  PAElement empty_diagram() const;     // unit of P_{+0}

  /// Normalized picture trace (right closure / delta^k); tr(1_{eps k}) = 1.
  Scalar trace(const PAElement& x) const;
  /// Unnormalized right/left closures down to P_{eps 0} scalars.
  Scalar closure_right(const PAElement& x) const;
  Scalar closure_left(const PAElement& x) const;

  /// Cap adjacent boundary points (pos, pos+1); no normalization.
  virtual PAElement cap(const PAElement& x, int pos) const;
  /// Insert two new adjacent boundary points at position pos joined by a cup.
  virtual PAElement insert_cup(const PAElement& x, int pos) const;
  /// Template-compiled fallbacks (one contract against an explicit diagram);
  /// kept callable for cross-checking backend-native overrides.
  PAElement cap_generic(const PAElement& x, int pos) const;
  PAElement insert_cup_generic(const PAElement& x, int pos) const;
  /// Multiplication of the algebra P_{eps n} (rectangle stacking).
  PAElement mult(const PAElement& x, const PAElement& y) const;

  /// Gram matrix tr(b_i^* b_j) of a color's basis.
  Matrix trace_gram(Color c) const;
  /// z_{eps k} = sum_a u_a u_a^* over any tr-orthonormal basis, computed
  /// basis-free as sum_{ij} (G^{-1})_{ij} b_i b_j^*.
  PAElement z_element(Color c) const;

 protected:
  void init_scalars(const Field* f, Scalar delta, Scalar delta_half) {
    f_ = f;
    delta_ = std::move(delta);
    delta_half_ = std::move(delta_half);
  }

 private:
  const Field* f_ = nullptr;
  Scalar delta_, delta_half_;
  mutable std::map<Color, PAElement> z_cache_;
  mutable std::map<Color, Matrix> gram_cache_;
};

}  // namespace apa
