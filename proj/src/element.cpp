#include "apa/element.hpp"

#include "apa/diagram.hpp"

namespace apa {

bool PAElement::is_zero() const {
  for (const auto& [k, v] : m_)
    if (!v.is_zero()) return false;
  return true;
}

void PAElement::add_term(long basis, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = m_.find(basis);
  if (it == m_.end()) {
    m_.emplace(basis, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) m_.erase(it);
  }
}

PAElement PAElement::operator+(const PAElement& o) const {
  PAElement r = *this;
  r += o;
  return r;
}

PAElement& PAElement::operator+=(const PAElement& o) {
  require(b_ == o.b_ && c_ == o.c_, "element sum: color mismatch");
  for (const auto& [k, v] : o.m_) add_term(k, v);
  return *this;
}

PAElement PAElement::operator-(const PAElement& o) const {
  require(b_ == o.b_ && c_ == o.c_, "element difference: color mismatch");
  PAElement r = *this;
  for (const auto& [k, v] : o.m_) r.add_term(k, -v);
  return r;
}

PAElement PAElement::operator*(const Scalar& s) const {
  PAElement r(b_, c_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : m_) r.add_term(k, v * s);
  return r;
}

bool PAElement::operator==(const PAElement& o) const {
  if (b_ != o.b_ || c_ != o.c_) return false;
  return (*this - o).is_zero();
}

std::vector<Scalar> PAElement::dense() const {
  std::vector<Scalar> v(b_->dim(c_), Scalar::zero(b_->field()));
  for (const auto& [k, s] : m_) v[k] = s;
  return v;
}

PAElement PAElement::from_dense(const Backend* b, Color c, const std::vector<Scalar>& v) {
  PAElement e(b, c);
  for (long i = 0; i < long(v.size()); ++i) e.add_term(i, v[i]);
  return e;
}

PAElement Backend::contract(const PAElement& x, const PAElement& y, int m) const {
  require(x.backend() == this && y.backend() == this, "contract: backend mismatch");
  require(x.color().sign == y.color().sign, "contract: shading mismatch");
  require(m >= 0 && m <= 2 * x.color().k && m <= 2 * y.color().k, "contract: incompatible m");
  Color out{x.color().sign, x.color().k + y.color().k - m};
  PAElement r(this, out);
  for (const auto& [bx, sx] : x.coeffs())
    for (const auto& [by, sy] : y.coeffs()) {
      PAElement t = contract_basis(x.color(), bx, y.color(), by, m);
      Scalar c = sx * sy;
      for (const auto& [bz, sz] : t.coeffs()) r.add_term(bz, sz * c);
    }
  return r;
}

PAElement Backend::rotate(const PAElement& x, int clicks) const {
  PAElement cur = x;
  int dir = clicks > 0 ? 1 : -1;
  for (int t = 0; t < (clicks > 0 ? clicks : -clicks); ++t) {
    PAElement next(this, cur.color().flipped());
    for (const auto& [b, s] : cur.coeffs()) {
      PAElement rb = rotate_basis(cur.color(), b, dir);
      for (const auto& [bz, sz] : rb.coeffs()) next.add_term(bz, sz * s);
    }
    cur = std::move(next);
  }
  return cur;
}

PAElement Backend::reflect(const PAElement& x) const {
  PAElement r(this, x.color());
  for (const auto& [b, s] : x.coeffs()) {
    PAElement rb = reflect_basis(x.color(), b);
    for (const auto& [bz, sz] : rb.coeffs()) r.add_term(bz, sz * s);
  }
  return r;
}

PAElement Backend::star(const PAElement& x) const {
  PAElement r(this, x.color());
  for (const auto& [b, s] : x.coeffs()) {
    PAElement rb = reflect_basis(x.color(), b);
    for (const auto& [bz, sz] : rb.coeffs()) r.add_term(bz, sz * s.conj());
  }
  return r;
}

Scalar Backend::scalar_of(const PAElement& x) const {
  require(x.color().k == 0, "scalar_of: color must be eps0");
  Scalar s = Scalar::zero(field());
  for (const auto& [b, c] : x.coeffs()) s += c * closure_scalar(x.color(), b);
  return s;
}

PAElement Backend::basis_element(Color c, long i) const {
  PAElement e(this, c);
  e.add_term(i, Scalar::one(field()));
  return e;
}

PAElement Backend::unit(Color c) const {
  return diagram_element(c, diagram::identity_matching(c.k));
}

PAElement Backend::empty_diagram() const { return unit(plus(0)); }

Scalar Backend::closure_right(const PAElement& x) const {
  if (x.color().k == 0) return scalar_of(x);
  return scalar_of(contract(x, unit(x.color()), 2 * x.color().k));
}

Scalar Backend::closure_left(const PAElement& x) const {
  PAElement cur = x;
  for (int t = 0; t < x.color().k; ++t) cur = cap(rotate(cur, 1), 2 * cur.color().k - 1);
  return scalar_of(cur);
}

Scalar Backend::trace(const PAElement& x) const {
  return pow(delta(), -x.color().k) * closure_right(x);
}

PAElement Backend::cap(const PAElement& x, int pos) const { return cap_generic(x, pos); }

PAElement Backend::insert_cup(const PAElement& x, int pos) const {
  return insert_cup_generic(x, pos);
}

PAElement Backend::cap_generic(const PAElement& x, int pos) const {
  const int n2 = 2 * x.color().k;
  require(pos >= 1 && pos + 1 <= n2, "cap: position out of range");
  // Template on 2n inputs + 2n-2 outputs; slot s receives x_{2n+1-s}.
  std::vector<int> t(2 * n2 - 2, -1);
  auto link = [&](int a, int b) { t[a - 1] = b - 1; t[b - 1] = a - 1; };
  link(n2 + 1 - pos, n2 - pos);
  for (int j = 1; j <= n2; ++j) {
    if (j == pos || j == pos + 1) continue;
    int out = j < pos ? j : j - 2;
    link(n2 + 1 - j, n2 + out);
  }
  Color tc{x.color().sign, n2 - 1};
  return contract(x, diagram_element(tc, t), n2);
}

PAElement Backend::insert_cup_generic(const PAElement& x, int pos) const {
  const int n2 = 2 * x.color().k;
  require(pos >= 1 && pos <= n2 + 1, "insert_cup: position out of range");
  std::vector<int> t(2 * n2 + 2, -1);
  auto link = [&](int a, int b) { t[a - 1] = b - 1; t[b - 1] = a - 1; };
  link(n2 + pos, n2 + pos + 1);
  for (int j = 1; j <= n2; ++j) {
    int out = j < pos ? j : j + 2;
    link(n2 + 1 - j, n2 + out);
  }
  Color tc{x.color().sign, n2 + 1};
  return contract(x, diagram_element(tc, t), n2);
}

PAElement Backend::mult(const PAElement& x, const PAElement& y) const {
  require(x.color() == y.color(), "mult: color mismatch");
  return contract(x, y, x.color().k);
}

Matrix Backend::trace_gram(Color c) const {
  auto it = gram_cache_.find(c);
  if (it != gram_cache_.end()) return it->second;
  const long n = dim(c);
  Matrix g(field(), int(n), int(n));
  for (long i = 0; i < n; ++i) {
    PAElement bi_star = star(basis_element(c, i));
    for (long j = 0; j < n; ++j)
      g.at(int(i), int(j)) = trace(mult(bi_star, basis_element(c, j)));
  }
  gram_cache_.emplace(c, g);
  return g;
}

PAElement Backend::z_element(Color c) const {
  auto it = z_cache_.find(c);
  if (it != z_cache_.end()) return it->second;
  const long n = dim(c);
  Matrix g = trace_gram(c);
  Matrix ginv = *solve_linear(g, Matrix::identity(field(), int(n)));
  PAElement z(this, c);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const Scalar& w = ginv.at(int(i), int(j));
      if (w.is_zero()) continue;
      z += mult(basis_element(c, i), star(basis_element(c, j))) * w;
    }
  z_cache_.emplace(c, z);
  return z;
}

}  // namespace apa
