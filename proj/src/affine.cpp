#include "apa/affine.hpp"

#include <functional>

#include "apa/diagram.hpp"

namespace apa {

// Representative layout for psi^m_{eps k, eta l}, 1-based boundary positions
// of x in P_{eta (k+l+m)}:
//   OUT   1 .. 2l                strands to the target boundary, left to right
//   RWRAP 2l+1 .. 2l+m           right wrap ends, heights 1..m bottom to top
//   SRC   2l+m+1 .. 2l+m+2k      strands to the source, reversed (c_{2k}..c_1)
//   LWRAP 2l+m+2k+1 .. 2l+2m+2k  left wrap ends, heights m..1 top to bottom
// The wrap template joins right height q to left height q across the cut.

AffineContext::AffineContext(const Backend* b, int budget) : b_(b), budget_(budget) {}

Color AffineContext::rep_color(Color src, Color tgt, int m) {
  return {tgt.sign, src.k + tgt.k + m};
}

void AffineContext::check_budget(Color src, Color tgt, int m) const {
  require(winding_admissible(src, tgt, m), "winding parity violation");
  require(src.k + tgt.k + m <= budget_, "cutoff budget exceeded");
}

PAElement AffineContext::pic_left(Color src, Color tgt, int m, const PAElement& y,
                                  const PAElement& w) const {
  // Insert w just past the cut: glue w's first m points (east side) onto the
  // left wrap ends; w's last m points become the new left wrap ends.
  return b_->contract(y, w, m);
}

PAElement AffineContext::pic_right(Color src, Color tgt, int m, const PAElement& y,
                                   const PAElement& w) const {
  // Insert w just before the cut on the right.
  const int l2 = 2 * tgt.k;
  return b_->rotate(b_->contract(w, b_->rotate(y, l2), m), -l2);
}

const std::vector<PAElement>& AffineContext::q_basis(Color src, Color tgt, int m) const {
  Key key{src, tgt, m};
  auto it = q_cache_.find(key);
  if (it != q_cache_.end()) return it->second;
  check_budget(src, tgt, m);
  const Field* f = b_->field();
  Color rc = rep_color(src, tgt, m);
  const long dim = b_->dim(rc);

  // Current spanning set of the constrained space, as columns.
  std::vector<std::vector<Scalar>> cols;
  for (long i = 0; i < dim; ++i) {
    std::vector<Scalar> e(dim, Scalar::zero(f));
    e[i] = Scalar::one(f);
    cols.push_back(std::move(e));
  }
  if (m > 0) {
    Color wc{tgt.sign, m};
    const long wd = b_->dim(wc);
    for (long ws = 0; ws < wd && !cols.empty(); ++ws) {
      PAElement w = b_->basis_element(wc, ws);
      // Constraint matrix (pic_left - pic_right) applied to current columns.
      Matrix constr(f, int(dim), int(cols.size()));
      for (size_t c = 0; c < cols.size(); ++c) {
        PAElement y = PAElement::from_dense(b_, rc, cols[c]);
        PAElement d = pic_left(src, tgt, m, y, w) - pic_right(src, tgt, m, y, w);
        for (const auto& [bi, s] : d.coeffs()) constr.at(int(bi), int(c)) = s;
      }
      auto ker = kernel_basis(constr);
      std::vector<std::vector<Scalar>> next;
      for (const auto& kv : ker) {
        std::vector<Scalar> v(dim, Scalar::zero(f));
        for (size_t c = 0; c < cols.size(); ++c)
          if (!kv[c].is_zero())
            for (long i = 0; i < dim; ++i)
              if (!cols[c][i].is_zero()) v[i] += kv[c] * cols[c][i];
        next.push_back(std::move(v));
      }
      cols = std::move(next);
    }
  }
  std::vector<PAElement> basis;
  for (auto& v : cols) basis.push_back(PAElement::from_dense(b_, rc, v));
  return q_cache_.emplace(key, std::move(basis)).first->second;
}

bool AffineContext::in_q_space(Color src, Color tgt, int m, const PAElement& x) const {
  if (m == 0) return true;
  Color wc{tgt.sign, m};
  for (long ws = 0; ws < b_->dim(wc); ++ws) {
    PAElement w = b_->basis_element(wc, ws);
    if (!(pic_left(src, tgt, m, x, w) == pic_right(src, tgt, m, x, w))) return false;
  }
  return true;
}

PAElement AffineContext::z_inverse(Color c) const {
  auto it = zinv_cache_.find(c);
  if (it != zinv_cache_.end()) return it->second;
  PAElement zi = algebra_inverse(b_->z_element(c));
  return zinv_cache_.emplace(c, std::move(zi)).first->second;
}

PAElement AffineContext::algebra_inverse(const PAElement& x) const {
  const Field* f = b_->field();
  Color c = x.color();
  const long n = b_->dim(c);
  Matrix lm(f, int(n), int(n));
  for (long j = 0; j < n; ++j) {
    PAElement xe = b_->mult(x, b_->basis_element(c, j));
    for (const auto& [bi, s] : xe.coeffs()) lm.at(int(bi), int(j)) = s;
  }
  Matrix rhs(f, int(n), 1);
  PAElement one = b_->unit(c);
  for (const auto& [bi, s] : one.coeffs()) rhs.at(int(bi), 0) = s;
  auto sol = solve_linear(lm, rhs);
  require(sol.has_value(), "algebra_inverse: element not invertible");
  PAElement out(b_, c);
  for (long i = 0; i < n; ++i) out.add_term(i, sol->at(int(i), 0));
  return out;
}

PAElement AffineContext::normalize(Color src, Color tgt, int m, const PAElement& x) const {
  require(x.color() == rep_color(src, tgt, m), "normalize: wrong representative color");
  if (m == 0 || x.is_zero()) return x;
  Color wc{tgt.sign, m};
  const long wd = b_->dim(wc);
  Matrix g = b_->trace_gram(wc);
  Matrix ginv = *solve_linear(g, Matrix::identity(b_->field(), int(wd)));
  PAElement zi = z_inverse(wc);
  PAElement out = b_->zero(x.color());
  for (long i = 0; i < wd; ++i) {
    PAElement xi = pic_right(src, tgt, m, x, b_->basis_element(wc, i));
    // u_i: dual partner sum_j (G^{-1})_{ij} b_j^*, times z^{-1} on the strands.
    PAElement ui = b_->zero(wc);
    for (long j = 0; j < wd; ++j) {
      const Scalar& w = ginv.at(int(i), int(j));
      if (w.is_zero()) continue;
      ui += b_->star(b_->basis_element(wc, j)) * w;
    }
    out += pic_left(src, tgt, m, xi, b_->mult(ui, zi));
  }
  return out;
}

AffineMorphism AffineContext::psi(Color src, Color tgt, int m, const PAElement& x) const {
  check_budget(src, tgt, m);
  require(x.color() == rep_color(src, tgt, m), "psi: wrong representative color");
  return {src, tgt, m, normalize(src, tgt, m, x)};
}

AffineMorphism AffineContext::zero_morphism(Color src, Color tgt) const {
  int m = winding_parity(src, tgt);
  return {src, tgt, m, b_->zero(rep_color(src, tgt, m))};
}

AffineMorphism AffineContext::identity(Color c) const {
  return {c, c, 0, b_->unit({c.sign, 2 * c.k})};
}

AffineMorphism AffineContext::rotation(Color c, int dir) const {
  const int k = c.k;
  Color tgt = c.flipped();
  if (k == 0) return {c, tgt, 1, b_->diagram_element(rep_color(c, tgt, 1), {1, 0})};
  std::vector<int> p(4 * k + 2, -1);
  auto link = [&](int a, int b) { p[a] = b; p[b] = a; };
  if (dir > 0) {
    for (int i = 0; i <= 2 * k - 2; ++i) link(i, 4 * k - 1 - i);
    link(2 * k - 1, 2 * k);
    link(4 * k, 4 * k + 1);
  } else {
    for (int j = 1; j <= 2 * k - 1; ++j) link(j, 4 * k + 1 - j);
    link(0, 4 * k + 1);
    link(2 * k, 2 * k + 1);
  }
  return {c, tgt, 1, b_->diagram_element(rep_color(c, tgt, 1), p)};
}

AffineMorphism AffineContext::winding_inclusion(Color c, int m) const {
  Color tgt{m % 2 ? -c.sign : c.sign, c.k + m};
  check_budget(c, tgt, m);
  return {c, tgt, m, b_->unit(rep_color(c, tgt, m))};
}

AffineMorphism AffineContext::lift(const AffineMorphism& a, int m) const {
  require(m >= a.cutoff && (m - a.cutoff) % 2 == 0, "lift: bad target cutoff");
  if (m == a.cutoff) return a;
  check_budget(a.src, a.tgt, m);
  PAElement x = a.rep;
  int cur = a.cutoff;
  Scalar dinv = b_->delta().inverse();
  while (cur < m) {
    const int l2 = 2 * a.tgt.k, k2 = 2 * a.src.k;
    // two U-turn pairs: atop the right wrap block and atop the left block
    x = b_->insert_cup(x, l2 + cur + 1);
    x = b_->insert_cup(x, l2 + (cur + 2) + k2 + 1);
    x = x * dinv;
    cur += 2;
  }
  return {a.src, a.tgt, m, std::move(x)};
}

AffineMorphism AffineContext::compose(const AffineMorphism& a, const AffineMorphism& b) const {
  require(b.tgt == a.src, "compose: colors do not chain");
  const int m = a.cutoff, n = b.cutoff;
  check_budget(b.src, a.tgt, m + n);
  const int k2 = 2 * a.src.k;
  PAElement z = b_->rotate(b_->contract(b_->rotate(a.rep, -m), b.rep, k2), m);
  return {b.src, a.tgt, m + n, std::move(z)};
}

AffineMorphism AffineContext::star(const AffineMorphism& a) const {
  PAElement x = b_->rotate(b_->star(a.rep), a.cutoff);
  return {a.tgt, a.src, a.cutoff, std::move(x)};
}

AffineMorphism AffineContext::antipode(const AffineMorphism& a) const {
  PAElement x = b_->rotate(b_->reflect(a.rep), a.cutoff);
  return {a.tgt, a.src, a.cutoff, std::move(x)};
}

AffineMorphism AffineContext::add(const AffineMorphism& a, const AffineMorphism& b) const {
  require(a.src == b.src && a.tgt == b.tgt, "add: color mismatch");
  int m = std::max(a.cutoff, b.cutoff);
  AffineMorphism la = lift(a, m), lb = lift(b, m);
  return {a.src, a.tgt, m, la.rep + lb.rep};
}

AffineMorphism AffineContext::scale(const AffineMorphism& a, const Scalar& s) const {
  return {a.src, a.tgt, a.cutoff, a.rep * s};
}

bool AffineContext::is_zero(const AffineMorphism& a) const {
  return normalize(a.src, a.tgt, a.cutoff, a.rep).is_zero();
}

bool AffineContext::equal(const AffineMorphism& a, const AffineMorphism& b) const {
  if (!(a.src == b.src && a.tgt == b.tgt)) return false;
  if ((a.cutoff - b.cutoff) % 2 != 0) return false;
  int m = std::max(a.cutoff, b.cutoff);
  return normalize(a.src, a.tgt, m, lift(a, m).rep) ==
         normalize(a.src, a.tgt, m, lift(b, m).rep);
}

const std::vector<std::pair<PAElement, PAElement>>& AffineContext::dual_pairs(Color c) const {
  auto it = dual_cache_.find(c);
  if (it != dual_cache_.end()) return it->second;
  const long n = b_->dim(c);
  Matrix g = b_->trace_gram(c);
  Matrix ginv = *solve_linear(g, Matrix::identity(b_->field(), int(n)));
  std::vector<std::pair<PAElement, PAElement>> pairs;
  for (long i = 0; i < n; ++i) {
    PAElement ui = b_->zero(c);
    for (long j = 0; j < n; ++j) {
      const Scalar& w = ginv.at(int(i), int(j));
      if (!w.is_zero()) ui += b_->star(b_->basis_element(c, j)) * w;
    }
    pairs.emplace_back(b_->basis_element(c, i), std::move(ui));
  }
  return dual_cache_.emplace(c, std::move(pairs)).first->second;
}

PAElement AffineContext::gamma(const AffineMorphism& a) const {
  require(a.is_endo(), "gamma needs an endomorphism color");
  require(a.cutoff % 2 == 0, "gamma: odd cutoff on endomorphism");
  const int k = a.src.k, l = a.cutoff / 2;
  const int sign = a.src.sign;
  Color out{sign, 2 * k};
  if (l == 0) {
    PAElement x = a.rep;
    return x;
  }
  Color lc{sign, l};
  PAElement acc = b_->zero(out);
  for (const auto& [bi, ui] : dual_pairs(lc)) {
    // cap the right wrap bundle with b_i, the left with the dual partner
    PAElement t = b_->contract(bi, b_->rotate(a.rep, 2 * k), 2 * l);
    t = b_->rotate(t, 2 * k + 2 * l);
    t = b_->contract(t, ui, 2 * l);
    acc += t;
  }
  return acc * pow(b_->delta(), -l);
}

Scalar AffineContext::omega(const AffineMorphism& a) const { return b_->trace(gamma(a)); }

Scalar AffineContext::inner(const AffineMorphism& a, const AffineMorphism& b) const {
  require(a.src == b.src && a.tgt == b.tgt, "inner: color mismatch");
  return omega(compose(star(a), b));
}

Matrix AffineContext::gram(Color src, Color tgt, int m) const {
  Key key{src, tgt, m};
  auto it = gram_cache_.find(key);
  if (it != gram_cache_.end()) return it->second;
  const Field* f = b_->field();
  Color rc = rep_color(src, tgt, m);
  const long dim = b_->dim(rc);
  const auto& qb = q_basis(src, tgt, m);
  // Bilinear form on the full representative basis, then sandwich: the inner
  // product only depends on the morphism, not on the normal form.
  Matrix big(f, int(dim), int(dim));
  for (long u = 0; u < dim; ++u) {
    AffineMorphism au{src, tgt, m, b_->basis_element(rc, u)};
    AffineMorphism aus = star(au);
    for (long v = 0; v < dim; ++v) {
      AffineMorphism av{src, tgt, m, b_->basis_element(rc, v)};
      big.at(int(u), int(v)) = omega(compose(aus, av));
    }
  }
  Matrix k(f, int(dim), int(qb.size()));
  for (size_t j = 0; j < qb.size(); ++j)
    for (const auto& [bi, s] : qb[j].coeffs()) k.at(int(bi), int(j)) = s;
  Matrix g = k.conj_transpose() * big * k;
  gram_cache_.emplace(key, g);
  return g;
}

std::vector<std::pair<int, long>> AffineContext::graded_dims(Color src, Color tgt, int M) const {
  std::vector<std::pair<int, long>> out;
  long prev = 0;
  for (int m = winding_parity(src, tgt); m <= M; m += 2) {
    long d = q_dim(src, tgt, m);
    out.emplace_back(m, d - prev);
    prev = d;
  }
  return out;
}

Matrix AffineContext::pairing_big(Color src, Color tgt, int m) const {
  Key key{src, tgt, m};
  auto it = pairing_cache_.find(key);
  if (it != pairing_cache_.end()) return it->second;
  const Field* f = b_->field();
  Scalar d2k = pow(b_->delta(), 2 * src.k);
  Color ra = rep_color(tgt, src, m), rs = rep_color(src, tgt, m);
  const long da = b_->dim(ra), ds = b_->dim(rs);
  Matrix p(f, int(da), int(ds));
  for (long u = 0; u < da; ++u) {
    AffineMorphism a{tgt, src, m, b_->basis_element(ra, u)};
    for (long v = 0; v < ds; ++v) {
      AffineMorphism s{src, tgt, m, b_->basis_element(rs, v)};
      p.at(int(u), int(v)) = d2k * omega(compose(a, s));
    }
  }
  pairing_cache_.emplace(key, p);
  return p;
}

namespace {

Matrix coeff_matrix(const Field* f, long dim, const std::vector<PAElement>& basis) {
  Matrix k(f, int(dim), int(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j)
    for (const auto& [bi, s] : basis[j].coeffs()) k.at(int(bi), int(j)) = s;
  return k;
}

Matrix plain_transpose(const Field* f, const Matrix& m) {
  Matrix t(f, m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

}  // namespace

DualityResult AffineContext::duality_pairing(Color src, Color tgt, int M) const {
  DualityResult res;
  res.nonsingular = true;
  const Field* f = b_->field();
  for (int m = winding_parity(src, tgt); m <= M; m += 2) {
    const auto& qs = q_basis(src, tgt, m);
    const auto& qa = q_basis(tgt, src, m);
    Matrix big = pairing_big(src, tgt, m);
    Matrix ka = coeff_matrix(f, big.rows(), qa), ks = coeff_matrix(f, big.cols(), qs);
    Matrix p = plain_transpose(f, ka) * big * ks;
    if (p.rows() != p.cols() || rank(p) != p.rows()) res.nonsingular = false;
    res.pairing.push_back(std::move(p));
    res.cutoffs.push_back(m);
  }
  return res;
}

CCElement AffineContext::cc_of_functional(Color src, Color tgt, int M,
                                          const std::map<int, std::vector<Scalar>>& values) const {
  CCElement cc{src, tgt, M, {}, {}, {}};
  const Field* f = b_->field();
  for (int m = winding_parity(src, tgt); m <= M; m += 2) {
    const auto& qs = q_basis(src, tgt, m);
    const auto& qa = q_basis(tgt, src, m);
    auto vit = values.find(m);
    require(vit != values.end() && vit->second.size() == qa.size(),
            "cc_of_functional: missing or misshapen values");
    Matrix big = pairing_big(src, tgt, m);
    Matrix ka = coeff_matrix(f, big.rows(), qa), ks = coeff_matrix(f, big.cols(), qs);
    Matrix p = plain_transpose(f, ka) * big * ks;
    Matrix rhs(f, int(qa.size()), 1);
    for (size_t j = 0; j < qa.size(); ++j) rhs.at(int(j), 0) = vit->second[j];
    auto sol = solve_linear(p, rhs);
    require(sol.has_value(), "cc_of_functional: inconsistent functional");
    PAElement xm = b_->zero(rep_color(src, tgt, m));
    for (size_t i = 0; i < qs.size(); ++i) xm += qs[i] * sol->at(int(i), 0);
    // functional covector over the full representative basis of AP_{tgt,src}
    std::vector<Scalar> fun(big.rows(), Scalar::zero(f));
    for (int u = 0; u < big.rows(); ++u)
      for (const auto& [bi, sv] : xm.coeffs()) fun[u] += big.at(u, int(bi)) * sv;
    PAElement cm = m == 0 ? xm
                          : pic_left(src, tgt, m, xm, z_elem({tgt.sign, m})) *
                                pow(b_->delta(), -m);
    cc.components.emplace(m, std::move(cm));
    cc.reps.emplace(m, std::move(xm));
    cc.functionals.emplace(m, std::move(fun));
  }
  return cc;
}

PAElement AffineContext::cc_rep(const CCElement& c, int m) const {
  auto it = c.reps.find(m);
  require(it != c.reps.end(), "cc_rep: component beyond truncation");
  return it->second;
}

Scalar AffineContext::cc_pair(const CCElement& c, const AffineMorphism& a) const {
  require(a.src == c.tgt && a.tgt == c.src, "cc_pair: color mismatch");
  auto it = c.functionals.find(a.cutoff);
  require(it != c.functionals.end(), "cc_pair: cutoff beyond truncation");
  Scalar out = Scalar::zero(b_->field());
  for (const auto& [bi, s] : a.rep.coeffs()) out += it->second[bi] * s;
  return out;
}

CCElement AffineContext::cc_from_matrix_elements(
    Color src, Color tgt, int M,
    const std::function<Scalar(const AffineMorphism&)>& phi) const {
  std::map<int, std::vector<Scalar>> values;
  for (int m = winding_parity(src, tgt); m <= M; m += 2) {
    const auto& qa = q_basis(tgt, src, m);
    std::vector<Scalar> v;
    for (const auto& q : qa) v.push_back(phi(AffineMorphism{tgt, src, m, q}));
    values.emplace(m, std::move(v));
  }
  return cc_of_functional(src, tgt, M, values);
}

}  // namespace apa
