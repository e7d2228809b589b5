#include "apa/spin.hpp"

#include "apa/diagram.hpp"

namespace apa {

namespace {

// Interval I_j of a disc with 2n points is shaded iff j is odd (+) / even (-).
inline bool shaded_interval(int sign, int j) { return sign > 0 ? (j % 2 == 1) : (j % 2 == 0); }

// Slot index of shaded interval I_j among the color's shaded intervals.
inline int slot_of(int sign, int j) {
  int count = 0;
  for (int t = 0; t < j; ++t)
    if (shaded_interval(sign, t)) ++count;
  return count;
}

}  // namespace

SpinBackend::SpinBackend(const Field* f, int q) : q_(q) {
  require(q >= 2, "spin backend needs Q >= 2");
  // delta = sqrt(Q); delta and delta^{1/2} exact in the chosen tower.
  Scalar dh(f);
  mpz_class Q(q), s, t;
  if (mpz_perfect_square_p(Q.get_mpz_t())) {
    mpz_sqrt(s.get_mpz_t(), Q.get_mpz_t());
    if (mpz_perfect_square_p(s.get_mpz_t())) {
      mpz_sqrt(t.get_mpz_t(), s.get_mpz_t());
      dh = Scalar(f, Rational(t));
    } else {
      require(f->degree() == 2 && f->theta_power() == Rational(s),
              "field does not contain Q^{1/4}");
      dh = Scalar::theta(f);
    }
  } else {
    require(f->degree() == 4 && f->theta_power() == Rational(Q),
            "field does not contain Q^{1/4}");
    dh = Scalar::theta(f);
  }
  Scalar d = dh * dh;
  init_scalars(f, d, dh);
  half_ = dh;
  half_inv_ = dh.inverse();
  delta_inv_ = d.inverse();
}

int SpinBackend::shaded_regions(Color c) {
  if (c.sign > 0) return c.k;
  return c.k == 0 ? 1 : c.k;
}

long SpinBackend::dim(Color c) const {
  int r = shaded_regions(c);
  if (r == 0) return 1;
  long d = 1;
  for (int t = 1; t < r; ++t) d *= q_;
  return d;
}

std::vector<int> SpinBackend::tuple_of(Color c, long b) const {
  int r = shaded_regions(c);
  std::vector<int> t(r, 0);
  for (int i = 1; i < r; ++i) {
    t[i] = int(b % q_);
    b /= q_;
  }
  return t;
}

long SpinBackend::index_of(Color c, const std::vector<int>& tuple) const {
  int r = shaded_regions(c);
  require(int(tuple.size()) == r, "spin index_of: wrong tuple length");
  long idx = 0, mul = 1;
  int base = r ? tuple[0] : 0;
  for (int i = 1; i < r; ++i) {
    int v = ((tuple[i] - base) % q_ + q_) % q_;
    idx += mul * v;
    mul *= q_;
  }
  return idx;
}

SpinBackend::Naive SpinBackend::expand(Color c, long b) const {
  Naive f;
  std::vector<int> t = tuple_of(c, b);
  if (t.empty()) {
    f.emplace(t, Scalar::one(field()));
    return f;
  }
  for (int g = 0; g < q_; ++g) {
    std::vector<int> u = t;
    for (auto& v : u) v = (v + g) % q_;
    f.emplace(std::move(u), Scalar::one(field()));
  }
  return f;
}

PAElement SpinBackend::compress(Color c, const Naive& f) const {
  PAElement e(this, c);
  for (const auto& [t, s] : f) {
    if (!t.empty() && t[0] != 0) continue;  // one canonical tuple per orbit
    e.add_term(index_of(c, t), s);
  }
  return e;
}

SpinBackend::Naive SpinBackend::naive_tensor(Color cx, const std::vector<int>& x, Color cy,
                                             const std::vector<int>& y) const {
  Naive out;
  const int a = cx.k, b = cy.k;
  if (cx.sign > 0) {
    std::vector<int> t;
    t.reserve(x.size() + y.size());
    t.insert(t.end(), x.begin(), x.end());
    t.insert(t.end(), y.begin(), y.end());
    out.emplace(std::move(t), Scalar::one(field()));
    return out;
  }
  // Minus colors: the two marked regions and the junction are one region.
  if (x[0] != y[0]) return out;
  std::vector<int> t;
  if (a == 0) {
    t = y;
  } else if (b == 0) {
    t = x;
  } else {
    t.reserve(a + b);
    for (int i = 0; i < a; ++i) t.push_back(x[i]);
    t.push_back(x[0]);  // junction interval I_{2a}
    for (int u = 1; u < b; ++u) t.push_back(y[u]);
  }
  out.emplace(std::move(t), Scalar::one(field()));
  return out;
}

SpinBackend::Naive SpinBackend::naive_cap(Color c, const Naive& f, int pos) const {
  const int n2 = 2 * c.k;
  require(pos >= 1 && pos + 1 <= n2, "spin cap: bad position");
  Naive out;
  const bool pinch_shaded = shaded_interval(c.sign, pos);
  for (const auto& [t, s] : f) {
    if (pinch_shaded) {
      std::vector<int> u = t;
      u.erase(u.begin() + slot_of(c.sign, pos));
      auto [it, fresh] = out.try_emplace(std::move(u), Scalar::zero(field()));
      it->second += s * half_inv_;
    } else {
      int ja = pos - 1, jb = (pos + 1) % n2;
      if (ja == jb) {  // two-point disc: single shaded region survives
        auto [it, fresh] = out.try_emplace(t, Scalar::zero(field()));
        it->second += s * half_;
        continue;
      }
      int sa = t[slot_of(c.sign, ja)], sb = t[slot_of(c.sign, jb)];
      if (sa != sb) continue;
      std::vector<int> u = t;
      // the interval that does not survive gets erased
      int gone = (jb == 0) ? ja : jb;
      u.erase(u.begin() + slot_of(c.sign, gone));
      auto [it, fresh] = out.try_emplace(std::move(u), Scalar::zero(field()));
      it->second += s * half_;
    }
  }
  return out;
}

SpinBackend::Naive SpinBackend::naive_cup(Color c, const Naive& f, int pos) const {
  const int n2 = 2 * c.k;
  require(pos >= 1 && pos <= n2 + 1, "spin cup: bad position");
  Naive out;
  Color oc{c.sign, c.k + 1};
  const bool pocket_shaded = shaded_interval(c.sign, pos);
  for (const auto& [t, s] : f) {
    if (pocket_shaded) {
      int at = slot_of(c.sign, pos);
      for (int v = 0; v < q_; ++v) {
        std::vector<int> u = t;
        u.insert(u.begin() + at, v);
        auto [it, fresh] = out.try_emplace(std::move(u), Scalar::zero(field()));
        it->second += s * half_inv_;
      }
    } else {
      if (c.k == 0) {
        // minus 0: the single shaded region persists, no new slot
        auto [it, fresh] = out.try_emplace(t, Scalar::zero(field()));
        it->second += s * half_;
        continue;
      }
      int amb = (pos - 1) % n2;
      int ambient = t[slot_of(c.sign, amb)];
      int new_interval = pos <= n2 ? pos + 1 : n2;
      std::vector<int> u = t;
      u.insert(u.begin() + slot_of(oc.sign, new_interval), ambient);
      auto [it, fresh] = out.try_emplace(std::move(u), Scalar::zero(field()));
      it->second += s * half_;
    }
  }
  return out;
}

PAElement SpinBackend::contract_basis(Color cx, long bx, Color cy, long by, int m) const {
  Color out{cx.sign, cx.k + cy.k - m};
  Naive fx = expand(cx, bx), fy = expand(cy, by);
  Naive acc;
  for (const auto& [tx, sx] : fx)
    for (const auto& [ty, sy] : fy) {
      Naive cur = naive_tensor(cx, tx, cy, ty);
      if (cur.empty()) continue;
      Scalar w = sx * sy;
      Color cc{cx.sign, cx.k + cy.k};
      for (int t = 0; t < m; ++t) {
        cur = naive_cap(cc, cur, 2 * cx.k - t);
        cc.k -= 1;
      }
      for (auto& [tu, su] : cur) {
        auto [it, fresh] = acc.try_emplace(tu, Scalar::zero(field()));
        it->second += su * w;
      }
    }
  return compress(out, acc);
}

PAElement SpinBackend::rotate_basis(Color c, long b, int dir) const {
  require(c.k >= 1, "spin rotate: need at least one strand");
  Color out = c.flipped();
  // One-click rotation carries a modulus weight depending on the source
  // shading; this is the perturbation that makes the symmetrized spin model
  // spherical with tr(1) = 1 at every color (and keeps the rotation unitary
  // and 2k-periodic, since the weights cancel in +/- pairs).
  const Scalar rot_w = c.sign > 0 ? delta() : delta_inv_;
  Naive f = expand(c, b), g;
  for (const auto& [t, s] : f) {
    std::vector<int> u(t.size());
    const int n = int(t.size());
    if (dir > 0) {
      if (c.sign > 0) u = t;                       // + -> -: slots relabel in place
      else {                                        // - -> +: shift left
        for (int i = 0; i + 1 < n; ++i) u[i] = t[i + 1];
        u[n - 1] = t[0];
      }
    } else {
      if (c.sign > 0) {                             // + -> -: shift right
        u[0] = t[n - 1];
        for (int i = 1; i < n; ++i) u[i] = t[i - 1];
      } else u = t;                                 // - -> +: in place
    }
    g.emplace(std::move(u), s * rot_w);
  }
  return compress(out, g);
}

PAElement SpinBackend::reflect_basis(Color c, long b) const {
  Naive f = expand(c, b), g;
  for (const auto& [t, s] : f) {
    std::vector<int> u = t;
    if (c.sign > 0) std::reverse(u.begin(), u.end());
    else if (u.size() > 1) std::reverse(u.begin() + 1, u.end());
    g.emplace(std::move(u), s);
  }
  return compress(c, g);
}

PAElement SpinBackend::cap(const PAElement& x, int pos) const {
  Color out{x.color().sign, x.color().k - 1};
  Naive acc;
  for (const auto& [b, s] : x.coeffs()) {
    Naive cur = naive_cap(x.color(), expand(x.color(), b), pos);
    for (auto& [t, v] : cur) {
      auto [it, fresh] = acc.try_emplace(t, Scalar::zero(field()));
      it->second += v * s;
    }
  }
  return compress(out, acc);
}

PAElement SpinBackend::insert_cup(const PAElement& x, int pos) const {
  Color out{x.color().sign, x.color().k + 1};
  Naive acc;
  for (const auto& [b, s] : x.coeffs()) {
    Naive cur = naive_cup(x.color(), expand(x.color(), b), pos);
    for (auto& [t, v] : cur) {
      auto [it, fresh] = acc.try_emplace(t, Scalar::zero(field()));
      it->second += v * s;
    }
  }
  return compress(out, acc);
}

PAElement SpinBackend::diagram_element(Color c, const std::vector<int>& partner) const {
  require(int(partner.size()) == 2 * c.k, "diagram_element: size mismatch");
  require(c.k == 0 || (diagram::is_valid_matching(partner) && diagram::is_noncrossing(partner)),
          "diagram_element: not a planar matching");
  if (c.k == 0) return basis_element(c, 0);
  // peel an innermost arc and rebuild through insert_cup
  int at = -1;
  for (int i = 0; i + 1 < 2 * c.k; ++i)
    if (partner[i] == i + 1) { at = i; break; }
  std::vector<int> rest;
  rest.reserve(2 * c.k - 2);
  std::vector<int> relabel(2 * c.k, -1);
  int next = 0;
  for (int i = 0; i < 2 * c.k; ++i)
    if (i != at && i != at + 1) relabel[i] = next++;
  for (int i = 0; i < 2 * c.k; ++i) {
    if (i == at || i == at + 1) continue;
    rest.push_back(relabel[partner[i]]);
  }
  PAElement inner = diagram_element({c.sign, c.k - 1}, rest);
  return insert_cup(inner, at + 1);
}

Scalar SpinBackend::closure_scalar(Color c, long) const {
  require(c.k == 0, "closure_scalar: color must be eps0");
  return Scalar::one(field());
}

}  // namespace apa
