#include "apa/modules.hpp"

#include "apa/diagram.hpp"
#include "apa/generators.hpp"

namespace apa {

Scalar ModuleContext::inner(const AffineModule& m, const ModuleVector& v,
                            const ModuleVector& w) const {
  require(v.color == w.color, "module inner: color mismatch");
  Scalar out = Scalar::zero(b_->field());
  for (const auto& [i, a] : v.terms)
    for (const auto& [j, bm] : w.terms) {
      AffineMorphism prod = ap_->compose(ap_->star(a), bm);  // in AP_{g_j, g_i}
      out += ap_->cc_pair(m.kernel[i][j], prod);
    }
  return out;
}

ModuleVector ModuleContext::act(const AffineMorphism& a, const ModuleVector& v) const {
  require(a.src == v.color, "module act: colors do not chain");
  ModuleVector out{a.tgt, {}};
  for (const auto& [i, t] : v.terms) out.terms.emplace_back(i, ap_->compose(a, t));
  return out;
}

ModuleVector ModuleContext::add(const ModuleVector& v, const ModuleVector& w) const {
  require(v.color == w.color, "module add: color mismatch");
  ModuleVector out = v;
  for (const auto& t : w.terms) out.terms.push_back(t);
  return out;
}

ModuleVector ModuleContext::scale(const ModuleVector& v, const Scalar& s) const {
  ModuleVector out{v.color, {}};
  for (const auto& [i, t] : v.terms) out.terms.emplace_back(i, ap_->scale(t, s));
  return out;
}

ModuleVector ModuleContext::generator_vector(const AffineModule& m, int i) const {
  return {m.gen_colors[i], {{i, ap_->identity(m.gen_colors[i])}}};
}

SpaceResult ModuleContext::space(const AffineModule& m, Color c, int span_budget) const {
  if (span_budget < 0) span_budget = default_span(m);
  SpaceResult res;
  for (int i = 0; i < int(m.gen_colors.size()); ++i) {
    Color g = m.gen_colors[i];
    for (int t = winding_parity(g, c); t <= span_budget; t += 2) {
      if (g.k + c.k + t > ap_->budget()) break;
      for (const auto& q : ap_->q_basis(g, c, t))
        res.spanning.push_back({c, {{i, AffineMorphism{g, c, t, q}}}});
    }
  }
  const int n = int(res.spanning.size());
  res.gram = Matrix(b_->field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res.gram.at(i, j) = inner(m, res.spanning[i], res.spanning[j]);
  res.dim = rank(res.gram);
  return res;
}

AffineModule ModuleContext::module_from_functionals(
    std::vector<Color> gen_colors, int truncation,
    const std::function<Scalar(int, int, const AffineMorphism&)>& phi, std::string name) const {
  AffineModule m;
  m.gen_colors = std::move(gen_colors);
  m.truncation = truncation;
  m.name = std::move(name);
  const int n = int(m.gen_colors.size());
  m.kernel.resize(n);
  for (int i = 0; i < n; ++i) {
    m.kernel[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      auto f = [&phi, i, j](const AffineMorphism& a) { return phi(i, j, a); };
      m.kernel[i].push_back(
          ap_->cc_from_matrix_elements(m.gen_colors[i], m.gen_colors[j], truncation, f));
    }
  }
  return m;
}

bool ModuleContext::kernel_positive(const AffineModule& m, int kmax, int span_budget) const {
  for (int sign : {1, -1})
    for (int k = 0; k <= kmax; ++k) {
      SpaceResult sr = space(m, {sign, k}, span_budget);
      if (sr.spanning.empty()) continue;
      auto cert = ldl_certificate(sr.gram);
      if (cert.kind == LdlKind::Indefinite) return false;
    }
  return true;
}

PAElement ModuleContext::act_trivial(const AffineMorphism& a, const PAElement& y) const {
  require(a.src == y.color(), "act_trivial: color mismatch");
  PAElement w = y;
  for (int t = 0; t < a.cutoff; ++t) w = gen::left_inclusion(*b_, w);
  return b_->contract(w, b_->rotate(a.rep, 2 * a.tgt.k), 2 * (a.src.k + a.cutoff));
}

Scalar ModuleContext::trivial_ip(const PAElement& x, const PAElement& y) const {
  require(x.color() == y.color(), "trivial_ip: color mismatch");
  if (x.color().k == 0) return b_->scalar_of(b_->star(x)) * b_->scalar_of(y);
  return b_->closure_right(b_->mult(b_->star(x), y));
}

AffineModule ModuleContext::trivial_module(int truncation) const {
  PAElement one = b_->empty_diagram();
  auto phi = [this, one](int, int, const AffineMorphism& a) {
    return trivial_ip(one, act_trivial(a, one));
  };
  return module_from_functionals({plus(0)}, truncation, phi, "P");
}

ModuleVector ModuleContext::trivial_vector(const PAElement& x) const {
  Color c = x.color();
  if (c.sign > 0) return {c, {{0, ap_->psi(plus(0), c, 0, x)}}};
  PAElement y = b_->rotate(x, -1);
  ModuleVector v = trivial_vector(y);
  return act(ap_->rotation(y.color(), 1), v);
}

PAElement ModuleContext::trivial_eval(const ModuleVector& v) const {
  PAElement out = b_->zero(v.color);
  for (const auto& [i, a] : v.terms) out += act_trivial(a, b_->empty_diagram());
  return out;
}

AffineModule ModuleContext::regular_module(Color c, int truncation) const {
  auto phi = [this](int, int, const AffineMorphism& a) { return ap_->omega(a); };
  return module_from_functionals({c}, truncation, phi, "H^" + c.str());
}

PAElement ModuleContext::cc_zero(const AffineModule& m, const ModuleVector& v,
                                 const ModuleVector& w) const {
  Color src = v.color, tgt = w.color;
  require(src.sign == tgt.sign, "cc_zero: needs matching signs");
  auto phi = [&](const AffineMorphism& a) { return inner(m, v, act(a, w)); };
  CCElement cc = ap_->cc_from_matrix_elements(src, tgt, 0, phi);
  return cc.components.at(0);
}

Scalar ModuleContext::fusion_inner(const AffineModule& V, const AffineModule& W,
                                   const FusionVector& u1, const FusionVector& u2) const {
  require(u1.color == u2.color, "fusion_inner: color mismatch");
  const int m = u1.color.k;
  const int k1 = u1.left.color.k, l1 = u1.right.color.k;
  const int k2 = u2.left.color.k, l2 = u2.right.color.k;

  PAElement ccv = cc_zero(V, u1.left, u2.left);    // in P_{eta(k1+k2)}
  PAElement ccw = cc_zero(W, u1.right, u2.right);  // in P_{eta(l1+l2)}

  // Closed pairing picture: x2 glued to the c-boxes, then to x1*.
  PAElement a = b_->contract(u2.middle, ccv, 2 * k2);
  a = b_->rotate(a, 2 * m + 2 * l2);
  a = b_->contract(a, ccw, 2 * l2);
  PAElement x1s = b_->star(u1.middle);
  a = b_->rotate(a, -(2 * m + 2 * l1));
  a = b_->contract(a, x1s, 2 * k1);
  // layout now [OUT_m(x2) | ccw legs rev (2l1) | x1* zeta legs (2l1) | x1* m legs rev (2m)]
  for (int t = 0; t < 2 * l1; ++t) a = b_->cap(a, 2 * m + 2 * l1 - t);
  for (int t = 0; t < 2 * m; ++t) a = b_->cap(a, 2 * m - t);
  return b_->scalar_of(a);
}

AffineMorphism ModuleContext::ring_merge(int sign, int k, int l, int n) const {
  int esign = n % 2 ? -sign : sign;
  Color src{esign, k + l + 2 * n}, tgt{esign, k + l + n};
  const int Ns = 2 * (k + l + 2 * n), Nt = 2 * (k + l + n);
  std::vector<int> p(Nt + Ns, -1);
  auto link = [&](int ta, int tb) { p[ta - 1] = tb - 1; p[tb - 1] = ta - 1; };
  auto src_pos = [&](int i) { return Nt + (Ns + 1 - i); };
  auto rlV = [&](int j) { return j; };
  auto xiP = [&](int i) { return n + i; };
  auto rrV = [&](int j) { return n + 2 * k + j; };
  auto rlW = [&](int j) { return 2 * n + 2 * k + j; };
  auto zeP = [&](int i) { return 3 * n + 2 * k + i; };
  auto rrW = [&](int j) { return 3 * n + 2 * k + 2 * l + j; };
  for (int j = 1; j <= n; ++j) {
    link(j, src_pos(rlV(j)));
    link(src_pos(rrV(n + 1 - j)), src_pos(rlW(j)));
    link(src_pos(rrW(n + 1 - j)), n + 2 * (k + l) + (n + 1 - j));
  }
  for (int i = 1; i <= 2 * k; ++i) link(n + i, src_pos(xiP(i)));
  for (int i = 1; i <= 2 * l; ++i) link(n + 2 * k + i, src_pos(zeP(i)));
  return ap_->psi(src, tgt, 0, b_->diagram_element(AffineContext::rep_color(src, tgt, 0), p));
}

FusionVector ModuleContext::reduce(const AffineModule& V, const AffineModule& W,
                                   const ModuleVector& xi, const AffineMorphism& a,
                                   const ModuleVector& zeta) const {
  const int n = a.cutoff;
  const int k = xi.color.k, l = zeta.color.k;
  require(a.src.k == k + l && a.src.sign == xi.color.sign && xi.color.sign == zeta.color.sign,
          "reduce: pair colors do not match the morphism source");
  if (n == 0) return {xi, a.rep, zeta, a.tgt};
  ModuleVector xi2 = act(ap_->winding_inclusion(xi.color, n), xi);
  ModuleVector zeta2 = act(ap_->winding_inclusion(zeta.color, n), zeta);
  AffineMorphism w = ring_merge(xi.color.sign, k, l, n);
  AffineMorphism atilde = ap_->psi(w.tgt, a.tgt, 0, a.rep);
  AffineMorphism middle = ap_->compose(atilde, w);
  require(middle.cutoff == 0, "reduce: merge did not land at winding zero");
  return {xi2, middle.rep, zeta2, a.tgt};
}

FusionVector ModuleContext::fusion_act(const AffineModule& V, const AffineModule& W,
                                       const AffineMorphism& bm, const FusionVector& u) const {
  require(bm.src == u.color, "fusion_act: colors do not chain");
  Color pair{u.left.color.sign, u.left.color.k + u.right.color.k};
  AffineMorphism a{pair, u.color, 0, u.middle};
  AffineMorphism comp = ap_->compose(bm, a);
  return reduce(V, W, u.left, comp, u.right);
}

std::vector<FusionVector> ModuleContext::fusion_spanning(const AffineModule& V,
                                                         const AffineModule& W, Color c,
                                                         int span_budget) const {
  if (span_budget < 0) span_budget = std::min(default_span(V), default_span(W));
  std::vector<FusionVector> out;
  for (int i = 0; i < int(V.gen_colors.size()); ++i)
    for (int j = 0; j < int(W.gen_colors.size()); ++j) {
      Color gi = V.gen_colors[i], gj = W.gen_colors[j];
      if (gi.sign != gj.sign) continue;
      Color pair{gi.sign, gi.k + gj.k};
      for (int t = winding_parity(pair, c); t <= span_budget; t += 2) {
        if (pair.k + c.k + t > ap_->budget()) break;
        for (const auto& q : ap_->q_basis(pair, c, t)) {
          AffineMorphism a{pair, c, t, q};
          out.push_back(reduce(V, W, generator_vector(V, i), a, generator_vector(W, j)));
        }
      }
    }
  return out;
}

AffineModule ModuleContext::fuse(const AffineModule& V, const AffineModule& W) const {
  std::vector<Color> gens;
  std::vector<std::pair<int, int>> which;
  for (int i = 0; i < int(V.gen_colors.size()); ++i)
    for (int j = 0; j < int(W.gen_colors.size()); ++j) {
      if (V.gen_colors[i].sign != W.gen_colors[j].sign) continue;
      gens.push_back({V.gen_colors[i].sign, V.gen_colors[i].k + W.gen_colors[j].k});
      which.emplace_back(i, j);
    }
  int trunc = std::min(V.truncation, W.truncation);
  auto pair_vector = [&, this](int g, const AffineMorphism& a) {
    auto [i, j] = which[g];
    return reduce(V, W, generator_vector(V, i), a, generator_vector(W, j));
  };
  auto phi = [&, this](int gi, int gj, const AffineMorphism& a) {
    FusionVector ui = pair_vector(gi, ap_->identity(gens[gi]));
    FusionVector uj = pair_vector(gj, a);
    return fusion_inner(V, W, ui, uj);
  };
  return module_from_functionals(gens, trunc, phi, V.name + "(x)" + W.name);
}

ModuleVector ModuleContext::unit_left(const AffineModule& V, const FusionVector& u) const {
  PAElement xi = trivial_eval(u.left);
  const int l = u.right.color.k;
  PAElement xrep = b_->contract(xi, b_->unit({xi.color().sign, 2 * l}), 0);
  Color pair{xi.color().sign, xi.color().k + l};
  AffineMorphism incl = ap_->psi(u.right.color, pair, 0, xrep);
  AffineMorphism a{pair, u.color, 0, u.middle};
  return act(ap_->compose(a, incl), u.right);
}

ModuleVector ModuleContext::unit_right(const AffineModule& V, const FusionVector& u) const {
  PAElement xi = trivial_eval(u.right);
  const int l = u.left.color.k, j = xi.color().k;
  const int n2 = 2 * j;
  std::vector<int> t(n2 + (2 * (l + j) + 2 * l), -1);
  auto link = [&](int a1, int b1) { t[a1 - 1] = b1 - 1; t[b1 - 1] = a1 - 1; };
  auto slot = [&](int i) { return n2 + 1 - i; };
  auto outp = [&](int i) { return n2 + i; };
  auto srcp = [&](int i) { return n2 + 2 * (l + j) + (2 * l + 1 - i); };
  for (int i = 1; i <= 2 * l; ++i) link(outp(i), srcp(i));
  for (int i = 1; i <= 2 * j; ++i) link(slot(i), outp(2 * l + i));
  Color tc{xi.color().sign, (n2 + 2 * (l + j) + 2 * l) / 2};
  PAElement xrep = n2 == 0 ? b_->contract(xi, b_->unit({xi.color().sign, l}), 0)
                           : b_->contract(xi, b_->diagram_element(tc, t), n2);
  Color pair{xi.color().sign, l + j};
  AffineMorphism incl = ap_->psi(u.left.color, pair, 0, xrep);
  AffineMorphism a{pair, u.color, 0, u.middle};
  return act(ap_->compose(a, incl), u.left);
}

PAElement ModuleContext::assoc_forward_middle(int m, const PAElement& x,
                                              const PAElement& y) const {
  return b_->contract(y, x, 2 * m);
}

PAElement ModuleContext::assoc_inverse_middle(int k2, int n2, const PAElement& x,
                                              const PAElement& y) const {
  return b_->rotate(b_->contract(b_->rotate(y, -k2), x, n2), k2);
}

Scalar ModuleContext::contragradient_phi(const AffineModule& m, int i, int j,
                                         const AffineMorphism& a) const {
  ModuleVector gi = generator_vector(m, i), gj = generator_vector(m, j);
  AffineMorphism moved = ap_->antipode(ap_->star(a));
  return inner(m, gi, act(moved, gj)).conj();
}

AffineModule ModuleContext::contragradient(const AffineModule& m) const {
  auto phi = [this, &m](int i, int j, const AffineMorphism& a) {
    return contragradient_phi(m, i, j, a);
  };
  return module_from_functionals(m.gen_colors, m.truncation, phi, m.name + "~");
}

AffineMorphism ModuleContext::full_twist(Color c) const {
  const int k = c.k;
  if (k == 0) return ap_->identity(c);
  const int m = 2 * k;
  const int N = 2 * (2 * k + m);
  std::vector<int> p(N, -1);
  auto link = [&](int a, int bb) { p[a - 1] = bb - 1; p[bb - 1] = a - 1; };
  auto srcp = [&](int i) { return 2 * k + m + (2 * k + 1 - i); };
  auto rw = [&](int q) { return 2 * k + q; };
  auto lw = [&](int q) { return 2 * k + m + 2 * k + (m + 1 - q); };
  for (int i = 1; i <= 2 * k; ++i) {
    link(srcp(i), lw(2 * k + 1 - i));
    link(rw(2 * k + 1 - i), i);
  }
  return {c, c, m, b_->diagram_element(AffineContext::rep_color(c, c, m), p)};
}

AffineMorphism ModuleContext::braid_morphism(int sign, int k, int l) const {
  Color c{sign, k + l};
  if (k == 0) return ap_->identity(c);
  const int m = 2 * k;
  const int N = 2 * (2 * (k + l) + m);
  std::vector<int> p(N, -1);
  auto link = [&](int a, int bb) { p[a - 1] = bb - 1; p[bb - 1] = a - 1; };
  auto srcp = [&](int i) { return 2 * (k + l) + m + (2 * (k + l) + 1 - i); };
  auto rw = [&](int q) { return 2 * (k + l) + q; };
  auto lw = [&](int q) { return 2 * (k + l) + m + 2 * (k + l) + (m + 1 - q); };
  for (int i = 1; i <= 2 * l; ++i) link(srcp(2 * k + i), i);
  for (int i = 1; i <= 2 * k; ++i) {
    link(srcp(i), lw(2 * k + 1 - i));
    link(rw(2 * k + 1 - i), 2 * l + i);
  }
  return {c, c, m, b_->diagram_element(AffineContext::rep_color(c, c, m), p)};
}

FusionVector ModuleContext::braid_apply(const AffineModule& V, const AffineModule& W,
                                        const FusionVector& u) const {
  const int k = u.left.color.k, l = u.right.color.k;
  const int sign = u.left.color.sign;
  Color pair{sign, k + l};
  AffineMorphism a{pair, u.color, 0, u.middle};
  AffineMorphism moved = ap_->compose(a, braid_morphism(sign, k, l));
  ModuleVector txi = act(full_twist(u.left.color), u.left);
  return reduce(W, V, u.right, moved, txi);
}

ModuleContext::HomResult ModuleContext::hom_space(const AffineModule& V, const AffineModule& W,
                                                  int kmax, int span_budget) const {
  if (span_budget < 0) span_budget = std::min(default_span(V), default_span(W));
  const Field* f = b_->field();
  std::vector<SpaceResult> wspace;
  std::vector<int> offset;
  int nvar = 0;
  for (Color g : V.gen_colors) {
    wspace.push_back(space(W, g, span_budget));
    offset.push_back(nvar);
    nvar += int(wspace.back().spanning.size());
  }
  std::vector<std::vector<Scalar>> rows;
  for (int sign : {1, -1})
    for (int kk = 0; kk <= kmax; ++kk) {
      Color c{sign, kk};
      SpaceResult vs = space(V, c, span_budget);
      if (vs.spanning.empty()) continue;
      SpaceResult ws = space(W, c, span_budget);
      auto nulls = kernel_basis(vs.gram);
      for (const auto& nv : nulls) {
        std::vector<std::vector<Scalar>> probe_rows(
            ws.spanning.size(), std::vector<Scalar>(nvar, Scalar::zero(f)));
        for (size_t s = 0; s < vs.spanning.size(); ++s) {
          if (nv[s].is_zero()) continue;
          const auto& [gi, a] = vs.spanning[s].terms[0];
          for (size_t t = 0; t < wspace[gi].spanning.size(); ++t) {
            ModuleVector img = act(a, wspace[gi].spanning[t]);
            for (size_t pr = 0; pr < ws.spanning.size(); ++pr) {
              Scalar val = inner(W, ws.spanning[pr], img);
              if (!val.is_zero()) probe_rows[pr][offset[gi] + t] += nv[s] * val;
            }
          }
        }
        for (auto& r : probe_rows) rows.push_back(std::move(r));
      }
    }
  std::vector<std::vector<Scalar>> sols;
  if (rows.empty()) {
    for (int v = 0; v < nvar; ++v) {
      std::vector<Scalar> e(nvar, Scalar::zero(f));
      e[v] = Scalar::one(f);
      sols.push_back(std::move(e));
    }
  } else {
    Matrix cm(f, int(rows.size()), nvar);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int v = 0; v < nvar; ++v) cm.at(int(r), v) = rows[r][v];
    sols = kernel_basis(cm);
  }
  HomResult res;
  for (const auto& sol : sols) {
    std::vector<ModuleVector> img;
    for (int gi = 0; gi < int(V.gen_colors.size()); ++gi) {
      ModuleVector w{V.gen_colors[gi], {}};
      for (size_t t = 0; t < wspace[gi].spanning.size(); ++t)
        if (!sol[offset[gi] + t].is_zero())
          w = add(w, scale(wspace[gi].spanning[t], sol[offset[gi] + t]));
      img.push_back(std::move(w));
    }
    res.basis.push_back(std::move(img));
  }
  Matrix sg(f, int(res.basis.size()), int(res.basis.size()));
  for (size_t a1 = 0; a1 < res.basis.size(); ++a1)
    for (size_t b1 = 0; b1 < res.basis.size(); ++b1) {
      Scalar s = Scalar::zero(f);
      for (int gi = 0; gi < int(V.gen_colors.size()); ++gi)
        s += inner(W, res.basis[a1][gi], res.basis[b1][gi]);
      sg.at(int(a1), int(b1)) = s;
    }
  res.dim = res.basis.empty() ? 0 : rank(sg);
  return res;
}

bool ModuleContext::is_isometric_map(const AffineModule& V, const AffineModule& W,
                                     const std::vector<ModuleVector>& images, int kmax,
                                     int span_budget) const {
  if (span_budget < 0) span_budget = std::min(default_span(V), default_span(W));
  for (int sign : {1, -1})
    for (int kk = 0; kk <= kmax; ++kk) {
      Color c{sign, kk};
      SpaceResult vs = space(V, c, span_budget);
      for (size_t s = 0; s < vs.spanning.size(); ++s)
        for (size_t t = 0; t < vs.spanning.size(); ++t) {
          const auto& [gi, a] = vs.spanning[s].terms[0];
          const auto& [gj, bb] = vs.spanning[t].terms[0];
          Scalar rhs = inner(W, act(a, images[gi]), act(bb, images[gj]));
          if (!(vs.gram.at(int(s), int(t)) == rhs)) return false;
        }
    }
  return true;
}

}  // namespace apa
