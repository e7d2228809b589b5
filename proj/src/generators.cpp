#include "apa/generators.hpp"

#include "apa/diagram.hpp"
#include "apa/matrix.hpp"

namespace apa {

namespace gen {

PAElement mult(const Backend& b, const PAElement& x, const PAElement& y) { return b.mult(x, y); }

PAElement unit(const Backend& b, Color c) { return b.unit(c); }

PAElement jones_projection(const Backend& b, Color c) {
  const int n = c.k;
  require(n >= 2, "jones_projection: need k+2 >= 2");
  std::vector<int> p(2 * n, -1);
  auto link = [&](int a, int bb) { p[a] = bb; p[bb] = a; };
  for (int j = 1; j <= n - 2; ++j) link(j - 1, 2 * n - j);  // through strands
  link(n - 2, n - 1);                                       // top cap on columns n-1, n
  link(n, n + 1);                                           // bottom cup
  return b.diagram_element(c, p);
}

PAElement jones_element(const Backend& b, Color c, int i) {
  const int n = c.k;
  require(i >= 1 && i + 1 <= n, "jones_element: column out of range");
  std::vector<int> p(2 * n, -1);
  auto link = [&](int a, int bb) { p[a] = bb; p[bb] = a; };
  for (int j = 1; j <= n; ++j) {
    if (j == i || j == i + 1) continue;
    link(j - 1, 2 * n - j);
  }
  link(i - 1, i);
  link(2 * n - i - 1, 2 * n - i);
  return b.diagram_element(c, p);
}

PAElement right_inclusion(const Backend& b, const PAElement& x) {
  const int k = x.color().k, n2 = 2 * k;
  std::vector<int> t(n2 + (n2 + 2), -1);
  auto link = [&](int a, int bb) { t[a - 1] = bb - 1; t[bb - 1] = a - 1; };
  for (int j = 1; j <= k; ++j) link(n2 + 1 - j, n2 + j);            // top straight
  for (int tt = 1; tt <= k; ++tt) link(n2 + 1 - (k + tt), n2 + k + 2 + tt);  // bottom
  link(n2 + k + 1, n2 + k + 2);                                     // new right strand
  Color tc{x.color().sign, n2 + 1};
  return b.contract(x, b.diagram_element(tc, t), n2);
}

PAElement left_inclusion(const Backend& b, const PAElement& x) {
  const int n2 = 2 * x.color().k;
  return b.rotate(b.insert_cup(x, n2 + 1), -1);
}

PAElement right_condexp(const Backend& b, const PAElement& x) {
  const int n = x.color().k;
  require(n >= 1, "right_condexp: no strand to close");
  return b.cap(x, n) * b.delta().inverse();
}

PAElement left_condexp(const Backend& b, const PAElement& x) {
  const int n = x.color().k;
  require(n >= 1, "left_condexp: no strand to close");
  return b.cap(b.rotate(x, 1), 2 * n - 1) * b.delta().inverse();
}

PAElement rotate_one(const Backend& b, const PAElement& x, int dir) { return b.rotate(x, dir); }

Scalar trace_close(const Backend& b, const PAElement& x) { return b.trace(x); }

}  // namespace gen

PAElement random_element(const Backend& b, Color c, std::mt19937_64& rng) {
  PAElement e(&b, c);
  const long d = b.dim(c);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (long i = 0; i < d; ++i) {
    int v = coeff(rng);
    if (v) e.add_term(i, Scalar(b.field(), v));
  }
  if (e.is_zero()) e.add_term(rng() % d, Scalar::one(b.field()));
  return e;
}

AxiomReport check_axioms(const Backend& b, int K, uint64_t seed, const Scalar* trace_twist) {
  AxiomReport rep;
  std::mt19937_64 rng(seed);
  const Field* f = b.field();
  Scalar one = Scalar::one(f);

  for (int sign : {1, -1}) {
    for (int k = 0; k <= K; ++k) {
      Color c{sign, k};
      std::string cs = c.str();
      PAElement u = b.unit(c);

      // unit and associativity
      bool unit_ok = true, assoc_ok = true;
      for (int t = 0; t < 3; ++t) {
        PAElement x = random_element(b, c, rng);
        if (!(b.mult(u, x) == x) || !(b.mult(x, u) == x)) unit_ok = false;
        PAElement y = random_element(b, c, rng), z = random_element(b, c, rng);
        if (!(b.mult(b.mult(x, y), z) == b.mult(x, b.mult(y, z)))) assoc_ok = false;
      }
      rep.checks.push_back("unit/assoc at " + cs);
      if (!unit_ok) rep.fail("unit law fails at " + cs);
      if (!assoc_ok) rep.fail("associativity fails at " + cs);

      // normalized trace of the unit
      if (!(b.trace(u) == one)) rep.fail("tr(1) != 1 at " + cs);

      // traciality
      for (int t = 0; t < 3; ++t) {
        PAElement x = random_element(b, c, rng), y = random_element(b, c, rng);
        if (!(b.trace(b.mult(x, y)) == b.trace(b.mult(y, x)))) {
          rep.fail("tr(xy) != tr(yx) at " + cs);
          break;
        }
      }

      // exact positivity of the multiplication Gram
      auto cert = ldl_certificate(b.trace_gram(c));
      if (cert.kind != LdlKind::PositiveDefinite)
        rep.fail("trace form not positive definite at " + cs);

      // star is an anti-automorphism
      for (int t = 0; t < 2; ++t) {
        PAElement x = random_element(b, c, rng), y = random_element(b, c, rng);
        if (!(b.star(b.mult(x, y)) == b.mult(b.star(y), b.star(x)))) {
          rep.fail("(xy)* != y* x* at " + cs);
          break;
        }
        if (!(b.star(b.star(x)) == x)) {
          rep.fail("star not involutive at " + cs);
          break;
        }
      }

      // rotation: 2k clicks return home
      if (k >= 1) {
        PAElement x = random_element(b, c, rng);
        if (!(b.rotate(x, 2 * k) == x)) rep.fail("full rotation not identity at " + cs);
        if (!(b.rotate(b.rotate(x, 1), -1) == x)) rep.fail("rotation not invertible at " + cs);
      }

      // conditional expectations against the trace; RE(RI(x)) = x
      if (k >= 1) {
        PAElement x = random_element(b, c, rng);
        if (!(b.trace(gen::right_condexp(b, x)) == b.trace(x)))
          rep.fail("tr o RE != tr at " + cs);
        if (!(b.trace(gen::left_condexp(b, x)) == b.trace(x)))
          rep.fail("tr o LE != tr at " + cs);
      }
      {
        PAElement x = random_element(b, c, rng);
        if (!(gen::right_condexp(b, gen::right_inclusion(b, x)) == x))
          rep.fail("RE(RI(x)) != x at " + cs);
        if (!(b.trace(gen::right_inclusion(b, x)) == b.trace(x)))
          rep.fail("tr(RI(x)) != tr(x) at " + cs);
      }

      // sphericality: left and right closures agree
      {
        PAElement x = random_element(b, c, rng);
        Scalar rc = b.closure_right(x);
        if (trace_twist) rc *= *trace_twist;
        if (!(b.closure_left(x) == rc))
          rep.fail("sphericality fails at " + cs + " (left != right closure)");
      }

      // Jones relations
      if (k >= 2) {
        PAElement e = gen::jones_projection(b, c);
        if (!(b.mult(e, e) == e * b.delta())) rep.fail("E^2 != delta E at " + cs);
        for (int i = 1; i + 2 <= k; ++i) {
          PAElement ei = gen::jones_element(b, c, i), ej = gen::jones_element(b, c, i + 1);
          if (!(b.mult(b.mult(ei, ej), ei) == ei))
            rep.fail("e_i e_{i+1} e_i != e_i at " + cs);
        }
      }
    }
  }
  return rep;
}

}  // namespace apa
