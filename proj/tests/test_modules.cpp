#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apa/generators.hpp"
#include "apa/modules.hpp"
#include "apa/spin.hpp"
#include "apa/tl.hpp"

using namespace apa;

namespace {

struct Ctx {
  Field f;
  TLBackend b;
  AffineContext ap;
  ModuleContext mc;
  Ctx() : f(Field::for_delta(Rational(9, 4))), b(&f, Rational(9, 4)), ap(&b, 10), mc(&ap) {}
};

struct SpinCtx {
  Field f;
  SpinBackend b;
  AffineContext ap;
  ModuleContext mc;
  SpinCtx() : f(Field::for_spin(2)), b(&f, 2), ap(&b, 10), mc(&ap) {}
};

}  // namespace

TEST_CASE("trivial module: action and spaces match P itself") {
  Ctx c;
  std::mt19937_64 rng(1);
  for (int t = 0; t < 3; ++t) {
    PAElement y = random_element(c.b, plus(1), rng);
    CHECK(c.mc.act_trivial(c.ap.identity(plus(1)), y) == y);
    AffineMorphism a = c.ap.psi(plus(1), plus(1), 2, random_element(c.b, plus(4), rng));
    AffineMorphism bm = c.ap.psi(plus(1), plus(1), 0, random_element(c.b, plus(2), rng));
    CHECK(c.mc.act_trivial(c.ap.compose(a, bm), y) ==
          c.mc.act_trivial(a, c.mc.act_trivial(bm, y)));
    PAElement w = random_element(c.b, plus(1), rng);
    CHECK(c.mc.trivial_ip(w, c.mc.act_trivial(a, y)) ==
          c.mc.trivial_ip(c.mc.act_trivial(c.ap.star(a), w), y));
  }
  AffineModule P = c.mc.trivial_module(4);
  for (Color col : {plus(0), plus(1), plus(2), minus(1)}) {
    for (int t = 0; t < 2; ++t) {
      PAElement x = random_element(c.b, col, rng);
      CHECK(c.mc.trivial_eval(c.mc.trivial_vector(x)) == x);
    }
  }
  for (Color col : {plus(0), plus(1), plus(2), minus(1)}) {
    SpaceResult sr = c.mc.space(P, col);
    CHECK(sr.dim == c.b.dim(col));
  }
  {
    PAElement x = c.b.basis_element(plus(1), 0);
    CHECK(c.mc.trivial_ip(x, x) == pow(c.b.delta(), 1));
  }
  CHECK(c.mc.kernel_positive(P, 2));
}

TEST_CASE("trivial vector inner products factor through the presentation") {
  Ctx c;
  std::mt19937_64 rng(2);
  AffineModule P = c.mc.trivial_module(4);
  for (Color col : {plus(1), plus(2)}) {
    PAElement x = random_element(c.b, col, rng), y = random_element(c.b, col, rng);
    Scalar lhs = c.mc.inner(P, c.mc.trivial_vector(x), c.mc.trivial_vector(y));
    CHECK(lhs == c.mc.trivial_ip(x, y));
  }
}

TEST_CASE("regular module: identity vector has norm one and acts correctly") {
  Ctx c;
  AffineModule H = c.mc.regular_module(plus(1), 4);
  ModuleVector a1 = c.mc.generator_vector(H, 0);
  CHECK(c.mc.inner(H, a1, a1) == Scalar::one(&c.f));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3; ++t) {
    AffineMorphism a = c.ap.psi(plus(1), plus(1), 2, random_element(c.b, plus(4), rng));
    AffineMorphism bm = c.ap.psi(plus(1), plus(1), 0, random_element(c.b, plus(2), rng));
    ModuleVector va = c.mc.act(a, a1), vb = c.mc.act(bm, a1);
    CHECK(c.mc.inner(H, va, vb) == c.ap.omega(c.ap.compose(c.ap.star(a), bm)));
  }
  CHECK(c.mc.kernel_positive(H, 2));
}

TEST_CASE("fusion reduction is route independent") {
  Ctx c;
  std::mt19937_64 rng(4);
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  ModuleVector xi = c.mc.trivial_vector(random_element(c.b, plus(1), rng));
  ModuleVector zeta = c.mc.generator_vector(H, 0);
  Color pair = plus(2);
  AffineMorphism a = c.ap.psi(pair, plus(1), 2, random_element(c.b, plus(5), rng));
  FusionVector u1 = c.mc.reduce(P, H, xi, a, zeta);
  FusionVector u2 = c.mc.reduce(P, H, xi, c.ap.lift(a, 4), zeta);
  auto probes = c.mc.fusion_spanning(P, H, plus(1), 2);
  REQUIRE(!probes.empty());
  for (const auto& pr : probes) {
    CHECK(c.mc.fusion_inner(P, H, pr, u1) == c.mc.fusion_inner(P, H, pr, u2));
  }
  AffineMorphism a0 = c.ap.psi(pair, plus(2), 0, random_element(c.b, plus(4), rng));
  FusionVector v = c.mc.reduce(P, H, xi, a0, zeta);
  CHECK(v.middle == a0.rep);
}

TEST_CASE("fusion form is hermitian and PSD on spanning sets") {
  Ctx c;
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  for (Color col : {plus(0), plus(1), plus(2)}) {
    auto span = c.mc.fusion_spanning(P, H, col, 2);
    if (span.empty()) continue;
    const int n = int(span.size());
    Matrix g(&c.f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.at(i, j) = c.mc.fusion_inner(P, H, span[i], span[j]);
    CHECK(g.is_hermitian());
    auto cert = ldl_certificate(g);
    CHECK(cert.kind != LdlKind::Indefinite);
  }
}

TEST_CASE("left and right unit constraints are isometric") {
  Ctx c;
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  for (Color col : {plus(1), plus(2)}) {
    auto span = c.mc.fusion_spanning(P, H, col, 2);
    REQUIRE(!span.empty());
    for (size_t i = 0; i < span.size(); ++i)
      for (size_t j = 0; j < span.size(); ++j) {
        Scalar fus = c.mc.fusion_inner(P, H, span[i], span[j]);
        CHECK(fus == c.mc.inner(H, c.mc.unit_left(H, span[i]), c.mc.unit_left(H, span[j])));
      }
    auto span2 = c.mc.fusion_spanning(H, P, col, 2);
    REQUIRE(!span2.empty());
    for (size_t i = 0; i < span2.size(); ++i)
      for (size_t j = 0; j < span2.size(); ++j) {
        Scalar fus = c.mc.fusion_inner(H, P, span2[i], span2[j]);
        CHECK(fus == c.mc.inner(H, c.mc.unit_right(H, span2[i]), c.mc.unit_right(H, span2[j])));
      }
  }
}

TEST_CASE("unit constraints intertwine the affine action") {
  Ctx c;
  std::mt19937_64 rng(6);
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  auto span = c.mc.fusion_spanning(P, H, plus(1), 2);
  AffineMorphism bm = c.ap.psi(plus(1), plus(2), 1, random_element(c.b, plus(4), rng));
  for (size_t s = 0; s < 2 && s < span.size(); ++s) {
    const auto& u = span[s];
    ModuleVector lhs = c.mc.unit_left(H, c.mc.fusion_act(P, H, bm, u));
    ModuleVector rhs = c.mc.act(bm, c.mc.unit_left(H, u));
    SpaceResult pr = c.mc.space(H, plus(2), 2);
    for (const auto& p : pr.spanning) {
      CHECK(c.mc.inner(H, p, lhs) == c.mc.inner(H, p, rhs));
    }
  }
}

TEST_CASE("antipode properties and contragradient double dual") {
  Ctx c;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 4; ++t) {
    AffineMorphism a = c.ap.psi(plus(1), plus(2), 1, random_element(c.b, plus(4), rng));
    AffineMorphism bm = c.ap.psi(plus(2), plus(1), 1, random_element(c.b, plus(4), rng));
    CHECK(c.ap.equal(c.ap.antipode(c.ap.antipode(a)), a));
    CHECK(c.ap.equal(c.ap.antipode(c.ap.compose(bm, a)),
                     c.ap.compose(c.ap.antipode(a), c.ap.antipode(bm))));
    CHECK(c.ap.equal(c.ap.antipode(c.ap.star(a)), c.ap.star(c.ap.antipode(a))));
  }
  CHECK(c.ap.equal(c.ap.antipode(c.ap.identity(plus(1))), c.ap.identity(plus(1))));
  AffineModule H = c.mc.regular_module(plus(1), 4);
  AffineModule Hbb = c.mc.contragradient(c.mc.contragradient(H));
  for (int m = 0; m <= 4; m += 2)
    for (const auto& q : c.ap.q_basis(plus(1), plus(1), m)) {
      AffineMorphism a{plus(1), plus(1), m, q};
      ModuleVector g1 = c.mc.generator_vector(H, 0);
      ModuleVector g2 = c.mc.generator_vector(Hbb, 0);
      CHECK(c.mc.inner(H, g1, c.mc.act(a, g1)) == c.mc.inner(Hbb, g2, c.mc.act(a, g2)));
    }
  AffineModule Hb = c.mc.contragradient(H);
  SpaceResult s1 = c.mc.space(H, plus(1), 2), s2 = c.mc.space(Hb, plus(1), 2);
  REQUIRE(s1.spanning.size() == s2.spanning.size());
  for (size_t i = 0; i < s1.spanning.size(); ++i)
    for (size_t j = 0; j < s1.spanning.size(); ++j) {
      CHECK(s2.gram.at(int(i), int(j)) ==
            c.mc.inner(H, s1.spanning[i], s1.spanning[j]).conj());
    }
}

TEST_CASE("braiding morphisms: k=0 trivial, full twist unitary") {
  Ctx c;
  CHECK(c.ap.equal(c.mc.braid_morphism(1, 0, 2), c.ap.identity(plus(2))));
  AffineMorphism r = c.mc.full_twist(plus(1));
  CHECK(c.ap.omega(c.ap.compose(c.ap.star(r), r)) == Scalar::one(&c.f));
}

TEST_CASE("braiding is isometric on fusion spanning sets (TL)") {
  Ctx c;
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  for (Color col : {plus(1), plus(2)}) {
    auto span = c.mc.fusion_spanning(P, H, col, 2);
    REQUIRE(!span.empty());
    for (size_t i = 0; i < span.size(); ++i)
      for (size_t j = 0; j < span.size(); ++j) {
        Scalar before = c.mc.fusion_inner(P, H, span[i], span[j]);
        FusionVector bi = c.mc.braid_apply(P, H, span[i]);
        FusionVector bj = c.mc.braid_apply(P, H, span[j]);
        CHECK(before == c.mc.fusion_inner(H, P, bi, bj));
      }
  }
}

TEST_CASE("hom spaces of the trivial and regular modules") {
  Ctx c;
  AffineModule P = c.mc.trivial_module(4);
  CHECK(c.mc.hom_space(P, P, 2).dim >= 1);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  CHECK(c.mc.hom_space(H, H, 2).dim >= 1);
}

TEST_CASE("spin backend: fusion PSD and unit isometry spot check") {
  SpinCtx c;
  AffineModule P = c.mc.trivial_module(4);
  AffineModule H = c.mc.regular_module(plus(1), 4);
  auto span = c.mc.fusion_spanning(P, H, plus(1), 2);
  REQUIRE(!span.empty());
  const int n = int(span.size());
  Matrix g(&c.f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = c.mc.fusion_inner(P, H, span[i], span[j]);
  CHECK(g.is_hermitian());
  CHECK(ldl_certificate(g).kind != LdlKind::Indefinite);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(g.at(i, j) ==
            c.mc.inner(H, c.mc.unit_left(H, span[i]), c.mc.unit_left(H, span[j])));
}
