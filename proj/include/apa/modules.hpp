#pragma once

#include "apa/affine.hpp"

namespace apa {

/// Hilbert affine module presented by generators and the matrix of CC-valued
/// inner products between them.  All spaces and the action are derived.
struct AffineModule {
  std::vector<Color> gen_colors;
  std::vector<std::vector<CCElement>> kernel;  // kernel[i][j] in CC_{g_i,g_j}
  int truncation = 0;
  std::string name;
};

/// Vector of a presented module at a fixed color: formal combination of
/// morphisms applied to generators.
struct ModuleVector {
  Color color;
  std::vector<std::pair<int, AffineMorphism>> terms;  // (generator, morphism)
};

struct SpaceResult {
  std::vector<ModuleVector> spanning;
  Matrix gram;
  long dim = 0;
};

/// A fusion vector xi (x) psi0(x) (x) zeta in normal form: module vectors of
/// the two factors at +-matching colors joined by a zero-winding element.
struct FusionVector {
  ModuleVector left;      // in V at color eta k'
  PAElement middle;       // in P_{eta(k'+l'+m)}, the psi^0 representative
  ModuleVector right;     // in W at color eta l'
  Color color;            // eta m
};

class ModuleContext {
 public:
  explicit ModuleContext(AffineContext* ap) : ap_(ap), b_(ap->backend()) {}

  AffineContext& affine() const { return *ap_; }
  const Backend& backend() const { return *b_; }

  // ----- presented-module layer -----
  Scalar inner(const AffineModule& m, const ModuleVector& v, const ModuleVector& w) const;
  ModuleVector act(const AffineMorphism& a, const ModuleVector& v) const;
  ModuleVector add(const ModuleVector& v, const ModuleVector& w) const;
  ModuleVector scale(const ModuleVector& v, const Scalar& s) const;
  ModuleVector generator_vector(const AffineModule& m, int i) const;

  /// Spanning vectors (psi-images of generators up to the winding budget),
  /// their Gram matrix, and the space dimension (= Gram rank).
  SpaceResult space(const AffineModule& m, Color c, int span_budget = -1) const;

  /// Build a module from matrix-element functionals of its generators.
  AffineModule module_from_functionals(
      std::vector<Color> gen_colors, int truncation,
      const std::function<Scalar(int, int, const AffineMorphism&)>& phi,
      std::string name) const;

  /// Kernel positivity: every computed Gram is positive semidefinite.
  bool kernel_positive(const AffineModule& m, int kmax, int span_budget = -1) const;

  // ----- the trivial module P -----
  /// Action of an affine morphism on a planar-algebra element.
  PAElement act_trivial(const AffineMorphism& a, const PAElement& y) const;
  /// Unnormalized picture-trace inner product of P viewed as a module.
  Scalar trivial_ip(const PAElement& x, const PAElement& y) const;
  AffineModule trivial_module(int truncation) const;
  /// Presentation vector of an honest element of P_{eps k}.
  ModuleVector trivial_vector(const PAElement& x) const;
  /// Evaluation of a presentation vector back to P.
  PAElement trivial_eval(const ModuleVector& v) const;

  // ----- regular modules -----
  AffineModule regular_module(Color c, int truncation) const;

  // ----- fusion -----
  /// Inner product of two reduced fusion vectors (Hermitian, PSD).
  Scalar fusion_inner(const AffineModule& V, const AffineModule& W, const FusionVector& u1,
                      const FusionVector& u2) const;
  /// Reduce xi (x) a (x) zeta with winding cutoff a.cutoff to a psi^0 form.
  FusionVector reduce(const AffineModule& V, const AffineModule& W, const ModuleVector& xi,
                      const AffineMorphism& a, const ModuleVector& zeta) const;
  /// Act on a reduced fusion vector and re-reduce.
  FusionVector fusion_act(const AffineModule& V, const AffineModule& W,
                          const AffineMorphism& b, const FusionVector& u) const;
  /// Spanning fusion vectors of (V (x) W)_c built from generator pairs.
  std::vector<FusionVector> fusion_spanning(const AffineModule& V, const AffineModule& W,
                                            Color c, int span_budget = -1) const;
  /// The fused module presented on generator pairs.
  AffineModule fuse(const AffineModule& V, const AffineModule& W) const;

  // ----- constraints -----
  /// Left unit P (x) V -> V on a fusion vector whose left factor comes from
  /// the trivial module.
  ModuleVector unit_left(const AffineModule& V, const FusionVector& u) const;
  /// Right unit V (x) P -> V.
  ModuleVector unit_right(const AffineModule& V, const FusionVector& u) const;

  /// Associativity data: middle representatives for the regrouping maps.
  /// forward: ((xi x zeta) y omega) -> (xi s (zeta 1 omega)) with
  /// s = contract(y, x, 2m); inverse analogously.
  PAElement assoc_forward_middle(int m, const PAElement& x, const PAElement& y) const;
  PAElement assoc_inverse_middle(int k2, int n2, const PAElement& x, const PAElement& y) const;

  // ----- antipode / contragradient -----
  AffineModule contragradient(const AffineModule& m) const;
  /// Matrix-element functional of the contragradient.
  Scalar contragradient_phi(const AffineModule& m, int i, int j, const AffineMorphism& a) const;

  // ----- braiding -----
  /// Full-turn affine rotation r_{c} in AP_{c,c} at cutoff 2k.
  AffineMorphism full_twist(Color c) const;
  /// Block-swap braiding morphism b_{eps,k,l} in AP_{eps(k+l),eps(k+l)}.
  AffineMorphism braid_morphism(int sign, int k, int l) const;
  /// c_{V,W}(xi (x) a (x) zeta) = zeta (x) a o b (x) V_r xi, reduced.
  FusionVector braid_apply(const AffineModule& V, const AffineModule& W,
                           const FusionVector& u) const;

  // ----- hom spaces -----
  struct HomResult {
    long dim = 0;
    std::vector<std::vector<ModuleVector>> basis;  // generator images in W
  };
  HomResult hom_space(const AffineModule& V, const AffineModule& W, int kmax,
                      int span_budget = -1) const;

  /// Check Gram isometry of a generator-image map V -> W on spanning sets of
  /// colors with k <= kmax.
  bool is_isometric_map(const AffineModule& V, const AffineModule& W,
                        const std::vector<ModuleVector>& images, int kmax,
                        int span_budget = -1) const;

  int default_span(const AffineModule& m) const { return m.truncation / 2; }

  /// Zero-winding CC component of the pairing of two module vectors.
  PAElement cc_zero(const AffineModule& m, const ModuleVector& v, const ModuleVector& w) const;
  /// Zero-winding merge morphism splitting n rings around a pair into rings
  /// around each factor (used by the fusion reduction).
  AffineMorphism ring_merge(int sign, int k, int l, int n) const;

 private:
  AffineContext* ap_;
  const Backend* b_;
};

}  // namespace apa
