#pragma once

#include <functional>
#include <map>
#include <tuple>

#include "apa/element.hpp"

namespace apa {

/// Morphism of the affine category AP_{src,tgt}: a winding cutoff m together
/// with the canonical representative in the Q^m subspace of
/// P_{tgt.sign, (src.k + tgt.k + m)}.
struct AffineMorphism {
  Color src, tgt;
  int cutoff = 0;
  PAElement rep;

  bool is_endo() const { return src == tgt; }
};

/// Truncated element of the space of commutativity constraints
/// CC_{src,tgt}: components c_m for admissible m up to the truncation,
/// together with the normal-form representatives x_m of the partial sums and
/// the induced functional as a covector over the representative basis of
/// AP_{tgt,src} at each cutoff (so pairings are dot products).
struct CCElement {
  Color src, tgt;
  int truncation = 0;
  std::map<int, PAElement> components;
  std::map<int, PAElement> reps;
  std::map<int, std::vector<Scalar>> functionals;
};

struct DualityResult {
  std::vector<Matrix> pairing;  // one block per admissible m <= M
  std::vector<int> cutoffs;
  bool nonsingular = false;
};

/// The affine category over one backend: normal forms, composition, star,
/// antipode, trace omega, conditional expectation gamma, inner products and
/// the graded/duality structure.  Caches Q^m bases and capping tables.
class AffineContext {
 public:
  AffineContext(const Backend* b, int budget);

  const Backend* backend() const { return b_; }
  int budget() const { return budget_; }

  /// Color of the representative space of psi^m_{src,tgt}.
  static Color rep_color(Color src, Color tgt, int m);

  // Compiled annular pictures on representatives.
  PAElement pic_left(Color src, Color tgt, int m, const PAElement& y, const PAElement& w) const;
  PAElement pic_right(Color src, Color tgt, int m, const PAElement& y, const PAElement& w) const;

  /// Basis of the Q^m normal-form subspace (cached).
  const std::vector<PAElement>& q_basis(Color src, Color tgt, int m) const;
  long q_dim(Color src, Color tgt, int m) const { return long(q_basis(src, tgt, m).size()); }
  /// Membership test for the Q^m constraints.
  bool in_q_space(Color src, Color tgt, int m, const PAElement& x) const;

  /// Canonical-representative projection of Lemma wlogx.
  PAElement normalize(Color src, Color tgt, int m, const PAElement& x) const;

  AffineMorphism psi(Color src, Color tgt, int m, const PAElement& x) const;
  AffineMorphism zero_morphism(Color src, Color tgt) const;
  AffineMorphism identity(Color c) const;
  /// One-click affine rotation AR_{c} (dir=+1) and its inverse (dir=-1).
  AffineMorphism rotation(Color c, int dir) const;
  /// Winding inclusion u_{c,m} = psi^m_{c, (sign')(k+m)}(1).
  AffineMorphism winding_inclusion(Color c, int m) const;

  AffineMorphism lift(const AffineMorphism& a, int m) const;
  AffineMorphism compose(const AffineMorphism& a, const AffineMorphism& b) const;
  AffineMorphism star(const AffineMorphism& a) const;
  AffineMorphism antipode(const AffineMorphism& a) const;
  AffineMorphism add(const AffineMorphism& a, const AffineMorphism& b) const;
  AffineMorphism scale(const AffineMorphism& a, const Scalar& s) const;
  bool equal(const AffineMorphism& a, const AffineMorphism& b) const;
  bool is_zero(const AffineMorphism& a) const;

  /// Conditional expectation onto P_{eps 2k} (endomorphism colors only).
  PAElement gamma(const AffineMorphism& a) const;
  /// omega = tr circ gamma, the faithful tracial state.
  Scalar omega(const AffineMorphism& a) const;
  /// <a,b>_{src} = omega(a* compose b) for parallel morphisms.
  Scalar inner(const AffineMorphism& a, const AffineMorphism& b) const;

  /// Gram matrix of <.,.> on the Q^m basis (cached).
  Matrix gram(Color src, Color tgt, int m) const;
  /// Bilinear pairing delta^{2 src.k} omega(psi_{tgt,src}(e_u) o
  /// psi_{src,tgt}(e_v)) over the full representative bases (cached).
  Matrix pairing_big(Color src, Color tgt, int m) const;
  /// dim AP^{=n} for admissible n <= M.
  std::vector<std::pair<int, long>> graded_dims(Color src, Color tgt, int M) const;

  /// z_{c} = sum u_a u_a^*; its inverse in the algebra P_c.
  PAElement z_elem(Color c) const { return b_->z_element(c); }
  PAElement z_inverse(Color c) const;
  PAElement algebra_inverse(const PAElement& x) const;

  // Duality between functionals on AP_{tgt,src} and truncated CC elements.
  DualityResult duality_pairing(Color src, Color tgt, int M) const;
  /// c_m components from a functional given by its values on the q_basis of
  /// AP_{tgt,src} at each admissible cutoff <= M.
  CCElement cc_of_functional(Color src, Color tgt, int M,
                             const std::map<int, std::vector<Scalar>>& values) const;
  /// Evaluate the functional L_c on a morphism in AP_{tgt,src}.
  Scalar cc_pair(const CCElement& c, const AffineMorphism& a) const;
  /// The x_m in Q^m_{src,tgt} with psi(x_m) = partial sum s_m, from c_m.
  PAElement cc_rep(const CCElement& c, int m) const;

  /// Assemble a CC element for the functional a |-> <vec1, act(a) vec2> given
  /// through a callback over q-basis morphisms.
  CCElement cc_from_matrix_elements(
      Color src, Color tgt, int M,
      const std::function<Scalar(const AffineMorphism&)>& phi) const;

 private:
  struct Key {
    Color src, tgt;
    int m;
    bool operator<(const Key& o) const {
      return std::tie(src, tgt, m) < std::tie(o.src, o.tgt, o.m);
    }
  };

  void check_budget(Color src, Color tgt, int m) const;
  const std::vector<std::pair<PAElement, PAElement>>& dual_pairs(Color c) const;

  const Backend* b_;
  int budget_;
  mutable std::map<Key, std::vector<PAElement>> q_cache_;
  mutable std::map<Key, Matrix> gram_cache_;
  mutable std::map<Key, Matrix> pairing_cache_;
  mutable std::map<Color, std::vector<std::pair<PAElement, PAElement>>> dual_cache_;
  mutable std::map<Color, PAElement> zinv_cache_;
};

}  // namespace apa
