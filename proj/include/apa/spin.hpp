#pragma once

#include "apa/element.hpp"

namespace apa {

/// Spin-model planar algebra with Q spin states and modulus delta = sqrt(Q).
/// Basis vectors assign a spin in {0..Q-1} to each shaded boundary region;
/// the first (for -, the marked) shaded region is normalized to spin 0 and
/// elements are symmetrized over the simultaneous Z_Q translation of all
/// spins, which keeps P_{+-0} one-dimensional and the even parts group-like.
class SpinBackend : public Backend {
 public:
  SpinBackend(const Field* f, int q);

  std::string name() const override { return "spin"; }
  int spins() const { return q_; }
  long dim(Color c) const override;

  PAElement contract_basis(Color cx, long bx, Color cy, long by, int m) const override;
  PAElement rotate_basis(Color c, long b, int dir) const override;
  PAElement reflect_basis(Color c, long b) const override;
  PAElement diagram_element(Color c, const std::vector<int>& partner) const override;
  Scalar closure_scalar(Color c, long b) const override;
  PAElement cap(const PAElement& x, int pos) const override;
  PAElement insert_cup(const PAElement& x, int pos) const override;

  /// Number of shaded boundary regions of a disc of the given color.
  static int shaded_regions(Color c);
  std::vector<int> tuple_of(Color c, long b) const;
  long index_of(Color c, const std::vector<int>& tuple) const;

 private:
  // Elements over the naive (non-symmetrized) spin basis.
  using Naive = std::map<std::vector<int>, Scalar>;

  Naive expand(Color c, long b) const;
  PAElement compress(Color c, const Naive& f) const;

  Naive naive_tensor(Color cx, const std::vector<int>& x, Color cy,
                     const std::vector<int>& y) const;
  Naive naive_cap(Color c, const Naive& f, int pos) const;
  Naive naive_cup(Color c, const Naive& f, int pos) const;

  int q_;
  Scalar half_, half_inv_;  // delta^{1/2} and its inverse
  Scalar delta_inv_;
};

}  // namespace apa
