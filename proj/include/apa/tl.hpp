#pragma once

#include "apa/element.hpp"

namespace apa {

/// Temperley-Lieb planar algebra TL(delta): basis of P_{eps k} is the set of
/// non-crossing perfect matchings of 2k boundary points; closed loops
/// evaluate to delta.
class TLBackend : public Backend {
 public:
  TLBackend(const Field* f, Rational delta);

  std::string name() const override { return "tl"; }
  long dim(Color c) const override;

  PAElement contract_basis(Color cx, long bx, Color cy, long by, int m) const override;
  PAElement rotate_basis(Color c, long b, int dir) const override;
  PAElement reflect_basis(Color c, long b) const override;
  PAElement diagram_element(Color c, const std::vector<int>& partner) const override;
  Scalar closure_scalar(Color c, long b) const override;

  const std::vector<int>& matching(Color c, long b) const;
  long index_of(int k, const std::vector<int>& partner) const;

  const Rational& delta_rational() const { return delta_rat_; }

 private:
  Rational delta_rat_;
};

}  // namespace apa
