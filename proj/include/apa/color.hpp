#pragma once

#include <string>

namespace apa {

/// Disc color: sign in {+1,-1} and string count k (2k boundary points).
struct Color {
  int sign = 1;
  int k = 0;

  bool operator==(const Color& o) const { return sign == o.sign && k == o.k; }
  bool operator!=(const Color& o) const { return !(*this == o); }
  bool operator<(const Color& o) const { return sign != o.sign ? sign < o.sign : k < o.k; }

  Color flipped() const { return {-sign, k}; }
  std::string str() const { return (sign > 0 ? "+" : "-") + std::to_string(k); }
};

inline Color plus(int k) { return {1, k}; }
inline Color minus(int k) { return {-1, k}; }

/// Admissible winding parities between source eps_k and target eta_l:
/// m congruent to 0 mod 2 when the signs agree, 1 otherwise.
inline int winding_parity(Color src, Color tgt) { return src.sign == tgt.sign ? 0 : 1; }

inline bool winding_admissible(Color src, Color tgt, int m) {
  return m >= 0 && m % 2 == winding_parity(src, tgt);
}

}  // namespace apa
