#pragma once

#include <vector>

#include "apa/scalar.hpp"

namespace apa {

/// Perfect matchings of {0,...,2n-1} as partner arrays.
namespace diagram {

bool is_valid_matching(const std::vector<int>& partner);
bool is_noncrossing(const std::vector<int>& partner);

/// All non-crossing perfect matchings of 2n points, in a fixed canonical
/// order (Catalan(n) of them).
const std::vector<std::vector<int>>& noncrossing_matchings(int n);

/// Nested identity matching: i paired with 2n-1-i.
std::vector<int> identity_matching(int n);

std::vector<int> rotate_matching(const std::vector<int>& partner, int clicks);
std::vector<int> reflect_matching(const std::vector<int>& partner);

/// Glue the last m points of x (2a points) to the first m points of y
/// (2b points), innermost arc x_{2a-1} to y_0.  Returns the induced matching
/// on the surviving 2a+2b-2m points and the number of closed loops removed.
struct GlueResult {
  std::vector<int> matching;
  int loops;
};
GlueResult glue_matchings(const std::vector<int>& x, const std::vector<int>& y, int m);

}  // namespace diagram

}  // namespace apa
