#pragma once

#include <random>
#include <string>
#include <vector>

#include "apa/element.hpp"

namespace apa {

/// Generating tangle applications (Fig.-1 vocabulary); arities and colors as
/// documented in docs/conventions.md.
namespace gen {

PAElement mult(const Backend& b, const PAElement& x, const PAElement& y);
PAElement unit(const Backend& b, Color c);
/// Jones projection E_{eps(k+1)} in P_{eps(k+2)} (unnormalized, E^2 = dE).
PAElement jones_projection(const Backend& b, Color ek_plus2);
/// e_i inside P_{eps n}: cap-cup on columns i, i+1.
PAElement jones_element(const Backend& b, Color c, int i);
PAElement right_inclusion(const Backend& b, const PAElement& x);
PAElement left_inclusion(const Backend& b, const PAElement& x);
PAElement right_condexp(const Backend& b, const PAElement& x);
PAElement left_condexp(const Backend& b, const PAElement& x);
PAElement rotate_one(const Backend& b, const PAElement& x, int dir);
Scalar trace_close(const Backend& b, const PAElement& x);

}  // namespace gen

/// Deterministic pseudo-random element with small integer coefficients.
PAElement random_element(const Backend& b, Color c, std::mt19937_64& rng);

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> checks;
  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
};

/// Validates a backend against the planar-algebra contract at all colors with
/// k <= K: unit/associativity, trace normalization and traciality, exact
/// Gram positivity, conditional-expectation compatibility, sphericality and
/// the Jones relations.  `trace_twist` scales the right trace in the
/// sphericality comparison (used by fault-injection tests); leave at 1.
AxiomReport check_axioms(const Backend& b, int K, uint64_t seed = 7,
                         const Scalar* trace_twist = nullptr);

}  // namespace apa
