#pragma once

#include "flagforge/polynomial.hpp"

#include <random>
#include <utility>
#include <vector>

namespace flagforge::testing {

inline Polynomial make_poly(int nvars,
                            std::vector<std::pair<Exponents, long>> terms) {
  Polynomial p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

/// Alternating sum of the proper face counts equals 0 for even top
/// dimension and 2 for odd; fv includes the top face at its back.
inline bool euler_ok(const std::vector<Int>& fv) {
  int d = static_cast<int>(fv.size()) - 1;
  Int alt = 0;
  for (int i = 0; i < d; ++i) alt += (i % 2 == 0) ? fv[i] : -fv[i];
  return alt == (d % 2 == 1 ? 2 : 0);
}

inline Polynomial random_poly(std::mt19937& rng, int nvars, int max_terms = 6,
                              int max_exp = 3, int max_coef = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-max_coef, max_coef);
  Polynomial p(nvars);
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = exp(rng);
    p.add_term(e, coef(rng));
  }
  return p;
}

}  // namespace flagforge::testing
