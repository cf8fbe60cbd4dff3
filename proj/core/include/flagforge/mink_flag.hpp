#pragma once

#include "flagforge/master.hpp"

namespace flagforge {

/// Type counts of a sum of two simplices: r1 = |F1 and F2|,
/// r2 = |F1 \ F2|, r3 = |F2 \ F1|. Swapping r2 and r3 realizes a
/// combinatorially equivalent polytope.
struct K2Profile {
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  int r() const { return r1 + r2 + r3; }
  friend auto operator<=>(const K2Profile&, const K2Profile&) = default;
};

/// Canonical family realizing a profile: F1 = R1 u R2, F2 = R1 u R3 on
/// the ground set 1..r. Requires both sets nonempty and, when r2 = r3 = 0,
/// rejects the duplicate pair.
SetFamily family_from_profile(const K2Profile& p);

/// Flag polynomial of a sum of standard simplices, evaluated through the
/// master-polytope chain formula:
///
///   sum over ell-chains A of P(k) of
///     x^delta(dim A) * prod_i prod_{a entering at step i}
///       flag_simplex(r_a)(x_i,...,x_ell)
///
/// Chains touching a pattern with r_a = 0 are dropped: the slot holds the
/// empty polytope there, whose flag polynomial vanishes identically.
/// Families containing the same set twice are rejected; drop the
/// duplicate instead (the sum is combinatorially unchanged).
Polynomial flag_minkowski(const SetFamily& family, int ell,
                          const EnumOptions& opts = {});

/// Same evaluation driven directly by pattern counts, without insisting
/// the counts come from a realizable family.
Polynomial flag_from_rvector(const RVector& rv, int ell,
                             const EnumOptions& opts = {});

/// One summand per master-polytope chain, aligned with
/// master_chains(k, ell); chains touching an absent pattern contribute
/// the zero polynomial. Sums to flag_from_rvector. Debugging aid.
std::vector<Polynomial> flag_chain_terms(const RVector& rv, int ell,
                                         const EnumOptions& opts = {});

/// The 2-chain closed form for k = 2, written out over the 25 chains of
/// the rhombus, independent of the chain-driven path so the two check
/// each other.
Polynomial flag2_closed_k2(const K2Profile& p);

/// f-polynomial via the faces of the master polytope:
///   sum over faces A of P(k) of x^dim(A) * prod_{i in supp(A)} f_simplex(r_i).
Polynomial f_poly_minkowski(const SetFamily& family, const EnumOptions& opts = {});

/// Closed-form f-polynomial for two simplices:
///   ((x+2)(x+1)^r - (x+1)^{r1+r2} - (x+1)^{r1+r3} - (x+1)^{r2+r3+1} + 1) / x^2
/// with both divisions checked exact.
Polynomial f_poly_closed_k2(const K2Profile& p);

/// The same closed form phrased in set sizes |F1|, |F2|, |F1 u F2|,
/// |F1 symmetric-difference F2|; k = 2 families only.
Polynomial f_poly_sets_form(const SetFamily& family);

}  // namespace flagforge
