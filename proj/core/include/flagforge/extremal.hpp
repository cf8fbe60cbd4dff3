#pragma once

#include "flagforge/mink_flag.hpp"

namespace flagforge {

/// Falling-factorial binomial extended to all integer x: x(x-1)...(x-c+1)/c!
/// for x >= c and 0 for x < c, negative x included.
Int gen_binom(long x, int c);

/// Nearest integer to numer/denom for odd denom (where it is unique).
/// Other denominators are rejected.
long nearest_int(long numer, long denom);

/// Number of d-faces of the sum with the given profile:
///   C(r+1,d+2) + C(r,d+2) - C(r1+r2,d+2) - C(r1+r3,d+2) - C(r2+r3+1,d+2)
/// in the extended binomial above.
Int f_d_count(const K2Profile& p, int d);

/// Maximum value of an integer objective over profiles, together with
/// every attaining profile in ascending order. Construction re-evaluates
/// each claimed argmax against the value.
struct ExtremalResult {
  Int value;
  std::vector<K2Profile> argmaxes;
  ExtremalResult(Int value_, std::vector<K2Profile> argmaxes_,
                 const std::function<Int(const K2Profile&)>& eval);
};

/// Exhaustive maximum of f_d over all profiles r1+r2+r3 = r. The closed
/// form below is a claim checked against this, never a substitute.
ExtremalResult max_faces(int r, int d);

/// C(r+1,d+2) + C(r,d+2) - C(floor,d+2) - C(nearest,d+2) - C(ceil,d+2)
/// at (2r+1)/3.
Int closed_max_faces(int r, int d);

/// Growth constant of max_faces(r,d)/r^{d+2}:
///   2(3^{d+1} - 2^{d+1}) / (3^{d+1} (d+2)!), exact.
Rational asympt_max_faces_limit(int d);

/// Number of (0,d)-chains (vertex inside a d-face):
///   f0*C(r-1,d) + r2*r3*C(r-2,d) - r2*r3*C(r2+r3-1,d)
/// with f0 = r1*r2 + r1*r3 + r2*r3 + r1.
Int chains0d(const K2Profile& p, int d);

/// Simplicity of the sum, assuming the two sets intersect (r1 >= 1):
/// simple iff r2 = 0, r3 = 0 or r1 = 1.
bool is_simple_k2(const K2Profile& p);

/// Excess of the (0,d)-chain count over the simple-polytope minimum
/// C(r-1,d)*f0 at equal dimension and vertex count:
///   r2*r3*(C(r-2,d) - C(r2+r3-1,d)).
Int discrepancy(const K2Profile& p, int d);

/// Exhaustive maximum of the discrepancy over r1 >= 1, r2, r3 >= 0 with
/// r1+r2+r3 = r.
ExtremalResult max_discrepancy(int r, int d);

/// Lower bound localizing r2+r3 at the discrepancy maximizer:
///   (2/(d+2))^{1/d} (r-2) + (1 - (2/(d+2))^{1/d}) (d-1)/2.
double discrep_lower_L(int d, int r);

/// Integer window [ceil(L), floor(L + slack)] with
///   slack = (2d+5)/(2d+4) + d*log(d+2) / (2(2r-d-3)).
/// Exhaustive search shows every discrepancy maximizer has r2+r3 in
/// [ceil(L), floor(L+slack) + 1] and within one of ceil(L); the parity
/// coupling of r2 = r3 can push the maximizer one past floor(L+slack)
/// (first at d=2, r=34).
struct DiscrepancyWindow {
  double lower = 0;        // L(d;r)
  double upper_slack = 0;  // window length above L
  int lo = 0;              // ceil(L)
  int hi = 0;              // floor(L + slack)
  std::vector<int> ints() const;
};

DiscrepancyWindow discrep_window(int d, int r);

/// Stated growth constant of max_discrepancy(r,d)/r^{d+2}:
///   2^{2/d-2} / ((d+2)^{2/d-1} (d-1)!).
double asympt_discrep_limit(int d);

}  // namespace flagforge
