#pragma once

#include "flagforge/polynomial.hpp"

namespace flagforge {

/// Argument window (x_start, ..., x_total) within an ambient list of
/// `total` chain variables. Indices are 1-based, matching the usual way
/// the shifted argument lists are written. start == total+1 denotes the
/// empty window (a linear form with no variables).
struct VariableWindow {
  int total = 1;
  int start = 1;
};

/// (x_start + ... + x_total + 1)^r expanded exactly in `total` variables,
/// by direct multinomial enumeration rather than repeated multiplication.
Polynomial linear_form_power(VariableWindow w, int r);

/// f-polynomial of the standard (r-1)-simplex: ((x+1)^r - 1)/x.
/// Degree r-1, leading coefficient 1; counts every face including the
/// simplex itself.
Polynomial f_simplex(int r);

/// Flag polynomial of the standard (r-1)-simplex for chains of length
/// ell = total - start + 1, embedded in `total` variables:
///
///   ((x_s + ... + x_t + 1)^r - (x_{s+1} + ... + x_t + 1)^r) / x_s
///
/// Variables below the window start appear with exponent zero, so
/// windowed factors multiply across a longer chain without re-indexing.
Polynomial flag_simplex(int r, VariableWindow w);

}  // namespace flagforge
