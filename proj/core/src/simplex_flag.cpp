#include "flagforge/simplex_flag.hpp"

#include <stdexcept>

namespace flagforge {

namespace {

void check_window(const VariableWindow& w) {
  if (w.total < 1 || w.start < 1 || w.start > w.total + 1) {
    throw std::invalid_argument("invalid variable window");
  }
}

// Walks exponent assignments for the window variables, carrying the
// multinomial coefficient r! / (a_s! ... a_t! rest!) built incrementally
// as a product of binomials.
void expand_rec(Polynomial& out, Exponents& exps, int var, int last,
                int remaining, const Int& coeff) {
  if (var > last) {
    out.add_term(exps, coeff);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    exps[var] = a;
    expand_rec(out, exps, var + 1, last, remaining - a,
               coeff * binomial(remaining, a));
  }
  exps[var] = 0;
}

}  // namespace

Polynomial linear_form_power(VariableWindow w, int r) {
  check_window(w);
  if (r < 0) throw std::invalid_argument("negative power");
  Polynomial out(w.total);
  Exponents exps(w.total, 0);
  expand_rec(out, exps, w.start - 1, w.total - 1, r, 1);
  return out;
}

Polynomial f_simplex(int r) {
  if (r < 1) throw std::invalid_argument("simplex needs r >= 1 vertices");
  Polynomial out(1);
  for (int i = 0; i < r; ++i) {
    out.add_term({i}, binomial(r, i + 1));
  }
  return out;
}

Polynomial flag_simplex(int r, VariableWindow w) {
  check_window(w);
  if (w.start > w.total) throw std::invalid_argument("window must be nonempty");
  if (r < 1) throw std::invalid_argument("simplex needs r >= 1 vertices");
  Polynomial full = linear_form_power(w, r);
  Polynomial tail = linear_form_power({w.total, w.start + 1}, r);
  // The subtraction cancels exactly the terms free of x_start, so the
  // checked division doubles as a correctness assertion.
  return exact_div_by_var(full - tail, w.start - 1);
}

}  // namespace flagforge
