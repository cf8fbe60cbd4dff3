#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace flagforge {

/// Arbitrary-precision integer. Binomial products overflow 64 bits well
/// inside the ranges this library is asked to handle, so exact bignum
/// coefficients are not optional.
using Int = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial; entry i is the exponent of variable i.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over arbitrary-precision integers.
///
/// Terms are keyed by exponent vector and iterate in ascending
/// lexicographic order, which fixes one canonical order for printing,
/// serialization and equality. Zero coefficients are never stored.
/// Instances are immutable values in practice: every operation returns
/// a fresh polynomial, so sharing across threads is safe.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 1);

  static Polynomial constant(int nvars, Int value);
  static Polynomial variable(int nvars, int index);  // x_index, 0-based
  static Polynomial monomial(Exponents exps, Int coeff);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  /// Coefficient of the given monomial; zero when absent.
  Int coeff(const Exponents& exps) const;
  Int constant_term() const;
  /// Sum of all coefficients, i.e. the value at (1,...,1).
  Int coeff_sum() const;
  /// Largest exponent of variable `var` over all terms; -1 for the zero
  /// polynomial.
  int degree(int var) const;
  int total_degree() const;

  /// Adds c * x^exps, dropping the term if the result cancels to zero.
  void add_term(const Exponents& exps, const Int& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, ascending canonical term order, e.g.
  /// "7 + 11*x1 + 6*x1^2". Variables are named <prefix>1..<prefix>n.
  std::string to_string(const std::string& var_prefix = "x") const;

 private:
  int nvars_;
  std::map<Exponents, Int> terms_;
};

Polynomial scale(const Polynomial& p, const Int& c);
Polynomial pow(const Polynomial& p, int e);

/// Divides every term by variable `var` (0-based), decrementing its
/// exponent. Throws std::invalid_argument if some term has exponent zero
/// there: the closed forms this library expands are exactly divisible,
/// so a failed division signals a real bug upstream.
Polynomial exact_div_by_var(const Polynomial& p, int var);

/// Exponent substitution x_i = y_i * y_{i+1} * ... * y_n: the term with
/// exponents (a_1,...,a_n) moves to (s_1,...,s_n) with s_i = a_1+...+a_i.
/// Coefficients are preserved; the map is injective on monomials. The
/// coefficient of y^s then counts chains whose i-th face has dimension
/// s_i rather than dimension jump s_i - s_{i-1}.
Polynomial phi_transform(const Polynomial& p);

/// Sets the last variable to zero and drops it: keeps exactly the terms
/// with last exponent zero, re-expressed in nvars-1 variables.
Polynomial specialize_last_zero(const Polynomial& p);

/// Re-indexes variables: variable t of `p` becomes variable positions[t]
/// of the result (0-based, strictly increasing, all < total). Pure
/// exponent relabeling; used to place lower-order flag polynomials in a
/// suffix or a punched-out subset of a longer variable list.
Polynomial embed(const Polynomial& p, const std::vector<int>& positions,
                 int total);

/// Successive differences (a_1, a_2-a_1, ..., a_n-a_{n-1}) of a
/// nondecreasing sequence; inverse of the partial-sum map.
Exponents delta_of(const std::vector<int>& dims);

Int binomial(unsigned long n, unsigned long k);

}  // namespace flagforge
