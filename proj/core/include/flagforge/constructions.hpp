#pragma once

#include "flagforge/polynomial.hpp"
#include "flagforge/simplex_flag.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace flagforge {

/// Flag polynomial of one polytope at one fixed chain length.
struct AbstractFlag {
  int ell = 1;
  Polynomial poly{1};  // in `ell` variables
};

/// Flag polynomials of a single polytope for every chain length
/// 1..max_order. Pyramids, joins and strict-chain counts genuinely need
/// the lower orders (their formulas shift shorter chains into suffix
/// windows), so the family is the honest input type for them.
/// The empty polytope is the all-zero family; a point is all-one.
class FlagFamily {
 public:
  /// by_order[j-1] must be a polynomial in j variables.
  explicit FlagFamily(std::vector<Polynomial> by_order);

  static FlagFamily empty_polytope(int max_order);
  static FlagFamily point(int max_order);

  int max_order() const { return static_cast<int>(by_order_.size()); }
  const Polynomial& order(int j) const;
  bool is_empty_polytope() const;

 private:
  std::vector<Polynomial> by_order_;
};

/// Chains A_1 <= ... <= A_ell in a product pair up componentwise, so the
/// flag polynomial of P x Q is the product of the flag polynomials.
AbstractFlag flag_product(const AbstractFlag& a, const AbstractFlag& b);

/// 2 + x_1 + 2(x_2 + ... + x_ell), the flag polynomial of a segment.
Polynomial prism_factor(int ell);

AbstractFlag flag_prism(const AbstractFlag& p);

/// (2 + x_1 + 2(x_2+...+x_ell))^d. Evaluating at all-ones counts
/// (2*ell+1)^d chains; at ell = 1 the 3^d faces of the d-cube.
AbstractFlag flag_hypercube(int d, int ell);

/// Pyramid: f^ell * (1 + x_1 + ... + x_ell) + 1
///          + sum_{i=2..ell} x_i * f^{ell-i+1}(x_i,...,x_ell).
AbstractFlag flag_pyramid(const FlagFamily& base, int ell);

/// Free join P * Q. The empty polytope acts as the identity: its family
/// is identically zero, which collapses the formula to the other side.
AbstractFlag flag_free_join(const FlagFamily& p, const FlagFamily& q, int ell);

/// Produces the flag polynomial of one polytope on a suffix window
/// (x_start,...,x_total), embedded in `total` variables. A provider that
/// always returns zero stands for the empty polytope.
using FlagProvider = std::function<Polynomial(VariableWindow)>;

FlagProvider simplex_flag_provider(int r);
FlagProvider family_flag_provider(FlagFamily family);
FlagProvider empty_flag_provider();

/// Chains of faces of an acting polytope P, reduced to what the action
/// formula consumes: the dimension-difference exponents and the support
/// sets (as bit masks over the m coordinate slots) along the chain.
struct ChainData {
  int slots = 0;
  int ell = 0;
  struct Entry {
    Exponents deltadims;
    std::vector<std::uint32_t> supports;  // nondecreasing under inclusion
  };
  std::vector<Entry> entries;
};

/// Flag polynomial of P acting on (Q_1,...,Q_m):
///
///   sum over ell-chains A of P of
///     x^delta(dim A) * prod_i prod_{a in supp(A_i) \ supp(A_{i-1})}
///                        f^{ell-i+1}_{Q_a}(x_i,...,x_ell)
///
/// with supp(A_0) empty. Chains that touch a slot whose polytope is
/// empty contribute a zero factor and are skipped outright.
AbstractFlag flag_p_action(const ChainData& chains,
                           const std::vector<FlagProvider>& qflags);

/// Inclusion-exclusion form counting strict chains with strictly
/// increasing dimensions: alternating sum over subsets of positions
/// {2..ell} of the lower-order flag polynomial with those variables
/// removed.
Polynomial strict_chain_poly(const FlagFamily& p, int ell);

// Family-level helpers, mostly for building inputs to the operations
// above order by order.
FlagFamily simplex_family(int r, int max_order);
FlagFamily hypercube_family(int d, int max_order);
FlagFamily product_family(const FlagFamily& a, const FlagFamily& b);
FlagFamily prism_family(const FlagFamily& p);
FlagFamily pyramid_family(const FlagFamily& p);
FlagFamily join_family(const FlagFamily& p, const FlagFamily& q);

}  // namespace flagforge
