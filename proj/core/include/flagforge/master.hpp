#pragma once

#include "flagforge/constructions.hpp"
#include "flagforge/face_lattice.hpp"

namespace flagforge {

inline constexpr int kDefaultKCap = 4;

/// The canonical family H(k) = (H_1,...,H_k) of subsets of [2^k - 1]
/// realizing every nonempty membership pattern of [k] exactly once:
/// element i belongs to exactly the sets listed by the i-th nonempty
/// subset of [k] in decreasing lexicographic order. |H_j| = 2^{k-1}.
struct MasterFamily {
  int k;
  SetFamily family;
};

/// Counts (r_1,...,r_{2^k-1}) of ground elements per membership pattern.
struct RVector {
  int k = 0;
  std::vector<int> counts;
  int r() const;
};

/// 0-based pattern index of a membership mask over [k] (bit j-1 set when
/// the element lies in F_j). Pattern i-1 carries the subset whose
/// characteristic string, element 1 most significant, spells 2^k - i.
int pattern_index(std::uint32_t membership_mask, int k);

/// Membership mask of the given 0-based pattern index.
std::uint32_t pattern_mask(int index, int k);

/// The cap exists because the master polytope lives in dimension
/// 2^k - 2 and candidate enumeration is doubly exponential in k; raise
/// it consciously together with the enumeration budget.
MasterFamily master_family(int k, int k_cap = kDefaultKCap);

RVector r_vector(const SetFamily& family);

/// Canonical family realizing the given type counts: ground elements
/// numbered pattern by pattern. Requires every set nonempty; inverse of
/// r_vector up to relabeling. The result may repeat a set when the
/// counts force it.
SetFamily family_from_rvector(const RVector& rv);

struct MasterChainData {
  int k = 0;
  ChainData chains;
};

/// Chain data of any family's face lattice, in the shape the action
/// formula consumes: ground-set supports along each chain plus the
/// dimension-difference exponents.
ChainData chain_data_from_family(const SetFamily& family, int ell,
                                 const EnumOptions& opts = {});

/// Chains of the k-th master polytope, memoized per (k, ell). Safe for
/// concurrent callers; each key is computed at most once.
const MasterChainData& master_chains(int k, int ell,
                                     const EnumOptions& opts = {},
                                     int k_cap = kDefaultKCap);

}  // namespace flagforge
