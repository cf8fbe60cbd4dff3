#pragma once

#include "flagforge/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace flagforge {

inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

struct EnumOptions {
  /// Hard cap on the number of candidate part tuples enumerated per
  /// family. The oracle is a desk-scale instrument; anything larger
  /// should go through the closed forms.
  std::uint64_t budget = kDefaultEnumBudget;
};

struct BudgetExceeded : std::runtime_error {
  std::uint64_t required;
  std::uint64_t budget;
  BudgetExceeded(std::uint64_t required_, std::uint64_t budget_);
};

/// Ordered tuple (F_1,...,F_k) of nonempty subsets of a ground set.
/// The constructor restricts the ground set to the union of the sets and
/// relabels it to 1..r, so the covering assumption always holds.
/// Elements are stored 0-based as bits of a mask.
class SetFamily {
 public:
  /// `sets` lists 1-based elements; each set must be nonempty and free of
  /// duplicates within itself.
  explicit SetFamily(const std::vector<std::vector<int>>& sets);

  int r() const { return r_; }
  int k() const { return static_cast<int>(masks_.size()); }
  std::uint64_t set_mask(int i) const { return masks_[i]; }
  const std::vector<std::uint64_t>& set_masks() const { return masks_; }
  std::vector<int> set_elements(int i) const;  // sorted, 0-based
  std::uint64_t ground_mask() const;
  bool has_duplicate_sets() const;
  /// Number of candidate part tuples, saturated at uint64 max.
  std::uint64_t candidate_count() const;

 private:
  int r_ = 0;
  std::vector<std::uint64_t> masks_;
};

/// A point of the ambient integer lattice, one coordinate per ground
/// element; vertices of a sum of standard simplices are sums of standard
/// basis vectors, so integer coordinates suffice exactly.
using Point = std::vector<int>;

/// One face of a Minkowski sum of standard simplices.
struct MinkFace {
  std::vector<std::uint64_t> parts;  // G_i as masks, G_i subset of F_i
  std::uint64_t support = 0;         // union of the parts
  int dim = 0;                       // exact affine rank of the vertex set
  std::vector<Point> points;         // sorted vertex points
};

/// Decides whether (G_1,...,G_k) is the simultaneous argmax tuple of some
/// linear functional: elements sharing a part are merged into equality
/// classes, each part dominates its complement within its set strictly,
/// and the tuple is a face exactly when the strict-domination digraph on
/// classes has no cycle (a self-loop counts as a cycle).
bool is_face(const SetFamily& family, const std::vector<std::uint64_t>& candidate);

struct EnumStats {
  std::uint64_t candidates = 0;
  std::uint64_t faces = 0;
  /// Number of candidate tuples discarded because another tuple already
  /// produced the same vertex set. Expected to stay zero; any hit is
  /// worth recording (see enumerate_faces).
  std::uint64_t dedup_merges = 0;
};

/// All distinct nonempty faces of the sum, the whole polytope included,
/// in a canonical order (by dimension, then by vertex set). Faces are
/// deduplicated by vertex point set rather than by part tuple, so the
/// result does not rely on uniqueness of the part decomposition.
std::vector<MinkFace> enumerate_faces(const SetFamily& family,
                                      const EnumOptions& opts = {},
                                      EnumStats* stats = nullptr);

/// Containment test via vertex sets: a <= b iff vertices(a) is a subset
/// of vertices(b). Valid for faces enumerated from the same family.
bool face_leq(const MinkFace& a, const MinkFace& b);

/// Nondecreasing chain A_1 <= A_2 <= ... <= A_ell of faces (repetitions
/// allowed), with the dimension tuple and its successive differences.
struct FaceChain {
  std::vector<int> faces;  // indices into the enumerated face list
  std::vector<int> dims;
  Exponents deltadims;
};

std::vector<FaceChain> enumerate_chains(const std::vector<MinkFace>& faces,
                                        int ell);
std::vector<FaceChain> enumerate_chains(const SetFamily& family, int ell,
                                        const EnumOptions& opts = {});

/// Flag polynomial obtained by direct counting: sum over all ell-chains
/// of x^(delta of the dimension tuple). This is the oracle the closed
/// forms are checked against; it never consults them.
Polynomial flag_poly_by_counting(const SetFamily& family, int ell,
                                 const EnumOptions& opts = {});

/// Face counts by dimension, top face included; index d holds f_d.
std::vector<Int> f_vector(const std::vector<MinkFace>& faces);

/// Dimension of the affine hull of a point set (exact integer
/// arithmetic, fraction-free elimination). Empty input is rejected.
int affine_dim(const std::vector<Point>& pts);

/// Connected components of the graph on the sets of the family with an
/// edge whenever two sets intersect. The sum has dimension
/// r - (number of components).
int intersection_components(const SetFamily& family);

}  // namespace flagforge
