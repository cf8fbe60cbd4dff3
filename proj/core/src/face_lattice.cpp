#include "flagforge/face_lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace flagforge {

BudgetExceeded::BudgetExceeded(std::uint64_t required_, std::uint64_t budget_)
    : std::runtime_error("enumeration budget exceeded: " +
                         std::to_string(required_) + " candidate tuples, cap " +
                         std::to_string(budget_)),
      required(required_),
      budget(budget_) {}

SetFamily::SetFamily(const std::vector<std::vector<int>>& sets) {
  if (sets.empty()) throw std::invalid_argument("family needs at least one set");
  std::vector<int> universe;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("family sets must be nonempty");
    for (int e : s) {
      if (e < 1) throw std::invalid_argument("elements are 1-based positives");
      universe.push_back(e);
    }
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 62) {
    throw std::invalid_argument("ground set too large (max 62 elements)");
  }
  r_ = static_cast<int>(universe.size());
  // Relabel onto 1..r so the family always covers its ground set.
  auto index_of = [&](int e) {
    return static_cast<int>(std::lower_bound(universe.begin(), universe.end(), e) -
                            universe.begin());
  };
  masks_.reserve(sets.size());
  for (const auto& s : sets) {
    std::uint64_t m = 0;
    for (int e : s) {
      std::uint64_t bit = std::uint64_t{1} << index_of(e);
      if (m & bit) throw std::invalid_argument("duplicate element within a set");
      m |= bit;
    }
    masks_.push_back(m);
  }
}

std::vector<int> SetFamily::set_elements(int i) const {
  std::vector<int> out;
  for (int j = 0; j < r_; ++j) {
    if (masks_[i] >> j & 1) out.push_back(j);
  }
  return out;
}

std::uint64_t SetFamily::ground_mask() const {
  return r_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r_) - 1;
}

bool SetFamily::has_duplicate_sets() const {
  std::vector<std::uint64_t> m = masks_;
  std::sort(m.begin(), m.end());
  return std::adjacent_find(m.begin(), m.end()) != m.end();
}

std::uint64_t SetFamily::candidate_count() const {
  std::uint64_t total = 1;
  for (std::uint64_t m : masks_) {
    std::uint64_t c = (std::uint64_t{1} << std::popcount(m)) - 1;
    if (total > ~std::uint64_t{0} / c) return ~std::uint64_t{0};
    total *= c;
  }
  return total;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Feasibility core shared by the face test and the vertex filter: does a
// linear functional exist whose argmax over set i is exactly part i?
bool feasible(const std::vector<std::uint64_t>& sets,
              const std::vector<std::uint64_t>& parts, int r) {
  UnionFind uf(r);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::uint64_t g = parts[i];
    int first = std::countr_zero(g);
    for (std::uint64_t rest = g & (g - 1); rest; rest &= rest - 1) {
      uf.unite(first, std::countr_zero(rest));
    }
  }
  // Strict domination edges: part class > every class of its complement.
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int from = uf.find(std::countr_zero(parts[i]));
    for (std::uint64_t out = sets[i] & ~parts[i]; out; out &= out - 1) {
      int to = uf.find(std::countr_zero(out));
      if (from == to) return false;
      edges.emplace_back(from, to);
    }
  }
  // Kahn on the class digraph; a leftover in-degree means a cycle.
  std::vector<int> indeg(r, 0);
  for (auto& [u, v] : edges) ++indeg[v];
  std::vector<int> stack;
  for (int x = 0; x < r; ++x) {
    if (uf.find(x) == x && indeg[x] == 0) stack.push_back(x);
  }
  std::vector<std::vector<int>> next(r);
  for (auto& [u, v] : edges) next[u].push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++seen;
    for (int v : next[u]) {
      if (--indeg[v] == 0) stack.push_back(v);
    }
  }
  std::size_t classes = 0;
  for (int x = 0; x < r; ++x) {
    if (uf.find(x) == x) ++classes;
  }
  return seen == classes;
}

// Vertex points of the sub-sum determined by the parts: selections of one
// element per part that jointly maximize some functional.
std::vector<Point> vertex_points(const std::vector<std::uint64_t>& parts, int r) {
  int k = static_cast<int>(parts.size());
  std::vector<std::vector<int>> choices(k);
  for (int i = 0; i < k; ++i) {
    for (std::uint64_t m = parts[i]; m; m &= m - 1) {
      choices[i].push_back(std::countr_zero(m));
    }
  }
  std::vector<Point> pts;
  std::vector<int> pick(k, 0);
  std::vector<std::uint64_t> singletons(k);
  while (true) {
    for (int i = 0; i < k; ++i) {
      singletons[i] = std::uint64_t{1} << choices[i][pick[i]];
    }
    if (feasible(parts, singletons, r)) {
      Point p(r, 0);
      for (int i = 0; i < k; ++i) ++p[choices[i][pick[i]]];
      pts.push_back(std::move(p));
    }
    int i = k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(choices[i].size())) {
      pick[i--] = 0;
    }
    if (i < 0) break;
    ++pick[i];
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

bool is_face(const SetFamily& family,
             const std::vector<std::uint64_t>& candidate) {
  if (candidate.size() != family.set_masks().size()) {
    throw std::invalid_argument("candidate arity does not match family");
  }
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (candidate[i] == 0 || (candidate[i] & ~family.set_mask(i))) {
      throw std::invalid_argument("candidate part empty or not a subset");
    }
  }
  return feasible(family.set_masks(), candidate, family.r());
}

int affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set has no affine hull");
  int n = static_cast<int>(pts.size()) - 1;
  if (n == 0) return 0;
  int m = static_cast<int>(pts[0].size());
  std::vector<std::vector<Int>> a(n, std::vector<Int>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = pts[i + 1][j] - pts[0][j];
  }
  // Fraction-free (Bareiss) elimination; every division is checked exact.
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i) {
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < m; ++j) {
        Int t = a[i][j] * a[rank][col] - a[i][col] * a[rank][j];
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(),
                    prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("fraction-free elimination drift");
        a[i][j] = q;
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<MinkFace> enumerate_faces(const SetFamily& family,
                                      const EnumOptions& opts,
                                      EnumStats* stats) {
  std::uint64_t need = family.candidate_count();
  if (need > opts.budget) throw BudgetExceeded(need, opts.budget);

  int k = family.k();
  std::vector<std::vector<std::uint64_t>> submasks(k);
  for (int i = 0; i < k; ++i) {
    std::uint64_t f = family.set_mask(i);
    for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
      if (sub) submasks[i].push_back(sub);
      if (sub == 0) break;
    }
    std::sort(submasks[i].begin(), submasks[i].end());
  }

  EnumStats local;
  std::map<std::vector<Point>, MinkFace> by_points;
  std::vector<std::uint64_t> cand(k);
  std::vector<int> pick(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) cand[i] = submasks[i][pick[i]];
    ++local.candidates;
    if (feasible(family.set_masks(), cand, family.r())) {
      std::vector<Point> pts = vertex_points(cand, family.r());
      auto it = by_points.find(pts);
      if (it != by_points.end()) {
        ++local.dedup_merges;
      } else {
        MinkFace face;
        face.parts = cand;
        face.dim = affine_dim(pts);
        // Support read off the vertex set, so it is well defined even if
        // two part tuples were to describe the same face.
        face.support = 0;
        for (const Point& p : pts) {
          for (int j = 0; j < family.r(); ++j) {
            if (p[j] > 0) face.support |= std::uint64_t{1} << j;
          }
        }
        face.points = std::move(pts);
        by_points.emplace(face.points, std::move(face));
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(submasks[i].size())) {
      pick[i--] = 0;
    }
    if (i < 0) break;
    ++pick[i];
  }

  std::vector<MinkFace> faces;
  faces.reserve(by_points.size());
  for (auto& [pts, face] : by_points) faces.push_back(std::move(face));
  std::sort(faces.begin(), faces.end(), [](const MinkFace& a, const MinkFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.points < b.points;
  });
  local.faces = faces.size();
  if (stats) *stats = local;
  return faces;
}

bool face_leq(const MinkFace& a, const MinkFace& b) {
  if (a.dim > b.dim || (a.support & ~b.support)) return false;
  return std::includes(b.points.begin(), b.points.end(), a.points.begin(),
                       a.points.end());
}

std::vector<FaceChain> enumerate_chains(const std::vector<MinkFace>& faces,
                                        int ell) {
  if (ell < 1) throw std::invalid_argument("chain length must be >= 1");
  int n = static_cast<int>(faces.size());
  std::vector<std::vector<int>> up(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (face_leq(faces[a], faces[b])) up[a].push_back(b);
    }
  }
  std::vector<FaceChain> chains;
  std::vector<int> path(ell);
  auto emit = [&]() {
    FaceChain c;
    c.faces = path;
    c.dims.resize(ell);
    for (int i = 0; i < ell; ++i) c.dims[i] = faces[path[i]].dim;
    c.deltadims = delta_of(c.dims);
    chains.push_back(std::move(c));
  };
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == ell) {
      emit();
      return;
    }
    for (int next : up[path[depth - 1]]) {
      path[depth] = next;
      self(self, depth + 1);
    }
  };
  for (int start = 0; start < n; ++start) {
    path[0] = start;
    dfs(dfs, 1);
  }
  return chains;
}

std::vector<FaceChain> enumerate_chains(const SetFamily& family, int ell,
                                        const EnumOptions& opts) {
  return enumerate_chains(enumerate_faces(family, opts), ell);
}

Polynomial flag_poly_by_counting(const SetFamily& family, int ell,
                                 const EnumOptions& opts) {
  Polynomial out(ell);
  for (const FaceChain& c : enumerate_chains(family, ell, opts)) {
    out.add_term(c.deltadims, 1);
  }
  return out;
}

std::vector<Int> f_vector(const std::vector<MinkFace>& faces) {
  int top = 0;
  for (const MinkFace& f : faces) top = std::max(top, f.dim);
  std::vector<Int> fv(top + 1, Int(0));
  for (const MinkFace& f : faces) ++fv[f.dim];
  return fv;
}

int intersection_components(const SetFamily& family) {
  int k = family.k();
  UnionFind uf(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (family.set_mask(i) & family.set_mask(j)) uf.unite(i, j);
    }
  }
  int comps = 0;
  for (int i = 0; i < k; ++i) {
    if (uf.find(i) == i) ++comps;
  }
  return comps;
}

}  // namespace flagforge
