#include "doctest.h"
#include "flagforge/mink_flag.hpp"
#include "helpers.hpp"

using namespace flagforge;
using testing::make_poly;

namespace {

const Polynomial& contracted_cube_flag2() {
  static Polynomial p = make_poly(2, {{{0, 0}, 7},
                                      {{1, 0}, 11},
                                      {{2, 0}, 6},
                                      {{3, 0}, 1},
                                      {{0, 1}, 22},
                                      {{1, 1}, 22},
                                      {{2, 1}, 6},
                                      {{0, 2}, 22},
                                      {{1, 2}, 11},
                                      {{0, 3}, 7}});
  return p;
}

// Profiles (r1,r2,r3) summing to at most rmax that realize a genuine
// two-set family: both sets nonempty and distinct.
std::vector<K2Profile> realizable_profiles(int rmax) {
  std::vector<K2Profile> out;
  for (int r = 1; r <= rmax; ++r) {
    for (int r1 = 0; r1 <= r; ++r1) {
      for (int r2 = 0; r1 + r2 <= r; ++r2) {
        K2Profile p{r1, r2, r - r1 - r2};
        if (p.r1 + p.r2 == 0 || p.r1 + p.r3 == 0) continue;
        if (p.r2 == 0 && p.r3 == 0) continue;
        out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("mink_flag");

TEST_CASE("the contracted-cube example") {
  SetFamily f({{1, 2, 3}, {1, 2, 4}});
  CHECK(flag_minkowski(f, 2) == contracted_cube_flag2());
}

TEST_CASE("one summand reduces to the simplex") {
  SetFamily single({{1, 2, 3}});
  for (int ell = 1; ell <= 3; ++ell) {
    CHECK(flag_minkowski(single, ell) == flag_simplex(3, {ell, 1}));
  }
}

TEST_CASE("rhombus flag polynomials") {
  SetFamily f({{1, 2}, {1, 3}});
  Polynomial lin2 = make_poly(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 2}});
  CHECK(flag_minkowski(f, 2) == lin2 * lin2);
  Polynomial lin3 =
      make_poly(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}, {{0, 0, 0}, 2}});
  CHECK(flag_minkowski(f, 3) == lin3 * lin3);
}

TEST_CASE("constant term counts vertices") {
  for (const K2Profile& p : realizable_profiles(6)) {
    SetFamily fam = family_from_profile(p);
    Int f0 = static_cast<long>(p.r1) * p.r2 + static_cast<long>(p.r1) * p.r3 +
             static_cast<long>(p.r2) * p.r3 + p.r1;
    CHECK(flag_minkowski(fam, 2).constant_term() == f0);
  }
}

TEST_CASE("closed 2-chain form on the worked profiles") {
  CHECK(flag2_closed_k2({2, 1, 1}) == contracted_cube_flag2());
  Polynomial lin2 = make_poly(2, {{{1, 0}, 1}, {{0, 1}, 2}, {{0, 0}, 2}});
  CHECK(flag2_closed_k2({1, 1, 1}) == lin2 * lin2);
}

TEST_CASE("closed 2-chain form matches the chain-driven path for r <= 8") {
  for (int r = 1; r <= 8; ++r) {
    for (int r1 = 0; r1 <= r; ++r1) {
      for (int r2 = 0; r1 + r2 <= r; ++r2) {
        K2Profile p{r1, r2, r - r1 - r2};
        RVector rv{2, {p.r1, p.r2, p.r3}};
        CHECK(flag2_closed_k2(p) == flag_from_rvector(rv, 2));
      }
    }
  }
}

TEST_CASE("closed 2-chain form is symmetric in r2 and r3") {
  for (int r = 1; r <= 8; ++r) {
    for (int r1 = 0; r1 <= r; ++r1) {
      for (int r2 = 0; r1 + r2 <= r; ++r2) {
        K2Profile p{r1, r2, r - r1 - r2};
        CHECK(flag2_closed_k2(p) == flag2_closed_k2({p.r1, p.r3, p.r2}));
      }
    }
  }
}

TEST_CASE("f-polynomials of the worked families") {
  CHECK(f_poly_minkowski(SetFamily({{1, 2, 3}, {1, 2, 4}})) ==
        make_poly(1, {{{3}, 1}, {{2}, 6}, {{1}, 11}, {{0}, 7}}));
  CHECK(f_poly_minkowski(SetFamily({{1, 2}, {1, 3}})) ==
        make_poly(1, {{{2}, 1}, {{1}, 4}, {{0}, 4}}));
  Polynomial seg = make_poly(1, {{{1}, 1}, {{0}, 2}});
  CHECK(f_poly_minkowski(SetFamily({{1, 2}, {3, 4}})) == seg * seg);
}

TEST_CASE("closed f-polynomial forms") {
  CHECK(f_poly_closed_k2({2, 1, 1}) ==
        make_poly(1, {{{3}, 1}, {{2}, 6}, {{1}, 11}, {{0}, 7}}));
  for (const K2Profile& p : realizable_profiles(8)) {
    SetFamily fam = family_from_profile(p);
    Polynomial expect = f_poly_closed_k2(p);
    CHECK(f_poly_minkowski(fam) == expect);
    CHECK(f_poly_sets_form(fam) == expect);
    CHECK(flag_minkowski(fam, 1) == expect);
  }
}

TEST_CASE("theorem path equals brute-force counting on small families") {
  for (const K2Profile& p : realizable_profiles(5)) {
    SetFamily fam = family_from_profile(p);
    for (int ell = 1; ell <= 2; ++ell) {
      CHECK(flag_minkowski(fam, ell) == flag_poly_by_counting(fam, ell));
    }
  }
  SetFamily g({{1, 2, 3, 4}, {1, 2, 5}, {2, 3, 6}});
  for (int ell = 1; ell <= 2; ++ell) {
    CHECK(flag_minkowski(g, ell) == flag_poly_by_counting(g, ell));
  }
}

TEST_CASE("per-chain terms sum to the whole") {
  RVector rv{2, {2, 1, 1}};
  std::vector<Polynomial> terms = flag_chain_terms(rv, 2);
  CHECK(terms.size() == 25);
  Polynomial total(2);
  for (const Polynomial& t : terms) total += t;
  CHECK(total == flag_from_rvector(rv, 2));

  // A missing pattern zeroes exactly the chains whose support touches it.
  RVector sub{2, {2, 0, 1}};
  std::vector<Polynomial> subterms = flag_chain_terms(sub, 2);
  const ChainData& cd = master_chains(2, 2).chains;
  for (std::size_t i = 0; i < subterms.size(); ++i) {
    bool touches = (cd.entries[i].supports.back() >> 1) & 1;
    CHECK(subterms[i].is_zero() == touches);
  }
}

TEST_CASE("dropping the last variable shortens the chain") {
  SetFamily f({{1, 2, 3}, {1, 2, 4}});
  CHECK(specialize_last_zero(flag_minkowski(f, 3)) == flag_minkowski(f, 2));
  CHECK(specialize_last_zero(flag_minkowski(f, 2)) == flag_minkowski(f, 1));
}

TEST_CASE("duplicate summands are rejected with advice") {
  SetFamily dup({{1, 2}, {1, 2}});
  CHECK_THROWS_WITH_AS(flag_minkowski(dup, 1),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_AS(f_poly_minkowski(dup), std::invalid_argument);
  CHECK_THROWS_AS(family_from_profile({3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(family_from_profile({0, 3, 0}), std::invalid_argument);
}

TEST_CASE("strict-chain counts agree with brute force on sums") {
  using flagforge::FlagFamily;
  for (const K2Profile& p : realizable_profiles(5)) {
    SetFamily fam = family_from_profile(p);
    auto faces = enumerate_faces(fam);
    std::vector<Polynomial> orders;
    for (int j = 1; j <= 3; ++j) orders.push_back(flag_minkowski(fam, j));
    FlagFamily family(orders);
    for (int ell = 2; ell <= 3; ++ell) {
      Polynomial g = strict_chain_poly(family, ell);
      // Brute-force strict chains, grouped by dimension jumps.
      Polynomial oracle(ell);
      std::vector<int> path;
      auto dfs = [&](auto&& self, int at) -> void {
        path.push_back(at);
        if (static_cast<int>(path.size()) == ell) {
          std::vector<int> dims;
          for (int idx : path) dims.push_back(faces[idx].dim);
          oracle.add_term(delta_of(dims), 1);
        } else {
          for (int b = 0; b < static_cast<int>(faces.size()); ++b) {
            if (b != at && face_leq(faces[at], faces[b])) self(self, b);
          }
        }
        path.pop_back();
      };
      for (int a = 0; a < static_cast<int>(faces.size()); ++a) dfs(dfs, a);
      CHECK(g == oracle);
    }
  }
}

TEST_SUITE_END();
