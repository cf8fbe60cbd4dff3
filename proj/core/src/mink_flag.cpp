#include "flagforge/mink_flag.hpp"

#include <bit>
#include <map>

namespace flagforge {

SetFamily family_from_profile(const K2Profile& p) {
  if (p.r1 < 0 || p.r2 < 0 || p.r3 < 0) {
    throw std::invalid_argument("profile counts must be nonnegative");
  }
  if (p.r1 + p.r2 == 0 || p.r1 + p.r3 == 0) {
    throw std::invalid_argument("profile does not give two nonempty sets");
  }
  if (p.r2 == 0 && p.r3 == 0) {
    throw std::invalid_argument(
        "profile gives the same set twice; drop the duplicate summand");
  }
  std::vector<int> f1, f2;
  for (int e = 1; e <= p.r1; ++e) {
    f1.push_back(e);
    f2.push_back(e);
  }
  for (int e = p.r1 + 1; e <= p.r1 + p.r2; ++e) f1.push_back(e);
  for (int e = p.r1 + p.r2 + 1; e <= p.r(); ++e) f2.push_back(e);
  return SetFamily({f1, f2});
}

Polynomial flag_from_rvector(const RVector& rv, int ell,
                             const EnumOptions& opts) {
  const MasterChainData& mc = master_chains(rv.k, ell, opts);
  const ChainData& cd = mc.chains;
  int slots = cd.slots;
  std::uint32_t alive = 0;
  for (int a = 0; a < slots; ++a) {
    if (rv.counts[a] > 0) alive |= std::uint32_t{1} << a;
  }
  Polynomial total(ell);
  // Chains sharing the same factor multiset share the same product;
  // group them by that key and expand each product once.
  std::map<std::vector<std::pair<int, int>>, Polynomial> grouped;
  std::vector<std::pair<int, int>> key;  // (window start, r of the slot)
  for (const ChainData::Entry& entry : cd.entries) {
    if (entry.supports.back() & ~alive) continue;  // empty slot touched
    key.clear();
    std::uint32_t prev = 0;
    for (int i = 1; i <= ell; ++i) {
      std::uint32_t cur = entry.supports[i - 1];
      for (std::uint32_t fresh = cur & ~prev; fresh; fresh &= fresh - 1) {
        key.emplace_back(i, rv.counts[std::countr_zero(fresh)]);
      }
      prev = cur;
    }
    std::sort(key.begin(), key.end());
    auto it = grouped.find(key);
    if (it == grouped.end()) it = grouped.emplace(key, Polynomial(ell)).first;
    it->second.add_term(entry.deltadims, 1);
  }
  for (const auto& [factors, monomials] : grouped) {
    Polynomial product = monomials;
    for (const auto& [start, r] : factors) {
      product *= flag_simplex(r, {ell, start});
    }
    total += product;
  }
  return total;
}

std::vector<Polynomial> flag_chain_terms(const RVector& rv, int ell,
                                         const EnumOptions& opts) {
  const ChainData& cd = master_chains(rv.k, ell, opts).chains;
  std::vector<Polynomial> terms;
  terms.reserve(cd.entries.size());
  for (const ChainData::Entry& entry : cd.entries) {
    Polynomial term = Polynomial::monomial(entry.deltadims, 1);
    std::uint32_t prev = 0;
    for (int i = 1; i <= ell && !term.is_zero(); ++i) {
      std::uint32_t cur = entry.supports[i - 1];
      for (std::uint32_t fresh = cur & ~prev; fresh; fresh &= fresh - 1) {
        int r = rv.counts[std::countr_zero(fresh)];
        if (r == 0) {
          term = Polynomial(ell);
          break;
        }
        term *= flag_simplex(r, {ell, i});
      }
      prev = cur;
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial flag_minkowski(const SetFamily& family, int ell,
                          const EnumOptions& opts) {
  if (family.has_duplicate_sets()) {
    throw std::invalid_argument(
        "family repeats a set; drop the duplicate summand (the sum is "
        "combinatorially unchanged)");
  }
  return flag_from_rvector(r_vector(family), ell, opts);
}

Polynomial flag2_closed_k2(const K2Profile& p) {
  auto flag2 = [&](int r) {
    return r == 0 ? Polynomial(2) : flag_simplex(r, {2, 1});
  };
  auto flag1 = [&](int r) {
    return r == 0 ? Polynomial(2) : flag_simplex(r, {2, 2});
  };
  Polynomial f1 = flag2(p.r1), f2 = flag2(p.r2), f3 = flag2(p.r3);
  Polynomial g1 = flag1(p.r1), g2 = flag1(p.r2), g3 = flag1(p.r3);
  Polynomial x1 = Polynomial::variable(2, 0);
  Polynomial x2 = Polynomial::variable(2, 1);
  Polynomial one = Polynomial::constant(2, 1);

  Polynomial out = (scale(x1, 2) + x1 * x1 + scale(x1 * x2, 2)) * f1 * f2 * f3;
  out += (x2 + x1 * x2 + x2 * x2) * (f1 * f2 * g3 + f1 * f3 * g2);
  out += (scale(x2, 2) + x2 * x2) * f2 * f3 * g1;
  out += x2 * x2 * f1 * g2 * g3;
  out += (one + x1 + x2) * (f1 * f2 + f1 * f3);
  out += x2 * (f1 * g2 + f1 * g3);
  out += f2 * f3;
  out += f1;
  return out;
}

Polynomial f_poly_minkowski(const SetFamily& family, const EnumOptions& opts) {
  if (family.has_duplicate_sets()) {
    throw std::invalid_argument(
        "family repeats a set; drop the duplicate summand (the sum is "
        "combinatorially unchanged)");
  }
  RVector rv = r_vector(family);
  const MasterChainData& mc = master_chains(rv.k, 1, opts);
  Polynomial total(1);
  for (const ChainData::Entry& entry : mc.chains.entries) {
    Polynomial term = Polynomial::monomial(entry.deltadims, 1);
    bool dead = false;
    for (std::uint32_t m = entry.supports[0]; m; m &= m - 1) {
      int r = rv.counts[std::countr_zero(m)];
      if (r == 0) {
        dead = true;
        break;
      }
      term *= f_simplex(r);
    }
    if (!dead) total += term;
  }
  return total;
}

namespace {

Polynomial binom_power_1var(int n) {  // (x+1)^n
  Polynomial out(1);
  for (int i = 0; i <= n; ++i) out.add_term({i}, binomial(n, i));
  return out;
}

}  // namespace

Polynomial f_poly_closed_k2(const K2Profile& p) {
  if (p.r() < 1) throw std::invalid_argument("profile must have r >= 1");
  Polynomial x = Polynomial::variable(1, 0);
  Polynomial acc = (x + Polynomial::constant(1, 2)) * binom_power_1var(p.r());
  acc -= binom_power_1var(p.r1 + p.r2);
  acc -= binom_power_1var(p.r1 + p.r3);
  acc -= binom_power_1var(p.r2 + p.r3 + 1);
  acc += Polynomial::constant(1, 1);
  return exact_div_by_var(exact_div_by_var(acc, 0), 0);
}

Polynomial f_poly_sets_form(const SetFamily& family) {
  if (family.k() != 2) {
    throw std::invalid_argument("set-size form applies to two summands only");
  }
  std::uint64_t fa = family.set_mask(0), fb = family.set_mask(1);
  int na = std::popcount(fa);
  int nb = std::popcount(fb);
  int nunion = std::popcount(fa | fb);
  int nsym = std::popcount(fa ^ fb);
  Polynomial x = Polynomial::variable(1, 0);
  Polynomial acc = (x + Polynomial::constant(1, 2)) * binom_power_1var(nunion);
  acc -= binom_power_1var(na);
  acc -= binom_power_1var(nb);
  acc -= binom_power_1var(nsym + 1);
  acc += Polynomial::constant(1, 1);
  return exact_div_by_var(exact_div_by_var(acc, 0), 0);
}

}  // namespace flagforge
