#include "flagforge/constructions.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace flagforge {

namespace {

std::vector<int> suffix_positions(int start1, int total) {
  std::vector<int> pos(total - start1 + 1);
  std::iota(pos.begin(), pos.end(), start1 - 1);
  return pos;
}

}  // namespace

FlagFamily::FlagFamily(std::vector<Polynomial> by_order)
    : by_order_(std::move(by_order)) {
  if (by_order_.empty()) throw std::invalid_argument("family needs order >= 1");
  for (std::size_t j = 0; j < by_order_.size(); ++j) {
    if (by_order_[j].nvars() != static_cast<int>(j) + 1) {
      throw std::invalid_argument("order-j flag polynomial must have j variables");
    }
  }
}

FlagFamily FlagFamily::empty_polytope(int max_order) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= max_order; ++j) v.emplace_back(j);
  return FlagFamily(std::move(v));
}

FlagFamily FlagFamily::point(int max_order) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= max_order; ++j) v.push_back(Polynomial::constant(j, 1));
  return FlagFamily(std::move(v));
}

const Polynomial& FlagFamily::order(int j) const {
  if (j < 1 || j > max_order()) {
    throw std::invalid_argument("flag family does not carry order " +
                                std::to_string(j));
  }
  return by_order_[j - 1];
}

bool FlagFamily::is_empty_polytope() const {
  for (const Polynomial& p : by_order_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

AbstractFlag flag_product(const AbstractFlag& a, const AbstractFlag& b) {
  if (a.ell != b.ell) throw std::invalid_argument("chain lengths differ");
  return {a.ell, a.poly * b.poly};
}

Polynomial prism_factor(int ell) {
  Polynomial f = Polynomial::constant(ell, 2);
  f += Polynomial::variable(ell, 0);
  for (int i = 1; i < ell; ++i) f += scale(Polynomial::variable(ell, i), 2);
  return f;
}

AbstractFlag flag_prism(const AbstractFlag& p) {
  return {p.ell, p.poly * prism_factor(p.ell)};
}

AbstractFlag flag_hypercube(int d, int ell) {
  if (d < 0) throw std::invalid_argument("negative dimension");
  return {ell, pow(prism_factor(ell), d)};
}

AbstractFlag flag_pyramid(const FlagFamily& base, int ell) {
  if (ell > base.max_order()) {
    throw std::invalid_argument("pyramid needs base flag orders 1.." +
                                std::to_string(ell));
  }
  Polynomial ones = Polynomial::constant(ell, 1);
  for (int i = 0; i < ell; ++i) ones += Polynomial::variable(ell, i);
  Polynomial out = base.order(ell) * ones + Polynomial::constant(ell, 1);
  for (int i = 2; i <= ell; ++i) {
    Polynomial shifted =
        embed(base.order(ell - i + 1), suffix_positions(i, ell), ell);
    out += Polynomial::variable(ell, i - 1) * shifted;
  }
  return {ell, out};
}

AbstractFlag flag_free_join(const FlagFamily& p, const FlagFamily& q, int ell) {
  if (ell > p.max_order() || ell > q.max_order()) {
    throw std::invalid_argument("join needs both flag families up to the chain length");
  }
  auto mixed = [&](const FlagFamily& fam) {
    // 1 + sum_{i=2..ell} x_i * f^{ell-i+1}(x_i,...,x_ell)
    Polynomial s = Polynomial::constant(ell, 1);
    for (int i = 2; i <= ell; ++i) {
      Polynomial shifted =
          embed(fam.order(ell - i + 1), suffix_positions(i, ell), ell);
      s += Polynomial::variable(ell, i - 1) * shifted;
    }
    return s;
  };
  Polynomial out = p.order(ell) * mixed(q);
  out += q.order(ell) * mixed(p);
  out += Polynomial::variable(ell, 0) * p.order(ell) * q.order(ell);
  return {ell, out};
}

FlagProvider simplex_flag_provider(int r) {
  if (r < 1) throw std::invalid_argument("simplex needs r >= 1 vertices");
  return [r](VariableWindow w) { return flag_simplex(r, w); };
}

FlagProvider family_flag_provider(FlagFamily family) {
  return [fam = std::move(family)](VariableWindow w) {
    int order = w.total - w.start + 1;
    return embed(fam.order(order), suffix_positions(w.start, w.total), w.total);
  };
}

FlagProvider empty_flag_provider() {
  return [](VariableWindow w) { return Polynomial(w.total); };
}

AbstractFlag flag_p_action(const ChainData& chains,
                           const std::vector<FlagProvider>& qflags) {
  if (static_cast<int>(qflags.size()) != chains.slots) {
    throw std::invalid_argument("one polytope per slot required");
  }
  int ell = chains.ell;
  Polynomial total(ell);
  // The same (slot, window) factor shows up across many chains; resolve
  // each once.
  std::map<std::pair<int, int>, Polynomial> factor_cache;
  auto factor = [&](int slot, int start) -> const Polynomial& {
    auto key = std::make_pair(slot, start);
    auto it = factor_cache.find(key);
    if (it == factor_cache.end()) {
      it = factor_cache.emplace(key, qflags[slot](VariableWindow{ell, start}))
               .first;
    }
    return it->second;
  };
  for (const ChainData::Entry& entry : chains.entries) {
    Polynomial term = Polynomial::monomial(entry.deltadims, 1);
    bool dead = false;
    std::uint32_t prev = 0;
    for (int i = 1; i <= ell && !dead; ++i) {
      std::uint32_t cur = entry.supports[i - 1];
      if (cur >> chains.slots) {
        throw std::invalid_argument("support references a slot beyond the last");
      }
      for (std::uint32_t fresh = cur & ~prev; fresh; fresh &= fresh - 1) {
        const Polynomial& f = factor(std::countr_zero(fresh), i);
        if (f.is_zero()) {
          dead = true;
          break;
        }
        term *= f;
      }
      prev = cur;
    }
    if (!dead) total += term;
  }
  return {ell, total};
}

Polynomial strict_chain_poly(const FlagFamily& p, int ell) {
  if (ell > p.max_order()) {
    throw std::invalid_argument("strict chains need flag orders 1.." +
                                std::to_string(ell));
  }
  Polynomial out(ell);
  // Subsets of removable positions {2,...,ell}, encoded in ell-1 bits.
  for (std::uint32_t removed = 0; removed < (1u << (ell - 1)); ++removed) {
    std::vector<int> kept{0};
    for (int i = 2; i <= ell; ++i) {
      if (!(removed >> (i - 2) & 1)) kept.push_back(i - 1);
    }
    int h = std::popcount(removed);
    Polynomial part = embed(p.order(ell - h), kept, ell);
    if (h % 2 == 0) {
      out += part;
    } else {
      out -= part;
    }
  }
  return out;
}

FlagFamily simplex_family(int r, int max_order) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= max_order; ++j) v.push_back(flag_simplex(r, {j, 1}));
  return FlagFamily(std::move(v));
}

FlagFamily hypercube_family(int d, int max_order) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= max_order; ++j) v.push_back(flag_hypercube(d, j).poly);
  return FlagFamily(std::move(v));
}

FlagFamily product_family(const FlagFamily& a, const FlagFamily& b) {
  int n = std::min(a.max_order(), b.max_order());
  std::vector<Polynomial> v;
  for (int j = 1; j <= n; ++j) v.push_back(a.order(j) * b.order(j));
  return FlagFamily(std::move(v));
}

FlagFamily prism_family(const FlagFamily& p) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= p.max_order(); ++j) {
    v.push_back(p.order(j) * prism_factor(j));
  }
  return FlagFamily(std::move(v));
}

FlagFamily pyramid_family(const FlagFamily& p) {
  std::vector<Polynomial> v;
  for (int j = 1; j <= p.max_order(); ++j) v.push_back(flag_pyramid(p, j).poly);
  return FlagFamily(std::move(v));
}

FlagFamily join_family(const FlagFamily& p, const FlagFamily& q) {
  int n = std::min(p.max_order(), q.max_order());
  std::vector<Polynomial> v;
  for (int j = 1; j <= n; ++j) v.push_back(flag_free_join(p, q, j).poly);
  return FlagFamily(std::move(v));
}

}  // namespace flagforge
