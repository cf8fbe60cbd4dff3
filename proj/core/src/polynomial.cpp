#include "flagforge/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flagforge {

namespace {

void check_same_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw std::invalid_argument("polynomial variable counts differ: " +
                                std::to_string(a.nvars()) + " vs " +
                                std::to_string(b.nvars()));
  }
}

void check_exps(int nvars, const Exponents& exps) {
  if (static_cast<int>(exps.size()) != nvars) {
    throw std::invalid_argument("exponent vector length does not match nvars");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("nvars must be >= 1");
}

Polynomial Polynomial::constant(int nvars, Int value) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), value);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) {
    throw std::invalid_argument("variable index out of range");
  }
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(e), 1);
}

Polynomial Polynomial::monomial(Exponents exps, Int coeff) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, coeff);
  return p;
}

Int Polynomial::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Polynomial::constant_term() const { return coeff(Exponents(nvars_, 0)); }

Int Polynomial::coeff_sum() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

int Polynomial::degree(int var) const {
  if (var < 0 || var >= nvars_) {
    throw std::invalid_argument("variable index out of range");
  }
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  }
  return d;
}

void Polynomial::add_term(const Exponents& exps, const Int& c) {
  check_exps(nvars_, exps);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_nvars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_nvars(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_nvars(a, b);
  Polynomial out(a.nvars());
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    bool coef_shown = (a != 1) || !has_vars;
    if (coef_shown) os << a.get_str();
    bool need_star = coef_shown;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << var_prefix << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial scale(const Polynomial& p, const Int& c) {
  Polynomial out(p.nvars());
  if (c == 0) return out;
  for (const auto& [e, coef] : p.terms()) out.add_term(e, coef * c);
  return out;
}

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw std::invalid_argument("negative power");
  Polynomial out = Polynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

Polynomial exact_div_by_var(const Polynomial& p, int var) {
  if (var < 0 || var >= p.nvars()) {
    throw std::invalid_argument("variable index out of range");
  }
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) {
      throw std::invalid_argument(
          "polynomial is not divisible by variable x" + std::to_string(var + 1));
    }
    Exponents q = e;
    --q[var];
    out.add_term(q, c);
  }
  return out;
}

Polynomial phi_transform(const Polynomial& p) {
  Polynomial out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponents s(e.size());
    int acc = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      acc += e[i];
      s[i] = acc;
    }
    out.add_term(s, c);
  }
  return out;
}

Polynomial specialize_last_zero(const Polynomial& p) {
  if (p.nvars() < 2) {
    throw std::invalid_argument("need at least two variables to drop one");
  }
  Polynomial out(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e.back() != 0) continue;
    out.add_term(Exponents(e.begin(), e.end() - 1), c);
  }
  return out;
}

Polynomial embed(const Polynomial& p, const std::vector<int>& positions,
                 int total) {
  if (static_cast<int>(positions.size()) != p.nvars()) {
    throw std::invalid_argument("embed: one position per variable required");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= total ||
        (i > 0 && positions[i] <= positions[i - 1])) {
      throw std::invalid_argument("embed: positions must be increasing and < total");
    }
  }
  Polynomial out(total);
  for (const auto& [e, c] : p.terms()) {
    Exponents big(total, 0);
    for (std::size_t i = 0; i < positions.size(); ++i) big[positions[i]] = e[i];
    out.add_term(big, c);
  }
  return out;
}

Exponents delta_of(const std::vector<int>& dims) {
  Exponents d(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    d[i] = i == 0 ? dims[0] : dims[i] - dims[i - 1];
    if (d[i] < 0) throw std::invalid_argument("sequence is not nondecreasing");
  }
  return d;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace flagforge
