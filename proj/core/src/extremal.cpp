#include "flagforge/extremal.hpp"

#include <cmath>

namespace flagforge {

Int gen_binom(long x, int c) {
  if (c < 0) throw std::invalid_argument("lower index must be nonnegative");
  if (x < c) return 0;
  return binomial(static_cast<unsigned long>(x), static_cast<unsigned long>(c));
}

long nearest_int(long numer, long denom) {
  if (denom <= 0 || denom % 2 == 0) {
    throw std::invalid_argument(
        "nearest integer is only taken at odd positive denominators");
  }
  return std::lround(static_cast<double>(numer) / static_cast<double>(denom));
}

Int f_d_count(const K2Profile& p, int d) {
  long r = p.r();
  return gen_binom(r + 1, d + 2) + gen_binom(r, d + 2) -
         gen_binom(p.r1 + p.r2, d + 2) - gen_binom(p.r1 + p.r3, d + 2) -
         gen_binom(p.r2 + p.r3 + 1, d + 2);
}

ExtremalResult::ExtremalResult(Int value_, std::vector<K2Profile> argmaxes_,
                               const std::function<Int(const K2Profile&)>& eval)
    : value(std::move(value_)), argmaxes(std::move(argmaxes_)) {
  if (argmaxes.empty()) throw std::invalid_argument("empty argmax set");
  for (const K2Profile& p : argmaxes) {
    if (eval(p) != value) {
      throw std::logic_error("claimed argmax does not attain the value");
    }
  }
}

namespace {

ExtremalResult maximize(int r, int min_r1,
                        const std::function<Int(const K2Profile&)>& eval) {
  Int best;
  std::vector<K2Profile> argmaxes;
  bool have = false;
  for (int r1 = min_r1; r1 <= r; ++r1) {
    for (int r2 = 0; r2 + r1 <= r; ++r2) {
      K2Profile p{r1, r2, r - r1 - r2};
      Int v = eval(p);
      if (!have || v > best) {
        best = v;
        argmaxes.assign(1, p);
        have = true;
      } else if (v == best) {
        argmaxes.push_back(p);
      }
    }
  }
  if (!have) throw std::invalid_argument("empty search range");
  return ExtremalResult(best, std::move(argmaxes), eval);
}

}  // namespace

ExtremalResult max_faces(int r, int d) {
  if (r < 1 || d < 0 || d > r - 1) {
    throw std::invalid_argument("need r >= 1 and 0 <= d <= r-1");
  }
  return maximize(r, 0, [d](const K2Profile& p) { return f_d_count(p, d); });
}

Int closed_max_faces(int r, int d) {
  if (r < 1 || d < 0 || d > r - 1) {
    throw std::invalid_argument("need r >= 1 and 0 <= d <= r-1");
  }
  long t = 2L * r + 1;
  return gen_binom(r + 1, d + 2) + gen_binom(r, d + 2) -
         gen_binom(t / 3, d + 2) - gen_binom(nearest_int(t, 3), d + 2) -
         gen_binom((t + 2) / 3, d + 2);
}

Rational asympt_max_faces_limit(int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  Int p3, p2, fac;
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, d + 1);
  mpz_ui_pow_ui(p2.get_mpz_t(), 2, d + 1);
  mpz_fac_ui(fac.get_mpz_t(), d + 2);
  Rational out(2 * (p3 - p2), p3 * fac);
  out.canonicalize();
  return out;
}

Int chains0d(const K2Profile& p, int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  long r = p.r();
  long f0 = static_cast<long>(p.r1) * p.r2 + static_cast<long>(p.r1) * p.r3 +
            static_cast<long>(p.r2) * p.r3 + p.r1;
  long rr = static_cast<long>(p.r2) * p.r3;
  return f0 * gen_binom(r - 1, d) + rr * gen_binom(r - 2, d) -
         rr * gen_binom(p.r2 + p.r3 - 1, d);
}

bool is_simple_k2(const K2Profile& p) {
  if (p.r1 < 1) {
    throw std::invalid_argument(
        "simplicity criterion assumes intersecting sets (r1 >= 1)");
  }
  return p.r2 == 0 || p.r3 == 0 || p.r1 == 1;
}

Int discrepancy(const K2Profile& p, int d) {
  if (d < 0) throw std::invalid_argument("d must be nonnegative");
  long rr = static_cast<long>(p.r2) * p.r3;
  return rr * (gen_binom(p.r() - 2, d) - gen_binom(p.r2 + p.r3 - 1, d));
}

ExtremalResult max_discrepancy(int r, int d) {
  if (r < 2 || d < 0 || d > r - 1) {
    throw std::invalid_argument("need r >= 2 and 0 <= d <= r-1");
  }
  // gen_binom(s-1, d) only depends on s = r2+r3; tabulated once so the
  // sweep stays cheap even at r in the thousands.
  Int base = gen_binom(r - 2, d);
  std::vector<Int> gap(r);
  for (int s = 0; s <= r - 1; ++s) gap[s] = base - gen_binom(s - 1, d);
  auto eval = [d](const K2Profile& p) { return discrepancy(p, d); };
  Int best;
  std::vector<K2Profile> argmaxes;
  bool have = false;
  for (int r1 = 1; r1 <= r; ++r1) {
    for (int r2 = 0; r2 + r1 <= r; ++r2) {
      int r3 = r - r1 - r2;
      Int v = static_cast<long>(r2) * r3 * gap[r2 + r3];
      if (!have || v > best) {
        best = v;
        argmaxes.assign(1, K2Profile{r1, r2, r3});
        have = true;
      } else if (v == best) {
        argmaxes.push_back(K2Profile{r1, r2, r3});
      }
    }
  }
  return ExtremalResult(best, std::move(argmaxes), eval);
}

namespace {

template <typename F>
F window_lower(int d, int r) {
  F c = std::pow(F(2) / F(d + 2), F(1) / F(d));
  return c * F(r - 2) + (F(1) - c) * F(d - 1) / F(2);
}

template <typename F>
F window_slack(int d, int r) {
  return F(2 * d + 5) / F(2 * d + 4) +
         F(d) * std::log(F(d + 2)) / F(2 * (2 * r - d - 3));
}

bool near_boundary(double x) { return std::abs(x - std::round(x)) < 1e-9; }

}  // namespace

double discrep_lower_L(int d, int r) {
  if (d < 1 || d >= r) throw std::invalid_argument("need 1 <= d < r");
  return window_lower<double>(d, r);
}

DiscrepancyWindow discrep_window(int d, int r) {
  if (d < 1 || d >= r) throw std::invalid_argument("need 1 <= d < r");
  if (2 * r - d - 3 <= 0) {
    throw std::invalid_argument("window slack is undefined for 2r - d - 3 <= 0");
  }
  DiscrepancyWindow w;
  w.lower = window_lower<double>(d, r);
  w.upper_slack = window_slack<double>(d, r);
  double upper = w.lower + w.upper_slack;
  if (near_boundary(w.lower) || near_boundary(upper)) {
    // The endpoints are irrational for d >= 2, but do not trust a double
    // landing this close to an integer; redo the rounding wider.
    long double lo = window_lower<long double>(d, r);
    long double up = lo + window_slack<long double>(d, r);
    w.lo = static_cast<int>(std::ceil(lo));
    w.hi = static_cast<int>(std::floor(up));
  } else {
    w.lo = static_cast<int>(std::ceil(w.lower));
    w.hi = static_cast<int>(std::floor(upper));
  }
  return w;
}

std::vector<int> DiscrepancyWindow::ints() const {
  std::vector<int> out;
  for (int s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

double asympt_discrep_limit(int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  Int fac;
  mpz_fac_ui(fac.get_mpz_t(), d - 1);
  return std::pow(2.0, 2.0 / d - 2.0) /
         (std::pow(static_cast<double>(d + 2), 2.0 / d - 1.0) * fac.get_d());
}

}  // namespace flagforge
