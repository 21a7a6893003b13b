// Odd-dimensional kernels. Writing alpha_n = csch(r)^m P_n with m = (n-1)/2,
// the descent recursion becomes
//   P_{n+2} = r P_n + 2 t m coth(r) P_n - 2 t dP_n/dr,   P_3 = r,
// a polynomial identity in (t, r, coth r, csch^2 r) with integer coefficients.
// Near r = 0 the closed form cancels catastrophically, so the same recursion
// is also run on exact Taylor series in r:
//   alpha_{n+2} = (r alpha_n - 2t d/dr alpha_n) / sinh r,  alpha_3 = r / sinh r.

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypheat/errors.hpp"
#include "hypheat/kernel.hpp"
#include "hypheat/series.hpp"
#include "hypheat/special.hpp"

namespace hypheat {

namespace {

// Exponents of t, r, coth r, csch^2 r.
using Exponents = std::array<int, 4>;
using Polynomial = std::map<Exponents, std::int64_t>;

void add_term(Polynomial& p, Exponents e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Polynomial d_dr(const Polynomial& p) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    const auto [et, er, ec, eq] = e;
    if (er > 0) add_term(out, {et, er - 1, ec, eq}, c * er);
    // d coth = -csch^2
    if (ec > 0) add_term(out, {et, er, ec - 1, eq + 1}, -c * ec);
    // d csch^2 = -2 csch^2 coth
    if (eq > 0) add_term(out, {et, er, ec + 1, eq}, -2 * c * eq);
  }
  return out;
}

Polynomial d_dt(const Polynomial& p) {
  Polynomial out;
  for (const auto& [e, c] : p) {
    if (e[0] > 0) add_term(out, {e[0] - 1, e[1], e[2], e[3]}, c * e[0]);
  }
  return out;
}

struct FlatPolynomial {
  std::vector<Exponents> exps;
  std::vector<double> coeffs;
};

FlatPolynomial flatten(const Polynomial& p) {
  FlatPolynomial f;
  for (const auto& [e, c] : p) {
    f.exps.push_back(e);
    f.coeffs.push_back(static_cast<double>(c));
  }
  return f;
}

// Bivariate Taylor data: alpha(t, r) = sum_e t^e A_e(r) with A_e even in r.
// Stored as double coefficients of r^{2j}.
struct SeriesTable {
  std::vector<std::vector<double>> even_coeffs;  // [e][j] for r^{2j}
};

struct OddTables {
  // Index (n - 3) / 2.
  std::vector<FlatPolynomial> p, dp_r, dp_t;
  std::vector<SeriesTable> series;
};

constexpr int kSeriesOrder = 120;

SeriesTable to_table(const std::vector<RationalSeries>& a) {
  SeriesTable tab;
  for (const auto& s : a) {
    std::vector<double> even;
    for (int i = 0; i <= s.order(); i += 2) even.push_back(s[i].convert_to<double>());
    tab.even_coeffs.push_back(std::move(even));
  }
  return tab;
}

OddTables build_tables() {
  OddTables tabs;
  Polynomial p{{{0, 1, 0, 0}, 1}};  // P_3 = r

  // alpha_3 = r / sinh r
  const RationalSeries sinh_over_r = series_sinh(kSeriesOrder + 1).shifted_down(1);
  const RationalSeries r_over_sinh = series_reciprocal(sinh_over_r);
  std::vector<RationalSeries> a{r_over_sinh};

  for (int n = 3; n <= kMaxOddDim; n += 2) {
    tabs.p.push_back(flatten(p));
    tabs.dp_r.push_back(flatten(d_dr(p)));
    tabs.dp_t.push_back(flatten(d_dt(p)));
    tabs.series.push_back(to_table(a));
    if (n == kMaxOddDim) break;

    const int m = (n - 1) / 2;
    Polynomial next;
    const Polynomial dp = d_dr(p);
    for (const auto& [e, c] : p) {
      add_term(next, {e[0], e[1] + 1, e[2], e[3]}, c);
      add_term(next, {e[0] + 1, e[1], e[2] + 1, e[3]}, 2 * m * c);
    }
    for (const auto& [e, c] : dp) add_term(next, {e[0] + 1, e[1], e[2], e[3]}, -2 * c);
    p = std::move(next);

    // Series: coefficient of t^e in r alpha - 2t alpha' is r A_e - 2 A'_{e-1}.
    const int order = a.front().order() - 1;
    std::vector<RationalSeries> next_a;
    for (std::size_t e = 0; e <= a.size(); ++e) {
      RationalSeries num(order, Parity::odd);
      if (e < a.size()) num += a[e].shifted_up(1).truncated(order);
      if (e > 0) num -= Rational(2) * a[e - 1].derivative().truncated(order);
      next_a.push_back(num.shifted_down(1) * r_over_sinh);
    }
    a = std::move(next_a);
  }
  return tabs;
}

const OddTables& tables() {
  static const OddTables t = build_tables();
  return t;
}

std::size_t table_index(int n) {
  if (n % 2 == 0 || n < 3 || n > kMaxOddDim) {
    throw UsageError("odd kernel tables: unsupported dimension " + std::to_string(n));
  }
  return static_cast<std::size_t>((n - 3) / 2);
}

struct PowerCache {
  static constexpr int kMax = 16;
  std::array<std::array<double, kMax>, 4> pw{};

  PowerCache(double t, double r, double coth, double csch2) {
    const std::array<double, 4> base{t, r, coth, csch2};
    for (std::size_t v = 0; v < 4; ++v) {
      pw[v][0] = 1.0;
      for (int i = 1; i < kMax; ++i) pw[v][i] = pw[v][i - 1] * base[v];
    }
  }

  double eval(const FlatPolynomial& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      const auto& e = f.exps[i];
      s += f.coeffs[i] * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * pw[3][e[3]];
    }
    return s;
  }
};

}  // namespace

namespace detail {

AlphaEval odd_alpha_closed_form(int n, double t, double r) {
  const auto idx = table_index(n);
  if (!(r > 0.0)) throw DomainError("closed-form odd alpha needs r > 0");
  const auto& tabs = tables();
  const double coth = 1.0 / std::tanh(r);
  // csch^2 r without overflow of sinh for large r.
  const double e2 = std::exp(-2.0 * r);
  const double csch2 = 4.0 * e2 / ((1.0 - e2) * (1.0 - e2));
  const PowerCache cache(t, r, coth, csch2);
  const double p = cache.eval(tabs.p[idx]);
  if (!(p > 0.0)) {
    throw NumericalAccuracyError("odd alpha polynomial lost positivity at r=" + std::to_string(r),
                                 std::abs(p));
  }
  const double m = (n - 1) / 2;
  AlphaEval a;
  a.dim = n;
  a.t = t;
  a.r = r;
  a.log_alpha = -m * log_sinh(r) + std::log(p);
  a.alpha = std::exp(a.log_alpha);
  a.dr_log_alpha = -m * coth + cache.eval(tabs.dp_r[idx]) / p;
  a.dt_log_alpha = cache.eval(tabs.dp_t[idx]) / p;
  return a;
}

AlphaEval odd_alpha_series(int n, double t, double r) {
  const auto& tab = tables().series[table_index(n)];
  const double r2 = r * r;
  double value = 0.0;
  double dr = 0.0;
  double dt = 0.0;
  double t_pow = 1.0;       // t^e
  double t_pow_prev = 0.0;  // t^{e-1}
  for (std::size_t e = 0; e < tab.even_coeffs.size(); ++e) {
    const auto& c = tab.even_coeffs[e];
    double v = 0.0;
    double d = 0.0;  // (1/r) d/dr of the even series
    for (std::size_t j = c.size(); j-- > 0;) {
      v = v * r2 + c[j];
      if (j > 0) d = d * r2 + 2.0 * static_cast<double>(j) * c[j];
    }
    value += t_pow * v;
    dr += t_pow * d * r;
    dt += static_cast<double>(e) * t_pow_prev * v;
    t_pow_prev = t_pow;
    t_pow *= t;
  }
  AlphaEval a;
  a.dim = n;
  a.t = t;
  a.r = r;
  a.alpha = value;
  a.log_alpha = std::log(value);
  a.dr_log_alpha = dr / value;
  a.dt_log_alpha = dt / value;
  return a;
}

AlphaEval odd_alpha(int n, double t, double r) {
  if (r < kOddSeriesSwitch) return odd_alpha_series(n, t, r);
  return odd_alpha_closed_form(n, t, r);
}

}  // namespace detail

}  // namespace hypheat
