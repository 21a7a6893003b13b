#include "hypheat/series.hpp"

#include <string>

#include "hypheat/errors.hpp"

namespace hypheat {

namespace {

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

BigInt pow_int(long base, long exp) {
  BigInt b = base;
  BigInt out = 1;
  for (long i = 0; i < exp; ++i) out *= b;
  return out;
}

void require_order(int order, int minimum, const char* which) {
  if (order < minimum) {
    throw UsageError(std::string(which) + " sign argument needs order >= " +
                     std::to_string(minimum));
  }
}

void require_even_only(const RationalSeries& s, const char* which) {
  for (int i = 1; i <= s.order(); i += 2) {
    if (s[i] != 0) {
      throw VerificationFailure(std::string(which) + ": odd coefficient r^" + std::to_string(i) +
                                    " does not vanish",
                                i);
    }
  }
}

struct Fraction {
  BigInt numerator;
  BigInt denominator;
};

SeriesRow make_row(long k, const Rational& coeff, const Fraction& printed, const BigInt& inner,
                   bool pass) {
  SeriesRow row;
  row.k = k;
  row.numerator = printed.numerator;
  row.denominator = printed.denominator;
  row.sign = sign_of(coeff);
  row.inner = inner;
  row.pass = pass;
  return row;
}

// Rows for the coefficients of r^{2k}, 0 <= k <= order/2: zero below
// `first_k`, equal to `expected(k)` and strictly negative from there on.
// Rows carry the closed-form fraction unreduced, as the formula prints it.
template <class Expected, class Inner>
SeriesReport tabulate(const char* which, const RationalSeries& s, long first_k,
                      Expected expected, Inner inner) {
  SeriesReport report;
  report.argument = which;
  report.order = s.order();
  for (long k = 0; 2 * k <= s.order(); ++k) {
    const Rational& c = s[static_cast<int>(2 * k)];
    if (k < first_k) {
      if (c != 0) {
        throw VerificationFailure(std::string(which) + ": coefficient of r^" +
                                      std::to_string(2 * k) + " does not vanish",
                                  k);
      }
      report.rows.push_back(make_row(k, c, Fraction{0, 1}, BigInt(0), true));
      continue;
    }
    const Fraction printed = expected(k);
    if (c != Rational(printed.numerator, printed.denominator)) {
      throw VerificationFailure(std::string(which) + ": closed-form coefficient mismatch at k=" +
                                    std::to_string(k),
                                k);
    }
    if (c >= 0) {
      throw VerificationFailure(std::string(which) + ": nonnegative coefficient at k=" +
                                    std::to_string(k),
                                k);
    }
    report.rows.push_back(make_row(k, c, printed, inner(k), true));
  }
  report.pass = true;
  return report;
}

}  // namespace

BigInt first_argument_inner(long k) {
  const BigInt kk = k;
  return (32 * kk * kk - 24 * kk + 1) - pow_int(9, k);
}

BigInt second_argument_inner(long k) {
  const BigInt kk = k;
  // 2^{2k-1} is fractional for k = 0; the argument only uses k >= 5.
  if (k < 1) throw UsageError("second_argument_inner needs k >= 1");
  return -(3 * kk - 8) * pow_int(2, 2 * k - 1) + 8 * kk * kk * kk * kk - 28 * kk * kk * kk +
         16 * kk * kk + 4 * kk - 16;
}

SeriesReport verify_first_sign_argument(int order) {
  require_order(order, 6, "first");
  const int n = order;
  const RationalSeries r2 = series_power(2, n);
  const RationalSeries r1 = series_power(1, n);
  const RationalSeries c1 = series_cosh(n);
  const RationalSeries s1 = series_sinh(n);

  // 2 r^2 cosh r - r sinh r - (cosh 3r - cosh r) / 4
  const RationalSeries head = Rational(2) * (r2 * c1) - r1 * s1;
  const RationalSeries sum_form = head - Rational(1, 4) * (series_cosh(n, 3) - c1);
  // 2 r^2 cosh r - r sinh r - cosh r sinh^2 r
  const RationalSeries product_form = head - c1 * (s1 * s1);
  if (!(sum_form == product_form)) {
    long k = 0;
    while (sum_form[static_cast<int>(k)] == product_form[static_cast<int>(k)]) ++k;
    throw VerificationFailure("first: product and sum forms differ at r^" + std::to_string(k), k);
  }
  require_even_only(sum_form, "first");

  return tabulate(
      "first", sum_form, 3,
      [](long k) {
        return Fraction{first_argument_inner(k), 4 * factorial(static_cast<unsigned>(2 * k))};
      },
      first_argument_inner);
}

SeriesReport verify_second_sign_argument(int order) {
  require_order(order, 10, "second");
  const int n = order;
  const RationalSeries r1 = series_power(1, n);
  const RationalSeries r2 = series_power(2, n);
  const RationalSeries r3 = series_power(3, n);
  const RationalSeries r4 = series_power(4, n);
  const RationalSeries one = RationalSeries::identity(n);
  const RationalSeries c2 = series_cosh(n, 2);
  const RationalSeries s2 = series_sinh(n, 2);

  // (1/2) cosh 4r - 2 cosh 2r + 3/2 + r^4 (cosh 2r + 1) + r^4
  //   - 3r (sinh 4r / 8 - sinh 2r / 4) - (3r^2/2)(cosh 2r - 1) - (r^3/2) sinh 2r
  RationalSeries sum_form = Rational(1, 2) * series_cosh(n, 4) - Rational(2) * c2 +
                            Rational(3, 2) * one + r4 * (c2 + one) + r4;
  sum_form -= Rational(3) * (r1 * (Rational(1, 8) * series_sinh(n, 4) - Rational(1, 4) * s2));
  sum_form -= Rational(3, 2) * (r2 * (c2 - one));
  sum_form -= Rational(1, 2) * (r3 * s2);

  // 4 sinh^4 r + 2 r^4 cosh^2 r + r^4 - 3 r cosh r sinh^3 r - 3 r^2 sinh^2 r
  //   - r^3 sinh r cosh r
  const RationalSeries s1 = series_sinh(n);
  const RationalSeries c1 = series_cosh(n);
  const RationalSeries sh2 = s1 * s1;
  const RationalSeries sh3 = sh2 * s1;
  RationalSeries product_form = Rational(4) * (sh2 * sh2) + Rational(2) * (r4 * (c1 * c1)) + r4;
  product_form -= Rational(3) * (r1 * (c1 * sh3));
  product_form -= Rational(3) * (r2 * sh2);
  product_form -= r3 * (s1 * c1);

  if (!(sum_form == product_form)) {
    long k = 0;
    while (sum_form[static_cast<int>(k)] == product_form[static_cast<int>(k)]) ++k;
    throw VerificationFailure("second: product and sum forms differ at r^" + std::to_string(k), k);
  }
  require_even_only(sum_form, "second");

  return tabulate(
      "second", sum_form, 5,
      [](long k) {
        return Fraction{pow_int(2, 2 * k - 3) * second_argument_inner(k),
                        factorial(static_cast<unsigned>(2 * k))};
      },
      second_argument_inner);
}

DominanceReport verify_dominance_inequalities(long bound) {
  if (bound < 6) throw UsageError("dominance bound must be >= 6");
  DominanceReport report;
  report.bound = bound;
  for (long k = 3; k <= bound; ++k) {
    const BigInt kk = k;
    const BigInt quad = 32 * kk * kk - 24 * kk + 1;
    const BigInt mid = 81 * kk * kk;
    const BigInt nine_k = pow_int(9, k);
    DominanceRow row{k, "first", nine_k - quad, quad < mid && mid <= nine_k};
    if (!row.pass) {
      throw VerificationFailure("first domination chain fails at k=" + std::to_string(k), k);
    }
    report.rows.push_back(std::move(row));
  }
  for (long k = 6; k <= bound; ++k) {
    const BigInt kk = k;
    const BigInt two_pow = pow_int(2, 2 * k - 1);
    const BigInt middle = -10 * two_pow + 8 * kk * kk * kk * kk;
    const BigInt inner = second_argument_inner(k);
    DominanceRow row{k, "second", -middle, inner <= middle && middle < 0};
    if (!row.pass) {
      throw VerificationFailure("second domination chain fails at k=" + std::to_string(k), k);
    }
    report.rows.push_back(std::move(row));
  }
  report.pass = true;
  return report;
}

}  // namespace hypheat
