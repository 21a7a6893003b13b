#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace hypheat {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

enum class Parity { none, even, odd };

/// Truncated Maclaurin series sum_{i<=N} c_i r^i with exact rational
/// coefficients. The parity tag is a promise that every coefficient of the
/// other parity is zero; it is checked on construction and carried through
/// multiplication.
class RationalSeries {
 public:
  explicit RationalSeries(int order, Parity parity = Parity::none);
  RationalSeries(std::vector<Rational> coeffs, Parity parity = Parity::none);

  /// The constant series 1.
  static RationalSeries identity(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Parity parity() const noexcept { return parity_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;

  /// Same coefficients cut (or zero-extended) to degree `order`.
  RationalSeries truncated(int order) const;

  /// d/dr; the result has order N-1.
  RationalSeries derivative() const;

  /// Multiply by r^m (order grows by m).
  RationalSeries shifted_up(int m) const;

  /// Divide by r^m; the m lowest coefficients must vanish.
  RationalSeries shifted_down(int m) const;

  /// Partial sum at a floating point argument (Horner).
  double evaluate(double r) const;

  RationalSeries& operator+=(const RationalSeries& other);
  RationalSeries& operator-=(const RationalSeries& other);
  RationalSeries& operator*=(const Rational& scalar);

  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  std::vector<Rational> coeffs_;
  Parity parity_;
};

RationalSeries operator+(RationalSeries a, const RationalSeries& b);
RationalSeries operator-(RationalSeries a, const RationalSeries& b);
RationalSeries operator*(RationalSeries a, const Rational& scalar);
RationalSeries operator*(const Rational& scalar, RationalSeries a);

/// Cauchy product truncated at min(order(a), order(b)).
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
inline RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  return series_mul(a, b);
}

/// 1/a truncated at order(a); a must have a nonzero constant term.
RationalSeries series_reciprocal(const RationalSeries& a);

enum class SeriesKind { sinh, cosh, power };

/// Exact expansions of sinh(a r), cosh(a r) (with a = `scale`) or r^m
/// (with m = `power`) up to degree `order`.
RationalSeries series_basic(SeriesKind kind, int order, const Rational& scale = 1, int power = 0);

inline RationalSeries series_sinh(int order, const Rational& scale = 1) {
  return series_basic(SeriesKind::sinh, order, scale);
}
inline RationalSeries series_cosh(int order, const Rational& scale = 1) {
  return series_basic(SeriesKind::cosh, order, scale);
}
inline RationalSeries series_power(int m, int order) {
  return series_basic(SeriesKind::power, order, 1, m);
}

/// (2k)! as an exact integer.
BigInt factorial(unsigned n);

// ---------------------------------------------------------------------------
// Exact re-verification of the two coefficient sign arguments behind the
// concavity of |grad log K_3|^2 as a function of d/dt log K_3.

struct SeriesRow {
  long k = 0;                 // row for the coefficient of r^{2k}
  BigInt numerator;           // closed-form numerator, unreduced
  BigInt denominator;         // closed-form denominator, unreduced (> 0)
  int sign = 0;               // -1, 0, +1
  BigInt inner;               // the integer whose sign the argument rests on
  bool pass = false;
};

struct SeriesReport {
  std::string argument;  // "first" or "second"
  int order = 0;
  std::vector<SeriesRow> rows;
  bool pass = false;
};

/// Builds 2r^2 cosh r - r sinh r - (cosh 3r - cosh r)/4 exactly, checks it
/// against the product form 2r^2 cosh r - r sinh r - cosh r sinh^2 r, checks
/// that the r^{2k} coefficient is ((32k^2-24k+1) - 9^k) / (4 (2k)!) and < 0
/// for 3 <= k <= order/2 and that everything below r^6 vanishes.
/// Throws VerificationFailure naming the first offending k.
SeriesReport verify_first_sign_argument(int order = 400);

/// Same for the degree-four combination; coefficient
/// 2^{2k-3} (-(3k-8) 2^{2k-1} + 8k^4 - 28k^3 + 16k^2 + 4k - 16) / (2k)!,
/// vanishing below r^10 and negative for k >= 5.
SeriesReport verify_second_sign_argument(int order = 400);

/// The integer inside the first argument: (32k^2 - 24k + 1) - 9^k.
BigInt first_argument_inner(long k);
/// The integer inside the second argument.
BigInt second_argument_inner(long k);

struct DominanceRow {
  long k = 0;
  std::string chain;  // "first" or "second"
  BigInt margin;      // right side minus left side of the strict link; > 0 on pass
  bool pass = false;
};

struct DominanceReport {
  long bound = 0;
  std::vector<DominanceRow> rows;
  bool pass = false;
};

/// Integer domination chains that extend the coefficient signs to all k:
///   32k^2 - 24k + 1 < 81k^2 <= 9^k            (k >= 3)
///   -(3k-8) 2^{2k-1} + 8k^4 - 28k^3 + 16k^2 + 4k - 16
///       <= -10 * 2^{2k-1} + 8k^4 < 0          (k >= 6)
DominanceReport verify_dominance_inequalities(long bound = 200);

}  // namespace hypheat
