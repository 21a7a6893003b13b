#include "hypheat/series.hpp"

#include <algorithm>
#include <string>

#include "hypheat/errors.hpp"

namespace hypheat {

namespace {

bool matches_parity(const std::vector<Rational>& c, Parity p) {
  if (p == Parity::none) return true;
  const std::size_t wrong = p == Parity::even ? 1 : 0;
  for (std::size_t i = wrong; i < c.size(); i += 2) {
    if (c[i] != 0) return false;
  }
  return true;
}

Parity product_parity(Parity a, Parity b) {
  if (a == Parity::none || b == Parity::none) return Parity::none;
  return a == b ? Parity::even : Parity::odd;
}

Parity sum_parity(Parity a, Parity b) { return a == b ? a : Parity::none; }

}  // namespace

RationalSeries::RationalSeries(int order, Parity parity)
    : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1), parity_(parity) {
  if (order < 0) throw UsageError("series order must be >= 0");
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs, Parity parity)
    : coeffs_(std::move(coeffs)), parity_(parity) {
  if (coeffs_.empty()) throw UsageError("series needs at least one coefficient");
  if (!matches_parity(coeffs_, parity_)) throw UsageError("series violates its parity tag");
}

RationalSeries RationalSeries::identity(int order) {
  RationalSeries s(order, Parity::even);
  s.coeffs_[0] = 1;
  return s;
}

bool RationalSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

RationalSeries RationalSeries::truncated(int order) const {
  RationalSeries out(order, parity_);
  const auto n = std::min(coeffs_.size(), out.coeffs_.size());
  std::copy_n(coeffs_.begin(), n, out.coeffs_.begin());
  return out;
}

RationalSeries RationalSeries::derivative() const {
  const Parity p = parity_ == Parity::even ? Parity::odd
                   : parity_ == Parity::odd ? Parity::even
                                            : Parity::none;
  if (order() == 0) return RationalSeries(0, p);
  RationalSeries out(order() - 1, p);
  for (int i = 1; i <= order(); ++i) out.coeffs_[i - 1] = coeffs_[i] * i;
  return out;
}

RationalSeries RationalSeries::shifted_up(int m) const {
  const Parity p = (m % 2 == 0 || parity_ == Parity::none) ? parity_
                   : parity_ == Parity::even               ? Parity::odd
                                                           : Parity::even;
  RationalSeries out(order() + m, p);
  std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + m);
  return out;
}

RationalSeries RationalSeries::shifted_down(int m) const {
  if (m > order()) throw UsageError("shifted_down past the series order");
  for (int i = 0; i < m; ++i) {
    if (coeffs_[i] != 0) throw DomainError("shifted_down: low coefficient does not vanish");
  }
  const Parity p = (m % 2 == 0 || parity_ == Parity::none) ? parity_
                   : parity_ == Parity::even               ? Parity::odd
                                                           : Parity::even;
  return RationalSeries(std::vector<Rational>(coeffs_.begin() + m, coeffs_.end()), p);
}

double RationalSeries::evaluate(double r) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * r + it->convert_to<double>();
  }
  return acc;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  if (other.coeffs_.size() < coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  parity_ = sum_parity(parity_, other.parity_);
  return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other) {
  if (other.coeffs_.size() < coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  parity_ = sum_parity(parity_, other.parity_);
  return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  return a.coeffs_ == b.coeffs_;
}

RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
RationalSeries operator*(RationalSeries a, const Rational& scalar) { return a *= scalar; }
RationalSeries operator*(const Rational& scalar, RationalSeries a) { return a *= scalar; }

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
  Rational term;
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j] == 0) continue;
      term = a[i];
      term *= b[j];
      out[i + j] += term;
    }
  }
  return RationalSeries(std::move(out), product_parity(a.parity(), b.parity()));
}

RationalSeries series_reciprocal(const RationalSeries& a) {
  if (a[0] == 0) throw DomainError("series_reciprocal: zero constant term");
  const int order = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(order) + 1);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i) {
      if (a[i] != 0) acc += a[i] * b[n - i];
    }
    b[n] = -acc * inv0;
  }
  const Parity p = a.parity() == Parity::even ? Parity::even : Parity::none;
  return RationalSeries(std::move(b), p);
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

RationalSeries series_basic(SeriesKind kind, int order, const Rational& scale, int power) {
  if (order < 0) throw UsageError("series order must be >= 0");
  switch (kind) {
    case SeriesKind::power: {
      if (power < 0) throw UsageError("series power must be >= 0");
      RationalSeries s(order, power % 2 == 0 ? Parity::even : Parity::odd);
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
      if (power <= order) c[power] = 1;
      return RationalSeries(std::move(c), s.parity());
    }
    case SeriesKind::sinh:
    case SeriesKind::cosh: {
      const int first = kind == SeriesKind::sinh ? 1 : 0;
      std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
      Rational term = 1;  // scale^i / i!
      for (int i = 0; i <= order; ++i) {
        if (i > 0) term = term * scale / i;
        if (i % 2 == first) c[i] = term;
      }
      return RationalSeries(std::move(c), first == 1 ? Parity::odd : Parity::even);
    }
  }
  throw UsageError("unknown series kind");
}

}  // namespace hypheat
