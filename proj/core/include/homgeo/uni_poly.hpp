#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homgeo {

/// Dense univariate polynomial with exact rational coefficients.
/// coefficient(i) is the coefficient of x^i; trailing zeros are trimmed.
class UniPoly {
 public:
  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  /// Ascending coefficients: {c0, c1, c2, ...}.
  UniPoly(std::initializer_list<Rational> ascending);
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t power);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational leading() const;

  /// Coefficients as integers if all of them are integral.
  std::optional<std::vector<Integer>> integer_coefficients() const;
  /// Least positive integer d with d * p integral.
  Integer common_denominator() const;

  Rational eval(const Rational& t) const;
  Integer eval_integral(const Integer& t) const;  // requires integer coefficients

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly square() const { return *this * *this; }

  /// p(x + c).
  UniPoly shift(const Rational& c) const;
  /// p(-x).
  UniPoly reflect() const;
  /// p(q(x)).
  UniPoly compose(const UniPoly& inner) const;

  /// Quotient and remainder of division by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Human-readable form, e.g. "2x^3 - 1/2x + 1".
  std::string str(std::string_view var = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Exact quotient; throws DomainError if the division leaves a remainder.
UniPoly divide_exact(const UniPoly& dividend, const UniPoly& divisor);

}  // namespace homgeo
