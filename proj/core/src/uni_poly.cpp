#include "homgeo/uni_poly.hpp"

#include "homgeo/errors.hpp"

#include <algorithm>

namespace homgeo {

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational{} : coeffs_.back(); }

std::optional<std::vector<Integer>> UniPoly::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return std::nullopt;
    out.push_back(c.num());
  }
  return out;
}

Integer UniPoly::common_denominator() const {
  Integer d = 1;
  for (const auto& c : coeffs_) d = d / gcd(d, c.den()) * c.den();
  return d;
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Integer UniPoly::eval_integral(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!it->is_integer()) throw DomainError("eval_integral: non-integral coefficient " + it->str());
    acc *= t;
    acc += it->num();
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].sign() == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

UniPoly UniPoly::shift(const Rational& c) const {
  // Horner in the ring: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  const UniPoly linear({c, 1});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= linear;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::reflect() const {
  UniPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("UniPoly::divmod: zero divisor");
  UniPoly remainder = *this;
  if (remainder.degree() < divisor.degree()) return {UniPoly{}, remainder};
  std::vector<Rational> quotient(remainder.coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const auto shift_by = static_cast<std::size_t>(remainder.degree() - divisor.degree());
    const Rational factor = remainder.leading() / lead;
    quotient[shift_by] = factor;
    remainder -= monomial(factor, shift_by) * divisor;
  }
  return {UniPoly(std::move(quotient)), remainder};
}

std::string UniPoly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.sign() == 0) continue;
    const bool negative = c.sign() < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = negative ? -c : c;
    if (k == 0 || mag != Rational(1)) out += mag.str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UniPoly divide_exact(const UniPoly& dividend, const UniPoly& divisor) {
  auto [q, r] = dividend.divmod(divisor);
  if (!r.is_zero())
    throw DomainError("divide_exact: " + divisor.str() + " does not divide " + dividend.str());
  return q;
}

}  // namespace homgeo
