#include "homgeo/positivity.hpp"

#include <algorithm>

namespace homgeo {

PositivityCertificate eventually_positive(const UniPoly& p, const Integer& t_min) {
  PositivityCertificate cert;
  cert.shifted = p.shift(Rational(t_min));
  const auto& coeffs = cert.shifted.coefficients();
  const bool nonnegative =
      std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.sign() >= 0; });
  if (nonnegative && cert.shifted.coefficient(0).sign() > 0)
    cert.result = PositivityResult::ProvedPositive;
  return cert;
}

const char* to_string(PositivityResult r) {
  return r == PositivityResult::ProvedPositive ? "ProvedPositive" : "Inconclusive";
}

}  // namespace homgeo
