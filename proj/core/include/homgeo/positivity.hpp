#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/uni_poly.hpp"

namespace homgeo {

enum class PositivityResult { ProvedPositive, Inconclusive };

struct PositivityCertificate {
  PositivityResult result = PositivityResult::Inconclusive;
  /// p(x + t_min); all coefficients nonnegative with a positive constant term
  /// when the result is ProvedPositive.
  UniPoly shifted;
};

/// Sufficient test for p(t) > 0 at every integer t >= t_min: expand
/// p(x + t_min) and require nonnegative coefficients with a positive constant
/// term. Never reports ProvedPositive for a polynomial that fails somewhere in
/// the range; may report Inconclusive for one that does not.
PositivityCertificate eventually_positive(const UniPoly& p, const Integer& t_min);

const char* to_string(PositivityResult r);

}  // namespace homgeo
