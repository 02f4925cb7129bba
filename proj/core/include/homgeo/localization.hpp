#pragma once

#include "homgeo/errors.hpp"
#include "homgeo/integer.hpp"
#include "homgeo/param_model.hpp"
#include "homgeo/uni_poly.hpp"
#include "homgeo/verdict.hpp"

#include <optional>
#include <vector>

namespace homgeo {

/// Parameters of the localization at a point, under an assumed condition.
struct LocalizedParams {
  Integer s1_hat;
  Integer alpha_hat;
  Condition condition_hat;
};

/// s1_hat = (s2 - 1)/(s1 - 1) = alpha + s1. Requires s1 >= 3.
Integer point_localize(const ParamSystem& ps);

/// 1 + (alpha_hat + s1_hat)(s1_hat - 1).
Integer s2_hat(const Integer& s1_hat, const Integer& alpha_hat);

/// Localized parameters when the localization satisfies `condition_hat`;
/// nullopt when that condition cannot hold there (Cond1 needs a square s1_hat).
std::optional<LocalizedParams> localize_under(const ParamSystem& ps, Condition condition_hat);

/// Quantity that must be a perfect square for the case to occur: s2_hat for C,
/// s3/s1 for E and F, s3/s1 in t = sqrt(s1) for B+ and B-.
/// Arguments: s1 >= 2 for C/E/F, t >= 2 for B+/B-. Throws
/// ExternalProvenanceError for A/D and RangeError below the domain.
Integer obstruction_value(CaseLabel c, const Integer& arg);

/// Eliminated when obstruction_value is not a square. Arguments below the
/// hypothesis range (s1 = 2 for C/E/F) are evaluated with within_hypothesis = false.
EliminationVerdict eliminate_case_instance(CaseLabel c, const Integer& arg);

/// Small arguments where a case's square test is known to pass.
std::vector<std::string> known_survivors();

/// Smallest argument the hypotheses allow for the case.
Integer hypothesis_floor(CaseLabel c);

// Ring-generic derivation of the square requirement, used with R = Integer for
// values and R = UniPoly for symbolic identities.

namespace detail {

inline Integer lift(const Integer&, long long v) { return Integer(v); }
inline UniPoly lift(const UniPoly&, long long v) { return UniPoly::constant(Rational(v)); }

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0 || a % b != 0) throw InvariantViolation("localization: inexact integer division");
  return a / b;
}
inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return divide_exact(a, b); }

}  // namespace detail

/// s1_hat from the plane size, checking the division is exact.
template <class R>
R localized_s1(const R& s1, const R& alpha) {
  const R one = detail::lift(s1, 1);
  const R s2 = one + (alpha + s1) * (s1 - one);
  R s1_hat = detail::exact_div(s2 - one, s1 - one);
  if (!(s1_hat == alpha + s1)) throw InvariantViolation("localization: s1_hat != alpha + s1");
  return s1_hat;
}

template <class R>
R localized_s2(const R& s1_hat, const R& alpha_hat) {
  const R one = detail::lift(s1_hat, 1);
  return one + (alpha_hat + s1_hat) * (s1_hat - one);
}

/// The square requirement for a case, derived step by step from the
/// condition equations and the localization identities.
template <class R>
R square_requirement(CaseLabel c, const R& arg) {
  const R one = detail::lift(arg, 1);
  switch (c) {
    case CaseLabel::C: {
      // (2) at Y and (2) at Z: (s1-1)(s3-1) square <=> s2_hat square.
      const R& s1 = arg;
      const R alpha = s1 * (s1 - one);
      const R sh = localized_s1(s1, alpha);
      return localized_s2(sh, sh * sh - sh);
    }
    case CaseLabel::E:
    case CaseLabel::F: {
      // (3) at Y: s3/s1 must be square.
      const R& s1 = arg;
      const R alpha = s1 * s1 + one;
      const R sh = localized_s1(s1, alpha);
      const R alpha_hat = c == CaseLabel::E ? sh * sh - sh : sh * sh + one;
      const R s3 = one + (s1 - one) * localized_s2(sh, alpha_hat);
      return detail::exact_div(s3, s1);
    }
    case CaseLabel::BPlus:
    case CaseLabel::BMinus: {
      // (1) at Y with s1 = t^2, (2) at Z: s3 square, equivalently s3/s1.
      const R& t = arg;
      const R s1 = t * t;
      const R u = c == CaseLabel::BPlus ? t + one : t - one;
      const R alpha = s1 * u * u;
      const R sh = localized_s1(s1, alpha);
      const R s3 = one + (s1 - one) * localized_s2(sh, sh * sh - sh);
      return detail::exact_div(s3, s1);
    }
    case CaseLabel::A:
    case CaseLabel::D:
      break;
  }
  throw ExternalProvenanceError(std::string("case ") + to_string(c) +
                                " is imported; no square requirement is computed");
}

}  // namespace homgeo
