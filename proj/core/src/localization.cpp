#include "homgeo/localization.hpp"

namespace homgeo {

Integer point_localize(const ParamSystem& ps) {
  validate(ps);
  if (ps.s1 < 3) throw HypothesisError("point_localize: need at least 3 points on a line");
  return localized_s1(ps.s1, ps.alpha);
}

Integer s2_hat(const Integer& s1_hat, const Integer& alpha_hat) {
  return localized_s2(s1_hat, alpha_hat);
}

std::optional<LocalizedParams> localize_under(const ParamSystem& ps, Condition condition_hat) {
  const Integer sh = point_localize(ps);
  auto local = params_for_condition(condition_hat, sh, ps.dim - 1);
  if (!local) return std::nullopt;
  return LocalizedParams{sh, local->alpha, condition_hat};
}

std::vector<std::string> known_survivors() {
  return {"C at s1 = 2", "E at s1 in {0, 1}", "F at s1 = 1", "B+ at t in {0, 1}",
          "B- at t in {0, 1}"};
}

Integer hypothesis_floor(CaseLabel c) {
  switch (c) {
    case CaseLabel::BPlus:
    case CaseLabel::BMinus:
      return 2;
    default:
      return 3;
  }
}

Integer obstruction_value(CaseLabel c, const Integer& arg) {
  if (provenance_of(c) == Provenance::External) {
    throw ExternalProvenanceError(std::string("case ") + to_string(c) +
                                  " is imported; no obstruction value is computed");
  }
  if (arg < 2) {
    throw RangeError(std::string("case ") + to_string(c) + ": argument " + to_string(arg) +
                         " is below the obstruction's domain (>= 2)",
                     known_survivors());
  }
  return square_requirement(c, arg);
}

EliminationVerdict eliminate_case_instance(CaseLabel c, const Integer& arg) {
  EliminationVerdict v;
  v.subject = CaseInstance{c, arg};
  const Integer value = obstruction_value(c, arg);
  v.obstruction_value = value;
  v.within_hypothesis = arg >= hypothesis_floor(c);
  const std::string at = std::string(cli_name(c)) + "(" + to_string(arg) + ")";
  if (is_perfect_square(value)) {
    v.verdict = Verdict::SurvivesSquareTest;
    v.trace.push_back({"square_test", at + " = " + to_string(value) + " = " +
                                          to_string(isqrt_floor(value)) + "^2"});
    if (!v.within_hypothesis) v.trace.push_back({"hypothesis_range", "argument below the hypothesis range; known near-miss"});
    v.witness = at + " = " + to_string(value);
  } else if (value < 0) {
    v.verdict = Verdict::Eliminated;
    v.reason = EliminationReason::ConditionChain;
    v.trace.push_back({std::string("case_") + cli_name(c), at + " = " + to_string(value) + " is negative"});
  } else {
    const Integer r = isqrt_floor(value);
    v.verdict = Verdict::Eliminated;
    v.reason = EliminationReason::ConditionChain;
    v.trace.push_back({std::string("case_") + cli_name(c),
                       at + " = " + to_string(value) + " lies strictly between " + to_string(r) +
                           "^2 and " + to_string(r + 1) + "^2"});
  }
  return v;
}

}  // namespace homgeo
