#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/param_model.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace homgeo {

/// Forbidden condition pairs (Y-level condition, Z-level condition).
enum class CaseLabel { A, BPlus, BMinus, C, D, E, F };

inline constexpr CaseLabel kAllCases[] = {CaseLabel::A, CaseLabel::BPlus, CaseLabel::BMinus,
                                          CaseLabel::C, CaseLabel::D,     CaseLabel::E,
                                          CaseLabel::F};

/// Whether a fact is checked by this code or imported.
enum class Provenance { Verified, External };

const char* to_string(CaseLabel c);
/// Lower-case CLI spelling: a, b+, b-, c, d, e, f.
const char* cli_name(CaseLabel c);
std::optional<CaseLabel> parse_case(std::string_view name);
const char* to_string(Provenance p);

/// Cases A and D are imported; everything else is computed here.
Provenance provenance_of(CaseLabel c);

enum class Verdict { Classical, Eliminated, SurvivesSquareTest, OutOfModeledScope };
const char* to_string(Verdict v);

enum class EliminationReason { None, ParameterConstraints, ConditionChain };
const char* to_string(EliminationReason r);

struct TraceStep {
  std::string rule;
  std::string detail;
  Provenance provenance = Provenance::Verified;
};

struct CaseInstance {
  CaseLabel label;
  Integer argument;  // s1 for C/E/F, t = sqrt(s1) for B+/B-
};

struct EliminationVerdict {
  std::variant<ParamSystem, CaseInstance> subject;
  Verdict verdict = Verdict::Eliminated;
  EliminationReason reason = EliminationReason::None;
  std::vector<TraceStep> trace;
  /// False for case instances evaluated below the hypothesis range (C at s1 = 2).
  bool within_hypothesis = true;
  std::optional<Integer> obstruction_value;
  /// Description of the surviving chain or instance, if any.
  std::optional<std::string> witness;
};

}  // namespace homgeo
