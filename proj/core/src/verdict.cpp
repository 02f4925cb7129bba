#include "homgeo/verdict.hpp"

namespace homgeo {

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::BPlus: return "BPlus";
    case CaseLabel::BMinus: return "BMinus";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    case CaseLabel::E: return "E";
    case CaseLabel::F: return "F";
  }
  return "?";
}

const char* cli_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::A: return "a";
    case CaseLabel::BPlus: return "b+";
    case CaseLabel::BMinus: return "b-";
    case CaseLabel::C: return "c";
    case CaseLabel::D: return "d";
    case CaseLabel::E: return "e";
    case CaseLabel::F: return "f";
  }
  return "?";
}

std::optional<CaseLabel> parse_case(std::string_view name) {
  for (auto c : kAllCases) {
    if (name == cli_name(c) || name == to_string(c)) return c;
  }
  return std::nullopt;
}

const char* to_string(Provenance p) { return p == Provenance::Verified ? "verified" : "external"; }

Provenance provenance_of(CaseLabel c) {
  return (c == CaseLabel::A || c == CaseLabel::D) ? Provenance::External : Provenance::Verified;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "Classical";
    case Verdict::Eliminated: return "Eliminated";
    case Verdict::SurvivesSquareTest: return "SurvivesSquareTest";
    case Verdict::OutOfModeledScope: return "OutOfModeledScope";
  }
  return "?";
}

const char* to_string(EliminationReason r) {
  switch (r) {
    case EliminationReason::None: return "None";
    case EliminationReason::ParameterConstraints: return "ParameterConstraints";
    case EliminationReason::ConditionChain: return "ConditionChain";
  }
  return "?";
}

}  // namespace homgeo
