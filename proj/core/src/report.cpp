#include "homgeo/report.hpp"

#include "homgeo/diophantine.hpp"
#include "homgeo/localization.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace homgeo {

using nlohmann::json;

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Gap: return "gap";
  }
  return "?";
}

CheckStatus Report::overall() const {
  CheckStatus worst = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Gap) worst = CheckStatus::Gap;
  }
  return worst;
}

int Report::exit_code() const {
  switch (overall()) {
    case CheckStatus::Pass: return 0;
    case CheckStatus::Fail: return 1;
    case CheckStatus::Gap: return 2;
  }
  return 1;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json to_json(const Integer& n) { return to_string(n); }

json to_json(const ParamSystem& ps) {
  return {{"s1", to_json(ps.s1)}, {"alpha", to_json(ps.alpha)}, {"alphaPrime", ps.alpha_prime}, {"dim", ps.dim}};
}

namespace {

Integer integer_field(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return parse_integer(v.get<std::string>());
  return Integer(v.get<long long>());
}

}  // namespace

ParamSystem param_system_from_json(const json& j) {
  ParamSystem ps;
  ps.s1 = integer_field(j, "s1");
  ps.alpha = integer_field(j, "alpha");
  ps.alpha_prime = static_cast<int>(integer_field(j, "alphaPrime"));
  ps.dim = static_cast<long long>(integer_field(j, "dim"));
  return ps;
}

json to_json(const EliminationVerdict& v) {
  json j;
  if (const auto* ps = std::get_if<ParamSystem>(&v.subject)) {
    j["subject"] = to_json(*ps);
  } else {
    const auto& inst = std::get<CaseInstance>(v.subject);
    j["case"] = cli_name(inst.label);
    j["argument"] = to_json(inst.argument);
    j["provenance"] = to_string(provenance_of(inst.label));
    j["withinHypothesis"] = v.within_hypothesis;
  }
  if (v.obstruction_value) j["obstructionValue"] = to_json(*v.obstruction_value);
  j["verdict"] = to_string(v.verdict);
  if (v.reason != EliminationReason::None) j["reason"] = to_string(v.reason);
  json trace = json::array();
  for (const auto& step : v.trace)
    trace.push_back({{"rule", step.rule}, {"detail", step.detail}, {"provenance", to_string(step.provenance)}});
  j["trace"] = std::move(trace);
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

json to_json(const ThresholdReport& r) {
  return {{"threshold", r.threshold.str()},
          {"firstRExceeding", r.first_r_exceeding},
          {"boundName", to_string(r.bound_name)}};
}

json to_json(const FlatProfile& p) {
  json arr = json::array();
  for (const auto& s : p.sizes()) arr.push_back(to_json(s));
  return arr;
}

json to_json(const SearchSummary& s) {
  json hits = json::object();
  for (const auto& [label, n] : s.case_hits) hits[cli_name(label)] = n;
  json survivors = json::array();
  for (const auto& v : s.survivors) survivors.push_back(to_json(v));
  return {{"s1Max", s.s1_max},
          {"alphaMax", s.alpha_max},
          {"total", s.total},
          {"classical", s.classical},
          {"eliminatedByParameters", s.eliminated_parameters},
          {"eliminatedByConditionChain", s.eliminated_chain},
          {"outOfModeledScope", s.out_of_scope},
          {"maxFirstRExceeding", s.max_first_r},
          {"survivorCount", s.survivor_count},
          {"survivors", survivors},
          {"caseEvaluations", hits}};
}

json to_json(const Check& c) {
  json j{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

json to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"version", r.version}, {"timestamp", r.timestamp}, {"status", to_string(r.overall())}, {"checks", checks}};
}

Check search_check(const SearchSummary& s) {
  Check c{"search"};
  c.details = to_json(s);
  json missing = json::array();
  for (long long q = 2; q <= s.s1_max; ++q) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    if (q + 1 <= s.s1_max && !s.classical_projective[static_cast<std::size_t>(q + 1)])
      missing.push_back("PG over GF(" + std::to_string(q) + ")");
    // GF(2) affine lines have 2 points, outside the s1 >= 3 range.
    if (q >= 3 && !s.classical_affine[static_cast<std::size_t>(q)])
      missing.push_back("AG over GF(" + std::to_string(q) + ")");
  }
  c.details["missingClassical"] = missing;
  if (s.survivor_count > 0) {
    c.status = CheckStatus::Fail;
    c.witness = to_json(s.survivors.front());
  } else if (!missing.empty()) {
    c.status = CheckStatus::Fail;
  }
  return c;
}

namespace {

Check identities_check() {
  Check c{"identities"};
  const std::vector<std::pair<CaseLabel, UniPoly>> displayed = {
      {CaseLabel::C, UniPoly{-4, 0, 1}},
      {CaseLabel::E, UniPoly{1, 6, 5}},
      {CaseLabel::F, UniPoly{9, 8, 4}},
  };
  for (const auto& obs : catalog()) {
    json entry{{"f", obs.f.str()}, {"g", obs.g.str()}, {"h", obs.h.str()}, {"identity", verify_identity(obs)}};
    if (!verify_identity(obs)) c.status = CheckStatus::Fail;
    try {
      const auto [a_poly, four_h] = factor_equation(obs);
      entry["A"] = a_poly.str();
      entry["fourH"] = four_h.str();
      for (const auto& [label, expected] : displayed) {
        if (label == obs.label && four_h != expected) c.status = CheckStatus::Fail;
      }
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      c.status = CheckStatus::Fail;
    }
    c.details[cli_name(obs.label)] = entry;
  }
  return c;
}

Check certificates_check() {
  Check c{"certificates"};
  for (const auto& obs : catalog()) {
    const CertificateResult cert = certify_no_square(obs);
    c.details[cli_name(obs.label)] = {{"status", to_string(cert.status)},
                                      {"tMin", to_json(obs.t_min)},
                                      {"activeSide", to_string(cert.side)},
                                      {"upperGapShifted", cert.upper_gap.shifted.str()},
                                      {"lowerGapShifted", cert.lower_gap.shifted.str()},
                                      {"explanation", cert.explanation}};
    // A missing certificate downgrades the case to sieve-only evidence.
    if (cert.status != CertificateStatus::ProvedImpossible && c.status == CheckStatus::Pass) {
      c.status = CheckStatus::Gap;
      c.details["certificateGap"] = true;
    }
  }
  return c;
}

Check sieve_check(long long limit, unsigned workers) {
  Check c{"sieve"};
  c.details["limit"] = limit;
  for (const auto& obs : catalog()) {
    const auto hits = sieve(obs, limit, workers);
    json arr = json::array();
    for (const auto& t : hits) arr.push_back(to_json(t));
    c.details[cli_name(obs.label)] = {{"squareArgs", arr}, {"tMin", to_json(obs.t_min)}};
    std::vector<Integer> expected;
    for (const auto& t : obs.known_square_args) {
      if (t <= limit) expected.push_back(t);
    }
    if (hits != expected) {
      c.status = CheckStatus::Fail;
      for (const auto& t : hits) {
        if (t >= obs.t_min) {
          c.witness = json{{"case", cli_name(obs.label)}, {"t", to_json(t)}, {"f", to_json(obs.f.eval_integral(t))}};
          break;
        }
      }
    }
  }
  return c;
}

Check cross_module_check() {
  Check c{"obstruction_consistency"};
  long long compared = 0;
  for (const auto& obs : catalog()) {
    for (long long s = hypothesis_floor(obs.label).convert_to<long long>(); s <= 1000; ++s) {
      const Integer arg = s;
      ++compared;
      if (obstruction_value(obs.label, arg) != obs.f.eval_integral(arg)) {
        c.status = CheckStatus::Fail;
        c.witness = json{{"case", cli_name(obs.label)}, {"argument", s}};
      }
    }
    if (square_requirement(obs.label, UniPoly::x()) != obs.f) {
      c.status = CheckStatus::Fail;
      c.details["symbolicMismatch"] = cli_name(obs.label);
    }
  }
  c.details["valuesCompared"] = compared;
  return c;
}

Check spectral_check() {
  Check c{"spectral_identities"};
  const bool ok = spectral_identities_hold(9);
  c.details["grid"] = "9x9 over s1 in [3,11], alpha in [1,9]";
  c.details["psi"] = "-theta - s1(s1-1)(alpha - s1(s1-1))";
  bool cond2 = true;
  for (long long s = 3; s <= 200 && cond2; ++s) cond2 = threshold_alpha_prime0(s, s * (s - 1)) == Rational(1);
  c.details["cond2ThresholdIsOne"] = cond2;
  if (!ok || !cond2) c.status = CheckStatus::Fail;
  return c;
}

Check grid_check(const char* name, const GridSummary& g, long long limit) {
  Check c{name};
  c.details = {{"points", g.points},
               {"maxFirstRExceeding", g.max_first_r},
               {"limit", limit},
               {"worstS1", to_json(g.worst_s1)},
               {"worstParam", to_json(g.worst_param)},
               {"violations", g.violations}};
  if (g.violations > 0) {
    c.status = CheckStatus::Fail;
    c.witness = g.first_violation;
  }
  return c;
}

Check automaton_check() {
  Check c{"condition_automaton"};
  const TransitionGraph g = TransitionGraph::standard();
  const ChainLength len = longest_condition_chain(g);
  c.details["longestAllowedChain"] = len.edges;
  c.details["requiredTransitions"] = kLocalizationDepth;
  json edges = json::array();
  for (const auto& [key, edge] : g.forbidden_edges()) {
    edges.push_back({{"from", key.first}, {"to", key.second}, {"case", to_string(edge.label)},
                     {"provenance", to_string(edge.provenance)}});
  }
  c.details["forbiddenEdges"] = edges;
  if (len.unbounded || len.edges >= kLocalizationDepth) c.status = CheckStatus::Fail;
  json mutations = json::object();
  for (auto label : {CaseLabel::A, CaseLabel::BPlus, CaseLabel::C, CaseLabel::D, CaseLabel::E, CaseLabel::F}) {
    const ChainLength m = longest_condition_chain(g.with_edge_restored(label));
    mutations[to_string(label)] = m.unbounded ? json("cycle") : json(m.edges);
    if (!m.unbounded && m.edges < kLocalizationDepth) c.status = CheckStatus::Fail;
  }
  c.details["restoredEdge"] = mutations;
  return c;
}

Check dimension_check() {
  Check c{"required_dimension"};
  const DimensionThreshold d = required_dimension();
  c.details = {{"exceptional", d.exceptional}, {"localizationDepth", d.localization_depth}, {"required", d.required}};
  if (d.exceptional != 20 || d.required != 23) c.status = CheckStatus::Fail;
  return c;
}

Check fault_injection_check(unsigned workers) {
  Check c{"fault_injection"};
  for (auto label : {CaseLabel::BPlus, CaseLabel::BMinus, CaseLabel::C, CaseLabel::E, CaseLabel::F}) {
    PipelineConfig cfg;
    cfg.disabled.insert(label);
    const SearchSummary s = run_search(10, 200, cfg, workers);
    json entry{{"survivors", s.survivor_count}};
    if (!s.survivors.empty() && s.survivors.front().witness) entry["witness"] = *s.survivors.front().witness;
    c.details[cli_name(label)] = entry;
    if (s.survivor_count == 0) c.status = CheckStatus::Fail;
  }
  return c;
}

Check geometry_check() {
  Check c{"classical_geometries"};
  struct Instance {
    Geometry g;
    bool axioms;
  };
  std::vector<Instance> instances;
  instances.push_back({build_projective(2, 2), true});
  instances.push_back({build_projective(3, 2), true});
  instances.push_back({build_projective(2, 3), true});
  instances.push_back({build_affine(2, 3), true});
  instances.push_back({build_affine(3, 3), true});
  instances.push_back({build_affine(2, 5), true});
  instances.push_back({build_projective(3, 3), false});
  instances.push_back({build_projective(4, 2), false});
  for (const auto& inst : instances) {
    const Geometry& g = inst.g;
    json entry;
    try {
      const FlatProfile profile = flat_profile(g);
      entry["profile"] = to_json(profile);
      const Integer q = g.field_order();
      for (std::size_t i = 0; i <= profile.top_dimension(); ++i) {
        const Integer expected = g.kind() == GeometryKind::Projective ? (ipow(q, static_cast<unsigned>(i + 1)) - 1) / (q - 1)
                                                                      : ipow(q, static_cast<unsigned>(i));
        if (profile[i] != expected) c.status = CheckStatus::Fail;
      }
      const Integer alpha = alpha_of(profile);
      entry["alpha"] = to_json(alpha);
      if (alpha != (g.kind() == GeometryKind::Projective ? 0 : 1)) c.status = CheckStatus::Fail;
      if (!classify_condition(ParamSystem{profile[1], alpha, 0, g.dimension()}).contains(Condition::ClassicalCompatible))
        c.status = CheckStatus::Fail;
      json local = json::array();
      FlatProfile first;
      for (PointId x = 0; x < g.point_count(); ++x) {
        const FlatProfile lp = localize_at_point(g, x);
        if (x == 0) {
          first = lp;
          local = to_json(lp);
        } else if (lp != first) {
          c.status = CheckStatus::Fail;
        }
      }
      entry["localized"] = local;
      if (inst.axioms) {
        const AxiomReport ax = check_closure_axioms(g);
        entry["axioms"] = {{"ok", ax.ok()}, {"subsets", ax.subsets_checked}, {"exchangeChecks", ax.exchange_checks}};
        if (!ax.ok()) {
          c.status = CheckStatus::Fail;
          c.witness = g.name() + ": " + ax.first_failure;
        }
      }
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      c.status = CheckStatus::Fail;
    }
    c.details[g.name()] = entry;
  }
  c.details["fields"] = "prime fields only";
  return c;
}

}  // namespace

Report verify_all(const VerifyOptions& options) {
  Report r;
  r.timestamp = utc_timestamp();
  r.checks.push_back(identities_check());
  r.checks.push_back(certificates_check());
  r.checks.push_back(sieve_check(options.sieve_limit, options.workers));
  r.checks.push_back(cross_module_check());
  r.checks.push_back(spectral_check());
  r.checks.push_back(grid_check("threshold_alpha_prime0",
                                threshold_grid_alpha_prime0(options.grid_s1_max, options.grid_param_max),
                                kMaxDimensionAlphaPrime0 + 1));
  r.checks.push_back(grid_check("threshold_alpha_prime1",
                                threshold_grid_alpha_prime1(options.grid_s1_max, options.grid_param_max),
                                kMaxDimensionAlphaPrime1 + 1));
  r.checks.push_back(automaton_check());
  r.checks.push_back(dimension_check());
  r.checks.push_back(search_check(run_search(options.s1_max, options.alpha_max, {}, options.workers)));
  r.checks.push_back(fault_injection_check(options.workers));
  r.checks.push_back(geometry_check());
  return r;
}

}  // namespace homgeo
