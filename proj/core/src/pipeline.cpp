#include "homgeo/pipeline.hpp"

#include "homgeo/bound_engine.hpp"
#include "homgeo/errors.hpp"
#include "homgeo/localization.hpp"

#include <algorithm>
#include <functional>
#include <future>

namespace homgeo {

TransitionGraph TransitionGraph::standard() {
  TransitionGraph g;
  g.forbidden_[{1, 1}] = {CaseLabel::A, Provenance::External, std::nullopt};
  g.forbidden_[{1, 2}] = {CaseLabel::BPlus, Provenance::Verified, std::nullopt};
  g.forbidden_[{2, 2}] = {CaseLabel::C, Provenance::Verified, Integer(3)};
  g.forbidden_[{3, 1}] = {CaseLabel::D, Provenance::External, std::nullopt};
  g.forbidden_[{3, 2}] = {CaseLabel::E, Provenance::Verified, std::nullopt};
  g.forbidden_[{3, 3}] = {CaseLabel::F, Provenance::Verified, std::nullopt};
  return g;
}

std::optional<ForbiddenEdge> TransitionGraph::forbidden(CondNode from, CondNode to) const {
  auto it = forbidden_.find({from, to});
  if (it == forbidden_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<CondNode, CondNode>> TransitionGraph::allowed_edges() const {
  std::vector<std::pair<CondNode, CondNode>> out;
  for (CondNode a = 1; a <= 3; ++a) {
    for (CondNode b = 1; b <= 3; ++b) {
      if (!forbidden_.contains({a, b})) out.emplace_back(a, b);
    }
  }
  return out;
}

TransitionGraph TransitionGraph::with_edge_restored(CaseLabel label) const {
  if (label == CaseLabel::BMinus) label = CaseLabel::BPlus;
  TransitionGraph g = *this;
  std::erase_if(g.forbidden_, [label](const auto& kv) { return kv.second.label == label; });
  return g;
}

CondNode node_of(Condition c) {
  switch (c) {
    case Condition::Cond1Plus:
    case Condition::Cond1Minus: return 1;
    case Condition::Cond2: return 2;
    case Condition::Cond3: return 3;
    default: throw DomainError(std::string("node_of: ") + to_string(c) + " is not an exceptional condition");
  }
}

ChainLength longest_condition_chain(const TransitionGraph& graph) {
  const auto edges = graph.allowed_edges();
  ChainLength best;
  // Depth-first over simple paths; revisiting a node on the current path is a cycle.
  std::function<void(CondNode, std::vector<CondNode>&)> walk = [&](CondNode at, std::vector<CondNode>& path) {
    best.edges = std::max(best.edges, static_cast<long long>(path.size()) - 1);
    for (const auto& [from, to] : edges) {
      if (from != at) continue;
      if (std::find(path.begin(), path.end(), to) != path.end()) {
        best.unbounded = true;
        continue;
      }
      path.push_back(to);
      walk(to, path);
      path.pop_back();
    }
  };
  for (CondNode start = 1; start <= 3; ++start) {
    std::vector<CondNode> path{start};
    walk(start, path);
  }
  return best;
}

DimensionThreshold required_dimension(long long max_dim_alpha_prime0, long long max_dim_alpha_prime1) {
  DimensionThreshold d;
  d.exceptional = std::max(max_dim_alpha_prime0, max_dim_alpha_prime1) + 1;
  d.localization_depth = kLocalizationDepth;
  d.required = d.exceptional + d.localization_depth;
  return d;
}

DimensionThreshold required_dimension() {
  DimensionThreshold d = required_dimension(kMaxDimensionAlphaPrime0, kMaxDimensionAlphaPrime1);
  if (d.exceptional != 20 || d.required != 23)
    throw InvariantViolation("required_dimension: expected 20 and 23");
  return d;
}

namespace {

constexpr Condition kChainConditions[] = {Condition::Cond1Plus, Condition::Cond1Minus, Condition::Cond2,
                                          Condition::Cond3};

const char* level_name(int level) {
  static const char* kNames[] = {"X", "X_p", "X_l", "X_P"};
  return kNames[level];
}

struct ChainWalk {
  const PipelineConfig& config;
  EliminationVerdict& verdict;
  std::map<CaseLabel, long long>* case_hits;

  void add(std::string rule, std::string detail, Provenance prov = Provenance::Verified) {
    verdict.trace.push_back({std::move(rule), std::move(detail), prov});
  }

  void survivor(const std::string& what) {
    if (!verdict.witness) verdict.witness = what;
    verdict.verdict = Verdict::SurvivesSquareTest;
  }

  void walk(int level, const ParamSystem& ps, Condition cond, const std::string& path) {
    for (Condition next : kChainConditions) {
      const std::string step = path + " -> " + level_name(level + 1) + "[" + to_string(next) + "]";
      const auto edge = config.graph.forbidden(node_of(cond), node_of(next));
      if (edge) {
        CaseLabel label = edge->label;
        if (label == CaseLabel::BPlus && cond == Condition::Cond1Minus) label = CaseLabel::BMinus;
        if (!config.disabled.contains(label) && !(edge->min_s1 && ps.s1 < *edge->min_s1)) {
          if (case_hits) ++(*case_hits)[label];
          if (edge->provenance == Provenance::External) {
            add("case_" + std::string(cli_name(label)), step + ": excluded (imported)", Provenance::External);
            continue;
          }
          const Integer arg = label == CaseLabel::BPlus || label == CaseLabel::BMinus ? isqrt_floor(ps.s1) : ps.s1;
          EliminationVerdict inst = eliminate_case_instance(label, arg);
          if (inst.verdict == Verdict::Eliminated) {
            add(inst.trace.back().rule, step + ": " + inst.trace.back().detail);
          } else {
            add("case_" + std::string(cli_name(label)), step + ": square test passes");
            survivor(step + " (" + *inst.witness + ")");
          }
          continue;
        }
      }
      auto local = localize_under(ps, next);
      if (!local) {
        add("condition_inapplicable",
            step + ": s1_hat = " + to_string(point_localize(ps)) + " is not a square");
        continue;
      }
      const ParamSystem child{local->s1_hat, local->alpha_hat, next == Condition::Cond3 ? 1 : 0, ps.dim - 1};
      if (level + 1 == static_cast<int>(kLocalizationDepth)) {
        add("chain_complete", step + ": s1 = " + to_string(child.s1) + ", every transition allowed");
        survivor(step);
        continue;
      }
      walk(level + 1, child, next, step);
    }
  }
};

EliminationVerdict eliminate_impl(const ParamSystem& ps, const PipelineConfig& config,
                                  std::map<CaseLabel, long long>* case_hits, long long* first_r_out) {
  EliminationVerdict v;
  v.subject = ps;
  try {
    validate(ps);
  } catch (const ModelScopeError& e) {
    v.verdict = Verdict::OutOfModeledScope;
    v.trace.push_back({"model_scope", e.what()});
    return v;
  }
  if (ps.s1 < 3) throw HypothesisError("eliminate: need at least 3 points on a line, got s1 = " + to_string(ps.s1));
  const long long required = required_dimension().required;
  if (ps.dim < required)
    throw HypothesisError("eliminate: dimension " + std::to_string(ps.dim) + " is below " + std::to_string(required));

  auto eliminated = [&](std::string rule, std::string detail, Provenance prov = Provenance::Verified) {
    v.verdict = Verdict::Eliminated;
    v.reason = EliminationReason::ParameterConstraints;
    v.trace.push_back({std::move(rule), std::move(detail), prov});
    return v;
  };

  // (i) classical short-circuit
  const ConditionSet conds = classify_condition(ps);
  if (conds.contains(Condition::ClassicalCompatible)) {
    v.verdict = Verdict::Classical;
    v.trace.push_back({"classical", ps.alpha == 0 ? "alpha = 0: projective-like" : "alpha = 1, alpha' = 0: affine-like"});
    return v;
  }

  // (ii) integrality and alpha floor
  if (!integrality_constraints(ps)) {
    return eliminated("integrality", ps.alpha_prime == 0
                                         ? "s1 = " + to_string(ps.s1) + " does not divide (s1-1) alpha^2"
                                         : "s1 = " + to_string(ps.s1) + " does not divide beta = " + to_string(ps.alpha - 1));
  }
  v.trace.push_back({"integrality", "holds"});
  if (ps.alpha_prime == 0) {
    if (!alpha_floor_check(ps))
      return eliminated("alpha_floor", "alpha^2 = " + to_string(ps.alpha * ps.alpha) + " < s1");
    v.trace.push_back({"alpha_floor", "holds"});
  }

  // (iii) exceptional conditions
  if (conds.contains(Condition::NoneApplies)) {
    v.trace.push_back({"conditions", "no exceptional condition applies"});
    if (ps.alpha_prime == 1 && ps.alpha == 1) {
      return eliminated("exceptional_conditions",
                        "alpha' = 1, alpha = 1 lies outside the threshold bounds; non-classical systems "
                        "outside conditions (1)-(3) are excluded by the imported classification",
                        Provenance::External);
    }
    const ThresholdReport rep = ps.alpha_prime == 0 ? threshold_report_alpha_prime0(ps.s1, ps.alpha)
                                                    : threshold_report_alpha_prime1(ps.s1, ps.alpha - 1);
    if (first_r_out) *first_r_out = rep.first_r_exceeding;
    const long long exceptional = required_dimension().exceptional;
    const std::string bound = std::string(to_string(rep.bound_name)) + " threshold " + rep.threshold.str() +
                              " is exceeded by s_r for r >= " + std::to_string(rep.first_r_exceeding);
    if (rep.first_r_exceeding > exceptional) {
      v.verdict = Verdict::SurvivesSquareTest;
      v.trace.push_back({"threshold", bound + ", beyond dimension " + std::to_string(exceptional)});
      v.witness = describe(ps) + ": threshold not exceeded below dimension " + std::to_string(exceptional);
      return v;
    }
    v.trace.push_back({"threshold", bound});
    return eliminated("exceptional_conditions",
                      "flats of dimension >= " + std::to_string(exceptional) +
                          " must stay below the threshold unless an exceptional condition holds",
                      Provenance::External);
  }

  // (iv) condition chains through X, X_p, X_l, X_P
  v.verdict = Verdict::Eliminated;
  v.reason = EliminationReason::ConditionChain;
  ChainWalk walker{config, v, case_hits};
  for (Condition c : conds.members()) {
    const std::string root = std::string(level_name(0)) + "[" + to_string(c) + "]";
    v.trace.push_back({"conditions", root + " holds"});
    walker.walk(0, ps, c, root);
  }
  if (v.verdict != Verdict::Eliminated) v.reason = EliminationReason::None;
  return v;
}

void search_s1(long long s1, long long alpha_max, const PipelineConfig& config, long long dim, SearchSummary& out) {
  for (long long a = 0; a <= alpha_max; ++a) {
    for (int ap = 0; ap <= 1; ++ap) {
      const ParamSystem ps{s1, a, ap, dim};
      long long first_r = 0;
      EliminationVerdict v = eliminate_impl(ps, config, &out.case_hits, &first_r);
      ++out.total;
      out.max_first_r = std::max(out.max_first_r, first_r);
      switch (v.verdict) {
        case Verdict::Classical:
          ++out.classical;
          if (ap == 0 && a == 0) out.classical_projective[static_cast<std::size_t>(s1)] = 1;
          if (ap == 0 && a == 1) out.classical_affine[static_cast<std::size_t>(s1)] = 1;
          break;
        case Verdict::Eliminated:
          if (v.reason == EliminationReason::ConditionChain)
            ++out.eliminated_chain;
          else
            ++out.eliminated_parameters;
          break;
        case Verdict::OutOfModeledScope:
          ++out.out_of_scope;
          break;
        case Verdict::SurvivesSquareTest:
          ++out.survivor_count;
          if (out.survivors.size() < kMaxSurvivorsKept) out.survivors.push_back(std::move(v));
          break;
      }
    }
  }
}

void merge(SearchSummary& into, SearchSummary&& part) {
  into.total += part.total;
  into.classical += part.classical;
  into.eliminated_parameters += part.eliminated_parameters;
  into.eliminated_chain += part.eliminated_chain;
  into.out_of_scope += part.out_of_scope;
  into.max_first_r = std::max(into.max_first_r, part.max_first_r);
  into.survivor_count += part.survivor_count;
  for (auto& s : part.survivors) {
    if (into.survivors.size() < kMaxSurvivorsKept) into.survivors.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < into.classical_projective.size(); ++i) {
    into.classical_projective[i] |= part.classical_projective[i];
    into.classical_affine[i] |= part.classical_affine[i];
  }
  for (const auto& [label, n] : part.case_hits) into.case_hits[label] += n;
}

}  // namespace

EliminationVerdict eliminate(const ParamSystem& ps, const PipelineConfig& config) {
  return eliminate_impl(ps, config, nullptr, nullptr);
}

SearchSummary run_search(long long s1_max, long long alpha_max, const PipelineConfig& config, unsigned workers) {
  if (s1_max < 3) throw HypothesisError("search: s1_max must be at least 3 (at least 3 points on a line)");
  if (alpha_max < 0) throw DomainError("search: alpha_max must be nonnegative");
  const long long dim = required_dimension().required;
  auto fresh = [&] {
    SearchSummary s;
    s.s1_max = s1_max;
    s.alpha_max = alpha_max;
    s.classical_projective.assign(static_cast<std::size_t>(s1_max) + 1, 0);
    s.classical_affine.assign(static_cast<std::size_t>(s1_max) + 1, 0);
    return s;
  };
  SearchSummary total = fresh();
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (long long s1 = 3; s1 <= s1_max; ++s1) search_s1(s1, alpha_max, config, dim, total);
    return total;
  }
  // Interleaved s1 ranges; parts are merged in worker order, and the counts
  // do not depend on it.
  std::vector<std::future<SearchSummary>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      SearchSummary part = fresh();
      for (long long s1 = 3 + w; s1 <= s1_max; s1 += workers) search_s1(s1, alpha_max, config, dim, part);
      return part;
    }));
  }
  for (auto& p : parts) merge(total, p.get());
  std::sort(total.survivors.begin(), total.survivors.end(), [](const auto& a, const auto& b) {
    const auto& pa = std::get<ParamSystem>(a.subject);
    const auto& pb = std::get<ParamSystem>(b.subject);
    return std::tie(pa.s1, pa.alpha, pa.alpha_prime) < std::tie(pb.s1, pb.alpha, pb.alpha_prime);
  });
  return total;
}

}  // namespace homgeo
