#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/param_model.hpp"
#include "homgeo/verdict.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace homgeo {

/// Node of the condition automaton: exceptional condition 1, 2 or 3.
using CondNode = int;

struct ForbiddenEdge {
  CaseLabel label;  // B stands for both B+ and B-
  Provenance provenance;
  /// Edge C is only excluded for s1 >= 3.
  std::optional<Integer> min_s1;
};

/// Condition pairs (condition at Y, condition at the localization Z = cl(Y + z)).
/// Unlisted pairs are allowed.
class TransitionGraph {
 public:
  static TransitionGraph standard();

  const std::map<std::pair<CondNode, CondNode>, ForbiddenEdge>& forbidden_edges() const noexcept {
    return forbidden_;
  }
  std::optional<ForbiddenEdge> forbidden(CondNode from, CondNode to) const;
  std::vector<std::pair<CondNode, CondNode>> allowed_edges() const;

  /// Copy with the edge labelled `label` moved to the allowed set (B+/B- both
  /// address the single (1,2) edge).
  TransitionGraph with_edge_restored(CaseLabel label) const;

 private:
  std::map<std::pair<CondNode, CondNode>, ForbiddenEdge> forbidden_;
};

CondNode node_of(Condition c);

struct ChainLength {
  long long edges = 0;
  bool unbounded = false;  // an allowed cycle exists

  friend bool operator==(const ChainLength&, const ChainLength&) = default;
};

/// Longest directed path in the allowed-edge graph, by exhaustive search over
/// simple paths; unbounded if the allowed edges contain a cycle.
ChainLength longest_condition_chain(const TransitionGraph& graph);

struct DimensionThreshold {
  long long exceptional = 0;  // dimension from which only conditions (1)-(3) remain
  long long localization_depth = 0;
  long long required = 0;
};

/// Localizations at a point, a line and a plane.
inline constexpr long long kLocalizationDepth = 3;

/// max(bound0, bound1) + 1 and that plus the localization depth.
DimensionThreshold required_dimension(long long max_dim_alpha_prime0, long long max_dim_alpha_prime1);
/// Uses the bounds the threshold engine proves (19 and 16): yields 20 and 23.
DimensionThreshold required_dimension();

struct PipelineConfig {
  TransitionGraph graph = TransitionGraph::standard();
  /// Cases treated as allowed transitions (fault injection).
  std::set<CaseLabel> disabled;
};

/// Decides a parameter system: classical short-circuit, integrality and
/// alpha-floor constraints, condition classification with the threshold
/// bound, then every chain of conditions through the point, line and plane
/// localizations. Throws HypothesisError for s1 < 3 or dim below the
/// required dimension.
EliminationVerdict eliminate(const ParamSystem& ps, const PipelineConfig& config = {});

struct SearchSummary {
  long long s1_max = 0;
  long long alpha_max = 0;
  long long total = 0;
  long long classical = 0;
  long long eliminated_parameters = 0;
  long long eliminated_chain = 0;
  long long out_of_scope = 0;
  long long max_first_r = 0;
  std::vector<EliminationVerdict> survivors;  // capped at kMaxSurvivorsKept
  long long survivor_count = 0;
  /// Classical verdicts seen at (s1, 0) and (s1, 1) with alpha' = 0, indexed by s1.
  std::vector<char> classical_projective;
  std::vector<char> classical_affine;
  /// Case eliminations performed while walking condition chains.
  std::map<CaseLabel, long long> case_hits;
};

inline constexpr std::size_t kMaxSurvivorsKept = 16;

/// Every ParamSystem with 3 <= s1 <= s1_max, 0 <= alpha <= alpha_max,
/// alpha' in {0, 1} and dim = required_dimension(). Enumeration order is
/// s1, alpha, alpha'; work is split by s1 across `workers` threads and merged
/// in that order.
SearchSummary run_search(long long s1_max, long long alpha_max, const PipelineConfig& config = {},
                         unsigned workers = 1);

}  // namespace homgeo
