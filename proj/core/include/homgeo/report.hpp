#pragma once

#include "homgeo/bound_engine.hpp"
#include "homgeo/geometry.hpp"
#include "homgeo/param_model.hpp"
#include "homgeo/pipeline.hpp"
#include "homgeo/verdict.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homgeo {

inline constexpr const char* kVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Gap };
const char* to_string(CheckStatus s);

struct Check {
  explicit Check(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  CheckStatus status = CheckStatus::Pass;
  nlohmann::json details = nlohmann::json::object();
  std::optional<nlohmann::json> witness;
};

struct Report {
  std::string version = kVersion;
  std::string timestamp;
  std::vector<Check> checks;

  /// fail if any check fails, else gap if any check is a gap, else pass.
  CheckStatus overall() const;
  /// 0 pass, 1 fail, 2 gap.
  int exit_code() const;
};

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

// Integers are serialized as decimal strings.
nlohmann::json to_json(const Integer& n);
nlohmann::json to_json(const ParamSystem& ps);
ParamSystem param_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EliminationVerdict& v);
nlohmann::json to_json(const ThresholdReport& r);
nlohmann::json to_json(const FlatProfile& p);
nlohmann::json to_json(const SearchSummary& s);
nlohmann::json to_json(const Check& c);
nlohmann::json to_json(const Report& r);

/// Search result as a report check: pass iff there are no survivors and every
/// projective (s1 = q + 1, alpha = 0) and affine (s1 = q, alpha = 1) shape for
/// primes q in range was classified Classical.
Check search_check(const SearchSummary& s);

struct VerifyOptions {
  long long sieve_limit = 1'000'000;
  long long s1_max = 100;
  long long alpha_max = 10'000;
  long long grid_s1_max = 50;
  long long grid_param_max = 2'500;
  unsigned workers = 1;
};

/// Runs every check: identities, certificates, sieve, cross-module values,
/// spectral identities, threshold grids, automaton, dimension threshold,
/// search with fault injection, and classical geometry ground truth.
Report verify_all(const VerifyOptions& options);

}  // namespace homgeo
