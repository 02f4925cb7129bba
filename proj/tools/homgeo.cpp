#include "homgeo/diophantine.hpp"
#include "homgeo/errors.hpp"
#include "homgeo/geometry.hpp"
#include "homgeo/localization.hpp"
#include "homgeo/pipeline.hpp"
#include "homgeo/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

namespace {

using nlohmann::json;
using namespace homgeo;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

Integer integer_arg(const std::string& s) { return parse_integer(s); }

struct Args {
  // verify-all
  long long sieve_limit = 1'000'000;
  long long s1_max = 100;
  long long alpha_max = 10'000;
  std::string json_path;
  unsigned workers = default_workers();
  // parameters
  std::string s1 = "3";
  std::string alpha = "0";
  int alpha_prime = 0;
  long long dim = 23;
  // sieve
  std::string case_name;
  long long limit = 1'000'000;
  bool raw = false;
  // geometry
  std::string type = "pg";
  int n = 3;
  std::uint32_t q = 2;
  bool localize = false;
};

int run_verify_all(const Args& a) {
  VerifyOptions opts;
  opts.sieve_limit = a.sieve_limit;
  opts.s1_max = a.s1_max;
  opts.alpha_max = a.alpha_max;
  opts.workers = a.workers;
  const Report report = verify_all(opts);
  const json j = to_json(report);
  if (!a.json_path.empty()) {
    std::ofstream out(a.json_path);
    if (!out) throw std::runtime_error("cannot write " + a.json_path);
    out << j.dump(2) << '\n';
  }
  for (const auto& c : report.checks) std::cout << to_string(c.status) << "  " << c.name << '\n';
  std::cout << "overall: " << to_string(report.overall()) << '\n';
  return report.exit_code();
}

ParamSystem params_of(const Args& a) {
  return ParamSystem{integer_arg(a.s1), integer_arg(a.alpha), a.alpha_prime, a.dim};
}

int run_check_params(const Args& a) {
  const ParamSystem ps = params_of(a);
  validate(ps);
  json j{{"params", to_json(ps)}, {"s2", to_json(s2_of(ps))},
         {"integrality", integrality_constraints(ps)}, {"alphaFloor", alpha_floor_check(ps)}};
  json conds = json::array();
  for (auto c : classify_condition(ps).members()) conds.push_back(to_string(c));
  j["conditions"] = conds;
  const EliminationVerdict v = eliminate(ps);
  j["result"] = to_json(v);
  print(j);
  return v.verdict == Verdict::SurvivesSquareTest ? kExitFail : kExitPass;
}

int run_localize(const Args& a) {
  ParamSystem ps = params_of(a);
  validate(ps);
  json j{{"params", to_json(ps)}, {"s1Hat", to_json(point_localize(ps))}};
  json under = json::object();
  for (auto c : {Condition::Cond1Plus, Condition::Cond1Minus, Condition::Cond2, Condition::Cond3}) {
    const auto lp = localize_under(ps, c);
    if (!lp) {
      under[to_string(c)] = nullptr;
      continue;
    }
    under[to_string(c)] = {{"s1Hat", to_json(lp->s1_hat)},
                           {"alphaHat", to_json(lp->alpha_hat)},
                           {"s2Hat", to_json(s2_hat(lp->s1_hat, lp->alpha_hat))}};
  }
  j["underCondition"] = under;
  print(j);
  return kExitPass;
}

int run_search_cmd(const Args& a) {
  const SearchSummary s = run_search(a.s1_max, a.alpha_max, {}, a.workers);
  const Check c = search_check(s);
  json j = to_json(c);
  print(j);
  return c.status == CheckStatus::Pass ? kExitPass : kExitFail;
}

int run_identities() {
  json j = json::object();
  bool ok = true;
  for (const auto& obs : catalog()) {
    const auto [a_poly, four_h] = factor_equation(obs);
    const bool id = verify_identity(obs);
    ok = ok && id;
    j[cli_name(obs.label)] = {{"f", obs.f.str("t")}, {"g", obs.g.str("t")}, {"h", obs.h.str("t")},
                              {"identity", id}, {"A", a_poly.str("t")}, {"fourH", four_h.str("t")}};
  }
  print(j);
  return ok ? kExitPass : kExitFail;
}

int run_sieve(const Args& a) {
  const auto label = parse_case(a.case_name);
  if (!label || *label == CaseLabel::A || *label == CaseLabel::D)
    throw DomainError("sieve: case must be one of c, e, f, b+, b-");
  const SquareObstruction& obs = obstruction_for(*label);
  const auto hits = sieve(obs, a.limit, a.workers);
  bool beyond = false;
  for (const auto& t : hits) beyond = beyond || t >= obs.t_min;
  if (a.raw) {
    for (const auto& t : hits) std::cout << to_string(t) << '\n';
  } else {
    json arr = json::array();
    for (const auto& t : hits) arr.push_back(to_json(t));
    print({{"case", cli_name(*label)}, {"limit", a.limit}, {"tMin", to_json(obs.t_min)}, {"squareArgs", arr}});
  }
  return beyond ? kExitFail : kExitPass;
}

int run_geometry(const Args& a) {
  Geometry g = a.type == "pg" ? build_projective(a.n, a.q) : build_affine(a.n, a.q);
  const FlatProfile profile = flat_profile(g);
  json j{{"geometry", g.name()}, {"points", g.point_count()}, {"profile", to_json(profile)},
         {"alpha", to_json(alpha_of(profile))}};
  if (a.localize) j["localized"] = to_json(localize_at_point(g, 0));
  print(j);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter checks for locally finite homogeneous geometries"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Args a;

  auto* verify = app.add_subcommand("verify-all", "Run every check and print a report");
  verify->add_option("--sieve-limit", a.sieve_limit)->check(CLI::NonNegativeNumber);
  verify->add_option("--s1-max", a.s1_max)->check(CLI::Range(3LL, 1'000'000LL));
  verify->add_option("--alpha-max", a.alpha_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--json", a.json_path, "Write the JSON report here");
  verify->add_option("--workers", a.workers)->check(CLI::Range(1u, 256u));

  auto add_params = [&a](CLI::App* cmd, bool with_dim) {
    cmd->add_option("--s1", a.s1)->required();
    cmd->add_option("--alpha", a.alpha)->required();
    cmd->add_option("--alpha-prime", a.alpha_prime);
    if (with_dim) cmd->add_option("--dim", a.dim);
  };
  auto* check = app.add_subcommand("check-params", "Classify and decide one parameter system");
  add_params(check, true);
  auto* loc = app.add_subcommand("localize", "Parameters of the point localization");
  add_params(loc, false);

  auto* search = app.add_subcommand("search", "Exhaustive parameter search");
  search->add_option("--s1-max", a.s1_max)->required()->check(CLI::Range(3LL, 1'000'000LL));
  search->add_option("--alpha-max", a.alpha_max)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--workers", a.workers)->check(CLI::Range(1u, 256u));

  auto* ids = app.add_subcommand("identities", "Print the polynomial decompositions");

  auto* sv = app.add_subcommand("sieve", "List arguments where a case polynomial is a square");
  sv->add_option("--case", a.case_name)->required()->check(CLI::IsMember({"c", "e", "f", "b+", "b-"}));
  sv->add_option("--limit", a.limit)->check(CLI::NonNegativeNumber);
  sv->add_flag("--raw", a.raw, "One decimal integer per line");
  sv->add_option("--workers", a.workers)->check(CLI::Range(1u, 256u));

  auto* geo = app.add_subcommand("geometry", "Flat profile of PG(n,q) or AG(n,q)");
  geo->add_option("--type", a.type)->check(CLI::IsMember({"pg", "ag"}));
  geo->add_option("--n", a.n)->required();
  geo->add_option("--q", a.q)->required();
  geo->add_flag("--localize", a.localize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    if (*verify) return run_verify_all(a);
    if (*check) return run_check_params(a);
    if (*loc) return run_localize(a);
    if (*search) return run_search_cmd(a);
    if (*ids) return run_identities();
    if (*sv) return run_sieve(a);
    if (*geo) return run_geometry(a);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
