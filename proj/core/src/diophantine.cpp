#include "homgeo/diophantine.hpp"

#include "homgeo/errors.hpp"

#include <algorithm>
#include <future>

namespace homgeo {

namespace {

Rational q(long long num, long long den) { return Rational(Integer(num), Integer(den)); }

std::vector<SquareObstruction> build_catalog() {
  std::vector<SquareObstruction> out;
  out.push_back({CaseLabel::C,
                 UniPoly{1, 0, 0, 0, -1, 0, 1},
                 UniPoly{0, q(-1, 2), 0, 1},
                 UniPoly{-1, 0, q(1, 4)},
                 3,
                 {0, 1, 2}});
  out.push_back({CaseLabel::E,
                 UniPoly{0, -2, -2, 0, 2, 2, 1},
                 UniPoly{q(-1, 2), q(1, 2), 1, 1},
                 UniPoly{q(1, 4), q(3, 2), q(5, 4)},
                 2,
                 {0, 1}});
  out.push_back({CaseLabel::F,
                 UniPoly{-2, -3, -1, 1, 3, 2, 1},
                 UniPoly{q(-1, 2), 1, 1, 1},
                 UniPoly{q(9, 4), 2, 1},
                 2,
                 {1}});
  SquareObstruction b_plus{CaseLabel::BPlus,
                           UniPoly{1, 0, 4, 8, -4, -28, -35, -12, 17, 26, 17, 6, 1},
                           UniPoly{q(-1, 2), q(-5, 2), q(-5, 2), 1, 4, 3, 1},
                           UniPoly{q(-3, 4), q(5, 2), q(19, 4), q(7, 2), q(5, 4)},
                           2,
                           {0, 1}};
  // B- is B+ with t replaced by -t.
  SquareObstruction b_minus{CaseLabel::BMinus, b_plus.f.reflect(), b_plus.g.reflect(),
                            b_plus.h.reflect(), 2, {0, 1}};
  out.push_back(std::move(b_plus));
  out.push_back(std::move(b_minus));
  return out;
}

}  // namespace

const std::vector<SquareObstruction>& catalog() {
  static const std::vector<SquareObstruction> kCatalog = build_catalog();
  return kCatalog;
}

const SquareObstruction& obstruction_for(CaseLabel c) {
  for (const auto& obs : catalog()) {
    if (obs.label == c) return obs;
  }
  throw ExternalProvenanceError(std::string("no square obstruction for case ") + to_string(c));
}

bool verify_identity(const SquareObstruction& obs) { return obs.f == obs.g.square() - obs.h; }

std::pair<UniPoly, UniPoly> factor_equation(const SquareObstruction& obs) {
  UniPoly a_poly = obs.g * Rational(2);
  UniPoly four_h = obs.h * Rational(4);
  if (!a_poly.integer_coefficients() || !four_h.integer_coefficients())
    throw InvariantViolation("factor_equation: 2g and 4h must have integer coefficients");
  if (a_poly.square() - obs.f * Rational(4) != four_h)
    throw InvariantViolation("factor_equation: A^2 - 4f != 4h");
  return {std::move(a_poly), std::move(four_h)};
}

const char* to_string(CertificateStatus s) {
  return s == CertificateStatus::ProvedImpossible ? "ProvedImpossible" : "Inconclusive";
}

const char* to_string(ActiveSide s) {
  switch (s) {
    case ActiveSide::Positive: return "4h > 0";
    case ActiveSide::Negative: return "4h < 0";
    case ActiveSide::Neither: return "undetermined";
  }
  return "?";
}

CertificateResult certify_gap(const UniPoly& a_poly, const UniPoly& four_h, const Integer& t_min) {
  CertificateResult res;
  const UniPoly one = UniPoly::constant(1);
  res.upper_gap = eventually_positive(a_poly * Rational(2) - one - four_h, t_min);
  res.lower_gap = eventually_positive(four_h + a_poly * Rational(2) + one, t_min);
  res.nonzero = eventually_positive(four_h, t_min);
  if (res.nonzero.result == PositivityResult::ProvedPositive) {
    res.side = ActiveSide::Positive;
  } else {
    res.nonzero = eventually_positive(-four_h, t_min);
    if (res.nonzero.result == PositivityResult::ProvedPositive) res.side = ActiveSide::Negative;
  }
  const bool ok = res.upper_gap.result == PositivityResult::ProvedPositive &&
                  res.lower_gap.result == PositivityResult::ProvedPositive &&
                  res.side != ActiveSide::Neither;
  res.status = ok ? CertificateStatus::ProvedImpossible : CertificateStatus::Inconclusive;
  const std::string from = "t >= " + to_string(t_min);
  if (ok) {
    res.explanation = "for " + from + ": -(2A+1) < 4h < 2A-1 and " + to_string(res.side) +
                      ", so A^2 - 4h lies strictly between consecutive squares";
  } else {
    res.explanation = std::string("shift test inconclusive for ") + from + " (upper gap " +
                      to_string(res.upper_gap.result) + ", lower gap " +
                      to_string(res.lower_gap.result) + ", sign " + to_string(res.side) + ")";
  }
  return res;
}

CertificateResult certify_no_square(const SquareObstruction& obs) {
  if (!verify_identity(obs)) throw InvariantViolation("certify_no_square: f != g^2 - h");
  const auto [a_poly, four_h] = factor_equation(obs);
  return certify_gap(a_poly, four_h, obs.t_min);
}

std::vector<Integer> sieve_range(const SquareObstruction& obs, long long lo, long long hi) {
  const auto coeffs = obs.f.integer_coefficients();
  if (!coeffs) throw InvariantViolation("sieve: f must have integer coefficients");
  std::vector<Integer> hits;
  Integer value;
  for (long long t = lo; t <= hi; ++t) {
    value = 0;
    for (auto it = coeffs->rbegin(); it != coeffs->rend(); ++it) {
      value *= t;
      value += *it;
    }
    if (is_perfect_square(value)) hits.emplace_back(t);
  }
  return hits;
}

std::vector<Integer> sieve(const SquareObstruction& obs, long long limit, unsigned workers) {
  if (limit < 0) throw DomainError("sieve: negative limit");
  workers = std::max(1u, workers);
  if (workers == 1) return sieve_range(obs, 0, limit);
  const long long span = (limit + 1 + workers - 1) / workers;
  std::vector<std::future<std::vector<Integer>>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    const long long lo = static_cast<long long>(w) * span;
    const long long hi = std::min(limit, lo + span - 1);
    if (lo > hi) break;
    parts.push_back(std::async(std::launch::async, [&obs, lo, hi] { return sieve_range(obs, lo, hi); }));
  }
  std::vector<Integer> hits;
  for (auto& part : parts) {
    auto chunk = part.get();
    hits.insert(hits.end(), chunk.begin(), chunk.end());
  }
  return hits;
}

}  // namespace homgeo
