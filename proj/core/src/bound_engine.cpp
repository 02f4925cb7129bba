#include "homgeo/bound_engine.hpp"

#include "homgeo/errors.hpp"
#include "homgeo/param_model.hpp"

namespace homgeo {

namespace {

void require_alpha_branch(const Integer& s1, const Integer& alpha, const char* op) {
  if (s1 < 3 || alpha < 1)
    throw DomainError(std::string(op) + ": need s1 >= 3 and alpha >= 1");
}

Integer d_of(const Integer& s1, const Integer& alpha) { return alpha - s1 * (s1 - 1); }

}  // namespace

Integer phi_formula(const Integer& s1, const Integer& alpha) {
  return alpha * alpha + s1 * s1 * (s1 - 1) * (s1 - 1) - 2 * alpha * s1 * (s1 + 1);
}

Integer theta_formula(const Integer& s1, const Integer& alpha) {
  return s1 - s1 * s1 + 2 * alpha * s1 - alpha;
}

Integer psi_formula(const Integer& s1, const Integer& alpha) {
  return -theta_formula(s1, alpha) - s1 * (s1 - 1) * d_of(s1, alpha);
}

Integer phi_of(const Integer& s1, const Integer& alpha) {
  require_alpha_branch(s1, alpha, "phi_of");
  Integer phi = phi_formula(s1, alpha);
  const Integer d = d_of(s1, alpha);
  if (phi != d * d - 4 * alpha * s1) throw InvariantViolation("phi_of: completed-square form disagrees");
  return phi;
}

Integer theta_of(const Integer& s1, const Integer& alpha) {
  require_alpha_branch(s1, alpha, "theta_of");
  return theta_formula(s1, alpha);
}

Integer psi_of(const Integer& s1, const Integer& alpha) {
  require_alpha_branch(s1, alpha, "psi_of");
  return psi_formula(s1, alpha);
}

SpectralTriple spectral_triple(const Integer& s1, const Integer& alpha) {
  SpectralTriple t{theta_of(s1, alpha), phi_of(s1, alpha), psi_of(s1, alpha), d_of(s1, alpha)};
  const Integer lhs = t.theta * t.phi - 4 * alpha * s1 * t.psi;
  const Integer rhs = t.discriminant_d * (t.theta * t.discriminant_d + 4 * alpha * s1 * s1 * (s1 - 1));
  if (lhs != rhs) throw InvariantViolation("spectral_triple: product identity failed");
  return t;
}

Rational threshold_alpha_prime0(const Integer& s1, const Integer& alpha) {
  if (alpha == 0) throw DomainError("threshold_alpha_prime0: alpha = 0 makes the denominator vanish");
  if (s1 < 3 || alpha < 2) throw DomainError("threshold_alpha_prime0: need s1 >= 3 and alpha >= 2");
  if (!integrality_constraints(ParamSystem{s1, alpha, 0, 3}))
    throw DomainError("threshold_alpha_prime0: s1 must divide alpha^2");
  const SpectralTriple t = spectral_triple(s1, alpha);
  const Integer product = t.theta * t.phi - 4 * alpha * s1 * t.psi;
  return Rational(t.phi * t.phi * product * product - t.phi, 4 * alpha * s1);
}

Rational threshold_alpha_prime1(const Integer& s1, const Integer& beta) {
  if (beta == 0) throw DomainError("threshold_alpha_prime1: beta = 0 makes the denominator vanish");
  if (s1 < 3 || beta < s1 || beta % s1 != 0)
    throw DomainError("threshold_alpha_prime1: need s1 >= 3, beta >= s1 and s1 | beta");
  const Integer sq = s1 * s1;
  const Integer f1 = 4 * beta * s1 + (sq - beta) * (sq - beta);
  const Integer f2 = sq - beta;
  const Integer f3 = sq + beta;
  const Integer f4 = sq - beta + 2 * s1 * beta;
  const Integer num = f1 * f1 * f2 * f2 * f3 * f3 * f4 * f4;
  return Rational(num, 4 * beta * s1);
}

long long first_r_exceeding(const Integer& s1, const Integer& s2, const Rational& threshold) {
  if (s1 < 3 || s2 <= s1) throw DomainError("first_r_exceeding: need s2 > s1 >= 3");
  const Integer growth = s2 - s1;
  const Integer base = s1 - 1;
  if (growth <= base) throw DomainError("first_r_exceeding: bound does not grow with r");
  // bound(r) = growth^(r-1) / base^(r-2); compare growth^(r-1) * den > num * base^(r-2)
  Integer top = growth * growth;
  Integer bottom = base;
  constexpr long long kMaxR = 1'000'000;
  for (long long r = 3; r < kMaxR; ++r) {
    if (top * threshold.den() > threshold.num() * bottom) return r;
    top *= growth;
    bottom *= base;
  }
  throw DomainError("first_r_exceeding: no r below the search cap");
}

const char* to_string(BoundName b) { return b == BoundName::AlphaPrime0 ? "AlphaPrime0" : "AlphaPrime1"; }

ThresholdReport threshold_report_alpha_prime0(const Integer& s1, const Integer& alpha) {
  ThresholdReport rep{threshold_alpha_prime0(s1, alpha), 3, BoundName::AlphaPrime0};
  rep.first_r_exceeding = first_r_exceeding(s1, s2_of(s1, alpha), rep.threshold);
  return rep;
}

ThresholdReport threshold_report_alpha_prime1(const Integer& s1, const Integer& beta) {
  ThresholdReport rep{threshold_alpha_prime1(s1, beta), 3, BoundName::AlphaPrime1};
  rep.first_r_exceeding = first_r_exceeding(s1, s2_of(s1, beta + 1), rep.threshold);
  return rep;
}

namespace {

void note(GridSummary& g, long long r, const Integer& s1, const Integer& param) {
  ++g.points;
  if (r > g.max_first_r) {
    g.max_first_r = r;
    g.worst_s1 = s1;
    g.worst_param = param;
  }
}

void violation(GridSummary& g, const std::string& what) {
  if (g.violations++ == 0) g.first_violation = what;
}

}  // namespace

GridSummary threshold_grid_alpha_prime0(long long s1_max, long long alpha_max) {
  GridSummary g;
  for (long long s = 3; s <= s1_max; ++s) {
    const Integer s1 = s;
    const Integer q = s1 * (s1 - 1);
    for (long long a = 2; a <= alpha_max; ++a) {
      const Integer alpha = a;
      if ((alpha * alpha) % s1 != 0 || alpha * alpha < s1) continue;
      const ThresholdReport rep = threshold_report_alpha_prime0(s1, alpha);
      note(g, rep.first_r_exceeding, s1, alpha);
      const std::string at = "(s1=" + std::to_string(s) + ", alpha=" + std::to_string(a) + ")";
      if (rep.first_r_exceeding > kMaxDimensionAlphaPrime0 + 1) violation(g, "first_r_exceeding " + at);
      const Integer phi = phi_of(s1, alpha);
      if (phi * phi >= ipow(alpha + q, 4)) violation(g, "phi^2 bound " + at);
      if (s2_of(s1, alpha) - s1 < alpha + q) violation(g, "s2 - s1 bound " + at);
    }
  }
  return g;
}

GridSummary threshold_grid_alpha_prime1(long long s1_max, long long beta_max) {
  GridSummary g;
  for (long long s = 3; s <= s1_max; ++s) {
    const Integer s1 = s;
    for (long long b = s; b <= beta_max; b += s) {
      const Integer beta = b;
      const ThresholdReport rep = threshold_report_alpha_prime1(s1, beta);
      note(g, rep.first_r_exceeding, s1, beta);
      const std::string at = "(s1=" + std::to_string(s) + ", beta=" + std::to_string(b) + ")";
      if (rep.first_r_exceeding > kMaxDimensionAlphaPrime1 + 1) violation(g, "first_r_exceeding " + at);
      if (s2_of(s1, beta + 1) - s1 < s1 * s1 + beta) violation(g, "s2 - s1 bound " + at);
    }
  }
  return g;
}

bool spectral_identities_hold(int side) {
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const Integer s1 = 3 + i;
      const Integer alpha = 1 + j;
      const Integer d = d_of(s1, alpha);
      const Integer phi = phi_formula(s1, alpha);
      const Integer theta = theta_formula(s1, alpha);
      const Integer psi = psi_formula(s1, alpha);
      if (phi != d * d - 4 * alpha * s1) return false;
      if (theta * phi - 4 * alpha * s1 * psi != d * (theta * d + 4 * alpha * s1 * s1 * (s1 - 1)))
        return false;
    }
  }
  return true;
}

}  // namespace homgeo
