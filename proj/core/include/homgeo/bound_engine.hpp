#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/rational.hpp"

#include <string>

namespace homgeo {

/// theta, phi, psi for the alpha' = 0 branch, with D = alpha - s1(s1 - 1).
struct SpectralTriple {
  Integer theta;
  Integer phi;
  Integer psi;
  Integer discriminant_d;
};

// Raw closed forms. These accept any integers so the identities can be checked
// as polynomial identities on an arbitrary grid.
Integer phi_formula(const Integer& s1, const Integer& alpha);
Integer theta_formula(const Integer& s1, const Integer& alpha);
Integer psi_formula(const Integer& s1, const Integer& alpha);

/// phi = alpha^2 + s1^2(s1-1)^2 - 2 alpha s1 (s1+1); checked against D^2 - 4 alpha s1.
Integer phi_of(const Integer& s1, const Integer& alpha);
/// theta = s1 - s1^2 + 2 alpha s1 - alpha.
Integer theta_of(const Integer& s1, const Integer& alpha);
/// psi = -theta - s1(s1-1) D, the value for which
/// theta phi - 4 alpha s1 psi = D (theta D + 4 alpha s1^2 (s1 - 1)).
Integer psi_of(const Integer& s1, const Integer& alpha);

SpectralTriple spectral_triple(const Integer& s1, const Integer& alpha);

/// (phi^2 (theta phi - 4 alpha s1 psi)^2 - phi) / (4 alpha s1).
Rational threshold_alpha_prime0(const Integer& s1, const Integer& alpha);

/// ((4 beta s1 + (s1^2-beta)^2)^2 (s1^2-beta)^2 (s1^2+beta)^2 (s1^2-beta+2 s1 beta)^2) / (4 beta s1).
Rational threshold_alpha_prime1(const Integer& s1, const Integer& beta);

/// Smallest r >= 3 with growth_lower_bound(s1, s2, r) > threshold. Any flat
/// dimension r with s_r <= threshold is then below the returned value.
long long first_r_exceeding(const Integer& s1, const Integer& s2, const Rational& threshold);

enum class BoundName { AlphaPrime0, AlphaPrime1 };

const char* to_string(BoundName b);

struct ThresholdReport {
  Rational threshold;
  long long first_r_exceeding = 3;
  BoundName bound_name = BoundName::AlphaPrime0;
};

/// Threshold for alpha' = 0 parameters (s1 >= 3, alpha >= 2, s1 | alpha^2, alpha^2 >= s1).
ThresholdReport threshold_report_alpha_prime0(const Integer& s1, const Integer& alpha);
/// Threshold for alpha' = 1 parameters with beta = alpha - 1 (s1 >= 3, beta >= s1, s1 | beta).
ThresholdReport threshold_report_alpha_prime1(const Integer& s1, const Integer& beta);

/// Largest flat dimension whose size can stay below each threshold.
inline constexpr long long kMaxDimensionAlphaPrime0 = 19;
inline constexpr long long kMaxDimensionAlphaPrime1 = 16;

struct GridSummary {
  long long points = 0;
  long long max_first_r = 0;
  Integer worst_s1 = 0;
  Integer worst_param = 0;  // alpha (alpha' = 0) or beta (alpha' = 1)
  long long violations = 0;
  std::string first_violation;
};

/// Sweeps s1 in [3, s1_max], admissible alpha in [2, alpha_max]; checks
/// first_r_exceeding <= kMaxDimensionAlphaPrime0 + 1 along with the intermediate
/// inequalities phi^2 < (alpha + s1(s1-1))^4 and s2 - s1 >= alpha + s1(s1-1).
GridSummary threshold_grid_alpha_prime0(long long s1_max, long long alpha_max);

/// Sweeps s1 in [3, s1_max], beta in {s1, 2 s1, ...} up to beta_max; checks
/// first_r_exceeding <= kMaxDimensionAlphaPrime1 + 1 and s2 - s1 >= s1^2 + beta.
GridSummary threshold_grid_alpha_prime1(long long s1_max, long long beta_max);

/// Checks phi = D^2 - 4 alpha s1 and the theta/phi/psi product identity on a
/// grid of `side` x `side` points (s1, alpha). Both sides have degree at most
/// 6 in s1 and 3 in alpha, so side >= 9 makes this a polynomial identity check.
bool spectral_identities_hold(int side = 9);

}  // namespace homgeo
