#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/positivity.hpp"
#include "homgeo/uni_poly.hpp"
#include "homgeo/verdict.hpp"

#include <string>
#include <utility>
#include <vector>

namespace homgeo {

/// f = g^2 - h together with the argument from which f(t) is claimed never to
/// be a square. 2g and 4h have integer coefficients.
struct SquareObstruction {
  CaseLabel label;
  UniPoly f;
  UniPoly g;
  UniPoly h;
  Integer t_min;
  /// Every t in [0, sieve limit] with f(t) a square; all below t_min.
  std::vector<Integer> known_square_args;
};

/// The five computed obstructions, in the order C, E, F, B+, B-.
const std::vector<SquareObstruction>& catalog();
const SquareObstruction& obstruction_for(CaseLabel c);

/// f == g^2 - h coefficient-wise.
bool verify_identity(const SquareObstruction& obs);

/// (A, 4h) with A = 2g: if a^2 = f(t) then (A(t) - 2a)(A(t) + 2a) = 4h(t).
/// Throws InvariantViolation if A^2 - 4f != 4h or A, 4h are not integral.
std::pair<UniPoly, UniPoly> factor_equation(const SquareObstruction& obs);

enum class CertificateStatus { ProvedImpossible, Inconclusive };
const char* to_string(CertificateStatus s);

/// Which sign of 4h was certified for t >= t_min.
enum class ActiveSide { Positive, Negative, Neither };
const char* to_string(ActiveSide s);

struct CertificateResult {
  CertificateStatus status = CertificateStatus::Inconclusive;
  ActiveSide side = ActiveSide::Neither;
  /// (2A - 1) - 4h > 0 for t >= t_min.
  PositivityCertificate upper_gap;
  /// 4h + (2A + 1) > 0 for t >= t_min.
  PositivityCertificate lower_gap;
  /// 4h (or -4h) > 0 for t >= t_min.
  PositivityCertificate nonzero;
  std::string explanation;
};

/// Certifies that A(t)^2 - 4h(t) is never a square for integers t >= t_min,
/// hence f(t) is never a square there. From m^2 = A^2 - 4h: 4h > 0 forces
/// 4h >= 2A - 1, and 4h < 0 forces -4h >= 2A + 1; both are excluded when
/// -(2A + 1) < 4h < 2A - 1 and 4h != 0.
CertificateResult certify_no_square(const SquareObstruction& obs);

/// Same certificate for a raw factor pair, starting at t_min.
CertificateResult certify_gap(const UniPoly& a_poly, const UniPoly& four_h, const Integer& t_min);

/// {t in [lo, hi] : f(t) >= 0 and f(t) is a square}, ascending.
std::vector<Integer> sieve_range(const SquareObstruction& obs, long long lo, long long hi);

/// sieve_range over [0, limit], split across `workers` threads.
std::vector<Integer> sieve(const SquareObstruction& obs, long long limit, unsigned workers = 1);

}  // namespace homgeo
