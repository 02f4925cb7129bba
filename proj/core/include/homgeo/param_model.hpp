#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homgeo {

/// Numerical invariants of a putative locally finite homogeneous geometry.
/// alpha and alpha_prime are taken as primitive inputs; only the arithmetic
/// relations between them and the flat sizes are modeled.
struct ParamSystem {
  Integer s1;           // points on a line
  Integer alpha;        // >= 0
  int alpha_prime = 0;  // modeled values: 0 or 1
  long long dim = 3;

  friend bool operator==(const ParamSystem&, const ParamSystem&) = default;
};

/// Throws DomainError for s1 < 2 or alpha < 0, ModelScopeError for
/// alpha_prime outside {0, 1}.
void validate(const ParamSystem& ps);

std::string describe(const ParamSystem& ps);

enum class Condition : std::uint8_t {
  Cond1Plus,   // alpha' = 0, s1 = t^2, alpha = s1 (t + 1)^2
  Cond1Minus,  // alpha' = 0, s1 = t^2, alpha = s1 (t - 1)^2
  Cond2,       // alpha' = 0, alpha = s1 (s1 - 1)
  Cond3,       // alpha' = 1, alpha = s1^2 + 1
  ClassicalCompatible,
  NoneApplies,
};

const char* to_string(Condition c);

/// Small set of Condition tags.
class ConditionSet {
 public:
  void insert(Condition c) { bits_ |= mask(c); }
  bool contains(Condition c) const { return (bits_ & mask(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<Condition> members() const;

  friend bool operator==(ConditionSet, ConditionSet) = default;

 private:
  static std::uint8_t mask(Condition c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
  std::uint8_t bits_ = 0;
};

/// Point counts s_0 < s_1 < ... of the flats of each dimension. May be a
/// prefix (truncated geometry).
class FlatProfile {
 public:
  FlatProfile() = default;
  /// Throws DomainError unless sizes[0] == 1 and the sequence strictly increases.
  explicit FlatProfile(std::vector<Integer> sizes);

  std::size_t top_dimension() const { return sizes_.size() - 1; }
  const Integer& operator[](std::size_t dim) const { return sizes_.at(dim); }
  const std::vector<Integer>& sizes() const noexcept { return sizes_; }
  std::string str() const;

  friend bool operator==(const FlatProfile&, const FlatProfile&) = default;

 private:
  std::vector<Integer> sizes_;
};

/// Drops flats above max_dim.
FlatProfile truncate(const FlatProfile& profile, std::size_t max_dim);

/// Points in a plane: s1 + (s1 - 1) alpha + (s1 - 1)^2.
Integer s2_of(const Integer& s1, const Integer& alpha);
inline Integer s2_of(const ParamSystem& ps) { return s2_of(ps.s1, ps.alpha); }

/// Lower bound (s2 - s1)^(r-1) / (s1 - 1)^(r-2) on s_r, for r >= 3.
Rational growth_lower_bound(const Integer& s1, const Integer& s2, long long r);

/// s_r - s_{r-1} >= (s_{r-1} - s_{r-2})^2 / (s_{r-2} - s_{r-3}), checked exactly.
bool growth_step_check(const FlatProfile& profile, std::size_t r);

/// alpha' = 0: s1 | (s1 - 1) alpha^2.  alpha' = 1: s1 | beta = alpha - 1.
bool integrality_constraints(const ParamSystem& ps);

/// alpha = 0 or alpha^2 >= s1 (alpha' = 0 only).
bool alpha_floor_check(const ParamSystem& ps);

ConditionSet classify_condition(const ParamSystem& ps);

/// The alpha (and alpha') a geometry with s1 points per line must have to
/// satisfy condition c; nullopt when c cannot hold (Cond1 with non-square s1).
std::optional<ParamSystem> params_for_condition(Condition c, const Integer& s1, long long dim);

}  // namespace homgeo
