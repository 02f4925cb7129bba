#include "homgeo/param_model.hpp"

#include "homgeo/errors.hpp"

namespace homgeo {

void validate(const ParamSystem& ps) {
  if (ps.s1 < 2) throw DomainError("s1 must be at least 2, got " + to_string(ps.s1));
  if (ps.alpha < 0) throw DomainError("alpha must be nonnegative, got " + to_string(ps.alpha));
  if (ps.alpha_prime != 0 && ps.alpha_prime != 1)
    throw ModelScopeError("alpha' = " + std::to_string(ps.alpha_prime) +
                          " is outside the modeled values {0, 1}");
}

std::string describe(const ParamSystem& ps) {
  return "(s1=" + to_string(ps.s1) + ", alpha=" + to_string(ps.alpha) +
         ", alpha'=" + std::to_string(ps.alpha_prime) + ", dim=" + std::to_string(ps.dim) + ")";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::Cond1Plus: return "Cond1Plus";
    case Condition::Cond1Minus: return "Cond1Minus";
    case Condition::Cond2: return "Cond2";
    case Condition::Cond3: return "Cond3";
    case Condition::ClassicalCompatible: return "ClassicalCompatible";
    case Condition::NoneApplies: return "NoneApplies";
  }
  return "?";
}

std::vector<Condition> ConditionSet::members() const {
  std::vector<Condition> out;
  for (auto c : {Condition::Cond1Plus, Condition::Cond1Minus, Condition::Cond2, Condition::Cond3,
                 Condition::ClassicalCompatible, Condition::NoneApplies}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

FlatProfile::FlatProfile(std::vector<Integer> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty() || sizes_.front() != 1) throw DomainError("flat profile must start with s_0 = 1");
  for (std::size_t i = 1; i < sizes_.size(); ++i) {
    if (sizes_[i] <= sizes_[i - 1]) throw DomainError("flat profile must be strictly increasing");
  }
}

std::string FlatProfile::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ", ";
    out += to_string(sizes_[i]);
  }
  return out + "]";
}

FlatProfile truncate(const FlatProfile& profile, std::size_t max_dim) {
  const auto& s = profile.sizes();
  if (max_dim >= s.size()) return profile;
  return FlatProfile(std::vector<Integer>(s.begin(), s.begin() + static_cast<long>(max_dim) + 1));
}

Integer s2_of(const Integer& s1, const Integer& alpha) {
  Integer s2 = s1 + (s1 - 1) * alpha + (s1 - 1) * (s1 - 1);
  if (s2 != 1 + (alpha + s1) * (s1 - 1)) throw InvariantViolation("s2_of: closed forms disagree");
  return s2;
}

Rational growth_lower_bound(const Integer& s1, const Integer& s2, long long r) {
  if (r < 3) throw DomainError("growth_lower_bound: r must be at least 3");
  if (s1 < 2 || s2 <= s1) throw DomainError("growth_lower_bound: need s1 >= 2 and s2 > s1");
  return Rational(ipow(s2 - s1, static_cast<unsigned>(r - 1)), ipow(s1 - 1, static_cast<unsigned>(r - 2)));
}

bool growth_step_check(const FlatProfile& profile, std::size_t r) {
  if (r < 3 || r > profile.top_dimension()) throw DomainError("growth_step_check: index out of range");
  const Integer lhs = profile[r] - profile[r - 1];
  const Integer prev = profile[r - 1] - profile[r - 2];
  const Integer prev2 = profile[r - 2] - profile[r - 3];
  // lhs >= prev^2 / prev2 with prev2 > 0
  return lhs * prev2 >= prev * prev;
}

bool integrality_constraints(const ParamSystem& ps) {
  validate(ps);
  if (ps.alpha_prime == 0) return ((ps.s1 - 1) * ps.alpha * ps.alpha) % ps.s1 == 0;
  if (ps.alpha < 1) throw DomainError("integrality_constraints: alpha' = 1 needs alpha >= 1");
  return (ps.alpha - 1) % ps.s1 == 0;
}

bool alpha_floor_check(const ParamSystem& ps) {
  validate(ps);
  if (ps.alpha_prime != 0) throw DomainError("alpha_floor_check applies to alpha' = 0 only");
  return ps.alpha == 0 || ps.alpha * ps.alpha >= ps.s1;
}

ConditionSet classify_condition(const ParamSystem& ps) {
  validate(ps);
  ConditionSet out;
  const Integer& s1 = ps.s1;
  const Integer& a = ps.alpha;
  if (ps.alpha_prime == 0) {
    if (is_perfect_square(s1)) {
      const Integer t = isqrt_floor(s1);
      if (a == s1 * (t + 1) * (t + 1)) out.insert(Condition::Cond1Plus);
      if (a == s1 * (t - 1) * (t - 1)) out.insert(Condition::Cond1Minus);
    }
    if (a == s1 * (s1 - 1)) out.insert(Condition::Cond2);
  } else if (a == s1 * s1 + 1) {
    out.insert(Condition::Cond3);
  }
  if (a == 0 || (a == 1 && ps.alpha_prime == 0)) out.insert(Condition::ClassicalCompatible);
  if (out.empty()) out.insert(Condition::NoneApplies);
  return out;
}

std::optional<ParamSystem> params_for_condition(Condition c, const Integer& s1, long long dim) {
  switch (c) {
    case Condition::Cond1Plus:
    case Condition::Cond1Minus: {
      if (!is_perfect_square(s1)) return std::nullopt;
      const Integer t = isqrt_floor(s1);
      const Integer u = c == Condition::Cond1Plus ? t + 1 : t - 1;
      return ParamSystem{s1, s1 * u * u, 0, dim};
    }
    case Condition::Cond2:
      return ParamSystem{s1, s1 * (s1 - 1), 0, dim};
    case Condition::Cond3:
      return ParamSystem{s1, s1 * s1 + 1, 1, dim};
    default:
      return std::nullopt;
  }
}

}  // namespace homgeo
