#include "homgeo/geometry.hpp"

#include "homgeo/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace homgeo {

PrimeFieldElement::PrimeFieldElement(std::uint32_t value, std::uint32_t modulus)
    : value_(0), modulus_(modulus) {
  if (!is_prime(modulus)) throw UnsupportedFieldError("PrimeFieldElement: modulus " + std::to_string(modulus) + " is not prime");
  value_ = value % modulus;
}

PrimeFieldElement PrimeFieldElement::operator+(PrimeFieldElement rhs) const {
  return {static_cast<std::uint32_t>((std::uint64_t{value_} + rhs.value_) % modulus_), modulus_, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator-(PrimeFieldElement rhs) const {
  return {static_cast<std::uint32_t>((std::uint64_t{value_} + modulus_ - rhs.value_) % modulus_), modulus_, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator*(PrimeFieldElement rhs) const {
  return {static_cast<std::uint32_t>((std::uint64_t{value_} * rhs.value_) % modulus_), modulus_, Unchecked{}};
}

PrimeFieldElement PrimeFieldElement::operator-() const { return PrimeFieldElement(0, modulus_, Unchecked{}) - *this; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw DomainError("PrimeFieldElement: zero has no inverse");
  // a^(p-2)
  PrimeFieldElement result(1, modulus_, Unchecked{});
  PrimeFieldElement base = *this;
  for (std::uint32_t e = modulus_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = result * base;
    base = base * base;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxLookup = 100'000;

std::uint64_t checked_power(std::uint32_t p, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    v *= p;
    if (v > kMaxLookup) return kMaxLookup + 1;
  }
  return v;
}

void require_field(std::uint32_t p) {
  if (!is_prime(p))
    throw UnsupportedFieldError("only prime fields are supported; " + std::to_string(p) + " is not prime");
}

}  // namespace

Geometry::Geometry(GeometryKind kind, int n, std::uint32_t p) : kind_(kind), n_(n), p_(p) {}

std::string Geometry::name() const {
  return std::string(kind_ == GeometryKind::Projective ? "PG(" : "AG(") + std::to_string(n_) + "," +
         std::to_string(p_) + ")";
}

std::vector<std::uint32_t> Geometry::lifted(PointId x) const {
  auto v = points_.at(x);
  if (kind_ == GeometryKind::Affine) v.push_back(1);
  return v;
}

std::size_t Geometry::encode(std::span<const std::uint32_t> coords) const {
  std::size_t code = 0;
  for (auto c : coords) code = code * p_ + c;
  return code;
}

std::vector<std::vector<std::uint32_t>> Geometry::span_basis(std::span<const PointId> subset) const {
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(subset.size());
  for (auto x : subset) rows.push_back(lifted(x));
  const std::size_t width = static_cast<std::size_t>(n_) + 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto inv = PrimeFieldElement(rows[rank][col], p_).inverse().value();
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>((std::uint64_t{v} * inv) % p_);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t k = 0; k < width; ++k) {
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + p_ - (factor * rows[rank][k]) % p_) % p_);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

PointSet Geometry::closure(std::span<const PointId> subset) const {
  const auto basis = span_basis(subset);
  PointSet out;
  if (basis.empty()) return out;
  const std::size_t k = basis.size();
  const std::size_t width = static_cast<std::size_t>(n_) + 1;
  std::vector<std::uint32_t> coeff(k, 0);
  std::vector<std::uint32_t> v(width);
  for (;;) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coeff[i] == 0) continue;
      for (std::size_t j = 0; j < width; ++j)
        v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t{coeff[i]} * basis[i][j]) % p_);
    }
    if (kind_ == GeometryKind::Projective) {
      auto first = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
      if (first != v.end() && *first == 1) out.push_back(static_cast<PointId>(index_[encode(v)]));
    } else if (v.back() == 1) {
      out.push_back(static_cast<PointId>(index_[encode(std::span(v).first(width - 1))]));
    }
    std::size_t i = 0;
    while (i < k && ++coeff[i] == p_) coeff[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Geometry::flat_dimension(std::span<const PointId> subset) const {
  return static_cast<int>(span_basis(subset).size()) - 1;
}

Geometry build_projective(int n, std::uint32_t p) {
  require_field(p);
  if (n < 2 || n > 4) throw DomainError("build_projective: n must be in [2, 4]");
  const std::uint64_t cells = checked_power(p, n + 1);
  if (cells > kMaxLookup) throw DomainError("build_projective: p^(n+1) exceeds 1e5");
  Geometry g(GeometryKind::Projective, n, p);
  g.index_.assign(cells, -1);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t code = 0; code < cells; ++code) {
    std::uint64_t rest = code;
    for (std::size_t j = v.size(); j-- > 0;) {
      v[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    auto first = std::find_if(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; });
    if (first == v.end() || *first != 1) continue;
    g.index_[code] = static_cast<std::int32_t>(g.points_.size());
    g.points_.push_back(v);
  }
  return g;
}

Geometry build_affine(int n, std::uint32_t p) {
  require_field(p);
  if (n < 2) throw DomainError("build_affine: n must be at least 2");
  const std::uint64_t cells = checked_power(p, n);
  if (cells > kMaxLookup) throw DomainError("build_affine: p^n exceeds 1e5");
  Geometry g(GeometryKind::Affine, n, p);
  g.index_.assign(cells, -1);
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
  for (std::uint64_t code = 0; code < cells; ++code) {
    std::uint64_t rest = code;
    for (std::size_t j = v.size(); j-- > 0;) {
      v[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    g.index_[code] = static_cast<std::int32_t>(g.points_.size());
    g.points_.push_back(v);
  }
  return g;
}

namespace {

/// Flats one dimension up from each of `flats`, deduplicated.
std::vector<PointSet> extend_flats(const Geometry& g, const std::vector<PointSet>& flats) {
  std::set<PointSet> next;
  std::vector<char> covered(g.point_count());
  for (const auto& flat : flats) {
    std::fill(covered.begin(), covered.end(), 0);
    for (auto y : flat) covered[y] = 1;
    for (PointId x = 0; x < g.point_count(); ++x) {
      if (covered[x]) continue;
      PointSet gen = flat;
      gen.push_back(x);
      PointSet bigger = g.closure(gen);
      for (auto y : bigger) covered[y] = 1;
      next.insert(std::move(bigger));
    }
  }
  return {next.begin(), next.end()};
}

Integer common_size(const std::vector<PointSet>& flats, const std::string& what) {
  const std::size_t size = flats.front().size();
  for (const auto& f : flats) {
    if (f.size() != size)
      throw HomogeneityViolation(what + ": flats of equal dimension with sizes " + std::to_string(size) +
                                 " and " + std::to_string(f.size()));
  }
  return Integer(size);
}

}  // namespace

std::vector<PointSet> flats_of_dimension(const Geometry& g, int dim) {
  if (dim < 0 || dim > g.dimension()) throw DomainError("flats_of_dimension: dimension out of range");
  std::vector<PointSet> flats;
  for (PointId x = 0; x < g.point_count(); ++x) flats.push_back({x});
  for (int d = 0; d < dim; ++d) flats = extend_flats(g, flats);
  return flats;
}

FlatProfile flat_profile(const Geometry& g) {
  std::vector<Integer> sizes;
  std::vector<PointSet> flats;
  for (PointId x = 0; x < g.point_count(); ++x) flats.push_back(g.closure(std::span<const PointId>(&x, 1)));
  for (int d = 0;; ++d) {
    sizes.push_back(common_size(flats, g.name() + " dimension " + std::to_string(d)));
    if (d == g.dimension()) break;
    flats = extend_flats(g, flats);
  }
  return FlatProfile(std::move(sizes));
}

FlatProfile localize_at_point(const Geometry& g, PointId x) {
  if (x >= g.point_count()) throw DomainError("localize_at_point: no such point");
  const FlatProfile parent = flat_profile(g);
  std::vector<Integer> sizes;
  std::vector<PointSet> flats{{x}};
  for (int d = 1; d <= g.dimension(); ++d) {
    flats = extend_flats(g, flats);
    std::vector<Integer> counts;
    for (const auto& flat : flats) {
      std::set<PointSet> lines;
      for (auto y : flat) {
        if (y == x) continue;
        const PointId pair[2] = {std::min(x, y), std::max(x, y)};
        lines.insert(g.closure(pair));
      }
      counts.emplace_back(lines.size());
    }
    const Integer count = counts.front();
    for (const auto& c : counts) {
      if (c != count)
        throw HomogeneityViolation(g.name() + ": line counts through a point differ across " +
                                   std::to_string(d) + "-flats");
    }
    const Integer expected = (parent[static_cast<std::size_t>(d)] - 1) / (parent[1] - 1);
    if ((parent[static_cast<std::size_t>(d)] - 1) % (parent[1] - 1) != 0 || expected != count)
      throw InvariantViolation(g.name() + ": localized size " + to_string(count) +
                               " != (s_{i+1} - 1)/(s_1 - 1)");
    sizes.push_back(count);
  }
  return FlatProfile(std::move(sizes));
}

Integer alpha_of(const FlatProfile& profile) {
  if (profile.top_dimension() < 2) throw DomainError("alpha_of: profile has no s_2");
  const Integer& s1 = profile[1];
  const Integer& s2 = profile[2];
  const Integer num = s2 - s1 - (s1 - 1) * (s1 - 1);
  if (num % (s1 - 1) != 0)
    throw ModelMismatchError("alpha_of: (s2 - s1 - (s1-1)^2) is not divisible by s1 - 1 for " + profile.str());
  return num / (s1 - 1);
}

Integer alpha_of(const Geometry& g) { return alpha_of(flat_profile(g)); }

}  // namespace homgeo

namespace homgeo {

namespace {

bool is_subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::string show(const PointSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void fail(AxiomReport& r, bool& flag, const std::string& what) {
  if (r.first_failure.empty()) r.first_failure = what;
  flag = false;
}

void check_subset(const Geometry& g, const PointSet& s, AxiomReport& r) {
  ++r.subsets_checked;
  const PointSet cl = g.closure(s);
  if (!is_subset(s, cl)) fail(r, r.extensive, "extensive fails at " + show(s));
  if (g.closure(cl) != cl) fail(r, r.idempotent, "idempotent fails at " + show(s));
  // monotone against every one-point extension
  for (PointId y = 0; y < g.point_count(); ++y) {
    if (std::binary_search(s.begin(), s.end(), y)) continue;
    PointSet t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), y), y);
    if (!is_subset(cl, g.closure(t))) fail(r, r.monotone, "monotone fails at " + show(s) + " + " + std::to_string(y));
  }
}

PointSet with_point(PointSet s, PointId y) {
  if (!std::binary_search(s.begin(), s.end(), y)) s.insert(std::upper_bound(s.begin(), s.end(), y), y);
  return s;
}

}  // namespace

AxiomReport check_closure_axioms(const Geometry& g, std::size_t random_subsets, std::uint32_t seed) {
  AxiomReport r;
  const auto n = static_cast<PointId>(g.point_count());
  std::vector<PointSet> small{{}};
  for (PointId a = 0; a < n; ++a) {
    small.push_back({a});
    for (PointId b = a + 1; b < n; ++b) {
      small.push_back({a, b});
      for (PointId c = b + 1; c < n; ++c) small.push_back({a, b, c});
    }
  }
  for (const auto& s : small) check_subset(g, s, r);

  std::mt19937 rng(seed);
  std::uniform_int_distribution<PointId> pick(0, n - 1);
  for (std::size_t i = 0; i < random_subsets; ++i) {
    const std::size_t size = 4 + rng() % std::max<std::size_t>(1, n / 2);
    PointSet s;
    while (s.size() < std::min<std::size_t>(size, n)) s = with_point(std::move(s), pick(rng));
    check_subset(g, s, r);
  }

  // Exchange: x in cl(A + y) \ cl(A) implies y in cl(A + x).
  for (const auto& a : small) {
    if (a.size() > 2) continue;
    const PointSet cl_a = g.closure(a);
    for (PointId y = 0; y < n; ++y) {
      const PointSet cl_ay = g.closure(with_point(a, y));
      for (PointId x : cl_ay) {
        if (std::binary_search(cl_a.begin(), cl_a.end(), x)) continue;
        ++r.exchange_checks;
        const PointSet cl_ax = g.closure(with_point(a, x));
        if (!std::binary_search(cl_ax.begin(), cl_ax.end(), y))
          fail(r, r.exchange, "exchange fails at A=" + show(a) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
      }
    }
  }
  return r;
}

}  // namespace homgeo
