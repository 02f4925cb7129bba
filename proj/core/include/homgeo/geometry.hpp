#pragma once

#include "homgeo/integer.hpp"
#include "homgeo/param_model.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace homgeo {

/// Element of the prime field Z/pZ.
class PrimeFieldElement {
 public:
  /// Throws UnsupportedFieldError unless modulus is prime.
  PrimeFieldElement(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  PrimeFieldElement operator+(PrimeFieldElement rhs) const;
  PrimeFieldElement operator-(PrimeFieldElement rhs) const;
  PrimeFieldElement operator*(PrimeFieldElement rhs) const;
  PrimeFieldElement operator-() const;
  /// Throws DomainError for zero.
  PrimeFieldElement inverse() const;

  friend bool operator==(PrimeFieldElement, PrimeFieldElement) = default;

 private:
  struct Unchecked {};
  PrimeFieldElement(std::uint32_t value, std::uint32_t modulus, Unchecked) : value_(value), modulus_(modulus) {}

  std::uint32_t value_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

enum class GeometryKind { Projective, Affine };

using PointId = std::uint32_t;
/// Sorted, duplicate-free list of points.
using PointSet = std::vector<PointId>;

/// PG(n, p) or AG(n, p) over a prime field, with closure = (affine) span.
/// Immutable after construction.
class Geometry {
 public:
  GeometryKind kind() const noexcept { return kind_; }
  int dimension() const noexcept { return n_; }
  std::uint32_t field_order() const noexcept { return p_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  /// Coordinates: normalized homogeneous vector (projective) or affine vector.
  const std::vector<std::uint32_t>& coordinates(PointId x) const { return points_.at(x); }
  std::string name() const;

  PointSet closure(std::span<const PointId> subset) const;
  /// Dimension of the closure (rank - 1); -1 for the empty set.
  int flat_dimension(std::span<const PointId> subset) const;

 private:
  friend Geometry build_projective(int n, std::uint32_t p);
  friend Geometry build_affine(int n, std::uint32_t p);

  Geometry(GeometryKind kind, int n, std::uint32_t p);

  /// Vector used for linear algebra: the point itself (projective) or (v, 1).
  std::vector<std::uint32_t> lifted(PointId x) const;
  std::size_t encode(std::span<const std::uint32_t> coords) const;
  /// Row-reduced basis of the span of the lifted subset.
  std::vector<std::vector<std::uint32_t>> span_basis(std::span<const PointId> subset) const;

  GeometryKind kind_;
  int n_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> points_;
  std::vector<std::int32_t> index_;  // encoded coordinates -> point id, -1 if none
};

/// Points are 1-dimensional subspaces of GF(p)^(n+1). Needs n in [2, 4],
/// p prime, p^(n+1) <= 1e5.
Geometry build_projective(int n, std::uint32_t p);

/// Points are the vectors of GF(p)^n. Needs n >= 2, p prime, p^n <= 1e5.
Geometry build_affine(int n, std::uint32_t p);

/// All flats of one dimension.
std::vector<PointSet> flats_of_dimension(const Geometry& g, int dim);

/// s_0 ... s_n by closing bases of each rank; throws HomogeneityViolation if
/// two flats of the same dimension differ in size.
FlatProfile flat_profile(const Geometry& g);

/// Profile of the quotient geometry whose points are the lines through x:
/// entry i counts lines through x inside an (i+1)-flat containing x. Checks
/// every such flat agrees and that entry i equals (s_{i+1} - 1)/(s_1 - 1).
FlatProfile localize_at_point(const Geometry& g, PointId x);

struct AxiomReport {
  long long subsets_checked = 0;
  long long exchange_checks = 0;
  bool extensive = true;
  bool monotone = true;
  bool idempotent = true;
  bool exchange = true;
  std::string first_failure;

  bool ok() const { return extensive && monotone && idempotent && exchange; }
};

/// Closure axioms on every subset of size <= 3 plus `random_subsets` larger
/// random subsets, and exchange for every A of size <= 2 and points x, y.
AxiomReport check_closure_axioms(const Geometry& g, std::size_t random_subsets = 200, std::uint32_t seed = 1);

/// (s_2 - s_1 - (s_1 - 1)^2)/(s_1 - 1); ModelMismatchError if not integral.
Integer alpha_of(const FlatProfile& profile);
Integer alpha_of(const Geometry& g);

}  // namespace homgeo
