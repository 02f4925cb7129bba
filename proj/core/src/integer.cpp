#include "homgeo/integer.hpp"

#include "homgeo/errors.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace homgeo {

namespace {

template <unsigned M>
constexpr std::array<bool, M> square_residues() {
  std::array<bool, M> table{};
  for (unsigned k = 0; k < M; ++k) table[(k * k) % M] = true;
  return table;
}

constexpr auto kRes64 = square_residues<64>();
constexpr auto kRes63 = square_residues<63>();
constexpr auto kRes65 = square_residues<65>();
constexpr auto kRes11 = square_residues<11>();

unsigned long residue(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.backend().data(), m);
}

Integer isqrt_bisect(const Integer& n, Integer hi) {
  Integer lo = 0;
  // invariant: lo^2 <= n < hi^2
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw DomainError("isqrt_floor: negative argument " + to_string(n));
  if (n < 2) return n;

  // Start above sqrt(n); Newton then decreases monotonically to floor(sqrt(n)).
  const auto bits = boost::multiprecision::msb(n) + 1;
  Integer start = Integer(1) << ((bits + 1) / 2);
  Integer x = start;
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  if (x * x <= n && (x + 1) * (x + 1) > n) return x;
  return isqrt_bisect(n, start + 1);
}

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  if (!kRes64[residue(n, 64)]) return false;
  const auto r = residue(n, 45045);  // 63 * 65 * 11
  if (!kRes63[r % 63] || !kRes65[r % 65] || !kRes11[r % 11]) return false;
  const Integer root = isqrt_floor(n);
  return root * root == n;
}

Integer ipow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

std::string to_string(const Integer& n) { return n.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

}  // namespace homgeo
