#pragma once

// Exact arithmetic over Z_d: canonical residues, gcd/divisor helpers and the
// linear congruence solver a*x = b (mod d) used by the MCS membership rules.

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gbs {

/// Hilbert-space dimension d >= 2; all residue arithmetic is taken mod d.
class Dimension {
 public:
  constexpr explicit Dimension(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("Dimension: d must be >= 2");
  }
  constexpr int value() const noexcept { return d_; }
  constexpr operator int() const noexcept { return d_; }
  friend constexpr bool operator==(Dimension a, Dimension b) noexcept { return a.d_ == b.d_; }

 private:
  int d_;
};

/// Canonical residue of x in [0, d).
constexpr int mod(long long x, Dimension d) noexcept {
  long long r = x % d.value();
  return static_cast<int>(r < 0 ? r + d.value() : r);
}

/// gcd(d, m) with the convention gcd(d, 0) = d.
inline int gcd_d(Dimension d, int m) {
  return std::gcd(d.value(), mod(m, d));
}

inline bool is_prime(Dimension d) {
  for (int k = 2; k * k <= d.value(); ++k)
    if (d.value() % k == 0) return false;
  return true;
}

struct DivisorSigma {
  std::vector<int> divisors;  // ascending
  int sigma = 0;              // sum of divisors
};

inline DivisorSigma sigma_divisors(Dimension d) {
  DivisorSigma out;
  for (int k = 1; k <= d.value(); ++k) {
    if (d.value() % k == 0) {
      out.divisors.push_back(k);
      out.sigma += k;
    }
  }
  return out;
}

/// Inverse of a mod m (m >= 1, gcd(a, m) = 1). For m = 1 every residue
/// collapses to 0. Extended Euclid.
inline int mod_inverse(int a, int m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  long long r0 = m, r1 = ((a % m) + m) % m, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1;
    long long s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
  return static_cast<int>(((s0 % m) + m) % m);
}

/// Solution set of a*x = b (mod d). When solvable the solutions are
/// {x0 + t*period : t = 0..class_count-1} with period = d/c, class_count =
/// c = gcd(a, d); unsolvable (c does not divide b) is an ordinary result.
struct CongruenceSolution {
  bool solvable = false;
  int x0 = 0;
  int period = 0;
  int class_count = 0;

  std::vector<int> solutions() const {
    std::vector<int> xs;
    if (!solvable) return xs;
    xs.reserve(static_cast<std::size_t>(class_count));
    for (int t = 0; t < class_count; ++t) xs.push_back(x0 + t * period);
    return xs;
  }
};

inline CongruenceSolution solve_congruence(int a, int b, Dimension d) {
  a = mod(a, d);
  b = mod(b, d);
  const int c = std::gcd(a, d.value());  // a = 0 gives c = d
  if (b % c != 0) return {};
  const int dc = d.value() / c;
  const long long x0 = (static_cast<long long>(b / c) * mod_inverse(a / c, dc)) % dc;
  return {true, static_cast<int>(x0), dc, c};
}

}  // namespace gbs
