#pragma once

// Maximally commutative sets (MCSs) of GPMs. Each MCS is the group
//   C_{i,j} = {(x, y) : x in iZ_d, i*y - j*x = 0 (mod d)},   i | d,
// of exactly d pairwise-commuting index pairs, plus the distinguished
// C_{0,0} = {(0, y)}. There are sigma(d) distinct MCSs in total (the i = d
// label duplicates C_{0,0} and is canonicalized away). mcs_containing
// computes all MCSs through a given GPM directly from the congruence
// solution, without scanning memberships.

#include <algorithm>
#include <string>
#include <vector>

#include "gbs/pauli.hpp"
#include "gbs/zmod.hpp"

namespace gbs {

/// Label (i, j) of the MCS C_{i,j}; (0,0) denotes the distinguished phase
/// class {(0, y)}.
struct McsId {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const McsId&, const McsId&) = default;
  constexpr bool is_c00() const noexcept { return i == 0 && j == 0; }
};

inline std::string to_string(McsId id) {
  return "C" + std::to_string(id.i) + "," + std::to_string(id.j);
}

/// Valid labels: (0,0), or i >= 1 with i | d and 0 <= j <= d/i - 1.
constexpr bool valid_mcs_id(McsId id, Dimension d) noexcept {
  if (id.is_c00()) return true;
  return id.i >= 1 && id.i <= d && d % id.i == 0 && id.j >= 0 && id.j < d / id.i;
}

/// Canonical list of the sigma(d) MCS labels: C_{0,0} first, then (i, j)
/// lexicographic over proper divisors i of d.
inline std::vector<McsId> enumerate_mcs(Dimension d) {
  std::vector<McsId> ids{{0, 0}};
  for (int i = 1; i < d; ++i) {
    if (d % i != 0) continue;
    for (int j = 0; j < d / i; ++j) ids.push_back({i, j});
  }
  return ids;
}

struct Mcs {
  McsId id;
  std::set<Gpm> members;
};

inline Mcs materialize(McsId id, Dimension d) {
  if (!valid_mcs_id(id, d))
    throw std::invalid_argument("materialize: invalid MCS label " + to_string(id));
  std::set<Gpm> members;
  if (id.is_c00() || id.i == d) {
    for (int y = 0; y < d; ++y) members.insert({0, y});
    return {McsId{0, 0}, std::move(members)};
  }
  for (int x = 0; x < d; x += id.i) {
    const auto sol = solve_congruence(id.i, mod(static_cast<long long>(id.j) * x, d), d);
    for (int y : sol.solutions()) members.insert({x, y});
  }
  return {id, std::move(members)};
}

/// All MCS labels whose set contains g. For m != 0 the labels are the
/// divisors i of gcd(d, m) with (gcd(d,m)/i) | gcd(d, m, n), each carrying
/// the arithmetic progression of j values solving i*n = j*m (mod d); for
/// m = 0 they are C_{0,0} plus every full column of labels C_{i,*} with
/// (d/i) | gcd(d, n). The pair (0,0) lies in every MCS.
inline std::vector<McsId> mcs_containing(Gpm g, Dimension d) {
  g = canonical(g, d);
  if (g == Gpm{0, 0}) return enumerate_mcs(d);

  std::vector<McsId> out;
  if (g.m == 0) {
    out.push_back({0, 0});
    const int dn = std::gcd(d.value(), g.n);
    for (int i = 1; i < d; ++i) {
      if (d % i != 0 || dn % (d / i) != 0) continue;
      for (int j = 0; j < d / i; ++j) out.push_back({i, j});
    }
  } else {
    const int dm = std::gcd(d.value(), g.m);
    const int dmn = std::gcd(dm, g.n);
    for (int i = 1; i <= dm; ++i) {
      if (dm % i != 0 || dmn % (dm / i) != 0) continue;
      // j0 solves (m/dm) * j = (i*n/dm) in Z_{d/dm}; the remaining labels
      // step by d/dm.
      const int ddm = d / dm;
      const long long in_over_dm = static_cast<long long>(i) * g.n / dm;
      const int j0 = static_cast<int>(in_over_dm % ddm * mod_inverse(g.m / dm, ddm) % ddm);
      for (int t = 0; t < dm / i; ++t) out.push_back({i, j0 + t * ddm});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gbs
