#pragma once

// Index-level algebra of generalized Pauli matrices. A GPM X^m Z^n is
// identified with the pair (m, n) in Z_d x Z_d; global phases are never
// tracked at this level. Two GPMs (m,n), (s,t) commute iff n*s - m*t = 0
// (mod d).

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "gbs/zmod.hpp"

namespace gbs {

/// Index pair of X^m Z^n, stored as canonical residues in [0, d).
struct Gpm {
  int m = 0;
  int n = 0;
  friend constexpr auto operator<=>(const Gpm&, const Gpm&) = default;
};

inline std::string to_string(Gpm g) {
  return std::to_string(g.m) + "," + std::to_string(g.n);
}

constexpr Gpm canonical(Gpm g, Dimension d) noexcept {
  return {mod(g.m, d), mod(g.n, d)};
}

constexpr Gpm negate(Gpm g, Dimension d) noexcept {
  return {mod(-g.m, d), mod(-g.n, d)};
}

constexpr Gpm add(Gpm a, Gpm b, Dimension d) noexcept {
  return {mod(a.m + b.m, d), mod(a.n + b.n, d)};
}

constexpr Gpm subtract(Gpm a, Gpm b, Dimension d) noexcept {
  return {mod(a.m - b.m, d), mod(a.n - b.n, d)};
}

constexpr bool commutes(Gpm a, Gpm b, Dimension d) noexcept {
  return mod(static_cast<long long>(a.n) * b.m - static_cast<long long>(a.m) * b.n, d) == 0;
}

/// All index pairs commuting with g; always contains (0,0) and g itself.
inline std::set<Gpm> commutant(Gpm g, Dimension d) {
  g = canonical(g, d);
  std::set<Gpm> out;
  for (int s = 0; s < d; ++s)
    for (int t = 0; t < d; ++t)
      if (commutes(g, {s, t}, d)) out.insert({s, t});
  return out;
}

/// Ordered set of distinct GPM indices labelling a generalized-Bell-state
/// family. Insertion order is kept for stable reporting.
class GbsSet {
 public:
  GbsSet(Dimension d, std::vector<Gpm> elements) : d_(d), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("GbsSet: empty set");
    std::set<Gpm> seen;
    for (auto& g : elements_) {
      g = canonical(g, d_);
      if (!seen.insert(g).second)
        throw std::invalid_argument("GbsSet: duplicate element " + to_string(g));
    }
  }

  Dimension dim() const noexcept { return d_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<Gpm>& elements() const noexcept { return elements_; }

  friend bool operator==(const GbsSet& a, const GbsSet& b) {
    return a.d_ == b.d_ && std::set<Gpm>(a.elements_.begin(), a.elements_.end()) ==
                               std::set<Gpm>(b.elements_.begin(), b.elements_.end());
  }

 private:
  Dimension d_;
  std::vector<Gpm> elements_;
};

/// Set of pairwise differences of a GbsSet. Never contains (0,0) and is
/// closed under negation; at most l(l-1) members for a source set of size l.
class DiffSet {
 public:
  DiffSet(Dimension d, std::set<Gpm> elements) : d_(d), elements_(std::move(elements)) {}

  Dimension dim() const noexcept { return d_; }
  const std::set<Gpm>& elements() const noexcept { return elements_; }
  bool contains(Gpm g) const { return elements_.count(canonical(g, d_)) != 0; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }

 private:
  Dimension d_;
  std::set<Gpm> elements_;
};

inline DiffSet diff_set(const GbsSet& s) {
  const Dimension d = s.dim();
  std::set<Gpm> out;
  const auto& es = s.elements();
  for (std::size_t j = 0; j < es.size(); ++j)
    for (std::size_t k = 0; k < es.size(); ++k)
      if (j != k) out.insert(subtract(es[j], es[k], d));
  return {d, std::move(out)};
}

/// Translate the set by the inverse of its first element, so it contains
/// (0,0). The difference set is unchanged.
inline GbsSet standardize(const GbsSet& s) {
  const Gpm base = s.elements().front();
  std::vector<Gpm> out;
  out.reserve(s.elements().size());
  for (const auto& g : s.elements()) out.push_back(subtract(g, base, s.dim()));
  return {s.dim(), std::move(out)};
}

}  // namespace gbs
