#pragma once

// Complex-matrix realization of GPMs and the numerical verification layer:
// common eigenbases of MCSs, Weyl-orthogonality checks, discrimination
// protocol residuals, and a seeded projected-gradient search for witness
// states on the unit sphere.
//
// Tolerance tiers: 1e-12 construction-level identities, 1e-10 eigen
// residuals, 1e-9 protocol verification, 1e-8 feasibility success.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "gbs/analysis.hpp"
#include "gbs/mcs.hpp"
#include "gbs/pauli.hpp"

namespace gbs {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct Tolerances {
  double construction = 1e-12;
  double eigen = 1e-10;
  double protocol = 1e-9;
  double feasibility = 1e-8;
};

namespace detail {

// Self-contained deterministic RNG (splitmix64) so seeded results do not
// depend on standard-library distribution internals.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // in [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  double uniform_signed() { return 2.0 * uniform() - 1.0; }
  Complex gaussian() {  // standard complex normal via Box-Muller
    double u = uniform(), v = uniform();
    while (u <= 0.0) u = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double t = 2.0 * std::numbers::pi * v;
    return {r * std::cos(t), r * std::sin(t)};
  }
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 s(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return s.next();
  }
};

inline Vector random_unit_vector(int d, SplitMix64& rng) {
  Vector v(d);
  for (int k = 0; k < d; ++k) v[k] = rng.gaussian();
  return v / v.norm();
}

}  // namespace detail

/// omega^k with omega = e^{2*pi*i/d}.
inline Complex root_of_unity(Dimension d, long long k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(k, d)) / d.value();
  return {std::cos(angle), std::sin(angle)};
}

/// Matrix of X^m Z^n: entry (c+m mod d, c) = omega^{c*n}.
inline Matrix gpm_matrix(Gpm g, Dimension d) {
  g = canonical(g, d);
  Matrix u = Matrix::Zero(d, d);
  for (int c = 0; c < d; ++c)
    u(mod(c + g.m, d), c) = root_of_unity(d, static_cast<long long>(c) * g.n);
  return u;
}

/// Haar-style random unitary: QR of a Ginibre matrix with the R-diagonal
/// phases absorbed.
inline Matrix random_unitary(Dimension d, std::uint64_t seed) {
  detail::SplitMix64 rng(detail::SplitMix64::mix(seed, 0x5eed));
  Matrix a(d.value(), d.value());
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = rng.gaussian();
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    q.col(c) *= (std::abs(diag) > 0 ? diag / std::abs(diag) : Complex{1, 0});
  }
  return q;
}

/// || (I (x) U)|Phi> - (U^T (x) I)|Phi> || for |Phi> = (1/sqrt d) sum |jj>.
/// Zero for every unitary; used as a construction self-test.
inline double canonical_mes_check(const Matrix& u) {
  const int d = static_cast<int>(u.rows());
  Vector lhs = Vector::Zero(d * d), rhs = Vector::Zero(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      lhs[j * d + k] += scale * u(k, j);              // |j> (x) U|j>
      rhs[k * d + j] += scale * u.transpose()(k, j);  // U^T|j> (x) |j>
    }
  }
  return (lhs - rhs).norm();
}

struct EigenbasisResult {
  Matrix basis;     // columns form the common eigenbasis
  double residual;  // max off-eigenvector deviation over members and vectors
};

struct DegenerateAfterRetries : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Common eigenbasis of an MCS: diagonalizes a seeded random real-linear
/// Hermitian combination of the members. A degenerate spectrum (gap below
/// 1e-8) triggers a coefficient re-draw, at most 8 attempts.
inline EigenbasisResult common_eigenbasis(McsId id, Dimension d, std::uint64_t seed) {
  const auto mcs = materialize(id, d);
  std::vector<Matrix> members;
  members.reserve(mcs.members.size());
  for (const auto& g : mcs.members) members.push_back(gpm_matrix(g, d));

  detail::SplitMix64 rng(detail::SplitMix64::mix(seed, 0xba5e));
  constexpr int kMaxAttempts = 8;
  constexpr double kGap = 1e-8;
  const Complex im{0.0, 1.0};

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix h = Matrix::Zero(d, d);
    for (const auto& u : members) {
      const double c_re = rng.uniform_signed();
      const double c_im = rng.uniform_signed();
      h += 0.5 * (c_re * (u + u.adjoint()) + c_im * (u - u.adjoint()) / im);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) continue;
    const auto& vals = solver.eigenvalues();
    double min_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k + 1 < d; ++k) min_gap = std::min(min_gap, vals[k + 1] - vals[k]);
    if (min_gap < kGap) continue;

    const Matrix basis = solver.eigenvectors();
    double residual = 0.0;
    for (const auto& u : members) {
      for (int k = 0; k < d; ++k) {
        const Vector v = basis.col(k);
        const Complex lambda = v.dot(u * v);
        residual = std::max(residual, (u * v - lambda * v).norm());
      }
    }
    return {basis, residual};
  }
  throw DegenerateAfterRetries("common_eigenbasis: spectrum stayed degenerate after re-draws; re-seed");
}

/// Max over eigenvectors |v> of T of |<v|U|v>| for non-commuting GPMs T, U.
/// The Weyl relation forces every such expectation to vanish.
inline double weyl_orthogonality(Gpm t, Gpm u, Dimension d) {
  if (commutes(t, u, d))
    throw std::invalid_argument("weyl_orthogonality: inputs commute");
  const Matrix tm = gpm_matrix(t, d);
  const Matrix um = gpm_matrix(u, d);
  Eigen::ComplexEigenSolver<Matrix> solver(tm);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("weyl_orthogonality: eigendecomposition failed");
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    Vector v = solver.eigenvectors().col(k);
    v /= v.norm();
    worst = std::max(worst, std::abs(v.dot(um * v)));
  }
  return worst;
}

/// Largest off-diagonal Gram entry of {U_k |v>} over the set's members:
/// max_{i != j} |<v|U_i^dag U_j|v>|. Zero means the post-measurement states
/// are pairwise orthogonal and the protocol succeeds.
inline double protocol_verify(const GbsSet& s, const Vector& v) {
  const Dimension d = s.dim();
  if (v.size() != d.value()) throw std::invalid_argument("protocol_verify: state has wrong dimension");
  if (std::abs(v.norm() - 1.0) > 1e-6) throw std::invalid_argument("protocol_verify: state is not unit norm");
  std::vector<Vector> images;
  images.reserve(s.elements().size());
  for (const auto& g : s.elements()) images.push_back(gpm_matrix(g, d) * v);
  double worst = 0.0;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b)
      worst = std::max(worst, std::abs(images[a].dot(images[b])));
  return worst;
}

struct FeasibilityReport {
  double best_residual = 0.0;
  Vector witness;
  int restarts = 0;
  int iterations_per_restart = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

namespace detail {

/// One matrix per +/- pair of the difference set; |<a|U|a>| = |<a|U^dag|a>|
/// so one representative per pair preserves the objective's zero set.
inline std::vector<Matrix> half_diff_matrices(const GbsSet& s) {
  const Dimension d = s.dim();
  std::vector<Matrix> out;
  const auto delta = diff_set(s);
  for (const auto& g : delta.elements())
    if (!(negate(g, d) < g)) out.push_back(gpm_matrix(g, d));
  return out;
}

inline double objective(const std::vector<Matrix>& us, const Vector& a) {
  double f = 0.0;
  for (const auto& u : us) {
    const Complex w = a.dot(u * a);
    f += std::norm(w);
  }
  return f;
}

}  // namespace detail

/// Objective of the witness search: sum over one representative per +/-
/// pair of delta(S) of |<v|U|v>|^2, evaluated on the normalized input.
inline double feasibility_objective(const GbsSet& s, const Vector& v) {
  if (v.norm() == 0.0) throw std::invalid_argument("feasibility_objective: zero vector");
  return detail::objective(detail::half_diff_matrices(s), v / v.norm());
}

/// Projected gradient descent with backtracking line search on the unit
/// sphere, over `restarts` independent seeded starts. Deterministic for a
/// fixed (seed, restarts, iters); non-convergence shows up as a large
/// residual, never as an exception. best_residual is re-evaluated exactly
/// on the reported witness.
inline FeasibilityReport feasibility_search(const GbsSet& s, int restarts, int iters,
                                            std::uint64_t seed, double tolerance = 1e-8) {
  if (s.size() < 2) throw std::invalid_argument("feasibility_search: need at least 2 elements");
  if (restarts < 1 || iters < 1)
    throw std::invalid_argument("feasibility_search: restarts and iters must be positive");
  const Dimension d = s.dim();
  const auto us = detail::half_diff_matrices(s);
  std::vector<Matrix> adjoints;
  adjoints.reserve(us.size());
  for (const auto& u : us) adjoints.push_back(u.adjoint());

  Vector best = Vector::Zero(d);
  double best_f = std::numeric_limits<double>::infinity();

  for (int r = 0; r < restarts; ++r) {
    detail::SplitMix64 rng(detail::SplitMix64::mix(seed, static_cast<std::uint64_t>(r)));
    Vector a = detail::random_unit_vector(d, rng);
    double f = detail::objective(us, a);

    // Barzilai-Borwein step-size guess feeding a monotone backtracking line
    // search; gradient differences only, no second-order information.
    Vector a_prev, g_prev;
    bool have_prev = false;
    double eta = 1.0;

    for (int it = 0; it < iters; ++it) {
      Vector grad = Vector::Zero(d);
      for (std::size_t k = 0; k < us.size(); ++k) {
        const Vector ua = us[k] * a;
        const Complex w = a.dot(ua);
        grad += std::conj(w) * ua + w * (adjoints[k] * a);
      }
      const Vector tangent = grad - (a.dot(grad)).real() * a;
      const double gn2 = tangent.squaredNorm();
      if (gn2 < 1e-32 || f < 1e-26) break;

      if (have_prev) {
        const Vector s = a - a_prev;
        const Vector y = tangent - g_prev;
        const double sy = s.dot(y).real();
        eta = sy > 1e-30 ? std::clamp(s.squaredNorm() / sy, 1e-12, 1e8) : eta * 2.0;
      }
      a_prev = a;
      g_prev = tangent;
      have_prev = true;

      bool accepted = false;
      for (int bt = 0; bt < 60; ++bt) {
        Vector cand = a - eta * tangent;
        cand /= cand.norm();
        const double fc = detail::objective(us, cand);
        if (fc <= f - 1e-4 * eta * gn2) {
          a = std::move(cand);
          f = fc;
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
    }

    if (f < best_f) {
      best_f = f;
      best = a;
    }
  }

  FeasibilityReport report;
  report.witness = best;
  report.best_residual = detail::objective(us, best);
  report.restarts = restarts;
  report.iterations_per_restart = iters;
  report.seed = seed;
  report.tolerance = tolerance;
  return report;
}

}  // namespace gbs
