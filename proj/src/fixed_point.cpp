#include "gaussify/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gaussify/error.hpp"

namespace gaussify::fixed_point {
namespace {

// Above this photon number the factorial-weighted sums switch to logs.
constexpr int kLogAccumulationThreshold = 30;

// log|base|^k + i k arg(base); false when the term vanishes.
bool accumulate_power(Complex base, int k, double& log_mag, double& phase) {
  if (k == 0) return true;
  if (base == Complex(0.0)) return false;
  log_mag += k * std::log(std::abs(base));
  phase += k * std::arg(base);
  return true;
}

Complex ipow(Complex z, int k) {
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

// alpha at (2m + parity, 2n + parity) from the closed-form double sum.
Complex limit_entry(const GammaMatrix& g, int m, int n, int parity, const std::vector<double>& lf,
                    const std::vector<double>& fact) {
  const int row = 2 * m + parity, col = 2 * n + parity;
  const Complex h1 = 0.5 * g.g1, h2 = 0.5 * g.g2;
  Complex acc = 0.0;
  if (row + col <= kLogAccumulationThreshold) {
    const double pref = std::sqrt(fact[row] * fact[col]);
    for (int s = 0; s <= std::min(m, n); ++s) {
      const int k12 = 2 * s + parity;
      acc += ipow(g.g12, k12) / fact[k12] * ipow(h1, m - s) / fact[m - s] * ipow(h2, n - s) / fact[n - s];
    }
    return pref * acc;
  }
  for (int s = 0; s <= std::min(m, n); ++s) {
    const int k12 = 2 * s + parity;
    double log_mag = 0.5 * (lf[row] + lf[col]) - lf[k12] - lf[m - s] - lf[n - s];
    double phase = 0.0;
    if (!accumulate_power(g.g12, k12, log_mag, phase) || !accumulate_power(h1, m - s, log_mag, phase) ||
        !accumulate_power(h2, n - s, log_mag, phase))
      continue;
    acc += std::polar(std::exp(log_mag), phase);
  }
  return acc;
}

}  // namespace

GammaMatrix GammaMatrix::from_matrix(const Eigen::Matrix2cd& m) {
  if (std::abs(m(0, 1) - m(1, 0)) > 1e-14 * (1.0 + std::abs(m(0, 1))))
    throw Error("Gamma must be symmetric");
  return {m(0, 0), m(1, 1), m(0, 1)};
}

Eigen::Matrix2cd GammaMatrix::matrix() const {
  Eigen::Matrix2cd m;
  m << g1, g12, g12, g2;
  return m;
}

GammaMatrix gamma_from_state(const PureState2& alpha) {
  const Complex a00 = alpha(0, 0);
  if (a00 == Complex(0.0)) throw DomainError("no Gaussian limit: alpha(0,0) = 0");
  auto beta = [&](int m, int n) { return alpha.at(m, n) / a00; };
  const double r2 = std::sqrt(2.0);
  return {r2 * beta(2, 0) - beta(1, 0) * beta(1, 0), r2 * beta(0, 2) - beta(0, 1) * beta(0, 1),
          beta(1, 1) - beta(1, 0) * beta(0, 1)};
}

double spectral_norm(const GammaMatrix& g) {
  // Largest singular value of a 2x2 matrix from its Frobenius norm and determinant.
  const double fro2 = std::norm(g.g1) + std::norm(g.g2) + 2.0 * std::norm(g.g12);
  const double det = std::abs(g.g1 * g.g2 - g.g12 * g.g12);
  const double disc = std::max(0.0, fro2 * fro2 - 4.0 * det * det);
  return std::sqrt(0.5 * (fro2 + std::sqrt(disc)));
}

bool is_normalizable(const GammaMatrix& gamma) { return spectral_norm(gamma) < 1.0; }

TakagiFactorization takagi(const GammaMatrix& gamma) {
  const Eigen::Matrix2cd A = gamma.matrix();
  if (A.cwiseAbs().maxCoeff() == 0.0) return {Eigen::Matrix2cd::Identity(), {0.0, 0.0}};

  // For A = X + iY, eigenvectors (x; y) of [[X, -Y], [-Y, -X]] with eigenvalue
  // sigma >= 0 give u = x + iy with A u = sigma conj(u). The spectrum is
  // +-sigma_1, +-sigma_2, so the two largest eigenpairs carry the factorization.
  const Eigen::Matrix2d X = A.real(), Y = A.imag();
  Eigen::Matrix4d M;
  M << X, -Y, -Y, -X;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(M);

  TakagiFactorization out;
  for (int k = 0; k < 2; ++k) {
    const Eigen::Vector4d v = es.eigenvectors().col(3 - k);
    Eigen::Vector2cd u;
    u << Complex(v(0), v(2)), Complex(v(1), v(3));
    out.U.col(k) = u.normalized();
    out.singular_values[k] = std::max(0.0, es.eigenvalues()(3 - k));
  }
  return out;
}

SqueezingParams squeezing_params(const GammaMatrix& gamma) {
  const double norm = spectral_norm(gamma);
  if (norm >= 1.0) throw NotNormalizable(norm);
  const TakagiFactorization t = takagi(gamma);
  SqueezingParams p;
  p.singular_values = {std::atanh(t.singular_values[0]), std::atanh(t.singular_values[1])};
  Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
  d(0, 0) = p.singular_values[0];
  d(1, 1) = p.singular_values[1];
  p.Z = t.U.conjugate() * d * t.U.adjoint();
  return p;
}

PureState2 formal_limit_coefficients(const GammaMatrix& gamma, int cutoff) {
  if (cutoff < 0) throw Error("negative cutoff");
  std::vector<double> lf(2 * cutoff + 2, 0.0);
  std::vector<double> fact(std::min<std::size_t>(lf.size(), kLogAccumulationThreshold + 1), 1.0);
  for (std::size_t k = 1; k < lf.size(); ++k) lf[k] = lf[k - 1] + std::log(static_cast<double>(k));
  for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<double>(k);
  PureState2 out(cutoff);
  for (int row = 0; row <= cutoff; ++row)
    for (int col = 0; col <= cutoff; ++col) {
      if ((row + col) % 2 != 0) continue;  // odd total photon number vanishes
      const int parity = row % 2;
      out(row, col) = limit_entry(gamma, row / 2, col / 2, parity, lf, fact);
    }
  return out;
}

PureState2 limit_coefficients(const GammaMatrix& gamma, int cutoff) {
  const double norm = spectral_norm(gamma);
  if (norm >= 1.0) throw NotNormalizable(norm);
  return formal_limit_coefficients(gamma, cutoff);
}

double limit_norm_sq(const GammaMatrix& gamma) {
  const double norm = spectral_norm(gamma);
  if (norm >= 1.0) throw NotNormalizable(norm);
  // (1 - s1^2)(1 - s2^2) = 1 - (s1^2 + s2^2) + (s1 s2)^2 = 1 - |Gamma|_F^2 + |det Gamma|^2
  const double fro2 = std::norm(gamma.g1) + std::norm(gamma.g2) + 2.0 * std::norm(gamma.g12);
  const double det2 = std::norm(gamma.g1 * gamma.g2 - gamma.g12 * gamma.g12);
  return 1.0 / std::sqrt(1.0 - fro2 + det2);
}

Truncated<PureState2> limit_state(const GammaMatrix& gamma, double tail_tol, int min_cutoff, int max_cutoff) {
  const double exact = limit_norm_sq(gamma);
  int cutoff = std::max(1, min_cutoff);
  while (true) {
    PureState2 s = limit_coefficients(gamma, cutoff);
    const double tail = std::max(0.0, 1.0 - norm_sq(s) / exact);
    if (tail < tail_tol || cutoff >= max_cutoff) return {std::move(s), tail};
    cutoff = std::min(2 * cutoff, max_cutoff);
  }
}

}  // namespace gaussify::fixed_point
