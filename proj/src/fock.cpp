#include "gaussify/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "gaussify/error.hpp"

namespace gaussify {

PureState2::PureState2(int cutoff) {
  if (cutoff < 0) throw Error("negative cutoff");
  amps_ = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
}

PureState2::PureState2(Eigen::MatrixXcd amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.rows() == 0 || amps_.rows() != amps_.cols())
    throw Error("amplitude table must be square and non-empty");
}

PureState2 PureState2::vacuum(int cutoff) {
  PureState2 s(cutoff);
  s(0, 0) = 1.0;
  return s;
}

Complex PureState2::at(int m, int n) const {
  if (m < 0 || n < 0 || m > cutoff() || n > cutoff()) return 0.0;
  return amps_(m, n);
}

PureState2 PureState2::resized(int cutoff) const { return truncated(cutoff).state; }

Truncated<PureState2> PureState2::truncated(int cutoff) const {
  PureState2 out(cutoff);
  const int keep = std::min(cutoff, this->cutoff()) + 1;
  out.amps_.topLeftCorner(keep, keep) = amps_.topLeftCorner(keep, keep);
  const double total = amps_.squaredNorm();
  const double kept = out.amps_.squaredNorm();
  return {std::move(out), total > 0.0 ? std::max(0.0, (total - kept) / total) : 0.0};
}

PureState2 PureState2::scaled(Complex factor) const { return PureState2(Eigen::MatrixXcd(amps_ * factor)); }

PureState2 PureState2::normalized() const {
  const double n = amps_.squaredNorm();
  if (!(n > 0.0)) throw DomainError("degenerate state");
  return scaled(1.0 / std::sqrt(n));
}

SchmidtDiagonal::SchmidtDiagonal(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("empty Schmidt coefficient sequence");
  for (double c : coeffs_)
    if (!(c >= 0.0)) throw DomainError("Schmidt coefficients must be non-negative");
}

SchmidtDiagonal SchmidtDiagonal::two_level(double lambda) { return SchmidtDiagonal({1.0, lambda}); }

SchmidtDiagonal SchmidtDiagonal::unit_leading() const {
  if (coeffs_[0] == 0.0) throw DomainError("protocol degenerate: alpha(0,0) = 0");
  if (coeffs_[0] == 1.0) return *this;
  std::vector<double> c(coeffs_);
  const double lead = c[0];
  for (double& x : c) x /= lead;
  c[0] = 1.0;
  return SchmidtDiagonal(std::move(c));
}

double SchmidtDiagonal::norm_sq() const {
  double s = 0.0;
  for (double c : coeffs_) s += c * c;
  return s;
}

PureState2 SchmidtDiagonal::to_state() const {
  PureState2 s(static_cast<int>(coeffs_.size()) - 1);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) s(n, n) = coeffs_[n];
  return s;
}

MixedState2::MixedState2(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 0) throw Error("negative cutoff");
  matrix_ = Eigen::MatrixXcd::Zero((cutoff + 1) * (cutoff + 1), (cutoff + 1) * (cutoff + 1));
}

MixedState2::MixedState2(int cutoff, Eigen::MatrixXcd matrix) : cutoff_(cutoff), matrix_(std::move(matrix)) {
  const int d = (cutoff + 1) * (cutoff + 1);
  if (matrix_.rows() != d || matrix_.cols() != d) throw Error("density matrix shape does not match cutoff");
}

MixedState2 MixedState2::projector(const PureState2& psi) {
  const int d = psi.dim();
  Eigen::VectorXcd v(d * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) v(m * d + n) = psi(m, n);
  return MixedState2(psi.cutoff(), v * v.adjoint());
}

double MixedState2::purity() const {
  const double t = trace();
  if (!(t > 0.0)) throw DomainError("degenerate state");
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return matrix_.squaredNorm() / (t * t);
}

MixedState2 MixedState2::resized(int cutoff) const { return truncated(cutoff).state; }

Truncated<MixedState2> MixedState2::truncated(int cutoff) const {
  MixedState2 out(cutoff);
  const int keep = std::min(cutoff, cutoff_);
  for (int m = 0; m <= keep; ++m)
    for (int n = 0; n <= keep; ++n)
      for (int mp = 0; mp <= keep; ++mp)
        for (int np = 0; np <= keep; ++np)
          out.matrix_(out.index(m, n), out.index(mp, np)) = matrix_(index(m, n), index(mp, np));
  const double total = trace();
  const double kept = out.trace();
  return {std::move(out), total > 0.0 ? std::max(0.0, (total - kept) / total) : 0.0};
}

MixedState2 MixedState2::normalized() const {
  const double t = trace();
  if (!(t > 0.0)) throw DomainError("degenerate state");
  return MixedState2(cutoff_, matrix_ / t);
}

void MixedState2::check_density() const {
  const double asym = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) throw DomainError("invalid density operator: not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigenClipTol)
    throw DomainError("invalid density operator: negative eigenvalue");
}

double norm_sq(const PureState2& state) { return state.amplitudes().squaredNorm(); }

Complex overlap(const PureState2& a, const PureState2& b) {
  const int d = std::min(a.dim(), b.dim());
  Complex s = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) s += std::conj(a(m, n)) * b(m, n);
  return s;
}

ReducedState1 reduce_to_mode(const PureState2& state, Mode keep) {
  const double n = norm_sq(state);
  if (!(n > 0.0)) throw DomainError("degenerate state");
  const Eigen::MatrixXcd& a = state.amplitudes();
  // rho_A(m, m') = sum_n a(m, n) conj(a(m', n)); rho_B uses the transpose.
  Eigen::MatrixXcd rho = keep == Mode::A ? Eigen::MatrixXcd(a * a.adjoint())
                                         : Eigen::MatrixXcd(a.transpose() * a.conjugate());
  return {rho / n};
}

ReducedState1 reduce_to_mode(const MixedState2& state, Mode keep) {
  const double t = state.trace();
  if (!(t > 0.0)) throw DomainError("degenerate state");
  const int d = state.mode_dim();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        rho(i, j) += keep == Mode::A ? state(i, k, j, k) : state(k, i, k, j);
  return {rho / t};
}

double von_neumann_entropy(const ReducedState1& rho) {
  const double tr = rho.matrix.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) throw DomainError("invalid density operator: trace " + std::to_string(tr));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (double lam : es.eigenvalues()) {
    if (lam < -kEigenClipTol) throw DomainError("invalid density operator: negative eigenvalue");
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return std::max(0.0, h);
}

double trace_norm_distance(const MixedState2& a, const MixedState2& b) {
  if (a.cutoff() != b.cutoff()) throw Error("trace distance needs equal cutoffs");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a.matrix() - b.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

}  // namespace gaussify
