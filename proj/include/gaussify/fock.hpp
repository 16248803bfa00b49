#pragma once

// Truncated two-mode Fock-space states.
//
// A two-mode pure state is stored as a dense (cutoff+1) x (cutoff+1) table of
// amplitudes alpha(m, n) = <m, n|psi>. Density operators on the same space use
// the flattened index m * (cutoff + 1) + n.

#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace gaussify {

using Complex = std::complex<double>;

enum class Mode { A, B };

// Result of an operation that dropped amplitude beyond a photon-number cutoff.
// tail_mass is the discarded weight relative to the untruncated weight.
template <class State>
struct Truncated {
  State state;
  double tail_mass = 0.0;
};

class PureState2 {
 public:
  explicit PureState2(int cutoff = 0);
  explicit PureState2(Eigen::MatrixXcd amplitudes);

  static PureState2 vacuum(int cutoff = 0);

  int cutoff() const { return static_cast<int>(amps_.rows()) - 1; }
  int dim() const { return static_cast<int>(amps_.rows()); }

  Complex operator()(int m, int n) const { return amps_(m, n); }
  Complex& operator()(int m, int n) { return amps_(m, n); }
  // Zero outside the stored table.
  Complex at(int m, int n) const;

  const Eigen::MatrixXcd& amplitudes() const { return amps_; }

  // Zero-pads or truncates to the new cutoff.
  PureState2 resized(int cutoff) const;
  Truncated<PureState2> truncated(int cutoff) const;
  PureState2 scaled(Complex factor) const;
  // Unit squared norm. Throws DomainError on the zero state.
  PureState2 normalized() const;

 private:
  Eigen::MatrixXcd amps_;
};

// Diagonal coefficients alpha(n, n) of a Schmidt-form state. Non-negative.
class SchmidtDiagonal {
 public:
  SchmidtDiagonal() : coeffs_{1.0} {}
  explicit SchmidtDiagonal(std::vector<double> coeffs);

  // (1, lambda): the |0,0> + lambda |1,1> family.
  static SchmidtDiagonal two_level(double lambda);

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t n) const { return coeffs_[n]; }
  bool has_unit_leading() const { return !coeffs_.empty() && coeffs_[0] == 1.0; }

  // Scales so that coeffs[0] == 1 exactly. Throws DomainError if coeffs[0] == 0.
  SchmidtDiagonal unit_leading() const;
  double norm_sq() const;
  PureState2 to_state() const;

 private:
  std::vector<double> coeffs_;
};

class MixedState2 {
 public:
  explicit MixedState2(int cutoff = 0);
  MixedState2(int cutoff, Eigen::MatrixXcd matrix);

  // |psi><psi| without normalization.
  static MixedState2 projector(const PureState2& psi);

  int cutoff() const { return cutoff_; }
  int mode_dim() const { return cutoff_ + 1; }
  int index(int m, int n) const { return m * (cutoff_ + 1) + n; }

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Complex operator()(int m, int n, int mp, int np) const { return matrix_(index(m, n), index(mp, np)); }

  double trace() const { return matrix_.trace().real(); }
  double purity() const;  // tr(rho^2) / tr(rho)^2

  MixedState2 resized(int cutoff) const;
  Truncated<MixedState2> truncated(int cutoff) const;
  MixedState2 normalized() const;

  // Throws DomainError unless Hermitian within 1e-12 and eigenvalues >= -1e-10.
  void check_density() const;

 private:
  int cutoff_;
  Eigen::MatrixXcd matrix_;
};

// Single-mode density operator on photon numbers 0..cutoff.
struct ReducedState1 {
  Eigen::MatrixXcd matrix;

  int cutoff() const { return static_cast<int>(matrix.rows()) - 1; }
};

double norm_sq(const PureState2& state);
// sum conj(a) b over the common support; the smaller state is zero-padded.
Complex overlap(const PureState2& a, const PureState2& b);

ReducedState1 reduce_to_mode(const PureState2& state, Mode keep);
ReducedState1 reduce_to_mode(const MixedState2& state, Mode keep);

// Von Neumann entropy in bits.
double von_neumann_entropy(const ReducedState1& rho);

// Sum of absolute eigenvalues of a - b (no 1/2 prefactor).
double trace_norm_distance(const MixedState2& a, const MixedState2& b);

// Tolerances shared by the density checks.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kEigenClipTol = 1e-10;

}  // namespace gaussify
