#pragma once

// Beam splitters in the Fock basis and the local pairwise-mixing device.
//
// The beam splitter is the operator-ordered form
//
//   U(T, R) = T^{n1} exp(-R* a2^dag a1) exp(R a2 a1^dag) T^{-n2},
//
// which sends creation operators to a1^dag -> T a1^dag - R* a2^dag and
// a2^dag -> R a1^dag + T* a2^dag. In the mixing device two copies of a
// two-mode state (modes A1 B1 and A2 B2) meet at one splitter per side, on
// modes (A1, A2) and (B1, B2). Output port 1 of each splitter goes to the
// detector and port 2 is retained; with T = R = 1/sqrt(2) this reproduces the
// sign pattern of the iteration recurrence.

#include <vector>

#include <Eigen/Dense>

#include "gaussify/fock.hpp"

namespace gaussify::optics {

struct BeamSplitter {
  Complex T;
  Complex R;

  static BeamSplitter balanced();
  // |T|^2 + |R|^2 = 1 within 1e-12, else DomainError.
  void validate() const;
  // Parameters of U^dag.
  BeamSplitter inverse() const { return {std::conj(T), -R}; }
};

// Fock matrix of a beam splitter restricted to total photon number N <= max_total.
class BSMatrix {
 public:
  BSMatrix(BeamSplitter bs, std::vector<Eigen::MatrixXcd> blocks) : bs_(bs), blocks_(std::move(blocks)) {}

  const BeamSplitter& splitter() const { return bs_; }
  int max_total() const { return static_cast<int>(blocks_.size()) - 1; }
  // block(N)(m, p) = <m, N-m| U |p, N-p>
  const Eigen::MatrixXcd& block(int total) const { return blocks_.at(total); }
  // <m1, m2| U |p1, p2>; zero unless m1 + m2 == p1 + p2.
  Complex element(int m1, int m2, int p1, int p2) const;

 private:
  BeamSplitter bs_;
  std::vector<Eigen::MatrixXcd> blocks_;
};

// Blocks for every total photon number up to 2 * cutoff.
BSMatrix bs_matrix(const BeamSplitter& bs, int cutoff);

// Dense four-mode amplitude table with the same dimension on every mode.
// Scratch space for the mixing device; mode order is (A1, A2, B1, B2) before
// the splitters and (A detected, A retained, B detected, B retained) after.
class FourModeState {
 public:
  explicit FourModeState(int mode_dim);

  // copy1 occupies (A1, B1) and copy2 (A2, B2). The per-mode dimension is
  // large enough to hold both copies' photons in one mode.
  static FourModeState product(const PureState2& copy1, const PureState2& copy2);

  int mode_dim() const { return d_; }
  Complex& operator()(int a1, int a2, int b1, int b2) { return amps_[offset(a1, a2, b1, b2)]; }
  Complex operator()(int a1, int a2, int b1, int b2) const { return amps_[offset(a1, a2, b1, b2)]; }
  double norm_sq() const;

  // Applies the splitter to modes (0, 1) for Side A or (2, 3) for Side B.
  enum class Side { A, B };
  FourModeState apply(const BSMatrix& bs, Side side) const;

 private:
  std::size_t offset(int a1, int a2, int b1, int b2) const {
    return ((static_cast<std::size_t>(a1) * d_ + a2) * d_ + b1) * d_ + b2;
  }

  int d_;
  std::vector<Complex> amps_;
};

// Both copies through the device with the given splitters on each side.
FourModeState mix_locally(const PureState2& copy1, const PureState2& copy2, const BeamSplitter& side_a,
                          const BeamSplitter& side_b);

// Retained two-mode amplitudes conditional on (detected_a, detected_b) photons.
PureState2 project_detectors(const FourModeState& state, int detected_a, int detected_b);

// Brute-force pairwise mixing with vacuum found on both detectors. Returns the
// un-normalized residue on the retained ports; its cutoff is the sum of the
// input cutoffs.
PureState2 mix_pair_and_project_vacuum(const PureState2& copy1, const PureState2& copy2, const BeamSplitter& bs);

struct ClickOutcome {
  int photons_a;
  int photons_b;
  PureState2 residual;  // un-normalized; squared norm equals weight
  double weight;
};

struct ClickResult {
  std::vector<ClickOutcome> outcomes;  // ordered by (photons_a, photons_b)
  double total_probability = 0.0;
  // Weight missing from the four-mode state relative to a normalized input.
  double tail_mass = 0.0;
};

// Outcomes with at least one photon on each detector (the projector
// (1 - |0><0|) (x) (1 - |0><0|)). Zero-weight outcomes are omitted.
ClickResult click_project(const FourModeState& state);

}  // namespace gaussify::optics
