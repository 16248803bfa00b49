#pragma once

// Seed preparation from two-mode squeezed vacua: two copies meet at local
// beam splitters, both measured modes must click, and the retained modes form
// an approximately maximally entangled two-qubit state for small q. Also the
// full distillation pipeline (preparation followed by mixed iteration steps).

#include <vector>

#include "gaussify/fock.hpp"
#include "gaussify/gaussifier.hpp"
#include "gaussify/optics.hpp"

namespace gaussify::procrustean {

// sqrt(1 - q^2) sum_n q^n |n, n> for n <= cutoff, not renormalized; tail_mass
// is q^{2(cutoff+1)}. Throws DomainError unless 0 <= q < 1.
Truncated<PureState2> tmsv(double q, int cutoff);

// Entropy of one mode of the untruncated TMSV, in bits.
double tmsv_entropy(double q);

struct Amplitudes {
  double t;
  double r;
};

// |t| = |(a - sqrt(a^2 + 8 q^2)) / (4 q)| with a = target_alpha11, |r| = sqrt(1 - t^2).
// Throws DomainError for q == 0 or negative arguments.
Amplitudes optimal_t(double q, double target_alpha11 = 1.0);

struct PrepConfig {
  double q = 0.01;
  optics::BeamSplitter side_a;
  optics::BeamSplitter side_b;
  int cutoff = 10;  // per mode, for the TMSV copies and the output state
};

// Side B fully reflecting, side A with heralding amplitude t: the photon that
// clicks on A crosses with amplitude R_A = t, so side_a = (sqrt(1 - t^2), t).
PrepConfig matched_config(double q, double t, int cutoff = 10);

struct Preparation {
  MixedState2 state;  // unit trace
  double success_probability = 0.0;
  // Weight of the click branches dropped at the output cutoff, relative to
  // the total click probability.
  double tail_mass = 0.0;
};

// Throws DomainError("no click support") below click probability 1e-300.
Preparation prepare(const PrepConfig& config);

// (|0,0> + e^{-i phi} |1,1>)/sqrt2 as a projector at the given cutoff (>= 1).
MixedState2 target_bell(double phi, int cutoff = 1);

struct PhaseFit {
  double phi = 0.0;
  double distance = 0.0;  // trace norm |rho - rho+(phi)|_1
};

// Phase scan followed by golden-section refinement.
PhaseFit best_phase_distance(const MixedState2& rho);

struct DistillReport {
  double entanglement_initial = 0.0;
  double entanglement_final = 0.0;
  double entanglement_ratio = 0.0;
  double preparation_probability = 0.0;
  // Preparation probability times the product of vacuum probabilities.
  double overall_probability = 0.0;
  double purity = 0.0;  // of the final state
  double tail_mass = 0.0;
  std::vector<IterationReport> steps;
  MixedState2 final_state;
};

// Iterates mixed_step `iterations` times from a normalized seed. The output
// cutoff of each step is capped at cutoff_ceiling.
DistillReport distill_from(const MixedState2& seed, double seed_probability, double entanglement_initial,
                           int iterations, int cutoff_ceiling = 12);

// prepare(matched_config(q, T, cutoff)) followed by distill_from. The initial
// entanglement is that of one TMSV copy.
DistillReport distill_pipeline(double q, double T, int iterations, int cutoff = 10);

}  // namespace gaussify::procrustean
