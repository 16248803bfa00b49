#pragma once

// The iteration map: two identical copies mixed locally at 50:50 splitters,
// vacuum post-selected on both detectors. Schmidt-form fast path, general
// two-mode form, density-operator form, and the multi-step driver.

#include <limits>
#include <string>
#include <vector>

#include "gaussify/fock.hpp"

namespace gaussify {

// alpha'_n = 2^{-n} sum_r C(n, r) alpha_r alpha_{n-r}; output length 2L - 1.
// Throws DomainError when alpha_0 == 0.
SchmidtDiagonal schmidt_step(const SchmidtDiagonal& alpha);

// alpha'_{m,n} = 2^{-(m+n)/2} sum_{r,s} (-1)^{(m+n)-(r+s)} alpha_{r,s}
//                alpha_{m-r,n-s} [C(m,r) C(n,s)]^{1/2}
// Full output has cutoff 2c; out_cutoff in [0, 2c] truncates it.
PureState2 general_step(const PureState2& alpha);
PureState2 general_step(const PureState2& alpha, int out_cutoff);

// <after|after> / <before|before>^2 : vacuum probability of one step.
double step_probability(const PureState2& before, const PureState2& after);
double step_probability(const SchmidtDiagonal& before, const SchmidtDiagonal& after);

// |<a|b>|^2 / (<a|a><b|b>)
double fidelity_to(const PureState2& state, const PureState2& target);

// Un-normalized conditional state of rho (x) rho after the device, truncated
// to out_cutoff (default: untruncated, 2c). On |psi><psi| it equals the
// projector onto general_step(psi).
MixedState2 mixed_step(const MixedState2& rho);
Truncated<MixedState2> mixed_step(const MixedState2& rho, int out_cutoff);

struct IterationReport {
  int step = 0;
  double step_probability = 0.0;
  // Product of step probabilities: one specific measurement chain succeeds.
  double cumulative_probability = 1.0;
  // P_i = P_{i-1}^2 p_i: both input copies had to be produced first.
  double cumulative_tree_probability = 1.0;
  // Squared norm of the iterate scaled to alpha(0,0) = 1.
  double norm_sq = 0.0;
  double fidelity_to_limit = std::numeric_limits<double>::quiet_NaN();
  // Accumulated relative weight dropped at the cutoff ceiling.
  double tail_mass = 0.0;
};

enum class ProtocolStatus {
  Converging,       // limit exists (spectral norm < 1)
  NotNormalizable,  // coefficients converge but the limit state does not
  Diverged,         // norm guard tripped; run stopped early
};

struct ProtocolOptions {
  int cutoff_ceiling = 64;
  double tail_tol = 1e-10;
  double divergence_norm_sq = 1e6;
  bool track_fidelity = true;
};

template <class State>
struct ProtocolRun {
  State final_state;
  std::vector<IterationReport> reports;
  ProtocolStatus status = ProtocolStatus::Converging;
  std::string diagnostic;
};

// Schmidt inputs stay on the diagonal fast path; iterates are kept at
// alpha_0 = 1. Throws DomainError when alpha_0 == 0.
ProtocolRun<SchmidtDiagonal> run_protocol(const SchmidtDiagonal& initial, int iterations,
                                          const ProtocolOptions& options = {});
// General inputs; iterates are kept at unit norm. Throws DomainError when
// alpha(0,0) == 0.
ProtocolRun<PureState2> run_protocol(const PureState2& initial, int iterations, const ProtocolOptions& options = {});

}  // namespace gaussify
