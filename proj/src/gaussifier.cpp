#include "gaussify/gaussifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gaussify/error.hpp"
#include "gaussify/fixed_point.hpp"
#include "gaussify/kernels.hpp"

namespace gaussify {
namespace {

// 1 - (1 - a)(1 - b): relative weight lost over two successive truncations.
double compound_tail(double a, double b) { return 1.0 - (1.0 - a) * (1.0 - b); }

std::string divergence_message(int step, double norm) {
  std::ostringstream os;
  os << "iterate diverged at step " << step << ": norm_sq " << norm << " in the alpha(0,0) = 1 convention";
  return os.str();
}

// lambda^n up to the smallest n with relative tail lambda^{2(n+1)} < tail_tol.
std::vector<double> schmidt_limit(double lambda, double tail_tol) {
  std::vector<double> out{1.0};
  if (lambda <= 0.0) return out;
  double v = 1.0;
  while (v * v >= tail_tol && out.size() < 8192) {
    v *= lambda;
    out.push_back(v);
  }
  return out;
}

double schmidt_fidelity(const std::vector<double>& a, const std::vector<double>& b) {
  double ov = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) ov += a[n] * b[n];
  for (double x : a) na += x * x;
  for (double x : b) nb += x * x;
  return ov * ov / (na * nb);
}

}  // namespace

SchmidtDiagonal schmidt_step(const SchmidtDiagonal& alpha) {
  if (alpha[0] == 0.0) throw DomainError("protocol degenerate: alpha(0,0) = 0 has no Gaussian limit");
  return SchmidtDiagonal(kernels::schmidt_product(alpha.coeffs(), 2 * alpha.size() - 1));
}

PureState2 general_step(const PureState2& alpha) { return general_step(alpha, 2 * alpha.cutoff()); }

PureState2 general_step(const PureState2& alpha, int out_cutoff) {
  const Eigen::MatrixXcd& a = alpha.amplitudes();
  return PureState2(kernels::pair_product(a, a, out_cutoff, kernels::SignOn::SecondCopy));
}

double step_probability(const PureState2& before, const PureState2& after) {
  const double nb = norm_sq(before);
  if (!(nb > 0.0)) throw DomainError("step probability of a zero-norm state");
  return norm_sq(after) / (nb * nb);
}

double step_probability(const SchmidtDiagonal& before, const SchmidtDiagonal& after) {
  const double nb = before.norm_sq();
  if (!(nb > 0.0)) throw DomainError("step probability of a zero-norm state");
  return after.norm_sq() / (nb * nb);
}

double fidelity_to(const PureState2& state, const PureState2& target) {
  const double na = norm_sq(state), nb = norm_sq(target);
  if (!(na > 0.0) || !(nb > 0.0)) throw DomainError("fidelity of a zero-norm state");
  return std::norm(overlap(state, target)) / (na * nb);
}

MixedState2 mixed_step(const MixedState2& rho) { return mixed_step(rho, 2 * rho.cutoff()).state; }

Truncated<MixedState2> mixed_step(const MixedState2& rho, int out_cutoff) {
  if (!(rho.trace() > 0.0)) throw DomainError("mixed step of a zero-trace state");
  const int c = rho.cutoff();
  out_cutoff = std::min(out_cutoff, 2 * c);
  MixedState2 out(out_cutoff, kernels::mixed_pair_product(rho.matrix(), c, out_cutoff));
  if (out_cutoff == 2 * c) return {std::move(out), 0.0};
  const double full = kernels::mixed_pair_product_diagonal(rho.matrix(), c).sum();
  const double tail = full > 0.0 ? std::max(0.0, (full - out.trace()) / full) : 0.0;
  return {std::move(out), tail};
}

ProtocolRun<SchmidtDiagonal> run_protocol(const SchmidtDiagonal& initial, int iterations,
                                          const ProtocolOptions& options) {
  if (iterations < 0) throw Error("negative iteration count");
  if (initial[0] == 0.0) throw DomainError("no Gaussian limit: alpha(0,0) = 0");

  ProtocolRun<SchmidtDiagonal> run{initial.unit_leading(), {}, ProtocolStatus::Converging, {}};
  const double lambda = run.final_state.size() > 1 ? run.final_state[1] : 0.0;
  if (lambda >= 1.0) {
    run.status = ProtocolStatus::NotNormalizable;
    run.diagnostic = "not normalizable: alpha(1,1)/alpha(0,0) = " + std::to_string(lambda) + " >= 1";
  }
  std::vector<double> limit;
  if (options.track_fidelity && lambda < 1.0) limit = schmidt_limit(lambda, options.tail_tol);

  double cum = 1.0, tree = 1.0, tail = 0.0;
  for (int i = 1; i <= iterations; ++i) {
    const SchmidtDiagonal& prev = run.final_state;
    SchmidtDiagonal full = schmidt_step(prev);
    const double p = step_probability(prev, full);
    const std::size_t keep = std::min<std::size_t>(full.size(), options.cutoff_ceiling + 1);
    std::vector<double> kept(full.coeffs().begin(), full.coeffs().begin() + keep);
    SchmidtDiagonal next(std::move(kept));
    tail = compound_tail(tail, 1.0 - next.norm_sq() / full.norm_sq());
    next = next.unit_leading();

    IterationReport rep;
    rep.step = i;
    rep.step_probability = p;
    cum *= p;
    tree = tree * tree * p;
    rep.cumulative_probability = cum;
    rep.cumulative_tree_probability = tree;
    rep.norm_sq = next.norm_sq();
    rep.tail_mass = tail;
    if (!limit.empty()) rep.fidelity_to_limit = schmidt_fidelity(next.coeffs(), limit);
    run.reports.push_back(rep);
    run.final_state = std::move(next);

    if (rep.norm_sq > options.divergence_norm_sq) {
      run.status = ProtocolStatus::Diverged;
      run.diagnostic = divergence_message(i, rep.norm_sq);
      break;
    }
  }
  return run;
}

ProtocolRun<PureState2> run_protocol(const PureState2& initial, int iterations, const ProtocolOptions& options) {
  if (iterations < 0) throw Error("negative iteration count");
  const fixed_point::GammaMatrix gamma = fixed_point::gamma_from_state(initial);
  const double gnorm = fixed_point::spectral_norm(gamma);

  ProtocolRun<PureState2> run{initial.normalized(), {}, ProtocolStatus::Converging, {}};
  if (gnorm >= 1.0) {
    run.status = ProtocolStatus::NotNormalizable;
    run.diagnostic = "not normalizable: spectral norm of Gamma = " + std::to_string(gnorm) + " >= 1";
  }
  PureState2 limit;
  bool have_limit = false;
  if (options.track_fidelity && gnorm < 1.0) {
    limit = fixed_point::limit_state(gamma, options.tail_tol, std::max(8, options.cutoff_ceiling)).state;
    have_limit = true;
  }

  double cum = 1.0, tree = 1.0, tail = 0.0;
  for (int i = 1; i <= iterations; ++i) {
    const PureState2& prev = run.final_state;
    const PureState2 full = general_step(prev);
    const double p = step_probability(prev, full);
    Truncated<PureState2> cut = full.truncated(std::min(full.cutoff(), options.cutoff_ceiling));
    tail = compound_tail(tail, cut.tail_mass);

    IterationReport rep;
    rep.step = i;
    rep.step_probability = p;
    cum *= p;
    tree = tree * tree * p;
    rep.cumulative_probability = cum;
    rep.cumulative_tree_probability = tree;
    rep.norm_sq = norm_sq(cut.state) / std::norm(cut.state(0, 0));
    rep.tail_mass = tail;
    if (have_limit) rep.fidelity_to_limit = fidelity_to(cut.state, limit);
    run.reports.push_back(rep);
    run.final_state = cut.state.normalized();

    if (rep.norm_sq > options.divergence_norm_sq) {
      run.status = ProtocolStatus::Diverged;
      run.diagnostic = divergence_message(i, rep.norm_sq);
      break;
    }
  }
  return run;
}

}  // namespace gaussify
