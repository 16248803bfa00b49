#include "gaussify/procrustean.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "gaussify/error.hpp"

namespace gaussify::procrustean {
namespace {

constexpr double kMinClickProbability = 1e-300;
constexpr int kPhaseScanPoints = 72;
constexpr int kGoldenIterations = 60;

double golden_minimize(const auto& f, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < kGoldenIterations; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

Truncated<PureState2> tmsv(double q, int cutoff) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("squeezing parameter q must lie in [0, 1)");
  if (cutoff < 0) throw Error("negative cutoff");
  PureState2 s(cutoff);
  double c = std::sqrt(1.0 - q * q);
  for (int n = 0; n <= cutoff; ++n, c *= q) s(n, n) = c;
  return {std::move(s), std::pow(q, 2.0 * (cutoff + 1))};
}

double tmsv_entropy(double q) {
  if (!(q >= 0.0 && q < 1.0)) throw DomainError("squeezing parameter q must lie in [0, 1)");
  if (q == 0.0) return 0.0;
  const double q2 = q * q;
  return -std::log2(1.0 - q2) - q2 / (1.0 - q2) * std::log2(q2);
}

Amplitudes optimal_t(double q, double target_alpha11) {
  if (q == 0.0) throw DomainError("degenerate: no photons");
  if (!(q > 0.0) || !(target_alpha11 >= 0.0)) throw DomainError("optimal_t needs q > 0 and alpha11 >= 0");
  const double a = target_alpha11;
  const double t = std::abs((a - std::sqrt(a * a + 8.0 * q * q)) / (4.0 * q));
  if (t > 1.0) throw DomainError("no physical transmittivity for this q");
  return {t, std::sqrt(1.0 - t * t)};
}

PrepConfig matched_config(double q, double t, int cutoff) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("heralding amplitude must lie in [0, 1]");
  PrepConfig c;
  c.q = q;
  c.side_a = {std::sqrt(1.0 - t * t), t};
  c.side_b = {0.0, 1.0};
  c.cutoff = cutoff;
  return c;
}

Preparation prepare(const PrepConfig& config) {
  if (!(config.q > 0.0)) throw DomainError("prepare needs q > 0");
  config.side_a.validate();
  config.side_b.validate();
  const PureState2 copy = tmsv(config.q, config.cutoff).state;
  const optics::ClickResult clicks =
      optics::click_project(optics::mix_locally(copy, copy, config.side_a, config.side_b));
  if (clicks.total_probability < kMinClickProbability) throw DomainError("no click support");

  const int c = config.cutoff;
  const int dim = (c + 1) * (c + 1);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const optics::ClickOutcome& o : clicks.outcomes) {
    const PureState2 r = o.residual.resized(c);
    Eigen::VectorXcd w(dim);
    for (int m = 0; m <= c; ++m)
      for (int n = 0; n <= c; ++n) w(m * (c + 1) + n) = r(m, n);
    rho.noalias() += w * w.adjoint();
  }
  MixedState2 state(c, std::move(rho));
  const double kept = state.trace();
  Preparation out{state.normalized(), clicks.total_probability,
                  std::max(0.0, (clicks.total_probability - kept) / clicks.total_probability)};
  return out;
}

MixedState2 target_bell(double phi, int cutoff) {
  if (cutoff < 1) throw Error("target state needs cutoff >= 1");
  PureState2 psi(cutoff);
  psi(0, 0) = 1.0 / std::sqrt(2.0);
  psi(1, 1) = std::polar(1.0 / std::sqrt(2.0), -phi);
  return MixedState2::projector(psi);
}

PhaseFit best_phase_distance(const MixedState2& rho) {
  const int c = std::max(1, rho.cutoff());
  const MixedState2 r = rho.cutoff() == c ? rho : rho.resized(c);
  auto f = [&](double phi) { return trace_norm_distance(r, target_bell(phi, c)); };
  const double step = 2.0 * std::numbers::pi / kPhaseScanPoints;
  int best = 0;
  double best_val = f(0.0);
  for (int k = 1; k < kPhaseScanPoints; ++k) {
    const double v = f(k * step);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  const double phi = golden_minimize(f, (best - 1) * step, (best + 1) * step);
  const double d = f(phi);
  if (d < best_val) return {std::remainder(phi, 2.0 * std::numbers::pi), d};
  return {best * step, best_val};
}

DistillReport distill_from(const MixedState2& seed, double seed_probability, double entanglement_initial,
                           int iterations, int cutoff_ceiling) {
  if (iterations < 0) throw Error("negative iteration count");
  DistillReport rep;
  rep.entanglement_initial = entanglement_initial;
  rep.preparation_probability = seed_probability;
  MixedState2 rho = seed.normalized();
  double cum = 1.0, tree = 1.0, tail = 0.0;
  for (int i = 1; i <= iterations; ++i) {
    Truncated<MixedState2> next = mixed_step(rho, cutoff_ceiling);
    const double kept = next.state.trace();
    const double p = next.tail_mass < 1.0 ? kept / (1.0 - next.tail_mass) : 0.0;
    if (!(kept > 0.0)) throw DomainError("mixed iteration lost all weight");
    tail = 1.0 - (1.0 - tail) * (1.0 - next.tail_mass);
    rho = next.state.normalized();

    IterationReport r;
    r.step = i;
    r.step_probability = p;
    cum *= p;
    tree = tree * tree * p;
    r.cumulative_probability = cum;
    r.cumulative_tree_probability = tree;
    const Complex a00 = rho(0, 0, 0, 0);
    r.norm_sq = a00.real() > 0.0 ? 1.0 / a00.real() : std::numeric_limits<double>::infinity();
    r.tail_mass = tail;
    rep.steps.push_back(r);
  }
  rep.entanglement_final = von_neumann_entropy(reduce_to_mode(rho, Mode::A));
  rep.entanglement_ratio = entanglement_initial > 0.0 ? rep.entanglement_final / entanglement_initial
                                                     : std::numeric_limits<double>::quiet_NaN();
  rep.overall_probability = seed_probability * cum;
  rep.purity = rho.purity();
  rep.tail_mass = tail;
  rep.final_state = std::move(rho);
  return rep;
}

DistillReport distill_pipeline(double q, double T, int iterations, int cutoff) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("squeezing parameter q must lie in (0, 1)");
  const Preparation prep = prepare(matched_config(q, T, cutoff));
  DistillReport rep = distill_from(prep.state, prep.success_probability, tmsv_entropy(q), iterations);
  rep.tail_mass = 1.0 - (1.0 - rep.tail_mass) * (1.0 - prep.tail_mass);
  return rep;
}

}  // namespace gaussify::procrustean
