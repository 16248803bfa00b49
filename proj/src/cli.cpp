#include "gaussify/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gaussify/error.hpp"
#include "gaussify/fixed_point.hpp"
#include "gaussify/gaussifier.hpp"
#include "gaussify/procrustean.hpp"
#include "gaussify/state_io.hpp"
#include "gaussify/sweep.hpp"

namespace gaussify::cli {
namespace {

using sweep::format_number;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string state;
  int iters = 3;
  std::optional<int> cutoff;
  double tail_tol = 1e-10;
  std::string out;
  std::string report;
  std::optional<double> q;
  std::optional<double> T;
  std::optional<double> lambda;
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<int> points;
  int figure = 2;
};

double parse_value(const std::string& text, const std::string& what) {
  double v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

// Either a Schmidt-form input (fast path) or a general two-mode state.
struct Input {
  std::optional<SchmidtDiagonal> schmidt;
  PureState2 general;
};

Input resolve_input(const Options& o, int tmsv_cutoff) {
  std::string spec = o.state;
  if (spec.empty()) {
    if (!o.lambda) throw UsageError("a state argument or --lambda is required");
    return {SchmidtDiagonal::two_level(*o.lambda), PureState2()};
  }
  if (spec.rfind("schmidt:", 0) == 0)
    return {SchmidtDiagonal::two_level(parse_value(spec.substr(8), "lambda")), PureState2()};
  if (spec.rfind("tmsv:", 0) == 0) {
    const double q = parse_value(spec.substr(5), "q");
    if (!(q >= 0.0 && q < 1.0)) throw DomainError("squeezing parameter q must lie in [0, 1)");
    std::vector<double> c(tmsv_cutoff + 1, 1.0);
    for (int n = 1; n <= tmsv_cutoff; ++n) c[n] = c[n - 1] * q;
    return {SchmidtDiagonal(std::move(c)), PureState2()};
  }
  if (spec.rfind("file:", 0) == 0) spec = spec.substr(5);
  return {std::nullopt, read_state_file(spec)};
}

// Writes to `path`, or to `fallback` when path is empty.
template <class F>
void emit(const std::string& path, std::ostream& fallback, F write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write(f);
}

void write_reports(std::ostream& os, const std::vector<IterationReport>& reports) {
  os << "step,step_prob,cum_prob_product,cum_prob_tree,norm_sq,fidelity,tail_mass\n";
  for (const IterationReport& r : reports)
    os << r.step << ',' << format_number(r.step_probability) << ',' << format_number(r.cumulative_probability) << ','
       << format_number(r.cumulative_tree_probability) << ',' << format_number(r.norm_sq) << ','
       << format_number(r.fidelity_to_limit) << ',' << format_number(r.tail_mass) << '\n';
}

std::string format_complex(Complex z) { return format_number(z.real()) + "," + format_number(z.imag()); }

int finish_run(const std::string& diagnostic, ProtocolStatus status, std::ostream& err) {
  if (status == ProtocolStatus::Converging) return kOk;
  err << "gaussify: " << diagnostic << '\n';
  return kDomain;
}

int cmd_iterate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.iters < 0) throw UsageError("--iters must be non-negative");
  ProtocolOptions opts;
  opts.cutoff_ceiling = o.cutoff.value_or(64);
  opts.tail_tol = o.tail_tol;
  const Input in = resolve_input(o, opts.cutoff_ceiling);
  if (in.schmidt) {
    const auto run = run_protocol(*in.schmidt, o.iters, opts);
    emit(o.report, out, [&](std::ostream& os) { write_reports(os, run.reports); });
    if (!o.out.empty()) write_state_file(o.out, run.final_state.to_state());
    return finish_run(run.diagnostic, run.status, err);
  }
  const auto run = run_protocol(in.general, o.iters, opts);
  emit(o.report, out, [&](std::ostream& os) { write_reports(os, run.reports); });
  if (!o.out.empty()) write_state_file(o.out, run.final_state);
  return finish_run(run.diagnostic, run.status, err);
}

int cmd_fixed_point(const Options& o, std::ostream& out, std::ostream&) {
  const int cutoff = o.cutoff.value_or(16);
  const Input in = resolve_input(o, cutoff);
  const PureState2 state = in.schmidt ? in.schmidt->to_state() : in.general;
  const fixed_point::GammaMatrix g = fixed_point::gamma_from_state(state);
  const double norm = fixed_point::spectral_norm(g);
  out << "gamma_11," << format_complex(g.g1) << '\n';
  out << "gamma_12," << format_complex(g.g12) << '\n';
  out << "gamma_22," << format_complex(g.g2) << '\n';
  out << "spectral_norm," << format_number(norm) << '\n';
  if (norm >= 1.0) {
    out << "verdict,not normalizable\n";
    return kDomain;
  }
  out << "verdict,normalizable\n";
  const fixed_point::SqueezingParams sp = fixed_point::squeezing_params(g);
  out << "squeezing," << format_number(sp.singular_values[0]) << ',' << format_number(sp.singular_values[1]) << '\n';
  out << "limit_norm_sq," << format_number(fixed_point::limit_norm_sq(g)) << '\n';
  if (!o.out.empty()) write_state_file(o.out, fixed_point::limit_coefficients(g, cutoff));
  return kOk;
}

double require_q(const Options& o) {
  if (!o.q) throw UsageError("--q is required");
  return *o.q;
}

int cmd_prepare(const Options& o, std::ostream& out, std::ostream&) {
  const double q = require_q(o);
  const double t = o.T ? *o.T : procrustean::optimal_t(q).t;
  const procrustean::Preparation p = procrustean::prepare(procrustean::matched_config(q, t, o.cutoff.value_or(10)));
  const procrustean::PhaseFit fit = procrustean::best_phase_distance(p.state);
  const double e = von_neumann_entropy(reduce_to_mode(p.state, Mode::A));
  emit(o.out, out, [&](std::ostream& os) {
    os << "q,T,success_probability,purity,entropy,trace_distance,phi,tail_mass\n";
    os << format_number(q) << ',' << format_number(t) << ',' << format_number(p.success_probability) << ','
       << format_number(p.state.purity()) << ',' << format_number(e) << ',' << format_number(fit.distance) << ','
       << format_number(fit.phi) << ',' << format_number(p.tail_mass) << '\n';
  });
  return kOk;
}

int cmd_distill(const Options& o, std::ostream& out, std::ostream&) {
  const double q = require_q(o);
  if (o.iters < 0) throw UsageError("--iters must be non-negative");
  const double t = o.T ? *o.T : procrustean::optimal_t(q).t;
  const procrustean::DistillReport r = procrustean::distill_pipeline(q, t, o.iters, o.cutoff.value_or(10));
  emit(o.out, out, [&](std::ostream& os) {
    os << "q,T,iterations,entanglement_initial,entanglement_final,entanglement_ratio,preparation_probability,"
          "overall_probability,purity,tail_mass\n";
    os << format_number(q) << ',' << format_number(t) << ',' << o.iters << ',' << format_number(r.entanglement_initial)
       << ',' << format_number(r.entanglement_final) << ',' << format_number(r.entanglement_ratio) << ','
       << format_number(r.preparation_probability) << ',' << format_number(r.overall_probability) << ','
       << format_number(r.purity) << ',' << format_number(r.tail_mass) << '\n';
  });
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream&) {
  sweep::SweepSpec s;
  s.iterations = o.iters;
  if (o.figure == 4) {
    s.parameter = sweep::Parameter::T;
    s.start = 0.001;
    s.stop = 0.1;
    s.points = 30;
    s.cutoff = 10;
    s.q = o.q.value_or(0.01);
  } else {
    s.parameter = sweep::Parameter::Lambda;
    s.start = 0.0;
    s.stop = 0.9;
    s.points = 19;
    s.cutoff = 64;
  }
  if (o.start) s.start = *o.start;
  if (o.stop) s.stop = *o.stop;
  if (o.points) s.points = *o.points;
  if (o.cutoff) s.cutoff = *o.cutoff;
  const sweep::Table t = o.figure == 2 ? sweep::figure2(s) : o.figure == 3 ? sweep::figure3(s) : sweep::figure4(s);
  emit(o.out, out, [&](std::ostream& os) { sweep::write_csv(os, t); });
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussification protocol simulator", "gaussify"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--cutoff", o.cutoff, "Photon-number cutoff per mode");
    sub->add_option("--out", o.out, "Output path");
  };

  CLI::App* iterate = app.add_subcommand("iterate", "Run the protocol on one input state");
  iterate->add_option("state", o.state, "schmidt:<lambda>, tmsv:<q>, file:<path> or a state file");
  iterate->add_option("--iters", o.iters, "Number of iterations");
  iterate->add_option("--tail-tol", o.tail_tol, "Tail tolerance for the limit state");
  iterate->add_option("--lambda", o.lambda, "Shorthand for schmidt:<lambda>");
  iterate->add_option("--report", o.report, "CSV report path (default stdout)");
  add_common(iterate);

  CLI::App* sw = app.add_subcommand("sweep", "Figure CSVs");
  sw->add_option("--figure", o.figure, "2, 3 or 4")->required()->check(CLI::IsMember({2, 3, 4}));
  sw->add_option("--iters", o.iters, "Number of iterations");
  sw->add_option("--points", o.points, "Grid points");
  sw->add_option("--start", o.start, "Grid start");
  sw->add_option("--stop", o.stop, "Grid stop");
  sw->add_option("--q", o.q, "Squeezing parameter (figure 4)");
  add_common(sw);

  CLI::App* fp = app.add_subcommand("fixed-point", "Gaussian limit of a state");
  fp->add_option("state", o.state, "schmidt:<lambda>, tmsv:<q>, file:<path> or a state file");
  fp->add_option("--lambda", o.lambda, "Shorthand for schmidt:<lambda>");
  add_common(fp);

  CLI::App* prep = app.add_subcommand("prepare", "Click-heralded seed from two TMSV copies");
  prep->add_option("--q", o.q, "Squeezing parameter");
  prep->add_option("--T", o.T, "Heralding amplitude (default: matched to q)");
  add_common(prep);

  CLI::App* dist = app.add_subcommand("distill", "Preparation followed by mixed iterations");
  dist->add_option("--q", o.q, "Squeezing parameter");
  dist->add_option("--T", o.T, "Heralding amplitude (default: matched to q)");
  dist->add_option("--iters", o.iters, "Number of iterations");
  add_common(dist);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "gaussify: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (iterate->parsed()) return cmd_iterate(o, out, err);
    if (sw->parsed()) return cmd_sweep(o, out, err);
    if (fp->parsed()) return cmd_fixed_point(o, out, err);
    if (prep->parsed()) return cmd_prepare(o, out, err);
    if (dist->parsed()) return cmd_distill(o, out, err);
  } catch (const ParseError& e) {
    err << "gaussify: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    err << "gaussify: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "gaussify: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gaussify::cli
