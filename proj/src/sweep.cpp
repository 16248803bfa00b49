#include "gaussify/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>

#include "gaussify/error.hpp"
#include "gaussify/gaussifier.hpp"
#include "gaussify/procrustean.hpp"

namespace gaussify::sweep {
namespace {

// Rows are filled by index, so the output order never depends on scheduling.
template <class F>
std::vector<std::vector<double>> compute_rows(const std::vector<double>& grid, F row_of) {
  std::vector<std::vector<double>> rows(grid.size());
  std::exception_ptr failure;
  const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      rows[i] = row_of(grid[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<std::string> numbered(const std::string& first, const std::string& prefix, int count) {
  std::vector<std::string> out{first};
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

ProtocolRun<SchmidtDiagonal> lambda_run(double lambda, const SweepSpec& spec, bool fidelity) {
  ProtocolOptions opts;
  opts.cutoff_ceiling = spec.cutoff;
  opts.track_fidelity = fidelity;
  return run_protocol(SchmidtDiagonal::two_level(lambda), spec.iterations, opts);
}

}  // namespace

void SweepSpec::validate() const {
  if (!(start < stop)) throw Error("sweep needs start < stop");
  if (points < 2) throw Error("sweep needs at least 2 points");
  if (iterations < 0) throw Error("negative iteration count");
  if (cutoff < 1) throw Error("sweep cutoff must be positive");
  switch (parameter) {
    case Parameter::Lambda:
      if (start < 0.0 || stop >= 1.0) throw Error("lambda must lie in [0, 1)");
      break;
    case Parameter::Q:
      if (start <= 0.0 || stop >= 1.0) throw Error("q must lie in (0, 1)");
      break;
    case Parameter::T:
      if (start < 0.0 || stop > 1.0) throw Error("T must lie in [0, 1]");
      if (!(q > 0.0 && q < 1.0)) throw Error("q must lie in (0, 1)");
      break;
  }
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = start + (stop - start) * i / (points - 1);
  g.back() = stop;
  return g;
}

Table figure2(const SweepSpec& spec) {
  spec.validate();
  if (spec.parameter != Parameter::Lambda) throw DomainError("figure 2 sweeps lambda");
  Table t{numbered("lambda", "p", spec.iterations), {}};
  t.rows = compute_rows(spec.grid(), [&](double lambda) {
    std::vector<double> row{lambda};
    for (const IterationReport& r : lambda_run(lambda, spec, false).reports) row.push_back(r.cumulative_probability);
    return row;
  });
  return t;
}

Table figure3(const SweepSpec& spec) {
  spec.validate();
  if (spec.parameter != Parameter::Lambda) throw DomainError("figure 3 sweeps lambda");
  Table t{numbered("lambda", "F", spec.iterations), {}};
  t.rows = compute_rows(spec.grid(), [&](double lambda) {
    std::vector<double> row{lambda};
    for (const IterationReport& r : lambda_run(lambda, spec, true).reports) row.push_back(r.fidelity_to_limit);
    return row;
  });
  return t;
}

Table figure4(const SweepSpec& spec) {
  spec.validate();
  if (spec.parameter != Parameter::T) throw DomainError("figure 4 sweeps T");
  Table t{{"T", "entanglement_ratio", "overall_probability", "purity", "T_sq"}, {}};
  t.rows = compute_rows(spec.grid(), [&](double T) {
    const procrustean::DistillReport r = procrustean::distill_pipeline(spec.q, T, spec.iterations, spec.cutoff);
    return std::vector<double>{T, r.entanglement_ratio, r.overall_probability, r.purity, T * T};
  });
  return t;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

}  // namespace gaussify::sweep
