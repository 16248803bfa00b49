#pragma once

// Parameter sweeps behind the three figure CSVs. Grid points are computed in
// parallel and assembled in grid order.

#include <iosfwd>
#include <string>
#include <vector>

namespace gaussify::sweep {

enum class Parameter { Lambda, Q, T };

struct SweepSpec {
  Parameter parameter = Parameter::Lambda;
  double start = 0.0;
  double stop = 0.9;
  int points = 19;
  int iterations = 3;
  int cutoff = 64;   // ceiling for lambda sweeps, mixed cutoff for T sweeps
  double q = 0.01;   // fixed squeezing for T sweeps

  // Throws Error on violated ranges.
  void validate() const;
  // Evenly spaced from start to stop inclusive.
  std::vector<double> grid() const;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// lambda, p1..pN: cumulative product probabilities of the (1, lambda) family.
Table figure2(const SweepSpec& spec);
// lambda, F1..FN: fidelity to the lambda^n limit.
Table figure3(const SweepSpec& spec);
// T, entanglement_ratio, overall_probability, purity, T_sq.
Table figure4(const SweepSpec& spec);

// Comma-separated, header row, LF endings, 12 significant digits.
void write_csv(std::ostream& out, const Table& table);
std::string format_number(double v);

}  // namespace gaussify::sweep
