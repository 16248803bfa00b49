#pragma once

// Pairwise-mixing kernels behind the iteration map.
//
// Both kernels evaluate the bilinear form produced by two identical copies
// meeting at local 50:50 beam splitters with vacuum detected on one output:
//
//   out(m, n) = sum_{r,s} sign(r, s) w(m, r) w(n, s) a(r, s) a(m - r, n - s)
//
// with w(m, r) = 2^{-m/2} sqrt(C(m, r)). Each kernel has an OpenMP version and
// a serial reference; the references are kept for tests and benchmarks.

#include <vector>

#include <Eigen/Dense>

namespace gaussify::kernels {

// Table of 2^{-m} C(m, r) for 0 <= r <= m <= max_m, built by the halving
// Pascal recurrence so entries are symmetric in r <-> m - r bit for bit.
class BinomialTable {
 public:
  explicit BinomialTable(int max_m);

  int max_m() const { return static_cast<int>(rows_.size()) - 1; }
  // 2^{-m} C(m, r)
  double halved(int m, int r) const { return rows_[m][r]; }
  // 2^{-m/2} sqrt(C(m, r))
  double root(int m, int r) const { return roots_[m][r]; }

 private:
  std::vector<std::vector<double>> rows_;
  std::vector<std::vector<double>> roots_;
};

// Sign convention for the pure-state kernel.
enum class SignOn {
  // (-1)^{(m+n)-(r+s)}: the form written as the iteration recurrence.
  SecondCopy,
  // (-1)^{r+s}: what the physical device produces when output port 1 is
  // detected. Equal to SecondCopy whenever both factors are the same state.
  FirstCopy,
};

// Pure-state pair product of a (square, cutoff c) with b (same shape),
// evaluated for 0 <= m, n <= out_cutoff (out_cutoff <= 2c).
Eigen::MatrixXcd pair_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int out_cutoff,
                              SignOn sign = SignOn::SecondCopy);
Eigen::MatrixXcd pair_product_serial(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int out_cutoff,
                                     SignOn sign = SignOn::SecondCopy);

// Density-operator version acting on rho (x) rho. rho is indexed by
// m * (in_cutoff + 1) + n; the result by m * (out_cutoff + 1) + n.
Eigen::MatrixXcd mixed_pair_product(const Eigen::MatrixXcd& rho, int in_cutoff, int out_cutoff);
Eigen::MatrixXcd mixed_pair_product_serial(const Eigen::MatrixXcd& rho, int in_cutoff, int out_cutoff);

// Diagonal of the untruncated mixed product (out_cutoff = 2 * in_cutoff),
// used to account for the weight a truncated product drops.
Eigen::VectorXd mixed_pair_product_diagonal(const Eigen::MatrixXcd& rho, int in_cutoff);

// Schmidt-form product: out_n = sum_r 2^{-n} C(n, r) a_r a_{n-r}, n < out_len.
std::vector<double> schmidt_product(const std::vector<double>& a, std::size_t out_len);

}  // namespace gaussify::kernels
