#include "gaussify/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "gaussify/error.hpp"

namespace gaussify::kernels {
namespace {

using Complex = std::complex<double>;

inline double parity(int k) { return (k & 1) ? -1.0 : 1.0; }

void check_square(const Eigen::MatrixXcd& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) throw Error(std::string(what) + ": amplitude table must be square");
}

// Row-major copy with the same index convention as MixedState2.
std::vector<Complex> row_major(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  std::vector<Complex> out(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[i * n + j] = m(i, j);
  return out;
}

// Signed weights (-1)^r 2^{-m/2} sqrt(C(m, r)), zero where r is out of range
// for an input of cutoff c (r > c or m - r > c).
std::vector<std::vector<double>> signed_weights(const BinomialTable& table, int out_cutoff, int in_cutoff) {
  std::vector<std::vector<double>> w(out_cutoff + 1);
  for (int m = 0; m <= out_cutoff; ++m) {
    w[m].assign(m + 1, 0.0);
    for (int r = std::max(0, m - in_cutoff); r <= std::min(m, in_cutoff); ++r) w[m][r] = parity(r) * table.root(m, r);
  }
  return w;
}

// One output row i = (m, n), columns j >= i, of the mixed product.
void mixed_row(const std::vector<Complex>& rho, int c, int oc, const std::vector<std::vector<double>>& w, int m,
               int n, Eigen::MatrixXcd& out) {
  const int d = c + 1;
  const int dd = d * d;
  const int od = oc + 1;
  const int i = m * od + n;
  const int r_lo = std::max(0, m - c), r_hi = std::min(m, c);
  const int s_lo = std::max(0, n - c), s_hi = std::min(n, c);
  for (int mp = 0; mp <= oc; ++mp) {
    const int rp_lo = std::max(0, mp - c), rp_hi = std::min(mp, c);
    for (int np = 0; np <= oc; ++np) {
      const int j = mp * od + np;
      if (j < i) continue;
      const int sp_lo = std::max(0, np - c), sp_hi = std::min(np, c);
      Complex acc = 0.0;
      for (int r = r_lo; r <= r_hi; ++r) {
        for (int s = s_lo; s <= s_hi; ++s) {
          const double wrs = w[m][r] * w[n][s];
          const Complex* row1 = &rho[static_cast<std::size_t>(r * d + s) * dd];
          const Complex* row2 = &rho[static_cast<std::size_t>((m - r) * d + (n - s)) * dd];
          for (int rp = rp_lo; rp <= rp_hi; ++rp) {
            Complex inner = 0.0;
            const int base1 = rp * d;
            const int base2 = (mp - rp) * d + np;
            for (int sp = sp_lo; sp <= sp_hi; ++sp) inner += w[np][sp] * row1[base1 + sp] * row2[base2 - sp];
            acc += wrs * w[mp][rp] * inner;
          }
        }
      }
      out(i, j) = acc;
    }
  }
}

void mirror_upper(Eigen::MatrixXcd& out) {
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    out(i, i) = Complex(out(i, i).real(), 0.0);
    for (Eigen::Index j = i + 1; j < out.cols(); ++j) out(j, i) = std::conj(out(i, j));
  }
}

}  // namespace

BinomialTable::BinomialTable(int max_m) {
  if (max_m < 0) throw Error("negative binomial table size");
  rows_.resize(max_m + 1);
  roots_.resize(max_m + 1);
  rows_[0] = {1.0};
  for (int m = 1; m <= max_m; ++m) {
    rows_[m].assign(m + 1, 0.0);
    rows_[m][0] = rows_[m][m] = 0.5 * rows_[m - 1][0];
    for (int r = 1; r < m; ++r) rows_[m][r] = 0.5 * (rows_[m - 1][r - 1] + rows_[m - 1][r]);
  }
  for (int m = 0; m <= max_m; ++m) {
    roots_[m].resize(m + 1);
    for (int r = 0; r <= m; ++r) roots_[m][r] = std::sqrt(rows_[m][r]);
  }
}

Eigen::MatrixXcd pair_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int out_cutoff, SignOn sign) {
  check_square(a, "pair_product");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("pair_product: shape mismatch");
  const int c = static_cast<int>(a.rows()) - 1;
  if (out_cutoff < 0 || out_cutoff > 2 * c) throw Error("pair_product: output cutoff out of range");
  const BinomialTable table(out_cutoff);
  // FirstCopy signs ride on (r, s); SecondCopy signs are the same up to the
  // global (-1)^{m+n} applied per output entry.
  const auto w = signed_weights(table, out_cutoff, c);
  const auto ra = row_major(a);
  const auto rb = row_major(b);
  const int d = c + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_cutoff + 1, out_cutoff + 1);

#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m <= out_cutoff; ++m) {
    const int r_lo = std::max(0, m - c), r_hi = std::min(m, c);
    for (int n = 0; n <= out_cutoff; ++n) {
      const int s_lo = std::max(0, n - c), s_hi = std::min(n, c);
      Complex acc = 0.0;
      for (int r = r_lo; r <= r_hi; ++r) {
        const Complex* arow = ra.data() + r * d;
        const Complex* brow = rb.data() + (m - r) * d;
        Complex inner = 0.0;
        for (int s = s_lo; s <= s_hi; ++s) inner += w[n][s] * arow[s] * brow[n - s];
        acc += w[m][r] * inner;
      }
      out(m, n) = sign == SignOn::SecondCopy ? parity(m + n) * acc : acc;
    }
  }
  return out;
}

Eigen::MatrixXcd pair_product_serial(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int out_cutoff,
                                     SignOn sign) {
  check_square(a, "pair_product_serial");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("pair_product_serial: shape mismatch");
  const int c = static_cast<int>(a.rows()) - 1;
  if (out_cutoff < 0 || out_cutoff > 2 * c) throw Error("pair_product_serial: output cutoff out of range");
  const BinomialTable table(out_cutoff);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_cutoff + 1, out_cutoff + 1);
  for (int m = 0; m <= out_cutoff; ++m)
    for (int n = 0; n <= out_cutoff; ++n) {
      Complex acc = 0.0;
      for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= n; ++s) {
          if (r > c || s > c || m - r > c || n - s > c) continue;
          const double sgn = sign == SignOn::SecondCopy ? parity(m + n - r - s) : parity(r + s);
          acc += sgn * table.root(m, r) * table.root(n, s) * a(r, s) * b(m - r, n - s);
        }
      out(m, n) = acc;
    }
  return out;
}

Eigen::MatrixXcd mixed_pair_product(const Eigen::MatrixXcd& rho, int in_cutoff, int out_cutoff) {
  const int d = in_cutoff + 1;
  if (rho.rows() != d * d || rho.cols() != d * d) throw Error("mixed_pair_product: shape mismatch");
  if (out_cutoff < 0 || out_cutoff > 2 * in_cutoff) throw Error("mixed_pair_product: output cutoff out of range");
  const BinomialTable table(out_cutoff);
  const auto w = signed_weights(table, out_cutoff, in_cutoff);
  const auto r = row_major(rho);
  const int od = out_cutoff + 1;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(od * od, od * od);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < od * od; ++i) mixed_row(r, in_cutoff, out_cutoff, w, i / od, i % od, out);

  mirror_upper(out);
  return out;
}

Eigen::MatrixXcd mixed_pair_product_serial(const Eigen::MatrixXcd& rho, int in_cutoff, int out_cutoff) {
  const int d = in_cutoff + 1;
  if (rho.rows() != d * d || rho.cols() != d * d) throw Error("mixed_pair_product_serial: shape mismatch");
  if (out_cutoff < 0 || out_cutoff > 2 * in_cutoff)
    throw Error("mixed_pair_product_serial: output cutoff out of range");
  const BinomialTable table(out_cutoff);
  const int od = out_cutoff + 1;
  auto in_range = [&](int k) { return k >= 0 && k <= in_cutoff; };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(od * od, od * od);
  for (int m = 0; m <= out_cutoff; ++m)
    for (int n = 0; n <= out_cutoff; ++n)
      for (int mp = 0; mp <= out_cutoff; ++mp)
        for (int np = 0; np <= out_cutoff; ++np) {
          Complex acc = 0.0;
          for (int r = 0; r <= m; ++r)
            for (int s = 0; s <= n; ++s)
              for (int rp = 0; rp <= mp; ++rp)
                for (int sp = 0; sp <= np; ++sp) {
                  if (!in_range(r) || !in_range(s) || !in_range(rp) || !in_range(sp) || !in_range(m - r) ||
                      !in_range(n - s) || !in_range(mp - rp) || !in_range(np - sp))
                    continue;
                  const double wt = parity(r + s + rp + sp) * table.root(m, r) * table.root(n, s) *
                                    table.root(mp, rp) * table.root(np, sp);
                  acc += wt * rho(r * d + s, rp * d + sp) * rho((m - r) * d + (n - s), (mp - rp) * d + (np - sp));
                }
          out(m * od + n, mp * od + np) = acc;
        }
  return out;
}

Eigen::VectorXd mixed_pair_product_diagonal(const Eigen::MatrixXcd& rho, int in_cutoff) {
  const int d = in_cutoff + 1;
  if (rho.rows() != d * d || rho.cols() != d * d) throw Error("mixed_pair_product_diagonal: shape mismatch");
  const int oc = 2 * in_cutoff;
  const int od = oc + 1;
  const BinomialTable table(oc);
  const auto w = signed_weights(table, oc, in_cutoff);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(od * od);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < od * od; ++i) {
    const int m = i / od, n = i % od;
    const int r_lo = std::max(0, m - in_cutoff), r_hi = std::min(m, in_cutoff);
    const int s_lo = std::max(0, n - in_cutoff), s_hi = std::min(n, in_cutoff);
    Complex acc = 0.0;
    for (int r = r_lo; r <= r_hi; ++r)
      for (int s = s_lo; s <= s_hi; ++s)
        for (int rp = r_lo; rp <= r_hi; ++rp)
          for (int sp = s_lo; sp <= s_hi; ++sp)
            acc += w[m][r] * w[n][s] * w[m][rp] * w[n][sp] * rho(r * d + s, rp * d + sp) *
                   rho((m - r) * d + (n - s), (m - rp) * d + (n - sp));
    diag(i) = acc.real();
  }
  return diag;
}

std::vector<double> schmidt_product(const std::vector<double>& a, std::size_t out_len) {
  if (a.empty()) throw Error("schmidt_product: empty input");
  const int c = static_cast<int>(a.size()) - 1;
  if (out_len == 0 || out_len > 2 * a.size() - 1) throw Error("schmidt_product: output length out of range");
  const BinomialTable table(static_cast<int>(out_len) - 1);
  std::vector<double> out(out_len, 0.0);
  for (int n = 0; n < static_cast<int>(out_len); ++n) {
    double acc = 0.0;
    for (int r = std::max(0, n - c); r <= std::min(n, c); ++r) acc += table.halved(n, r) * a[r] * a[n - r];
    out[n] = acc;
  }
  return out;
}

}  // namespace gaussify::kernels
