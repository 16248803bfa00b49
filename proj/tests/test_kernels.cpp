#include <cmath>

#include <gtest/gtest.h>

#include "gaussify/error.hpp"
#include "gaussify/kernels.hpp"
#include "test_util.hpp"

using namespace gaussify;
namespace k = gaussify::kernels;

namespace {

Eigen::VectorXcd flatten(const PureState2& s) {
  const int d = s.dim();
  Eigen::VectorXcd v(d * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) v(m * d + n) = s(m, n);
  return v;
}

}  // namespace

TEST(BinomialTable, HalvedValuesAndSymmetry) {
  k::BinomialTable t(40);
  EXPECT_DOUBLE_EQ(t.halved(4, 2), 6.0 / 16.0);
  EXPECT_DOUBLE_EQ(t.root(2, 1), std::sqrt(0.5));
  for (int m = 0; m <= 40; ++m) {
    double row = 0.0;
    for (int r = 0; r <= m; ++r) {
      EXPECT_EQ(t.halved(m, r), t.halved(m, m - r));
      row += t.halved(m, r);
    }
    EXPECT_NEAR(row, 1.0, 1e-14);
  }
}

TEST(PairProduct, ParallelMatchesSerial) {
  std::mt19937_64 rng(21);
  for (int c : {0, 1, 3, 6}) {
    PureState2 a = testutil::random_state(c, rng), b = testutil::random_state(c, rng);
    for (auto sign : {k::SignOn::SecondCopy, k::SignOn::FirstCopy})
      for (int out : {0, c, 2 * c})
        EXPECT_LT(testutil::max_abs_diff(k::pair_product(a.amplitudes(), b.amplitudes(), out, sign),
                                         k::pair_product_serial(a.amplitudes(), b.amplitudes(), out, sign)),
                  1e-14);
  }
}

TEST(PairProduct, SignConventionsAgreeOnIdenticalCopies) {
  std::mt19937_64 rng(22);
  PureState2 a = testutil::random_state(4, rng), b = testutil::random_state(4, rng);
  EXPECT_LT(testutil::max_abs_diff(k::pair_product(a.amplitudes(), a.amplitudes(), 8, k::SignOn::SecondCopy),
                                   k::pair_product(a.amplitudes(), a.amplitudes(), 8, k::SignOn::FirstCopy)),
            1e-14);
  // For distinct copies they differ by swapping the factors.
  EXPECT_LT(testutil::max_abs_diff(k::pair_product(a.amplitudes(), b.amplitudes(), 8, k::SignOn::SecondCopy),
                                   k::pair_product(b.amplitudes(), a.amplitudes(), 8, k::SignOn::FirstCopy)),
            1e-14);
}

TEST(PairProduct, RejectsBadShapes) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2), b = Eigen::MatrixXcd::Zero(3, 3);
  EXPECT_THROW(k::pair_product(a, b, 1), Error);
  EXPECT_THROW(k::pair_product(a, a, 3), Error);
  EXPECT_THROW(k::pair_product_serial(a, a, -1), Error);
}

TEST(MixedPairProduct, ParallelMatchesSerial) {
  std::mt19937_64 rng(23);
  for (int c : {1, 2}) {
    // rank-3 density operator
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero((c + 1) * (c + 1), (c + 1) * (c + 1));
    for (int j = 0; j < 3; ++j) {
      Eigen::VectorXcd v = flatten(testutil::random_state(c, rng));
      rho += (0.5 + j) * v * v.adjoint();
    }
    rho /= rho.trace().real();
    for (int out : {c, 2 * c})
      EXPECT_LT(testutil::max_abs_diff(k::mixed_pair_product(rho, c, out), k::mixed_pair_product_serial(rho, c, out)),
                1e-14);
  }
}

TEST(MixedPairProduct, ProjectorMapsToProjector) {
  std::mt19937_64 rng(24);
  PureState2 s = testutil::random_state(3, rng);
  Eigen::VectorXcd v = flatten(s);
  Eigen::MatrixXcd rho = v * v.adjoint();
  PureState2 out(Eigen::MatrixXcd(k::pair_product(s.amplitudes(), s.amplitudes(), 6)));
  Eigen::VectorXcd w = flatten(out);
  EXPECT_LT(testutil::max_abs_diff(k::mixed_pair_product(rho, 3, 6), w * w.adjoint()), 1e-14);
}

TEST(MixedPairProduct, DiagonalMatchesFullProduct) {
  std::mt19937_64 rng(25);
  Eigen::VectorXcd v = flatten(testutil::random_state(2, rng)), u = flatten(testutil::random_state(2, rng));
  Eigen::MatrixXcd rho = 0.3 * v * v.adjoint() + 0.7 * u * u.adjoint();
  Eigen::MatrixXcd full = k::mixed_pair_product(rho, 2, 4);
  Eigen::VectorXd diag = k::mixed_pair_product_diagonal(rho, 2);
  EXPECT_LT((full.diagonal().real() - diag).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SchmidtProduct, MatchesDiagonalOfPairProduct) {
  std::vector<double> a{1.0, 0.5, 0.4, 0.3};
  PureState2 s(3);
  for (int n = 0; n < 4; ++n) s(n, n) = a[n];
  Eigen::MatrixXcd full = k::pair_product(s.amplitudes(), s.amplitudes(), 6);
  std::vector<double> d = k::schmidt_product(a, 7);
  for (int n = 0; n <= 6; ++n) EXPECT_NEAR(full(n, n).real(), d[n], 1e-15);
  // off-diagonal entries of a Schmidt input stay zero
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      if (m != n) EXPECT_EQ(full(m, n), Complex(0.0));
}
