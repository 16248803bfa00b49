#include <cmath>

#include <gtest/gtest.h>

#include "gaussify/error.hpp"
#include "gaussify/fock.hpp"
#include "test_util.hpp"

using namespace gaussify;

TEST(PureState2, VacuumAndAccess) {
  PureState2 v = PureState2::vacuum(3);
  EXPECT_EQ(v.cutoff(), 3);
  EXPECT_EQ(v(0, 0), Complex(1.0));
  EXPECT_EQ(v.at(7, 0), Complex(0.0));
  EXPECT_EQ(v.at(-1, 2), Complex(0.0));
  EXPECT_DOUBLE_EQ(norm_sq(v), 1.0);
}

TEST(PureState2, TruncationReportsRelativeTail) {
  PureState2 s(2);
  s(0, 0) = 1.0;
  s(2, 2) = 1.0;
  auto t = s.truncated(1);
  EXPECT_EQ(t.state.cutoff(), 1);
  EXPECT_DOUBLE_EQ(t.tail_mass, 0.5);
  EXPECT_EQ(s.resized(4).at(2, 2), Complex(1.0));
}

TEST(PureState2, NormalizeZeroThrows) { EXPECT_THROW(PureState2(2).normalized(), DomainError); }

TEST(SchmidtDiagonal, Basics) {
  SchmidtDiagonal s({2.0, 1.0});
  EXPECT_FALSE(s.has_unit_leading());
  SchmidtDiagonal u = s.unit_leading();
  EXPECT_TRUE(u.has_unit_leading());
  EXPECT_DOUBLE_EQ(u[1], 0.5);
  EXPECT_DOUBLE_EQ(u.norm_sq(), 1.25);
  EXPECT_EQ(u.to_state()(1, 1), Complex(0.5));
  EXPECT_THROW(SchmidtDiagonal({0.0, 1.0}).unit_leading(), DomainError);
  EXPECT_THROW(SchmidtDiagonal({1.0, -0.1}), DomainError);
}

TEST(Reduction, TmsvEntropyAtHalf) {
  // sqrt(1 - q^2) sum q^n |n,n>, q = 0.5, cutoff 40
  const double q = 0.5;
  PureState2 s(40);
  for (int n = 0; n <= 40; ++n) s(n, n) = std::sqrt(1 - q * q) * std::pow(q, n);
  const double h = von_neumann_entropy(reduce_to_mode(s, Mode::A));
  EXPECT_NEAR(h, 1.081704, 1e-6);
  EXPECT_NEAR(von_neumann_entropy(reduce_to_mode(s, Mode::B)), h, 1e-12);
}

TEST(Reduction, BellStateHasOneBit) {
  PureState2 s(1);
  s(0, 0) = s(1, 1) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(von_neumann_entropy(reduce_to_mode(s, Mode::A)), 1.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(reduce_to_mode(MixedState2::projector(s), Mode::B)), 1.0, 1e-12);
}

TEST(Reduction, PureAndMixedAgree) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    PureState2 s = testutil::random_state(3, rng);
    MixedState2 rho = MixedState2::projector(s);
    for (Mode m : {Mode::A, Mode::B})
      EXPECT_LT(testutil::max_abs_diff(reduce_to_mode(s, m).matrix, reduce_to_mode(rho, m).matrix), 1e-13);
  }
}

TEST(Entropy, RejectsBadDensity) {
  ReducedState1 r{Eigen::MatrixXcd::Identity(2, 2)};
  EXPECT_THROW(von_neumann_entropy(r), DomainError);
  ReducedState1 neg{Eigen::MatrixXcd::Zero(2, 2)};
  neg.matrix(0, 0) = 1.1;
  neg.matrix(1, 1) = -0.1;
  EXPECT_THROW(von_neumann_entropy(neg), DomainError);
  ReducedState1 tiny{Eigen::MatrixXcd::Zero(2, 2)};
  tiny.matrix(0, 0) = 1.0 + 1e-11;
  tiny.matrix(1, 1) = -1e-11;
  EXPECT_NEAR(von_neumann_entropy(tiny), 0.0, 1e-9);
}

TEST(MixedState2, ProjectorProperties) {
  std::mt19937_64 rng(5);
  PureState2 s = testutil::random_state(2, rng);
  MixedState2 rho = MixedState2::projector(s);
  EXPECT_NEAR(rho.trace(), 1.0, 1e-14);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-13);
  EXPECT_NO_THROW(rho.check_density());
  EXPECT_EQ(rho.index(1, 2), 5);
  EXPECT_EQ(rho(1, 2, 0, 1), s(1, 2) * std::conj(s(0, 1)));
}

TEST(MixedState2, MixturePurityAndDistance) {
  PureState2 a = PureState2::vacuum(1), b(1);
  b(1, 1) = 1.0;
  MixedState2 ra = MixedState2::projector(a), rb = MixedState2::projector(b);
  MixedState2 mix(1, 0.5 * (ra.matrix() + rb.matrix()));
  EXPECT_NEAR(mix.purity(), 0.5, 1e-15);
  EXPECT_NEAR(trace_norm_distance(ra, rb), 2.0, 1e-14);
  EXPECT_NEAR(trace_norm_distance(ra, ra), 0.0, 1e-15);
  EXPECT_THROW(trace_norm_distance(ra, MixedState2(2)), Error);
}

TEST(MixedState2, CheckDensityRejectsNonHermitian) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4) * 0.25;
  m(0, 1) = 0.1;
  EXPECT_THROW(MixedState2(1, m).check_density(), DomainError);
}

TEST(MixedState2, TruncationTail) {
  PureState2 s(2);
  s(0, 0) = std::sqrt(0.75);
  s(2, 0) = 0.5;
  auto t = MixedState2::projector(s).truncated(1);
  EXPECT_NEAR(t.tail_mass, 0.25, 1e-15);
  EXPECT_NEAR(t.state.trace(), 0.75, 1e-15);
}

TEST(Overlap, CommonSupport) {
  PureState2 a = PureState2::vacuum(1), b = PureState2::vacuum(3);
  b(3, 3) = 1.0;
  EXPECT_EQ(overlap(a, b), Complex(1.0));
}
