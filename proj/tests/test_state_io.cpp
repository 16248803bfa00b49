#include <sstream>

#include <gtest/gtest.h>

#include "gaussify/error.hpp"
#include "gaussify/state_io.hpp"
#include "test_util.hpp"

using namespace gaussify;

TEST(StateIO, RoundTripIsBitExact) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    PureState2 s = testutil::random_state(4, rng);
    std::stringstream ss;
    write_state(ss, s);
    PureState2 r = read_state(ss);
    ASSERT_EQ(r.cutoff(), 4);
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) EXPECT_EQ(r(m, n), s(m, n));
  }
}

TEST(StateIO, CommentsBlankLinesAndSparseEntries) {
  std::istringstream in("# a state\n\nfock2 cutoff=2\n0 0 1 0\n\n# x\n2 1 0.25 -0.5\n");
  PureState2 s = read_state(in);
  EXPECT_EQ(s.cutoff(), 2);
  EXPECT_EQ(s(0, 0), Complex(1.0));
  EXPECT_EQ(s(2, 1), Complex(0.25, -0.5));
  EXPECT_EQ(s(1, 1), Complex(0.0));
}

TEST(StateIO, IndexBeyondCutoffReportsLine) {
  std::istringstream in("fock2 cutoff=1\n0 0 1 0\n2 0 1 0\n");
  try {
    read_state(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(StateIO, MalformedInput) {
  std::istringstream bad_header("fock3 cutoff=1\n");
  EXPECT_THROW(read_state(bad_header), ParseError);
  std::istringstream bad_number("fock2 cutoff=1\n0 0 x 0\n");
  EXPECT_THROW(read_state(bad_number), ParseError);
  std::istringstream short_line("fock2 cutoff=1\n0 0 1\n");
  EXPECT_THROW(read_state(short_line), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_state(empty), ParseError);
  EXPECT_THROW(read_state_file("/nonexistent/state.txt"), ParseError);
}

TEST(StateIO, DecimalValuesSurvive) {
  PureState2 s(1);
  s(0, 0) = 0.1;
  s(1, 1) = Complex(-0.3, 1e-300);
  std::stringstream ss;
  write_state(ss, s);
  PureState2 r = read_state(ss);
  EXPECT_EQ(r(0, 0), Complex(0.1));
  EXPECT_EQ(r(1, 1), Complex(-0.3, 1e-300));
}
