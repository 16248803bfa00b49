#include "gaussify/optics.hpp"

#include <algorithm>
#include <cmath>

#include "gaussify/error.hpp"

namespace gaussify::optics {
namespace {

// log(k!) for the block expansion; blocks stay small so a running table works.
std::vector<long double> log_factorials(int n) {
  std::vector<long double> lf(n + 1, 0.0L);
  for (int k = 1; k <= n; ++k) lf[k] = lf[k - 1] + std::log(static_cast<long double>(k));
  return lf;
}

std::vector<std::vector<long double>> binomials(int n) {
  std::vector<std::vector<long double>> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k].assign(k + 1, 1.0L);
    for (int j = 1; j < k; ++j) c[k][j] = c[k - 1][j - 1] + c[k - 1][j];
  }
  return c;
}

using LComplex = std::complex<long double>;

LComplex ipow(LComplex z, int k) {
  LComplex out = 1.0L;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace

BeamSplitter BeamSplitter::balanced() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, h};
}

void BeamSplitter::validate() const {
  const double u = std::norm(T) + std::norm(R);
  if (std::abs(u - 1.0) > 1e-12) throw DomainError("beam splitter not unitary: |T|^2 + |R|^2 = " + std::to_string(u));
}

Complex BSMatrix::element(int m1, int m2, int p1, int p2) const {
  const int total = m1 + m2;
  if (total != p1 + p2 || total > max_total() || m1 < 0 || m2 < 0 || p1 < 0 || p2 < 0) return 0.0;
  return blocks_[total](m1, p1);
}

BSMatrix bs_matrix(const BeamSplitter& bs, int cutoff) {
  bs.validate();
  if (cutoff < 0) throw Error("negative cutoff");
  const int max_total = 2 * cutoff;
  const auto lf = log_factorials(max_total);
  const auto binom = binomials(max_total);
  const LComplex T(bs.T.real(), bs.T.imag());
  const LComplex R(bs.R.real(), bs.R.imag());
  const LComplex a11 = T, a12 = -std::conj(R);  // image of a1^dag
  const LComplex a21 = R, a22 = std::conj(T);   // image of a2^dag

  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(max_total + 1);
  for (int N = 0; N <= max_total; ++N) {
    Eigen::MatrixXcd blk = Eigen::MatrixXcd::Zero(N + 1, N + 1);
    for (int p = 0; p <= N; ++p) {
      const int q = N - p;
      // U |p, q> = (a11 a1^ + a12 a2^)^p (a21 a1^ + a22 a2^)^q |0> / sqrt(p! q!)
      std::vector<LComplex> poly(N + 1, 0.0L);  // coefficient of (a1^dag)^k (a2^dag)^{N-k}
      for (int j = 0; j <= p; ++j) {
        const LComplex left = binom[p][j] * ipow(a11, j) * ipow(a12, p - j);
        for (int k = 0; k <= q; ++k) poly[j + k] += left * binom[q][k] * ipow(a21, k) * ipow(a22, q - k);
      }
      for (int m = 0; m <= N; ++m) {
        const long double scale = std::exp(0.5L * (lf[m] + lf[N - m] - lf[p] - lf[q]));
        const LComplex v = poly[m] * scale;
        blk(m, p) = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
      }
    }
    blocks.push_back(std::move(blk));
  }
  return BSMatrix(bs, std::move(blocks));
}

FourModeState::FourModeState(int mode_dim) : d_(mode_dim) {
  if (mode_dim <= 0) throw Error("four-mode state needs a positive mode dimension");
  amps_.assign(static_cast<std::size_t>(d_) * d_ * d_ * d_, Complex(0.0));
}

FourModeState FourModeState::product(const PureState2& copy1, const PureState2& copy2) {
  FourModeState s(copy1.cutoff() + copy2.cutoff() + 1);
  for (int a1 = 0; a1 <= copy1.cutoff(); ++a1)
    for (int b1 = 0; b1 <= copy1.cutoff(); ++b1) {
      const Complex x = copy1(a1, b1);
      if (x == Complex(0.0)) continue;
      for (int a2 = 0; a2 <= copy2.cutoff(); ++a2)
        for (int b2 = 0; b2 <= copy2.cutoff(); ++b2) s(a1, a2, b1, b2) = x * copy2(a2, b2);
    }
  return s;
}

double FourModeState::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

FourModeState FourModeState::apply(const BSMatrix& bs, Side side) const {
  FourModeState out(d_);
  const int max_total = std::min(bs.max_total(), 2 * (d_ - 1));
  for (int x = 0; x < d_; ++x)
    for (int y = 0; y < d_; ++y) {
      // (x, y) index the two modes the splitter does not touch.
      auto at = [&](int i, int j) -> Complex { return side == Side::A ? (*this)(i, j, x, y) : (*this)(x, y, i, j); };
      auto put = [&](int i, int j, Complex v) {
        if (side == Side::A)
          out(i, j, x, y) = v;
        else
          out(x, y, i, j) = v;
      };
      for (int N = 0; N <= 2 * (d_ - 1); ++N) {
        const int lo = std::max(0, N - (d_ - 1)), hi = std::min(N, d_ - 1);
        bool any = false;
        for (int p = lo; p <= hi; ++p) any = any || at(p, N - p) != Complex(0.0);
        if (!any) continue;
        if (N > max_total) throw Error("beam splitter matrix too small for the four-mode state");
        const Eigen::MatrixXcd& blk = bs.block(N);
        for (int m = 0; m <= N; ++m) {
          Complex acc = 0.0;
          for (int p = lo; p <= hi; ++p) acc += blk(m, p) * at(p, N - p);
          if (m > d_ - 1 || N - m > d_ - 1) {
            if (acc != Complex(0.0)) throw Error("four-mode state too small for beam splitter output");
            continue;
          }
          put(m, N - m, acc);
        }
      }
    }
  return out;
}

FourModeState mix_locally(const PureState2& copy1, const PureState2& copy2, const BeamSplitter& side_a,
                          const BeamSplitter& side_b) {
  const FourModeState in = FourModeState::product(copy1, copy2);
  const int cutoff = in.mode_dim() - 1;
  // Photons in one local pair never exceed the mode dimension of the product.
  const BSMatrix ua = bs_matrix(side_a, (cutoff + 1) / 2 + 1);
  const BSMatrix ub = bs_matrix(side_b, (cutoff + 1) / 2 + 1);
  return in.apply(ua, FourModeState::Side::A).apply(ub, FourModeState::Side::B);
}

PureState2 project_detectors(const FourModeState& state, int detected_a, int detected_b) {
  PureState2 out(state.mode_dim() - 1);
  for (int ka = 0; ka < state.mode_dim(); ++ka)
    for (int kb = 0; kb < state.mode_dim(); ++kb) out(ka, kb) = state(detected_a, ka, detected_b, kb);
  return out;
}

PureState2 mix_pair_and_project_vacuum(const PureState2& copy1, const PureState2& copy2, const BeamSplitter& bs) {
  return project_detectors(mix_locally(copy1, copy2, bs, bs), 0, 0);
}

ClickResult click_project(const FourModeState& state) {
  ClickResult result;
  for (int da = 1; da < state.mode_dim(); ++da)
    for (int db = 1; db < state.mode_dim(); ++db) {
      PureState2 res = project_detectors(state, da, db);
      const double w = norm_sq(res);
      if (w == 0.0) continue;
      result.total_probability += w;
      result.outcomes.push_back({da, db, std::move(res), w});
    }
  result.tail_mass = std::max(0.0, 1.0 - state.norm_sq());
  return result;
}

}  // namespace gaussify::optics
