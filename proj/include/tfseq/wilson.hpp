#ifndef TFSEQ_WILSON_HPP
#define TFSEQ_WILSON_HPP

#include <cmath>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/gabor.hpp"
#include "tfseq/signal.hpp"

namespace tfseq {

// Wilson system on the (a, b) = (1/2, 1) lattice:
//   psi_{k,0} = T_k psi
//   psi_{k,n} = (1/sqrt 2) T_{k/2} (M_n + (-1)^{k+n} M_{-n}) psi,   n > 0.

inline constexpr double kWilsonA = 0.5;
inline constexpr double kWilsonB = 1.0;

// Coefficients on Z x N, |k| <= K, 0 <= n <= M.
struct WilsonCoefficients {
  int K = 0;
  int M = 0;
  std::vector<cplx> entries;  // (2K+1) x (M+1)

  static WilsonCoefficients zeros(int K, int M) {
    if (K < 0 || M < 0) throw validation_error("wilson coefficients: box must be non-negative");
    return {K, M, std::vector<cplx>(static_cast<std::size_t>(2 * K + 1) * (M + 1))};
  }
  std::size_t index(int k, int n) const {
    if (std::abs(k) > K || n < 0 || n > M)
      throw validation_error("wilson coefficients: index outside the box");
    return static_cast<std::size_t>(k + K) * (M + 1) + static_cast<std::size_t>(n);
  }
  cplx& at(int k, int n) { return entries[index(k, n)]; }
  const cplx& at(int k, int n) const { return entries[index(k, n)]; }
};

// Coefficients on N^2 after the interleaving map Phi. Box convention: (2K+2) rows by
// (M+1) columns; row 2K+1 (which would read Wilson index k = K+1) is kept as zero
// padding so that row counts stay even.
struct GridCoefficients2D {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> entries;

  static GridCoefficients2D zeros(int rows, int cols) {
    if (rows < 2 || rows % 2 != 0 || cols < 1)
      throw validation_error("grid2d coefficients: rows must be even and positive");
    return {rows, cols, std::vector<cplx>(static_cast<std::size_t>(rows) * cols)};
  }
  std::size_t index(int k, int n) const {
    if (k < 0 || k >= rows || n < 0 || n >= cols)
      throw validation_error("grid2d coefficients: index outside the box");
    return static_cast<std::size_t>(k) * cols + static_cast<std::size_t>(n);
  }
  cplx& at(int k, int n) { return entries[index(k, n)]; }
  const cplx& at(int k, int n) const { return entries[index(k, n)]; }
};

inline SampledSignal wilson_atom(const SampledSignal& psi, int k, int n) {
  if (n < 0) throw validation_error("wilson_atom: n must be >= 0");
  psi.grid.shift_index(0.5);  // the half-integer shifts must be representable
  if (n == 0) return translate(psi, static_cast<double>(k));
  SampledSignal up = modulate(psi, static_cast<double>(n));
  const SampledSignal down = modulate(psi, -static_cast<double>(n));
  const double sign = ((k + n) % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < up.values.size(); ++j)
    up.values[j] = (up.values[j] + sign * down.values[j]) / std::sqrt(2.0);
  return translate(up, 0.5 * static_cast<double>(k));
}

// ---------------------------------------------------------------------------
// index maps

// Phi_1: Gabor coefficients on Z^2 (lattice (1/2, 1)) -> Wilson coefficients on Z x N.
//   Phi_1(c)_{k,0} = c_{2k,0};  Phi_1(c)_{k,n} = (c_{k,n} + (-1)^{k+n} c_{k,-n}) / sqrt 2.
inline WilsonCoefficients phi1(const GaborCoefficients& c) {
  const int Kw = c.lattice.K / 2;
  const int Mw = c.lattice.M;
  if (c.lattice.K < 2)
    throw validation_error("phi1: input box too small for the n = 0 row (need |k| <= 2K)");
  WilsonCoefficients out = WilsonCoefficients::zeros(Kw, Mw);
  for (int k = -Kw; k <= Kw; ++k) {
    out.at(k, 0) = c.at(2 * k, 0);
    for (int n = 1; n <= Mw; ++n) {
      const double sign = ((k + n) % 2 == 0) ? 1.0 : -1.0;
      out.at(k, n) = (c.at(k, n) + sign * c.at(k, -n)) / std::sqrt(2.0);
    }
  }
  return out;
}

// Phi_2: Wilson coefficients on Z x N -> Gabor coefficients on Z^2, the right inverse
// of Phi_1 (Phi_1 o Phi_2 = id). Entries with |k| > K in the n != 0 rows are zero.
inline GaborCoefficients phi2(const WilsonCoefficients& c) {
  LatticeSpec lat{kWilsonA, kWilsonB, 2 * c.K, c.M};
  GaborCoefficients out = GaborCoefficients::zeros(lat);
  for (int k = -2 * c.K; k <= 2 * c.K; ++k) {
    if (k % 2 == 0) out.at(k, 0) = c.at(k / 2, 0);
    if (std::abs(k) <= c.K) {
      for (int n = 1; n <= c.M; ++n) {
        out.at(k, n) = c.at(k, n) / std::sqrt(2.0);
        const double sign = ((k + n) % 2 == 0) ? 1.0 : -1.0;
        out.at(k, -n) = sign * c.at(k, n) / std::sqrt(2.0);
      }
    }
  }
  return out;
}

// Phi: Z x N -> N^2, row interleaving k -> { -k/2 even rows, (k+1)/2 odd rows }.
inline GridCoefficients2D phi(const WilsonCoefficients& c) {
  GridCoefficients2D out = GridCoefficients2D::zeros(2 * c.K + 2, c.M + 1);
  for (int r = 0; r <= 2 * c.K; ++r) {
    const int k = (r % 2 == 0) ? -(r / 2) : (r + 1) / 2;
    for (int n = 0; n <= c.M; ++n) out.at(r, n) = c.at(k, n);
  }
  return out;
}

inline WilsonCoefficients phi_inverse(const GridCoefficients2D& d) {
  const int K = d.rows / 2 - 1;
  const int M = d.cols - 1;
  WilsonCoefficients out = WilsonCoefficients::zeros(K, M);
  for (int k = -K; k <= K; ++k) {
    const int r = (k <= 0) ? -2 * k : 2 * k - 1;
    for (int n = 0; n <= M; ++n) out.at(k, n) = d.at(r, n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// window construction and transforms

// Wilson orthonormal-basis window: S^{-1/2} of the Gaussian at (1/2, 1), rescaled to
// tight frame bound 2. Real and even by construction.
inline SampledSignal build_wilson_window(const GridSpec& grid, double tol, int K = 28,
                                         int M = 14) {
  grid.shift_index(0.5);
  grid.shift_index(1.0);
  LatticeSpec lat{kWilsonA, kWilsonB, K, M};
  const SampledSignal g = hermite(0, grid);
  SampledSignal w = tight_window(g, lat, tol);
  for (auto& v : w.values) v *= std::sqrt(2.0);
  return w;
}

// (f, psi_{k,n}) through the factorization C~ = Phi_1 o C^{1/2,1}.
inline WilsonCoefficients wilson_analyze(const SampledSignal& psi, const SampledSignal& f, int K,
                                         int M) {
  LatticeSpec lat{kWilsonA, kWilsonB, 2 * K, M};
  return phi1(analyze(psi, lat, f));
}

// sum c_{k,n} psi_{k,n} through the factorization D~ = D^{1/2,1} o Phi_2.
inline SampledSignal wilson_synthesize(const SampledSignal& psi, const WilsonCoefficients& c) {
  const GaborCoefficients g = phi2(c);
  return synthesize(psi, g.lattice, g);
}

// Phi o C~ and its inverse D~ o Phi^{-1} (the constructive sequence-space map).
inline GridCoefficients2D sequence_rep(const SampledSignal& psi, const SampledSignal& f, int K,
                                       int M) {
  return phi(wilson_analyze(psi, f, K, M));
}

inline SampledSignal sequence_rep_inverse(const SampledSignal& psi, const GridCoefficients2D& d) {
  return wilson_synthesize(psi, phi_inverse(d));
}

}  // namespace tfseq

#endif
