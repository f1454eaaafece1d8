#ifndef TFSEQ_SIGNAL_HPP
#define TFSEQ_SIGNAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/fft.hpp"
#include "tfseq/grid.hpp"
#include "tfseq/weights.hpp"

namespace tfseq {

struct SampledSignal {
  GridSpec grid;
  std::vector<cplx> values;

  static SampledSignal zeros(const GridSpec& g) { return {g, std::vector<cplx>(g.size)}; }
};

inline void require_same_grid(const SampledSignal& f, const SampledSignal& g) {
  if (f.grid != g.grid) throw validation_error("signals live on different grids");
  if (f.values.size() != f.grid.size || g.values.size() != g.grid.size)
    throw validation_error("signal length does not match its grid");
}

inline cplx inner(const SampledSignal& f, const SampledSignal& g) {
  require_same_grid(f, g);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j) acc += f.values[j] * std::conj(g.values[j]);
  return acc * f.grid.step();
}

inline double l2_norm(const SampledSignal& f) {
  double acc = 0.0;
  for (const auto& v : f.values) acc += std::norm(v);
  return std::sqrt(acc * f.grid.step());
}

inline double max_abs(const SampledSignal& f) {
  double m = 0.0;
  for (const auto& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

// Largest |x_j| where |f| exceeds rel_threshold * max|f|; 0 for the zero signal.
inline double numerical_reach(const SampledSignal& f, double rel_threshold = 1e-15) {
  const double cutoff = rel_threshold * max_abs(f);
  if (cutoff == 0.0) return 0.0;
  double reach = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j)
    if (std::abs(f.values[j]) > cutoff) reach = std::max(reach, std::abs(f.grid.point(j)));
  return reach;
}

// Discrete approximation of phi_hat(xi) = int phi(x) e^{-2 pi i x xi} dx, returned on
// the dual grid (whose step is this grid's frequency step, keeping the transform
// unitary): one centered FFT scaled by the input step, with parity twists absorbing
// the -T offsets of both grids.
inline SampledSignal fourier(const SampledSignal& f) {
  const std::size_t n = f.grid.size;
  std::vector<cplx> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = (j & 1) ? -f.values[j] : f.values[j];
  fft_pow2(a, false);
  const std::size_t half = n / 2;
  SampledSignal out{f.grid.dual(), std::move(a)};
  const double scale = f.grid.step();
  for (std::size_t m = 0; m < n; ++m)
    out.values[m] *= ((m + half) & 1) ? -scale : scale;
  return out;
}

inline SampledSignal inverse_fourier(const SampledSignal& fhat) {
  const std::size_t n = fhat.grid.size;
  const std::size_t half = n / 2;
  std::vector<cplx> a(n);
  for (std::size_t m = 0; m < n; ++m)
    a[m] = (m & 1) ? -fhat.values[m] : fhat.values[m];
  fft_pow2(a, true);
  SampledSignal out{fhat.grid.dual(), std::move(a)};
  const double scale = fhat.grid.step() * static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j)
    out.values[j] *= ((j + half) & 1) ? -scale : scale;
  return out;
}

// T_x f(t) = f(t - x): exact circular index shift; x must be grid-aligned.
inline SampledSignal translate(const SampledSignal& f, double x) {
  const long p = f.grid.shift_index(x);
  const std::size_t n = f.grid.size;
  SampledSignal out{f.grid, std::vector<cplx>(n)};
  const long ln = static_cast<long>(n);
  for (std::size_t j = 0; j < n; ++j) {
    long src = (static_cast<long>(j) - p) % ln;
    if (src < 0) src += ln;
    out.values[j] = f.values[static_cast<std::size_t>(src)];
  }
  return out;
}

// M_xi f(t) = e^{2 pi i xi t} f(t); any real xi.
inline SampledSignal modulate(const SampledSignal& f, double xi) {
  SampledSignal out{f.grid, std::vector<cplx>(f.grid.size)};
  for (std::size_t j = 0; j < f.grid.size; ++j)
    out.values[j] = std::polar(1.0, 2.0 * std::numbers::pi * xi * f.grid.point(j)) * f.values[j];
  return out;
}

// sup_j |f(x_j)| e^{h w(|x_j|)}, evaluated in log space; +inf on overflow.
inline double weighted_sup_norm(const SampledSignal& f, const WeightFunction& w, double h) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < f.values.size(); ++j) {
    const double mag = std::abs(f.values[j]);
    if (mag == 0.0) continue;
    best = std::max(best, std::log(mag) + h * eval(w, std::abs(f.grid.point(j))));
  }
  if (best == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(best);
}

// Truncated Gelfand-Shilov seminorm sup_{p,q <= P} sup_x |f^(p)(x) x^q| / (k^{p+q} p!^mu q!^tau)
// with derivatives taken spectrally.
inline double gelfand_shilov_seminorm(const SampledSignal& f, double mu, double tau, double k,
                                      int P) {
  if (!(mu > 0.0 && tau > 0.0 && k > 0.0))
    throw validation_error("gelfand_shilov_seminorm: mu, tau, k must be positive");
  if (P < 0 || P > 12)
    throw accuracy_error("gelfand_shilov_seminorm: spectral differentiation limited to P <= 12");
  const SampledSignal fhat = fourier(f);
  double best = 0.0;
  for (int p = 0; p <= P; ++p) {
    SampledSignal dhat = fhat;
    for (std::size_t m = 0; m < dhat.values.size(); ++m) {
      const cplx factor(0.0, 2.0 * std::numbers::pi * fhat.grid.point(m));
      cplx pw = 1.0;
      for (int i = 0; i < p; ++i) pw *= factor;
      dhat.values[m] *= pw;
    }
    const SampledSignal deriv = inverse_fourier(dhat);
    for (int q = 0; q <= P; ++q) {
      double sup = 0.0;
      for (std::size_t j = 0; j < deriv.values.size(); ++j) {
        const double xq = std::pow(std::abs(deriv.grid.point(j)), q);
        sup = std::max(sup, std::abs(deriv.values[j]) * xq);
      }
      const double denom =
          std::exp((p + q) * std::log(k) + mu * std::lgamma(p + 1.0) + tau * std::lgamma(q + 1.0));
      best = std::max(best, sup / denom);
    }
  }
  return best;
}

// L2-normalized Hermite functions for the Fourier convention used here:
// fourier(h_m) = (-i)^m h_m. h_0(x) = 2^(1/4) e^(-pi x^2).
inline SampledSignal hermite(int m, const GridSpec& grid) {
  if (m < 0 || m > 64) throw validation_error("hermite: order must be in [0, 64]");
  const std::size_t n = grid.size;
  SampledSignal out{grid, std::vector<cplx>(n)};
  const double root2pi = std::sqrt(2.0 * std::numbers::pi);
  const double pi4 = std::pow(std::numbers::pi, -0.25);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = root2pi * grid.point(j);
    double pm1 = pi4 * std::exp(-0.5 * y * y);  // psi_0
    double pm2 = 0.0;
    for (int i = 1; i <= m; ++i) {
      const double p = y * std::sqrt(2.0 / i) * pm1 - std::sqrt((i - 1.0) / i) * pm2;
      pm2 = pm1;
      pm1 = p;
    }
    out.values[j] = std::pow(2.0 * std::numbers::pi, 0.25) * pm1;
  }
  const double nrm = l2_norm(out);
  if (nrm > 0.0)
    for (auto& v : out.values) v /= nrm;
  return out;
}

inline SampledSignal gaussian(const GridSpec& grid) {
  SampledSignal out{grid, std::vector<cplx>(grid.size)};
  for (std::size_t j = 0; j < grid.size; ++j) {
    const double x = grid.point(j);
    out.values[j] = std::exp(-std::numbers::pi * x * x);
  }
  return out;
}

// Indicator of [0, 1): the window of the orthonormal Gabor basis at a = b = 1.
inline SampledSignal box_window(const GridSpec& grid) {
  SampledSignal out{grid, std::vector<cplx>(grid.size)};
  for (std::size_t j = 0; j < grid.size; ++j) {
    const double x = grid.point(j);
    out.values[j] = (x >= 0.0 && x < 1.0) ? 1.0 : 0.0;
  }
  return out;
}

// Projects onto real even signals (x = 0 sits at index N/2; index 0 is its own mirror).
inline SampledSignal symmetrize_real_even(const SampledSignal& f) {
  const std::size_t n = f.grid.size;
  SampledSignal out{f.grid, std::vector<cplx>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t mirror = (n - j) % n;
    out.values[j] = 0.5 * (f.values[j].real() + f.values[mirror].real());
  }
  return out;
}

}  // namespace tfseq

#endif
