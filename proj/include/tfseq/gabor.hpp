#ifndef TFSEQ_GABOR_HPP
#define TFSEQ_GABOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/signal.hpp"

namespace tfseq {

// Time-frequency lattice a Z x b Z with truncation box |k| <= K, |n| <= M.
struct LatticeSpec {
  double a = 1.0;
  double b = 1.0;
  int K = 0;
  int M = 0;
};

inline void validate_lattice(const LatticeSpec& lat, const GridSpec& grid) {
  if (!(lat.a > 0.0 && lat.b > 0.0)) throw validation_error("lattice: a, b must be positive");
  if (lat.K < 0 || lat.M < 0) throw validation_error("lattice: truncations must be non-negative");
  if (!grid.is_aligned(lat.a)) grid.shift_index(lat.a);  // throws with the nearest multiple
  if (lat.b * lat.M > grid.nyquist() * (1.0 + 1e-9))
    throw validation_error("lattice: b*M exceeds the grid Nyquist frequency");
  // beyond half the period, translated atoms wrap onto other lattice points and get
  // double counted
  if (lat.a * lat.K >= grid.half_width * (1.0 - 1e-9))
    throw validation_error("lattice: a*K reaches half the grid period (atoms would alias)");
}

struct GaborCoefficients {
  LatticeSpec lattice;
  std::vector<cplx> entries;  // (2K+1) x (2M+1), row k, column n

  static GaborCoefficients zeros(const LatticeSpec& lat) {
    return {lat, std::vector<cplx>(static_cast<std::size_t>(2 * lat.K + 1) * (2 * lat.M + 1))};
  }
  std::size_t index(int k, int n) const {
    if (std::abs(k) > lattice.K || std::abs(n) > lattice.M)
      throw validation_error("gabor coefficients: index outside the truncation box");
    return static_cast<std::size_t>(k + lattice.K) * (2 * lattice.M + 1) +
           static_cast<std::size_t>(n + lattice.M);
  }
  cplx& at(int k, int n) { return entries[index(k, n)]; }
  const cplx& at(int k, int n) const { return entries[index(k, n)]; }
};

namespace detail {

// Whether b is an integer multiple of the grid's frequency step, enabling the
// one-FFT-per-k row path; returns the multiplier or 0.
inline long fft_row_multiplier(const GridSpec& grid, double b) {
  const double r = b / grid.freq_step();
  const long l = std::lround(r);
  if (l >= 1 && std::abs(r - static_cast<double>(l)) <= 1e-9 * std::max(1.0, r)) return l;
  return 0;
}

inline std::vector<cplx> modulation_steps(const GridSpec& grid, double b) {
  std::vector<cplx> v(grid.size);
  for (std::size_t j = 0; j < grid.size; ++j)
    v[j] = std::polar(1.0, -2.0 * std::numbers::pi * b * grid.point(j));
  return v;
}

}  // namespace detail

// c_{k,n} = step * sum_j f(x_j) conj(T_{ak} M_{bn} psi)(x_j). Each k-row is one FFT
// when b sits on the dual grid, and an iterated-phase dot product otherwise.
inline GaborCoefficients analyze(const SampledSignal& psi, const LatticeSpec& lat,
                                 const SampledSignal& f) {
  require_same_grid(psi, f);
  validate_lattice(lat, f.grid);
  const GridSpec& grid = f.grid;
  const std::size_t n_pts = grid.size;
  const long ln = static_cast<long>(n_pts);
  const long pa = grid.shift_index(lat.a);
  const long l = detail::fft_row_multiplier(grid, lat.b);
  const double dx = grid.step();

  GaborCoefficients out = GaborCoefficients::zeros(lat);
  std::vector<cplx> u(n_pts);
  std::vector<cplx> steps;
  if (l == 0) steps = detail::modulation_steps(grid, lat.b);

  for (int k = -lat.K; k <= lat.K; ++k) {
    const long shift = pa * k;
    for (std::size_t j = 0; j < n_pts; ++j) {
      long src = (static_cast<long>(j) - shift) % ln;
      if (src < 0) src += ln;
      u[j] = f.values[j] * std::conj(psi.values[static_cast<std::size_t>(src)]);
    }
    if (l != 0) {
      std::vector<cplx> g = u;
      fft_pow2(g, false);
      for (int n = -lat.M; n <= lat.M; ++n) {
        const long q = l * n;
        long bin = q % ln;
        if (bin < 0) bin += ln;
        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
        const cplx phase =
            sign * std::polar(dx, 2.0 * std::numbers::pi * lat.a * lat.b * k * n);
        out.at(k, n) = phase * g[static_cast<std::size_t>(bin)];
      }
    } else {
      cplx row0 = 0.0;
      for (std::size_t j = 0; j < n_pts; ++j) row0 += u[j];
      out.at(k, 0) = dx * row0;
      std::vector<cplx> w(n_pts, cplx(1.0, 0.0));
      for (int n = 1; n <= lat.M; ++n) {
        cplx rp = 0.0, rm = 0.0;
        for (std::size_t j = 0; j < n_pts; ++j) {
          w[j] *= steps[j];
          rp += u[j] * w[j];
          rm += u[j] * std::conj(w[j]);
        }
        out.at(k, n) =
            std::polar(dx, 2.0 * std::numbers::pi * lat.a * lat.b * k * n) * rp;
        out.at(k, -n) =
            std::polar(dx, -2.0 * std::numbers::pi * lat.a * lat.b * k * n) * rm;
      }
    }
  }
  return out;
}

// sum_{k,n} c_{k,n} T_{ak} M_{bn} psi, inner sums per k by inverse FFT on the same
// fast path as analyze.
inline SampledSignal synthesize(const SampledSignal& psi, const LatticeSpec& lat,
                                const GaborCoefficients& c) {
  validate_lattice(lat, psi.grid);
  if (c.lattice.K != lat.K || c.lattice.M != lat.M || c.lattice.a != lat.a ||
      c.lattice.b != lat.b)
    throw validation_error("synthesize: coefficient box does not match the lattice");
  const GridSpec& grid = psi.grid;
  const std::size_t n_pts = grid.size;
  const long ln = static_cast<long>(n_pts);
  const long pa = grid.shift_index(lat.a);
  const long l = detail::fft_row_multiplier(grid, lat.b);

  SampledSignal out = SampledSignal::zeros(grid);
  std::vector<cplx> steps;
  if (l == 0) steps = detail::modulation_steps(grid, lat.b);
  std::vector<cplx> s(n_pts);
  std::vector<cplx> spread(n_pts);

  for (int k = -lat.K; k <= lat.K; ++k) {
    // c'_{k,n} = c_{k,n} e^{-2 pi i a b k n}
    if (l != 0) {
      std::fill(spread.begin(), spread.end(), cplx(0.0, 0.0));
      for (int n = -lat.M; n <= lat.M; ++n) {
        const long q = l * n;
        long bin = q % ln;
        if (bin < 0) bin += ln;
        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
        spread[static_cast<std::size_t>(bin)] +=
            sign * c.at(k, n) * std::polar(1.0, -2.0 * std::numbers::pi * lat.a * lat.b * k * n);
      }
      s = spread;
      fft_pow2(s, true);
      for (auto& v : s) v *= static_cast<double>(n_pts);
    } else {
      const cplx c0 = c.at(k, 0);
      std::fill(s.begin(), s.end(), c0);
      std::vector<cplx> w(n_pts, cplx(1.0, 0.0));
      for (int n = 1; n <= lat.M; ++n) {
        const cplx cp =
            c.at(k, n) * std::polar(1.0, -2.0 * std::numbers::pi * lat.a * lat.b * k * n);
        const cplx cm =
            c.at(k, -n) * std::polar(1.0, 2.0 * std::numbers::pi * lat.a * lat.b * k * n);
        for (std::size_t j = 0; j < n_pts; ++j) {
          w[j] *= steps[j];
          s[j] += cp * std::conj(w[j]) + cm * w[j];
        }
      }
    }
    const long shift = pa * k;
    for (std::size_t j = 0; j < n_pts; ++j) {
      long src = (static_cast<long>(j) - shift) % ln;
      if (src < 0) src += ln;
      out.values[j] += psi.values[static_cast<std::size_t>(src)] * s[j];
    }
  }
  return out;
}

inline SampledSignal frame_operator(const SampledSignal& psi, const LatticeSpec& lat,
                                    const SampledSignal& f) {
  return synthesize(psi, lat, analyze(psi, lat, f));
}

// ---------------------------------------------------------------------------
// spectral estimates

struct FrameBoundEstimate {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};

namespace detail {

// Eigenvalue count below x for a symmetric tridiagonal matrix (Sturm sequence).
inline int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double off2 = (i == 0) ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (d == 0.0 ? off2 / 1e-300 : off2 / d);
    if (d < 0.0) ++count;
  }
  return count;
}

inline std::pair<double, double> tridiag_extreme_eigs(const std::vector<double>& diag,
                                                      const std::vector<double>& off) {
  double lo = diag[0], hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  const int m = static_cast<int>(diag.size());
  double a = lo, b = hi;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (a + b);
    (sturm_count(diag, off, mid) >= 1 ? b : a) = mid;
  }
  const double smallest = 0.5 * (a + b);
  a = lo;
  b = hi;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (a + b);
    (sturm_count(diag, off, mid) >= m ? b : a) = mid;
  }
  const double largest = 0.5 * (a + b);
  return {smallest, largest};
}

using SignalOp = std::function<SampledSignal(const SampledSignal&)>;

// Lanczos with full reorthogonalization; `project` (optional) restricts the
// iteration to a subspace, e.g. interior-supported signals.
inline FrameBoundEstimate lanczos_extreme(const SignalOp& op, const SampledSignal& start,
                                          int iters,
                                          const std::function<void(SampledSignal&)>& project = {}) {
  SampledSignal v = start;
  if (project) project(v);
  const double nrm0 = l2_norm(v);
  if (nrm0 == 0.0) throw validation_error("lanczos: start vector vanishes on the subspace");
  for (auto& x : v.values) x /= nrm0;

  std::vector<SampledSignal> basis;
  std::vector<double> alpha, beta;
  SampledSignal v_prev = SampledSignal::zeros(v.grid);
  double beta_prev = 0.0;
  double scale = 1e-300;
  for (int it = 0; it < iters; ++it) {
    basis.push_back(v);
    SampledSignal w = op(v);
    if (project) project(w);
    const double a = std::real(inner(w, v));
    alpha.push_back(a);
    for (std::size_t j = 0; j < w.values.size(); ++j)
      w.values[j] -= a * v.values[j] + beta_prev * v_prev.values[j];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const cplx proj = inner(w, q);
        for (std::size_t j = 0; j < w.values.size(); ++j) w.values[j] -= proj * q.values[j];
      }
    // re-project: the recurrence reintroduces out-of-subspace components, and the
    // normalization amplifies them exponentially when beta < alpha
    if (project) project(w);
    scale = std::max(scale, std::abs(a));
    const double b = l2_norm(w);
    if (b < 1e-10 * scale) break;  // subspace exhausted; the rest is projector noise
    beta.push_back(b);
    beta_prev = b;
    v_prev = v;
    for (std::size_t j = 0; j < w.values.size(); ++j) w.values[j] /= b;
    v = w;
  }
  if (!beta.empty()) beta.resize(alpha.size() - 1);
  const auto [lo, hi] = tridiag_extreme_eigs(alpha, beta);
  FrameBoundEstimate est;
  est.lower = lo;
  est.upper = hi;
  est.iterations = static_cast<int>(alpha.size());
  return est;
}

inline SampledSignal seeded_noise(const GridSpec& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  SampledSignal out = SampledSignal::zeros(grid);
  for (auto& v : out.values) v = cplx(dist(rng), dist(rng));
  return out;
}

}  // namespace detail

namespace detail {

// Modified Gram-Schmidt; members that are numerically dependent are dropped.
inline std::vector<SampledSignal> orthonormalize(std::vector<SampledSignal> corpus) {
  std::vector<SampledSignal> basis;
  for (auto& f : corpus) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const cplx proj = inner(f, q);
        for (std::size_t j = 0; j < f.values.size(); ++j) f.values[j] -= proj * q.values[j];
      }
    const double nrm = l2_norm(f);
    if (nrm < 1e-8) continue;
    for (auto& v : f.values) v /= nrm;
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace detail

// Extreme eigenvalue estimates of the truncated frame operator, compressed onto a
// corpus of signals supported (numerically) in the interior half of the grid and in
// the covered frequency band: by default the span of the first Hermite functions, or
// a caller-provided corpus (orthonormalized here). Without this restriction the
// estimates only see the truncation edges, where the operator vanishes regardless of
// the frame.
inline FrameBoundEstimate frame_bounds(const SampledSignal& psi, const LatticeSpec& lat,
                                       int iters = 100, int basis_size = 32,
                                       const std::vector<SampledSignal>& corpus = {}) {
  validate_lattice(lat, psi.grid);
  if (basis_size < 1 || basis_size > 64)
    throw validation_error("frame_bounds: basis size must be in [1, 64]");
  std::vector<SampledSignal> seed;
  if (corpus.empty()) {
    seed.reserve(basis_size);
    for (int m = 0; m < basis_size; ++m) seed.push_back(hermite(m, psi.grid));
  } else {
    seed = corpus;
  }
  const std::vector<SampledSignal> basis = detail::orthonormalize(std::move(seed));
  if (basis.empty()) throw validation_error("frame_bounds: corpus spans nothing");
  auto project = [&basis](SampledSignal& f) {
    std::vector<cplx> coef(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) coef[i] = inner(f, basis[i]);
    std::fill(f.values.begin(), f.values.end(), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < f.values.size(); ++j)
        f.values[j] += coef[i] * basis[i].values[j];
  };
  auto op = [&psi, &lat](const SampledSignal& f) { return frame_operator(psi, lat, f); };
  return detail::lanczos_extreme(op, detail::seeded_noise(psi.grid, 0x5eed), iters, project);
}

// ---------------------------------------------------------------------------
// dual and tight windows

inline double duality_defect(const SampledSignal& psi, const SampledSignal& gamma,
                             const LatticeSpec& lat, const std::vector<SampledSignal>& corpus);

struct DualWindowInfo {
  SampledSignal window;
  int cg_iterations = 0;
  double residual = 0.0;
  double ritz_min = 0.0;
  double ritz_max = 0.0;
};

// gamma = S^{-1} psi by matrix-free conjugate gradient. Positive definiteness of the
// truncated frame operator on interior-concentrated signals is pre-checked via the
// compressed Ritz estimates of frame_bounds, and the computed window is verified by
// reconstruction; failing either yields a not-a-frame diagnostic (a heuristic
// certificate, never a proof).
inline DualWindowInfo canonical_dual_info(const SampledSignal& psi, const LatticeSpec& lat,
                                          double tol, int max_iter) {
  validate_lattice(lat, psi.grid);
  if (!(tol > 0.0)) throw validation_error("canonical_dual: tol must be positive");
  auto op = [&psi, &lat](const SampledSignal& f) { return frame_operator(psi, lat, f); };
  const auto ritz = frame_bounds(psi, lat, 60, 48);
  if (!(ritz.lower > tol)) {
    std::ostringstream msg;
    msg << "canonical_dual: truncated frame operator is not positive definite at tolerance "
        << tol << " (compressed Ritz interval [" << ritz.lower << ", " << ritz.upper
        << "]); the system does not behave like a frame on this grid";
    throw non_convergence_error(msg.str());
  }

  const double target = tol * l2_norm(psi);
  SampledSignal x = SampledSignal::zeros(psi.grid);
  SampledSignal r = psi;
  SampledSignal p = r;
  double rho = std::real(inner(r, r));
  int it = 0;
  for (; it < max_iter && std::sqrt(rho) > target; ++it) {
    const SampledSignal q = op(p);
    const double denom = std::real(inner(p, q));
    if (!(denom > 0.0)) break;
    const double alpha = rho / denom;
    for (std::size_t j = 0; j < x.values.size(); ++j) {
      x.values[j] += alpha * p.values[j];
      r.values[j] -= alpha * q.values[j];
    }
    const double rho_next = std::real(inner(r, r));
    const double beta = rho_next / rho;
    rho = rho_next;
    for (std::size_t j = 0; j < p.values.size(); ++j)
      p.values[j] = r.values[j] + beta * p.values[j];
  }
  const double res = std::sqrt(rho) / l2_norm(psi);
  if (res > tol) {
    std::ostringstream msg;
    msg << "canonical_dual: conjugate gradient stalled at relative residual " << res << " after "
        << it << " iterations (Ritz interval [" << ritz.lower << ", " << ritz.upper
        << "]); the system does not behave like a frame on this grid";
    throw non_convergence_error(msg.str());
  }
  // Solving S gamma = psi within the Krylov space of psi can succeed even when the
  // system is not a frame (ab > 1): incompleteness shows up as interior signals
  // missing from the atoms' span. Diagnose on the conjunction of a collapsed
  // compressed spectrum and a failed reconstruction probe, so that merely lossy
  // truncations (e.g. slowly decaying windows) are not misreported.
  {
    std::vector<SampledSignal> probe;
    for (int m = 0; m <= 3; ++m) probe.push_back(hermite(m, psi.grid));
    const double defect = duality_defect(psi, x, lat, probe);
    if (defect > 0.1 && ritz.lower < 0.01 * ritz.upper) {
      std::ostringstream msg;
      msg << "canonical_dual: computed window fails reconstruction (duality defect " << defect
          << " on the probe corpus; compressed Ritz interval [" << ritz.lower << ", "
          << ritz.upper << "]); the system does not behave like a frame on this grid";
      throw non_convergence_error(msg.str());
    }
  }
  DualWindowInfo info{std::move(x), it, res, ritz.lower, ritz.upper};
  return info;
}

inline SampledSignal canonical_dual(const SampledSignal& psi, const LatticeSpec& lat, double tol,
                                    int max_iter) {
  return canonical_dual_info(psi, lat, tol, max_iter).window;
}

// S^{-1/2} psi by the window-level Newton-Schulz iteration
//   phi <- (3 phi - S_phi phi / beta) / 2
// where S_phi is the frame operator generated by the current iterate and beta is a
// spectral pre-scaling of the original operator. Since every iterate is a polynomial
// in S applied to psi, S_phi phi equals S p^3(S) psi, which is exactly the
// Y (3I - S Y^2)/2 update evaluated on the window. Real even inputs stay real even
// (each iterate is symmetrized).
inline SampledSignal tight_window(const SampledSignal& psi, const LatticeSpec& lat, double tol,
                                  int max_iter = 200) {
  validate_lattice(lat, psi.grid);
  if (!(tol > 0.0)) throw validation_error("tight_window: tol must be positive");
  auto base_op = [&lat](const SampledSignal& w, const SampledSignal& f) {
    return frame_operator(w, lat, f);
  };
  const auto ritz = frame_bounds(psi, lat, 60, 48);
  if (!(ritz.lower > tol))
    throw non_convergence_error("tight_window: truncated frame operator not positive definite");
  const double beta = 1.05 * ritz.upper;

  const SampledSignal sym = symmetrize_real_even(psi);
  double asym = 0.0;
  for (std::size_t j = 0; j < psi.values.size(); ++j)
    asym = std::max(asym, std::abs(psi.values[j] - sym.values[j]));
  const bool keep_symmetric = asym <= 1e-12 * std::max(1.0, max_abs(psi));

  // The truncated frame operator has a numerical near-kernel, along which the
  // iteration amplifies roundoff by 3/2 per step once the useful part has
  // converged. Keep the best iterate and stop when the step size turns upward.
  SampledSignal phi = psi;
  SampledSignal best_phi = psi;
  double best_diff = std::numeric_limits<double>::infinity();
  const double scale0 = l2_norm(psi);
  int rises = 0;
  for (int it = 0; it < max_iter; ++it) {
    SampledSignal s = base_op(phi, phi);
    SampledSignal next = phi;
    double diff = 0.0;
    for (std::size_t j = 0; j < next.values.size(); ++j) {
      const cplx updated = 1.5 * phi.values[j] - 0.5 / beta * s.values[j];
      diff += std::norm(updated - phi.values[j]);
      next.values[j] = updated;
    }
    if (keep_symmetric) next = symmetrize_real_even(next);
    diff = std::sqrt(diff * phi.grid.step()) / scale0;
    phi = next;
    if (!std::isfinite(diff) || diff > 1e8)
      throw non_convergence_error("tight_window: Newton-Schulz iteration diverged");
    if (diff < best_diff) {
      best_diff = diff;
      best_phi = phi;
      rises = 0;
    } else if (++rises >= 5 && it >= 6) {
      break;  // noise floor reached
    }
    if (diff <= tol) break;
  }
  if (best_diff > tol) {
    std::ostringstream msg;
    msg << "tight_window: Newton-Schulz stalled at step size " << best_diff
        << " above the requested tolerance " << tol;
    throw non_convergence_error(msg.str());
  }
  phi = best_phi;
  // residual check: at the fixed point S_phi phi = beta phi
  {
    SampledSignal s = base_op(phi, phi);
    double num = 0.0;
    for (std::size_t j = 0; j < s.values.size(); ++j)
      num += std::norm(s.values[j] / beta - phi.values[j]);
    const double res = std::sqrt(num * phi.grid.step()) / l2_norm(phi);
    if (res > 100.0 * tol)
      throw non_convergence_error("tight_window: fixed-point residual exceeds tolerance");
  }
  const double unscale = 1.0 / std::sqrt(beta);
  for (auto& v : phi.values) v *= unscale;
  return phi;
}

// ---------------------------------------------------------------------------
// duality checks

// max over relative offsets |dk|, |dn| <= box of
// | (1/ab) (T_{k/b} M_{n/a} psi, T_{k'/b} M_{n'/a} gamma) - delta delta |.
inline double wexler_raz_defect(const SampledSignal& psi, const SampledSignal& gamma,
                                const LatticeSpec& lat, int box) {
  require_same_grid(psi, gamma);
  if (box < 0) throw validation_error("wexler_raz_defect: box must be non-negative");
  const double tb = 1.0 / lat.b;
  const double ta = 1.0 / lat.a;
  psi.grid.shift_index(tb);  // both adjoint-lattice constants must be grid-aligned
  psi.grid.shift_index(ta);
  double defect = 0.0;
  for (int dk = -box; dk <= box; ++dk) {
    const SampledSignal shifted = translate(psi, tb * dk);
    for (int dn = -box; dn <= box; ++dn) {
      const cplx val = inner(modulate(shifted, ta * dn), gamma) / (lat.a * lat.b);
      const double target = (dk == 0 && dn == 0) ? 1.0 : 0.0;
      defect = std::max(defect, std::abs(val - target));
    }
  }
  return defect;
}

// max over the corpus of || D_gamma C_psi f - f || / || f ||.
inline double duality_defect(const SampledSignal& psi, const SampledSignal& gamma,
                             const LatticeSpec& lat, const std::vector<SampledSignal>& corpus) {
  double worst = 0.0;
  for (const auto& f : corpus) {
    const double nf = l2_norm(f);
    if (nf == 0.0) continue;
    const SampledSignal rec = synthesize(gamma, lat, analyze(psi, lat, f));
    double num = 0.0;
    for (std::size_t j = 0; j < f.values.size(); ++j) num += std::norm(rec.values[j] - f.values[j]);
    worst = std::max(worst, std::sqrt(num * f.grid.step()) / nf);
  }
  return worst;
}

}  // namespace tfseq

#endif
