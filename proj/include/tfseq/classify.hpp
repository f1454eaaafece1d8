#ifndef TFSEQ_CLASSIFY_HPP
#define TFSEQ_CLASSIFY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/gabor.hpp"
#include "tfseq/weights.hpp"
#include "tfseq/wilson.hpp"

namespace tfseq {

enum class SpaceCase { beurling, roumieu };

// S^[omega]_[eta]: values decay against eta, Fourier transforms against omega.
struct SpaceDescriptor {
  WeightFunction omega;
  WeightFunction eta;
  SpaceCase cs = SpaceCase::beurling;

  static SpaceDescriptor make(WeightFunction omega, WeightFunction eta, SpaceCase cs) {
    SpaceDescriptor sp{std::move(omega), std::move(eta), cs};
    for (const WeightFunction* w : {&sp.omega, &sp.eta}) {
      const ConditionReport rep = check_conditions(*w, 100.0);
      const bool gamma_needed = (cs == SpaceCase::beurling) ? rep.gamma_ok : rep.gamma_strict_ok;
      if (!rep.alpha_ok || !gamma_needed)
        throw validation_error(
            "space descriptor: weight fails the conditions required for the declared case");
    }
    return sp;
  }
};

// ---------------------------------------------------------------------------
// coefficient-space norms

// max |c_{k,n}| e^{r (eta(|k|) + omega(|n|))}; with lattice_scaled, the arguments are
// a|k| and b|n| (the rescaling condition (alpha) makes equivalent).
inline double coeff_norm(const GaborCoefficients& c, const SpaceDescriptor& sp, double r,
                         bool lattice_scaled = false) {
  double best = -std::numeric_limits<double>::infinity();
  const double fa = lattice_scaled ? c.lattice.a : 1.0;
  const double fb = lattice_scaled ? c.lattice.b : 1.0;
  for (int k = -c.lattice.K; k <= c.lattice.K; ++k)
    for (int n = -c.lattice.M; n <= c.lattice.M; ++n) {
      const double mag = std::abs(c.at(k, n));
      if (mag == 0.0) continue;
      const double wgt = eval(sp.eta, fa * std::abs(k)) + eval(sp.omega, fb * std::abs(n));
      best = std::max(best, std::log(mag) + r * wgt);
    }
  if (best == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(best);
}

inline double coeff_norm(const WilsonCoefficients& c, const SpaceDescriptor& sp, double r) {
  double best = -std::numeric_limits<double>::infinity();
  for (int k = -c.K; k <= c.K; ++k)
    for (int n = 0; n <= c.M; ++n) {
      const double mag = std::abs(c.at(k, n));
      if (mag == 0.0) continue;
      const double wgt = eval(sp.eta, std::abs(k)) + eval(sp.omega, n);
      best = std::max(best, std::log(mag) + r * wgt);
    }
  if (best == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(best);
}

// ---------------------------------------------------------------------------
// decay envelopes

struct EnvelopeFit {
  double r_star = 0.0;      // fitted decay rate against eta(|k|) + omega(n)
  double residual = 0.0;    // RMS deviation of the shell maxima from the fitted line
  bool degenerate = false;  // all shell maxima equal: no usable envelope
  int shells = 0;
  std::vector<std::pair<double, double>> shell_maxima;  // (weight, log|c|), plot-ready
};

// Least-squares envelope log|c| <= log C - r w over per-shell maxima of the weight
// w = eta(|k|) + omega(n). A single usable point yields the +inf marker.
inline EnvelopeFit fit_decay_envelope(const std::vector<std::pair<double, double>>& points) {
  EnvelopeFit fit;
  if (points.empty()) {
    fit.r_star = std::numeric_limits<double>::infinity();
    return fit;
  }
  double wmin = points[0].first, wmax = points[0].first;
  for (const auto& p : points) {
    wmin = std::min(wmin, p.first);
    wmax = std::max(wmax, p.first);
  }
  const int nb = 32;
  std::vector<double> shell_y(nb, -std::numeric_limits<double>::infinity());
  std::vector<double> shell_w(nb, 0.0);
  const double span = std::max(wmax - wmin, 1e-300);
  for (const auto& p : points) {
    int bin = static_cast<int>((p.first - wmin) / span * nb);
    bin = std::clamp(bin, 0, nb - 1);
    if (p.second > shell_y[bin]) {
      shell_y[bin] = p.second;
      shell_w[bin] = p.first;
    }
  }
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < nb; ++i)
    if (shell_y[i] > -std::numeric_limits<double>::infinity())
      pts.emplace_back(shell_w[i], shell_y[i]);
  fit.shells = static_cast<int>(pts.size());
  fit.shell_maxima = pts;
  if (pts.size() < 2) {
    fit.r_star = std::numeric_limits<double>::infinity();
    return fit;
  }
  double ymin = pts[0].second, ymax = pts[0].second;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.second);
    ymax = std::max(ymax, p.second);
  }
  if (ymax - ymin < 1e-12) {
    fit.degenerate = true;
    return fit;
  }
  double sw = 0, sy = 0, sww = 0, swy = 0;
  for (const auto& p : pts) {
    sw += p.first;
    sy += p.second;
    sww += p.first * p.first;
    swy += p.first * p.second;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sww - sw * sw;
  if (std::abs(denom) < 1e-300) {
    fit.degenerate = true;
    return fit;
  }
  const double slope = (n * swy - sw * sy) / denom;
  const double intercept = (sy - slope * sw) / n;
  fit.r_star = -slope;
  double rss = 0.0;
  for (const auto& p : pts) {
    const double d = p.second - (intercept + slope * p.first);
    rss += d * d;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

inline EnvelopeFit decay_envelope(const WilsonCoefficients& c, const SpaceDescriptor& sp) {
  std::vector<std::pair<double, double>> pts;
  for (int k = -c.K; k <= c.K; ++k)
    for (int n = 0; n <= c.M; ++n) {
      const double mag = std::abs(c.at(k, n));
      if (mag > 1e-300)
        pts.emplace_back(eval(sp.eta, std::abs(k)) + eval(sp.omega, n), std::log(mag));
    }
  return fit_decay_envelope(pts);
}

inline EnvelopeFit decay_envelope(const GaborCoefficients& c, const SpaceDescriptor& sp) {
  std::vector<std::pair<double, double>> pts;
  for (int k = -c.lattice.K; k <= c.lattice.K; ++k)
    for (int n = -c.lattice.M; n <= c.lattice.M; ++n) {
      const double mag = std::abs(c.at(k, n));
      if (mag > 1e-300)
        pts.emplace_back(eval(sp.eta, std::abs(k)) + eval(sp.omega, std::abs(n)), std::log(mag));
    }
  return fit_decay_envelope(pts);
}

// ---------------------------------------------------------------------------
// classification verdicts

enum class relation {
  isomorphic,
  not_isomorphic,
  included,
  not_included,
  equal,
  inconclusive,
};

enum class decision_method { closed_form, numeric_probe };

struct ClassificationVerdict {
  relation rel = relation::inconclusive;
  decision_method method = decision_method::closed_form;
  std::optional<double> witness_L;
  std::optional<double> witness_log_s0;  // thresholds can exceed the double range of s
  double probe_lo = 0.0;
  double probe_hi = 0.0;
  std::string note;
};

namespace detail {

inline bool symbolic(const WeightFunction& w) { return w.kind != weight_kind::tabulated; }

// w2 = O(w1) for the symbolic kinds, exact.
inline bool big_o_closed(const WeightFunction& w2, const WeightFunction& w1) {
  if (w2.kind == weight_kind::log_power && w1.kind == weight_kind::power_log) return true;
  if (w2.kind == weight_kind::power_log && w1.kind == weight_kind::log_power) return false;
  if (w2.kind == weight_kind::log_power)  // both log
    return w2.u <= w1.u;
  // both power_log: compare growth exponents lexicographically
  if (1.0 / w2.mu != 1.0 / w1.mu) return 1.0 / w2.mu < 1.0 / w1.mu;
  return w2.u <= w1.u;
}

inline bool equivalent_closed(const WeightFunction& a, const WeightFunction& b) {
  return big_o_closed(a, b) && big_o_closed(b, a);
}

// Numeric w2 = O(w1): some L <= 2^10 with w2(t) <= L w1(t) for all probes past a
// threshold (non-empty tail).
inline std::optional<std::pair<double, double>> big_o_numeric(const WeightFunction& w2,
                                                              const WeightFunction& w1,
                                                              const std::vector<double>& probes) {
  for (int e = 0; e <= 10; ++e) {
    const double L = std::ldexp(1.0, e);
    std::size_t first_ok = probes.size();
    for (std::size_t i = probes.size(); i-- > 0;) {
      if (eval(w2, probes[i]) <= L * eval(w1, probes[i]) + 1e-12)
        first_ok = i;
      else
        break;
    }
    if (first_ok < probes.size()) return std::make_pair(L, probes[first_ok]);
  }
  return std::nullopt;
}

// Gabor accessibility via the Gaussian route: omega = o(t^2) (Beurling) or O(t^2)
// (Roumieu). Closed form for the symbolic kinds, trend heuristic for tabulated.
inline bool gabor_accessible_weight(const WeightFunction& w, SpaceCase cs) {
  switch (w.kind) {
    case weight_kind::log_power:
      return true;
    case weight_kind::power_log:
      if (cs == SpaceCase::beurling) return w.mu > 0.5 || (w.mu == 0.5 && w.u < 0.0);
      return w.mu > 0.5 || (w.mu == 0.5 && w.u <= 0.0);
    case weight_kind::tabulated: {
      const double t_hi = std::max(100.0, 4.0 * w.knots.back().first);
      double first = 0.0, last = 0.0, peak = 0.0;
      constexpr int np = 32;
      for (int i = 0; i < np; ++i) {
        const double t = 2.0 * std::pow(t_hi / 2.0, static_cast<double>(i) / (np - 1));
        const double ratio = eval(w, t) / (t * t);
        if (i == 0) first = ratio;
        if (i == np - 1) last = ratio;
        peak = std::max(peak, ratio);
      }
      if (cs == SpaceCase::beurling) return last < 0.5 * first && peak <= 2.0 * first;
      return peak <= 2.0 * first;
    }
  }
  return false;
}

inline double log_inverse_sum(const SpaceDescriptor& sp, double z) {
  return log_inverse_log(sp.omega, z) + log_inverse_log(sp.eta, z);
}

// log log(1 + e^y), stable at both ends.
inline double loglog1pexp(double y) {
  if (y > 30.0) return std::log(y + std::log1p(std::exp(-y)));
  const double inner = std::log1p(std::exp(y));
  return inner > 0.0 ? std::log(inner) : -std::numeric_limits<double>::infinity();
}

// For w = power_log(mu, u), the log-inverse at z is y = mu z + r with
//   r/mu + u loglog(1 + e^{mu z + r}) = 0.
// Bisecting this residual keeps the O(log z) correction r exact even when mu z is
// far beyond the additive resolution of double.
inline double reduced_power_log_inverse(const WeightFunction& w, double z) {
  if (w.u == 0.0) return 0.0;
  const double mu = w.mu, u = w.u;
  auto resid = [&](double r) { return r / mu + u * loglog1pexp(mu * z + r); };
  double step = std::abs(mu * u) * (std::abs(std::log(std::max(mu * z, 2.0))) + 4.0) + 4.0;
  double rlo = 0.0, rhi = 0.0;
  if (resid(0.0) > 0.0) {
    rlo = -step;
    int guard = 0;
    while (resid(rlo) > 0.0 && ++guard < 64) rlo *= 2.0;
  } else {
    rhi = step;
    int guard = 0;
    while (resid(rhi) < 0.0 && ++guard < 64) rhi *= 2.0;
  }
  for (int i = 0; i < 200 && (rhi - rlo) > 1e-13 * (1.0 + std::abs(rhi) + std::abs(rlo)); ++i) {
    const double mid = 0.5 * (rlo + rhi);
    (resid(mid) < 0.0 ? rlo : rhi) = mid;
  }
  return 0.5 * (rlo + rhi);
}

// Descriptor log-inverse sum split as slope * z + rest, exact for power-log pairs.
struct ReducedSum {
  double slope = 0.0;
  double rest = 0.0;
};

inline ReducedSum reduced_log_inverse_sum(const SpaceDescriptor& sp, double z) {
  ReducedSum rs;
  rs.slope = sp.omega.mu + sp.eta.mu;
  rs.rest = reduced_power_log_inverse(sp.omega, z) + reduced_power_log_inverse(sp.eta, z);
  return rs;
}

}  // namespace detail

// Probes for the isomorphism condition, as log(s) values. Power-log families need
// astronomically large s to separate the log-power corrections, which only the log
// domain can represent.
inline std::vector<double> default_isomorphism_log_probes(const SpaceDescriptor& sp1,
                                                          const SpaceDescriptor& sp2) {
  bool any_log = false, any_tab = false;
  for (const WeightFunction* w : {&sp1.omega, &sp1.eta, &sp2.omega, &sp2.eta}) {
    any_log = any_log || w->kind == weight_kind::log_power;
    any_tab = any_tab || w->kind == weight_kind::tabulated;
  }
  // power-log families need z = log(s) far beyond double-representable s to separate
  // log-power corrections whose gap only grows like log(z)
  const double z_hi = any_tab ? 50.0 : (any_log ? 400.0 : 1e60);
  std::vector<double> z;
  const int np = 80;
  for (int i = 0; i < np; ++i)
    z.push_back(std::exp(std::log(z_hi) * static_cast<double>(i) / (np - 1)));
  return z;
}

// Theorem-level inclusion/equality decision: S1 subset of S2 iff omega2 = O(omega1)
// and eta2 = O(eta1); equality iff both weights are equivalent both ways.
inline ClassificationVerdict decide_inclusion(const SpaceDescriptor& sp1,
                                              const SpaceDescriptor& sp2,
                                              const std::vector<double>& probes) {
  if (sp1.cs != sp2.cs)
    throw validation_error("decide_inclusion: descriptors declare different cases");
  ClassificationVerdict v;
  if (!probes.empty()) {
    v.probe_lo = probes.front();
    v.probe_hi = probes.back();
  }
  const bool closed = detail::symbolic(sp1.omega) && detail::symbolic(sp1.eta) &&
                      detail::symbolic(sp2.omega) && detail::symbolic(sp2.eta);
  if (closed) {
    v.method = decision_method::closed_form;
    const bool fwd = detail::big_o_closed(sp2.omega, sp1.omega) &&
                     detail::big_o_closed(sp2.eta, sp1.eta);
    const bool bwd = detail::big_o_closed(sp1.omega, sp2.omega) &&
                     detail::big_o_closed(sp1.eta, sp2.eta);
    v.rel = (fwd && bwd) ? relation::equal : (fwd ? relation::included : relation::not_included);
    return v;
  }
  v.method = decision_method::numeric_probe;
  if (probes.empty()) throw validation_error("decide_inclusion: numeric mode needs probes");
  const auto o1 = detail::big_o_numeric(sp2.omega, sp1.omega, probes);
  const auto e1 = detail::big_o_numeric(sp2.eta, sp1.eta, probes);
  const auto o2 = detail::big_o_numeric(sp1.omega, sp2.omega, probes);
  const auto e2 = detail::big_o_numeric(sp1.eta, sp2.eta, probes);
  const bool fwd = o1 && e1;
  const bool bwd = o2 && e2;
  if (fwd && bwd)
    v.rel = relation::equal;
  else if (fwd)
    v.rel = relation::included;
  else
    v.rel = relation::not_included;
  if (fwd) v.witness_L = std::max(o1->first, e1->first);
  v.note = "finite-probe certificate";
  return v;
}

// Isomorphism decision for log(s) probes; the public s-domain wrapper follows.
inline ClassificationVerdict decide_isomorphic_log(const SpaceDescriptor& sp1,
                                                   const SpaceDescriptor& sp2,
                                                   const std::vector<double>& log_probes,
                                                   bool force_numeric = false) {
  if (sp1.cs != sp2.cs)
    throw validation_error("decide_isomorphic: descriptors declare different cases");
  ClassificationVerdict v;
  if (!log_probes.empty()) {
    v.probe_lo = log_probes.front();
    v.probe_hi = log_probes.back();
  }
  for (const SpaceDescriptor* sp : {&sp1, &sp2}) {
    if (!detail::gabor_accessible_weight(sp->omega, sp->cs) ||
        !detail::gabor_accessible_weight(sp->eta, sp->cs)) {
      v.rel = relation::inconclusive;
      v.note =
          "Gabor accessibility (sufficient condition omega, eta = o/O(t^2)) could not be "
          "certified; the classification criterion does not apply";
      return v;
    }
  }
  const bool all_power = sp1.omega.kind == weight_kind::power_log &&
                         sp1.eta.kind == weight_kind::power_log &&
                         sp2.omega.kind == weight_kind::power_log &&
                         sp2.eta.kind == weight_kind::power_log;
  if (all_power && !force_numeric) {
    // closed form for the power-log family: mu1+tau1 = mu2+tau2 and
    // u1 mu1 + v1 tau1 = u2 mu2 + v2 tau2
    v.method = decision_method::closed_form;
    const double sum1 = sp1.omega.mu + sp1.eta.mu;
    const double sum2 = sp2.omega.mu + sp2.eta.mu;
    const double mix1 = sp1.omega.u * sp1.omega.mu + sp1.eta.u * sp1.eta.mu;
    const double mix2 = sp2.omega.u * sp2.omega.mu + sp2.eta.u * sp2.eta.mu;
    const double tol = 1e-12 * std::max({1.0, std::abs(sum1), std::abs(mix1)});
    const bool iso = std::abs(sum1 - sum2) <= tol && std::abs(mix1 - mix2) <= tol;
    v.rel = iso ? relation::isomorphic : relation::not_isomorphic;
    v.note = "power-log family closed form: mu+tau and u*mu+v*tau invariants";
    return v;
  }
  v.method = decision_method::numeric_probe;
  if (log_probes.empty()) throw validation_error("decide_isomorphic: numeric mode needs probes");
  // search L and a probe threshold such that, for all z >= z0,
  //   logsum2(z - log L) <= logsum1(z) <= logsum2(z + log L)
  //
  // For all-power-log descriptors the sums are slope * z + O(log z); subtracting the
  // slope parts analytically keeps the decisive O(log z) corrections above roundoff
  // at arbitrarily large z. Other kinds use moderate probe ranges where the plain
  // evaluation is accurate.
  auto satisfied = [&](double z, double lambda) {
    if (all_power) {
      const auto a1 = detail::reduced_log_inverse_sum(sp1, z);
      const auto b_lo = detail::reduced_log_inverse_sum(sp2, z - lambda);
      const auto b_hi = detail::reduced_log_inverse_sum(sp2, z + lambda);
      const double slack =
          1e-9 * (1.0 + std::abs(a1.rest) + std::abs(b_lo.rest) + std::abs(b_hi.rest));
      const double lo_gap =
          (b_lo.slope - a1.slope) * z - b_lo.slope * lambda + b_lo.rest - a1.rest;
      const double hi_gap =
          (b_hi.slope - a1.slope) * z + b_hi.slope * lambda + b_hi.rest - a1.rest;
      return lo_gap <= slack && hi_gap >= -slack;
    }
    const double s1 = detail::log_inverse_sum(sp1, z);
    const double lo2 = detail::log_inverse_sum(sp2, z - lambda);
    const double hi2 = detail::log_inverse_sum(sp2, z + lambda);
    const double slack = 1e-9 * std::max(1.0, std::abs(s1));
    return lo2 <= s1 + slack && s1 <= hi2 + slack;
  };
  for (int e = 0; e <= 10; ++e) {
    const double L = std::ldexp(1.0, e);
    const double lambda = std::log(L);
    std::size_t first_ok = log_probes.size();
    for (std::size_t i = log_probes.size(); i-- > 0;) {
      if (satisfied(log_probes[i], lambda))
        first_ok = i;
      else
        break;
    }
    if (first_ok < log_probes.size()) {
      v.rel = relation::isomorphic;
      v.witness_L = L;
      v.witness_log_s0 = log_probes[first_ok];
      v.note = "finite-probe certificate of the inverse-product criterion";
      return v;
    }
  }
  v.rel = relation::not_isomorphic;
  v.note = "no (L, s0) with L <= 2^10 certifies the inverse-product criterion on the probes";
  return v;
}

inline ClassificationVerdict decide_isomorphic(const SpaceDescriptor& sp1,
                                               const SpaceDescriptor& sp2,
                                               const std::vector<double>& probes,
                                               bool force_numeric = false) {
  std::vector<double> log_probes;
  log_probes.reserve(probes.size());
  for (double s : probes) {
    if (!(s >= 1.0)) throw validation_error("decide_isomorphic: probes must be >= 1");
    log_probes.push_back(std::log(s));
  }
  return decide_isomorphic_log(sp1, sp2, log_probes, force_numeric);
}

// w(t^2) = O(w(t)): the slow-growth condition behind the collapse corollary.
inline bool check_collapse(const WeightFunction& w, const std::vector<double>& probes) {
  switch (w.kind) {
    case weight_kind::log_power:
      return true;
    case weight_kind::power_log:
      return false;
    case weight_kind::tabulated: {
      if (probes.empty()) throw validation_error("check_collapse: numeric mode needs probes");
      for (int e = 0; e <= 10; ++e) {
        const double L = std::ldexp(1.0, e);
        bool ok = true;
        for (double t : probes)
          if (eval(w, t * t) > L * eval(w, t) + 1e-12) {
            ok = false;
            break;
          }
        if (ok) return true;
      }
      return false;
    }
  }
  return false;
}

// liminf w(Ht)/w(t) > 1 for some H: fast growth, which rules the collapse out.
inline bool check_liminf_growth(const WeightFunction& w, const std::vector<double>& probes) {
  switch (w.kind) {
    case weight_kind::log_power:
      return false;
    case weight_kind::power_log:
      return true;
    case weight_kind::tabulated: {
      if (probes.empty()) throw validation_error("check_liminf_growth: numeric mode needs probes");
      // log-like ratios stay slightly above 1 on any finite range; demand a
      // decisive margin before declaring growth
      for (double H : {2.0, 4.0, 8.0}) {
        double worst = std::numeric_limits<double>::infinity();
        for (double t : probes) {
          const double denom = eval(w, t);
          if (denom <= 0.0) continue;
          worst = std::min(worst, eval(w, H * t) / denom);
        }
        if (worst > 1.25) return true;
      }
      return false;
    }
  }
  return false;
}

}  // namespace tfseq

#endif
