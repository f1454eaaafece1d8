#ifndef TFSEQ_WEIGHTS_HPP
#define TFSEQ_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tfseq/errors.hpp"

namespace tfseq {

// Weight functions on [0, infinity): continuous, non-decreasing, unbounded.
//
//   power_log : w(t) = t^(1/mu) * log(1+t)^u        (mu > 0, u real)
//   log_power : w(t) = log(1+t)^u                   (u >= 1)
//   tabulated : piecewise-linear through knots, linear extrapolation beyond the last
//
// power_log with u < 0 dips before its minimum at clamp_t; values below clamp_t are
// clamped to w(clamp_t) so the function stays non-decreasing on the whole domain.

enum class weight_kind { power_log, log_power, tabulated };

struct WeightFunction {
  weight_kind kind = weight_kind::power_log;
  double mu = 1.0;
  double u = 0.0;
  std::vector<std::pair<double, double>> knots;  // tabulated: (t, w(t)), t strictly increasing from 0
  double extrapolation_slope = 0.0;
  double clamp_t = 0.0;  // power_log monotonicity threshold (0 unless u < 0 forces one)

  static WeightFunction power_log(double mu, double u);
  static WeightFunction log_power(double u);
  static WeightFunction tabulated(std::vector<std::pair<double, double>> knots,
                                  std::optional<double> slope = std::nullopt);
};

namespace detail {

// d/dt log(t^(1/mu) log(1+t)^u) has the sign of 1/mu + u * r(t) with
// r(t) = t / ((1+t) log(1+t)), which decreases from 1 to 0.
inline double power_log_slope_factor(double t) {
  if (t <= 0) return 1.0;
  return t / ((1.0 + t) * std::log1p(t));
}

inline double power_log_clamp_threshold(double mu, double u) {
  if (u >= 0.0 || 1.0 / mu + u >= 0.0) return 0.0;
  double lo = 1e-12, hi = 1.0;
  auto g = [&](double t) { return 1.0 / mu + u * power_log_slope_factor(t); };
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e300) throw validation_error("power_log: no monotonicity threshold found");
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace detail

inline WeightFunction WeightFunction::power_log(double mu, double u) {
  if (!(mu > 0.0) || !std::isfinite(mu) || !std::isfinite(u))
    throw validation_error("power_log: mu must be positive and finite");
  WeightFunction w;
  w.kind = weight_kind::power_log;
  w.mu = mu;
  w.u = u;
  w.clamp_t = detail::power_log_clamp_threshold(mu, u);
  return w;
}

inline WeightFunction WeightFunction::log_power(double u) {
  if (!(u >= 1.0) || !std::isfinite(u)) throw validation_error("log_power: u must be >= 1");
  WeightFunction w;
  w.kind = weight_kind::log_power;
  w.u = u;
  return w;
}

inline WeightFunction WeightFunction::tabulated(std::vector<std::pair<double, double>> knots,
                                                std::optional<double> slope) {
  if (knots.size() < 2) throw validation_error("tabulated: need at least two knots");
  if (knots.front().first != 0.0) throw validation_error("tabulated: first knot must be at t = 0");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second) || knots[i].second < 0.0)
      throw validation_error("tabulated: knots must be finite with non-negative values");
    if (i > 0 && !(knots[i].first > knots[i - 1].first))
      throw validation_error("tabulated: knot abscissae must be strictly increasing");
    if (i > 0 && knots[i].second < knots[i - 1].second)
      throw validation_error("tabulated: knot values must be non-decreasing");
  }
  WeightFunction w;
  w.kind = weight_kind::tabulated;
  const auto& a = knots[knots.size() - 2];
  const auto& b = knots.back();
  w.extrapolation_slope = slope ? *slope : (b.second - a.second) / (b.first - a.first);
  if (w.extrapolation_slope < 0.0) throw validation_error("tabulated: extrapolation slope must be >= 0");
  w.knots = std::move(knots);
  return w;
}

// ---------------------------------------------------------------------------
// evaluation

inline double eval(const WeightFunction& w, double t) {
  if (!(t >= 0.0)) throw domain_error("weight eval: t must be >= 0");
  switch (w.kind) {
    case weight_kind::power_log: {
      if (t < w.clamp_t) t = w.clamp_t;
      if (t == 0.0) {
        const double e0 = 1.0 / w.mu + w.u;
        return e0 > 0.0 ? 0.0 : 1.0;  // e0 < 0 is unreachable behind the clamp
      }
      const double base = std::pow(t, 1.0 / w.mu);
      return w.u == 0.0 ? base : base * std::pow(std::log1p(t), w.u);
    }
    case weight_kind::log_power:
      return std::pow(std::log1p(t), w.u);
    case weight_kind::tabulated: {
      const auto& kn = w.knots;
      if (t >= kn.back().first)
        return kn.back().second + w.extrapolation_slope * (t - kn.back().first);
      auto it = std::upper_bound(kn.begin(), kn.end(), t,
                                 [](double v, const auto& p) { return v < p.first; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double f = (t - lo.first) / (hi.first - lo.first);
      return lo.second + f * (hi.second - lo.second);
    }
  }
  throw validation_error("weight eval: bad kind");
}

// log w(e^y), overflow-safe for the log-domain classification machinery.
inline double log_eval_log(const WeightFunction& w, double y) {
  // log log(1 + e^y)
  const double loglog1pe = (y > 30.0) ? std::log(y + std::log1p(std::exp(-y)))
                                      : std::log(std::log1p(std::exp(y)));
  switch (w.kind) {
    case weight_kind::power_log: {
      if (w.clamp_t > 0.0 && y < std::log(w.clamp_t)) y = std::log(w.clamp_t);
      const double ll = (y > 30.0) ? std::log(y + std::log1p(std::exp(-y)))
                                   : std::log(std::log1p(std::exp(y)));
      return y / w.mu + w.u * ll;
    }
    case weight_kind::log_power:
      return w.u * loglog1pe;
    case weight_kind::tabulated: {
      if (y > 700.0) {
        if (w.extrapolation_slope > 0.0) return std::log(w.extrapolation_slope) + y;
        return std::log(w.knots.back().second);
      }
      const double v = eval(w, std::exp(y));
      return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    }
  }
  throw validation_error("weight log_eval_log: bad kind");
}

// Generalized inverse inf { t : w(t) >= s }; closed form for log_power, bracketed
// bisection to relative tolerance 1e-12 otherwise.
inline double inverse(const WeightFunction& w, double s) {
  if (!std::isfinite(s)) throw domain_error("weight inverse: s must be finite");
  const double w0 = eval(w, 0.0);
  if (s < w0 - 1e-12 * (1.0 + std::abs(w0)))
    throw domain_error("weight inverse: s below w(0)");
  if (s <= w0) return 0.0;
  if (w.kind == weight_kind::log_power) return std::expm1(std::pow(s, 1.0 / w.u));
  double lo = (w.kind == weight_kind::power_log) ? w.clamp_t : 0.0;
  double hi = std::max(1.0, 2.0 * lo);
  int guard = 0;
  while (eval(w, hi) < s) {
    hi *= 2.0;
    if (++guard > 2100 || hi > 1e308) throw domain_error("weight inverse: s not attained");
  }
  if (eval(w, lo) >= s) return lo;
  for (int i = 0; i < 300 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (eval(w, mid) >= s ? hi : lo) = mid;
  }
  return hi;
}

// log of the generalized inverse at s = e^z, overflow-safe.
inline double log_inverse_log(const WeightFunction& w, double z) {
  if (w.kind == weight_kind::log_power) {
    const double a = z / w.u;
    if (a > 709.0) return std::numeric_limits<double>::infinity();
    const double p = std::exp(a);  // s^(1/u)
    return (p > 36.0) ? p + std::log1p(-std::exp(-p)) : std::log(std::expm1(p));
  }
  double lo = -745.0;
  if (log_eval_log(w, lo) >= z) return -std::numeric_limits<double>::infinity();
  double hi = std::max(1.0, lo);
  int guard = 0;
  while (log_eval_log(w, hi) < z) {
    hi = hi <= 0.0 ? 1.0 : hi * 2.0;
    if (++guard > 1100 || hi > 1e305) throw domain_error("weight log inverse: s not attained");
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-10 * std::max(1.0, std::abs(hi)); ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_eval_log(w, mid) >= z ? hi : lo) = mid;
  }
  return hi;
}

// Generalized inverse of t -> w^{-1}(t) * h^{-1}(t) at s; 0 below the first
// representable product value.
inline double inverse_product_inverse(const WeightFunction& w, const WeightFunction& h, double s) {
  if (!std::isfinite(s)) throw domain_error("inverse_product_inverse: s must be finite");
  const double floor_t = std::max(eval(w, 0.0), eval(h, 0.0));
  auto F = [&](double t) { return inverse(w, t) * inverse(h, t); };
  if (s <= F(floor_t)) return 0.0;
  double lo = floor_t, hi = std::max(1.0, 2.0 * std::max(floor_t, 1e-6));
  int guard = 0;
  while (F(hi) < s) {
    hi *= 2.0;
    if (++guard > 2100 || hi > 1e308) throw domain_error("inverse_product_inverse: s not attained");
  }
  if (lo > hi) lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (F(mid) >= s ? hi : lo) = mid;
  }
  return hi;
}

// ---------------------------------------------------------------------------
// growth conditions

struct ConditionReport {
  bool alpha_ok = false;
  bool has_alpha_constants = false;
  double alpha_K = 0.0;  // w(t1+t2) <= K [w(t1)+w(t2)] + log C on the evidence range
  double alpha_C = 0.0;
  bool gamma_ok = false;
  bool gamma_strict_ok = false;
  bool nonquasianalytic = false;
  double evidence_lo = 0.0;
  double evidence_hi = 0.0;
  bool heuristic = false;  // tabulated verdicts are finite-range estimates
};

namespace detail {

// Searches K over a doubling ladder with C fitted from the worst sampled violation.
inline bool fit_alpha_constants(const WeightFunction& w, double t_hi, double k_cap,
                                double& K_out, double& C_out) {
  constexpr int n = 200;
  std::vector<double> ts(n), wt(n);
  for (int i = 0; i < n; ++i) {
    ts[i] = t_hi * static_cast<double>(i) / (n - 1);
    wt[i] = eval(w, ts[i]);
  }
  std::vector<double> wsum(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) wsum[static_cast<std::size_t>(i) * n + j] = eval(w, ts[i] + ts[j]);
  const double log_c_cap = std::log(1e6);
  for (double K = 1.0; K <= k_cap; K *= 2.0) {
    double log_c = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        log_c = std::max(log_c, wsum[static_cast<std::size_t>(i) * n + j] - K * (wt[i] + wt[j]));
    if (log_c <= log_c_cap) {
      K_out = K;
      C_out = std::exp(log_c);
      if (C_out < 1.0) C_out = 1.0;
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline ConditionReport check_conditions(const WeightFunction& w, double t_hi) {
  if (!(t_hi >= 10.0)) throw validation_error("check_conditions: t_hi must be >= 10");
  ConditionReport rep;
  rep.evidence_lo = 0.0;
  rep.evidence_hi = t_hi;
  switch (w.kind) {
    case weight_kind::power_log:
      rep.alpha_ok = true;
      rep.gamma_ok = true;
      rep.gamma_strict_ok = true;
      rep.nonquasianalytic = (w.mu > 1.0) || (w.mu == 1.0 && w.u < -1.0);
      rep.has_alpha_constants =
          detail::fit_alpha_constants(w, t_hi, std::ldexp(1.0, 20), rep.alpha_K, rep.alpha_C);
      break;
    case weight_kind::log_power:
      rep.alpha_ok = true;
      rep.gamma_ok = true;
      rep.gamma_strict_ok = (w.u > 1.0);
      rep.nonquasianalytic = true;
      rep.has_alpha_constants =
          detail::fit_alpha_constants(w, t_hi, std::ldexp(1.0, 20), rep.alpha_K, rep.alpha_C);
      break;
    case weight_kind::tabulated: {
      rep.heuristic = true;
      rep.has_alpha_constants = detail::fit_alpha_constants(w, t_hi, 64.0, rep.alpha_K, rep.alpha_C);
      rep.alpha_ok = rep.has_alpha_constants;
      // gamma: boundedness / decay of log(t) / w(t) over log-spaced probes
      {
        double first_ratio = 0.0, last_ratio = 0.0, max_ratio = 0.0;
        constexpr int np = 64;
        for (int i = 0; i < np; ++i) {
          const double t = 2.0 * std::pow(t_hi / 2.0, static_cast<double>(i) / (np - 1));
          const double v = eval(w, t);
          const double ratio = v > 0.0 ? std::log(t) / v : std::numeric_limits<double>::infinity();
          if (i == 0) first_ratio = ratio;
          if (i == np - 1) last_ratio = ratio;
          max_ratio = std::max(max_ratio, ratio);
        }
        rep.gamma_ok = std::isfinite(max_ratio) && max_ratio <= 64.0;
        rep.gamma_strict_ok = rep.gamma_ok && last_ratio < 0.25 * std::max(first_ratio, 1e-300);
      }
      // non-quasianalyticity: trapezoid of w(t)/(1+t^2) with a dyadic tail-decay heuristic
      {
        auto integrate = [&](double a, double b) {
          constexpr int steps = 512;
          double acc = 0.0;
          double prev_t = a, prev_v = eval(w, a) / (1.0 + a * a);
          for (int i = 1; i <= steps; ++i) {
            const double t = a + (b - a) * static_cast<double>(i) / steps;
            const double v = eval(w, t) / (1.0 + t * t);
            acc += 0.5 * (v + prev_v) * (t - prev_t);
            prev_t = t;
            prev_v = v;
          }
          return acc;
        };
        const double inc1 = integrate(t_hi / 4.0, t_hi / 2.0);
        const double inc2 = integrate(t_hi / 2.0, t_hi);
        rep.nonquasianalytic = inc2 < 0.9 * inc1 || (inc1 == 0.0 && inc2 == 0.0);
      }
      break;
    }
  }
  if (rep.gamma_strict_ok) rep.gamma_ok = true;
  return rep;
}

}  // namespace tfseq

#endif
