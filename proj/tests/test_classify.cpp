#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tfseq/classify.hpp"

using namespace tfseq;

namespace {

SpaceDescriptor power_space(double mu, double u, double tau, double v,
                            SpaceCase cs = SpaceCase::roumieu) {
  return SpaceDescriptor::make(WeightFunction::power_log(mu, u),
                               WeightFunction::power_log(tau, v), cs);
}

std::vector<double> linear_probes(double lo, double hi, int n) {
  std::vector<double> p;
  for (int i = 0; i < n; ++i) p.push_back(lo + (hi - lo) * i / (n - 1));
  return p;
}

const GridSpec kGrid = GridSpec::make(32.0, 4096);

const SampledSignal& wilson_window() {
  static const SampledSignal w = build_wilson_window(kGrid, 1e-8);
  return w;
}

}  // namespace

TEST_CASE("coefficient norms", "[classify]") {
  const auto sp = SpaceDescriptor::make(WeightFunction::power_log(1.0, 0.0),
                                        WeightFunction::power_log(1.0, 0.0), SpaceCase::roumieu);
  auto c = WilsonCoefficients::zeros(4, 4);
  CHECK(coeff_norm(c, sp, 0.5) == 0.0);

  c.at(2, 3) = cplx(0.5, 0.0);
  c.at(-1, 0) = cplx(0.0, -2.0);
  CHECK(coeff_norm(c, sp, 0.0) == Catch::Approx(2.0));
  // max of |c| e^{r (|k| + n)}
  const double expect = std::max(0.5 * std::exp(0.5 * 5.0), 2.0 * std::exp(0.5 * 1.0));
  CHECK(coeff_norm(c, sp, 0.5) == Catch::Approx(expect).epsilon(1e-12));

  // Wilson coefficients of h_0 have a finite weighted norm at r = 1/2
  const auto cw = wilson_analyze(wilson_window(), hermite(0, kGrid), 24, 24);
  const double nrm = coeff_norm(cw, sp, 0.5);
  CHECK(std::isfinite(nrm));
  CHECK(nrm > 0.0);

  // lattice-scaled variant on the Gabor side
  LatticeSpec lat{0.5, 1.0, 3, 3};
  auto gc = GaborCoefficients::zeros(lat);
  gc.at(3, 0) = 1.0;
  CHECK(coeff_norm(gc, sp, 1.0, false) == Catch::Approx(std::exp(3.0)));
  CHECK(coeff_norm(gc, sp, 1.0, true) == Catch::Approx(std::exp(1.5)));
}

TEST_CASE("decay envelopes", "[classify]") {
  const auto sp = SpaceDescriptor::make(WeightFunction::power_log(1.0, 0.0),
                                        WeightFunction::power_log(1.0, 0.0), SpaceCase::roumieu);

  // Wilson coefficients of h_3 fit a strictly positive envelope rate
  {
    const auto c = wilson_analyze(wilson_window(), hermite(3, kGrid), 24, 24);
    const auto fit = decay_envelope(c, sp);
    CHECK_FALSE(fit.degenerate);
    CHECK(fit.r_star > 0.1);
  }
  // a delta has a single-point envelope
  {
    auto c = WilsonCoefficients::zeros(6, 6);
    c.at(0, 0) = 1.0;
    CHECK(std::isinf(decay_envelope(c, sp).r_star));
  }
  // polynomial decay defeats every exponential envelope as the box grows
  {
    const int K = 1024, M = 1024;
    auto c = WilsonCoefficients::zeros(K, M);
    for (int k = -K; k <= K; ++k)
      for (int n = 0; n <= M; ++n)
        c.at(k, n) = 1.0 / (1.0 + static_cast<double>(k) * k + static_cast<double>(n) * n);
    const auto fit = decay_envelope(c, sp);
    CHECK(fit.r_star < 0.01);
    CHECK(fit.r_star > -0.01);
  }
  // flat arrays are degenerate
  {
    auto c = WilsonCoefficients::zeros(8, 8);
    for (auto& v : c.entries) v = 1.0;
    CHECK(decay_envelope(c, sp).degenerate);
  }
}

TEST_CASE("inclusion decisions", "[classify]") {
  const auto probes = linear_probes(1.0, 200.0, 40);
  // omega2 = O(omega1): sqrt(t) = O(t)
  {
    const auto v = decide_inclusion(power_space(1, 0, 1, 0), power_space(2, 0, 2, 0), probes);
    CHECK(v.rel == relation::included);
    CHECK(v.method == decision_method::closed_form);
  }
  {
    const auto v = decide_inclusion(power_space(1, 0, 1, 0), power_space(1, 0, 1, 0), probes);
    CHECK(v.rel == relation::equal);
  }
  {
    const auto v = decide_inclusion(power_space(2, 0, 2, 0), power_space(1, 0, 1, 0), probes);
    CHECK(v.rel == relation::not_included);
  }
  // log factors matter: S^{t log t} strictly inside S^{t}
  {
    const auto v = decide_inclusion(power_space(1, 1, 1, 0), power_space(1, 0, 1, 0), probes);
    CHECK(v.rel == relation::included);
    const auto w = decide_inclusion(power_space(1, 0, 1, 0), power_space(1, 1, 1, 0), probes);
    CHECK(w.rel == relation::not_included);
  }
  // numeric mode via a tabulated copy of sqrt agrees with the closed form; refuting
  // t = O(sqrt t) needs probes past the largest searched L squared
  {
    std::vector<std::pair<double, double>> knots{{0.0, 0.0}};
    for (double t = 0.01; t <= 2e7; t *= 1.2) knots.emplace_back(t, std::sqrt(t));
    const auto tab = WeightFunction::tabulated(knots, std::nullopt);
    const auto sp_tab = SpaceDescriptor::make(tab, tab, SpaceCase::beurling);
    const auto sp_id = SpaceDescriptor::make(WeightFunction::power_log(1.0, 0.0),
                                             WeightFunction::power_log(1.0, 0.0), SpaceCase::beurling);
    std::vector<double> wide;
    for (double t = 1.0; t <= 1e7; t *= 1.7) wide.push_back(t);
    const auto v = decide_inclusion(sp_id, sp_tab, wide);
    CHECK(v.method == decision_method::numeric_probe);
    CHECK(v.rel == relation::included);
    const auto w = decide_inclusion(sp_tab, sp_id, wide);
    CHECK(w.rel == relation::not_included);
  }
  // case mismatch
  CHECK_THROWS_AS(decide_inclusion(power_space(1, 0, 1, 0, SpaceCase::beurling),
                                   power_space(1, 0, 1, 0, SpaceCase::roumieu), probes),
                  validation_error);
}

TEST_CASE("isomorphism closed form", "[classify]") {
  const std::vector<double> probes;  // closed form ignores them
  {
    const auto v = decide_isomorphic(power_space(1, 0, 2, 0), power_space(2, 0, 1, 0), probes);
    CHECK(v.rel == relation::isomorphic);  // 1+2 = 2+1, 0 = 0
    CHECK(v.method == decision_method::closed_form);
  }
  CHECK(decide_isomorphic(power_space(1, 0, 2, 0), power_space(1, 0, 2, 0), probes).rel ==
        relation::isomorphic);
  CHECK(decide_isomorphic(power_space(1, 0, 2, 0), power_space(2, 0, 2, 0), probes).rel ==
        relation::not_isomorphic);
  // u mu + v tau invariant: (1,1,1,0) vs (1,0,1,1) both have sum 2, mix 1
  CHECK(decide_isomorphic(power_space(1, 1, 1, 0), power_space(1, 0, 1, 1), probes).rel ==
        relation::isomorphic);
  // same sum, different mix
  CHECK(decide_isomorphic(power_space(1, 1, 1, 0), power_space(1, 0, 1, 0), probes).rel ==
        relation::not_isomorphic);
}

TEST_CASE("isomorphism accessibility gate", "[classify]") {
  // t^2 log(1+t) is not O(t^2): inconclusive, never "not isomorphic"
  const auto bad = power_space(0.5, 1.0, 1, 0);
  const auto good = power_space(1, 0, 1, 0);
  const auto v = decide_isomorphic(bad, good, {});
  CHECK(v.rel == relation::inconclusive);
  // the boundary case t^2 is Roumieu-accessible (O) but not Beurling-accessible (o)
  CHECK(decide_isomorphic(power_space(0.5, 0.0, 1, 0), good, {}).rel !=
        relation::inconclusive);
  const auto vb = decide_isomorphic(power_space(0.5, 0.0, 1, 0, SpaceCase::beurling),
                                    power_space(1, 0, 1, 0, SpaceCase::beurling), {});
  CHECK(vb.rel == relation::inconclusive);
}

TEST_CASE("numeric probe agrees with the closed form", "[classify]") {
  std::mt19937 rng(2024);
  const double mus[] = {1.0, 1.5, 2.0, 3.0};
  const double us[] = {-1.0, 0.0, 1.0, 2.0};
  std::uniform_int_distribution<int> pick(0, 3);
  const auto zprobes = default_isomorphism_log_probes(power_space(1, 0, 1, 0),
                                                      power_space(1, 0, 1, 0));
  int iso_seen = 0, not_seen = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const auto sp1 =
        power_space(mus[pick(rng)], us[pick(rng)], mus[pick(rng)], us[pick(rng)]);
    const auto sp2 =
        power_space(mus[pick(rng)], us[pick(rng)], mus[pick(rng)], us[pick(rng)]);
    const auto closed = decide_isomorphic_log(sp1, sp2, zprobes, false);
    const auto numeric = decide_isomorphic_log(sp1, sp2, zprobes, true);
    REQUIRE(closed.method == decision_method::closed_form);
    REQUIRE(numeric.method == decision_method::numeric_probe);
    REQUIRE(closed.rel == numeric.rel);
    (closed.rel == relation::isomorphic ? iso_seen : not_seen) += 1;
  }
  CHECK(iso_seen > 0);
  CHECK(not_seen > 0);
}

TEST_CASE("isomorphism invariants", "[classify]") {
  const auto zp = default_isomorphism_log_probes(power_space(1, 0, 1, 0), power_space(1, 0, 1, 0));
  const SpaceDescriptor sps[] = {power_space(1, 0, 2, 0), power_space(2, 1, 1, 0),
                                 power_space(3, 0, 1, -1)};
  for (const auto& a : sps) {
    CHECK(decide_isomorphic_log(a, a, zp).rel == relation::isomorphic);
    for (const auto& b : sps)
      CHECK(decide_isomorphic_log(a, b, zp).rel == decide_isomorphic_log(b, a, zp).rel);
  }
  // included both ways iff equal iff identical parameters; equal implies isomorphic
  const auto probes = linear_probes(1.0, 100.0, 20);
  const auto e = decide_inclusion(sps[0], sps[0], probes);
  CHECK(e.rel == relation::equal);
  CHECK(decide_isomorphic_log(sps[0], sps[0], zp).rel == relation::isomorphic);
  CHECK(decide_inclusion(sps[0], sps[1], probes).rel != relation::equal);
}

TEST_CASE("collapse and liminf growth", "[classify]") {
  // refuting w(t^2) = O(w(t)) needs probes past the largest searched L
  std::vector<double> probes;
  for (double t = 2.0; t <= 1e4; t *= 1.5) probes.push_back(t);
  CHECK(check_collapse(WeightFunction::log_power(1.0), probes));
  CHECK(check_collapse(WeightFunction::log_power(3.0), probes));
  CHECK_FALSE(check_collapse(WeightFunction::power_log(2.0, 0.0), probes));

  CHECK(check_liminf_growth(WeightFunction::power_log(3.0, -1.0), probes));
  CHECK(check_liminf_growth(WeightFunction::power_log(1.0, 0.0), probes));
  CHECK_FALSE(check_liminf_growth(WeightFunction::log_power(2.0), probes));

  // tabulated variants decided numerically
  std::vector<std::pair<double, double>> logk, lin;
  for (double t = 0.0; t <= 1e6; t = (t == 0.0 ? 1.0 : t * 2.0)) {
    logk.emplace_back(t, std::log1p(t));
    lin.emplace_back(t, t);
  }
  CHECK(check_collapse(WeightFunction::tabulated(logk, std::nullopt), probes));
  CHECK_FALSE(check_collapse(WeightFunction::tabulated(lin, std::nullopt), probes));
  CHECK(check_liminf_growth(WeightFunction::tabulated(lin, std::nullopt), probes));
  CHECK_FALSE(check_liminf_growth(WeightFunction::tabulated(logk, std::nullopt), probes));
}

TEST_CASE("collapse corollary on the log family", "[classify]") {
  // omega = log(1+t): omega(t^2) = O(omega(t)) and omega = O(eta) for eta = log^2:
  // S^{omega}_{eta} is isomorphic to S^{omega}_{omega}
  const auto omega = WeightFunction::log_power(1.0);
  const auto eta = WeightFunction::log_power(2.0);
  REQUIRE(check_collapse(omega, {}));
  const auto sp1 = SpaceDescriptor::make(omega, eta, SpaceCase::beurling);
  const auto sp2 = SpaceDescriptor::make(omega, omega, SpaceCase::beurling);
  const auto zp = default_isomorphism_log_probes(sp1, sp2);
  const auto v = decide_isomorphic_log(sp1, sp2, zp);
  CHECK(v.method == decision_method::numeric_probe);
  CHECK(v.rel == relation::isomorphic);

  // whereas changing the omega side of the log family is detected
  const auto sp3 = SpaceDescriptor::make(eta, eta, SpaceCase::beurling);
  CHECK(decide_isomorphic_log(sp1, sp3, zp).rel == relation::not_isomorphic);
}

TEST_CASE("descriptor validation", "[classify]") {
  // log_power(1) satisfies (gamma) but not {gamma}: Beurling fine, Roumieu rejected
  CHECK_NOTHROW(SpaceDescriptor::make(WeightFunction::log_power(1.0),
                                      WeightFunction::log_power(1.0), SpaceCase::beurling));
  CHECK_THROWS_AS(SpaceDescriptor::make(WeightFunction::log_power(1.0),
                                        WeightFunction::log_power(1.0), SpaceCase::roumieu),
                  validation_error);
  CHECK_NOTHROW(SpaceDescriptor::make(WeightFunction::log_power(1.5),
                                      WeightFunction::log_power(1.5), SpaceCase::roumieu));
}
