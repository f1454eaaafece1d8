#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "tfseq/weights.hpp"

using namespace tfseq;

TEST_CASE("power_log and log_power evaluation", "[weights]") {
  const auto id = WeightFunction::power_log(1.0, 0.0);
  CHECK(eval(id, 5.0) == Catch::Approx(5.0).epsilon(1e-14));

  const auto sq = WeightFunction::power_log(2.0, 0.0);
  CHECK(eval(sq, 4.0) == Catch::Approx(2.0).epsilon(1e-14));

  const auto lg = WeightFunction::log_power(1.0);
  CHECK(eval(lg, std::exp(1.0) - 1.0) == Catch::Approx(1.0).epsilon(1e-14));

  CHECK(eval(id, 0.0) == 0.0);
  CHECK_THROWS_AS(eval(id, -1.0), domain_error);
}

TEST_CASE("generalized inverse", "[weights]") {
  const auto sq = WeightFunction::power_log(2.0, 0.0);
  CHECK(inverse(sq, 3.0) == Catch::Approx(9.0).epsilon(1e-10));

  const auto lg = WeightFunction::log_power(1.0);
  CHECK(inverse(lg, 1.0) == Catch::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));

  // t log(1+t) = 2: check through the forward map
  const auto tl = WeightFunction::power_log(1.0, 1.0);
  const double root = inverse(tl, 2.0);
  CHECK(std::abs(eval(tl, root) - 2.0) < 1e-10);

  CHECK_THROWS_AS(inverse(sq, -0.5), domain_error);
}

TEST_CASE("inverse round trip", "[weights]") {
  // below clamp_t the weight is flat, so the generalized inverse cannot recover t
  for (const auto& w : {WeightFunction::power_log(1.0, 0.0), WeightFunction::power_log(2.0, 0.0),
                        WeightFunction::power_log(1.0, 1.0), WeightFunction::power_log(2.0, -1.0),
                        WeightFunction::log_power(1.0), WeightFunction::log_power(2.5)}) {
    for (double t = std::max(1.0, 1.01 * w.clamp_t); t <= 1e4; t *= 3.7) {
      const double back = inverse(w, eval(w, t));
      CHECK(std::abs(back - t) <= 1e-9 * t);
    }
  }
}

TEST_CASE("eval is non-decreasing after clamping", "[weights]") {
  for (const auto& w : {WeightFunction::power_log(2.0, -1.0), WeightFunction::power_log(1.0, -2.0),
                        WeightFunction::power_log(0.5, -0.25), WeightFunction::log_power(3.0)}) {
    double prev = eval(w, 0.0);
    for (double t = 1e-6; t < 1e6; t *= 1.37) {
      const double v = eval(w, t);
      CHECK(v >= prev - 1e-12 * std::max(1.0, std::abs(prev)));
      prev = v;
    }
  }
}

TEST_CASE("power_log clamp threshold", "[weights]") {
  const auto w = WeightFunction::power_log(2.0, -1.0);  // sqrt(t)/log(1+t) dips near 0
  CHECK(w.clamp_t > 0.0);
  CHECK(eval(w, 0.0) == Catch::Approx(eval(w, w.clamp_t)));
  CHECK(eval(w, w.clamp_t / 2.0) == Catch::Approx(eval(w, w.clamp_t)));
  // u >= 0 or mild negative u with 1/mu + u >= 0 need no clamp
  CHECK(WeightFunction::power_log(1.0, -0.5).clamp_t == 0.0);
  CHECK(WeightFunction::power_log(2.0, 1.0).clamp_t == 0.0);
}

TEST_CASE("condition truth table for the symbolic kinds", "[weights]") {
  {
    const auto rep = check_conditions(WeightFunction::power_log(2.0, 0.0), 100.0);
    CHECK(rep.alpha_ok);
    CHECK(rep.gamma_strict_ok);
    CHECK(rep.nonquasianalytic);
    CHECK_FALSE(rep.heuristic);
  }
  {
    const auto rep = check_conditions(WeightFunction::log_power(1.0), 100.0);
    CHECK(rep.alpha_ok);
    CHECK(rep.gamma_ok);
    CHECK_FALSE(rep.gamma_strict_ok);
    CHECK(rep.nonquasianalytic);
  }
  {
    const auto rep = check_conditions(WeightFunction::power_log(1.0, 0.0), 100.0);
    CHECK_FALSE(rep.nonquasianalytic);
  }
  CHECK(check_conditions(WeightFunction::power_log(1.0, -2.0), 100.0).nonquasianalytic);
  CHECK_FALSE(check_conditions(WeightFunction::power_log(1.0, -0.5), 100.0).nonquasianalytic);
  CHECK(check_conditions(WeightFunction::log_power(2.0), 100.0).gamma_strict_ok);
  CHECK_THROWS_AS(check_conditions(WeightFunction::log_power(2.0), 5.0), validation_error);
}

TEST_CASE("fitted alpha constants: zero violations on the 200x200 sampling grid", "[weights]") {
  for (const auto& w : {WeightFunction::power_log(1.0, 0.0), WeightFunction::power_log(2.0, 1.0),
                        WeightFunction::log_power(2.0)}) {
    const double t_hi = 50.0;
    const auto rep = check_conditions(w, t_hi);
    REQUIRE(rep.has_alpha_constants);
    REQUIRE(rep.alpha_K >= 1.0);
    REQUIRE(rep.alpha_C >= 1.0);
    const double log_c = std::log(rep.alpha_C);
    int violations = 0;
    for (int i = 0; i < 200; ++i)
      for (int j = 0; j < 200; ++j) {
        const double t1 = t_hi * i / 199.0, t2 = t_hi * j / 199.0;
        if (eval(w, t1 + t2) > rep.alpha_K * (eval(w, t1) + eval(w, t2)) + log_c + 1e-9)
          ++violations;
      }
    CHECK(violations == 0);
  }
}

TEST_CASE("inverse product inverse", "[weights]") {
  const auto id = WeightFunction::power_log(1.0, 0.0);
  const auto sq = WeightFunction::power_log(2.0, 0.0);
  // omega = eta = id: F(t) = t^2
  CHECK(inverse_product_inverse(id, id, 16.0) == Catch::Approx(4.0).epsilon(1e-10));
  // omega^{-1}(t) = t, eta^{-1}(t) = t^2: F(t) = t^3
  CHECK(inverse_product_inverse(id, sq, 8.0) == Catch::Approx(2.0).epsilon(1e-10));
  // bisection against the forward map
  const auto tl = WeightFunction::power_log(1.0, 1.0);
  const double r = inverse_product_inverse(tl, id, 10.0);
  CHECK(std::abs(inverse(tl, r) * inverse(id, r) - 10.0) < 1e-8 * 10.0);
  // below the first representable product value
  CHECK(inverse_product_inverse(id, id, 0.0) == 0.0);
}

TEST_CASE("tabulated weights", "[weights]") {
  const auto w = WeightFunction::tabulated({{0.0, 0.0}, {1.0, 2.0}, {4.0, 5.0}}, 0.5);
  CHECK(eval(w, 0.5) == Catch::Approx(1.0));
  CHECK(eval(w, 2.5) == Catch::Approx(3.5));
  CHECK(eval(w, 8.0) == Catch::Approx(5.0 + 0.5 * 4.0));
  CHECK(inverse(w, 2.0) == Catch::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(WeightFunction::tabulated({{1.0, 0.0}, {2.0, 1.0}}, 1.0), validation_error);
  CHECK_THROWS_AS(WeightFunction::tabulated({{0.0, 1.0}, {1.0, 0.5}}, 1.0), validation_error);

  // sqrt-like table: integral of w/(1+t^2) converges -> non-quasianalytic
  std::vector<std::pair<double, double>> knots;
  for (double t = 0.0; t <= 4096.0; t += 16.0) knots.emplace_back(t, std::sqrt(t));
  knots[0] = {0.0, 0.0};
  auto rep = check_conditions(WeightFunction::tabulated(knots, std::nullopt), 4096.0);
  CHECK(rep.heuristic);
  CHECK(rep.alpha_ok);
  CHECK(rep.nonquasianalytic);

  // linear table: integral diverges
  std::vector<std::pair<double, double>> lin;
  for (double t = 0.0; t <= 4096.0; t += 16.0) lin.emplace_back(t, t);
  rep = check_conditions(WeightFunction::tabulated(lin, std::nullopt), 4096.0);
  CHECK_FALSE(rep.nonquasianalytic);
}

TEST_CASE("log-domain evaluation agrees with the direct one", "[weights]") {
  for (const auto& w : {WeightFunction::power_log(2.0, 1.0), WeightFunction::power_log(1.0, -2.0),
                        WeightFunction::log_power(2.0)}) {
    for (double t = 0.5; t < 1e8; t *= 9.7) {
      CHECK(log_eval_log(w, std::log(t)) == Catch::Approx(std::log(eval(w, t))).margin(1e-9));
    }
    for (double s = 1.0; s < 50.0; s *= 2.3) {
      if (s < eval(w, 0.0)) continue;  // below w(0) the direct inverse is a domain error
      const double direct = inverse(w, s);
      if (direct > 0.0)
        CHECK(log_inverse_log(w, std::log(s)) == Catch::Approx(std::log(direct)).margin(1e-7));
    }
  }
}

TEST_CASE("validation of constructor parameters", "[weights]") {
  CHECK_THROWS_AS(WeightFunction::power_log(0.0, 1.0), validation_error);
  CHECK_THROWS_AS(WeightFunction::power_log(-1.0, 0.0), validation_error);
  CHECK_THROWS_AS(WeightFunction::log_power(0.5), validation_error);
}
