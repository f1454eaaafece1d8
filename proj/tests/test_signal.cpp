#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "tfseq/signal.hpp"

using namespace tfseq;

namespace {

double max_abs_diff(const SampledSignal& f, const SampledSignal& g) {
  double m = 0.0;
  for (std::size_t j = 0; j < f.values.size(); ++j)
    m = std::max(m, std::abs(f.values[j] - g.values[j]));
  return m;
}

}  // namespace

TEST_CASE("grid construction and alignment", "[signal]") {
  const auto g = GridSpec::make(16.0, 2048);
  CHECK(g.step() == Catch::Approx(1.0 / 64.0));
  CHECK(g.freq_step() == Catch::Approx(1.0 / 32.0));
  CHECK(g.step() * g.freq_step() * static_cast<double>(g.size) == Catch::Approx(1.0));
  CHECK(g.point(1024) == 0.0);
  CHECK(g.freq_point(1024) == 0.0);

  CHECK_THROWS_AS(GridSpec::make(16.0, 1000), validation_error);
  CHECK_THROWS_AS(GridSpec::make(-2.0, 1024), validation_error);

  // dyadic lattice constants keep the nominal half width
  const auto gw = GridSpec::aligned(16.0, 2048, {0.5, 1.0});
  CHECK(gw.half_width == 16.0);
  // the sqrt(2) lattice adapts the step so a and 1/b = 2a align exactly
  const double a = 1.0 / std::sqrt(2.0);
  const auto ga = GridSpec::aligned(16.0, 2048, {a, 2.0 * a});
  CHECK(ga.is_aligned(a));
  CHECK(ga.is_aligned(2.0 * a));
  CHECK(std::abs(ga.half_width - 16.0) < 0.2);

  CHECK_THROWS_AS(g.shift_index(0.3 * g.step()), alignment_error);
  try {
    g.shift_index(1.0 / 3.0);
  } catch (const alignment_error& e) {
    CHECK(std::string(e.what()).find("nearest") != std::string::npos);
  }
}

TEST_CASE("the Gaussian is its own transform", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  const auto f = gaussian(grid);
  const auto fhat = fourier(f);
  // e^{-pi xi^2} evaluated on the dual grid
  CHECK(max_abs_diff(gaussian(fhat.grid), fhat) < 1e-10);
  // on the self-dual grid (T = sqrt(N)/2) the comparison is pointwise literal
  const auto sd = GridSpec::make(16.0, 1024);
  CHECK(sd.dual() == sd);
  const auto g = gaussian(sd);
  CHECK(max_abs_diff(g, fourier(g)) < 1e-10);
}

TEST_CASE("unit impulse transforms to the constant", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  auto f = SampledSignal::zeros(grid);
  f.values[grid.size / 2] = 1.0 / grid.step();
  const auto fhat = fourier(f);
  for (std::size_t m = 0; m < grid.size; m += 37)
    CHECK(std::abs(fhat.values[m] - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("double transform is reflection", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  for (int m : {0, 1, 4, 9}) {
    const auto f = hermite(m, grid);
    const auto ff = fourier(fourier(f));
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size; ++j) {
      const std::size_t mirror = (grid.size - j) % grid.size;
      worst = std::max(worst, std::abs(ff.values[j] - f.values[mirror]));
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("transform unitarity and inversion", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  for (int m : {0, 3, 7}) {
    const auto f = hermite(m, grid);
    const auto fhat = fourier(f);
    CHECK(l2_norm(fhat) == Catch::Approx(l2_norm(f)).epsilon(1e-12));
    CHECK(max_abs_diff(inverse_fourier(fhat), f) < 1e-12);
  }
}

TEST_CASE("translate and modulate basics", "[signal]") {
  const auto grid = GridSpec::make(8.0, 1024);
  const auto f = hermite(2, grid);

  CHECK(max_abs_diff(translate(f, 0.0), f) == 0.0);

  const auto mm = modulate(modulate(f, 3.5), -3.5);
  CHECK(max_abs_diff(mm, f) < 1e-14);

  CHECK_THROWS_AS(translate(f, 0.3 * grid.step()), alignment_error);

  // (T_{1/2} M_1 g)(x) = e^{2 pi i (x - 1/2)} g(x - 1/2), built directly
  const auto g = gaussian(grid);
  const auto lhs = translate(modulate(g, 1.0), 0.5);
  SampledSignal oracle = SampledSignal::zeros(grid);
  for (std::size_t j = 0; j < grid.size; ++j) {
    const double x = grid.point(j);
    oracle.values[j] = std::polar(1.0, 2.0 * std::numbers::pi * (x - 0.5)) *
                       std::exp(-std::numbers::pi * (x - 0.5) * (x - 0.5));
  }
  CHECK(max_abs_diff(lhs, oracle) < 1e-12);
}

TEST_CASE("translate and modulate are isometries and commute up to phase", "[signal]") {
  const auto grid = GridSpec::make(8.0, 1024);
  const auto f = hermite(5, grid);
  CHECK(l2_norm(translate(f, 2.0)) == Catch::Approx(l2_norm(f)).epsilon(1e-13));
  CHECK(l2_norm(modulate(f, 1.7)) == Catch::Approx(l2_norm(f)).epsilon(1e-13));

  const double x = 1.5, xi = 2.25;
  const auto lhs = modulate(translate(f, x), xi);
  auto rhs = translate(modulate(f, xi), x);
  const cplx phase = std::polar(1.0, 2.0 * std::numbers::pi * x * xi);
  for (auto& v : rhs.values) v *= phase;
  CHECK(max_abs_diff(lhs, rhs) < 1e-13);
}

TEST_CASE("weighted sup norm", "[signal]") {
  // fine grid so the grid max matches the closed-form max of e^{-pi x^2 + |x|}
  const auto grid = GridSpec::make(4.0, 8192);
  const auto f = gaussian(grid);
  const auto w = WeightFunction::power_log(1.0, 0.0);
  const double closed_form = std::exp(1.0 / (4.0 * std::numbers::pi));
  CHECK(weighted_sup_norm(f, w, 1.0) == Catch::Approx(closed_form).epsilon(1e-6));

  CHECK(weighted_sup_norm(SampledSignal::zeros(grid), w, 1.0) == 0.0);
  CHECK(weighted_sup_norm(f, w, 0.0) == Catch::Approx(max_abs(f)));

  // overflow marker
  const auto steep = WeightFunction::power_log(0.25, 0.0);
  CHECK(std::isinf(weighted_sup_norm(f, steep, 100.0)));
}

TEST_CASE("Gelfand-Shilov seminorm", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  const auto f = gaussian(grid);
  const double v = gelfand_shilov_seminorm(f, 0.5, 0.5, 4.0, 6);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  // regression pins from the first computation: at k = 4 every term is dominated by
  // the p = q = 0 one; at k = 1 the high-order terms take over
  CHECK(v == Catch::Approx(1.0).epsilon(1e-9));
  CHECK(gelfand_shilov_seminorm(f, 0.5, 0.5, 1.0, 6) ==
        Catch::Approx(138.664321993363).epsilon(1e-9));

  // P = 0 reduces to sup |f|
  CHECK(gelfand_shilov_seminorm(f, 0.5, 0.5, 4.0, 0) == Catch::Approx(max_abs(f)));
  CHECK(gelfand_shilov_seminorm(SampledSignal::zeros(grid), 1.0, 1.0, 2.0, 4) == 0.0);
  CHECK_THROWS_AS(gelfand_shilov_seminorm(f, 0.5, 0.5, 4.0, 13), accuracy_error);
}

TEST_CASE("Hermite corpus", "[signal]") {
  const auto grid = GridSpec::make(16.0, 2048);
  const auto h0 = hermite(0, grid);
  for (std::size_t j = 0; j < grid.size; j += 61) {
    const double x = grid.point(j);
    const double expect = std::pow(2.0, 0.25) * std::exp(-std::numbers::pi * x * x);
    CHECK(std::abs(h0.values[j] - cplx(expect, 0.0)) < 1e-12);
  }

  std::vector<SampledSignal> hs;
  for (int m = 0; m <= 10; ++m) hs.push_back(hermite(m, grid));
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      const double expect = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(inner(hs[i], hs[j]) - expect) < 1e-10);
    }

  for (int m = 0; m <= 10; ++m) {
    const auto fh = fourier(hs[m]);
    const auto href = hermite(m, fh.grid);
    cplx eig(1.0, 0.0);
    for (int i = 0; i < m; ++i) eig *= cplx(0.0, -1.0);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.size; ++j)
      worst = std::max(worst, std::abs(fh.values[j] - eig * href.values[j]));
    CHECK(worst < 1e-9);
  }

  CHECK_THROWS_AS(hermite(65, grid), validation_error);
}

TEST_CASE("symmetrize produces real even signals", "[signal]") {
  const auto grid = GridSpec::make(8.0, 512);
  auto f = hermite(3, grid);  // odd function
  for (std::size_t j = 0; j < grid.size; ++j) f.values[j] += cplx(0.0, 0.1);
  const auto s = symmetrize_real_even(f);
  for (std::size_t j = 1; j < grid.size; ++j) {
    CHECK(s.values[j].imag() == 0.0);
    CHECK(s.values[j] == s.values[grid.size - j]);
  }
}
