#ifndef TFSEQ_GRID_HPP
#define TFSEQ_GRID_HPP

#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/fft.hpp"

namespace tfseq {

// Uniform grid x_j = -T + j*step on [-T, T), N a power of two, step = 2T/N.
// The dual grid holds xi_m = (m - N/2) / (2T), so step * freq_step = 1/N and the
// discrete transform in signal.hpp is unitary up to its stated scaling.
struct GridSpec {
  double half_width = 0.0;  // T
  std::size_t size = 0;     // N

  double step() const { return 2.0 * half_width / static_cast<double>(size); }
  double freq_step() const { return 1.0 / (2.0 * half_width); }
  double nyquist() const { return static_cast<double>(size) / (4.0 * half_width); }
  double point(std::size_t j) const { return -half_width + static_cast<double>(j) * step(); }
  double freq_point(std::size_t m) const {
    return (static_cast<double>(m) - static_cast<double>(size) / 2.0) * freq_step();
  }

  bool operator==(const GridSpec& o) const { return half_width == o.half_width && size == o.size; }
  bool operator!=(const GridSpec& o) const { return !(*this == o); }

  static GridSpec make(double T, std::size_t N) {
    if (!(T > 0.0)) throw validation_error("grid: half width must be positive");
    if (!is_power_of_two(N) || N < 4) throw validation_error("grid: N must be a power of two >= 4");
    return GridSpec{T, N};
  }

  // Builds a grid near the nominal half width whose step exactly divides every
  // requested time shift (lattice constants a, 1/b, 1/2, ...). The first shift
  // anchors the step; the others must then land on integer multiples too.
  static GridSpec aligned(double T_nominal, std::size_t N, const std::vector<double>& shifts) {
    GridSpec base = make(T_nominal, N);
    if (shifts.empty()) return base;
    const double step0 = base.step();
    const double anchor = shifts.front();
    if (!(anchor > 0.0)) throw validation_error("grid: alignment shifts must be positive");
    const long m0 = std::lround(anchor / step0);
    for (long dm = 0; dm <= 8; ++dm) {
      for (int sign = 0; sign < (dm == 0 ? 1 : 2); ++sign) {
        const long m = m0 + (sign == 0 ? dm : -dm);
        if (m < 1) continue;
        const double step = anchor / static_cast<double>(m);
        bool ok = true;
        for (double s : shifts) {
          const double ratio = s / step;
          if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, std::abs(ratio))) {
            ok = false;
            break;
          }
        }
        if (ok) return GridSpec{0.5 * static_cast<double>(N) * step, N};
      }
    }
    std::ostringstream msg;
    msg << "grid: no step near 2*" << T_nominal << "/" << N
        << " makes all requested shifts integer multiples";
    throw alignment_error(msg.str());
  }

  bool is_aligned(double x) const {
    const double r = x / step();
    return std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, std::abs(r));
  }

  // The frequency-side grid: half width N/(4T), so its step is this grid's
  // frequency step and the dual of the dual is the original grid.
  GridSpec dual() const { return GridSpec{nyquist(), size}; }

  // Signed number of grid steps in x; throws naming the nearest multiple.
  long shift_index(double x) const {
    const double r = x / step();
    const long p = std::lround(r);
    if (std::abs(r - static_cast<double>(p)) > 1e-9 * std::max(1.0, std::abs(r))) {
      std::ostringstream msg;
      msg << "shift " << x << " is not an integer multiple of the grid step " << step()
          << "; nearest multiple is " << static_cast<double>(p) * step();
      throw alignment_error(msg.str());
    }
    return p;
  }
};

}  // namespace tfseq

#endif
