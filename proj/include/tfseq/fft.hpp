#ifndef TFSEQ_FFT_HPP
#define TFSEQ_FFT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <numbers>
#include <vector>

#include "tfseq/errors.hpp"

namespace tfseq {

using cplx = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

// Forward twiddles e^{-2*pi*i*k/n}, k = 0..n/2-1, computed directly per index so the
// transform error stays at the O(log n * eps) level. Cached per size and per thread;
// the sequential plan keeps outputs bit-identical for a fixed size.
inline const std::vector<cplx>& twiddle_table(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<std::vector<cplx>>> cache;
  auto& slot = cache[n];
  if (!slot) {
    auto table = std::make_unique<std::vector<cplx>>(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      (*table)[k] = std::polar(1.0, angle);
    }
    slot = std::move(table);
  }
  return *slot;
}

}  // namespace detail

// In-place radix-2 DFT: a[q] <- sum_j a[j] e^{-+2*pi*i*j*q/n}. The inverse includes the 1/n factor.
inline void fft_pow2(std::vector<cplx>& a, bool inverse = false) {
  const std::size_t n = a.size();
  if (n == 0) return;
  if (!is_power_of_two(n)) throw validation_error("fft_pow2: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& tw = detail::twiddle_table(n);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx w = inverse ? std::conj(tw[k * stride]) : tw[k * stride];
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= scale;
  }
}

}  // namespace tfseq

#endif
