#pragma once

#include <cstdint>
#include <vector>

#include "core/common.hpp"

namespace zrnet::fft {

// In-place 1D transform of length n (power of two). sign=-1 gives the
// unnormalized forward DFT sum x_n e^{-2*pi*i*k*n/N}; sign=+1 the
// unnormalized inverse kernel. No scaling is applied either way.
void transform(double* re, double* im, int n, int sign);

// Unnormalized 2D transform over the trailing h x w plane (row-major).
void transform2d(double* re, double* im, int h, int w, int sign);

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline void check_size(int n) {
  require(is_pow2(n), ErrorKind::config,
          "transform size " + std::to_string(n) + " is not a power of two");
}

}  // namespace zrnet::fft
