#pragma once

#include <functional>
#include <vector>

#include "core/tensor.hpp"

namespace zrnet::ad {

struct ComplexTensor {
  Tensor re, im;
};

// ---- elementwise / linear algebra ----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double k);
// Broadcast a single-element tensor over x.
Tensor add_bc(const Tensor& x, const Tensor& s);
Tensor div_bc(const Tensor& x, const Tensor& s);
Tensor matmul(const Tensor& a, const Tensor& b);  // (M,K)x(K,N)
// y = x * W^T + b with W stored (out,in); pass undefined b for no bias.
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);
Tensor mean(const Tensor& x);
Tensor sum(const Tensor& x);
Tensor abs(const Tensor& x);      // subgradient 0 at the kink
Tensor square(const Tensor& x);
Tensor clamp(const Tensor& x, double lo, double hi);
Tensor leaky_relu(const Tensor& x, double slope);
Tensor relu(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor softmax_lastdim(const Tensor& x);
Tensor concat(const std::vector<Tensor>& xs, int axis);
Tensor slice(const Tensor& x, int axis, int64_t start, int64_t len);
Tensor reshape(const Tensor& x, std::vector<int64_t> shape);
Tensor gather_rows(const Tensor& x, const std::vector<int>& rows);  // 2D

// ---- neural network blocks ----
// x (N,C,H,W), w (O,C,k,k) odd k, pad k/2, stride 1 or 2.
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, int stride);
Tensor upsample2x_nearest(const Tensor& x);
Tensor global_avg_pool(const Tensor& x);  // (N,C,H,W) -> (N,C)

// ---- complex / Fourier ----
ComplexTensor make_complex(const Tensor& re, const Tensor& im);
ComplexTensor complex_exp(const Tensor& phase);       // (cos p, sin p)
ComplexTensor cmul(const ComplexTensor& a, const ComplexTensor& b);
Tensor magnitude_squared(const ComplexTensor& z);
// Unnormalized forward transform over the trailing 2 dims; ifft2 applies
// the 1/(H*W) factor. Sizes must be powers of two.
ComplexTensor fft2(const ComplexTensor& z);
ComplexTensor ifft2(const ComplexTensor& z);

// PSF plumbing: both are linear index maps with wrap-around, defined so the
// window/anchor is the DC bin of an unshifted transform.
Tensor crop_center_wrapped(const Tensor& x, int k);              // (H,W) -> (k,k)
Tensor embed_kernel_wrapped(const Tensor& kern, int h, int w);   // (k,k) -> (H,W)

// ---- verification ----
// Builder evaluates the function under test on a fresh tape; returns the
// scalar loss for leaf value x. grad_check compares the tape gradient
// against central finite differences and reports the max relative error
// |analytic - numeric| / max(1, |analytic|, |numeric|).
using ScalarFn = std::function<Tensor(Tape&, const Tensor& leaf)>;
double grad_check(const ScalarFn& f, const std::vector<double>& x, double h);
double grad_check_coords(const ScalarFn& f, const std::vector<double>& x,
                         double h, const std::vector<int64_t>& coords);

}  // namespace zrnet::ad
