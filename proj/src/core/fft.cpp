#include "core/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace zrnet::fft {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct TwiddleTable {
  // cos/sin of -2*pi*k/n for k in [0, n/2). Forward uses (c, s),
  // inverse uses (c, -s).
  std::vector<double> c, s;
};

// Tables are immutable once built; the mutex only guards first construction.
const TwiddleTable& twiddles(int n) {
  static std::mutex mu;
  static std::map<int, TwiddleTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  TwiddleTable t;
  t.c.resize(n / 2);
  t.s.resize(n / 2);
  for (int k = 0; k < n / 2; ++k) {
    const double ang = -kTwoPi * k / n;
    t.c[k] = std::cos(ang);
    t.s[k] = std::sin(ang);
  }
  return cache.emplace(n, std::move(t)).first->second;
}

void bit_reverse_permute(double* re, double* im, int n) {
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }
}

}  // namespace

void transform(double* re, double* im, int n, int sign) {
  check_size(n);
  if (n == 1) return;
  const TwiddleTable& tw = twiddles(n);
  bit_reverse_permute(re, im, n);
  for (int len = 2; len <= n; len <<= 1) {
    const int half = len >> 1;
    const int step = n / len;
    for (int base = 0; base < n; base += len) {
      for (int k = 0; k < half; ++k) {
        const double wc = tw.c[k * step];
        const double ws = sign < 0 ? tw.s[k * step] : -tw.s[k * step];
        const int a = base + k;
        const int b = a + half;
        const double tr = re[b] * wc - im[b] * ws;
        const double ti = re[b] * ws + im[b] * wc;
        re[b] = re[a] - tr;
        im[b] = im[a] - ti;
        re[a] += tr;
        im[a] += ti;
      }
    }
  }
}

void transform2d(double* re, double* im, int h, int w, int sign) {
  check_size(h);
  check_size(w);
  for (int r = 0; r < h; ++r) {
    transform(re + static_cast<int64_t>(r) * w, im + static_cast<int64_t>(r) * w, w, sign);
  }
  std::vector<double> cre(h), cim(h);
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) {
      const int64_t idx = static_cast<int64_t>(r) * w + c;
      cre[r] = re[idx];
      cim[r] = im[idx];
    }
    transform(cre.data(), cim.data(), h, sign);
    for (int r = 0; r < h; ++r) {
      const int64_t idx = static_cast<int64_t>(r) * w + c;
      re[idx] = cre[r];
      im[idx] = cim[r];
    }
  }
}

}  // namespace zrnet::fft
