#pragma once

#include <cstdint>
#include <random>

namespace zrnet {

// Seeded generator with portable draw functions. mt19937_64 output is
// pinned by the standard; std::uniform_real_distribution is not, so the
// float conversions live here to keep runs bit-identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(uniform01() * static_cast<double>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zrnet
