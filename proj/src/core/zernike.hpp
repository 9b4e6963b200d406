#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/rng.hpp"

namespace zrnet::zernike {

// Modes 3..27 (ANSI). Piston/tip/tilt are index-convertible but never
// evaluated on a grid.
constexpr int kFirstMode = 3;
constexpr int kLastMode = 27;
constexpr int kNumModes = kLastMode - kFirstMode + 1;
constexpr int kMaxAnsi = 27;

struct ZernikeIndex {
  int ansi;  // j = (n(n+2) + m) / 2
  int n;     // radial order
  int m;     // azimuthal degree, sign selects sin (m<0) vs cos (m>=0)
};

ZernikeIndex from_ansi(int j);
int to_ansi(int n, int m);

// Orthonormalizing factor: sqrt(n+1) for m==0, sqrt(2(n+1)) otherwise.
// With these factors the disk-average of Z_j^2 is 1, so sum(c_j^2) is the
// wavefront variance and Eq-13-style RMS values carry physical meaning.
// Coefficients throughout this codebase are expressed against these
// orthonormal modes (kOrthonormalModes documents the convention).
inline constexpr bool kOrthonormalModes = true;
double mode_norm(int n, int m);

double radial_poly(int n, int m_abs, double rho);

// 25 coefficients in radians, index i stores c_{i+3}.
struct CoefficientVector {
  std::array<double, kNumModes> c{};

  double& at_ansi(int j) { return c[check_index(j)]; }
  double at_ansi(int j) const { return c[check_index(j)]; }

  static int check_index(int j) {
    require(j >= kFirstMode && j <= kLastMode, ErrorKind::domain,
            "coefficient index " + std::to_string(j) + " outside [3,27]");
    return j - kFirstMode;
  }
};

// Square sampling grid in polar form. Coordinates come from pixel centers
// symmetric about the array midpoint, so mask(x,y) == mask(-x,-y) exactly.
// The unit disk has radius diameter_fraction * size / 2 pixels; samples
// with rho exactly 1 are inside.
struct UnitDiskGrid {
  int size = 0;
  double diameter_fraction = 1.0;
  std::vector<double> rho;    // size*size, row-major
  std::vector<double> phi;    // azimuthal angle
  std::vector<double> mask;   // 1 inside the aperture, 0 outside

  static UnitDiskGrid make(int size, double diameter_fraction = 1.0);
  int64_t numel() const { return static_cast<int64_t>(size) * size; }
};

// Field is zero outside the mask; values include the orthonormal factor.
std::vector<double> evaluate_mode(int j, const UnitDiskGrid& grid);

std::vector<double> compose_wavefront(const CoefficientVector& coeffs,
                                      const UnitDiskGrid& grid);

enum class GroupingMode { azimuthal, aberration, none };

GroupingMode grouping_mode_from_string(const std::string& s);
std::string to_string(GroupingMode mode);

struct GroupingTable {
  struct Group {
    // azimuthal: key_m meaningful; aberration: (key_n, key_m_abs); none: neither.
    int key_m = 0;
    int key_n = 0;
    int key_m_abs = 0;
    std::vector<int> members;  // ANSI indices, ascending
  };
  GroupingMode mode = GroupingMode::none;
  std::vector<Group> groups;  // sorted by ascending group key
};

GroupingTable grouping(GroupingMode mode);

// 25 i.i.d. draws from U[-1, 1] rad, ANSI order.
CoefficientVector sample_coefficients(Rng& rng);

}  // namespace zrnet::zernike
