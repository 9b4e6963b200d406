#include "core/zernike.hpp"

#include <algorithm>
#include <cmath>

namespace zrnet::zernike {

ZernikeIndex from_ansi(int j) {
  require(j >= 0 && j <= kMaxAnsi, ErrorKind::domain,
          "ANSI index " + std::to_string(j) + " outside [0,27]");
  // n is the unique integer with n(n+2)/2 - n/2 <= j <= n(n+2)/2 + n/2,
  // i.e. the largest n with n(n+1)/2 <= j.
  int n = 0;
  while ((n + 1) * (n + 2) / 2 <= j) ++n;
  int m = 2 * j - n * (n + 2);
  require(std::abs(m) <= n && (n - std::abs(m)) % 2 == 0, ErrorKind::domain,
          "no valid (n,m) for ANSI index " + std::to_string(j));
  return {j, n, m};
}

int to_ansi(int n, int m) {
  require(n >= 0, ErrorKind::domain, "radial order must be nonnegative");
  require(std::abs(m) <= n, ErrorKind::domain,
          "|m| exceeds n for (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
  require((n - std::abs(m)) % 2 == 0, ErrorKind::domain,
          "(n-|m|) must be even for (n,m)=(" + std::to_string(n) + "," + std::to_string(m) + ")");
  return (n * (n + 2) + m) / 2;
}

double mode_norm(int n, int m) {
  return m == 0 ? std::sqrt(static_cast<double>(n + 1))
                : std::sqrt(2.0 * (n + 1));
}

namespace {

// Iterative product factorial; exact in double up to 22!, far beyond n=6.
double fact(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double radial_poly(int n, int m_abs, double rho) {
  require(m_abs >= 0 && m_abs <= n && (n - m_abs) % 2 == 0, ErrorKind::domain,
          "invalid radial polynomial order pair");
  require(rho >= 0.0 && rho <= 1.0, ErrorKind::domain,
          "radius outside [0,1]");
  const int kmax = (n - m_abs) / 2;
  double sum = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const double coef = fact(n - k) /
        (fact(k) * fact((n + m_abs) / 2 - k) * fact((n - m_abs) / 2 - k));
    const double term = coef * std::pow(rho, n - 2 * k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

UnitDiskGrid UnitDiskGrid::make(int size, double diameter_fraction) {
  require(size >= 2, ErrorKind::config, "grid size must be >= 2");
  require(diameter_fraction > 0.0 && diameter_fraction <= 1.0, ErrorKind::config,
          "pupil diameter fraction must be in (0,1]");
  UnitDiskGrid g;
  g.size = size;
  g.diameter_fraction = diameter_fraction;
  const int64_t n2 = g.numel();
  g.rho.resize(n2);
  g.phi.resize(n2);
  g.mask.resize(n2);
  const double center = 0.5 * (size - 1);
  const double radius = diameter_fraction * size / 2.0;
  for (int i = 0; i < size; ++i) {
    const double y = i - center;
    for (int j = 0; j < size; ++j) {
      const double x = j - center;
      const double r = std::sqrt(x * x + y * y) / radius;
      const int64_t idx = static_cast<int64_t>(i) * size + j;
      g.rho[idx] = r;
      g.phi[idx] = std::atan2(y, x);
      g.mask[idx] = r <= 1.0 ? 1.0 : 0.0;
    }
  }
  return g;
}

std::vector<double> evaluate_mode(int j, const UnitDiskGrid& grid) {
  require(j >= kFirstMode && j <= kLastMode, ErrorKind::domain,
          "mode index " + std::to_string(j) + " outside [3,27]");
  const ZernikeIndex zi = from_ansi(j);
  const double norm = mode_norm(zi.n, zi.m);
  const int m_abs = std::abs(zi.m);
  std::vector<double> field(grid.numel(), 0.0);
  for (int64_t i = 0; i < grid.numel(); ++i) {
    if (grid.mask[i] == 0.0) continue;
    const double r = std::min(grid.rho[i], 1.0);
    const double radial = radial_poly(zi.n, m_abs, r);
    const double angular = zi.m >= 0 ? std::cos(zi.m * grid.phi[i])
                                     : std::sin(m_abs * grid.phi[i]);
    field[i] = norm * radial * angular;
  }
  return field;
}

std::vector<double> compose_wavefront(const CoefficientVector& coeffs,
                                      const UnitDiskGrid& grid) {
  for (double v : coeffs.c) {
    require(std::isfinite(v), ErrorKind::domain, "non-finite coefficient");
  }
  std::vector<double> phase(grid.numel(), 0.0);
  for (int j = kFirstMode; j <= kLastMode; ++j) {
    const double c = coeffs.at_ansi(j);
    if (c == 0.0) continue;
    const std::vector<double> mode = evaluate_mode(j, grid);
    for (int64_t i = 0; i < grid.numel(); ++i) phase[i] += c * mode[i];
  }
  return phase;
}

GroupingMode grouping_mode_from_string(const std::string& s) {
  if (s == "azimuthal") return GroupingMode::azimuthal;
  if (s == "aberration") return GroupingMode::aberration;
  if (s == "none") return GroupingMode::none;
  throw_error(ErrorKind::config, "unknown grouping mode: " + s);
}

std::string to_string(GroupingMode mode) {
  switch (mode) {
    case GroupingMode::azimuthal: return "azimuthal";
    case GroupingMode::aberration: return "aberration";
    case GroupingMode::none: return "none";
  }
  return "none";
}

GroupingTable grouping(GroupingMode mode) {
  GroupingTable table;
  table.mode = mode;
  if (mode == GroupingMode::none) {
    GroupingTable::Group g;
    for (int j = kFirstMode; j <= kLastMode; ++j) g.members.push_back(j);
    table.groups.push_back(std::move(g));
    return table;
  }
  if (mode == GroupingMode::azimuthal) {
    for (int m = -6; m <= 6; ++m) {
      GroupingTable::Group g;
      g.key_m = m;
      for (int j = kFirstMode; j <= kLastMode; ++j) {
        if (from_ansi(j).m == m) g.members.push_back(j);
      }
      if (!g.members.empty()) table.groups.push_back(std::move(g));
    }
    return table;
  }
  // Aberration mode: key (n, |m|), ascending lexicographic.
  for (int n = 2; n <= 6; ++n) {
    for (int m_abs = n % 2; m_abs <= n; m_abs += 2) {
      GroupingTable::Group g;
      g.key_n = n;
      g.key_m_abs = m_abs;
      for (int j = kFirstMode; j <= kLastMode; ++j) {
        const ZernikeIndex zi = from_ansi(j);
        if (zi.n == n && std::abs(zi.m) == m_abs) g.members.push_back(j);
      }
      if (!g.members.empty()) table.groups.push_back(std::move(g));
    }
  }
  return table;
}

CoefficientVector sample_coefficients(Rng& rng) {
  CoefficientVector cv;
  for (int i = 0; i < kNumModes; ++i) cv.c[i] = rng.uniform(-1.0, 1.0);
  return cv;
}

}  // namespace zrnet::zernike
