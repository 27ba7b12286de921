#include <cmath>

#include "ggt/cayley.hpp"

namespace ggt {

std::vector<std::uint64_t> GrowthSeries::sphere_sizes() const {
  std::vector<std::uint64_t> s;
  for (std::size_t n = 0; n < sizes.size(); ++n) {
    s.push_back(n == 0 ? sizes[0] : sizes[n] - sizes[n - 1]);
  }
  return s;
}

bool GrowthSeries::is_submultiplicative() const {
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    for (std::size_t t = 0; r + t < sizes.size(); ++t) {
      // ρ values stay far below 2^32 within any feasible budget
      if (sizes[r + t] > sizes[r] * sizes[t]) {
        return false;
      }
    }
  }
  return true;
}

namespace {
void require_length(GrowthSeries const& series, char const* what) {
  if (series.sizes.size() < 5) {
    throw Error(std::string(what) + " needs a series with N ≥ 4, got N = "
                + std::to_string(series.max_radius()));
  }
}
}  // namespace

GrowthExponent growth_exponent(GrowthSeries const& series) {
  require_length(series, "growth_exponent");
  auto const n = series.max_radius();
  auto root = [&](std::size_t k) {
    return std::pow(static_cast<double>(series.sizes[k]), 1.0 / static_cast<double>(k));
  };
  GrowthExponent e{};
  e.root = root(n);
  e.fekete = root(1);
  for (std::size_t k = 2; k <= n; ++k) {
    e.fekete = std::min(e.fekete, root(k));
  }
  auto s = series.sphere_sizes();
  e.sphere_ratio = (s[n] == 0 || s[n - 1] == 0)
                       ? 1.0
                       : static_cast<double>(s[n]) / static_cast<double>(s[n - 1]);
  return e;
}

double growth_degree(GrowthSeries const& series) {
  require_length(series, "growth_degree");
  auto const n = series.max_radius();
  std::size_t const lo = (n + 1) / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double m = 0;
  for (std::size_t k = std::max<std::size_t>(lo, 1); k <= n; ++k) {
    double x = std::log(static_cast<double>(k));
    double y = std::log(static_cast<double>(series.sizes[k]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    m += 1;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

std::uint64_t bass_guivarch_degree(std::span<std::uint64_t const> ranks) {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    d += (i + 1) * ranks[i];
  }
  return d;
}

Rational gromov_product(std::int64_t dpx, std::int64_t dpy, std::int64_t dxy) {
  if (dpx < 0 || dpy < 0 || dxy < 0 || dxy > dpx + dpy || dpx > dpy + dxy
      || dpy > dpx + dxy) {
    throw Error("distances (" + std::to_string(dpx) + ", " + std::to_string(dpy)
                + ", " + std::to_string(dxy)
                + ") violate the triangle inequality");
  }
  return Rational(dpx + dpy - dxy, 2);
}

}  // namespace ggt
