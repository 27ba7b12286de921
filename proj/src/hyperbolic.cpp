#include "ggt/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "ggt/error.hpp"

namespace ggt::h2 {

void require_point(Complex z) {
  if (!(z.imag() > 0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error("point " + format_complex(z) + " is not in H² (needs Im z > 0)");
  }
}

double distance(Complex z, Complex w) {
  require_point(z);
  require_point(w);
  double const arg = 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
  return std::acosh(std::max(1.0, arg));
}

Moebius Moebius::from(IntMatrix const& m) {
  if (m.dim() != 2) {
    throw Error("Möbius maps need 2×2 matrices");
  }
  return {m(0, 0).convert_to<double>(), m(0, 1).convert_to<double>(),
          m(1, 0).convert_to<double>(), m(1, 1).convert_to<double>()};
}

Moebius Moebius::operator*(Moebius const& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Complex apply(Moebius const& g, Complex z) {
  require_point(z);
  return (g.a * z + g.b) / (g.c * z + g.d);
}

std::string to_string(Isometry kind) {
  switch (kind) {
    case Isometry::Identity: return "identity";
    case Isometry::Elliptic: return "elliptic";
    case Isometry::Parabolic: return "parabolic";
    case Isometry::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Isometry classify(IntMatrix const& g) {
  if (g.dim() != 2) {
    throw Error("classification needs a 2×2 matrix");
  }
  if (g.determinant() != 1) {
    throw Error("matrix has determinant " + g.determinant().str() + ", expected 1");
  }
  if (g.is_identity() || (-g).is_identity()) {
    return Isometry::Identity;
  }
  BigInt t = abs(g.trace());
  if (t < 2) {
    return Isometry::Elliptic;
  }
  return t == 2 ? Isometry::Parabolic : Isometry::Hyperbolic;
}

Isometry classify(Moebius const& g) {
  if (std::abs(g.det() - 1.0) > 1e-12) {
    throw Error("matrix has determinant " + std::to_string(g.det()) + ", expected 1");
  }
  constexpr double tol = 1e-9;
  bool const plus_id = std::abs(g.a - 1) < tol && std::abs(g.d - 1) < tol
                       && std::abs(g.b) < tol && std::abs(g.c) < tol;
  bool const minus_id = std::abs(g.a + 1) < tol && std::abs(g.d + 1) < tol
                        && std::abs(g.b) < tol && std::abs(g.c) < tol;
  if (plus_id || minus_id) {
    return Isometry::Identity;
  }
  double const t = std::abs(g.trace());
  if (t < 2 - tol) {
    return Isometry::Elliptic;
  }
  return t > 2 + tol ? Isometry::Hyperbolic : Isometry::Parabolic;
}

double translation_length(IntMatrix const& g) {
  if (classify(g) != Isometry::Hyperbolic) {
    return 0.0;
  }
  return 2.0 * std::acosh(std::abs(g.trace().convert_to<double>()) / 2.0);
}

double translation_length(Moebius const& g) {
  if (classify(g) != Isometry::Hyperbolic) {
    return 0.0;
  }
  return 2.0 * std::acosh(std::abs(g.trace()) / 2.0);
}

double translation_length_numeric(Moebius const& g) {
  auto f = [&](double x, double log_y) {
    Complex z(x, std::exp(log_y));
    return distance(z, apply(g, z));
  };
  double bx = 0, by = 0, best = f(0, 0);
  for (int i = -80; i <= 80; ++i) {
    for (int j = -60; j <= 60; ++j) {
      double x = i * 0.25;
      double ly = j * 0.1;
      double v = f(x, ly);
      if (v < best) {
        best = v;
        bx = x;
        by = ly;
      }
    }
  }
  for (double step = 0.25; step > 1e-12;) {
    bool moved = false;
    for (auto [dx, dy] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0},
                          {1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}, {-1.0, 1.0}}) {
      double v = f(bx + dx * step, by + dy * step);
      if (v < best) {
        best = v;
        bx += dx * step;
        by += dy * step;
        moved = true;
      }
    }
    if (!moved) {
      step /= 2;
    }
  }
  return best;
}

Geodesic geodesic_between(Complex z, Complex w) {
  require_point(z);
  require_point(w);
  if (std::abs(z - w) < 1e-15) {
    throw Error("a geodesic needs two distinct points");
  }
  if (std::abs(z.real() - w.real()) < 1e-12) {
    return VerticalLine{z.real()};
  }
  double const c = (std::norm(z) - std::norm(w)) / (2.0 * (z.real() - w.real()));
  return Circle{c, std::abs(z - c)};
}

std::string to_string(Geodesic const& g) {
  std::ostringstream out;
  out << std::setprecision(12);
  if (auto const* v = std::get_if<VerticalLine>(&g)) {
    out << "vertical x=" << v->x + 0.0;
  } else {
    auto const& c = std::get<Circle>(g);
    out << "circle center=" << c.center + 0.0 << " radius=" << c.radius;
  }
  return out.str();
}

Complex along(Complex z, Complex w, double s) {
  double const total = distance(z, w);
  if (total == 0) {
    return z;
  }
  Geodesic const g = geodesic_between(z, w);
  if (auto const* v = std::get_if<VerticalLine>(&g)) {
    double const dir = w.imag() > z.imag() ? 1.0 : -1.0;
    return {v->x, z.imag() * std::exp(dir * s)};
  }
  // ζ ↦ (ζ − p)/(q − ζ) sends the circle with feet p < q onto the imaginary
  // axis; move along it there and map back.
  auto const& circ = std::get<Circle>(g);
  double const p = circ.center - circ.radius;
  double const q = circ.center + circ.radius;
  auto to_axis = [&](Complex u) { return (u - p) / (q - u); };
  double const yz = std::abs(to_axis(z));
  double const yw = std::abs(to_axis(w));
  double const dir = yw > yz ? 1.0 : -1.0;
  Complex const u(0.0, yz * std::exp(dir * s));
  return (p + q * u) / (1.0 + u);
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  double lo = 0;
  double hi = distance(a, b);
  // distance to a point moving along a geodesic is convex in arclength
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double const m1 = lo + (hi - lo) / 3;
    double const m2 = hi - (hi - lo) / 3;
    if (distance(p, along(a, b, m1)) < distance(p, along(a, b, m2))) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  double const s = (lo + hi) / 2;
  return std::min({distance(p, along(a, b, s)), distance(p, a), distance(p, b)});
}

double thin_triangle_check(Complex z1, Complex z2, Complex z3, std::size_t samples) {
  Complex const v[3] = {z1, z2, z3};
  for (int i = 0; i < 3; ++i) {
    require_point(v[i]);
    if (distance(v[i], v[(i + 1) % 3]) < 1e-12) {
      throw Error("degenerate triangle: two vertices coincide");
    }
  }
  if (samples < 2) {
    throw Error("thin_triangle_check needs at least 2 samples per side");
  }
  double worst = 0;
  for (int side = 0; side < 3; ++side) {
    Complex const a = v[side];
    Complex const b = v[(side + 1) % 3];
    Complex const c = v[(side + 2) % 3];
    double const len = distance(a, b);
    for (std::size_t k = 0; k < samples; ++k) {
      Complex const x = along(a, b, len * static_cast<double>(k)
                                        / static_cast<double>(samples - 1));
      double const d = std::min(distance_to_segment(x, b, c), distance_to_segment(x, c, a));
      worst = std::max(worst, d);
    }
  }
  return worst;
}

double thin_triangle_delta() { return std::acosh(std::sqrt(2.0)); }

double gromov_product(Complex x, Complex y, Complex p) {
  return std::max(0.0, 0.5 * (distance(p, x) + distance(p, y) - distance(x, y)));
}

namespace {
double parse_real(std::string const& s, std::string_view whole) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (std::exception const&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw ParseError("cannot parse complex number \"" + std::string(whole) + "\"");
  }
  return v;
}
}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += ch;
    }
  }
  if (s.empty()) {
    throw ParseError("empty complex number");
  }
  if (s.back() != 'i') {
    return {parse_real(s, text), 0.0};
  }
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  double imag = 0;
  if (im.empty() || im == "+") {
    imag = 1;
  } else if (im == "-") {
    imag = -1;
  } else {
    imag = parse_real(im, text);
  }
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

std::string format_complex(Complex z) {
  std::ostringstream out;
  out << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+")
      << std::abs(z.imag()) << 'i';
  return out.str();
}

}  // namespace ggt::h2
