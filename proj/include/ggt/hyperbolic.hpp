// The upper half-plane model of H²: distance, Möbius action, trace
// classification, translation length, geodesics and thin triangles. Also
// the ping-pong freeness certificate for ⟨[[1,k],[0,1]], [[1,0],[k,1]]⟩.

#ifndef GGT_HYPERBOLIC_HPP_
#define GGT_HYPERBOLIC_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ggt/integer_matrix.hpp"

namespace ggt::h2 {

using Complex = std::complex<double>;

// Throws Error unless Im z > 0.
void require_point(Complex z);

// cosh d(z, w) = 1 + |z − w|² / (2 Im z Im w)
double distance(Complex z, Complex w);

// z ↦ (az + b)/(cz + d)
struct Moebius {
  double a = 1, b = 0, c = 0, d = 1;

  static Moebius from(IntMatrix const& m);
  double det() const { return a * d - b * c; }
  double trace() const { return a + d; }
  Moebius operator*(Moebius const& o) const;
};

Complex apply(Moebius const& g, Complex z);

enum class Isometry { Identity, Elliptic, Parabolic, Hyperbolic };
std::string to_string(Isometry kind);

// By |tr|: < 2 elliptic, = 2 parabolic, > 2 hyperbolic; ±I is the identity.
// Exact for integer matrices; tolerance 1e−9 for doubles. Throws Error
// unless det = 1 (within 1e−12 for doubles).
Isometry classify(IntMatrix const& g);
Isometry classify(Moebius const& g);

// 2·arccosh(|tr|/2) for hyperbolic g, 0 otherwise.
double translation_length(IntMatrix const& g);
double translation_length(Moebius const& g);

// inf d(x, gx) by a grid search refined with a pattern search. Independent
// of the trace formula, for cross-checking.
double translation_length_numeric(Moebius const& g);

struct VerticalLine {
  double x;
};
struct Circle {
  double center;
  double radius;
};
using Geodesic = std::variant<VerticalLine, Circle>;

// Throws Error if z = w.
Geodesic geodesic_between(Complex z, Complex w);
std::string to_string(Geodesic const& g);

// Point at distance s from z along the geodesic segment towards w.
Complex along(Complex z, Complex w, double s);

// Distance from p to the geodesic segment [a, b].
double distance_to_segment(Complex p, Complex a, Complex b);

// Largest distance from a sample point of one side to the union of the
// other two sides, over `samples` arclength-equispaced points per side.
// Throws Error if two vertices coincide.
double thin_triangle_check(Complex z1, Complex z2, Complex z3,
                           std::size_t samples = 256);

// arccosh(√2), the thinness constant of ideal triangles.
double thin_triangle_delta();

// ½(d(p,x) + d(p,y) − d(x,y)), clamped at 0.
double gromov_product(Complex x, Complex y, Complex p);

// "x+yi", "x-yi", "yi", "i", "-2.5+0.5i", "3"
Complex parse_complex(std::string_view text);
std::string format_complex(Complex z);

}  // namespace ggt::h2

namespace ggt {

struct PingPongResult {
  long k = 0;
  std::size_t max_len = 0;
  bool table_ok = false;             // gⁿ(A) ⊂ B and hⁿ(B) ⊂ A on the samples
  std::uint64_t words_checked = 0;   // reduced words of length 1..max_len
  std::optional<std::string> witness;  // shortlex-first word equal to ±I
  std::optional<IntMatrix> witness_value;

  bool free() const noexcept { return table_ok && !witness; }
};

// Letters g, h, G = g⁻¹, H = h⁻¹ (so "Ghg" is g⁻¹hg).
IntMatrix evaluate_pingpong_word(long k, std::string_view word);

// (i) for n ∈ [−8, 8]∖{0}, gⁿ maps seeded sample vectors of
// A = {|x| < |y|} into B = {|x| > |y|} and hⁿ maps those of B into A, in
// exact integer arithmetic; (ii) every reduced word of length ≤ max_len is
// evaluated, recording the shortlex-first one equal to ±I. Throws Error for
// k ≤ 0.
PingPongResult pingpong_certificate(long k, std::size_t max_len,
                                    std::uint64_t seed = 0);

}  // namespace ggt

#endif  // GGT_HYPERBOLIC_HPP_
