#pragma once

namespace jamopt {

/// One SIR expression in canonical form
///   f(x) = amplitude * ((x - vertex_x)^2 + vertex_offset)
/// with amplitude > 0 and vertex_offset >= 0, so the curve is convex with
/// minimum amplitude * vertex_offset attained at x = vertex_x.
struct QuadraticCurve {
  double amplitude = 1.0;
  double vertex_x = 0.0;
  double vertex_offset = 0.0;
};

double eval(const QuadraticCurve& curve, double x);

struct VertexPoint {
  double x;
  double value;
};

/// The single critical point of the curve: (vertex_x, amplitude * offset).
VertexPoint vertex(const QuadraticCurve& curve);

/// Result of intersecting two canonical curves. `pair` carries the sorted
/// roots (equal for a tangency); `coincident` means the curves agree as
/// functions within tolerance and `none` that they never meet.
struct IntersectionResult {
  enum class Kind { none, pair, coincident };
  Kind kind = Kind::none;
  double x_minus = 0.0;
  double x_plus = 0.0;
};

/// Solves amplitude_a*((x-Ba)^2+Ca) = amplitude_b*((x-Bb)^2+Cb) in closed
/// form. eps_rel controls when the leading coefficients (and, in the
/// degenerate branch, vertex data) are treated as equal.
IntersectionResult intersect(const QuadraticCurve& a, const QuadraticCurve& b,
                             double eps_rel = 1e-12);

}  // namespace jamopt
