#include "jamopt/quadratic.hpp"

#include <algorithm>
#include <cmath>

namespace jamopt {

double eval(const QuadraticCurve& curve, double x) {
  const double dx = x - curve.vertex_x;
  return curve.amplitude * (dx * dx + curve.vertex_offset);
}

VertexPoint vertex(const QuadraticCurve& curve) {
  return {curve.vertex_x, curve.amplitude * curve.vertex_offset};
}

namespace {

// One or two Newton steps against the factored difference. The closed-form
// roots are limited by cancellation in the expanded coefficients; evaluating
// the difference in vertex form is accurate to a few ulp of the curve value,
// so polishing brings the residual down to that level.
double polish_root(const QuadraticCurve& a, const QuadraticCurve& b,
                   double x) {
  for (int iter = 0; iter < 2; ++iter) {
    const double value = eval(a, x) - eval(b, x);
    const double slope = 2.0 * a.amplitude * (x - a.vertex_x) -
                         2.0 * b.amplitude * (x - b.vertex_x);
    if (slope == 0.0) {
      break;
    }
    const double step = value / slope;
    if (!std::isfinite(step) ||
        std::abs(step) > 1e-3 * (1.0 + std::abs(x))) {
      break;  // tangency or noise-dominated slope; keep the closed form
    }
    x -= step;
  }
  return x;
}

}  // namespace

IntersectionResult intersect(const QuadraticCurve& a, const QuadraticCurve& b,
                             double eps_rel) {
  const double A = a.amplitude, B = a.vertex_x, C = a.vertex_offset;
  const double D = b.amplitude, E = b.vertex_x, F = b.vertex_offset;

  // Equal leading coefficients: the difference degenerates to a line.
  if (std::abs(A - D) <= eps_rel * std::max(A, D)) {
    if (std::abs(B - E) <=
        eps_rel * std::max({std::abs(B), std::abs(E), 1.0})) {
      if (std::abs(C - F) <= eps_rel * std::max({C, F, 1.0})) {
        return {IntersectionResult::Kind::coincident, 0.0, 0.0};
      }
      return {};
    }
    const double x =
        polish_root(a, b, ((B * B + C) - (E * E + F)) / (2.0 * (B - E)));
    return {IntersectionResult::Kind::pair, x, x};
  }

  // General case: (A-D)x^2 - 2(AB-DE)x + (A(B^2+C) - D(E^2+F)) = 0.
  const double alpha = A - D;
  const double beta = A * B - D * E;
  const double gamma = A * (B * B + C) - D * (E * E + F);
  const double discriminant = beta * beta - alpha * gamma;

  if (discriminant < 0.0) {
    // A discriminant that vanishes up to rounding is treated as a tangency.
    const double scale = beta * beta + std::abs(alpha * gamma);
    if (discriminant < -eps_rel * scale) {
      return {};
    }
    const double x = beta / alpha;
    return {IntersectionResult::Kind::pair, x, x};
  }

  const double root = std::sqrt(discriminant);
  double x1, x2;
  if (beta == 0.0) {
    x1 = root / alpha;
    x2 = -x1;
  } else {
    // Viete form; avoids cancellation between beta and the radical.
    const double q = beta + std::copysign(root, beta);
    x1 = q / alpha;
    x2 = gamma / q;
  }
  x1 = polish_root(a, b, x1);
  x2 = polish_root(a, b, x2);
  if (x1 > x2) {
    std::swap(x1, x2);
  }
  return {IntersectionResult::Kind::pair, x1, x2};
}

}  // namespace jamopt
