#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "jamopt/quadratic.hpp"
#include "jamopt/rng.hpp"

using namespace jamopt;

namespace {

QuadraticCurve random_curve(RngStream& rng, double zero_offset_share = 0.1) {
  QuadraticCurve curve;
  curve.amplitude = std::pow(10.0, rng.next_uniform(-4.0, 3.0));
  curve.vertex_x = rng.next_uniform(-500.0, 500.0);
  curve.vertex_offset = rng.next_unit() < zero_offset_share
                            ? 0.0
                            : std::pow(10.0, rng.next_uniform(-3.0, 6.0));
  return curve;
}

}  // namespace

TEST_CASE("eval and vertex") {
  CHECK(eval({1.0, 5.0, 2.0}, 5.0) == 2.0);
  CHECK(eval({2.0, 0.0, 0.0}, 3.0) == 18.0);
  // Reference dual-hop first-receiver curve at its vertex.
  const QuadraticCurve sir1{1000.0 / (100.0 * 4525.0), 50.0, 2025.0};
  CHECK(eval(sir1, 50.0) ==
        doctest::Approx(4.4751381215469613).epsilon(1e-12));

  CHECK(vertex({1.0, 5.0, 2.0}).x == 5.0);
  CHECK(vertex({1.0, 5.0, 2.0}).value == 2.0);
  CHECK(vertex({3.0, 0.0, 0.0}).x == 0.0);
  CHECK(vertex({3.0, 0.0, 0.0}).value == 0.0);
  CHECK(vertex(sir1).value ==
        doctest::Approx(4.4751381215469613).epsilon(1e-12));
}

TEST_CASE("intersect closed-form cases") {
  SUBCASE("equal amplitudes meet once") {
    const auto hit = intersect({1.0, 0.0, 0.0}, {1.0, 2.0, 0.0});
    REQUIRE(hit.kind == IntersectionResult::Kind::pair);
    CHECK(hit.x_minus == doctest::Approx(1.0));
    CHECK(hit.x_plus == doctest::Approx(1.0));
  }
  SUBCASE("nested curves never meet") {
    const auto hit = intersect({1.0, 0.0, 5.0}, {2.0, 0.0, 5.0});
    CHECK(hit.kind == IntersectionResult::Kind::none);
  }
  SUBCASE("two real roots") {
    const auto hit = intersect({2.0, 0.0, 0.0}, {1.0, 3.0, 0.0});
    REQUIRE(hit.kind == IntersectionResult::Kind::pair);
    CHECK(hit.x_minus ==
          doctest::Approx(-7.2426406871192851).epsilon(1e-12));
    CHECK(hit.x_plus == doctest::Approx(1.2426406871192851).epsilon(1e-12));
  }
  SUBCASE("tangency reports a double root") {
    // Curves built to touch at exactly (2, 5).
    const auto hit = intersect({1.0, 0.0, 1.0}, {2.0, 1.0, 1.5});
    REQUIRE(hit.kind == IntersectionResult::Kind::pair);
    CHECK(hit.x_minus == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(hit.x_plus == doctest::Approx(hit.x_minus));
  }
  SUBCASE("coincident curves") {
    const QuadraticCurve c{3.25, -7.0, 11.0};
    CHECK(intersect(c, c).kind == IntersectionResult::Kind::coincident);
    QuadraticCurve almost = c;
    almost.amplitude *= 1.0 + 1e-15;
    CHECK(intersect(c, almost).kind ==
          IntersectionResult::Kind::coincident);
  }
  SUBCASE("same vertex data, distinct offsets") {
    CHECK(intersect({2.0, 1.0, 3.0}, {2.0, 1.0, 4.0}).kind ==
          IntersectionResult::Kind::none);
  }
}

TEST_CASE("shared vertex and offset with distinct amplitudes never meet") {
  RngStream rng(7);
  for (int i = 0; i < 500; ++i) {
    QuadraticCurve a = random_curve(rng, 0.0);  // offset > 0
    QuadraticCurve b = a;
    b.amplitude = a.amplitude * rng.next_uniform(1.5, 4.0);
    CHECK(intersect(a, b).kind == IntersectionResult::Kind::none);
    CHECK(intersect(b, a).kind == IntersectionResult::Kind::none);
  }
}

TEST_CASE("pair roots satisfy both curves") {
  RngStream rng(11);
  int pairs_seen = 0;
  for (int i = 0; i < 20000; ++i) {
    const QuadraticCurve a = random_curve(rng);
    const QuadraticCurve b = random_curve(rng);
    const auto hit = intersect(a, b);
    if (hit.kind != IntersectionResult::Kind::pair) {
      continue;
    }
    ++pairs_seen;
    for (double x : {hit.x_minus, hit.x_plus}) {
      const double va = eval(a, x);
      const double vb = eval(b, x);
      CHECK(std::abs(va - vb) <= 1e-9 * std::max(va, 1.0));
    }
  }
  CHECK(pairs_seen > 1000);
}

TEST_CASE("no-intersection results are gap-bounded on a dense grid") {
  RngStream rng(13);
  int checked = 0;
  while (checked < 200) {
    const QuadraticCurve a = random_curve(rng);
    const QuadraticCurve b = random_curve(rng);
    const auto hit = intersect(a, b);
    if (hit.kind != IntersectionResult::Kind::none) {
      continue;
    }
    ++checked;
    // Analytic minimum of |f_a - f_b| over the reals.
    const double alpha = a.amplitude - b.amplitude;
    if (alpha == 0.0) {
      continue;  // degenerate branch, no real quadratic gap
    }
    const double beta = a.amplitude * a.vertex_x - b.amplitude * b.vertex_x;
    const double gamma =
        a.amplitude * (a.vertex_x * a.vertex_x + a.vertex_offset) -
        b.amplitude * (b.vertex_x * b.vertex_x + b.vertex_offset);
    const double analytic_min =
        std::abs((beta * beta - alpha * gamma) / alpha);
    CHECK(analytic_min > 0.0);

    double grid_min = std::numeric_limits<double>::infinity();
    int sign_changes = 0;
    double previous = 0.0;
    const double lo = a.vertex_x - 1000.0;
    const double hi = a.vertex_x + 1000.0;
    for (int k = 0; k < 100000; ++k) {
      const double x = lo + (hi - lo) * k / 99999.0;
      const double diff = eval(a, x) - eval(b, x);
      grid_min = std::min(grid_min, std::abs(diff));
      if (k > 0 && std::signbit(diff) != std::signbit(previous)) {
        ++sign_changes;
      }
      previous = diff;
    }
    CHECK(sign_changes == 0);
    CHECK(grid_min >= analytic_min * (1.0 - 1e-9));
    CHECK(grid_min > 0.0);
  }
}

TEST_CASE("eval is convex") {
  RngStream rng(17);
  for (int i = 0; i < 2000; ++i) {
    const QuadraticCurve curve = random_curve(rng);
    const double x1 = rng.next_uniform(-2000.0, 2000.0);
    const double x2 = rng.next_uniform(-2000.0, 2000.0);
    const double t = rng.next_unit();
    const double lhs = eval(curve, t * x1 + (1.0 - t) * x2);
    const double rhs = t * eval(curve, x1) + (1.0 - t) * eval(curve, x2);
    CHECK(lhs <= rhs + 1e-9 * std::max(rhs, 1.0));
  }
}

TEST_CASE("pair results are ordered") {
  RngStream rng(19);
  for (int i = 0; i < 5000; ++i) {
    const auto hit = intersect(random_curve(rng), random_curve(rng));
    if (hit.kind == IntersectionResult::Kind::pair) {
      CHECK(hit.x_minus <= hit.x_plus);
    }
  }
}
