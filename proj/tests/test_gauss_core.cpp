#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaussiso/errors.hpp"
#include "gaussiso/gauss_core.hpp"
#include "gaussiso/shapes.hpp"

using namespace gaussiso;

namespace {

constexpr double kSqrtHalfPi = 1.2533141373155002512;

// independent oracle: composite Simpson on the weighted arclength of [p,q]
double segment_oracle(Point p, Point q) {
  const int n = 20000;  // even
  const double dx = (q.x - p.x) / n;
  const double dy = (q.y - p.y) / n;
  const double len = std::hypot(q.x - p.x, q.y - p.y);
  auto w = [&](int i) {
    const double x = p.x + i * dx;
    const double y = p.y + i * dy;
    return std::exp(-0.5 * (x * x + y * y));
  };
  double s = w(0) + w(n);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * w(i);
  return s * len / (3.0 * n);
}

ConvexPolygon tilted_square(double half, double angle) {
  std::vector<Point> v;
  for (int k = 0; k < 4; ++k) {
    const double t = angle + k * std::numbers::pi / 2.0;
    v.push_back({half * std::sqrt(2.0) * std::cos(t + std::numbers::pi / 4.0),
                 half * std::sqrt(2.0) * std::sin(t + std::numbers::pi / 4.0)});
  }
  return ConvexPolygon(v);
}

}  // namespace

TEST_CASE("gauss_integral basics") {
  CHECK(gauss_integral(0.0, 40.0) == doctest::Approx(kSqrtHalfPi).epsilon(1e-15));
  CHECK(gauss_integral(-40.0, 40.0) ==
        doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(gauss_integral(1.0, 1.0) == 0.0);

  // antisymmetry is exact
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const double a = U(rng), b = U(rng);
    CHECK(gauss_integral(a, b) == -gauss_integral(b, a));
  }
}

TEST_CASE("gauss_integral agrees with std::erf") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-8.0, 8.0);
  for (int i = 0; i < 500; ++i) {
    double a = U(rng), b = U(rng);
    const double ours = gauss_integral(a, b);
    const double ref = kSqrtHalfPi * (std::erf(b / std::numbers::sqrt2) -
                                      std::erf(a / std::numbers::sqrt2));
    CHECK(ours == doctest::Approx(ref).epsilon(1e-13));
  }
  // deep same-sign tails, where naive erf differencing cancels
  const double tail = gauss_integral(5.0, 6.0);
  const double ref = kSqrtHalfPi * (std::erfc(5.0 / std::numbers::sqrt2) -
                                    std::erfc(6.0 / std::numbers::sqrt2));
  CHECK(tail == doctest::Approx(ref).epsilon(1e-13));
  CHECK(tail > 0.0);
}

TEST_CASE("segment closed form vs quadrature oracle") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    Point p{U(rng), U(rng)}, q{U(rng), U(rng)};
    if (std::hypot(q.x - p.x, q.y - p.y) < 1e-6) continue;
    CHECK(segment_gaussian_length(p, q) ==
          doctest::Approx(segment_oracle(p, q)).epsilon(1e-10));
  }
}

TEST_CASE("segment symmetries") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    Point p{U(rng), U(rng)}, q{U(rng), U(rng)};
    const double base = segment_gaussian_length(p, q);
    // endpoint swap is exact
    CHECK(base == segment_gaussian_length(q, p));
    // rotation about the origin
    const double th = U(rng);
    const double c = std::cos(th), s = std::sin(th);
    Point pr{c * p.x - s * p.y, s * p.x + c * p.y};
    Point qr{c * q.x - s * q.y, s * q.x + c * q.y};
    CHECK(segment_gaussian_length(pr, qr) == doctest::Approx(base).epsilon(1e-12));
    // additivity at an interior split point
    const double t = 0.25 + 0.5 * (U(rng) + 4.0) / 8.0;
    Point m{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    CHECK(segment_gaussian_length(p, m) + segment_gaussian_length(m, q) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("graph length reductions") {
  auto zero = [](double) { return 0.0; };
  CHECK(graph_gaussian_length(zero, zero, 0.0, 2.0) ==
        doctest::Approx(gauss_integral(0.0, 2.0)).epsilon(1e-12));

  // linear graph from (0,a) to (L,0) equals the segment closed form
  const double a = 1.3, L = 0.8;
  auto lin = [&](double x) { return a - (a / L) * x; };
  auto dlin = [&](double) { return -a / L; };
  CHECK(graph_gaussian_length(lin, dlin, 0.0, L) ==
        doctest::Approx(segment_gaussian_length({0.0, a}, {L, 0.0}))
            .epsilon(1e-10));

  // a = L = 1: exp(-alpha*beta/2) * integral over [-alpha, beta], alpha=beta=1/sqrt(2)
  auto lin1 = [](double x) { return 1.0 - x; };
  auto dlin1 = [](double) { return -1.0; };
  const double ab = 1.0 / std::numbers::sqrt2;
  CHECK(graph_gaussian_length(lin1, dlin1, 0.0, 1.0) ==
        doctest::Approx(std::exp(-0.5 * ab * ab) * gauss_integral(-ab, ab))
            .epsilon(1e-10));
}

TEST_CASE("polygon perimeter equals summed graph lengths") {
  const ConvexPolygon poly = regular_ngon(6, 1.2);
  double total = 0.0;
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point p = v[i], q = v[(i + 1) % v.size()];
    if (std::abs(q.x - p.x) < 1e-12) {
      total += segment_gaussian_length(p, q);  // vertical edge: closed form
      continue;
    }
    const double slope = (q.y - p.y) / (q.x - p.x);
    auto f = [&](double x) { return p.y + slope * (x - p.x); };
    auto fp = [&](double) { return slope; };
    total += graph_gaussian_length(f, fp, std::min(p.x, q.x), std::max(p.x, q.x));
  }
  total /= 2.0 * std::numbers::pi;
  CHECK(polygon_gaussian_perimeter(poly) == doctest::Approx(total).epsilon(1e-9));
}

TEST_CASE("measure sanity") {
  const ConvexPolygon box({{-40, -40}, {40, -40}, {40, 40}, {-40, 40}});
  CHECK(polygon_gaussian_measure(box) == doctest::Approx(1.0).epsilon(1e-10));

  const ConvexPolygon half({{-40, 0}, {40, 0}, {40, 40}, {-40, 40}});
  CHECK(polygon_gaussian_measure(half) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("measure rotation invariance and monotonicity") {
  const double m0 = polygon_gaussian_measure(tilted_square(1.5, 0.0));
  const double m1 = polygon_gaussian_measure(tilted_square(1.5, 0.7));
  CHECK(std::abs(m0 - m1) < 2e-10);

  // nested polygons
  double prev = 0.0;
  for (double h : {0.5, 1.0, 2.0, 4.0}) {
    const double m = polygon_gaussian_measure(tilted_square(h, 0.3));
    CHECK(m > prev);
    prev = m;
  }
}

TEST_CASE("perimeter rotation invariance") {
  const ConvexPolygon penta = regular_ngon(5, 1.0);
  const double p0 = polygon_gaussian_perimeter(penta);
  std::vector<Point> rot;
  for (const Point& v : penta.vertices()) {
    const double th = 1.234;
    rot.push_back({std::cos(th) * v.x - std::sin(th) * v.y,
                   std::sin(th) * v.x + std::cos(th) * v.y});
  }
  CHECK(polygon_gaussian_perimeter(ConvexPolygon(rot)) ==
        doctest::Approx(p0).epsilon(1e-12));
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), InvalidPolygon);
  // clockwise
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), InvalidPolygon);
  // collinear triple
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
                  InvalidPolygon);
  // repeated vertex
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}),
                  InvalidPolygon);
  CHECK_NOTHROW(ConvexPolygon({{0, 0}, {1, 0}, {0, 1}}));
}
