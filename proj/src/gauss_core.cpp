#include "gaussiso/gauss_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace gaussiso {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

// erf on [0, ~2.4] through the confluent series
//   erf(z) = (2/sqrt(pi)) e^{-z^2} sum_{n>=0} (2z^2)^n z / (2n+1)!!
// whose terms are all positive (no cancellation).
double erf_series(double z) {
  const double z2 = z * z;
  double term = z;
  double sum = z;
  for (int n = 1; n < 200; ++n) {
    term *= 2.0 * z2 / (2.0 * n + 1.0);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return 2.0 / kSqrtPi * std::exp(-z2) * sum;
}

// erfc for z >= ~2.4 via the Laplace continued fraction
//   erfc(z) = e^{-z^2}/sqrt(pi) / (z + (1/2)/(z + (2/2)/(z + (3/2)/(...))))
// evaluated by backward recurrence.
double erfc_cf(double z) {
  double tail = 0.0;
  for (int n = 120; n >= 1; --n) {
    tail = (0.5 * n) / (z + tail);
  }
  return std::exp(-z * z) / (kSqrtPi * (z + tail));
}

double erf_local(double z) {
  if (z < 0.0) return -erf_local(-z);
  if (z < 2.4) return erf_series(z);
  return 1.0 - erfc_cf(z);
}

double erfc_local(double z) {
  if (z < 2.4) return 1.0 - erf_local(z);
  return erfc_cf(z);
}

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)

double gauss_integral_ordered(double a, double b) {
  // a <= b. Same-sign tails go through erfc so nearby endpoints do not cancel.
  if (a >= 1.0) {
    return kSqrtHalfPi * (erfc_local(a * kInvSqrt2) - erfc_local(b * kInvSqrt2));
  }
  if (b <= -1.0) {
    return kSqrtHalfPi * (erfc_local(-b * kInvSqrt2) - erfc_local(-a * kInvSqrt2));
  }
  return kSqrtHalfPi * (erf_local(b * kInvSqrt2) - erf_local(a * kInvSqrt2));
}

double clamp_endpoint(double t, double radius) {
  if (std::isnan(t)) throw DomainError("gauss_integral: NaN endpoint");
  return std::clamp(t, -radius, radius);
}

// Degree-5, 7-point symmetric cubature rule on a triangle.
struct TriRulePoint {
  double l1, l2, l3, w;
};
constexpr std::array<TriRulePoint, 7> kTriRule = {{
    {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225},
    {0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.059715871789770, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.470142064105115, 0.059715871789770, 0.132394152788506},
    {0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.797426985353087, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.101286507323456, 0.797426985353087, 0.125939180544827},
}};

double gauss_weight(double x, double y) { return std::exp(-0.5 * (x * x + y * y)); }

double tri_area(Point a, Point b, Point c) {
  return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

double tri_rule(Point a, Point b, Point c) {
  double sum = 0.0;
  for (const auto& pt : kTriRule) {
    const double x = pt.l1 * a.x + pt.l2 * b.x + pt.l3 * c.x;
    const double y = pt.l1 * a.y + pt.l2 * b.y + pt.l3 * c.y;
    sum += pt.w * gauss_weight(x, y);
  }
  return sum * tri_area(a, b, c);
}

double integrate_triangle(Point a, Point b, Point c, double tol, int depth) {
  const double coarse = tri_rule(a, b, c);
  const Point mab{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  const Point mbc{0.5 * (b.x + c.x), 0.5 * (b.y + c.y)};
  const Point mca{0.5 * (c.x + a.x), 0.5 * (c.y + a.y)};
  const double fine = tri_rule(a, mab, mca) + tri_rule(mab, b, mbc) +
                      tri_rule(mca, mbc, c) + tri_rule(mab, mbc, mca);
  if (depth <= 0 || std::abs(fine - coarse) <= tol) return fine;
  return integrate_triangle(a, mab, mca, 0.25 * tol, depth - 1) +
         integrate_triangle(mab, b, mbc, 0.25 * tol, depth - 1) +
         integrate_triangle(mca, mbc, c, 0.25 * tol, depth - 1) +
         integrate_triangle(mab, mbc, mca, 0.25 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw InvalidPolygon("fewer than 3 vertices");
  for (const Point& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw InvalidPolygon("non-finite vertex");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      diameter_ = std::max(diameter_, std::hypot(vertices_[i].x - vertices_[j].x,
                                                 vertices_[i].y - vertices_[j].y));
    }
  }
  const double eps = 1e-12 * diameter_ * diameter_;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const Point& c = vertices_[(i + 2) % n];
    const double cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (cross <= eps) {
      throw InvalidPolygon("vertices not in strictly convex CCW position");
    }
    if (std::hypot(b.x - a.x, b.y - a.y) <= 1e-12 * diameter_) {
      throw InvalidPolygon("repeated vertex");
    }
  }
}

double gauss_integral(double a, double b) {
  constexpr double kRadius = 40.0;
  a = clamp_endpoint(a, kRadius);
  b = clamp_endpoint(b, kRadius);
  if (a == b) return 0.0;
  if (a > b) return -gauss_integral_ordered(b, a);
  return gauss_integral_ordered(a, b);
}

double segment_gaussian_length(Point p, Point q) {
  // Canonical endpoint order makes the swap symmetry exact.
  if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return 0.0;
  const double ux = dx / len;
  const double uy = dy / len;
  // Complete the square: |p + s u|^2 = (s + c)^2 + d^2 with c the projection
  // of p on u and d the line-to-origin distance (cross form, no cancellation).
  const double c = p.x * ux + p.y * uy;
  const double d = p.x * uy - p.y * ux;
  return std::exp(-0.5 * d * d) * gauss_integral(c, c + len);
}

double polygon_gaussian_perimeter(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += segment_gaussian_length(v[i], v[(i + 1) % v.size()]);
  }
  return sum / (2.0 * kPi);
}

double polygon_gaussian_measure(const ConvexPolygon& poly,
                                const QuadratureConfig& cfg) {
  const auto& v = poly.vertices();
  Point centroid{0.0, 0.0};
  for (const Point& p : v) {
    centroid.x += p.x;
    centroid.y += p.y;
  }
  centroid.x /= static_cast<double>(v.size());
  centroid.y /= static_cast<double>(v.size());

  const double tol_unnorm = cfg.abs_tol * 2.0 * kPi / static_cast<double>(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += integrate_triangle(centroid, v[i], v[(i + 1) % v.size()],
                              0.5 * tol_unnorm, cfg.max_depth);
  }
  return sum / (2.0 * kPi);
}

double graph_gaussian_length(const std::function<double(double)>& f,
                             const std::function<double(double)>& fprime,
                             double a, double b, const QuadratureConfig& cfg) {
  if (!(a < b)) throw DomainError("graph_gaussian_length: requires a < b");
  auto integrand = [&](double x) {
    const double fx = f(x);
    const double fpx = fprime(x);
    const double val =
        std::exp(-0.5 * (x * x + fx * fx)) * std::sqrt(1.0 + fpx * fpx);
    if (!std::isfinite(val)) throw NonFinite("graph_gaussian_length integrand");
    return val;
  };
  const double fa = integrand(a);
  const double m = 0.5 * (a + b);
  const double fm = integrand(m);
  const double fb = integrand(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double tol = std::max(cfg.rel_tol * std::abs(whole), 1e-300);
  return adaptive_simpson(integrand, a, b, fa, fm, fb, whole, tol, cfg.max_depth);
}

}  // namespace gaussiso
