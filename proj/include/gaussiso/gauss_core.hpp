#pragma once

#include <functional>
#include <vector>

#include "gaussiso/errors.hpp"

namespace gaussiso {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Ordered, strictly convex, counterclockwise vertex cycle.
/// Construction validates the invariants and throws InvalidPolygon on failure.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  double diameter() const { return diameter_; }

 private:
  std::vector<Point> vertices_;
  double diameter_ = 0.0;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_depth = 48;
  double truncation_radius = 40.0;
};

/// \int_a^b exp(-t^2/2) dt. Infinite endpoints are clamped to the
/// truncation radius (tail mass below double underflow). Antisymmetric
/// under endpoint swap by construction.
double gauss_integral(double a, double b);

/// \int_{[p,q]} exp(-(x^2+y^2)/2) dH^1 in closed form (no 1/2pi factor).
double segment_gaussian_length(Point p, Point q);

/// (1/2pi) sum of segment Gaussian lengths over the edges.
double polygon_gaussian_perimeter(const ConvexPolygon& poly);

/// gamma_2(P): centroid triangle fan + adaptive degree-5 cubature.
double polygon_gaussian_measure(const ConvexPolygon& poly,
                                const QuadratureConfig& cfg = {});

/// Weighted arclength of the graph of f over [a,b] by adaptive quadrature
/// (no 1/2pi factor). Throws NonFinite if the integrand misbehaves.
double graph_gaussian_length(const std::function<double(double)>& f,
                             const std::function<double(double)>& fprime,
                             double a, double b,
                             const QuadratureConfig& cfg = {});

}  // namespace gaussiso
