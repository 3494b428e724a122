#pragma once

#include <string>
#include <vector>

#include "gaussiso/gauss_core.hpp"

namespace gaussiso {

/// Convex quadrilateral with one vertex on each coordinate semiaxis:
/// (p,0), (0,q), (-r,0), (0,-s), all parameters strictly positive.
struct QuadT {
  double p, q, r, s;

  QuadT(double p_, double q_, double r_, double s_);
  ConvexPolygon polygon() const;
};

/// Convex set bounded between two concave piecewise-linear caps over [a,b],
/// both vanishing at the endpoints and peaking at x=0. The set is
/// { (x,y) : -lower(x) <= y <= upper(x) }; both knot lists store the
/// nonnegative cap heights.
struct CClassSet {
  double a = -1.0;
  double b = 1.0;
  std::vector<Point> upper;  // knots (x, height), x increasing, a..b
  std::vector<Point> lower;
};

struct CClassValidation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

ConvexPolygon regular_ngon(int n, double r);

/// Rhombus with vertices (n,0), (0,1/n), (-n,0), (0,-1/n).
QuadT rhombus_Tn(int n);

double quad_perimeter(const QuadT& t);

CClassValidation cclass_validate(const CClassSet& c);

double cclass_perimeter(const CClassSet& c);

/// Unnormalized Gaussian length of the upper cap restricted to x >= 0
/// (the first-quadrant arc J of the quadrant bound).
double cclass_first_quadrant_length(const CClassSet& c);

CClassSet embed_quad(const QuadT& t);

std::vector<QuadT> sample_quadT(unsigned long long seed, int count);

std::vector<CClassSet> sample_cclass(unsigned long long seed, int count,
                                     int knots);

}  // namespace gaussiso
