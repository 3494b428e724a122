#include "gaussiso/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gaussiso {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cap_height_at(const std::vector<Point>& knots, double x) {
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (x >= knots[i].x && x <= knots[i + 1].x) {
      const double t = (x - knots[i].x) / (knots[i + 1].x - knots[i].x);
      return knots[i].y + t * (knots[i + 1].y - knots[i].y);
    }
  }
  return 0.0;
}

CClassValidation check_cap(const std::vector<Point>& knots, double a, double b,
                           const char* name) {
  if (knots.size() < 2) return {false, std::string(name) + ": fewer than 2 knots"};
  if (std::abs(knots.front().x - a) > 1e-12 || std::abs(knots.back().x - b) > 1e-12) {
    return {false, std::string(name) + ": knots do not span [a,b]"};
  }
  if (std::abs(knots.front().y) > 1e-12 || std::abs(knots.back().y) > 1e-12) {
    return {false, std::string(name) + ": cap does not vanish at the endpoints"};
  }
  double peak = 0.0;
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].y < -1e-12) return {false, std::string(name) + ": negative height"};
    peak = std::max(peak, knots[i].y);
    if (i + 1 < knots.size() && !(knots[i + 1].x > knots[i].x)) {
      return {false, std::string(name) + ": knot abscissae not increasing"};
    }
  }
  const double scale = std::max({1.0, peak, b - a});
  for (std::size_t i = 0; i + 2 < knots.size(); ++i) {
    const double s1 = (knots[i + 1].y - knots[i].y) / (knots[i + 1].x - knots[i].x);
    const double s2 = (knots[i + 2].y - knots[i + 1].y) / (knots[i + 2].x - knots[i + 1].x);
    if (s2 > s1 + 1e-9 * scale) {
      return {false, std::string(name) + ": not concave"};
    }
  }
  if (cap_height_at(knots, 0.0) < peak - 1e-12 * scale) {
    return {false, std::string(name) + ": peak not attained at x=0"};
  }
  return {};
}

double cap_gaussian_length(const std::vector<Point>& knots, double sign) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    sum += segment_gaussian_length({knots[i].x, sign * knots[i].y},
                                   {knots[i + 1].x, sign * knots[i + 1].y});
  }
  return sum;
}

// Concave chain on [0, width] with slopes of decreasing magnitude order,
// returned as knots from x=0 (height h) down to x=width (height 0).
std::vector<Point> random_half_cap(std::mt19937_64& rng, int pieces,
                                   double width, double height) {
  std::uniform_real_distribution<double> wdist(0.2, 1.0);
  std::uniform_real_distribution<double> mdist(0.1, 2.0);
  std::vector<double> widths(pieces), mags(pieces);
  double wsum = 0.0;
  for (double& w : widths) wsum += (w = wdist(rng));
  for (double& w : widths) w *= width / wsum;
  for (double& m : mags) m = mdist(rng);
  // Increasing magnitudes give decreasing (negative) slopes, hence concavity.
  std::sort(mags.begin(), mags.end());
  double drop = 0.0;
  for (int i = 0; i < pieces; ++i) drop += mags[i] * widths[i];
  const double scale = height / drop;
  std::vector<Point> knots;
  knots.reserve(pieces + 1);
  double x = 0.0, y = height;
  knots.push_back({0.0, y});
  for (int i = 0; i < pieces; ++i) {
    x += widths[i];
    y -= scale * mags[i] * widths[i];
    knots.push_back({x, y});
  }
  knots.back() = {width, 0.0};
  return knots;
}

std::vector<Point> random_cap(std::mt19937_64& rng, int knots, double a,
                              double b, double height) {
  const int right_pieces = std::max(1, knots / 2);
  const int left_pieces = std::max(1, knots - right_pieces);
  const auto right = random_half_cap(rng, right_pieces, b, height);
  const auto left_m = random_half_cap(rng, left_pieces, -a, height);
  std::vector<Point> cap;
  cap.reserve(left_m.size() + right.size() - 1);
  // Mirror the left half onto [a, 0].
  for (auto it = left_m.rbegin(); it != left_m.rend(); ++it) {
    cap.push_back({-it->x, it->y});
  }
  cap.insert(cap.end(), right.begin() + 1, right.end());
  return cap;
}

}  // namespace

QuadT::QuadT(double p_, double q_, double r_, double s_)
    : p(p_), q(q_), r(r_), s(s_) {
  if (!(p > 0.0) || !(q > 0.0) || !(r > 0.0) || !(s > 0.0)) {
    throw DomainError("QuadT: all four parameters must be positive");
  }
  (void)polygon();  // convexity is automatic, asserted defensively
}

ConvexPolygon QuadT::polygon() const {
  return ConvexPolygon({{p, 0.0}, {0.0, q}, {-r, 0.0}, {0.0, -s}});
}

ConvexPolygon regular_ngon(int n, double r) {
  if (n < 3 || !(r > 0.0)) throw DomainError("regular_ngon: n>=3, r>0");
  std::vector<Point> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double phi = kTwoPi * k / n;
    v.push_back({r * std::cos(phi), r * std::sin(phi)});
  }
  return ConvexPolygon(std::move(v));
}

QuadT rhombus_Tn(int n) {
  if (n < 1) throw DomainError("rhombus_Tn: n >= 1");
  const double inv = 1.0 / n;
  return QuadT(n, inv, n, inv);
}

double quad_perimeter(const QuadT& t) {
  const double sum = segment_gaussian_length({t.p, 0.0}, {0.0, t.q}) +
                     segment_gaussian_length({0.0, t.q}, {-t.r, 0.0}) +
                     segment_gaussian_length({-t.r, 0.0}, {0.0, -t.s}) +
                     segment_gaussian_length({0.0, -t.s}, {t.p, 0.0});
  return sum / kTwoPi;
}

CClassValidation cclass_validate(const CClassSet& c) {
  if (!(c.a < 0.0) || !(c.b > 0.0)) {
    return {false, "interval must satisfy a < 0 < b"};
  }
  if (auto res = check_cap(c.upper, c.a, c.b, "upper"); !res) return res;
  if (auto res = check_cap(c.lower, c.a, c.b, "lower"); !res) return res;
  return {};
}

double cclass_perimeter(const CClassSet& c) {
  if (auto res = cclass_validate(c); !res) throw InvalidCClass(res.reason);
  return (cap_gaussian_length(c.upper, 1.0) + cap_gaussian_length(c.lower, -1.0)) /
         kTwoPi;
}

double cclass_first_quadrant_length(const CClassSet& c) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < c.upper.size(); ++i) {
    Point p0 = c.upper[i];
    Point p1 = c.upper[i + 1];
    if (p1.x <= 0.0) continue;
    if (p0.x < 0.0) {
      const double t = (0.0 - p0.x) / (p1.x - p0.x);
      p0 = {0.0, p0.y + t * (p1.y - p0.y)};
    }
    sum += segment_gaussian_length(p0, p1);
  }
  return sum;
}

CClassSet embed_quad(const QuadT& t) {
  CClassSet c;
  c.a = -t.r;
  c.b = t.p;
  c.upper = {{-t.r, 0.0}, {0.0, t.q}, {t.p, 0.0}};
  c.lower = {{-t.r, 0.0}, {0.0, t.s}, {t.p, 0.0}};
  return c;
}

std::vector<QuadT> sample_quadT(unsigned long long seed, int count) {
  if (count < 1) throw DomainError("sample_quadT: count >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(1e-3), std::log(1e3));
  std::vector<QuadT> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double p = std::exp(logu(rng));
    const double q = std::exp(logu(rng));
    const double r = std::exp(logu(rng));
    const double s = std::exp(logu(rng));
    out.emplace_back(p, q, r, s);
  }
  return out;
}

std::vector<CClassSet> sample_cclass(unsigned long long seed, int count,
                                     int knots) {
  if (count < 1 || knots < 2) throw DomainError("sample_cclass: count>=1, knots>=2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(1e-3), std::log(1e3));
  std::vector<CClassSet> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    CClassSet c;
    c.b = std::exp(logu(rng));
    c.a = -std::exp(logu(rng));
    const double h_upper = std::exp(logu(rng));
    const double h_lower = std::exp(logu(rng));
    c.upper = random_cap(rng, knots, c.a, c.b, h_upper);
    c.lower = random_cap(rng, knots, c.a, c.b, h_lower);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gaussiso
