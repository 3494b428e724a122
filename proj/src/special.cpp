#include "gaussiso/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gaussiso/gauss_core.hpp"

namespace gaussiso {

namespace {

double halfgauss(double t) { return t * std::exp(-0.5 * t * t); }

}  // namespace

double I_func(const AlphaBeta& p) {
  if (!(p.alpha >= 0.0) || !(p.beta >= 0.0) || !std::isfinite(p.alpha) ||
      !std::isfinite(p.beta)) {
    throw DomainError("I_func: alpha, beta must be finite and non-negative");
  }
  return std::exp(-0.5 * p.alpha * p.beta) * gauss_integral(-p.alpha, p.beta);
}

double f_implicit(double x) {
  if (!(x > 0.0) || !(x <= 1.0)) throw DomainError("f_implicit: x not in (0,1]");
  if (x == 1.0) return 1.0;
  if (x > 1.0 - 1e-6) {
    // Double root at y=1; expansion y = 1 + (1-x) + (1-x)^2/3 + ...
    const double e = 1.0 - x;
    return 1.0 + e + e * e / 3.0;
  }
  const double w = halfgauss(x);
  // Asymptotic seed y^2 = -2 ln w - 2 ln y, iterated twice.
  double y = std::sqrt(std::max(1.0, -2.0 * std::log(w)));
  y = std::sqrt(std::max(1.0, -2.0 * std::log(w) - 2.0 * std::log(y)));
  y = std::sqrt(std::max(1.0, -2.0 * std::log(w) - 2.0 * std::log(y)));

  // Safeguarded Newton on y e^{-y^2/2} - w, bracketed in [1, 40] where the
  // map is strictly decreasing.
  double lo = 1.0, hi = 40.0;
  y = std::clamp(y, lo, hi);
  for (int iter = 0; iter < 200; ++iter) {
    const double g = halfgauss(y) - w;
    if (g > 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    const double gp = (1.0 - y * y) * std::exp(-0.5 * y * y);
    double ynext = (gp != 0.0) ? y - g / gp : 0.5 * (lo + hi);
    if (!(ynext > lo) || !(ynext < hi)) ynext = 0.5 * (lo + hi);
    if (std::abs(ynext - y) <= 1e-16 * y) {
      y = ynext;
      break;
    }
    y = ynext;
  }
  return y;
}

double f_prime(double x) {
  if (!(x > 0.0) || !(x < 1.0)) throw DomainError("f_prime: x not in (0,1)");
  const double fx = f_implicit(x);
  return (1.0 - x * x) * fx / ((1.0 - fx * fx) * x);
}

double u_func(double x) {
  if (!(x > 0.0) || !(x <= 1.0)) throw DomainError("u_func: x not in (0,1]");
  const double fx = f_implicit(x);
  return 2.0 / fx * std::exp(-0.5 * (x * fx + x * x));
}

double u_func_symmetric(double x) {
  if (!(x > 0.0) || !(x <= 1.0)) throw DomainError("u_func: x not in (0,1]");
  const double fx = f_implicit(x);
  const double s = x + fx;
  return 2.0 / std::sqrt(x * fx) * std::exp(-0.25 * s * s);
}

double v_func(double t) {
  if (!(t >= 1.0)) throw DomainError("v_func: t < 1");
  return 2.0 * std::exp(-t) * std::sqrt(2.0 * t - 1.0);
}

double g_triangle(double r) {
  if (!(r >= 0.0)) throw DomainError("g_triangle: r < 0");
  const double sqrt3 = std::numbers::sqrt3;
  return sqrt3 * std::exp(-3.0 * r * r / 8.0) -
         0.5 * r * gauss_integral(0.0, 0.5 * sqrt3 * r);
}

double ngon_perimeter_closed(int n, double r) {
  if (n < 3 || !(r > 0.0)) throw DomainError("ngon_perimeter_closed: n>=3, r>0");
  const double half_angle = std::numbers::pi / n;
  const double apothem = r * std::cos(half_angle);
  return n / std::numbers::pi * std::exp(-0.5 * apothem * apothem) *
         gauss_integral(0.0, r * std::sin(half_angle));
}

double Phi_func(const AlphaBeta& p) {
  if (p.alpha == 0.0 && p.beta == 0.0) {
    throw DomainError("Phi_func: undefined at the origin");
  }
  const double prefactor =
      (std::sqrt(p.alpha) + std::sqrt(p.beta)) / std::sqrt(p.alpha + p.beta);
  return prefactor * I_func(p);
}

std::pair<double, double> critical_residual(const AlphaBeta& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
    throw DomainError("critical_residual: requires alpha, beta > 0");
  }
  const double integral = gauss_integral(-p.alpha, p.beta);
  const double r1 = integral - 2.0 / p.alpha * std::exp(-0.5 * p.beta * p.beta);
  const double r2 = integral - 2.0 / p.beta * std::exp(-0.5 * p.alpha * p.alpha);
  return {r1, r2};
}

double euler_lagrange_residual(const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime,
                               const std::function<double(double)>& fsecond,
                               double x) {
  const double fx = f(x);
  const double fp = fprime(x);
  const double fpp = fsecond(x);
  const double res = (-fx + x * fp) * (1.0 + fp * fp) - fpp;
  if (!std::isfinite(res)) throw NonFinite("euler_lagrange_residual");
  return res;
}

double cut_indicator(double y0, double fpp) {
  if (!(y0 > 0.0)) throw DomainError("cut_indicator: y0 must be positive");
  if (!(fpp < 0.0)) throw DomainError("cut_indicator: f'' must be negative");
  return -1.0 - 2.0 * y0 / fpp;
}

AlphaBeta side_to_alphabeta(const SideParams& s) {
  if (!(s.a > 0.0) || !(s.L > 0.0)) {
    throw DomainError("side_to_alphabeta: a, L must be positive");
  }
  const double h = std::hypot(s.a, s.L);
  return {s.a * s.a / h, s.L * s.L / h};
}

}  // namespace gaussiso
