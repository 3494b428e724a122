#pragma once

#include <functional>
#include <utility>

#include "gaussiso/errors.hpp"

namespace gaussiso {

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Side of a quadrilateral in the first quadrant: y-intercept a, x-intercept L.
struct SideParams {
  double a = 1.0;
  double L = 1.0;
};

/// I(alpha,beta) = exp(-alpha*beta/2) * \int_{-alpha}^{beta} exp(-s^2/2) ds.
double I_func(const AlphaBeta& p);

/// The unique y >= 1 with y*exp(-y^2/2) = x*exp(-x^2/2), for x in (0,1].
double f_implicit(double x);

/// Closed-form derivative of f_implicit on (0,1); negative throughout.
double f_prime(double x);

/// u(x) = (2/f(x)) * exp(-(x f(x) + x^2)/2) on (0,1].
double u_func(double x);

/// Same value through the symmetric form 2/sqrt(x f(x)) * exp(-(x+f(x))^2/4).
double u_func_symmetric(double x);

/// v(t) = 2 e^{-t} sqrt(2t-1), t >= 1.
double v_func(double t);

/// g(r) = sqrt(3) exp(-3r^2/8) - (r/2) \int_0^{sqrt(3)r/2} exp(-s^2/2) ds.
/// Sign of the radial derivative of the triangle perimeter.
double g_triangle(double r);

/// Gaussian perimeter of the regular n-gon with circumradius r, closed form.
double ngon_perimeter_closed(int n, double r);

/// Phi(alpha,beta) = (sqrt(alpha)+sqrt(beta))/sqrt(alpha+beta) * I(alpha,beta).
double Phi_func(const AlphaBeta& p);

/// Residuals of the two first-order conditions for grad I = 0:
///   integral - (2/alpha) e^{-beta^2/2}  and  integral - (2/beta) e^{-alpha^2/2}.
std::pair<double, double> critical_residual(const AlphaBeta& p);

/// (-f + x f')(1 + f'^2) - f'' evaluated at x.
double euler_lagrange_residual(const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime,
                               const std::function<double(double)>& fsecond,
                               double x);

/// Sign-carrying factor -1 - 2 y0 / f'' of the cut-perturbation limit;
/// non-positive iff f''(x0) <= -2 y0.
double cut_indicator(double y0, double fpp);

/// (alpha, beta) = (a^2, L^2) / sqrt(L^2 + a^2).
AlphaBeta side_to_alphabeta(const SideParams& s);

}  // namespace gaussiso
