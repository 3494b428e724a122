#pragma once

#include <utility>
#include <vector>

#include "gaussiso/gauss_core.hpp"
#include "gaussiso/special.hpp"

namespace gaussiso {

struct Bracket {
  double lo;
  double hi;
  double tol = 1e-10;
};

struct AscentConfig {
  double step0 = 0.05;
  double shrink = 0.5;
  int max_iters = 10000;
  double convexity_penalty = 0.0;  // minimum cross-product margin for a move
  unsigned long long seed = 0;
};

struct AscentTrace {
  std::vector<std::pair<ConvexPolygon, double>> iterates;
  std::vector<double> flatness;  // exterior turning angles of final iterate
  double aspect = 1.0;           // width/height of final iterate
  bool stalled = false;          // no improving move at minimum step
};

/// Golden-section maximum of the closed-form n-gon perimeter over the
/// bracket. Unimodality is checked by a pre-scan; BracketError if the
/// maximum sits on the bracket boundary.
std::pair<double, double> maximize_ngon_radius(int n, const Bracket& b);

/// Coarse grid scan of Phi over [0,8]^2 followed by Nelder-Mead refinement.
/// The result is canonicalized to alpha <= beta.
std::pair<AlphaBeta, double> maximize_phi(int grid, double refine_tol);

/// Maximum of I over the [0,G]^2 grid, axes included.
std::pair<double, AlphaBeta> scan_I_sup(double G, int grid);

/// Per-vertex axis-aligned hill climbing on the Gaussian perimeter with
/// convexity enforced by rejection.
AscentTrace ascend_polygon(const ConvexPolygon& start, const AscentConfig& cfg);

/// Exterior turning angle at each vertex; the angles sum to 2*pi.
std::vector<double> flatness_report(const ConvexPolygon& P);

/// Writes an AscentTrace as CSV rows (iteration, perimeter, aspect).
void export_trace_csv(const AscentTrace& trace, const std::string& path);

}  // namespace gaussiso
