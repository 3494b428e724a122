#include "gaussiso/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "gaussiso/errors.hpp"

namespace gaussiso {

namespace {

constexpr double kGolden = 0.61803398874989484820;  // 1/phi

double polygon_aspect(const ConvexPolygon& poly) {
  double xmin = poly.vertices()[0].x, xmax = xmin;
  double ymin = poly.vertices()[0].y, ymax = ymin;
  for (const Point& v : poly.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return (xmax - xmin) / (ymax - ymin);
}

bool is_strictly_convex(const std::vector<Point>& v, double margin) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % n];
    const Point& c = v[(i + 2) % n];
    const double cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    if (cross <= margin) return false;
  }
  return true;
}

double perimeter_of(const std::vector<Point>& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += segment_gaussian_length(v[i], v[(i + 1) % v.size()]);
  }
  return sum / (2.0 * std::numbers::pi);
}

// Nelder-Mead maximization of a 2-D function; terminates on simplex diameter.
std::pair<AlphaBeta, double> nelder_mead_max(
    const std::function<double(const AlphaBeta&)>& f,
    std::array<AlphaBeta, 3> simplex, double tol, int max_iters) {
  std::array<double, 3> vals;
  for (int i = 0; i < 3; ++i) vals[i] = f(simplex[i]);
  for (int iter = 0; iter < max_iters; ++iter) {
    // Order worst -> best.
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    const int lo = idx[0], mid = idx[1], hi = idx[2];

    double diam = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        diam = std::max(diam, std::hypot(simplex[i].alpha - simplex[j].alpha,
                                         simplex[i].beta - simplex[j].beta));
      }
    }
    if (diam < tol) break;

    const AlphaBeta centroid{0.5 * (simplex[mid].alpha + simplex[hi].alpha),
                             0.5 * (simplex[mid].beta + simplex[hi].beta)};
    auto affine = [&](double t) {
      return AlphaBeta{std::max(0.0, centroid.alpha + t * (centroid.alpha - simplex[lo].alpha)),
                       std::max(0.0, centroid.beta + t * (centroid.beta - simplex[lo].beta))};
    };
    const AlphaBeta refl = affine(1.0);
    const double frefl = f(refl);
    if (frefl > vals[hi]) {
      const AlphaBeta exp_pt = affine(2.0);
      const double fexp = f(exp_pt);
      if (fexp > frefl) {
        simplex[lo] = exp_pt;
        vals[lo] = fexp;
      } else {
        simplex[lo] = refl;
        vals[lo] = frefl;
      }
    } else if (frefl > vals[mid]) {
      simplex[lo] = refl;
      vals[lo] = frefl;
    } else {
      const AlphaBeta contr = affine(-0.5);
      const double fcontr = f(contr);
      if (fcontr > vals[lo]) {
        simplex[lo] = contr;
        vals[lo] = fcontr;
      } else {
        // Shrink toward the best vertex.
        for (int i : {lo, mid}) {
          simplex[i].alpha = 0.5 * (simplex[i].alpha + simplex[hi].alpha);
          simplex[i].beta = 0.5 * (simplex[i].beta + simplex[hi].beta);
          vals[i] = f(simplex[i]);
        }
      }
    }
  }
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (vals[i] > vals[best]) best = i;
  }
  return {simplex[best], vals[best]};
}

}  // namespace

std::pair<double, double> maximize_ngon_radius(int n, const Bracket& b) {
  if (!(b.lo < b.hi) || !(b.tol > 0.0)) throw BracketError("invalid bracket");
  auto value = [n](double r) { return ngon_perimeter_closed(n, r); };

  // Unimodality pre-scan; the interior argmax also tightens the bracket.
  constexpr int kScan = 1000;
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= kScan; ++i) {
    const double r = b.lo + (b.hi - b.lo) * i / kScan;
    const double v = (r > 0.0) ? value(r) : 0.0;
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  if (best == 0 || best == kScan) {
    throw BracketError("no interior maximum in bracket");
  }
  double lo = b.lo + (b.hi - b.lo) * (best - 1) / kScan;
  double hi = b.lo + (b.hi - b.lo) * (best + 1) / kScan;

  double c = hi - kGolden * (hi - lo);
  double d = lo + kGolden * (hi - lo);
  double fc = value(c), fd = value(d);
  while (hi - lo > b.tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kGolden * (hi - lo);
      fc = value(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kGolden * (hi - lo);
      fd = value(d);
    }
  }
  const double r_hat = 0.5 * (lo + hi);
  return {r_hat, value(r_hat)};
}

std::pair<AlphaBeta, double> maximize_phi(int grid, double refine_tol) {
  grid = std::max(grid, 32);
  constexpr double kRange = 8.0;
  AlphaBeta best{1.0, 1.0};
  double best_val = -1.0;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      if (i == 0 && j == 0) continue;
      const AlphaBeta p{kRange * i / grid, kRange * j / grid};
      const double v = Phi_func(p);
      if (v > best_val) {
        best_val = v;
        best = p;
      }
    }
  }
  const double h = kRange / grid;
  std::array<AlphaBeta, 3> simplex = {
      AlphaBeta{best.alpha, best.beta},
      AlphaBeta{best.alpha + h, best.beta},
      AlphaBeta{best.alpha, best.beta + h}};
  auto [point, value] = nelder_mead_max(
      [](const AlphaBeta& p) {
        return (p.alpha == 0.0 && p.beta == 0.0) ? 0.0 : Phi_func(p);
      },
      simplex, refine_tol, 10000);
  if (point.alpha > point.beta) std::swap(point.alpha, point.beta);
  return {point, value};
}

std::pair<double, AlphaBeta> scan_I_sup(double G, int grid) {
  if (!(G >= 10.0) || grid < 2) throw DomainError("scan_I_sup: G>=10, grid>=2");
  double sup = -1.0;
  AlphaBeta argmax{0.0, 0.0};
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      const AlphaBeta p{G * i / grid, G * j / grid};
      const double v = I_func(p);
      if (v > sup) {
        sup = v;
        argmax = p;
      }
    }
  }
  return {sup, argmax};
}

AscentTrace ascend_polygon(const ConvexPolygon& start, const AscentConfig& cfg) {
  if (!(cfg.step0 > 0.0) || cfg.max_iters < 1 || !(cfg.shrink > 0.0) ||
      !(cfg.shrink < 1.0)) {
    throw DomainError("ascend_polygon: invalid config");
  }
  std::vector<Point> verts = start.vertices();
  double per = perimeter_of(verts);
  double step = cfg.step0;
  const double min_step = cfg.step0 * 1e-8;
  std::mt19937_64 rng(cfg.seed);

  AscentTrace trace;
  trace.iterates.emplace_back(ConvexPolygon(verts), per);

  const std::array<Point, 4> dirs = {
      Point{1.0, 0.0}, Point{-1.0, 0.0}, Point{0.0, 1.0}, Point{0.0, -1.0}};
  std::vector<std::size_t> order(verts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  auto try_accept = [&](std::vector<Point> trial) {
    double d2 = 0.0;
    for (std::size_t i = 0; i < trial.size(); ++i) {
      for (std::size_t j = i + 1; j < trial.size(); ++j) {
        const double dx = trial[i].x - trial[j].x;
        const double dy = trial[i].y - trial[j].y;
        d2 = std::max(d2, dx * dx + dy * dy);
      }
    }
    // keep a safety factor above the ConvexPolygon validity threshold so
    // accepted iterates always construct
    const double margin = std::max(cfg.convexity_penalty, 4e-12 * d2);
    if (!is_strictly_convex(trial, margin)) return false;
    const double trial_per = perimeter_of(trial);
    if (trial_per <= per) return false;
    verts = std::move(trial);
    per = trial_per;
    return true;
  };

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    bool improved = false;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t vi : order) {
      for (const Point& d : dirs) {
        std::vector<Point> trial = verts;
        trial[vi].x += step * d.x;
        trial[vi].y += step * d.y;
        improved |= try_accept(std::move(trial));
      }
    }
    // Area-preserving anisotropic rescale. Coordinate moves alone freeze as
    // soon as a vertex lands on the chord of its neighbors (any further
    // single-vertex move is rejected as non-convex); the rescale keeps
    // collinear triples collinear, so it can still elongate such shapes,
    // mirroring the degenerating rhombus family.
    for (const double c : {1.0 + step, 1.0 / (1.0 + step)}) {
      std::vector<Point> trial = verts;
      for (Point& v : trial) {
        v.x *= c;
        v.y /= c;
      }
      improved |= try_accept(std::move(trial));
    }
    trace.iterates.emplace_back(ConvexPolygon(verts), per);
    if (improved) {
      step = std::min(step / cfg.shrink, cfg.step0);
    } else {
      step *= cfg.shrink;
      if (step < min_step) {
        trace.stalled = true;
        break;
      }
    }
  }
  const ConvexPolygon& final_poly = trace.iterates.back().first;
  trace.flatness = flatness_report(final_poly);
  trace.aspect = polygon_aspect(final_poly);
  return trace;
}

std::vector<double> flatness_report(const ConvexPolygon& P) {
  const auto& v = P.vertices();
  const std::size_t n = v.size();
  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& cur = v[i];
    const Point& next = v[(i + 1) % n];
    const double e1x = cur.x - prev.x, e1y = cur.y - prev.y;
    const double e2x = next.x - cur.x, e2y = next.y - cur.y;
    angles[i] = std::atan2(e1x * e2y - e1y * e2x, e1x * e2x + e1y * e2y);
  }
  return angles;
}

void export_trace_csv(const AscentTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open " + path);
  out << "iteration,perimeter,aspect\n";
  char buf[96];
  for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.15e,%.15e\n", i,
                  trace.iterates[i].second,
                  polygon_aspect(trace.iterates[i].first));
    out << buf;
  }
}

}  // namespace gaussiso
