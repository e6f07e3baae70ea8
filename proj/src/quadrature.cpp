#include "locfim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace locfim {

void validate(const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (!(spec.box_halfwidth >= 5.0))
    throw std::invalid_argument("quadrature box halfwidth must be >= 5 sigma");
  if (spec.max_depth < 1)
    throw std::invalid_argument("quadrature max depth must be >= 1");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights belong to the odd-indexed Kronrod abscissae.
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a = 0.0, b = 0.0;
  int depth = 0;
  std::vector<double> value;  // K15 estimate per component
  std::vector<double> error;  // |K15 - G7| per component
};

using VecFn = std::function<void(double, std::span<double>)>;

Segment evaluate_segment(const VecFn& f, int n, double a, double b,
                         int depth) {
  Segment seg;
  seg.a = a;
  seg.b = b;
  seg.depth = depth;
  seg.value.assign(n, 0.0);
  seg.error.assign(n, 0.0);

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::vector<double> kronrod(n, 0.0), gauss(n, 0.0), fx(n);
  for (int j = 0; j < 8; ++j) {
    const bool is_center = (j == 7);
    const bool gauss_node = (j % 2 == 1) || is_center;
    for (int side = 0; side < (is_center ? 1 : 2); ++side) {
      const double x = is_center ? center
                                 : center + (side == 0 ? -half : half) * kXgk[j];
      f(x, fx);
      for (int i = 0; i < n; ++i) {
        kronrod[i] += kWgk[j] * fx[i];
        if (gauss_node) gauss[i] += kWg[j / 2] * fx[i];
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    seg.value[i] = kronrod[i] * half;
    seg.error[i] = std::abs((kronrod[i] - gauss[i]) * half);
  }
  return seg;
}

}  // namespace

VecQuadResult integrate_vec_1d(const VecFn& f, int n, double a, double b,
                               const QuadratureSpec& spec) {
  validate(spec);
  if (!(b > a)) throw std::invalid_argument("integration bounds reversed");

  // A uniform initial grid keeps well-separated narrow features from being
  // skipped by the very first panel.
  constexpr int kInitialSegments = 16;
  std::vector<Segment> segs;
  segs.reserve(256);
  for (int s = 0; s < kInitialSegments; ++s) {
    const double sa = a + (b - a) * s / kInitialSegments;
    const double sb = a + (b - a) * (s + 1) / kInitialSegments;
    segs.push_back(evaluate_segment(f, n, sa, sb, 0));
  }

  std::vector<double> total(n), err(n), abssum(n);
  const auto refresh_totals = [&] {
    std::fill(total.begin(), total.end(), 0.0);
    std::fill(err.begin(), err.end(), 0.0);
    std::fill(abssum.begin(), abssum.end(), 0.0);
    for (const Segment& s : segs)
      for (int i = 0; i < n; ++i) {
        total[i] += s.value[i];
        err[i] += s.error[i];
        abssum[i] += std::abs(s.value[i]);
      }
  };
  const auto tolerance = [&](int i) {
    return std::max({spec.abs_tol, spec.rel_tol * std::abs(total[i]),
                     100.0 * std::numeric_limits<double>::epsilon() *
                         abssum[i]});
  };

  constexpr std::size_t kMaxSegments = 200000;
  while (true) {
    refresh_totals();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, err[i] / tolerance(i));
    if (worst <= 1.0) break;

    // Split the segment with the largest normalized error (first wins ties).
    std::size_t pick = 0;
    double pick_score = -1.0;
    for (std::size_t s = 0; s < segs.size(); ++s) {
      double score = 0.0;
      for (int i = 0; i < n; ++i)
        score = std::max(score, segs[s].error[i] / tolerance(i));
      if (score > pick_score) {
        pick_score = score;
        pick = s;
      }
    }
    const Segment target = segs[pick];
    if (target.depth >= spec.max_depth || segs.size() >= kMaxSegments) {
      double achieved = 0.0;
      for (int i = 0; i < n; ++i) achieved = std::max(achieved, err[i]);
      throw QuadratureError(
          "quadrature failed to converge (achieved error " +
              std::to_string(achieved) + ")",
          achieved);
    }
    const double mid = 0.5 * (target.a + target.b);
    segs[pick] = evaluate_segment(f, n, target.a, mid, target.depth + 1);
    segs.push_back(evaluate_segment(f, n, mid, target.b, target.depth + 1));
  }

  // Deterministic final summation in position order.
  std::sort(segs.begin(), segs.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  VecQuadResult out;
  out.value.assign(n, 0.0);
  out.error.assign(n, 0.0);
  out.segments = static_cast<int>(segs.size());
  for (const Segment& s : segs)
    for (int i = 0; i < n; ++i) {
      out.value[i] += s.value[i];
      out.error[i] += s.error[i];
    }
  return out;
}

VecQuadResult integrate_vec_2d(
    const std::function<void(double, double, std::span<double>)>& f, int n,
    double ax, double bx, double ay, double by, const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  inner.rel_tol = spec.rel_tol * 0.25;
  inner.abs_tol = spec.abs_tol * 0.1;

  const VecFn outer = [&](double x, std::span<double> out) {
    const auto inner_fn = [&](double y, std::span<double> v) { f(x, y, v); };
    const VecQuadResult row = integrate_vec_1d(inner_fn, n, ay, by, inner);
    for (int i = 0; i < n; ++i) out[i] = row.value[i];
  };
  return integrate_vec_1d(outer, n, ax, bx, spec);
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec) {
  const VecFn wrapped = [&](double x, std::span<double> out) {
    out[0] = f(x);
  };
  return integrate_vec_1d(wrapped, 1, a, b, spec).value[0];
}

}  // namespace locfim
