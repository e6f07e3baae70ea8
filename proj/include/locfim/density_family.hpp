#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "locfim/model.hpp"

namespace locfim {

struct Box {
  std::vector<double> lo, hi;  // one interval per sample dimension
};

/// Finite support: the information-matrix integral becomes a sum over these
/// points. Used by the convexity certificates on toy families.
struct DiscreteSupport {
  std::vector<std::vector<double>> points;
};

/// A parametric density q(X | theta) with its parameter gradient, the
/// argument of the Fisher-information functional. value/gradient must accept
/// any theta near the evaluation point; gradient fills dq/dtheta_i.
struct DensityFamily {
  int sample_dim = 1;   // dimension of X
  int param_count = 1;  // dimension of theta
  std::function<double(std::span<const double> x, std::span<const double> th)>
      value;
  std::function<void(std::span<const double> x, std::span<const double> th,
                     std::span<double> grad)>
      gradient;
  std::variant<Box, DiscreteSupport> support;
};

/// The cofluorescent detection density of `model` as a family over the
/// flattened positions; the box extends halfwidth*sigma beyond the extreme
/// source coordinates (re-derived from theta at each call, so the family
/// stays valid as theta moves; the box itself is fixed at construction).
DensityFamily mixture_family(const SourceModel& model, double box_halfwidth);

/// Single Gaussian source in `dim` dimensions; parameters are the source
/// coordinates. Box spans halfwidth*sigma around `center`.
DensityFamily single_source_family(int dim, double sigma,
                                   std::span<const double> center,
                                   double box_halfwidth);

/// Independent pair (X1, X2) ~ a(X1|theta) b(X2|theta) over the shared
/// parameter vector. Supports must be both continuous or both discrete.
DensityFamily product_family(const DensityFamily& a, const DensityFamily& b);

/// gamma a + (1-gamma) b on a common support.
DensityFamily convex_mixture(double gamma, const DensityFamily& a,
                             const DensityFamily& b);

}  // namespace locfim
