#include "locfim/density_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace locfim {

DensityFamily mixture_family(const SourceModel& model, double box_halfwidth) {
  validate(model);
  Box box;
  box.lo.resize(model.dim);
  box.hi.resize(model.dim);
  for (int d = 0; d < model.dim; ++d) {
    double lo = model.theta[d], hi = model.theta[d];
    for (int k = 0; k < model.num_sources; ++k) {
      lo = std::min(lo, model.position(k)[d]);
      hi = std::max(hi, model.position(k)[d]);
    }
    box.lo[d] = lo - box_halfwidth * model.sigma;
    box.hi[d] = hi + box_halfwidth * model.sigma;
  }

  DensityFamily fam;
  fam.sample_dim = model.dim;
  fam.param_count = model.param_count();
  fam.support = std::move(box);
  // theta is rebound on every call so the functional can probe nearby
  // parameter values.
  SourceModel proto = model;
  fam.value = [proto](std::span<const double> x,
                      std::span<const double> th) mutable {
    proto.theta.assign(th.begin(), th.end());
    return mixture_density(x, proto);
  };
  SourceModel proto2 = model;
  fam.gradient = [proto2](std::span<const double> x,
                          std::span<const double> th,
                          std::span<double> grad) mutable {
    proto2.theta.assign(th.begin(), th.end());
    mixture_density_gradient(x, proto2, grad);
  };
  return fam;
}

DensityFamily single_source_family(int dim, double sigma,
                                   std::span<const double> center,
                                   double box_halfwidth) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("dim must be 1 or 2");
  Box box;
  for (int d = 0; d < dim; ++d) {
    box.lo.push_back(center[d] - box_halfwidth * sigma);
    box.hi.push_back(center[d] + box_halfwidth * sigma);
  }
  DensityFamily fam;
  fam.sample_dim = dim;
  fam.param_count = dim;
  fam.support = std::move(box);
  fam.value = [sigma](std::span<const double> x, std::span<const double> th) {
    return single_source_density(x, th, sigma);
  };
  fam.gradient = [sigma, dim](std::span<const double> x,
                              std::span<const double> th,
                              std::span<double> grad) {
    const double p = single_source_density(x, th, sigma);
    const double inv_s2 = 1.0 / (sigma * sigma);
    for (int d = 0; d < dim; ++d) grad[d] = p * (x[d] - th[d]) * inv_s2;
  };
  return fam;
}

DensityFamily product_family(const DensityFamily& a, const DensityFamily& b) {
  if (a.param_count != b.param_count)
    throw std::invalid_argument("product factors must share the parameter");

  DensityFamily fam;
  fam.sample_dim = a.sample_dim + b.sample_dim;
  fam.param_count = a.param_count;

  if (std::holds_alternative<Box>(a.support) &&
      std::holds_alternative<Box>(b.support)) {
    Box box = std::get<Box>(a.support);
    const Box& bb = std::get<Box>(b.support);
    box.lo.insert(box.lo.end(), bb.lo.begin(), bb.lo.end());
    box.hi.insert(box.hi.end(), bb.hi.begin(), bb.hi.end());
    fam.support = std::move(box);
  } else if (std::holds_alternative<DiscreteSupport>(a.support) &&
             std::holds_alternative<DiscreteSupport>(b.support)) {
    const auto& pa = std::get<DiscreteSupport>(a.support).points;
    const auto& pb = std::get<DiscreteSupport>(b.support).points;
    DiscreteSupport ds;
    for (const auto& xa : pa)
      for (const auto& xb : pb) {
        std::vector<double> x = xa;
        x.insert(x.end(), xb.begin(), xb.end());
        ds.points.push_back(std::move(x));
      }
    fam.support = std::move(ds);
  } else {
    throw std::invalid_argument("mixed continuous/discrete product");
  }

  const int la = a.sample_dim;
  const int m = a.param_count;
  auto va = a.value, vb = b.value;
  auto ga = a.gradient, gb = b.gradient;
  fam.value = [va, vb, la](std::span<const double> x,
                           std::span<const double> th) {
    return va(x.first(la), th) * vb(x.subspan(la), th);
  };
  fam.gradient = [va, vb, ga, gb, la, m](std::span<const double> x,
                                         std::span<const double> th,
                                         std::span<double> grad) {
    const auto x1 = x.first(la);
    const auto x2 = x.subspan(la);
    std::vector<double> g1(m), g2(m);
    ga(x1, th, g1);
    gb(x2, th, g2);
    const double q1 = va(x1, th), q2 = vb(x2, th);
    for (int i = 0; i < m; ++i) grad[i] = g1[i] * q2 + q1 * g2[i];
  };
  return fam;
}

DensityFamily convex_mixture(double gamma, const DensityFamily& a,
                             const DensityFamily& b) {
  if (!(gamma > 0.0) || !(gamma < 1.0))
    throw std::invalid_argument("gamma must lie in (0, 1)");
  if (a.param_count != b.param_count || a.sample_dim != b.sample_dim)
    throw std::invalid_argument("mixture components must match in shape");

  DensityFamily fam;
  fam.sample_dim = a.sample_dim;
  fam.param_count = a.param_count;

  if (std::holds_alternative<Box>(a.support) &&
      std::holds_alternative<Box>(b.support)) {
    const Box& ba = std::get<Box>(a.support);
    const Box& bb = std::get<Box>(b.support);
    Box box;
    for (std::size_t d = 0; d < ba.lo.size(); ++d) {
      box.lo.push_back(std::min(ba.lo[d], bb.lo[d]));
      box.hi.push_back(std::max(ba.hi[d], bb.hi[d]));
    }
    fam.support = std::move(box);
  } else if (std::holds_alternative<DiscreteSupport>(a.support) &&
             std::holds_alternative<DiscreteSupport>(b.support)) {
    if (std::get<DiscreteSupport>(a.support).points !=
        std::get<DiscreteSupport>(b.support).points)
      throw std::invalid_argument(
          "discrete mixture components need identical supports");
    fam.support = a.support;
  } else {
    throw std::invalid_argument("mixed continuous/discrete mixture");
  }

  const int m = a.param_count;
  auto va = a.value, vb = b.value;
  auto ga = a.gradient, gb = b.gradient;
  fam.value = [va, vb, gamma](std::span<const double> x,
                              std::span<const double> th) {
    return gamma * va(x, th) + (1.0 - gamma) * vb(x, th);
  };
  fam.gradient = [ga, gb, gamma, m](std::span<const double> x,
                                    std::span<const double> th,
                                    std::span<double> grad) {
    std::vector<double> g1(m), g2(m);
    ga(x, th, g1);
    gb(x, th, g2);
    for (int i = 0; i < m; ++i)
      grad[i] = gamma * g1[i] + (1.0 - gamma) * g2[i];
  };
  return fam;
}

}  // namespace locfim
