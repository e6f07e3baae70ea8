#include <cmath>
#include <numbers>
#include <vector>

#include "locfim/kernels.hpp"

// Scalar reference kernels. The SIMD variants must reproduce these within
// the equivalence-test tolerance; keep the arithmetic here simple and
// obviously correct.

namespace locfim::kernels {
namespace {

struct Prep {
  double inv2s2;
  double inv_s2;
  double norm;  // (2 pi sigma^2)^(-1/2)
};

Prep prepare(const Mixture1D& mix) {
  const double s2 = mix.sigma * mix.sigma;
  return {1.0 / (2.0 * s2), 1.0 / s2,
          1.0 / std::sqrt(2.0 * std::numbers::pi * s2)};
}

double density_at(double x, const Mixture1D& mix, const Prep& prep) {
  double p = 0.0;
  for (std::size_t k = 0; k < mix.positions.size(); ++k) {
    const double dx = x - mix.positions[k];
    const double arg = std::max(-dx * dx * prep.inv2s2, kMinExpArg);
    p += mix.weights[k] * prep.norm * std::exp(arg);
  }
  return p;
}

double loglik_scalar(std::span<const double> xs, const Mixture1D& mix) {
  const Prep prep = prepare(mix);
  double acc = 0.0;
  for (double x : xs) acc += std::log(density_at(x, mix, prep));
  return acc;
}

double loglik_grad_scalar(std::span<const double> xs, const Mixture1D& mix,
                          std::span<double> grad) {
  const Prep prep = prepare(mix);
  const std::size_t k = mix.positions.size();
  for (std::size_t i = 0; i < k; ++i) grad[i] = 0.0;
  double stack_pk[16], stack_dx[16];
  std::vector<double> heap;
  double* pk = stack_pk;
  double* dx = stack_dx;
  if (k > 16) {
    heap.resize(2 * k);
    pk = heap.data();
    dx = heap.data() + k;
  }
  double acc = 0.0;
  for (double x : xs) {
    double p = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      dx[i] = x - mix.positions[i];
      const double arg = std::max(-dx[i] * dx[i] * prep.inv2s2, kMinExpArg);
      pk[i] = mix.weights[i] * prep.norm * std::exp(arg);
      p += pk[i];
    }
    acc += std::log(p);
    const double inv_p = 1.0 / p;
    for (std::size_t i = 0; i < k; ++i)
      grad[i] += pk[i] * dx[i] * prep.inv_s2 * inv_p;
  }
  return acc;
}

void density_scalar(std::span<const double> xs, const Mixture1D& mix,
                    std::span<double> out) {
  const Prep prep = prepare(mix);
  for (std::size_t n = 0; n < xs.size(); ++n)
    out[n] = density_at(xs[n], mix, prep);
}

}  // namespace

namespace detail {
const KernelTable& scalar_table() {
  static const KernelTable table{loglik_scalar, loglik_grad_scalar,
                                 density_scalar};
  return table;
}
}  // namespace detail

}  // namespace locfim::kernels
