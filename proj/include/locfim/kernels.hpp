#pragma once

#include <cstddef>
#include <span>

namespace locfim::kernels {

// Batch kernels for the 1D Gaussian-mixture photon loops (likelihood
// evaluation dominates the Monte Carlo estimator runtime). A scalar
// reference implementation always exists; an AVX2+FMA variant is selected
// at runtime on CPUs that support it and is equivalence-tested against the
// scalar path.
//
// Kernel contract, identical in every backend: Gaussian exponent arguments
// are clamped below at kMinExpArg before exp, so densities stay strictly
// positive and log never sees zero.

inline constexpr double kMinExpArg = -690.0;

enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool backend_available(Backend b);

// Overrides dispatch (for tests); throws std::invalid_argument if the
// backend is unavailable on this CPU.
void set_backend(Backend b);
void reset_backend();  // back to best-available

struct Mixture1D {
  std::span<const double> positions;  // x_k
  std::span<const double> weights;    // mu_k
  double sigma = 1.0;
};

/// sum_n ln p(xs[n]) with p the normalized mixture density.
double mixture_loglik_1d(std::span<const double> xs, const Mixture1D& mix);

/// Accumulates d/dx_k of the log-likelihood into grad (size K) and returns
/// the log-likelihood.
double mixture_loglik_grad_1d(std::span<const double> xs, const Mixture1D& mix,
                              std::span<double> grad);

/// out[n] = p(xs[n]).
void mixture_density_1d(std::span<const double> xs, const Mixture1D& mix,
                        std::span<double> out);

namespace detail {
struct KernelTable {
  double (*loglik)(std::span<const double>, const Mixture1D&);
  double (*loglik_grad)(std::span<const double>, const Mixture1D&,
                        std::span<double>);
  void (*density)(std::span<const double>, const Mixture1D&,
                  std::span<double>);
};
const KernelTable& scalar_table();
#if defined(LOCFIM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif
}  // namespace detail

}  // namespace locfim::kernels
