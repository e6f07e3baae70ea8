#pragma once

#include <span>
#include <string>
#include <vector>

namespace locfim {

/// K incoherent point emitters seen through an isotropic Gaussian PSF.
/// theta is the flattened position vector (x1[,y1],x2[,y2],...) — the
/// parameters every information matrix in this library refers to.
struct SourceModel {
  int dim = 1;                  // 1 or 2
  int num_sources = 0;          // K
  std::vector<double> theta;    // K*dim image-plane coordinates
  std::vector<double> weights;  // relative brightnesses mu_k, sum to 1
  double sigma = 1.0;           // PSF standard deviation
  long photons = 1;             // total photon budget N

  int param_count() const { return num_sources * dim; }
  std::span<const double> position(int k) const {
    return {theta.data() + static_cast<std::size_t>(k) * dim,
            static_cast<std::size_t>(dim)};
  }
  std::vector<std::string> labels() const;

  /// Two sources at -sep/2 and +sep/2 with brightnesses (1 +- delta)/2.
  static SourceModel two_source_1d(double sep, double delta, double sigma,
                                   long photons);
  static SourceModel single_1d(double position, double sigma, long photons);
};

/// Throws std::invalid_argument on any violated invariant: weights must sum
/// to 1 within 1e-12 with every mu_k in [0,1), sigma > 0, N >= 1, K >= 1,
/// finite coordinates, theta sized K*dim.
void validate(const SourceModel& model);

/// Indices of zero-weight sources. Legal, but they make the cofluorescent
/// information matrix singular, so callers may want to warn.
std::vector<int> dark_sources(const SourceModel& model);

/// One photodetection. window is the 1-based active-source index for
/// blinking-scenario samples, kMixedWindow for cofluorescent ones.
inline constexpr int kMixedWindow = 0;
struct Detection {
  double x = 0.0;
  double y = 0.0;  // unused when dim == 1
  int window = kMixedWindow;
};

/// psi(x) = (2 pi sigma^2)^(-1/4) exp(-x^2 / 4 sigma^2); psi^2 integrates
/// to one. Throws std::domain_error for sigma <= 0.
double psf_amplitude(double x, double sigma);
double psf_amplitude_deriv(double x, double sigma);

/// psi^2(x - xbar) in 1D, psi^2(x - xbar) psi^2(y - ybar) in 2D; the
/// dimension comes from the span sizes, which must match.
double single_source_density(std::span<const double> r,
                             std::span<const double> rbar, double sigma);

/// p(r) = sum_k mu_k psi^2-product centered at source k. Strictly positive.
double mixture_density(std::span<const double> r, const SourceModel& model);

/// dp/dtheta_i for all K*dim position parameters.
void mixture_density_gradient(std::span<const double> r,
                              const SourceModel& model,
                              std::span<double> grad);

/// d(ln p)/dtheta_i; requires p(r) > 0, which holds for any valid model.
void log_density_gradient(std::span<const double> r, const SourceModel& model,
                          std::span<double> grad);

}  // namespace locfim
