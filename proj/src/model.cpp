#include "locfim/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "locfim/symmat.hpp"

namespace locfim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

std::vector<std::string> SourceModel::labels() const {
  return position_labels(num_sources, dim);
}

SourceModel SourceModel::two_source_1d(double sep, double delta, double sigma,
                                       long photons) {
  SourceModel m;
  m.dim = 1;
  m.num_sources = 2;
  m.theta = {-0.5 * sep, 0.5 * sep};
  m.weights = {0.5 * (1.0 + delta), 0.5 * (1.0 - delta)};
  m.sigma = sigma;
  m.photons = photons;
  validate(m);
  return m;
}

SourceModel SourceModel::single_1d(double position, double sigma,
                                   long photons) {
  SourceModel m;
  m.dim = 1;
  m.num_sources = 1;
  m.theta = {position};
  m.weights = {1.0};
  m.sigma = sigma;
  m.photons = photons;
  validate(m);
  return m;
}

void validate(const SourceModel& model) {
  if (model.dim != 1 && model.dim != 2)
    throw std::invalid_argument("model dim must be 1 or 2");
  if (model.num_sources < 1)
    throw std::invalid_argument("model needs at least one source");
  if (!(model.sigma > 0.0))
    throw std::invalid_argument("PSF sigma must be positive");
  if (model.photons < 1)
    throw std::invalid_argument("photon count must be >= 1");
  if (model.theta.size() !=
      static_cast<std::size_t>(model.num_sources) * model.dim)
    throw std::invalid_argument("position vector size != K*dim");
  if (model.weights.size() != static_cast<std::size_t>(model.num_sources))
    throw std::invalid_argument("weight count != K");
  double sum = 0.0;
  for (double w : model.weights) {
    // mu_k = 1 is admitted (single source, or companions all dark).
    if (!(w >= 0.0) || w > 1.0)
      throw std::invalid_argument("relative brightness outside [0, 1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("relative brightnesses must sum to 1");
  for (double t : model.theta)
    if (!std::isfinite(t))
      throw std::invalid_argument("source coordinates must be finite");
}

std::vector<int> dark_sources(const SourceModel& model) {
  std::vector<int> out;
  for (int k = 0; k < model.num_sources; ++k)
    if (model.weights[k] == 0.0) out.push_back(k);
  return out;
}

double psf_amplitude(double x, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  const double norm = std::pow(kTwoPi * sigma * sigma, -0.25);
  return norm * std::exp(-x * x / (4.0 * sigma * sigma));
}

double psf_amplitude_deriv(double x, double sigma) {
  return psf_amplitude(x, sigma) * (-x / (2.0 * sigma * sigma));
}

double single_source_density(std::span<const double> r,
                             std::span<const double> rbar, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  if (r.size() != rbar.size() || r.empty() || r.size() > 2)
    throw std::invalid_argument("position dimension mismatch");
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const double norm = 1.0 / std::sqrt(kTwoPi * sigma * sigma);
  double density = 1.0;
  for (std::size_t d = 0; d < r.size(); ++d) {
    const double dx = r[d] - rbar[d];
    density *= norm * std::exp(-dx * dx * inv2s2);
  }
  return density;
}

double mixture_density(std::span<const double> r, const SourceModel& model) {
  double p = 0.0;
  for (int k = 0; k < model.num_sources; ++k)
    p += model.weights[k] * single_source_density(r, model.position(k),
                                                  model.sigma);
  return p;
}

void mixture_density_gradient(std::span<const double> r,
                              const SourceModel& model,
                              std::span<double> grad) {
  const double inv_s2 = 1.0 / (model.sigma * model.sigma);
  for (int k = 0; k < model.num_sources; ++k) {
    const double pk =
        model.weights[k] *
        single_source_density(r, model.position(k), model.sigma);
    const auto rbar = model.position(k);
    for (int d = 0; d < model.dim; ++d)
      grad[static_cast<std::size_t>(k) * model.dim + d] =
          pk * (r[d] - rbar[d]) * inv_s2;
  }
}

void log_density_gradient(std::span<const double> r, const SourceModel& model,
                          std::span<double> grad) {
  const double p = mixture_density(r, model);
  if (!(p > 0.0))
    throw std::domain_error("mixture density vanished at evaluation point");
  mixture_density_gradient(r, model, grad);
  for (double& g : grad) g /= p;
}

}  // namespace locfim
