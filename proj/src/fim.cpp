#include "locfim/fim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace locfim {

namespace {
// Below this the score contribution is lost in the Gaussian tail; treating
// it as zero keeps 0/0 out of the integrand.
constexpr double kDensityFloor = 1e-280;
}  // namespace

void validate(const Scenario& scenario, const SourceModel& model) {
  if (scenario.kind == Scenario::Kind::Cofluorescent) {
    if (!scenario.counts.empty())
      throw std::invalid_argument("cofluorescent scenario carries no counts");
    return;
  }
  if (scenario.counts.size() != static_cast<std::size_t>(model.num_sources))
    throw std::invalid_argument("blinking counts must have one entry per source");
  long sum = 0;
  long positive = 0;
  for (long c : scenario.counts) {
    if (c < 0) throw std::invalid_argument("photon counts must be nonnegative");
    if (c > 0) ++positive;
    sum += c;
  }
  if (sum != model.photons)
    throw std::invalid_argument("blinking counts must sum to the photon budget");
  if (positive == 0)
    throw std::invalid_argument("at least one blinking count must be positive");
}

std::vector<long> apportion_photons(const SourceModel& model) {
  validate(model);
  const int k = model.num_sources;
  std::vector<long> counts(k);
  std::vector<std::pair<double, int>> remainders(k);
  long assigned = 0;
  for (int i = 0; i < k; ++i) {
    const double exact = model.weights[i] * static_cast<double>(model.photons);
    counts[i] = static_cast<long>(std::floor(exact));
    assigned += counts[i];
    remainders[i] = {exact - std::floor(exact), i};
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (long r = model.photons - assigned, i = 0; r > 0; --r, ++i)
    ++counts[remainders[static_cast<std::size_t>(i)].second];
  return counts;
}

namespace {

std::vector<std::string> default_labels(int m, std::vector<std::string> given) {
  if (!given.empty()) return given;
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("p" + std::to_string(i + 1));
  return out;
}

// Upper-triangle score products (1/q) dq_i dq_j at one sample point.
void score_products(const DensityFamily& q, std::span<const double> x,
                    std::span<const double> theta, std::vector<double>& grad,
                    std::span<double> out) {
  const double value = q.value(x, theta);
  if (!(value > kDensityFloor)) {
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  q.gradient(x, theta, grad);
  int idx = 0;
  for (int i = 0; i < q.param_count; ++i)
    for (int j = i; j < q.param_count; ++j)
      out[idx++] = grad[i] * grad[j] / value;
}

SymMatrix pack_upper(int m, std::span<const double> entries,
                     std::vector<std::string> labels) {
  Eigen::MatrixXd mat(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      mat(i, j) = entries[idx];
      mat(j, i) = entries[idx];
      ++idx;
    }
  return SymMatrix(std::move(mat), std::move(labels));
}

}  // namespace

SymMatrix fim_functional(const DensityFamily& q, std::span<const double> theta,
                         const QuadratureSpec& spec,
                         std::vector<std::string> labels) {
  const int m = q.param_count;
  const int n_entries = m * (m + 1) / 2;
  std::vector<double> th(theta.begin(), theta.end());

  if (std::holds_alternative<DiscreteSupport>(q.support)) {
    const auto& points = std::get<DiscreteSupport>(q.support).points;
    std::vector<double> acc(n_entries, 0.0), entry(n_entries), grad(m);
    for (const auto& x : points) {
      score_products(q, x, th, grad, entry);
      for (int i = 0; i < n_entries; ++i) acc[i] += entry[i];
    }
    return pack_upper(m, acc, default_labels(m, std::move(labels)));
  }

  const Box& box = std::get<Box>(q.support);
  std::vector<double> grad(m);
  VecQuadResult res;
  if (q.sample_dim == 1) {
    res = integrate_vec_1d(
        [&](double x, std::span<double> out) {
          const double xs[1] = {x};
          score_products(q, xs, th, grad, out);
        },
        n_entries, box.lo[0], box.hi[0], spec);
  } else if (q.sample_dim == 2) {
    res = integrate_vec_2d(
        [&](double x, double y, std::span<double> out) {
          const double xs[2] = {x, y};
          score_products(q, xs, th, grad, out);
        },
        n_entries, box.lo[0], box.hi[0], box.lo[1], box.hi[1], spec);
  } else {
    throw std::invalid_argument("fim_functional supports sample_dim 1 or 2");
  }
  return pack_upper(m, res.value, default_labels(m, std::move(labels)));
}

SymMatrix fim_blinking(const SourceModel& model, std::span<const long> counts) {
  validate(model);
  validate(Scenario::blinking({counts.begin(), counts.end()}), model);
  const int m = model.param_count();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m, m);
  const double inv_s2 = 1.0 / (model.sigma * model.sigma);
  for (int k = 0; k < model.num_sources; ++k)
    for (int d = 0; d < model.dim; ++d) {
      const int i = k * model.dim + d;
      f(i, i) = static_cast<double>(counts[static_cast<std::size_t>(k)]) * inv_s2;
    }
  return SymMatrix(std::move(f), model.labels());
}

SymMatrix fim_cofluorescent(const SourceModel& model,
                            const QuadratureSpec& spec) {
  validate(model);
  validate(spec);
  const DensityFamily fam = mixture_family(model, spec.box_halfwidth);
  SymMatrix f = fim_functional(fam, model.theta, spec, model.labels());
  f.m *= static_cast<double>(model.photons);
  return f;
}

SymMatrix fim_cofluorescent_1d_direct(const SourceModel& model,
                                      const QuadratureSpec& spec) {
  validate(model);
  validate(spec);
  if (model.dim != 1)
    throw std::invalid_argument("direct integrand is one-dimensional");

  const int k = model.num_sources;
  const int n_entries = k * (k + 1) / 2;
  const double s2 = model.sigma * model.sigma;
  const double inv_s4 = 1.0 / (s2 * s2);

  double lo = model.theta[0], hi = model.theta[0];
  for (double t : model.theta) {
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  lo -= spec.box_halfwidth * model.sigma;
  hi += spec.box_halfwidth * model.sigma;

  std::vector<double> pk(k);
  const auto integrand = [&](double x, std::span<double> out) {
    double p = 0.0;
    for (int i = 0; i < k; ++i) {
      const double r[1] = {x};
      pk[i] = single_source_density(r, model.position(i), model.sigma);
      p += model.weights[i] * pk[i];
    }
    if (!(p > kDensityFloor)) {
      std::fill(out.begin(), out.end(), 0.0);
      return;
    }
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j)
        out[idx++] = model.weights[i] * model.weights[j] *
                     (x - model.theta[i]) * (x - model.theta[j]) * pk[i] *
                     pk[j] * inv_s4 / p;
  };

  const VecQuadResult res =
      integrate_vec_1d(integrand, n_entries, lo, hi, spec);
  Eigen::MatrixXd f(k, k);
  int idx = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      f(i, j) = res.value[idx] * static_cast<double>(model.photons);
      f(j, i) = f(i, j);
      ++idx;
    }
  return SymMatrix(std::move(f), model.labels());
}

Eigen::Matrix2d rotation_matrix(double xi) {
  Eigen::Matrix2d o;
  o << std::cos(xi), -std::sin(xi), std::sin(xi), std::cos(xi);
  return o;
}

SymMatrix rotate_fim(const SymMatrix& f, const Eigen::MatrixXd& o,
                     std::vector<std::string> labels) {
  if (o.rows() != f.m.rows() || o.cols() != f.m.rows())
    throw std::invalid_argument("rotation has wrong order");
  const Eigen::MatrixXd gram = o.transpose() * o;
  if ((gram - Eigen::MatrixXd::Identity(o.rows(), o.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-12)
    throw std::invalid_argument("matrix is not orthogonal");
  if (labels.empty())
    for (Eigen::Index i = 0; i < f.m.rows(); ++i)
      labels.push_back("r" + std::to_string(i));
  Eigen::MatrixXd rotated = o.transpose() * f.m * o;
  // Exact symmetry can be lost to rounding in the two products.
  rotated = ((rotated + rotated.transpose()) * 0.5).eval();
  return SymMatrix(std::move(rotated), std::move(labels));
}

}  // namespace locfim
