#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "locfim/density_family.hpp"
#include "locfim/model.hpp"
#include "locfim/quadrature.hpp"
#include "locfim/symmat.hpp"

namespace locfim {

/// Emission scenario. Cofluorescent: all sources active, photons follow the
/// brightness-weighted mixture. Blinking: source k alone emits its N_k
/// photons in its own time windows.
struct Scenario {
  enum class Kind { Cofluorescent, Blinking };
  Kind kind = Kind::Cofluorescent;
  std::vector<long> counts;  // per-source photon counts, Blinking only

  static Scenario cofluorescent() { return {Kind::Cofluorescent, {}}; }
  static Scenario blinking(std::vector<long> n) {
    return {Kind::Blinking, std::move(n)};
  }
};

/// Counts must be nonnegative, sum to model.photons, and contain at least
/// one positive entry.
void validate(const Scenario& scenario, const SourceModel& model);

/// N_k = mu_k N rounded by largest-remainder apportionment (ties broken by
/// source index), so the counts always sum to N exactly.
std::vector<long> apportion_photons(const SourceModel& model);

/// The Fisher-information functional: F_ij = integral (or sum, on discrete
/// support) of (1/q) dq/dtheta_i dq/dtheta_j over the family's support.
/// Points where q underflows (q <= 1e-280) contribute zero. Symmetric PSD
/// by construction up to quadrature tolerance.
SymMatrix fim_functional(const DensityFamily& q, std::span<const double> theta,
                         const QuadratureSpec& spec,
                         std::vector<std::string> labels = {});

/// Session FIM for blinking emission: block-diagonal, N_k / sigma^2 on each
/// coordinate of source k. Closed form, no quadrature.
SymMatrix fim_blinking(const SourceModel& model, std::span<const long> counts);

/// Session FIM for cofluorescent emission: N times the single-photon FIM of
/// the mixture density, computed with the generic functional.
SymMatrix fim_cofluorescent(const SourceModel& model,
                            const QuadratureSpec& spec);

/// Independent 1D route: F_ij = N mu_i mu_j / sigma^4 *
/// integral (x-x_i)(x-x_j) p_i p_j / p dx. Exists so the generic functional
/// can be cross-checked against a second derivation; not a wrapper over it.
SymMatrix fim_cofluorescent_1d_direct(const SourceModel& model,
                                      const QuadratureSpec& spec);

/// [[cos xi, -sin xi], [sin xi, cos xi]].
Eigen::Matrix2d rotation_matrix(double xi);

/// O^T F O; throws std::invalid_argument unless O is orthogonal within
/// 1e-12. New labels optional (default "r0", "r1", ...).
SymMatrix rotate_fim(const SymMatrix& f, const Eigen::MatrixXd& o,
                     std::vector<std::string> labels = {});

}  // namespace locfim
