#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "locfim/symmat.hpp"

namespace locfim {

/// Cramer-Rao variance bounds derived from an information matrix.
/// Directions with eigenvalue <= null_threshold * lambda_max form a null
/// space; a parameter whose basis vector overlaps it is reported unbounded
/// (its variance bound is infinite) instead of carrying a huge number.
struct BoundReport {
  std::vector<double> variance;    // L_ii, valid where !unbounded[i]
  std::vector<std::uint8_t> unbounded;
  int rank = 0;                    // eigenvalues kept by the pseudo-inverse
  SymMatrix covariance;            // pseudo-inverse of the information matrix
};

/// Throws std::invalid_argument if F has an eigenvalue below
/// -1e-9 * trace (not PSD).
BoundReport invert_info(const SymMatrix& f, double null_threshold = 1e-12);

/// Covariance carrier for the efficiency measures. `unbounded`, when
/// non-empty, flags coordinates with infinite variance (their precision is
/// zero); empirical covariances leave it empty.
struct Covariance {
  SymMatrix mat;
  std::vector<std::uint8_t> unbounded;
};

Covariance to_covariance(const BoundReport& report);

/// Average total precision M / Tr(Cov); zero if any variance is unbounded.
double h_tot(const Covariance& cov);

/// Average individual precision (1/M) sum_i 1 / Cov_ii; unbounded entries
/// contribute zero.
double h_ind(const Covariance& cov);

/// Average eigenparameter precision (1/M) Tr(Cov^-1), null covariance
/// directions contributing zero precision.
double h_eig(const Covariance& cov);

/// Spectrum sorted nonincreasing plus, for 2x2 matrices, the eigenparameter
/// rotation angle xi in (-pi/2, pi/2] of the dominant eigenvector
/// (b = x1 cos xi + x2 sin xi). Sign fixed by making the first nonzero
/// eigenvector component positive; a degenerate spectrum
/// (|l1 - l2| <= 1e-10 (l1 + l2)) returns xi = 0.
struct EigenReport {
  std::vector<double> values;
  Eigen::MatrixXd vectors;  // columns match values
  double xi = 0.0;
  bool xi_valid = false;  // true only for order-2 input
};
EigenReport eigen_analysis(const SymMatrix& f);

struct Efficiency {
  double tot = 0.0;
  double ind = 0.0;
  double eig = 0.0;
};

/// H_tot, H_ind, H_eig of a covariance matrix.
Efficiency efficiency_measures(const Covariance& cov);

/// The Fisher ceilings the measures reach at a saturated Cramer-Rao bound:
/// M / Tr(F^-1), mean of 1/(F^-1)_ii, Tr(F)/M.
Efficiency fisher_efficiency_bounds(const SymMatrix& f);

/// Both sides together, as reported by the CLI.
struct EfficiencyReport {
  Efficiency measured;
  Efficiency bound;
};

}  // namespace locfim
