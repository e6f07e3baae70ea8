#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace locfim {

/// Labeled real symmetric matrix. Carries Fisher / quantum-Fisher
/// information, covariance and precision matrices; labels name the
/// estimated parameters ("x1", "y1", "x2", ...).
struct SymMatrix {
  Eigen::MatrixXd m;
  std::vector<std::string> labels;

  SymMatrix() = default;
  SymMatrix(Eigen::MatrixXd mat, std::vector<std::string> names);

  static SymMatrix zero(std::vector<std::string> names);

  int order() const { return static_cast<int>(m.rows()); }
  double trace() const { return m.trace(); }
  double operator()(int i, int j) const { return m(i, j); }

  /// Averages A and A^T; quadrature and accumulation can leave the two
  /// triangles apart by rounding only.
  void symmetrize();
};

bool is_symmetric(const SymMatrix& a, double tol = 1e-12);

/// Eigenvalues sorted nonincreasing with matching eigenvector columns.
struct SortedEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};
SortedEigen eigen_sorted(const SymMatrix& a);

double min_eigenvalue(const SymMatrix& a);

/// Throws std::invalid_argument unless `a` is symmetric and positive
/// semidefinite within the information-matrix tolerances
/// (|A_ij - A_ji| <= 1e-12 max(1,|A_ij|), min eigenvalue >= -1e-9 trace).
void validate_information_matrix(const SymMatrix& a);

/// max_ij |a_ij - b_ij| / max_ij |b_ij| (0 for two zero matrices).
double max_rel_diff(const SymMatrix& a, const SymMatrix& b);

std::vector<std::string> position_labels(int num_sources, int dim);

}  // namespace locfim
