#include "locfim/symmat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace locfim {

SymMatrix::SymMatrix(Eigen::MatrixXd mat, std::vector<std::string> names)
    : m(std::move(mat)), labels(std::move(names)) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("SymMatrix: matrix must be square");
  if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != m.rows())
    throw std::invalid_argument("SymMatrix: label count != order");
  if (labels.empty()) {
    labels.reserve(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      labels.push_back("p" + std::to_string(i + 1));
  }
}

SymMatrix SymMatrix::zero(std::vector<std::string> names) {
  const auto n = static_cast<Eigen::Index>(names.size());
  return SymMatrix(Eigen::MatrixXd::Zero(n, n), std::move(names));
}

void SymMatrix::symmetrize() { m = ((m + m.transpose()) * 0.5).eval(); }

bool is_symmetric(const SymMatrix& a, double tol) {
  for (Eigen::Index i = 0; i < a.m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.m.cols(); ++j) {
      const double diff = std::abs(a.m(i, j) - a.m(j, i));
      if (diff > tol * std::max(1.0, std::abs(a.m(i, j)))) return false;
    }
  return true;
}

SortedEigen eigen_sorted(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  // Eigen sorts ascending; flip to nonincreasing.
  const Eigen::Index n = a.m.rows();
  SortedEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double min_eigenvalue(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  return solver.eigenvalues()(0);
}

void validate_information_matrix(const SymMatrix& a) {
  if (!is_symmetric(a))
    throw std::invalid_argument("information matrix is not symmetric");
  const double floor = -1e-9 * std::abs(a.trace());
  if (min_eigenvalue(a) < floor)
    throw std::invalid_argument(
        "information matrix is not positive semidefinite");
}

double max_rel_diff(const SymMatrix& a, const SymMatrix& b) {
  const double scale = b.m.cwiseAbs().maxCoeff();
  const double diff = (a.m - b.m).cwiseAbs().maxCoeff();
  if (scale == 0.0)
    return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

std::vector<std::string> position_labels(int num_sources, int dim) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(num_sources) * dim);
  for (int k = 1; k <= num_sources; ++k) {
    out.push_back("x" + std::to_string(k));
    if (dim == 2) out.push_back("y" + std::to_string(k));
  }
  return out;
}

}  // namespace locfim
