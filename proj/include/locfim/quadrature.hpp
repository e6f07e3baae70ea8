#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace locfim {

/// Controls the adaptive Gauss-Kronrod integration used for information
/// matrices. The box half-width is measured in units of sigma beyond the
/// extreme source positions; the Gaussian mass outside an 8-sigma box is
/// below 1e-14, under the default tolerances.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double box_halfwidth = 8.0;
  int max_depth = 40;
};

void validate(const QuadratureSpec& spec);

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error = 0.0;
};

struct VecQuadResult {
  std::vector<double> value;
  std::vector<double> error;  // per-component absolute error estimate
  int segments = 0;
};

/// Integrates an n-component integrand over [a, b]. All components share
/// one subdivision tree; refinement continues until every component meets
/// max(abs_tol, rel_tol * |estimate|) or the depth limit trips
/// (QuadratureError, carrying the worst achieved error). Deterministic:
/// segments are refined worst-first with index tie-break and summed in
/// position order.
VecQuadResult integrate_vec_1d(
    const std::function<void(double, std::span<double>)>& f, int n, double a,
    double b, const QuadratureSpec& spec);

/// Tensor-product version over [ax,bx] x [ay,by]: an adaptive outer rule in
/// x whose integrand is the adaptive inner integral over y.
VecQuadResult integrate_vec_2d(
    const std::function<void(double, double, std::span<double>)>& f, int n,
    double ax, double bx, double ay, double by, const QuadratureSpec& spec);

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const QuadratureSpec& spec);

}  // namespace locfim
