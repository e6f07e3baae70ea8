#pragma once

#include <functional>
#include <span>

#include "locfim/quadrature.hpp"
#include "locfim/symmat.hpp"

namespace locfim {

/// Real, square-normalized impulse-response amplitude psi. `char_width`
/// sets the integration box (box_halfwidth * char_width around the source).
struct PsfFamily {
  int dim = 1;
  double char_width = 1.0;
  std::function<double(std::span<const double> u)> amplitude;
  std::function<void(std::span<const double> u, std::span<double> g)> gradient;
};

PsfFamily gaussian_psf(int dim, double sigma);
/// Product Gaussian with distinct axis widths; not rotation invariant, used
/// as the constructed counterexample in invariance certification.
PsfFamily anisotropic_gaussian_psf(double sigma_x, double sigma_y);

/// Quantum FIM for two 1D blinking sources: (N / 2 sigma^2) diag(1+delta,
/// 1-delta), equal to the classical blinking FIM. |delta| must be < 1.
SymMatrix qfim_blinking_1d(long photons, double sigma, double delta);

/// beta = (1 - delta^2) s^2 exp(-s^2 / 4 sigma^2) / (8 sigma^2): the
/// dimensionless overlap term that separates the blinking and cofluorescent
/// quantum information. Even in s; vanishes at s = 0 and s -> inf; maximal
/// at s = 2 sigma with value (1 - delta^2) / (2 e).
double beta_overlap(double separation, double sigma, double delta);

struct QfimClosedForm {
  SymMatrix matrix;  // in the (x1, x2) basis
  double beta = 0.0;
  double delta = 0.0;
};

/// Quantum FIM for two 1D cofluorescent sources:
/// (N / 2 sigma^2) [[1+delta-beta, -beta], [-beta, 1-delta-beta]].
QfimClosedForm qfim_cofluorescent_closed(long photons, double sigma,
                                         double delta, double separation);
SymMatrix qfim_cofluorescent_1d(long photons, double sigma, double delta,
                                double separation);

/// Pure-state QFIM of a single source at rbar via overlap integrals of PSF
/// derivatives: 4 (J - v v^T) with J_ij = <d_i psi, d_j psi> and
/// v_i = <psi, d_i psi> (zero for real normalized psi). The isotropic
/// Gaussian gives (1 / sigma^2) I. Throws std::domain_error if psi^2 does
/// not integrate to 1 within 1e-6.
SymMatrix qfim_pure_state(const PsfFamily& psf, std::span<const double> rbar,
                          const QuadratureSpec& spec);

/// Saturability check: the antisymmetric part of the SLD products,
/// Im<d_i Psi | d_j Psi>, assembled from the same overlap integrals.
/// Returns max |residual| over parameter pairs; identically zero for a real
/// impulse response.
double compatibility_check(const PsfFamily& psf, std::span<const double> rbar,
                           const QuadratureSpec& spec);

}  // namespace locfim
