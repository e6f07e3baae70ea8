#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locfim/density_family.hpp"
#include "locfim/fim.hpp"
#include "locfim/qfim.hpp"

namespace locfim {

/// Strict inequalities cannot be certified at machine precision, so every
/// claim gets a three-valued verdict with an explicit margin: pass needs
/// margin > tolerance, fail needs margin < -tolerance, anything in between
/// is indeterminate.
inline constexpr double kStrictnessTol = 1e-9;

struct Certificate {
  std::string claim;
  enum class Verdict { Pass, Fail, Indeterminate } verdict =
      Verdict::Indeterminate;
  double margin = 0.0;
  double tolerance = kStrictnessTol;
  /// Matrix inequality holds but with an equality direction (rank-deficient
  /// difference); pass is legitimate even though margin == 0.
  bool non_strict = false;
  std::string config;
  std::string note;
};

/// One line per certificate: "claim=<id> verdict=<PASS|FAIL|INDET>
/// margin=<g> tol=<g> config="..." note="..."".
std::string to_line(const Certificate& cert);

bool any_failed(std::span<const Certificate> certs);

/// Information additivity over independent samples: F[a b] vs F[a] + F[b],
/// entrywise relative tolerance 1e-7. Margin is 1e-7 minus the worst
/// relative difference.
Certificate certify_additivity(const DensityFamily& a, const DensityFamily& b,
                               std::span<const double> theta,
                               const QuadratureSpec& spec);

/// Strict scalar convexity of single-parameter Fisher information:
/// F[gamma q1 + (1-gamma) q2] < gamma F[q1] + (1-gamma) F[q2].
/// Indeterminate when q1 and q2 coincide on the support (the strictness
/// hypothesis fails there).
Certificate certify_cohen(const DensityFamily& q1, const DensityFamily& q2,
                          double gamma, std::span<const double> theta,
                          const QuadratureSpec& spec);

/// Blinking-vs-cofluorescent information advantage for a source model:
/// part A (matrix): min eigenvalue of (F_blink - F_coflu) / Tr F_blink;
/// part B (trace): (Tr F_blink - Tr F_coflu) / Tr F_blink.
/// Part A is only a theorem under equal brightnesses; with unequal weights
/// it is still evaluated and labeled outside-theorem-scope evidence.
/// Coincident equal-brightness sources make both parts indeterminate.
std::pair<Certificate, Certificate> certify_theorem2(
    const SourceModel& model, const QuadratureSpec& spec);

/// Translation/rotation invariance of the single-source FIM: evaluates the
/// 2D FIM at each base position and each rotated copy and checks
/// F = f0 * I within 1e-7 relative, f0 taken from the first configuration.
Certificate certify_invariance(const PsfFamily& psf,
                               std::span<const std::array<double, 2>> positions,
                               const QuadratureSpec& spec);

/// Quantum analogue on the two-source 1D closed forms, over a separation
/// grid. Part A margin is the min eigenvalue of (Q_blink - Q_coflu)
/// normalized by Tr Q_blink — identically zero (the difference is rank 1),
/// so a pass is reported non-strict with the full difference spectrum in
/// the note. Part B margin is the normalized trace gap N beta / sigma^2.
std::pair<Certificate, Certificate> certify_theorem4(
    long photons, double sigma, double delta,
    std::span<const double> separations);

/// The diagonal of O^T (F_ring - F) O with O the eigenbasis of F — each
/// entry is positive whenever the matrix advantage holds (the scalar
/// convexity step the matrix proof reduces to).
std::vector<double> rotated_gap_diagonal(const SymMatrix& f_ring,
                                         const SymMatrix& f);

/// Randomized sweep for counterexamples to the advantage inequalities:
/// s/sigma in [0.05, 10], delta in [0, 0.95], K in {2, 3}; half the draws
/// use equal weights (theorem scope), half arbitrary weights (evidence).
/// Any negative margin surfaces as a FAIL certificate.
std::vector<Certificate> counterexample_search(int samples, std::uint64_t seed,
                                               const QuadratureSpec& spec);

}  // namespace locfim
