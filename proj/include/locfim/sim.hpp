#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locfim/fim.hpp"
#include "locfim/metrology.hpp"
#include "locfim/model.hpp"
#include "locfim/symmat.hpp"

namespace locfim {

/// Multi-start backtracking gradient ascent on the photon log-likelihood.
/// Start 0 is a moment-based estimate (truth-agnostic); the rest perturb
/// the detection centroid deterministically from the trial seed.
struct OptimizerSettings {
  int starts = 8;
  int max_iters = 500;
  /// Converged when |grad| < grad_tol_factor * N / sigma.
  double grad_tol_factor = 1e-8;
  int max_backtracks = 45;
};

/// Draws one session of photon detections. Blinking: N_k samples from
/// source k's PSF, tagged with window k. Cofluorescent: N samples from the
/// mixture, tagged mixed. A pure function of (model, scenario, seed).
std::vector<Detection> sample_photons(const SourceModel& model,
                                      const Scenario& scenario,
                                      std::uint64_t seed);

struct MleResult {
  std::vector<double> theta;            // NaN where unestimable
  std::vector<std::uint8_t> unestimable;  // per source
  double loglik = 0.0;
  bool converged = false;
};

/// Per-window sample mean — the exact MLE under a Gaussian PSF. A window
/// with no detections leaves its source flagged unestimable, never imputed.
MleResult mle_blinking(std::span<const Detection> detections,
                       const SourceModel& model);

/// Maximizes sum_n ln p(r_n | theta) over the source positions (K and the
/// brightnesses are known). Deterministic given the seed and settings.
MleResult mle_cofluorescent(std::span<const Detection> detections,
                            const SourceModel& model,
                            const OptimizerSettings& settings,
                            std::uint64_t seed);

struct TrialBatch {
  long trials = 0;
  std::uint64_t seed = 0;
  Scenario scenario;
  SourceModel model;
  std::vector<std::vector<double>> estimates;  // aligned, one per used trial
  std::vector<double> loglik;
  std::vector<std::uint8_t> converged;
  long flagged_trials = 0;  // excluded from the covariance
  SymMatrix empirical_cov;  // second moments about the true parameters
};

/// Runs `trials` independent estimation sessions with per-trial sub-seeds
/// derived from the master seed by a counter construction. Estimates of
/// equal-brightness sources are aligned to the truth by the
/// least-squared-error permutation before the covariance is accumulated
/// (with exchange symmetry the raw labels carry no meaning).
TrialBatch run_batch(const SourceModel& model, const Scenario& scenario,
                     long trials, std::uint64_t seed,
                     const OptimizerSettings& settings = {});

/// Covariance standard-error scale: max over entries of
/// sqrt((C_ii C_jj + C_ij^2) / T).
double covariance_standard_error(const SymMatrix& cov, long trials);

/// Bootstrap standard errors of the three efficiency measures of the
/// empirical covariance (deterministic resampling from `seed`).
Efficiency efficiency_bootstrap_se(const TrialBatch& batch, int resamples,
                                   std::uint64_t seed);

/// One row per trial: index, estimate components, log-likelihood, converged.
std::string trials_csv(const TrialBatch& batch);

/// Key=value summary: empirical covariance, bound covariance, per-parameter
/// variance ratios, efficiency measures on both sides.
std::string batch_summary(const TrialBatch& batch, const SymMatrix& info);

}  // namespace locfim
