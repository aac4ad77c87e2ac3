#pragma once

// Quantum discord of the evolved dimer state with projective measurements on
// spin B. All entropies are in bits with 0 log 0 = 0.
//
// Closed forms take (beta, xi) with beta in [0, +inf] and xi = |cos(D tau)| in
// [0, 1]; beta = +inf is the pure-state limit. Functions that reproduce the
// unreduced hyperbolic expressions literally (omega1_closed,
// appendix_derivative, discord_expanded) are limited to finite beta.

#include <array>

#include "mqdiscord/state.hpp"

namespace mqd {

/// Largest beta accepted by the literal hyperbolic formulas (cosh^2 must not
/// overflow).
inline constexpr double kMaxLiteralBeta = 300.0;

struct Spectrum4 {
  double lambda0 = 0.25;
  double lambda1 = 0.25;
  double lambda2 = 0.25;
  double lambda3 = 0.25;

  std::array<double, 4> values() const { return {lambda0, lambda1, lambda2, lambda3}; }
  double sum() const { return lambda0 + lambda1 + lambda2 + lambda3; }
  /// sum_j lambda_j log2 lambda_j
  double entropy_sum() const;
};

/// Projective measurement axis on spin B, in Bloch angles.
struct MeasurementBasis {
  double theta_b = 0.0;  // [0, pi]
  double phi_b = 0.0;    // [0, 2 pi)
};

struct CorrelationReport {
  double discord = 0.0;
  double classical_correlations = 0.0;
  double mutual_information = 0.0;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  Spectrum4 spectrum;
  double omega0 = 0.0;
  double omega1 = 0.0;
};

/// Pieces of Omega(eta, beta, xi) = p0 S0 + p1 S1.
struct OmegaTerms {
  double p0 = 0.0, p1 = 0.0;
  double theta0 = 0.0, theta1 = 0.0;
  double s0 = 0.0, s1 = 0.0;
  double value() const { return p0 * s0 + p1 * s1; }
};

void require_beta_xi(double beta, double xi);

/// Shannon entropy (bits) of the distribution {p, q}; callers pass both
/// weights so the smaller one keeps full relative precision.
double binary_entropy(double p, double q);
double binary_entropy(double p);

Spectrum4 spectrum(double beta);

double reduced_entropy(double beta, double xi);
double mutual_information(double beta, double xi);

/// Conditional entropy family on an arbitrary X state, eta in [0, 1].
OmegaTerms omega_terms(double eta, const XState& state);
double omega(double eta, double beta, double xi);

/// Omega at eta = 0: log2(1 + e^b) - b e^b / (ln2 (1 + e^b)). Independent of xi.
double omega0_closed(double beta);

/// Omega at eta = 1 in its reduced hyperbolic form. Finite beta only.
double omega1_closed(double beta, double xi);

/// C(rho) = S(rho^A) - min(Omega(0), Omega(1)). Throws std::logic_error if
/// the eta = 1 branch is ever smaller than the eta = 0 branch.
double classical_correlations(double beta, double xi);

/// Q = S(rho^A) - Omega(0).
double discord_closed(double beta, double xi);

/// The same discord written out in hyperbolic functions of beta, evaluated
/// term by term. Finite beta only; used to cross-check discord_closed.
double discord_expanded(double beta, double xi);

CorrelationReport correlations(double beta, double xi);

/// d Omega(1, beta, xi) / d xi in closed form, for 0 < beta <= kMaxLiteralBeta.
double appendix_derivative(double beta, double xi);

/// The argument of the logarithm in appendix_derivative; lies in (0, 1].
double appendix_log_ratio(double beta, double xi);

// --- measurement oracle ---------------------------------------------------

/// Von Neumann entropy in bits of a Hermitian matrix.
double von_neumann_entropy(const Eigen::MatrixXcd& m);
Eigen::Matrix2cd partial_trace_b(const DensityMatrix4& rho);
Eigen::Matrix2cd partial_trace_a(const DensityMatrix4& rho);

/// sum_k p_k S(rho_A|k) after measuring spin B along the given axis.
double conditional_entropy(const DensityMatrix4& rho, const MeasurementBasis& basis);

struct OracleOptions {
  int grid_theta = 64;
  int grid_phi = 64;
  double angle_tol = 1e-10;
  int max_sweeps = 8;
};

struct OracleResult {
  double discord = 0.0;
  double classical_correlations = 0.0;
  double mutual_information = 0.0;
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double entropy_ab = 0.0;
  double min_conditional_entropy = 0.0;
  MeasurementBasis basis;
};

/// Discord by brute-force minimisation of the measured conditional entropy
/// over all projective measurements on B: a coarse angular grid followed by
/// per-coordinate golden-section refinement.
OracleResult discord_measurement_oracle(const DensityMatrix4& rho, const OracleOptions& opts = {});
OracleResult discord_measurement_oracle(const XState& state, const OracleOptions& opts = {});

// --- discord on the measurable slices ------------------------------------

/// Q(beta, G) with xi recovered from the coherence intensity.
double discord_beta_g(double beta, double g);

/// Q(G, xi) with beta recovered from the coherence intensity. At the exact
/// boundary G = (1 - xi^2)/2 the pure-state limit beta = +inf is used.
double discord_g_xi(double g, double xi);

}  // namespace mqd
