#pragma once

// Concurrence of the evolved dimer state in the three parameterisations
// (beta, xi), (beta, G), (G, xi), a spin-flip numerical check, and the
// entanglement thresholds of each slice.

#include <functional>
#include <optional>

#include "mqdiscord/state.hpp"

namespace mqd {

// Pre-max expressions may be negative; the public concurrence clamps at 0.
double concurrence_beta_xi_raw(double beta, double xi);
double concurrence_beta_g_raw(double beta, double g);
double concurrence_g_xi_raw(double g, double xi);

double concurrence_beta_xi(double beta, double xi);
double concurrence_beta_g(double beta, double g);
double concurrence_g_xi(double g, double xi);

/// Wootters concurrence: square roots of the eigenvalues of
/// rho (sy x sy) rho* (sy x sy), sorted descending, l1 - l2 - l3 - l4.
double concurrence_oracle(const DensityMatrix4& rho);

/// Root of f on (lo, hi] after a uniform sign scan of `scan_points` samples
/// confirms exactly one sign change. Bisection stops once |f| <= residual_tol
/// or the bracket collapses. Throws std::logic_error if the scan does not
/// find exactly one sign change.
double solve_unique_root(const std::function<double(double)>& f, double lo, double hi,
                         int scan_points = 1000, double residual_tol = 1e-12);

// Slice bounds. Values of +inf mean "not attainable at finite beta".
double g1_min(double beta);     // entanglement onset in G at fixed beta
double beta1_min(double g);     // smallest beta compatible with G
double beta2_min(double g);     // entanglement onset in beta at fixed G
double g2_max(double xi);       // supremum of G at fixed xi
double g2_min(double xi);       // entanglement onset in G at fixed xi
double xi2_max(double g);       // largest xi compatible with G
double xi2_min(double g);       // entanglement onset in xi at fixed G; 0 if entangled for every xi

/// X^4/2 + sqrt(2G) X - 1/2 = 0 on (0, 1].
double beta2_quartic_root(double g);
/// X^4/2 - 2G X^3 - 2G^2 = 0 on (0, 1]; empty when the quartic has no root there.
std::optional<double> xi2_quartic_root(double g);

struct ThresholdQuery {
  std::optional<double> beta;
  std::optional<double> g;
  std::optional<double> xi;
};

struct ThresholdReport {
  std::optional<double> g1_max, g1_min;        // at fixed beta
  std::optional<double> beta1_min, beta2_min;  // at fixed G
  std::optional<double> g2_max, g2_min;        // at fixed xi
  std::optional<double> xi2_max, xi2_min;      // at fixed G
};

ThresholdReport thresholds(const ThresholdQuery& query);

}  // namespace mqd
