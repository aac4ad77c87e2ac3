#pragma once

// Multiple-quantum coherence orders of the evolved dimer state, their
// intensities G_k and the longitudinal magnetization after mixing.

#include <array>

#include "mqdiscord/state.hpp"

namespace mqd {

/// Split of a 4x4 matrix by coherence order k = m_i - m_j, where m_i is the
/// total I_z eigenvalue of basis state i. Orders run from -2 to +2.
struct CoherenceParts {
  std::array<DensityMatrix4, 5> parts;

  const DensityMatrix4& order(int k) const;
  DensityMatrix4 sum() const;
};

/// Total I_z eigenvalue of each basis state: +1, 0, 0, -1.
int iz_weight(int basis_index);

CoherenceParts coherence_decompose(const DensityMatrix4& m);

/// exp(-i delta I_z t) m exp(i delta I_z t).
DensityMatrix4 iz_rotate(const DensityMatrix4& m, double delta_t);

struct CoherenceSpectrum {
  double g_minus2 = 0.0;
  double g_0 = 0.0;
  double g_plus2 = 0.0;
  double tau = 0.0;
  double beta = 0.0;

  double sum() const { return g_minus2 + g_0 + g_plus2; }
};

/// G_k = Tr(rho_k(tau) rho^ht_{-k}(tau)) for k in {-2, 0, 2}.
double intensity(int k, const DimerParams& params);
CoherenceSpectrum coherence_spectrum(const DimerParams& params);

/// G = G_{+-2} = tanh(beta/2) (1 - xi^2) / 2.
double g2_closed(double beta, double xi);

/// Tr(exp(-i delta I_z t) rho(tau) exp(i delta I_z t) rho^ht(tau)) at
/// t = params.t_evolution.
cplx magnetization_trace(const DimerParams& params);
/// sum_k exp(-i k delta t) G_k(tau).
cplx magnetization_fourier(const DimerParams& params);
double magnetization(const DimerParams& params);

/// Upper bound of G at fixed beta: tanh(beta/2) / 2.
double g1_max(double beta);

/// xi = sqrt(1 - 2 G / tanh(beta/2)), 0 <= G <= g1_max(beta).
double xi_from_g(double beta, double g);

enum class BoundaryPolicy {
  kReject,          // throw when 2G/(1 - xi^2) >= 1 - 1e-12
  kPureStateLimit,  // map the boundary G = (1 - xi^2)/2 to beta = +inf
};

/// beta = 2 atanh(2 G / (1 - xi^2)), 0 <= G < (1 - xi^2)/2.
double beta_from_g(double g, double xi, BoundaryPolicy policy = BoundaryPolicy::kReject);

}  // namespace mqd
