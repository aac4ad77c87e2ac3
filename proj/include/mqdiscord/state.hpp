#pragma once

// Thermal state of a dipolar-coupled spin-1/2 dimer and its evolution under
// the double-quantum (MQ) Hamiltonian H = D/2 (I1+ I2+ + I1- I2-).
//
// Units: hbar = k = 1. Basis order |00>, |01>, |10>, |11> with |0> the
// I_z = +1/2 eigenstate; element indices r11..r44 follow that order.

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mqd {

using cplx = std::complex<double>;
using DensityMatrix4 = Eigen::Matrix4cd;

/// Raised for arguments outside a function's admissible domain. The message
/// always names the admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DipolarGeometry {
  double gamma = 1.0;
  double r12 = 1.0;
  double theta12 = 0.0;  // radians, angle between r12 and the field
};

struct DimerParams {
  double beta = 0.0;        // dimensionless inverse temperature, >= 0
  double coupling_D = 1.0;  // dipolar coupling (angular frequency)
  double tau = 0.0;         // preparation time
  double delta = 1.0;       // evolution-period constant
  double t_evolution = 0.0;

  double dtau() const { return coupling_D * tau; }
  double xi() const;

  /// Parameters realising (beta, xi) with D = 1 and tau = arccos(xi).
  static DimerParams from_xi(double beta, double xi, double delta = 1.0, double t = 0.0);

  void validate() const;
};

/// X-shaped two-qubit state: populations on the diagonal plus the single
/// double-quantum coherence r14 (r41 = conj(r14)). The (2,3) element is zero.
struct XState {
  double r11 = 0.25, r22 = 0.25, r33 = 0.25, r44 = 0.25;
  cplx r14{0.0, 0.0};

  DensityMatrix4 matrix() const;
  double trace() const { return r11 + r22 + r33 + r44; }
  /// Unit trace and positivity of the {|00>,|11>} block, both to 1e-12.
  bool is_valid(double tol = 1e-12) const;
};

/// gamma * hbar / r^3 * (1 - 3 cos^2 theta) with hbar = 1.
double dipolar_coupling(const DipolarGeometry& geom);

/// Logistic sigmoid 1/(1+exp(-x)) without overflow.
double sigmoid(double x);

/// exp(beta I_z) / Tr exp(beta I_z). beta = +inf gives |00><00|.
XState thermal_state(double beta);

/// Rotates an X state under exp(-i H tau): exact 2x2 rotation of the
/// {|00>,|11>} block by the angle D*tau. Central populations are untouched.
XState evolve(const XState& state0, const DimerParams& params);

/// Closed-form evolved thermal state at (beta, D*tau). Written in terms of
/// tanh(beta/2) and the logistic weights so it stays finite for large beta.
XState evolved_state(double beta, double dtau);

/// Evolved thermal state at cos(D*tau) = xi, sin(D*tau) = sqrt(1 - xi^2).
XState evolved_state_xi(double beta, double xi);

DensityMatrix4 mq_hamiltonian(double coupling_D);
DensityMatrix4 iz_operator();

/// exp(-i H tau) as a 4x4 matrix, built from the block rotation.
DensityMatrix4 mq_propagator(const DimerParams& params);

/// exp(-i H tau) rho exp(i H tau) for an arbitrary 4x4 matrix.
DensityMatrix4 evolve_unitary_oracle(const DensityMatrix4& rho, const DimerParams& params);

/// exp(-i H tau) I_z exp(i H tau).
DensityMatrix4 heat_operator(const DimerParams& params);

struct DensityCheck {
  double hermiticity = 0.0;   // max |m - m^dagger|
  double trace_error = 0.0;   // |Tr m - 1|
  double min_eigenvalue = 0.0;
  bool ok(double tol = 1e-12) const {
    return hermiticity <= tol && trace_error <= tol && min_eigenvalue >= -tol;
  }
};

DensityCheck check_density(const DensityMatrix4& m);

}  // namespace mqd
