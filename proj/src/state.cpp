#include "mqdiscord/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mqd {

namespace {

constexpr cplx I_unit{0.0, 1.0};

void require_beta(double beta) {
  if (std::isnan(beta) || beta < 0.0) {
    std::ostringstream os;
    os << "beta must lie in [0, +inf], got " << beta;
    throw DomainError(os.str());
  }
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double DimerParams::xi() const { return std::min(1.0, std::abs(std::cos(dtau()))); }

DimerParams DimerParams::from_xi(double beta, double xi, double delta, double t) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    std::ostringstream os;
    os << "xi must lie in [0, 1], got " << xi;
    throw DomainError(os.str());
  }
  DimerParams p;
  p.beta = beta;
  p.coupling_D = 1.0;
  p.tau = std::acos(xi);
  p.delta = delta;
  p.t_evolution = t;
  return p;
}

void DimerParams::validate() const {
  require_beta(beta);
  if (!std::isfinite(coupling_D) || !std::isfinite(tau) || !std::isfinite(delta) ||
      !std::isfinite(t_evolution)) {
    throw DomainError("coupling, tau, delta and t must be finite");
  }
}

DensityMatrix4 XState::matrix() const {
  DensityMatrix4 m = DensityMatrix4::Zero();
  m(0, 0) = r11;
  m(1, 1) = r22;
  m(2, 2) = r33;
  m(3, 3) = r44;
  m(0, 3) = r14;
  m(3, 0) = std::conj(r14);
  return m;
}

bool XState::is_valid(double tol) const {
  if (std::abs(trace() - 1.0) > tol) return false;
  if (std::min({r11, r22, r33, r44}) < -tol) return false;
  return std::norm(r14) <= r11 * r44 + tol;
}

double dipolar_coupling(const DipolarGeometry& geom) {
  if (!(geom.r12 > 0.0)) {
    std::ostringstream os;
    os << "inter-spin distance r12 must be > 0, got " << geom.r12;
    throw DomainError(os.str());
  }
  const double c = std::cos(geom.theta12);
  return geom.gamma / (geom.r12 * geom.r12 * geom.r12) * (1.0 - 3.0 * c * c);
}

XState thermal_state(double beta) {
  require_beta(beta);
  const double up = sigmoid(beta);
  const double down = sigmoid(-beta);
  XState s;
  s.r11 = up * up;
  s.r22 = up * down;
  s.r33 = up * down;
  s.r44 = down * down;
  s.r14 = 0.0;
  return s;
}

XState evolve(const XState& state0, const DimerParams& params) {
  // Block written as m*1 + n*sz + x*sx + y*sy; exp(-i phi sx / 2) rotates
  // (n, y) about x and leaves m, x alone.
  const double phi = params.dtau();
  const double m = 0.5 * (state0.r11 + state0.r44);
  const double n = 0.5 * (state0.r11 - state0.r44);
  const double x = state0.r14.real();
  const double y = -state0.r14.imag();
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double n2 = n * c + y * s;
  const double y2 = y * c - n * s;

  XState out = state0;
  out.r11 = m + n2;
  out.r44 = m - n2;
  out.r14 = cplx(x, -y2);
  return out;
}

XState evolved_state(double beta, double dtau) {
  require_beta(beta);
  const double up = sigmoid(beta);
  const double down = sigmoid(-beta);
  const double half_sin2 = std::sin(0.5 * dtau);
  const double one_minus_cos = 2.0 * half_sin2 * half_sin2;
  const double one_plus_cos = 2.0 - one_minus_cos;
  const double th = std::tanh(0.5 * beta);

  XState s;
  // (cosh b +- cos(D tau) sinh b) / (2 (1 + cosh b)) split into the two
  // non-negative Boltzmann weights sigma(b)^2 and sigma(-b)^2.
  s.r11 = 0.5 * (one_plus_cos * up * up + one_minus_cos * down * down);
  s.r44 = 0.5 * (one_minus_cos * up * up + one_plus_cos * down * down);
  s.r22 = up * down;
  s.r33 = up * down;
  s.r14 = I_unit * (0.5 * std::sin(dtau) * th);
  return s;
}

XState evolved_state_xi(double beta, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) {
    std::ostringstream os;
    os << "xi must lie in [0, 1], got " << xi;
    throw DomainError(os.str());
  }
  return evolved_state(beta, std::acos(xi));
}

DensityMatrix4 mq_hamiltonian(double coupling_D) {
  DensityMatrix4 h = DensityMatrix4::Zero();
  h(0, 3) = 0.5 * coupling_D;
  h(3, 0) = 0.5 * coupling_D;
  return h;
}

DensityMatrix4 iz_operator() {
  DensityMatrix4 iz = DensityMatrix4::Zero();
  iz(0, 0) = 1.0;
  iz(3, 3) = -1.0;
  return iz;
}

DensityMatrix4 mq_propagator(const DimerParams& params) {
  const double half = 0.5 * params.dtau();
  DensityMatrix4 u = DensityMatrix4::Identity();
  u(0, 0) = std::cos(half);
  u(3, 3) = std::cos(half);
  u(0, 3) = -I_unit * std::sin(half);
  u(3, 0) = -I_unit * std::sin(half);
  return u;
}

DensityMatrix4 evolve_unitary_oracle(const DensityMatrix4& rho, const DimerParams& params) {
  const DensityMatrix4 u = mq_propagator(params);
  return u * rho * u.adjoint();
}

DensityMatrix4 heat_operator(const DimerParams& params) {
  const double phi = params.dtau();
  DensityMatrix4 m = DensityMatrix4::Zero();
  m(0, 0) = std::cos(phi);
  m(3, 3) = -std::cos(phi);
  m(0, 3) = I_unit * std::sin(phi);
  m(3, 0) = -I_unit * std::sin(phi);
  return m;
}

DensityCheck check_density(const DensityMatrix4& m) {
  DensityCheck c;
  c.hermiticity = (m - m.adjoint()).cwiseAbs().maxCoeff();
  c.trace_error = std::abs(m.trace() - cplx(1.0, 0.0));
  const DensityMatrix4 herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<DensityMatrix4> es(herm, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

}  // namespace mqd
