#include "mqdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mqdiscord/coherence.hpp"

namespace mqd {

namespace {

constexpr double kLn2 = std::numbers::ln2;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Reduced populations (1 + xi t)/2 and (1 - xi t)/2 with t = tanh(beta/2),
// using 1 - t = 2 sigmoid(-beta) so the small one is never a difference of
// nearly equal numbers.
struct ReducedPopulations {
  double plus;
  double minus;
};

ReducedPopulations reduced_populations(double beta, double xi) {
  const double down = sigmoid(-beta);
  return {0.5 * ((1.0 + xi) - 2.0 * xi * down), 0.5 * ((1.0 - xi) + 2.0 * xi * down)};
}

void require_literal_beta(double beta) {
  if (!(beta >= 0.0 && beta <= kMaxLiteralBeta)) {
    std::ostringstream os;
    os << "beta must lie in [0, " << kMaxLiteralBeta << "] for the hyperbolic form, got " << beta;
    throw DomainError(os.str());
  }
}

// cosh(b) - xi sinh(b) without cancellation at xi -> 1.
double cosh_minus_xi_sinh(double beta, double xi) {
  return (1.0 - xi) * std::cosh(beta) + xi * std::exp(-beta);
}

double golden_section(const auto& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void require_beta_xi(double beta, double xi) {
  if (std::isnan(beta) || beta < 0.0) {
    std::ostringstream os;
    os << "beta must lie in [0, +inf], got " << beta;
    throw DomainError(os.str());
  }
  if (!(xi >= 0.0 && xi <= 1.0)) {
    std::ostringstream os;
    os << "xi must lie in [0, 1], got " << xi;
    throw DomainError(os.str());
  }
}

double binary_entropy(double p, double q) { return -xlog2x(p) - xlog2x(q); }

double binary_entropy(double p) { return binary_entropy(p, 1.0 - p); }

double Spectrum4::entropy_sum() const {
  return xlog2x(lambda0) + xlog2x(lambda1) + xlog2x(lambda2) + xlog2x(lambda3);
}

Spectrum4 spectrum(double beta) {
  require_beta_xi(beta, 0.0);
  // lambda0 = (cosh b + sinh b) / (2 (1 + cosh b)) = sigmoid(b)^2, etc.
  const double up = sigmoid(beta);
  const double down = sigmoid(-beta);
  return {up * up, down * down, up * down, up * down};
}

double reduced_entropy(double beta, double xi) {
  require_beta_xi(beta, xi);
  const auto pop = reduced_populations(beta, xi);
  return binary_entropy(pop.plus, pop.minus);
}

double mutual_information(double beta, double xi) {
  require_beta_xi(beta, xi);
  if (beta == 0.0) return 0.0;
  return 2.0 * reduced_entropy(beta, xi) + spectrum(beta).entropy_sum();
}

OmegaTerms omega_terms(double eta, const XState& state) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    std::ostringstream os;
    os << "eta must lie in [0, 1], got " << eta;
    throw DomainError(os.str());
  }
  const double pb = 2.0 * (state.r11 + state.r33) - 1.0;
  const double pa = 2.0 * (state.r11 + state.r22) - 1.0;
  const double mid = 1.0 - 2.0 * (state.r22 + state.r33);
  const double coh = (1.0 - eta * eta) * std::norm(state.r14);

  OmegaTerms t;
  double* p[2] = {&t.p0, &t.p1};
  double* th[2] = {&t.theta0, &t.theta1};
  double* s[2] = {&t.s0, &t.s1};
  for (int i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    *p[i] = 0.5 * (1.0 + sign * eta * pb);
    if (*p[i] <= 0.0) {
      *p[i] = 0.0;
      continue;
    }
    const double half = 0.5 * (pa + sign * eta * mid);
    *th[i] = std::min(1.0, std::sqrt(coh + half * half) / *p[i]);
    *s[i] = binary_entropy(0.5 * (1.0 - *th[i]), 0.5 * (1.0 + *th[i]));
  }
  return t;
}

double omega(double eta, double beta, double xi) {
  require_beta_xi(beta, xi);
  return omega_terms(eta, evolved_state_xi(beta, xi)).value();
}

double omega0_closed(double beta) {
  require_beta_xi(beta, 0.0);
  if (std::isinf(beta)) return 0.0;
  // log2(1 + e^b) = (b + log1p(e^-b)) / ln2 and b - b e^b/(1 + e^b) = b sigmoid(-b).
  return (beta * sigmoid(-beta) + std::log1p(std::exp(-beta))) / kLn2;
}

double omega1_closed(double beta, double xi) {
  require_beta_xi(beta, xi);
  require_literal_beta(beta);
  const double c = std::cosh(beta);
  const double xs = xi * std::sinh(beta);
  const double c_minus = cosh_minus_xi_sinh(beta, xi);
  const double c_plus = c + xs;
  const double q_minus = 1.0 + c_minus;
  const double q_plus = 1.0 + c_plus;
  const double w = 1.0 / (2.0 * (1.0 + c));

  const double first = 0.5 * (std::log2(q_minus) + std::log2(q_plus));
  const double second = c * w * (std::log2(c_minus) + std::log2(c_plus));
  const double third =
      xs * w * (std::log2(q_minus) + std::log2(c_plus) - std::log2(q_plus) - std::log2(c_minus));
  return first - second - third;
}

double classical_correlations(double beta, double xi) {
  require_beta_xi(beta, xi);
  if (beta == 0.0) return 0.0;
  const double w0 = omega0_closed(beta);
  const double w1 = omega(1.0, beta, xi);
  if (w1 < w0 - 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "Omega(1) = " << w1 << " fell below Omega(0) = " << w0 << " at beta = " << beta
       << ", xi = " << xi;
    throw std::logic_error(os.str());
  }
  return reduced_entropy(beta, xi) - std::min(w0, w1);
}

double discord_closed(double beta, double xi) {
  require_beta_xi(beta, xi);
  if (beta == 0.0) return 0.0;
  return reduced_entropy(beta, xi) - omega0_closed(beta);
}

double discord_expanded(double beta, double xi) {
  require_beta_xi(beta, xi);
  require_literal_beta(beta);
  if (beta == 0.0) return 0.0;
  const double eb = std::exp(beta);
  const double c = std::cosh(beta);
  const double xs = xi * std::sinh(beta);
  const double q_minus = 1.0 + cosh_minus_xi_sinh(beta, xi);
  const double q_plus = c + 1.0 + xs;

  const double t1 = std::log2(1.0 + eb);
  const double t2 = beta / (kLn2 * (1.0 + eb));
  // (cosh b + 1)^2 - xi^2 sinh^2 b, factored.
  const double t3 = 0.5 * (std::log2(q_minus) + std::log2(q_plus));
  const double t4 = xs / (2.0 * (1.0 + c)) * (std::log2(q_plus) - std::log2(q_minus));
  return t1 - t2 - t3 - t4;
}

CorrelationReport correlations(double beta, double xi) {
  require_beta_xi(beta, xi);
  CorrelationReport r;
  r.spectrum = spectrum(beta);
  r.entropy_a = reduced_entropy(beta, xi);
  r.entropy_b = r.entropy_a;
  r.omega0 = omega0_closed(beta);
  r.omega1 = omega(1.0, beta, xi);
  r.mutual_information = mutual_information(beta, xi);
  r.classical_correlations = classical_correlations(beta, xi);
  r.discord = discord_closed(beta, xi);
  return r;
}

double appendix_log_ratio(double beta, double xi) {
  require_beta_xi(beta, xi);
  require_literal_beta(beta);
  const double s = std::sinh(beta);
  // (1 + cosh b) cosh b - xi^2 sinh^2 b = 1 + cosh b + (1 - xi^2) sinh^2 b
  const double base = 1.0 + std::cosh(beta) + (1.0 - xi * xi) * s * s;
  return (base - xi * s) / (base + xi * s);
}

double appendix_derivative(double beta, double xi) {
  require_beta_xi(beta, xi);
  require_literal_beta(beta);
  if (!(beta > 0.0)) throw DomainError("beta must be > 0 for the xi-derivative of Omega(1)");
  const double s = std::sinh(beta);
  const double base = 1.0 + std::cosh(beta) + (1.0 - xi * xi) * s * s;
  const double log2_ratio = std::log1p(-2.0 * xi * s / (base + xi * s)) / kLn2;
  return s / (2.0 * (std::cosh(beta) + 1.0)) * log2_ratio;
}

// --- measurement oracle ----------------------------------------------------

double von_neumann_entropy(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s -= xlog2x(es.eigenvalues()(i));
  return s;
}

Eigen::Matrix2cd partial_trace_b(const DensityMatrix4& rho) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) out(a, b) += rho(2 * a + k, 2 * b + k);
  return out;
}

Eigen::Matrix2cd partial_trace_a(const DensityMatrix4& rho) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k) out(a, b) += rho(2 * k + a, 2 * k + b);
  return out;
}

double conditional_entropy(const DensityMatrix4& rho, const MeasurementBasis& basis) {
  const double st = std::sin(basis.theta_b);
  const cplx n_minus(st * std::cos(basis.phi_b), -st * std::sin(basis.phi_b));  // nx - i ny
  const double nz = std::cos(basis.theta_b);

  double total = 0.0;
  for (const double sign : {1.0, -1.0}) {
    Eigen::Matrix2cd proj;
    proj << 0.5 * (1.0 + sign * nz), 0.5 * sign * n_minus, 0.5 * sign * std::conj(n_minus),
        0.5 * (1.0 - sign * nz);
    DensityMatrix4 lift = DensityMatrix4::Zero();
    lift.block<2, 2>(0, 0) = proj;
    lift.block<2, 2>(2, 2) = proj;
    const DensityMatrix4 post = lift * rho * lift;
    const double p = post.trace().real();
    if (p <= 1e-300) continue;
    total += p * von_neumann_entropy(partial_trace_b(post) / p);
  }
  return total;
}

OracleResult discord_measurement_oracle(const DensityMatrix4& rho, const OracleOptions& opts) {
  constexpr double pi = std::numbers::pi;
  const int nt = std::max(2, opts.grid_theta);
  const int np = std::max(1, opts.grid_phi);
  const double dt = pi / (nt - 1);
  const double dp = 2.0 * pi / np;

  MeasurementBasis best;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < nt; ++i) {
    for (int j = 0; j < np; ++j) {
      const MeasurementBasis b{i * dt, j * dp};
      const double v = conditional_entropy(rho, b);
      if (v < best_val) {
        best_val = v;
        best = b;
      }
    }
  }

  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const MeasurementBasis prev = best;
    best.theta_b = golden_section(
        [&](double th) { return conditional_entropy(rho, {th, best.phi_b}); },
        std::max(0.0, best.theta_b - dt), std::min(pi, best.theta_b + dt), opts.angle_tol);
    best.phi_b = golden_section(
        [&](double ph) { return conditional_entropy(rho, {best.theta_b, ph}); },
        best.phi_b - dp, best.phi_b + dp, opts.angle_tol);
    best.phi_b = std::fmod(best.phi_b + 2.0 * pi, 2.0 * pi);
    const double moved = std::max(std::abs(best.theta_b - prev.theta_b),
                                  std::abs(std::remainder(best.phi_b - prev.phi_b, 2.0 * pi)));
    if (moved <= opts.angle_tol) break;
  }
  best_val = std::min(best_val, conditional_entropy(rho, best));

  OracleResult r;
  r.basis = best;
  r.min_conditional_entropy = best_val;
  r.entropy_a = von_neumann_entropy(partial_trace_b(rho));
  r.entropy_b = von_neumann_entropy(partial_trace_a(rho));
  r.entropy_ab = von_neumann_entropy(rho);
  r.mutual_information = r.entropy_a + r.entropy_b - r.entropy_ab;
  r.classical_correlations = r.entropy_a - best_val;
  r.discord = r.mutual_information - r.classical_correlations;
  return r;
}

OracleResult discord_measurement_oracle(const XState& state, const OracleOptions& opts) {
  return discord_measurement_oracle(state.matrix(), opts);
}

double discord_beta_g(double beta, double g) { return discord_closed(beta, xi_from_g(beta, g)); }

double discord_g_xi(double g, double xi) {
  return discord_closed(beta_from_g(g, xi, BoundaryPolicy::kPureStateLimit), xi);
}

}  // namespace mqd
