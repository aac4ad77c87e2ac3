#include "mqdiscord/coherence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mqd {

namespace {

constexpr double kEdgeTol = 1e-12;

}  // namespace

int iz_weight(int basis_index) {
  static constexpr std::array<int, 4> w{1, 0, 0, -1};
  return w.at(static_cast<std::size_t>(basis_index));
}

const DensityMatrix4& CoherenceParts::order(int k) const {
  if (k < -2 || k > 2) {
    std::ostringstream os;
    os << "coherence order must lie in [-2, 2] for a dimer, got " << k;
    throw DomainError(os.str());
  }
  return parts[static_cast<std::size_t>(k + 2)];
}

DensityMatrix4 CoherenceParts::sum() const {
  DensityMatrix4 s = DensityMatrix4::Zero();
  for (const auto& p : parts) s += p;
  return s;
}

CoherenceParts coherence_decompose(const DensityMatrix4& m) {
  CoherenceParts out;
  for (auto& p : out.parts) p.setZero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int k = iz_weight(i) - iz_weight(j);
      out.parts[static_cast<std::size_t>(k + 2)](i, j) = m(i, j);
    }
  }
  return out;
}

DensityMatrix4 iz_rotate(const DensityMatrix4& m, double delta_t) {
  DensityMatrix4 out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double phase = -(iz_weight(i) - iz_weight(j)) * delta_t;
      out(i, j) = m(i, j) * std::polar(1.0, phase);
    }
  }
  return out;
}

double intensity(int k, const DimerParams& params) {
  if (k != -2 && k != 0 && k != 2) {
    std::ostringstream os;
    os << "intensity order must be one of {-2, 0, 2}, got " << k;
    throw DomainError(os.str());
  }
  params.validate();
  const DensityMatrix4 rho = evolved_state(params.beta, params.dtau()).matrix();
  const DensityMatrix4 ht = heat_operator(params);
  const CoherenceParts rp = coherence_decompose(rho);
  const CoherenceParts hp = coherence_decompose(ht);
  return (rp.order(k) * hp.order(-k)).trace().real();
}

CoherenceSpectrum coherence_spectrum(const DimerParams& params) {
  CoherenceSpectrum s;
  s.g_minus2 = intensity(-2, params);
  s.g_0 = intensity(0, params);
  s.g_plus2 = intensity(2, params);
  s.tau = params.tau;
  s.beta = params.beta;
  return s;
}

double g1_max(double beta) {
  if (std::isnan(beta) || beta < 0.0) throw DomainError("beta must lie in [0, +inf]");
  return 0.5 * std::tanh(0.5 * beta);
}

double g2_closed(double beta, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
  return g1_max(beta) * (1.0 - xi * xi);
}

cplx magnetization_trace(const DimerParams& params) {
  params.validate();
  const DensityMatrix4 rho = evolved_state(params.beta, params.dtau()).matrix();
  const DensityMatrix4 ht = heat_operator(params);
  const double dt = params.delta * params.t_evolution;
  // The I_z propagator is diagonal; iz_rotate applies it elementwise.
  return (iz_rotate(rho, dt) * ht).trace();
}

cplx magnetization_fourier(const DimerParams& params) {
  const CoherenceSpectrum s = coherence_spectrum(params);
  const double dt = params.delta * params.t_evolution;
  return std::polar(s.g_minus2, 2.0 * dt) + s.g_0 + std::polar(s.g_plus2, -2.0 * dt);
}

double magnetization(const DimerParams& params) { return magnetization_trace(params).real(); }

double xi_from_g(double beta, double g) {
  const double gmax = g1_max(beta);
  const double radicand = gmax > 0.0 ? 1.0 - g / gmax : (g == 0.0 ? 1.0 : -1.0);
  if (std::isnan(g) || g < 0.0 || radicand < -kEdgeTol) {
    std::ostringstream os;
    os.precision(12);
    os << "G must lie in [0, " << gmax << "] at beta = " << beta << ", got " << g;
    throw DomainError(os.str());
  }
  // beta = 0 with G = 0 leaves xi free; 1 is returned as the coherence-free representative.
  return radicand <= 0.0 ? 0.0 : std::sqrt(radicand);
}

double beta_from_g(double g, double xi, BoundaryPolicy policy) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw DomainError("xi must lie in [0, 1]");
  const double gmax = 0.5 * (1.0 - xi * xi);
  if (std::isnan(g) || g < 0.0) throw DomainError("G must be >= 0");
  if (gmax == 0.0) {
    throw DomainError("at xi = 1 the coherence vanishes for every beta; beta is undetermined");
  }
  const double arg = g / gmax;
  if (arg >= 1.0 - kEdgeTol) {
    if (policy == BoundaryPolicy::kPureStateLimit && arg <= 1.0 + kEdgeTol) {
      return std::numeric_limits<double>::infinity();
    }
    std::ostringstream os;
    os.precision(12);
    os << "G must lie in [0, " << gmax << ") at xi = " << xi << ", got " << g;
    throw DomainError(os.str());
  }
  return 2.0 * std::atanh(arg);
}

}  // namespace mqd
