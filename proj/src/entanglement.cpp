#include "mqdiscord/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mqdiscord/coherence.hpp"
#include "mqdiscord/discord.hpp"

namespace mqd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEdgeTol = 1e-12;

// 1 / (2 cosh^2(b/2)) = 2 sigmoid(b) sigmoid(-b)
double inv_two_cosh2_half(double beta) { return 2.0 * sigmoid(beta) * sigmoid(-beta); }

void require_g(double g, double upper, const char* what) {
  if (std::isnan(g) || g < 0.0 || g > upper + kEdgeTol) {
    std::ostringstream os;
    os.precision(12);
    os << "G must lie in [0, " << upper << "] " << what << ", got " << g;
    throw DomainError(os.str());
  }
}

}  // namespace

double concurrence_beta_xi_raw(double beta, double xi) {
  require_beta_xi(beta, xi);
  // sinh(b) / (2 cosh^2(b/2)) = tanh(b/2)
  return std::sqrt(1.0 - xi * xi) * std::tanh(0.5 * beta) - inv_two_cosh2_half(beta);
}

double concurrence_beta_g_raw(double beta, double g) {
  require_beta_xi(beta, 0.0);
  require_g(g, g1_max(beta), "at this beta");
  return std::sqrt(2.0 * g * std::tanh(0.5 * beta)) - inv_two_cosh2_half(beta);
}

double concurrence_g_xi_raw(double g, double xi) {
  require_beta_xi(0.0, xi);
  const double x2 = 1.0 - xi * xi;
  if (x2 == 0.0) {
    if (g != 0.0) throw DomainError("at xi = 1 only G = 0 is attainable");
    return -0.5;
  }
  require_g(g, 0.5 * x2, "at this xi");
  return 2.0 * g / std::sqrt(x2) + 2.0 * g * g / (x2 * x2) - 0.5;
}

double concurrence_beta_xi(double beta, double xi) {
  return std::max(0.0, concurrence_beta_xi_raw(beta, xi));
}
double concurrence_beta_g(double beta, double g) {
  return std::max(0.0, concurrence_beta_g_raw(beta, g));
}
double concurrence_g_xi(double g, double xi) {
  return std::max(0.0, concurrence_g_xi_raw(g, xi));
}

double concurrence_oracle(const DensityMatrix4& rho) {
  DensityMatrix4 yy = DensityMatrix4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const DensityMatrix4 flipped = yy * rho.conjugate() * yy;
  const DensityMatrix4 r = rho * flipped;
  Eigen::ComplexEigenSolver<DensityMatrix4> es(r, false);
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double solve_unique_root(const std::function<double(double)>& f, double lo, double hi,
                         int scan_points, double residual_tol) {
  int changes = 0;
  double a = lo, b = hi;
  double prev_x = lo;
  bool prev_neg = f(lo) < 0.0;
  for (int i = 1; i <= scan_points; ++i) {
    const double x = lo + (hi - lo) * i / scan_points;
    const bool neg = f(x) < 0.0;
    if (neg != prev_neg) {
      ++changes;
      a = prev_x;
      b = x;
    }
    prev_x = x;
    prev_neg = neg;
  }
  if (changes != 1) {
    std::ostringstream os;
    os << "expected exactly one sign change on (" << lo << ", " << hi << "], found " << changes;
    throw std::logic_error(os.str());
  }
  double fa = f(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  const double fb = f(b);
  const double root = std::abs(fa) <= std::abs(fb) ? a : b;
  const double residual = std::min(std::abs(fa), std::abs(fb));
  if (residual > residual_tol) {
    std::ostringstream os;
    os << "bisection residual " << residual << " above " << residual_tol;
    throw std::logic_error(os.str());
  }
  return root;
}

double g1_min(double beta) {
  require_beta_xi(beta, 0.0);
  if (beta == 0.0) return kInf;
  // 4 sinh b cosh^2(b/2) = 2 sinh b (1 + cosh b)
  return 1.0 / (2.0 * std::sinh(beta) * (1.0 + std::cosh(beta)));
}

double beta1_min(double g) {
  require_g(g, 0.5, "for any beta");
  if (g >= 0.5) return kInf;
  return 2.0 * std::atanh(2.0 * g);
}

double beta2_quartic_root(double g) {
  require_g(g, 0.5, "for any beta");
  if (g == 0.0) return 1.0;
  const double r = std::sqrt(2.0 * g);
  return solve_unique_root([r](double x) { return 0.5 * x * x * x * x + r * x - 0.5; }, 0.0, 1.0);
}

double beta2_min(double g) {
  const double x = beta2_quartic_root(g);
  if (x >= 1.0) return kInf;
  return 2.0 * std::atanh(x * x);
}

double g2_max(double xi) {
  require_beta_xi(0.0, xi);
  return 0.5 * (1.0 - xi * xi);
}

double g2_min(double xi) {
  require_beta_xi(0.0, xi);
  const double x2 = 1.0 - xi * xi;
  return 0.5 * (x2 * std::sqrt(2.0 - xi * xi) - x2 * std::sqrt(x2));
}

double xi2_max(double g) {
  require_g(g, 0.5, "for any xi");
  return std::sqrt(std::max(0.0, 1.0 - 2.0 * g));
}

std::optional<double> xi2_quartic_root(double g) {
  require_g(g, 0.5, "for any xi");
  if (g == 0.0) return std::nullopt;
  const auto f = [g](double x) { return 0.5 * x * x * x * x - 2.0 * g * x * x * x - 2.0 * g * g; };
  // f(0) < 0 and f is increasing past its single turning point, so a root in
  // (0, 1] exists iff f(1) >= 0.
  if (f(1.0) < 0.0) return std::nullopt;
  return solve_unique_root(f, 0.0, 1.0);
}

double xi2_min(double g) {
  require_g(g, 0.5, "for any xi");
  if (g == 0.0) return 1.0;  // no coherence: the positivity interval (1, 1] is empty
  const auto x = xi2_quartic_root(g);
  if (!x) return 0.0;
  return std::sqrt(std::max(0.0, 1.0 - *x * *x));
}

ThresholdReport thresholds(const ThresholdQuery& q) {
  ThresholdReport r;
  if (q.beta) {
    r.g1_max = g1_max(*q.beta);
    r.g1_min = g1_min(*q.beta);
  }
  if (q.g) {
    r.beta1_min = beta1_min(*q.g);
    r.beta2_min = beta2_min(*q.g);
    r.xi2_max = xi2_max(*q.g);
    r.xi2_min = xi2_min(*q.g);
  }
  if (q.xi) {
    r.g2_max = g2_max(*q.xi);
    r.g2_min = g2_min(*q.xi);
  }
  return r;
}

}  // namespace mqd
