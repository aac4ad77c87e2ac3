#include "mqdiscord/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mqdiscord/coherence.hpp"
#include "mqdiscord/discord.hpp"
#include "mqdiscord/entanglement.hpp"

namespace mqd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using ordered_json = nlohmann::ordered_json;

int count_fixed(const PointInput& in) {
  if (in.coupling.has_value() != in.tau.has_value()) {
    throw UsageError("--coupling and --tau must be given together");
  }
  if (in.xi && in.tau) throw UsageError("give either --xi or --coupling/--tau, not both");
  return static_cast<int>(in.beta.has_value()) + static_cast<int>(in.xi || in.tau) +
         static_cast<int>(in.g.has_value());
}

void require_two(const PointInput& in) {
  if (count_fixed(in) != 2) {
    throw UsageError(
        "exactly two of --beta, --xi (or --coupling with --tau), --g are required; admissible "
        "ranges: beta >= 0, 0 <= xi <= 1, 0 <= G <= tanh(beta/2)/2 at fixed beta, "
        "0 <= G <= (1 - xi^2)/2 at fixed xi");
  }
}

// Rounded to the 12 significant digits that appear in CSV output.
ordered_json json_number(double x) {
  if (std::isnan(x)) return nullptr;
  if (!std::isfinite(x)) return format_number(x);
  return std::stod(format_number(x));
}

std::vector<double> record_values(const OutputRecord& r) {
  const auto& p = r.point;
  const double m = r.in_domain ? 1.0 : 0.0;
  if (!r.in_domain) {
    return {p.beta, p.xi, p.dtau, p.g, p.delta, p.t, m, kNaN, kNaN, kNaN, kNaN, kNaN, kNaN,
            kNaN,   kNaN, kNaN};
  }
  return {p.beta,
          p.xi,
          p.dtau,
          p.g,
          p.delta,
          p.t,
          m,
          r.discord,
          r.concurrence,
          r.mutual_information,
          r.classical_correlations,
          r.entropy_a,
          r.g_minus2,
          r.g_0,
          r.g_plus2,
          r.magnetization};
}

std::vector<double> linspace_values(const SweepAxis& axis) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(axis.count));
  for (int i = 0; i < axis.count; ++i) v.push_back(axis.value(i));
  return v;
}

void set_variable(PointInput& p, SweepVariable var, double v) {
  switch (var) {
    case SweepVariable::kBeta: p.beta = v; break;
    case SweepVariable::kXi: p.xi = v; break;
    case SweepVariable::kG: p.g = v; break;
    case SweepVariable::kTau:
      p.tau = v;
      if (!p.coupling) p.coupling = 1.0;
      break;
    case SweepVariable::kT: p.t = v; break;
  }
}

std::vector<OutputRecord> slice_sweep(SweepVariable var, double start, double stop, int count,
                                      const PointInput& fixed) {
  SweepSpec spec;
  spec.axes.push_back({var, start, stop, count});
  spec.fixed = fixed;
  return run_sweep(spec);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << content;
  os.flush();
  if (!os) throw IoError("failed writing " + path.string());
}

ordered_json array_of(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(json_number(x));
  return a;
}

}  // namespace

ResolvedPoint resolve_point(const PointInput& in) {
  require_two(in);
  ResolvedPoint r;
  r.delta = in.delta;
  r.t = in.t;
  if (!std::isfinite(in.delta) || !std::isfinite(in.t)) throw DomainError("--delta and --t must be finite");

  std::optional<double> xi = in.xi;
  std::optional<double> dtau;
  if (in.tau) {
    const double phase = *in.coupling * *in.tau;
    if (!std::isfinite(phase)) throw DomainError("--coupling and --tau must be finite");
    double wrapped = std::fmod(phase, kTwoPi);
    if (wrapped < 0.0) wrapped += kTwoPi;
    dtau = wrapped;
    xi = std::min(1.0, std::abs(std::cos(phase)));
  }

  if (in.beta && xi) {
    require_beta_xi(*in.beta, *xi);
    r.beta = *in.beta;
    r.xi = *xi;
    r.g = g2_closed(r.beta, r.xi);
  } else if (in.beta && in.g) {
    r.beta = *in.beta;
    r.g = *in.g;
    r.xi = xi_from_g(r.beta, r.g);
  } else {
    r.xi = *xi;
    r.g = *in.g;
    r.beta = beta_from_g(r.g, r.xi, BoundaryPolicy::kPureStateLimit);
  }
  r.dtau = dtau ? *dtau : std::acos(r.xi);
  return r;
}

const std::vector<std::string>& record_columns() {
  static const std::vector<std::string> cols{
      "beta",      "xi",          "dtau",    "g",       "delta",        "t",
      "in_domain", "discord",     "concurrence", "mutual_information", "classical_correlations",
      "entropy_a", "g_minus2",    "g_0",     "g_plus2", "magnetization"};
  return cols;
}

OutputRecord evaluate_point(const ResolvedPoint& p) {
  OutputRecord r;
  r.point = p;
  const CorrelationReport c = correlations(p.beta, p.xi);
  r.discord = c.discord;
  r.mutual_information = c.mutual_information;
  r.classical_correlations = c.classical_correlations;
  r.entropy_a = c.entropy_a;
  r.concurrence = concurrence_beta_xi(p.beta, p.xi);

  DimerParams params;
  params.beta = p.beta;
  params.coupling_D = 1.0;
  params.tau = p.dtau;
  params.delta = p.delta;
  params.t_evolution = p.t;
  const CoherenceSpectrum s = coherence_spectrum(params);
  r.g_minus2 = s.g_minus2;
  r.g_0 = s.g_0;
  r.g_plus2 = s.g_plus2;
  r.magnetization = magnetization(params);
  return r;
}

OutputRecord out_of_domain_record(const PointInput& in) {
  OutputRecord r;
  r.in_domain = false;
  r.point.beta = in.beta.value_or(kNaN);
  r.point.xi = in.xi.value_or(kNaN);
  r.point.g = in.g.value_or(kNaN);
  r.point.dtau = in.tau ? in.coupling.value_or(1.0) * *in.tau : kNaN;
  r.point.delta = in.delta;
  r.point.t = in.t;
  return r;
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "beta") return SweepVariable::kBeta;
  if (name == "xi") return SweepVariable::kXi;
  if (name == "g") return SweepVariable::kG;
  if (name == "tau") return SweepVariable::kTau;
  if (name == "t") return SweepVariable::kT;
  throw UsageError("unknown sweep variable '" + name + "' (expected beta, xi, g, tau or t)");
}

std::string to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kBeta: return "beta";
    case SweepVariable::kXi: return "xi";
    case SweepVariable::kG: return "g";
    case SweepVariable::kTau: return "tau";
    case SweepVariable::kT: return "t";
  }
  return "?";
}

double SweepAxis::value(int i) const {
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw UsageError("a sweep takes one or two variables");
  PointInput probe = fixed;
  for (const auto& a : axes) {
    if (a.count < 2) throw UsageError("--count must be >= 2");
    if (!(a.start < a.stop)) throw UsageError("--start must be below --stop");
    const bool already = [&] {
      switch (a.variable) {
        case SweepVariable::kBeta: return probe.beta.has_value();
        case SweepVariable::kXi: return probe.xi.has_value();
        case SweepVariable::kG: return probe.g.has_value();
        case SweepVariable::kTau: return probe.tau.has_value();
        case SweepVariable::kT: return false;
      }
      return false;
    }();
    if (already) throw UsageError("sweep variable " + to_string(a.variable) + " is also fixed");
    set_variable(probe, a.variable, a.start);
  }
  if (axes.size() == 2 && axes[0].variable == axes[1].variable) {
    throw UsageError("the two sweep variables must differ");
  }
  require_two(probe);
}

std::vector<OutputRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<std::vector<double>> grids;
  for (const auto& a : spec.axes) grids.push_back(linspace_values(a));

  std::vector<OutputRecord> out;
  const std::size_t outer = grids.size() == 2 ? grids[0].size() : 1;
  const std::vector<double>& inner = grids.back();
  for (std::size_t i = 0; i < outer; ++i) {
    for (double v : inner) {
      PointInput p = spec.fixed;
      if (grids.size() == 2) set_variable(p, spec.axes[0].variable, grids[0][i]);
      set_variable(p, spec.axes.back().variable, v);
      try {
        out.push_back(evaluate_point(resolve_point(p)));
      } catch (const DomainError&) {
        out.push_back(out_of_domain_record(p));
      }
    }
  }
  return out;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_records(std::ostream& os, const std::vector<OutputRecord>& records, OutputFormat fmt) {
  const auto& cols = record_columns();
  if (fmt == OutputFormat::kCsv) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : records) {
      const auto v = record_values(r);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        if (!std::isnan(v[i])) os << format_number(v[i]);
      }
      os << '\n';
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    const auto v = record_values(r);
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < v.size(); ++i) obj[cols[i]] = json_number(v[i]);
    obj["in_domain"] = r.in_domain;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

std::string thresholds_json(const std::optional<double>& beta, const std::optional<double>& g,
                            const std::optional<double>& xi) {
  if (!beta && !g && !xi) throw UsageError("thresholds needs at least one of --beta, --g, --xi");
  const ThresholdReport t = thresholds({beta, g, xi});
  ordered_json j = ordered_json::object();
  const auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = json_number(*v);
  };
  put("beta", beta);
  put("g1_max", t.g1_max);
  put("g1_min", t.g1_min);
  put("g", g);
  put("beta1_min", t.beta1_min);
  put("beta2_min", t.beta2_min);
  put("xi2_max", t.xi2_max);
  put("xi2_min", t.xi2_min);
  put("xi", xi);
  put("g2_max", t.g2_max);
  put("g2_min", t.g2_min);
  return j.dump(2) + "\n";
}

std::string figure_summary_json() {
  const std::vector<double> betas{1.0, 2.0, 5.0};
  const std::vector<double> gs{0.1, 0.25, 0.4};
  const std::vector<double> xis{0.9, std::numbers::sqrt2 / 2.0, 0.0};

  ordered_json j = ordered_json::object();
  {
    std::vector<double> gmax, q, c, gmin;
    for (double b : betas) {
      gmax.push_back(g1_max(b));
      q.push_back(discord_beta_g(b, g1_max(b)));
      c.push_back(concurrence_beta_g(b, g1_max(b)));
      gmin.push_back(g1_min(b));
    }
    j["fig2a"] = {{"beta", array_of(betas)},          {"g1_max", array_of(gmax)},
                  {"discord_at_g1_max", array_of(q)}, {"concurrence_at_g1_max", array_of(c)},
                  {"g1_min", array_of(gmin)}};
  }
  {
    std::vector<double> bmin, q, c, b2;
    for (double g : gs) {
      const double b = beta1_min(g);
      bmin.push_back(b);
      q.push_back(discord_beta_g(b, g));
      c.push_back(concurrence_beta_g(b, g));
      b2.push_back(beta2_min(g));
    }
    j["fig2b"] = {{"g", array_of(gs)},
                  {"beta1_min", array_of(bmin)},
                  {"discord_at_beta1_min", array_of(q)},
                  {"concurrence_at_beta1_min", array_of(c)},
                  {"beta2_min", array_of(b2)}};
  }
  {
    std::vector<double> gmax, q, c, gmin;
    for (double x : xis) {
      gmax.push_back(g2_max(x));
      q.push_back(discord_g_xi(g2_max(x), x));
      c.push_back(concurrence_g_xi(g2_max(x), x));
      gmin.push_back(g2_min(x));
    }
    j["fig3a"] = {{"xi", array_of(xis)},          {"g2_max", array_of(gmax)},
                  {"discord_at_g2_max", array_of(q)}, {"concurrence_at_g2_max", array_of(c)},
                  {"g2_min", array_of(gmin)}};
  }
  {
    std::vector<double> xmax, q, c, xmin;
    for (double g : gs) {
      const double x = xi2_max(g);
      xmax.push_back(x);
      q.push_back(discord_g_xi(g, x));
      c.push_back(concurrence_g_xi(g, x));
      xmin.push_back(xi2_min(g));
    }
    j["fig3b"] = {{"g", array_of(gs)},          {"xi2_max", array_of(xmax)},
                  {"discord_at_xi2_max", array_of(q)}, {"concurrence_at_xi2_max", array_of(c)},
                  {"xi2_min", array_of(xmin)}};
  }
  return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_figures(const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw IoError("cannot create output directory " + out_dir.string());
  }

  std::vector<std::pair<std::string, std::vector<OutputRecord>>> files;

  {
    SweepSpec s;
    s.axes = {{SweepVariable::kBeta, 0.0, 5.0, 51}, {SweepVariable::kXi, 0.0, 1.0, 51}};
    files.emplace_back("fig1.csv", run_sweep(s));
  }
  {
    std::vector<OutputRecord> rows;
    for (double b : {1.0, 2.0, 5.0}) {
      PointInput f;
      f.beta = b;
      auto part = slice_sweep(SweepVariable::kG, 0.0, g1_max(b), 101, f);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    files.emplace_back("fig2a.csv", std::move(rows));
  }
  {
    std::vector<OutputRecord> rows;
    for (double g : {0.1, 0.25, 0.4}) {
      PointInput f;
      f.g = g;
      auto part = slice_sweep(SweepVariable::kBeta, beta1_min(g), 6.0, 101, f);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    files.emplace_back("fig2b.csv", std::move(rows));
  }
  {
    std::vector<OutputRecord> rows;
    for (double x : {0.9, std::numbers::sqrt2 / 2.0, 0.0}) {
      PointInput f;
      f.xi = x;
      auto part = slice_sweep(SweepVariable::kG, 0.0, g2_max(x), 101, f);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    files.emplace_back("fig3a.csv", std::move(rows));
  }
  {
    std::vector<OutputRecord> rows;
    for (double g : {0.1, 0.25, 0.4}) {
      PointInput f;
      f.g = g;
      auto part = slice_sweep(SweepVariable::kXi, 0.0, xi2_max(g), 101, f);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    files.emplace_back("fig3b.csv", std::move(rows));
  }

  std::vector<std::filesystem::path> written;
  for (const auto& [name, rows] : files) {
    std::ostringstream os;
    write_records(os, rows, OutputFormat::kCsv);
    write_file(out_dir / name, os.str());
    written.push_back(out_dir / name);
  }
  write_file(out_dir / "thresholds.json", figure_summary_json());
  written.push_back(out_dir / "thresholds.json");
  return written;
}

}  // namespace mqd
