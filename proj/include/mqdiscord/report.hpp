#pragma once

// Point resolution, sweeps, record formatting and figure data used by the
// command-line tool. Output is locale independent: '.' decimal separator and
// 12 significant digits.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqdiscord/state.hpp"

namespace mqd {

/// Malformed or inconsistent command-line input (exit status 1).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Output could not be written (exit status 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw point input. Exactly two of {beta, xi, G} must be fixed, where xi may
/// also come from the pair (coupling, tau).
struct PointInput {
  std::optional<double> beta;
  std::optional<double> xi;
  std::optional<double> g;
  std::optional<double> coupling;
  std::optional<double> tau;
  double delta = 1.0;
  double t = 0.0;
};

struct ResolvedPoint {
  double beta = 0.0;  // may be +inf on the G = (1 - xi^2)/2 boundary
  double xi = 1.0;
  double dtau = 0.0;  // D tau mod 2 pi, or arccos(xi) when xi was given directly
  double g = 0.0;
  double delta = 1.0;
  double t = 0.0;
};

/// Throws UsageError for over/under-determined input and DomainError for
/// values outside the admissible region.
ResolvedPoint resolve_point(const PointInput& in);

struct OutputRecord {
  ResolvedPoint point;
  bool in_domain = true;
  double discord = 0.0;
  double concurrence = 0.0;
  double mutual_information = 0.0;
  double classical_correlations = 0.0;
  double entropy_a = 0.0;
  double g_minus2 = 0.0;
  double g_0 = 0.0;
  double g_plus2 = 0.0;
  double magnetization = 0.0;
};

const std::vector<std::string>& record_columns();

OutputRecord evaluate_point(const ResolvedPoint& p);

/// Echo of the raw input for a point that failed to resolve.
OutputRecord out_of_domain_record(const PointInput& in);

enum class SweepVariable { kBeta, kXi, kG, kTau, kT };

SweepVariable parse_sweep_variable(const std::string& name);
std::string to_string(SweepVariable v);

struct SweepAxis {
  SweepVariable variable = SweepVariable::kBeta;
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  /// Grid value i of count; the last value is exactly `stop`.
  double value(int i) const;
};

struct SweepSpec {
  std::vector<SweepAxis> axes;  // one or two axes; the last varies fastest
  PointInput fixed;

  void validate() const;
};

std::vector<OutputRecord> run_sweep(const SweepSpec& spec);

enum class OutputFormat { kCsv, kJson };
OutputFormat parse_format(const std::string& name);

/// 12 significant digits, shortest general form, "inf"/"-inf"/"nan" for
/// non-finite values.
std::string format_number(double x);

void write_records(std::ostream& os, const std::vector<OutputRecord>& records, OutputFormat fmt);

/// Threshold table for the given slices as a JSON object.
std::string thresholds_json(const std::optional<double>& beta, const std::optional<double>& g,
                            const std::optional<double>& xi);

/// Writes fig1.csv, fig2a.csv, fig2b.csv, fig3a.csv, fig3b.csv and
/// thresholds.json into `out_dir`, returning the paths written.
std::vector<std::filesystem::path> write_figures(const std::filesystem::path& out_dir);

/// Boundary values of the four figure slices.
std::string figure_summary_json();

}  // namespace mqd
