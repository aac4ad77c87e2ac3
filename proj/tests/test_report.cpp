#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "mqdiscord/coherence.hpp"
#include "mqdiscord/discord.hpp"
#include "mqdiscord/entanglement.hpp"
#include "mqdiscord/report.hpp"

using namespace mqd;
using doctest::Approx;

namespace {

std::string render(const std::vector<OutputRecord>& recs, OutputFormat f) {
  std::ostringstream os;
  write_records(os, recs, f);
  return os.str();
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::string& name) {
  const auto& c = record_columns();
  return static_cast<std::size_t>(std::find(c.begin(), c.end(), name) - c.begin());
}

}  // namespace

TEST_CASE("point resolution") {
  PointInput in;
  in.beta = 2.0;
  in.xi = 0.5;
  ResolvedPoint p = resolve_point(in);
  CHECK(p.g == Approx(0.375 * std::tanh(1.0)));
  CHECK(p.dtau == Approx(std::acos(0.5)));

  in = {};
  in.beta = 2.0;
  in.coupling = 2.0;
  in.tau = 4.0;
  p = resolve_point(in);
  CHECK(p.dtau == Approx(8.0 - 2 * std::numbers::pi));
  CHECK(p.xi == Approx(std::abs(std::cos(8.0))));

  in = {};
  in.beta = 1.0;
  in.g = 0.1;
  p = resolve_point(in);
  CHECK(p.xi == Approx(std::sqrt(1.0 - 0.2 / std::tanh(0.5))));

  in = {};
  in.g = 0.25;
  in.xi = std::sqrt(0.5);
  p = resolve_point(in);
  CHECK(std::isinf(p.beta));
  const OutputRecord r = evaluate_point(p);
  CHECK(r.discord == Approx(0.600876).epsilon(1e-6));
  CHECK(r.concurrence == Approx(std::sqrt(0.5)));
}

TEST_CASE("point resolution errors") {
  PointInput in;
  in.beta = 1.0;
  CHECK_THROWS_AS(resolve_point(in), UsageError);
  in.xi = 0.2;
  in.g = 0.1;
  CHECK_THROWS_AS(resolve_point(in), UsageError);
  in = {};
  in.beta = 1.0;
  in.coupling = 1.0;
  CHECK_THROWS_AS(resolve_point(in), UsageError);
  in = {};
  in.beta = 1.0;
  in.g = 0.4;
  CHECK_THROWS_AS(resolve_point(in), DomainError);
  in = {};
  in.beta = -1.0;
  in.xi = 0.4;
  CHECK_THROWS_AS(resolve_point(in), DomainError);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK_THROWS_AS(parse_sweep_variable("gamma"), UsageError);
}

TEST_CASE("record evaluation") {
  PointInput in;
  in.beta = 5.0;
  in.xi = 0.0;
  const OutputRecord r = evaluate_point(resolve_point(in));
  CHECK(r.in_domain);
  CHECK(r.discord == Approx(0.942033085848).epsilon(1e-11));
  CHECK(r.concurrence == Approx(0.97331818481).epsilon(1e-10));
  CHECK(r.mutual_information == Approx(r.discord + r.classical_correlations));
  CHECK(r.g_plus2 == Approx(r.g_minus2));
  CHECK(r.g_minus2 + r.g_0 + r.g_plus2 == Approx(std::tanh(2.5)));
  CHECK(r.magnetization == Approx(std::tanh(2.5)));
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(1.5e-20) == "1.5e-20");
}

TEST_CASE("sweep axis endpoints are exact") {
  const SweepAxis a{SweepVariable::kXi, 0.0, 0.4472135954999579, 7};
  CHECK(a.value(0) == 0.0);
  CHECK(a.value(6) == 0.4472135954999579);
  SweepSpec bad;
  bad.axes = {{SweepVariable::kBeta, 0.0, 1.0, 1}};
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad.axes = {};
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("sweeps reproduce reference values at their endpoints") {
  SweepSpec s;
  s.fixed.g = 0.4;
  s.axes = {{SweepVariable::kXi, 0.0, 0.4472135954999579, 11}};
  auto recs = run_sweep(s);
  REQUIRE(recs.size() == 11);
  CHECK(recs.back().discord == Approx(0.850490).epsilon(1e-5));
  CHECK(recs.back().concurrence == Approx(0.894427).epsilon(1e-5));

  s = {};
  s.fixed.beta = 2.0;
  s.axes = {{SweepVariable::kG, 0.0, g1_max(2.0), 11}};
  recs = run_sweep(s);
  CHECK(recs.back().discord == Approx(0.47293).epsilon(1e-4));
  CHECK(recs.front().discord == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("sweep marks out-of-domain points") {
  SweepSpec s;
  s.fixed.beta = 1.0;
  s.axes = {{SweepVariable::kG, 0.0, 0.4, 5}};
  const auto recs = run_sweep(s);
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].in_domain);
  CHECK_FALSE(recs[4].in_domain);
  const std::string csv = render({recs[4]}, OutputFormat::kCsv);
  CHECK(csv.substr(csv.size() - 11) == "0,,,,,,,,,\n");
  const auto js = nlohmann::json::parse(render({recs[4]}, OutputFormat::kJson));
  CHECK(js[0]["in_domain"] == false);
  CHECK(js[0]["discord"].is_null());
}

TEST_CASE("two-axis sweep ordering") {
  SweepSpec s;
  s.axes = {{SweepVariable::kBeta, 0.0, 1.0, 3}, {SweepVariable::kXi, 0.0, 1.0, 4}};
  const auto recs = run_sweep(s);
  REQUIRE(recs.size() == 12);
  CHECK(recs[1].point.xi == Approx(1.0 / 3.0));
  CHECK(recs[4].point.beta == Approx(0.5));
}

TEST_CASE("output is deterministic and well formed") {
  SweepSpec s;
  s.fixed.beta = 3.0;
  s.axes = {{SweepVariable::kXi, 0.0, 1.0, 9}};
  const std::string a = render(run_sweep(s), OutputFormat::kCsv);
  const std::string b = render(run_sweep(s), OutputFormat::kCsv);
  CHECK(a == b);
  CHECK(a.rfind("beta,xi,dtau,g,delta,t,in_domain,discord,concurrence", 0) == 0);
  const auto js = nlohmann::json::parse(render(run_sweep(s), OutputFormat::kJson));
  CHECK(js.size() == 9);
  CHECK(js[0].size() == record_columns().size());

  PointInput in;
  in.g = 0.25;
  in.xi = std::sqrt(0.5);
  const auto inf_js = nlohmann::json::parse(render({evaluate_point(resolve_point(in))}, OutputFormat::kJson));
  CHECK(inf_js[0]["beta"] == "inf");
}

TEST_CASE("figure data") {
  const auto dir = std::filesystem::temp_directory_path() / "mqdiscord_figure_test";
  std::filesystem::remove_all(dir);
  const auto written = write_figures(dir);
  CHECK(written.size() == 6);

  const auto fig1 = read_csv(dir / "fig1.csv");
  REQUIRE(fig1.size() == 1 + 51 * 51);
  const auto xi_col = column("xi"), q_col = column("discord"), c_col = column("concurrence");
  int xi_one = 0;
  for (std::size_t i = 1; i < fig1.size(); ++i) {
    if (fig1[i][xi_col] == "1") {
      ++xi_one;
      CHECK(std::abs(std::stod(fig1[i][q_col])) <= 1e-12);
      CHECK(fig1[i][c_col] == "0");
    }
  }
  CHECK(xi_one == 51);

  const auto fig3a = read_csv(dir / "fig3a.csv");
  REQUIRE(fig3a.size() == 1 + 3 * 101);
  CHECK(fig3a.back()[column("beta")] == "inf");
  CHECK(std::stod(fig3a.back()[q_col]) == Approx(1.0));
  CHECK(std::stod(fig3a.back()[c_col]) == Approx(1.0));

  std::ifstream th(dir / "thresholds.json");
  const auto j = nlohmann::json::parse(th);
  CHECK(j.is_object());

  std::ifstream first(dir / "fig2b.csv");
  std::stringstream before;
  before << first.rdbuf();
  write_figures(dir);
  std::ifstream second(dir / "fig2b.csv");
  std::stringstream after;
  after << second.rdbuf();
  CHECK(before.str() == after.str());
  std::filesystem::remove_all(dir);
}

TEST_CASE("unwritable figure directory") {
  CHECK_THROWS_AS(write_figures("/proc/nonexistent/figs"), IoError);
}

TEST_CASE("threshold JSON") {
  const auto j = nlohmann::json::parse(thresholds_json(std::nullopt, 0.1, std::nullopt));
  CHECK(j["beta2_min"].get<double>() == Approx(1.29474177906).epsilon(1e-10));
  CHECK(j["xi2_min"].get<double>() == Approx(0.805642378171).epsilon(1e-10));
}
