#include <doctest.h>

#include <sstream>

#include "pdlab/render.hpp"
#include "pdlab/report.hpp"
#include "pdlab/verify/suite.hpp"

using namespace pdlab;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

verify::RunConfig small_config() {
  verify::RunConfig c;
  c.n_max = 8;
  c.jet_order = 2;
  c.bump_resolution = {8, 8};
  c.series_resolution = {8, 8};
  c.shell_resolution = {8, 32};
  c.invariance_samples = 500;
  c.fibered_samples = 500;
  c.word_pairs = 5;
  return c;
}

const nlohmann::json& small_report() {
  static const nlohmann::json report = [] {
    const auto config = small_config();
    std::vector<verify::SuiteResult> results{verify::run_geometry(config), verify::run_norms(config)};
    return verify::make_report(config, results);
  }();
  return report;
}

}  // namespace

TEST_CASE("arrangement drawing has one circle per disk") {
  const std::string svg = render_arrangement(4, 6);
  CHECK(count(svg, "<circle class=\"disk\"") == 16 + 32 + 64);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg == render_arrangement(4, 6));
  const std::string empty = render_arrangement(7, 6);
  CHECK(count(empty, "<circle") == 0);
  CHECK(empty.find("class=\"axes\"") != std::string::npos);
  CHECK_THROWS_AS(render_arrangement(4, kMaxRenderLevel + 1), UsageError);
}

TEST_CASE("annulus rings keep exact bounds") {
  const std::string svg = render_annuli(4, 5);
  CHECK(count(svg, "class=\"ring E\"") == 2);
  CHECK(count(svg, "class=\"ring F\"") == 2);
  CHECK(svg.find("data-inner=\"15/64\" data-outer=\"17/64\"") != std::string::npos);
  CHECK(svg.find("data-inner=\"7/32\" data-outer=\"9/32\"") != std::string::npos);
}

TEST_CASE("path drawing marks the obstruction witness") {
  const Arrangement arr;
  const std::string svg = render_path(arr, 4);
  CHECK(count(svg, "class=\"witness\"") == 1);
  CHECK(svg.find("data-verdict=\"leaves_rank_two\"") != std::string::npos);
  CHECK(count(svg, "<polyline class=\"path\"") == 1);
}

TEST_CASE("heatmap is deterministic") {
  const Arrangement arr;
  CHECK(render_heatmap(arr, 16) == render_heatmap(arr, 16));
}

TEST_CASE("report validation") {
  CHECK_NOTHROW(validate_report(small_report()));
  CHECK_THROWS_AS(validate_report(nlohmann::json::array()), UsageError);
  auto wrong = small_report();
  wrong["schema_version"] = verify::kSchemaVersion + 1;
  CHECK_THROWS_AS(validate_report(wrong), UsageError);
  const auto round = nlohmann::json::parse(small_report().dump(2));
  CHECK(round == small_report());
}

TEST_CASE("csv headers and row shapes") {
  const auto& report = small_report();
  const auto fits = lines(fits_csv(report));
  REQUIRE(fits.size() > 1);
  CHECK(fits[0] == "family,k,level,parameter,measured,shape,ratio");
  for (std::size_t i = 1; i < fits.size(); ++i) CHECK(count(fits[i], ",") == 6);

  const auto phi = lines(phi_deviation_csv(report));
  CHECK(phi[0] == "n,k,measured,shape,ratio");
  // levels 4..8, orders 0..2
  CHECK(phi.size() == 1 + 5 * 3);

  const auto checks = lines(checks_csv(report));
  CHECK(checks[0] == "suite,check,status,gating");
  std::size_t expected = 0;
  for (const auto& [suite, body] : report["suites"].items()) expected += body["checks"].size();
  CHECK(checks.size() == 1 + expected);
}

TEST_CASE("markdown summary lists statements and checks") {
  const std::string md = markdown_summary(small_report());
  CHECK(md.find("Overall status: **" + small_report()["status"].get<std::string>() + "**") != std::string::npos);
  CHECK(md.find("| Annuli are disjoint and contain their disks | pass |") != std::string::npos);
  CHECK(md.find("| Neighboring disks are separated | pass |") != std::string::npos);
  CHECK(md.find("| Twists preserve the bivector | not run |") != std::string::npos);
  CHECK(md.find("## Fitted constants") != std::string::npos);
  CHECK(md.find("| geometry | twist_certificate | pass |") != std::string::npos);
}
