// pdlab: evaluate, verify and draw the disk Poisson structure and its twists.
//
// Exit codes: 0 pass, 1 fail, 2 indeterminate, 64 usage.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdlab/fibered.hpp"
#include "pdlab/render.hpp"
#include "pdlab/report.hpp"
#include "pdlab/verify/norms.hpp"
#include "pdlab/verify/suite.hpp"

namespace fs = std::filesystem;
using namespace pdlab;

namespace {

constexpr int kExitUsage = 64;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string default_out_dir() {
  if (const char* env = std::getenv("PDLAB_OUT_DIR"); env && *env) return env;
  return "pdlab-out";
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void print_jet(const RealJet& j, const std::string& label) {
  for (const auto& a : multi_indices(j.order()))
    std::cout << label << "D^(" << a.a1 << "," << a.a2 << ") = " << fmt(j[a]) << "\n";
}

verify::Resolution parse_resolution(const std::string& text) {
  verify::Resolution r;
  if (std::sscanf(text.c_str(), "%dx%d", &r.radial, &r.angular) != 2 || r.radial <= 0 || r.angular <= 0)
    throw UsageError("resolution must look like 64x256");
  return r;
}

struct EvalArgs {
  bool u = false, f = false, jet = false, locate = false;
  int phi = 0;
  std::string word;
  int order = 4;
  std::vector<double> point;
  std::string cutoff = "smooth";
};

int run_eval(const EvalArgs& a) {
  if (a.point.size() != 2) throw UsageError("eval needs a point: X Y");
  const int targets = int(a.u) + int(a.f) + int(a.phi != 0) + int(!a.word.empty());
  if (targets != 1) throw UsageError("choose exactly one of --u, --f, --phi, --word");
  const Point x{a.point[0], a.point[1]};
  const Cutoff chi(a.cutoff == "no-plateau" ? CutoffShape::no_plateau : CutoffShape::smooth);
  const Arrangement arr(chi);
  const RotationFamily family(chi);

  if (a.locate) std::cout << "location: " << describe(arr.locate(x)) << "\n";
  if (a.u || a.f) {
    const double u = arr.u_eval(x);
    std::cout << (a.u ? "u" : "f") << " = " << fmt(a.u ? u : 1.0 + u) << "\n";
    if (a.jet) {
      RealJet j = arr.u_jet(x, a.order);
      if (a.f) j.add_constant(1.0);
      print_jet(j, "");
    }
  } else if (a.phi != 0) {
    check_level(a.phi);
    const Point y = family.phi_eval(a.phi, x);
    std::cout << "phi_" << a.phi << " = " << fmt(y.x) << " " << fmt(y.y) << "\n";
    if (a.jet) {
      const auto j = family.phi_jet(a.phi, x, a.order);
      print_jet(real_part(j), "re ");
      print_jet(imag_part(j), "im ");
    }
  } else {
    const BitWord w = BitWord::parse(a.word);
    const Point y = family.word_eval(w, x);
    std::cout << "word " << w.to_string() << " = " << fmt(y.x) << " " << fmt(y.y) << "\n";
    if (a.jet) {
      const auto j = family.word_deviation_jet(w, x, a.order);
      print_jet(real_part(j), "re(dev) ");
      print_jet(imag_part(j), "im(dev) ");
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  verify::RunConfig config;
  std::string cutoff = "smooth";
  std::string schedule = "adapted";
  std::vector<std::string> formats{"json"};
  std::string bump_res = "64x64", series_res = "64x64", shell_res = "128x256";
  bool quiet = false;
};

void write_outputs(const fs::path& dir, const nlohmann::json& report, const std::set<std::string>& formats) {
  if (formats.count("json")) write_file(dir / "report.json", report.dump(2) + "\n");
  if (formats.count("csv")) {
    write_file(dir / "fits.csv", fits_csv(report));
    write_file(dir / "phi_deviation.csv", phi_deviation_csv(report));
    write_file(dir / "checks.csv", checks_csv(report));
  }
  if (formats.count("md")) write_file(dir / "summary.md", markdown_summary(report));
}

int run_verify(VerifyArgs a) {
  auto& c = a.config;
  c.cutoff = a.cutoff == "no-plateau" ? CutoffShape::no_plateau : CutoffShape::smooth;
  c.schedule = TwistSchedule(a.schedule == "literal" ? TwistSchedule::Kind::literal : TwistSchedule::Kind::adapted);
  c.formats = {a.formats.begin(), a.formats.end()};
  c.bump_resolution = parse_resolution(a.bump_res);
  c.series_resolution = parse_resolution(a.series_res);
  c.shell_resolution = parse_resolution(a.shell_res);
  c.validate();

  const auto results = verify::run_suite(a.suite, c);
  const auto report = verify::make_report(c, results);
  const fs::path dir = c.out_dir;
  write_outputs(dir, report, c.formats);
  if (c.formats.count("svg")) write_file(dir / "arrangement.svg", render_arrangement(kMinLevel, std::min(c.n_max, 8)));

  if (!a.quiet) {
    for (const auto& r : results) {
      for (const auto& ch : r.checks)
        if (ch.gating || ch.status != verify::CheckStatus::pass)
          std::cout << r.name << "/" << ch.name << ": " << verify::to_string(ch.status)
                    << (ch.gating ? "" : " (informational)") << "\n";
      std::cout << r.name << ": " << verify::to_string(r.status()) << "\n";
    }
  }
  const auto status = verify::overall_status(results);
  std::cout << "overall: " << verify::to_string(status) << "\n";
  return verify::exit_code(status);
}

int run_render(const std::string& target, int n_min, int n_max, int resolution, std::string output,
               const std::string& out_dir) {
  std::string svg;
  std::string stem = target;
  if (target == "arrangement") {
    svg = render_arrangement(n_min, n_max);
  } else if (target == "annuli") {
    svg = render_annuli(n_min, n_max);
  } else if (target == "field-heatmap" || target == "heatmap") {
    svg = render_heatmap(Arrangement{}, resolution);
    stem = "field-heatmap";
  } else if (target.rfind("path:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(target.substr(5));
    } catch (const std::exception&) {
      throw UsageError("path target must look like path:4");
    }
    svg = render_path(Arrangement{}, n);
    stem = "path-" + std::to_string(n);
  } else {
    throw UsageError("unknown render target: " + target);
  }
  if (output.empty()) output = (fs::path(out_dir) / (stem + ".svg")).string();
  if (output == "-") {
    std::cout << svg;
  } else {
    write_file(output, svg);
    std::cout << output << "\n";
  }
  return 0;
}

int run_report(const std::vector<std::string>& formats, std::string input, const std::string& out_dir) {
  if (input.empty()) input = (fs::path(out_dir) / "report.json").string();
  std::ifstream in(input);
  if (!in) {
    std::cerr << "pdlab: no verify report at " << input << "; run `pdlab verify` first\n";
    return 1;
  }
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "pdlab: cannot parse " << input << ": " << e.what() << "\n";
    return 1;
  }
  validate_report(report);
  const std::set<std::string> fs_set(formats.begin(), formats.end());
  write_outputs(out_dir, report, fs_set);
  for (const auto& f : fs_set) std::cout << "wrote " << f << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and sampled checks for a Poisson structure on the disk"};
  app.require_subcommand(1);
  std::string out_dir = default_out_dir();
  unsigned threads = 0;
  app.add_option("--out-dir", out_dir, "Output directory (env PDLAB_OUT_DIR)");
  app.add_option("--threads", threads, "Worker threads (env PDLAB_THREADS)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate u, f = 1 + u, phi_n or a word at a point");
  eval->add_flag("--u", ev.u, "Bivector coefficient u");
  eval->add_flag("--f", ev.f, "Leaf density f = 1 + u");
  eval->add_option("--phi", ev.phi, "Twist level n");
  eval->add_option("--word", ev.word, "Word start:bits, e.g. 4:1011");
  eval->add_flag("--jet", ev.jet, "Also print the jet");
  eval->add_flag("--locate", ev.locate, "Also print the support location");
  eval->add_option("--order", ev.order, "Jet order")->check(CLI::Range(0, kDefaultMaxJetOrder));
  eval->add_option("--cutoff", ev.cutoff)->check(CLI::IsMember({"smooth", "no-plateau"}))->group("");
  eval->add_option("point", ev.point, "X Y")->expected(2);

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run verification suites and write reports");
  ver->add_option("suite", va.suite, "geometry, norms, invariance, obstruction, fibered or all")
      ->check(CLI::IsMember({"geometry", "norms", "invariance", "obstruction", "fibered", "all"}));
  ver->add_option("--n-max", va.config.n_max, "Largest level")->check(CLI::Range(kMinLevel, kMaxLevel));
  ver->add_option("--order", va.config.jet_order, "Largest norm order k")->check(CLI::Range(0, kDefaultMaxJetOrder));
  ver->add_option("--gated-order", va.config.gated_order, "Fits up to this k decide pass/fail");
  ver->add_option("--precision-bits", va.config.precision_bits, "Precision cap for predicates");
  ver->add_option("--seed", va.config.seed, "Sampling seed");
  ver->add_option("--samples", va.config.invariance_samples, "Invariance samples per level");
  ver->add_option("--fibered-samples", va.config.fibered_samples, "Samples per level for f-invariance");
  ver->add_option("--word-pairs", va.config.word_pairs, "Random word pairs");
  ver->add_option("--format", va.formats, "json, csv, md, svg")->delimiter(',');
  ver->add_option("--bump-res", va.bump_res, "Bump disk grid RxA");
  ver->add_option("--series-res", va.series_res, "Series disk grid RxA");
  ver->add_option("--shell-res", va.shell_res, "Twist shell grid RxA");
  ver->add_option("--schedule", va.schedule, "Twist slope schedule")->check(CLI::IsMember({"adapted", "literal"}));
  ver->add_option("--cutoff", va.cutoff)->check(CLI::IsMember({"smooth", "no-plateau"}))->group("");
  ver->add_flag("--quiet", va.quiet, "Only print the overall status");

  std::string target;
  int n_min = kMinLevel, n_max = 6, resolution = 128;
  std::string output;
  auto* ren = app.add_subcommand("render", "Write an SVG drawing");
  ren->add_option("target", target, "arrangement, annuli, field-heatmap or path:N")->required();
  ren->add_option("--n-min", n_min, "Smallest level");
  ren->add_option("--n-max", n_max, "Largest level");
  ren->add_option("--resolution", resolution, "Heatmap cells per side");
  ren->add_option("-o,--output", output, "Output file, - for stdout");

  std::vector<std::string> report_formats{"json", "csv", "md"};
  std::string input;
  auto* rep = app.add_subcommand("report", "Rewrite a verify report as json, csv and md");
  rep->add_option("--format", report_formats, "json, csv, md")->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "md"}));
  rep->add_option("--in", input, "Report to read (default OUT_DIR/report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (threads > 0) verify::set_thread_count(threads);
  try {
    if (*eval) return run_eval(ev);
    if (*ver) {
      va.config.out_dir = out_dir;
      return run_verify(va);
    }
    if (*ren) return run_render(target, n_min, n_max, resolution, output, out_dir);
    if (*rep) return run_report(report_formats, input, out_dir);
  } catch (const UsageError& e) {
    std::cerr << "pdlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IndeterminateError& e) {
    std::cerr << "pdlab: indeterminate: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pdlab: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
