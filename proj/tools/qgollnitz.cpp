// qgollnitz: sweep one identity over parameter ranges and report failures.
//
//   qgollnitz key --i 0..3 --L 0..8 --format json --jobs 4
//   qgollnitz golden --check tests/golden/key_values.txt
//
// Exit status: 0 when every tuple passes, 1 on any mismatch, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qgollnitz/errors.hpp"
#include "qgollnitz/sweep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
  if (const char* env = std::getenv("QGOLLNITZ_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring QGOLLNITZ_JOBS=" << env << "\n";
  }
  return 1;
}

std::string identity_list() {
  std::string out;
  for (auto id : qgollnitz::all_identities()) {
    if (!out.empty()) out += ", ";
    out += qgollnitz::identity_name(id);
  }
  return out;
}

int run_golden(const std::string& check_path, const std::string& write_path) {
  if (!write_path.empty()) {
    std::ofstream out(write_path);
    if (!out) throw qgollnitz::UsageError("cannot write " + write_path);
    out << qgollnitz::write_golden(qgollnitz::default_golden_tuples());
    std::cout << "wrote " << qgollnitz::default_golden_tuples().size() << " tuples to " << write_path << "\n";
    return kExitPass;
  }
  std::ifstream in(check_path);
  if (!in) throw qgollnitz::UsageError("cannot read " + check_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto mismatches = qgollnitz::check_golden(buffer.str());
  for (const auto& m : mismatches) {
    std::cout << check_path << ":" << m.line << ": stored " << m.expected << "\n"
              << "  lhs " << m.lhs << "\n"
              << "  rhs " << m.rhs << "\n";
  }
  std::cout << (mismatches.empty() ? "golden: PASS" : "golden: FAIL") << "\n";
  return mismatches.empty() ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification sweeps for the bounded Goellnitz identities"};
  app.set_version_flag("--version", std::string(qgollnitz::engine_version()));

  std::string identity;
  app.add_option("identity", identity, "One of: " + identity_list());

  const std::vector<std::string> params = {"i", "j", "k", "l", "L", "M", "n", "s", "top", "bottom"};
  std::map<std::string, std::string> range_text;
  for (const auto& name : params) {
    app.add_option("--" + name, range_text[name], "Range a..b (or a single value) for " + name);
  }
  std::optional<int> order;
  app.add_option("--order", order, "Truncation order for series identities");
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "Worker threads (default: QGOLLNITZ_JOBS or 1)");
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for reproducible output");
  bool list = false;
  app.add_flag("--list", list, "List identities with their parameters and defaults");

  auto* golden = app.add_subcommand("golden", "Regenerate or check the golden corpus of key values");
  std::string check_path;
  std::string write_path;
  auto* check_opt = golden->add_option("--check", check_path, "Golden file to re-derive and compare");
  auto* write_opt = golden->add_option("--write", write_path, "Write the default golden corpus");
  check_opt->excludes(write_opt);
  golden->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (golden->parsed()) return run_golden(check_path, write_path);

    if (list) {
      for (auto id : qgollnitz::all_identities()) {
        std::cout << qgollnitz::identity_name(id);
        for (const auto& p : qgollnitz::identity_parameters(id)) {
          const auto r = qgollnitz::default_range(id, p);
          std::cout << " --" << p << " " << r.lo << ".." << r.hi;
        }
        if (qgollnitz::identity_uses_order(id)) std::cout << " --order " << qgollnitz::default_order(id);
        std::cout << "\n";
      }
      return kExitPass;
    }

    if (identity.empty()) throw qgollnitz::UsageError("missing identity; one of: " + identity_list());
    const auto id = qgollnitz::identity_from_name(identity);
    if (!id) throw qgollnitz::UsageError("unknown identity '" + identity + "'; one of: " + identity_list());

    qgollnitz::SweepSpec spec;
    spec.identity = *id;
    for (const auto& [name, text] : range_text) {
      if (!text.empty()) spec.ranges[name] = qgollnitz::parse_range(text);
    }
    if (order && !qgollnitz::identity_uses_order(*id)) {
      throw qgollnitz::UsageError("identity '" + identity + "' takes no --order");
    }
    spec.order = order;
    spec.jobs = jobs;
    spec.timing = !no_timing;

    const auto report = qgollnitz::run_sweep(spec);
    std::cout << qgollnitz::render_report(
        report, format == "json" ? qgollnitz::ReportFormat::Json : qgollnitz::ReportFormat::Text);
    return report.passed() ? kExitPass : kExitMismatch;
  } catch (const qgollnitz::UsageError& e) {
    std::cerr << "qgollnitz: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qgollnitz: " << e.what() << "\n";
    return kExitUsage;
  }
}
