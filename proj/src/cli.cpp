#include "superorb/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "superorb/datum.hpp"
#include "superorb/galois.hpp"
#include "superorb/orbifold.hpp"
#include "superorb/qseries.hpp"

namespace superorb {

namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// timestamp goes first so reports stay byte-comparable after stripping it
nlohmann::ordered_json stamped(const nlohmann::ordered_json& body, const RunConfig& cfg) {
  if (cfg.no_timestamp) return body;
  nlohmann::ordered_json j;
  j["generated_at"] = utc_now();
  for (const auto& item : body.items()) j[item.key()] = item.value();
  return j;
}

std::string render(const nlohmann::ordered_json& body, const std::string& table,
                   const RunConfig& cfg) {
  if (cfg.format == "table") {
    std::string head = cfg.no_timestamp ? "" : "generated at: " + utc_now() + "\n";
    return head + table;
  }
  return stamped(body, cfg).dump(2) + "\n";
}

int emit(const std::string& text, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.output.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) {
    err << "cannot open output path: " << cfg.output << "\n";
    return 1;
  }
  f << text;
  return f ? 0 : 1;
}

std::unique_ptr<TwistedDatum> load_datum(const RunConfig& cfg, std::ostream& err) {
  try {
    return std::make_unique<TwistedDatum>(TwistedDatum::load(cfg.input));
  } catch (const std::exception& e) {
    err << cfg.input << ": " << e.what() << "\n";
    return nullptr;
  }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dp = load_datum(cfg, err);
  if (!dp) return 1;
  const TwistedDatum& d = *dp;
  std::vector<std::string> counts = d.count_report();
  nlohmann::ordered_json j;
  j["group_order"] = d.group().order();
  j["sigma"] = d.sigma();
  j["modules"] = d.modules().size();
  j["stored_blocks"] = d.stored_blocks().size();
  j["counts"] = counts;
  j["pass"] = counts.empty();
  std::ostringstream tab;
  tab << "group order " << d.group().order() << ", sigma " << d.sigma() << ", "
      << d.modules().size() << " modules, " << d.stored_blocks().size() << " stored blocks\n";
  if (counts.empty()) {
    tab << "counts: pass\n";
  } else {
    for (const auto& line : counts) tab << "counts: FAIL " << line << "\n";
  }
  for (const auto& line : counts) err << "count identity failed: " << line << "\n";
  int rc = emit(render(j, tab.str(), cfg), cfg, out, err);
  if (rc != 0) return rc;
  return counts.empty() ? 0 : 1;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dp = load_datum(cfg, err);
  if (!dp) return 1;
  const TwistedDatum& d = *dp;
  OrbifoldResult r;
  try {
    r = compute(d);
  } catch (const std::exception& e) {
    err << cfg.input << ": " << e.what() << "\n";
    return 1;
  }
  bool all_pass = true;
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    all_pass = false;
    err << (cfg.checks == "warn" ? "check warning: " : "check failed: ") << c.name << ": "
        << c.witness << "\n";
  }
  int rc = emit(render(report_json(r, d), report_table(r, d), cfg), cfg, out, err);
  if (rc != 0) return rc;
  return all_pass || cfg.checks == "warn" ? 0 : 1;
}

int cmd_fixture(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  TwistedDatum d = make_fixture(cfg.model);
  // datum files must round-trip through load, so no timestamp wrapper
  return emit(d.to_json().dump(2) + "\n", cfg, out, err);
}

int cmd_galois(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto dp = load_datum(cfg, err);
  if (!dp) return 1;
  const TwistedDatum& d = *dp;
  try {
    return emit(render(galois_report_json(d), galois_report_table(d), cfg), cfg, out, err);
  } catch (const std::exception& e) {
    err << cfg.input << ": " << e.what() << "\n";
    return 1;
  }
}

int cmd_qdim_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> labels = qdim_labels(cfg.model);
  if (std::find(labels.begin(), labels.end(), cfg.label) == labels.end()) {
    err << "unknown label '" << cfg.label << "' for " << cfg.model << "; choose from:";
    for (const auto& l : labels) err << " " << l;
    err << "\n";
    return 2;
  }
  const std::vector<double> grid{0.2, 0.1, 0.05, 0.02};
  std::vector<double> ratios = numeric_qdim(cfg.model, cfg.label, grid);
  std::ostringstream csv;
  csv << "y,ratio\n";
  char row[64];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::snprintf(row, sizeof(row), "%.6f,%.9f\n", grid[i], ratios[i]);
    csv << row;
  }
  return emit(csv.str(), cfg, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"exact modular data of finite super orbifolds"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "report format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--checks", cfg.checks, "failed checks: strict exits 1, warn exits 0")
      ->check(CLI::IsMember({"strict", "warn"}));
  app.add_flag("--no-timestamp", cfg.no_timestamp, "suppress the report timestamp");
  app.add_option("-o,--output", cfg.output, "write the report to this path");

  auto* validate = app.add_subcommand("validate", "check the count identities of a datum file");
  validate->add_option("input", cfg.input, "datum JSON path")->required();
  auto* compute = app.add_subcommand("compute", "full orbifold modular data of a datum file");
  compute->add_option("input", cfg.input, "datum JSON path")->required();
  auto* fixture = app.add_subcommand("fixture", "emit a built-in example datum");
  fixture->add_option("model", cfg.model, "fixture name")
      ->required()
      ->check(CLI::IsMember({"fermion", "lattice_a1", "fermion_trivial_g"}));
  auto* galois = app.add_subcommand("galois", "intermediate-subalgebra lattice of a datum file");
  galois->add_option("input", cfg.input, "datum JSON path")->required();
  auto* scan = app.add_subcommand("qdim-scan", "character-ratio scan in the q-series variable");
  scan->add_option("model", cfg.model, "fixture name")
      ->required()
      ->check(CLI::IsMember({"fermion", "lattice_a1", "fermion_trivial_g"}));
  scan->add_option("label", cfg.label, "module label")->required();

  std::vector<const char*> argv;
  argv.push_back("superorb");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (validate->parsed()) cfg.subcommand = "validate";
  if (compute->parsed()) cfg.subcommand = "compute";
  if (fixture->parsed()) cfg.subcommand = "fixture";
  if (galois->parsed()) cfg.subcommand = "galois";
  if (scan->parsed()) cfg.subcommand = "qdim-scan";

  if (cfg.subcommand == "validate") return cmd_validate(cfg, out, err);
  if (cfg.subcommand == "compute") return cmd_compute(cfg, out, err);
  if (cfg.subcommand == "fixture") return cmd_fixture(cfg, out, err);
  if (cfg.subcommand == "galois") return cmd_galois(cfg, out, err);
  return cmd_qdim_scan(cfg, out, err);
}

}  // namespace superorb
