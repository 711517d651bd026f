// mco: analytical benchmark for mobile cloud offloading architectures.
//
// Subcommands evaluate the built-in catalog (or a JSON scenario config),
// rank architectures under the five grading schemes, run the multicast
// business model, trace the EPS authentication exchange, and verify the
// engines against the bundled reference dataset.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mco/aka.hpp"
#include "mco/business.hpp"
#include "mco/scenario.hpp"
#include "mco/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitReferenceMismatch = 2;

struct ConfigSource {
  std::string path;  // empty = defaults
};

int load_config(const ConfigSource& source, mco::ScenarioConfig& cfg) {
  std::string path = source.path;
  if (path.empty()) {
    if (const char* env = std::getenv("MCO_CONFIG")) path = env;
  }
  if (path.empty()) return kExitOk;  // built-in defaults

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config file: " << path << "\n";
    return kExitValidation;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
    return kExitValidation;
  }
  std::vector<mco::Violation> errors;
  try {
    cfg = mco::parse_config(j, errors);
  } catch (const nlohmann::json::exception& e) {
    errors.push_back({"$", e.what()});
  }
  if (!errors.empty()) {
    for (const auto& v : errors) std::cerr << "config error: " << v.field << ": " << v.message << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write: " << out_path << "\n";
    return kExitValidation;
  }
  out << text;
  return kExitOk;
}

int run_report(const mco::ScenarioConfig& cfg, const std::string& format_name,
               const std::string& table, const std::string& out_path, bool provenance) {
  auto format = mco::format_from_string(format_name);
  if (!format) {
    std::cerr << "error: unknown format: " << format_name << "\n";
    return kExitValidation;
  }
  try {
    const mco::Report report = mco::run_scenario(cfg);
    std::string text;
    if (table == "matrix") {
      text = mco::emit_matrix(report, *format, provenance);
    } else if (table == "ledger") {
      text = mco::emit_ledger(report, *format);
    } else if (auto kind = mco::architecture_from_string(table)) {
      text = mco::emit_architecture_table(report, *kind, *format);
    } else {
      std::cerr << "error: unknown table: " << table
                << " (expected matrix, ledger, or an architecture name)\n";
      return kExitValidation;
    }
    return write_output(text, out_path);
  } catch (const mco::ScenarioError& e) {
    for (const auto& v : e.violations)
      std::cerr << "config error: " << v.field << ": " << v.message << "\n";
    return kExitValidation;
  }
}

std::string format_units(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analytical benchmark for mobile cloud offloading architectures"};
  app.require_subcommand(1);

  // --- evaluate ---------------------------------------------------------
  auto* evaluate = app.add_subcommand("evaluate", "emit the evaluation matrix or one table");
  ConfigSource eval_cfg;
  std::string eval_format = "csv", eval_out, eval_table = "matrix";
  bool eval_provenance = false;
  evaluate->add_option("--config", eval_cfg.path, "scenario config file (JSON)");
  evaluate->add_option("--format", eval_format, "csv|markdown")->capture_default_str();
  evaluate->add_option("--out", eval_out, "write output to a file instead of stdout");
  evaluate->add_option("--table", eval_table, "matrix|ledger|<architecture>")
      ->capture_default_str();
  evaluate->add_flag("--provenance", eval_provenance,
                     "append a column naming the engine operation behind each cell");

  // --- rank ---------------------------------------------------------------
  auto* rank_cmd = app.add_subcommand("rank", "emit one grading scheme's rank table");
  ConfigSource rank_cfg;
  int scheme_number = 1;
  std::string rank_format = "markdown", rank_out, rank_user_class = "local";
  rank_cmd->add_option("--scheme", scheme_number, "grading scheme 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  rank_cmd->add_option("--config", rank_cfg.path, "scenario config file (JSON)");
  rank_cmd->add_option("--format", rank_format, "csv|markdown")->capture_default_str();
  rank_cmd->add_option("--out", rank_out, "write output to a file instead of stdout");
  rank_cmd->add_option("--cost-user-class", rank_user_class, "local|roaming")
      ->capture_default_str();

  // --- business -----------------------------------------------------------
  auto* business = app.add_subcommand("business", "periodic-update cost and revenue model");
  mco::BusinessParams params;
  params.a = 1.0;
  params.b = 1.0;
  params.c = 0.0;
  params.rq = 1000;
  params.rp = 1000;
  bool strict_table = false;
  business->add_option("--m", params.m, "multicast discount factor (>= 1)")
      ->capture_default_str();
  business->add_option("--big-m", params.big_m, "users per cell")->capture_default_str();
  business->add_option("--n", params.n, "peers in Wi-Fi range")->capture_default_str();
  business->add_option("--rq", params.rq, "request size, bits")->capture_default_str();
  business->add_option("--rp", params.rp, "update size, bits")->capture_default_str();
  business->add_option("--a", params.a, "price per uplink bit")->capture_default_str();
  business->add_option("--b", params.b, "price per unicast downlink bit")
      ->capture_default_str();
  business->add_option("--c", params.c, "price per Wi-Fi bit")->capture_default_str();
  business->add_option("--updates", params.updates_per_hour, "updates per hour")
      ->capture_default_str();
  business->add_flag("--strict-table", strict_table,
                     "reproduce the published cost formulas verbatim");

  // --- aka-trace ------------------------------------------------------------
  auto* aka_trace = app.add_subcommand("aka-trace", "run one authentication exchange");
  uint64_t seed = 0;
  std::string tamper = "none", identity = "imsi";
  aka_trace->add_option("--seed", seed, "challenge seed")->capture_default_str();
  aka_trace->add_option("--tamper", tamper, "none|mac|res|snid")->capture_default_str();
  aka_trace->add_option("--identity", identity, "imsi|guti")->capture_default_str();

  // --- verify-paper -----------------------------------------------------------
  app.add_subcommand("verify-paper",
                     "compare every engine against the bundled reference dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints the message or the requested help text
    return rc == 0 ? kExitOk : kExitValidation;
  }

  if (evaluate->parsed()) {
    mco::ScenarioConfig cfg;
    if (int rc = load_config(eval_cfg, cfg)) return rc;
    return run_report(cfg, eval_format, eval_table, eval_out, eval_provenance);
  }

  if (rank_cmd->parsed()) {
    mco::ScenarioConfig cfg;
    if (int rc = load_config(rank_cfg, cfg)) return rc;
    if (rank_user_class == "roaming")
      cfg.options.cost_user_class = mco::RankOptions::CostUserClass::Roaming;
    else if (rank_user_class != "local") {
      std::cerr << "error: unknown cost user class: " << rank_user_class << "\n";
      return kExitValidation;
    }
    auto format = mco::format_from_string(rank_format);
    if (!format) {
      std::cerr << "error: unknown format: " << rank_format << "\n";
      return kExitValidation;
    }
    try {
      const mco::Report report = mco::run_scenario(cfg);
      return write_output(
          mco::emit_rank_table(report.rank_tables[static_cast<size_t>(scheme_number - 1)],
                               *format),
          rank_out);
    } catch (const mco::ScenarioError& e) {
      for (const auto& v : e.violations)
        std::cerr << "config error: " << v.field << ": " << v.message << "\n";
      return kExitValidation;
    }
  }

  if (business->parsed()) {
    try {
      mco::validate_business(params);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitValidation;
    }
    std::ostringstream out;
    out << "hourly cost per user (financial units)\n";
    for (auto role : {mco::CostRole::Ocmca, mco::CostRole::RemoteCloud,
                      mco::CostRole::VirtualCloudDownloader, mco::CostRole::VirtualCloudSharer,
                      mco::CostRole::Cloudlet})
      out << "  " << mco::to_string(role) << ": "
          << format_units(mco::hourly_cost(role, params, strict_table)) << "\n";
    out << "  virtual_cloud_average: "
        << format_units(mco::virtual_cloud_average_cost(params, strict_table)) << "\n";
    const auto simplified = mco::simplified_comparison(params);
    out << "simplified comparison (free Wi-Fi, per unicast-hour unit)\n";
    out << "  architecture user_cost operator_revenue\n";
    for (const auto& entry : {simplified.remote_cloud, simplified.virtual_cloud,
                              simplified.cloudlet, simplified.ocmca})
      out << "  " << entry.architecture << " " << format_units(entry.user_cost) << " "
          << format_units(entry.operator_revenue) << "\n";
    std::cout << out.str();
    return kExitOk;
  }

  if (aka_trace->parsed()) {
    using namespace mco::aka;
    Key128 k{};
    for (size_t i = 0; i < k.size(); ++i) k[i] = static_cast<uint8_t>(i);
    const std::string imsi = "208930000000001";
    Hss hss;
    hss.provision({imsi, k, 0, 0x8000});
    Mme mme("20893");
    Ue ue(imsi, k);

    RunOptions options;
    options.seed = seed;
    if (tamper == "mac") options.tamper = RunOptions::Tamper::Mac;
    else if (tamper == "res") options.tamper = RunOptions::Tamper::Res;
    else if (tamper == "snid") options.tamper = RunOptions::Tamper::Snid;
    else if (tamper != "none") {
      std::cerr << "error: unknown tamper mode: " << tamper << "\n";
      return kExitValidation;
    }
    if (identity == "guti") {
      options.identity = RunOptions::Identity::Guti;
      ue.set_guti("guti-stale");  // no context at this serving network
    } else if (identity != "imsi") {
      std::cerr << "error: unknown identity mode: " << identity << "\n";
      return kExitValidation;
    }

    const AkaSession session = run_aka(ue, mme, hss, options);
    std::cout << session.dump();
    return kExitOk;
  }

  // verify-paper
  const auto result = mco::verify::verify_against_reference();
  std::cout << mco::verify::render(result);
  return result.ok() ? kExitOk : kExitReferenceMismatch;
}
