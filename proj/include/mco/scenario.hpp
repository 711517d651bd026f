#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mco/config.hpp"
#include "mco/ranking.hpp"
#include "mco/verify.hpp"

namespace mco {

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(std::vector<Violation> v)
      : std::runtime_error("scenario config validation failed"), violations(std::move(v)) {}
  std::vector<Violation> violations;
};

struct Report {
  ScenarioConfig config;
  Catalog catalog;
  std::vector<ApplicationProfile> applications;
  std::vector<ArchitectureKind> architectures;
  std::vector<MetricsRecord> matrix;
  std::vector<RankTable> rank_tables;  // schemes 1..5
  std::vector<OcmcaRankRow> ocmca_ranks;
  std::vector<verify::MetricCellCheck> ledger;
};

/// Evaluates one scenario end to end: metric matrix, the five rank
/// tables, the operator-cloud comparison where the matrix supports it,
/// and the deviation ledger against the reference dataset.
inline Report run_scenario(const ScenarioConfig& cfg) {
  Report report;
  report.config = cfg;

  std::vector<Violation> errors;
  report.catalog = build_catalog(cfg, errors);
  if (!errors.empty()) throw ScenarioError(std::move(errors));

  report.applications = selected_applications(cfg, report.catalog);
  report.architectures = cfg.architectures.empty() ? default_architectures() : cfg.architectures;
  report.matrix = evaluate_matrix(report.catalog, report.architectures, report.applications,
                                  cfg.options.ocmca_discount);

  RankOptions rank_options{cfg.options.cost_user_class};
  for (auto scheme : {RankScheme::Delay, RankScheme::Power, RankScheme::Cost,
                      RankScheme::PrivacyMobility, RankScheme::Scalability})
    report.rank_tables.push_back(rank(report.matrix, scheme, rank_options));

  bool has_ocmca = false, has_remote = false;
  for (auto k : report.architectures) {
    has_ocmca |= k == ArchitectureKind::OcmcaUnicast || k == ArchitectureKind::OcmcaMulticast;
    has_remote |= k == ArchitectureKind::RemoteCloud;
  }
  if (has_ocmca && has_remote) report.ocmca_ranks = ocmca_overall_rank(report.matrix);

  verify::VerifyResult cmp;
  verify::compare_metrics(report.matrix, cmp);
  for (auto& cell : cmp.metric_cells)
    if (cell.tol == ref::Tol::Ledgered || !cell.within) report.ledger.push_back(cell);

  return report;
}

enum class TableFormat { Csv, Markdown };

inline std::optional<TableFormat> format_from_string(const std::string& s) {
  if (s == "csv") return TableFormat::Csv;
  if (s == "markdown" || s == "md") return TableFormat::Markdown;
  return std::nullopt;
}

namespace emit {

inline std::string join(const std::vector<std::string>& cells, const char* sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

inline std::string row_csv(const std::vector<std::string>& cells) {
  return join(cells, ",") + "\n";
}

inline std::string row_markdown(const std::vector<std::string>& cells) {
  return "| " + join(cells, " | ") + " |\n";
}

inline std::string markdown_rule(size_t n) {
  std::string out = "|";
  for (size_t i = 0; i < n; ++i) out += " --- |";
  return out + "\n";
}

struct Writer {
  TableFormat format;
  std::string out;

  void header(const std::vector<std::string>& cells) {
    if (format == TableFormat::Csv) {
      out += row_csv(cells);
    } else {
      out += row_markdown(cells);
      out += markdown_rule(cells.size());
    }
  }
  void row(const std::vector<std::string>& cells) {
    out += format == TableFormat::Csv ? row_csv(cells) : row_markdown(cells);
  }
};

inline std::string provenance_for(const MetricsRecord& rec) {
  if (rec.status != CellStatus::Ok) return "";
  const char* delay_op =
      rec.architecture == ArchitectureKind::InHouse ? "in_house_delay" : "offload_delay";
  return std::string("delay:") + delay_op + ";power:offload_energy;cost:monetary_cost";
}

}  // namespace emit

/// Flat evaluation matrix. Column set is part of the tool's contract:
/// application,architecture,cost_low,cost_high,delay_ms,power,disqualified,deviation
inline std::string emit_matrix(const Report& report, TableFormat format,
                               bool provenance = false) {
  emit::Writer w{format, {}};
  std::vector<std::string> header = {"application", "architecture", "cost_low", "cost_high",
                                     "delay_ms",    "power",        "disqualified", "deviation"};
  if (provenance) header.push_back("provenance");
  w.header(header);
  for (const auto& rec : report.matrix) {
    std::vector<std::string> cells;
    cells.push_back(rec.row_label);
    cells.push_back(to_string(rec.architecture));
    if (rec.status == CellStatus::Ok) {
      cells.push_back(rec.cost.low.to_decimal(6));
      cells.push_back(rec.cost.high.to_decimal(6));
      cells.push_back(std::to_string(rec.delay.reported_ms));
      cells.push_back(rec.energy.to_decimal(6));
      cells.push_back("false");
      cells.push_back(rec.deviation_flag);
    } else if (rec.status == CellStatus::Disqualified) {
      cells.insert(cells.end(), {"", "", "", "", "true", ""});
    } else {
      cells.insert(cells.end(), {"", "", "", "", "false", "not_applicable"});
    }
    if (provenance) cells.push_back(emit::provenance_for(rec));
    w.row(cells);
  }
  return w.out;
}

/// One architecture's evaluation table in the reference layout: cost,
/// delay, power, then the qualitative attributes.
inline std::string emit_architecture_table(const Report& report, ArchitectureKind kind,
                                           TableFormat format) {
  emit::Writer w{format, {}};
  if (format == TableFormat::Markdown)
    w.out += std::string("**") + display_name(kind) + "** — device energy: " +
             energy_accounting(kind) + "\n\n";
  w.header({"application", "cost_1e6", "delay_ms", "power_1e6", "privacy", "mobility",
            "scalability", "multicast"});
  const QualitativeAttributes q = default_qualitative(kind);
  const Rational mega(1'000'000);
  for (const auto& rec : report.matrix) {
    if (rec.architecture != kind || rec.status == CellStatus::NotApplicable) continue;
    std::vector<std::string> cells{rec.row_label};
    if (rec.status == CellStatus::Disqualified) {
      cells.insert(cells.end(), {"Disqualified", "", "", "", "", "", ""});
    } else {
      std::string cost = (rec.cost.low / mega).to_decimal(6);
      if (!(rec.cost.low == rec.cost.high))
        cost += " - " + (rec.cost.high / mega).to_decimal(6);
      cells.push_back(cost);
      cells.push_back(std::to_string(rec.delay.reported_ms));
      cells.push_back((rec.energy / mega).to_decimal(6));
      cells.push_back(to_string(q.privacy));
      cells.push_back(to_string(q.mobility));
      cells.push_back(q.scalability ? to_string(*q.scalability) : "-");
      cells.push_back(q.multicast_capable ? (*q.multicast_capable ? "Yes" : "No") : "-");
    }
    w.row(cells);
  }
  return w.out;
}

inline std::string emit_rank_table(const RankTable& table, TableFormat format) {
  emit::Writer w{format, {}};
  std::vector<std::string> header{"application"};
  for (const auto& col : table.columns)
    header.push_back(format == TableFormat::Csv ? col.id : col.label);
  w.header(header);
  for (size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> cells{table.row_labels[r]};
    for (const auto& cell : table.rows[r]) cells.push_back(cell.str());
    w.row(cells);
  }
  return w.out;
}

inline std::string emit_ocmca_rank_table(const std::vector<OcmcaRankRow>& rows,
                                         TableFormat format) {
  emit::Writer w{format, {}};
  w.header({"application", "cost", "delay", "power", "qualitative"});
  for (const auto& row : rows)
    w.row({row.row_label, std::to_string(row.cost), std::to_string(row.delay),
           std::to_string(row.power), std::to_string(row.qualitative)});
  return w.out;
}

inline std::string emit_ledger(const Report& report, TableFormat format) {
  emit::Writer w{format, {}};
  w.header({"table", "application", "metric", "class", "engine", "reference", "residual",
            "note"});
  for (const auto& cell : report.ledger) {
    std::string note = cell.note;
    if (format == TableFormat::Csv)
      for (auto& ch : note)
        if (ch == ',') ch = ';';
    w.row({ref::to_string(cell.table), cell.row_label, ref::to_string(cell.metric),
           ref::to_string(cell.tol), cell.engine, cell.reference, cell.residual, note});
  }
  return w.out;
}

}  // namespace mco
