#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "mco/catalog.hpp"
#include "mco/metrics.hpp"
#include "mco/ranking.hpp"
#include "mco/reference_data.hpp"

namespace mco::verify {

struct MetricCellCheck {
  ref::Table table{ref::Table::InHouse};
  int profile{0};
  std::string row_label;
  ref::Metric metric{ref::Metric::Cost};
  ref::Tol tol{ref::Tol::Exact};
  std::string engine;
  std::string reference;
  std::string residual;
  bool within{true};  // deviating ledgered cells stay true; they are reported, not failed
  bool deviates{false};
  std::string note;
};

struct RankCellCheck {
  std::string table;  // "delay".."scalability" or "ocmca_overall"
  int profile{0};
  std::string row_label;
  std::string column;
  std::string engine;
  std::string reference;
  bool match{true};
  bool ledgered{false};
  std::string note;
};

struct FlagCheck {
  ref::Table table{ref::Table::InHouse};
  int profile{0};
  std::string expected;
  std::string engine;
  bool ok{true};
};

struct VerifyResult {
  std::vector<MetricCellCheck> metric_cells;
  std::vector<RankCellCheck> rank_cells;
  std::vector<FlagCheck> flag_checks;

  bool ok() const {
    for (const auto& c : metric_cells)
      if (!c.within) return false;
    for (const auto& c : rank_cells)
      if (!c.match && !c.ledgered) return false;
    for (const auto& c : flag_checks)
      if (!c.ok) return false;
    return true;
  }

  std::vector<const MetricCellCheck*> metric_ledger() const {
    std::vector<const MetricCellCheck*> out;
    for (const auto& c : metric_cells)
      if (c.tol == ref::Tol::Ledgered) out.push_back(&c);
    return out;
  }

  std::vector<const RankCellCheck*> rank_ledger() const {
    std::vector<const RankCellCheck*> out;
    for (const auto& c : rank_cells)
      if (c.ledgered) out.push_back(&c);
    return out;
  }
};

namespace detail {

inline Rational abs_diff(const Rational& a, long long b) {
  Rational d = a - Rational(b);
  return d < Rational(0) ? -d : d;
}

inline std::string pct_string(const Rational& diff, long long base) {
  if (base == 0) return "n/a";
  const double pct = diff.to_double() / static_cast<double>(base) * 100.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", pct);
  return buf;
}

inline ArchitectureKind kind_for(ref::Table t) {
  switch (t) {
    case ref::Table::InHouse: return ArchitectureKind::InHouse;
    case ref::Table::RemoteCloud: return ArchitectureKind::RemoteCloud;
    case ref::Table::VirtualCloud: return ArchitectureKind::VirtualCloud;
    case ref::Table::Cloudlet: return ArchitectureKind::Cloudlet;
    case ref::Table::Ocmca: return ArchitectureKind::OcmcaUnicast;
  }
  return ArchitectureKind::InHouse;
}

inline std::string cost_string(const CostRange& c) {
  if (c.low == c.high) return c.low.to_decimal(6);
  return c.low.to_decimal(6) + ".." + c.high.to_decimal(6);
}

inline std::string ref_cost_string(const ref::Row& r) {
  if (r.cost_low == r.cost_high) return std::to_string(r.cost_low);
  return std::to_string(r.cost_low) + ".." + std::to_string(r.cost_high);
}

}  // namespace detail

/// Metric-cell comparison of an evaluation matrix against the reference
/// dataset, at each cell's tolerance class. Records with no reference
/// counterpart are skipped.
inline void compare_metrics(const std::vector<MetricsRecord>& matrix, VerifyResult& out) {
  for (const auto& table : ref::metric_tables()) {
    const ArchitectureKind kind = detail::kind_for(table.id);
    for (const auto& row : table.rows) {
      const MetricsRecord* rec = nullptr;
      for (const auto& r : matrix)
        if (r.architecture == kind && r.profile_id == row.profile) rec = &r;
      if (!rec) continue;

      const char* expected = row.disqualified ? "disqualified" : "qualified";
      const char* engine_flag = rec->status == CellStatus::Disqualified ? "disqualified"
                                : rec->status == CellStatus::NotApplicable ? "not_applicable"
                                                                           : "qualified";
      out.flag_checks.push_back({table.id, row.profile, expected, engine_flag,
                                 std::string(expected) == engine_flag});
      if (row.disqualified || rec->status != CellStatus::Ok) continue;

      // cost: the range (or point value) as one cell
      {
        MetricCellCheck c;
        c.table = table.id;
        c.profile = row.profile;
        c.row_label = rec->row_label;
        c.metric = ref::Metric::Cost;
        c.tol = row.cost_tol;
        c.engine = detail::cost_string(rec->cost);
        c.reference = detail::ref_cost_string(row);
        const Rational dlow = detail::abs_diff(rec->cost.low, row.cost_low);
        const Rational dhigh = detail::abs_diff(rec->cost.high, row.cost_high);
        const Rational dmax = dlow < dhigh ? dhigh : dlow;
        c.residual = dmax.to_decimal(6);
        c.deviates = dlow > Rational(row.cost_eps) || dhigh > Rational(row.cost_eps);
        c.within = c.tol == ref::Tol::Ledgered || !c.deviates;
        c.note = row.note;
        out.metric_cells.push_back(std::move(c));
      }
      // delay: reported integer milliseconds
      {
        MetricCellCheck c;
        c.table = table.id;
        c.profile = row.profile;
        c.row_label = rec->row_label;
        c.metric = ref::Metric::Delay;
        c.tol = row.delay_tol;
        c.engine = std::to_string(rec->delay.reported_ms);
        c.reference = std::to_string(row.delay_ms);
        const long long diff = rec->delay.reported_ms > row.delay_ms
                                   ? rec->delay.reported_ms - row.delay_ms
                                   : row.delay_ms - rec->delay.reported_ms;
        c.residual = std::to_string(diff);
        const long long slack = c.tol == ref::Tol::DelayFloor2 ? 2 : 0;
        c.deviates = diff > slack;
        c.within = c.tol == ref::Tol::Ledgered || !c.deviates;
        c.note = row.note;
        out.metric_cells.push_back(std::move(c));
      }
      // power
      {
        MetricCellCheck c;
        c.table = table.id;
        c.profile = row.profile;
        c.row_label = rec->row_label;
        c.metric = ref::Metric::Power;
        c.tol = row.power_tol;
        c.engine = rec->energy.to_decimal(6);
        c.reference = std::to_string(row.power);
        const Rational diff = detail::abs_diff(rec->energy, row.power);
        c.residual = diff.to_decimal(6) + " (" + detail::pct_string(diff, row.power) + ")";
        switch (c.tol) {
          case ref::Tol::Exact:
            c.deviates = diff > Rational(row.power_eps);
            break;
          case ref::Tol::Percent10:
          case ref::Tol::Ledgered:
            c.deviates = diff * Rational(10) > Rational(row.power);
            break;
          case ref::Tol::DelayFloor2:
            c.deviates = true;  // class not meaningful for power
            break;
        }
        c.within = c.tol == ref::Tol::Ledgered || !c.deviates;
        c.note = row.note;
        out.metric_cells.push_back(std::move(c));
      }
    }
  }
}

/// Compares the engine output for the default catalog against the
/// bundled reference dataset, cell by cell, at each cell's tolerance
/// class, and recomputes the five rank tables plus the operator-cloud
/// comparison for fidelity checking.
inline VerifyResult verify_against_reference() {
  VerifyResult out;
  const Catalog cat = builtin_catalog();
  const auto architectures = std::vector<ArchitectureKind>{
      ArchitectureKind::InHouse, ArchitectureKind::RemoteCloud, ArchitectureKind::VirtualCloud,
      ArchitectureKind::Cloudlet, ArchitectureKind::OcmcaUnicast};
  const auto matrix = evaluate_matrix(cat, architectures, cat.applications);

  compare_metrics(matrix, out);

  // in-house rows beyond the standalone-capable profiles must be
  // reported as not rated
  for (const auto& app : cat.applications) {
    if (ref::find_row(ref::Table::InHouse, app.id)) continue;
    for (const auto& r : matrix)
      if (r.architecture == ArchitectureKind::InHouse && r.profile_id == app.id)
        out.flag_checks.push_back({ref::Table::InHouse, app.id, "not_applicable",
                                   r.status == CellStatus::NotApplicable ? "not_applicable"
                                                                         : "qualified",
                                   r.status == CellStatus::NotApplicable});
  }

  // --- rank fidelity -----------------------------------------------------
  std::vector<MetricsRecord> classic;
  for (const auto& r : matrix)
    if (r.architecture != ArchitectureKind::OcmcaUnicast &&
        r.architecture != ArchitectureKind::OcmcaMulticast)
      classic.push_back(r);

  for (const auto& ref_table : ref::rank_tables()) {
    const RankTable engine_table = rank(classic, ref_table.scheme);
    for (const auto& ref_row : ref_table.rows) {
      for (size_t c = 0; c < ref_table.columns.size(); ++c) {
        RankCellCheck check;
        check.table = to_string(ref_table.scheme);
        check.profile = ref_row.profile;
        check.column = ref_table.columns[c];
        const RankCell* cell = engine_table.cell(ref_row.profile, check.column);
        check.engine = cell ? cell->str() : "?";
        const int rv = ref_row.cells[c];
        check.reference = rv == ref::kDisqualified ? "X"
                          : rv == ref::kNotRated   ? "-"
                                                   : std::to_string(rv);
        for (size_t i = 0; i < engine_table.profiles.size(); ++i)
          if (engine_table.profiles[i] == ref_row.profile)
            check.row_label = engine_table.row_labels[i];
        check.match = check.engine == check.reference;
        for (const auto& dev : ref::ledgered_rank_cells())
          if (dev.scheme == ref_table.scheme && dev.profile == ref_row.profile &&
              dev.column == check.column) {
            check.ledgered = true;
            check.note = dev.note;
          }
        out.rank_cells.push_back(std::move(check));
      }
    }
  }

  const auto ocmca_rows = ocmca_overall_rank(matrix);
  for (const auto& ref_row : ref::ocmca_rank_table()) {
    const OcmcaRankRow* eng = nullptr;
    for (const auto& r : ocmca_rows)
      if (r.profile == ref_row.profile) eng = &r;
    if (!eng) continue;
    struct Col {
      const char* name;
      int engine;
      int reference;
    } cols[] = {{"cost", eng->cost, ref_row.cost},
                {"delay", eng->delay, ref_row.delay},
                {"power", eng->power, ref_row.power},
                {"qualitative", eng->qualitative, ref_row.qualitative}};
    for (const auto& col : cols) {
      RankCellCheck check;
      check.table = "ocmca_overall";
      check.profile = ref_row.profile;
      check.row_label = eng->row_label;
      check.column = col.name;
      check.engine = std::to_string(col.engine);
      check.reference = std::to_string(col.reference);
      check.match = col.engine == col.reference;
      for (const auto& dev : ref::ledgered_ocmca_rank_cells())
        if (dev.profile == ref_row.profile && dev.column == col.name) {
          check.ledgered = true;
          check.note = dev.note;
        }
      out.rank_cells.push_back(std::move(check));
    }
  }

  return out;
}

/// Text report: per-table tallies, the deviation ledger, and any
/// out-of-ledger failures. Stable output for a fixed build.
inline std::string render(const VerifyResult& result) {
  std::ostringstream out;

  auto tally = [&](ref::Table id) {
    int cells = 0, ledgered = 0, failed = 0;
    for (const auto& c : result.metric_cells) {
      if (c.table != id) continue;
      ++cells;
      if (c.tol == ref::Tol::Ledgered) ++ledgered;
      if (!c.within) ++failed;
    }
    out << "table " << ref::to_string(id) << ": cells " << cells << ", ledgered " << ledgered
        << ", failures " << failed << "\n";
  };
  out << "reference reproduction report\n";
  for (auto id : {ref::Table::InHouse, ref::Table::RemoteCloud, ref::Table::VirtualCloud,
                  ref::Table::Cloudlet, ref::Table::Ocmca})
    tally(id);

  int rank_cells = 0, rank_ledgered = 0, rank_failed = 0;
  for (const auto& c : result.rank_cells) {
    ++rank_cells;
    if (c.ledgered) ++rank_ledgered;
    if (!c.match && !c.ledgered) ++rank_failed;
  }
  out << "rank cells: " << rank_cells << ", ledgered " << rank_ledgered << ", failures "
      << rank_failed << "\n";

  out << "\ndeviation ledger (known, documented deviations):\n";
  for (const auto* c : result.metric_ledger()) {
    out << "  " << ref::to_string(c->table) << " row " << c->row_label << " "
        << ref::to_string(c->metric) << ": engine " << c->engine << ", reference "
        << c->reference << ", residual " << c->residual;
    if (!c->deviates) out << " [matches within normal tolerance]";
    if (!c->note.empty()) out << "\n      note: " << c->note;
    out << "\n";
  }
  for (const auto* c : result.rank_ledger()) {
    out << "  rank " << c->table << " row " << c->row_label << " column " << c->column
        << ": engine " << c->engine << ", reference " << c->reference;
    if (!c->note.empty()) out << "\n      note: " << c->note;
    out << "\n";
  }

  bool any_fail = false;
  std::ostringstream failures;
  for (const auto& c : result.metric_cells)
    if (!c.within) {
      any_fail = true;
      failures << "  " << ref::to_string(c.table) << " row " << c.row_label << " "
               << ref::to_string(c.metric) << " (" << ref::to_string(c.tol) << "): engine "
               << c.engine << ", reference " << c.reference << ", residual " << c.residual
               << "\n";
    }
  for (const auto& c : result.rank_cells)
    if (!c.match && !c.ledgered) {
      any_fail = true;
      failures << "  rank " << c.table << " row " << c.row_label << " column " << c.column
               << ": engine " << c.engine << ", reference " << c.reference << "\n";
    }
  for (const auto& c : result.flag_checks)
    if (!c.ok) {
      any_fail = true;
      failures << "  " << ref::to_string(c.table) << " profile " << c.profile
               << ": expected " << c.expected << ", engine " << c.engine << "\n";
    }
  if (any_fail) out << "\nout-of-ledger deviations:\n" << failures.str();

  out << "\nresult: " << (result.ok() ? "PASS (all deviations ledgered)" : "FAIL") << "\n";
  return out.str();
}

}  // namespace mco::verify
