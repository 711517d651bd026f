#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mco/catalog.hpp"

// Reference dataset: the expected evaluation results this project
// reproduces, transcribed verbatim from the published study tables the
// built-in catalog comes from. Each cell carries a tolerance class; cells
// the canonical model is known not to reproduce are classed `Ledgered`
// and show up in the deviation ledger instead of failing verification.

namespace mco::ref {

enum class Table { InHouse, RemoteCloud, VirtualCloud, Cloudlet, Ocmca };
enum class Metric { Cost, Delay, Power };
enum class Tol {
  Exact,        // equal within the printed precision (eps, raw units)
  DelayFloor2,  // reported integer milliseconds within +/- 2
  Percent10,    // within 10% of the reference value
  Ledgered,     // known deviation; reported, never a failure
};

inline const char* to_string(Table t) {
  switch (t) {
    case Table::InHouse: return "in_house";
    case Table::RemoteCloud: return "remote_cloud";
    case Table::VirtualCloud: return "virtual_cloud";
    case Table::Cloudlet: return "cloudlet";
    case Table::Ocmca: return "ocmca";
  }
  return "?";
}

inline const char* to_string(Metric m) {
  switch (m) {
    case Metric::Cost: return "cost";
    case Metric::Delay: return "delay";
    case Metric::Power: return "power";
  }
  return "?";
}

inline const char* to_string(Tol t) {
  switch (t) {
    case Tol::Exact: return "exact";
    case Tol::DelayFloor2: return "+/-2ms";
    case Tol::Percent10: return "+/-10%";
    case Tol::Ledgered: return "ledgered";
  }
  return "?";
}

inline std::optional<Table> table_for(ArchitectureKind k) {
  switch (k) {
    case ArchitectureKind::InHouse: return Table::InHouse;
    case ArchitectureKind::RemoteCloud: return Table::RemoteCloud;
    case ArchitectureKind::VirtualCloud: return Table::VirtualCloud;
    case ArchitectureKind::Cloudlet: return Table::Cloudlet;
    case ArchitectureKind::OcmcaUnicast:
    case ArchitectureKind::OcmcaMulticast: return Table::Ocmca;
  }
  return std::nullopt;
}

/// One reference row. Money and power are raw units (the source prints
/// them in 10^6 units; every printed value is an integer number of raw
/// units). `cost_eps` / `power_eps` are the half-unit of the printed
/// precision where the Exact class applies.
struct Row {
  int profile{0};             // representative application id
  bool disqualified{false};
  bool not_applicable{false};
  long long cost_low{0};
  long long cost_high{0};
  long long delay_ms{0};
  long long power{0};
  Tol cost_tol{Tol::Exact};
  Tol delay_tol{Tol::Exact};
  Tol power_tol{Tol::Exact};
  long long cost_eps{0};
  long long power_eps{0};
  const char* note{""};
};

struct TableData {
  Table id;
  std::vector<Row> rows;
};

inline const std::vector<TableData>& metric_tables() {
  using enum Tol;
  static const std::vector<TableData> tables = [] {
    std::vector<TableData> t;

    // Standalone execution on the device; only the two profiles that can
    // run without any connection are rated.
    t.push_back({Table::InHouse,
                 {
                     {1, false, false, 0, 0, 100000, 8'000'000'000, Exact, Exact, Exact, 0, 0, ""},
                     {2, false, false, 0, 0, 1000, 80'000'000, Exact, Exact, Exact, 0, 0, ""},
                 }});

    // Remote provider cloud reached over LTE + internet.
    t.push_back(
        {Table::RemoteCloud,
         {
             {1, false, false, 1'001'000, 100'100'000, 3963, 142'033'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {2, false, false, 1'001'000, 100'100'000, 145, 27'433'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {3, false, false, 100'001'000, 10'000'100'000, 245, 2'440'543'000, Ledgered,
              Ledgered, Ledgered,
              0, 0,
              "reference delay is below the air-link serialization floor for a 10^8-bit "
              "download; cost and power ledgered with the row but match their usual classes"},
             {5, false, false, 2'000, 200'000, 89, 2'896'000, Exact, DelayFloor2, Ledgered, 0, 0,
              "power residual above 5%: the source window appears to include a term the model "
              "does not"},
             {6, false, false, 10'001'000, 1'000'100'000, 165, 246'553'000, Exact, Ledgered,
              Percent10, 0, 0,
              "reference delay is below the air-link serialization floor for a 10^7-bit "
              "download (engine 576); the row's own power cell implies a far longer window"},
             {7, false, false, 1'001'000, 100'100'000, 145, 27'433'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {8, false, false, 2'000, 200'000, 1088, 32'860'000, Exact, DelayFloor2, Percent10,
              0, 0, ""},
             {11, false, false, 2'000'000, 200'000'000, 3020, 112'333'000, Exact, DelayFloor2,
              Ledgered, 0, 0,
              "reference power 112.333e6 vs engine 136.6e6; the twin operator-cloud row is "
              "reproduced, so this cell is presumed a misprint"},
             {12, false, false, 2'000, 200'000, 98, 3'166'000, Exact, DelayFloor2, Ledgered, 0,
              0,
              "power residual above 5%: the source window appears to include a term the model "
              "does not"},
             {14, false, false, 1'001'000, 100'100'000, 3963, 142'033'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {15, false, false, 11'000, 1'100'000, 214, 6'853'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
         }});

    // Ad-hoc peer cloud over Wi-Fi, 10 participants.
    t.push_back(
        {Table::VirtualCloud,
         {
             {1, false, false, 0, 0, 10010, 801'001'000, Exact, DelayFloor2, Exact, 0, 0, ""},
             {2, false, false, 0, 0, 110, 9'001'000, Exact, DelayFloor2, Exact, 0, 0, ""},
             {3, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {5, false, false, 20'000, 20'000, 10, 802'000, Exact, DelayFloor2, Exact, 0, 0, ""},
             {6, false, false, 100'010'000, 100'010'000, 114, 18'001'000, Exact, Ledgered,
              Exact, 0, 0,
              "reference delay implies a shorter result transfer than the profiled download "
              "(engine 200)"},
             {7, false, false, 10'010'000, 10'010'000, 110, 9'001'000, Exact, DelayFloor2,
              Exact, 0, 0, ""},
             {8, false, false, 20'000, 20'000, 10000, 800'002'000, Exact, DelayFloor2, Exact, 0,
              0, ""},
             {11, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {12, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {14, false, false, 10'010'000, 10'010'000, 10010, 801'001'000, Exact, DelayFloor2,
              Exact, 0, 0, ""},
             {15, false, false, 0, 0, 1000, 80'011'000, Exact, DelayFloor2, Exact, 0, 0, ""},
         }});

    // Wi-Fi collocated cloudlet server.
    t.push_back(
        {Table::Cloudlet,
         {
             {1, false, false, 1'001'000, 1'001'000, 20010, 601'001'000, Exact, Exact, Exact, 0,
              0, ""},
             {2, false, false, 1'001'000, 1'001'000, 210, 7'001'000, Exact, Exact, Exact, 0, 0,
              ""},
             {3, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {5, false, false, 2'000, 2'000, 20, 602'000, Exact, Exact, Exact, 0, 0, ""},
             {6, false, false, 10'001'000, 10'001'000, 214, 16'001'000, Exact, Ledgered, Exact,
              0, 0,
              "reference delay is below the Wi-Fi transfer plus processing floor (engine 300)"},
             {7, false, false, 1'001'000, 1'001'000, 210, 7'001'000, Exact, Exact, Exact, 0, 0,
              ""},
             {8, false, false, 2'000, 2'000, 2000, 600'002'000, Exact, Ledgered, Exact, 0, 0,
              "reference delay contradicts the row's power cell (600.002e6 implies a 20 s "
              "window); engine 20000, presumed dropped digit"},
             {11, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {12, true, false, 0, 0, 0, 0, Exact, Exact, Exact, 0, 0, ""},
             {14, false, false, 1'001'000, 1'001'000, 20010, 601'001'000, Exact, Exact, Exact,
              0, 0, ""},
             {15, false, false, 110'000, 110'000, 2000, 60'011'000, Ledgered, Exact, Exact, 0,
              0,
              "reference cost 0.11e6 vs engine 0.011e6 for 11,000 bits at unit Wi-Fi tariff; "
              "presumed misprint"},
         }});

    // Operator-hosted cloud; cost range spans the multicast discount.
    t.push_back(
        {Table::Ocmca,
         {
             {1, false, false, 100'100, 1'001'000, 3903, 140'203'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {2, false, false, 100'100, 1'001'000, 85, 25'603'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {3, false, false, 10'000'100, 100'001'000, 183, 2'409'013'000, Ledgered, Ledgered,
              Ledgered, 0, 0,
              "reference delay is below the air-link serialization floor for a 10^8-bit "
              "download; cost and power ledgered with the row but match their usual classes"},
             {5, false, false, 200, 2'000, 39, 1'336'000, Exact, DelayFloor2, Ledgered, 0, 0,
              "power residual above 5%: the source window appears to include a term the model "
              "does not"},
             {6, false, false, 1'000'100, 10'001'000, 101, 242'023'000, Exact, Ledgered,
              Percent10, 0, 0,
              "reference delay is below the air-link serialization floor for a 10^7-bit "
              "download (engine 426)"},
             {7, false, false, 100'100, 1'001'000, 85, 25'603'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {8, false, false, 200, 2'000, 1038, 31'306'000, Exact, DelayFloor2, Percent10, 0,
              0, ""},
             {11, false, false, 200'000, 2'000'000, 2950, 134'500'000, Exact, DelayFloor2,
              Exact, 0, 50'000, ""},
             {12, false, false, 200, 2'000, 48, 1'606'000, Exact, DelayFloor2, Ledgered, 0, 0,
              "power residual above 5%: the source window appears to include a term the model "
              "does not"},
             {14, false, false, 100'100, 1'001'000, 3903, 140'203'000, Exact, DelayFloor2,
              Percent10, 0, 0, ""},
             {15, false, false, 1'100, 11'000, 164, 5'293'000, Exact, DelayFloor2, Percent10, 0,
              0, ""},
         }});

    return t;
  }();
  return tables;
}

inline const TableData& metric_table(Table id) {
  for (const auto& t : metric_tables())
    if (t.id == id) return t;
  throw std::logic_error("reference table missing");
}

inline const Row* find_row(Table id, int profile) {
  for (const auto& r : metric_table(id).rows)
    if (r.profile == profile) return &r;
  return nullptr;
}

/// Deviation-ledger annotation for an engine cell: names the metrics of
/// this (architecture, profile) pair whose reference cells are ledgered.
inline std::string ledgered_metrics(ArchitectureKind kind, int profile) {
  auto table = table_for(kind);
  if (!table) return {};
  const Row* row = find_row(*table, profile);
  if (!row) return {};
  std::string out;
  auto add = [&](Tol tol, const char* name) {
    if (tol != Tol::Ledgered) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(row->cost_tol, "cost");
  add(row->delay_tol, "delay");
  add(row->power_tol, "power");
  return out;
}

// ---------------------------------------------------------------------
// Published ranking tables. Cells: rank >= 1, kDisqualified for "X",
// kNotRated for "-" (column not rated for that row).
// ---------------------------------------------------------------------

inline constexpr int kDisqualified = 0;
inline constexpr int kNotRated = -1;

using mco::RankScheme;

struct RankRef {
  int profile;
  std::vector<int> cells;
};

struct RankTableRef {
  RankScheme scheme;
  std::vector<std::string> columns;
  std::vector<RankRef> rows;
};

inline const std::vector<RankTableRef>& rank_tables() {
  constexpr int X = kDisqualified;
  constexpr int NR = kNotRated;
  static const std::vector<RankTableRef> tables = {
      {RankScheme::Delay,
       {"in_house", "remote_cloud", "virtual_cloud", "cloudlet"},
       {
           {1, {4, 1, 2, 3}},
           {2, {4, 2, 1, 3}},
           {3, {NR, 1, X, X}},
           {5, {NR, 3, 1, 2}},
           {6, {NR, 2, 1, 3}},
           {7, {NR, 2, 1, 3}},
           {8, {NR, 1, 3, 2}},
           {11, {NR, 1, X, X}},
           {12, {NR, 1, X, X}},
           {14, {NR, 1, 2, 3}},
           {15, {NR, 1, 2, 3}},
       }},
      {RankScheme::Power,
       {"in_house", "remote_cloud", "virtual_cloud", "cloudlet"},
       {
           {1, {4, 1, 3, 2}},
           {2, {4, 3, 2, 1}},
           {3, {NR, 1, X, X}},
           {5, {NR, 3, 2, 1}},
           {6, {NR, 3, 2, 1}},
           {7, {NR, 3, 2, 1}},
           {8, {NR, 1, 3, 2}},
           {11, {NR, 1, X, X}},
           {12, {NR, 1, X, X}},
           {14, {NR, 1, 3, 2}},
           {15, {NR, 1, 3, 2}},
       }},
      {RankScheme::Cost,
       {"in_house", "remote_cloud_local", "remote_cloud_roaming", "virtual_cloud", "cloudlet"},
       {
           {1, {1, 2, 4, 1, 2}},
           {2, {1, 2, 4, 1, 2}},
           {3, {NR, 1, 2, X, X}},
           {5, {NR, 1, 4, 3, 1}},
           {6, {NR, 1, 4, 3, 1}},
           {7, {NR, 1, 4, 3, 1}},
           {8, {NR, 1, 4, 3, 1}},
           {11, {NR, 1, 2, X, X}},
           {12, {NR, 1, 2, X, X}},
           {14, {NR, 1, 4, 3, 1}},
           {15, {NR, 2, 4, 1, 3}},
       }},
      {RankScheme::PrivacyMobility,
       {"in_house", "remote_cloud", "virtual_cloud", "cloudlet"},
       {
           {1, {1, 2, 3, 4}},
           {2, {1, 2, 3, 4}},
           {3, {NR, 1, X, X}},
           {5, {NR, 1, 2, 3}},
           {6, {NR, 1, 2, 3}},
           {7, {NR, 1, 2, 3}},
           {8, {NR, 1, 2, 3}},
           {11, {NR, 1, X, X}},
           {12, {NR, 1, X, X}},
           {14, {NR, 1, 2, 3}},
           {15, {NR, 1, 2, 3}},
       }},
      {RankScheme::Scalability,
       {"remote_cloud", "virtual_cloud", "cloudlet"},
       {
           {1, {1, 1, 3}},
           {2, {1, 1, 3}},
           {3, {1, X, X}},
           {5, {1, 1, 3}},
           {6, {1, 1, 3}},
           {7, {1, 1, 3}},
           {8, {1, 1, 3}},
           {11, {1, X, X}},
           {12, {1, X, X}},
           {14, {1, 1, 3}},
           {15, {1, 1, 3}},
       }},
  };
  return tables;
}

/// Published operator-cloud comparison: per profile, the rank the
/// operator-hosted architecture earns against the others on cost, delay
/// and power, plus the shared qualitative rank.
struct OcmcaRankRef {
  int profile;
  int cost, delay, power, qualitative;
};

inline const std::vector<OcmcaRankRef>& ocmca_rank_table() {
  static const std::vector<OcmcaRankRef> rows = {
      {1, 1, 1, 1, 1},  {2, 1, 2, 3, 1},  {3, 1, 1, 1, 1},  {5, 1, 3, 3, 1},
      {6, 1, 2, 3, 1},  {7, 1, 2, 2, 1},  {8, 1, 1, 1, 1},  {11, 1, 1, 1, 1},
      {12, 1, 1, 1, 1}, {14, 1, 1, 1, 1}, {15, 1, 1, 1, 1},
  };
  return rows;
}

/// Rank cells the engine-recomputed tables are known not to match,
/// because the underlying reference metric cells are themselves
/// ledgered (see the metric tables' notes).
struct RankDeviation {
  RankScheme scheme;   // PrivacyMobility slot unused; see ocmca list below
  int profile;
  std::string column;
  const char* note;
};

inline const std::vector<RankDeviation>& ledgered_rank_cells() {
  static const std::vector<RankDeviation> cells = {
      {RankScheme::Delay, 6, "remote_cloud",
       "follows from the ledgered delay cells of that row"},
      {RankScheme::Delay, 6, "cloudlet", "follows from the ledgered delay cells of that row"},
      {RankScheme::Delay, 8, "virtual_cloud",
       "reference cloudlet delay for this row is a presumed dropped digit"},
      {RankScheme::Delay, 8, "cloudlet",
       "reference cloudlet delay for this row is a presumed dropped digit"},
      {RankScheme::Cost, 15, "cloudlet",
       "reference rank derives from the misprinted cloudlet cost cell"},
  };
  return cells;
}

struct OcmcaRankDeviation {
  int profile;
  std::string column;  // "cost" | "delay" | "power"
  const char* note;
};

inline const std::vector<OcmcaRankDeviation>& ledgered_ocmca_rank_cells() {
  static const std::vector<OcmcaRankDeviation> cells = {
      {6, "delay", "follows from the ledgered delay cells of that row"},
      {7, "power",
       "reference prints 2 although the row's metrics equal the row-2 metrics ranked 3; "
       "internally inconsistent"},
  };
  return cells;
}

}  // namespace mco::ref
