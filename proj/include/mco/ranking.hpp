#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mco/catalog.hpp"
#include "mco/metrics.hpp"

namespace mco {

/// One record per (architecture, application) pair. In-house rows exist
/// only for the standalone-capable profiles; the rest are kept as
/// not-applicable records so every pair stays addressable.
inline std::vector<MetricsRecord> evaluate_matrix(
    const Catalog& cat, const std::vector<ArchitectureKind>& architectures,
    const std::vector<ApplicationProfile>& applications,
    OcmcaDiscountMode discount = OcmcaDiscountMode::TotalTraffic) {
  std::vector<MetricsRecord> out;
  out.reserve(architectures.size() * applications.size());
  for (const auto& app : applications)
    for (auto kind : architectures) out.push_back(evaluate_cell(kind, app, cat, discount));
  return out;
}

enum class RankCellKind { Rank, Disqualified, NotRated };

struct RankCell {
  RankCellKind kind{RankCellKind::NotRated};
  int rank{0};

  std::string str() const {
    switch (kind) {
      case RankCellKind::Rank: return std::to_string(rank);
      case RankCellKind::Disqualified: return "X";
      case RankCellKind::NotRated: return "-";
    }
    return "?";
  }

  bool operator==(const RankCell&) const = default;
};

struct RankColumn {
  ArchitectureKind kind{ArchitectureKind::InHouse};
  enum class Variant { Standard, CostLocal, CostRoaming } variant{Variant::Standard};
  std::string id;     // eg "remote_cloud_local"
  std::string label;  // display name
};

struct RankTable {
  RankScheme scheme{RankScheme::Delay};
  std::vector<RankColumn> columns;
  std::vector<int> profiles;            // row order, representative ids
  std::vector<std::string> row_labels;  // eg "3 & 4"
  std::vector<std::vector<RankCell>> rows;

  const RankCell* cell(int profile, const std::string& column_id) const {
    for (size_t r = 0; r < profiles.size(); ++r) {
      if (profiles[r] != profile) continue;
      for (size_t c = 0; c < columns.size(); ++c)
        if (columns[c].id == column_id) return &rows[r][c];
    }
    return nullptr;
  }
};

struct RankOptions {
  enum class CostUserClass { Local, Roaming } cost_user_class = CostUserClass::Local;
};

/// Standard competition ranking: rank = 1 + number of strictly better
/// entries; ties share the smaller rank; absent entries get no rank.
template <typename T, typename Less = std::less<T>>
std::vector<std::optional<int>> competition_ranks(const std::vector<std::optional<T>>& values,
                                                  Less less = {}) {
  std::vector<std::optional<int>> out(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    int better = 0;
    for (size_t j = 0; j < values.size(); ++j)
      if (j != i && values[j] && less(*values[j], *values[i])) ++better;
    out[i] = 1 + better;
  }
  return out;
}

namespace detail {

inline std::vector<int> profile_order(const std::vector<MetricsRecord>& matrix) {
  std::vector<int> out;
  for (const auto& r : matrix)
    if (std::find(out.begin(), out.end(), r.profile_id) == out.end())
      out.push_back(r.profile_id);
  return out;
}

inline std::vector<ArchitectureKind> kinds_present(const std::vector<MetricsRecord>& matrix) {
  static constexpr ArchitectureKind order[] = {
      ArchitectureKind::InHouse,      ArchitectureKind::RemoteCloud,
      ArchitectureKind::VirtualCloud, ArchitectureKind::Cloudlet,
      ArchitectureKind::OcmcaUnicast, ArchitectureKind::OcmcaMulticast,
  };
  std::vector<ArchitectureKind> out;
  for (auto k : order)
    for (const auto& r : matrix)
      if (r.architecture == k) {
        out.push_back(k);
        break;
      }
  return out;
}

inline const MetricsRecord* find_record(const std::vector<MetricsRecord>& matrix, int profile,
                                        ArchitectureKind kind) {
  for (const auto& r : matrix)
    if (r.profile_id == profile && r.architecture == kind) return &r;
  return nullptr;
}

// Ordering key for the qualitative privacy/mobility scheme: running on
// the user's own device outranks every offload target, then privacy,
// then mobility.
struct QualitativeKey {
  int own_device;
  int privacy;
  int mobility;

  bool operator<(const QualitativeKey& o) const {  // "better than"
    if (own_device != o.own_device) return own_device > o.own_device;
    if (privacy != o.privacy) return privacy > o.privacy;
    return mobility > o.mobility;
  }
  bool operator==(const QualitativeKey&) const = default;
};

}  // namespace detail

/// Qualitative attributes per architecture; fixed by the evaluation
/// model rather than configurable.
inline QualitativeAttributes default_qualitative(ArchitectureKind kind) {
  Catalog cat = builtin_catalog();
  return cat.find_architecture(kind)->qualitative;
}

/// Ordinal rank table under one grading scheme. Numeric schemes rank the
/// offload architectures against each other; the in-house column, where
/// rated, is ranked against the offload values without influencing them.
/// The scalability scheme does not rate in-house execution at all.
inline RankTable rank(const std::vector<MetricsRecord>& matrix, RankScheme scheme,
                      RankOptions options = {}) {
  RankTable table;
  table.scheme = scheme;
  table.profiles = detail::profile_order(matrix);
  const auto kinds = detail::kinds_present(matrix);

  for (auto kind : kinds) {
    if (kind == ArchitectureKind::InHouse && scheme == RankScheme::Scalability) continue;
    if (kind == ArchitectureKind::RemoteCloud && scheme == RankScheme::Cost) {
      table.columns.push_back({kind, RankColumn::Variant::CostLocal, "remote_cloud_local",
                               "Remote cloud (local)"});
      table.columns.push_back({kind, RankColumn::Variant::CostRoaming, "remote_cloud_roaming",
                               "Remote cloud (roaming)"});
      continue;
    }
    table.columns.push_back({kind, RankColumn::Variant::Standard, to_string(kind),
                             display_name(kind)});
  }

  const bool roaming = options.cost_user_class == RankOptions::CostUserClass::Roaming;

  for (int profile : table.profiles) {
    std::vector<RankCell> row(table.columns.size());
    std::vector<std::optional<Rational>> numeric(table.columns.size());
    std::vector<std::optional<detail::QualitativeKey>> quality(table.columns.size());

    for (size_t c = 0; c < table.columns.size(); ++c) {
      const auto& col = table.columns[c];
      const MetricsRecord* rec = detail::find_record(matrix, profile, col.kind);
      if (!rec || rec->status == CellStatus::NotApplicable) {
        row[c] = {RankCellKind::NotRated, 0};
        continue;
      }
      if (rec->status == CellStatus::Disqualified) {
        row[c] = {RankCellKind::Disqualified, 0};
        continue;
      }
      switch (scheme) {
        case RankScheme::Delay:
          numeric[c] = rec->delay.exact_ms;
          break;
        case RankScheme::Power:
          numeric[c] = rec->energy;
          break;
        case RankScheme::Cost:
          if (col.variant == RankColumn::Variant::CostLocal) numeric[c] = rec->cost.low;
          else if (col.variant == RankColumn::Variant::CostRoaming) numeric[c] = rec->cost.high;
          else numeric[c] = roaming ? rec->cost.high : rec->cost.low;
          break;
        case RankScheme::PrivacyMobility: {
          const auto q = default_qualitative(col.kind);
          quality[c] = detail::QualitativeKey{col.kind == ArchitectureKind::InHouse ? 1 : 0,
                                              static_cast<int>(q.privacy),
                                              static_cast<int>(q.mobility)};
          break;
        }
        case RankScheme::Scalability: {
          const auto q = default_qualitative(col.kind);
          if (q.scalability) numeric[c] = Rational(-static_cast<int>(*q.scalability));
          else row[c] = {RankCellKind::NotRated, 0};
          break;
        }
      }
    }

    if (scheme == RankScheme::PrivacyMobility) {
      auto ranks = competition_ranks(quality);
      for (size_t c = 0; c < row.size(); ++c)
        if (ranks[c]) row[c] = {RankCellKind::Rank, *ranks[c]};
    } else {
      // offload columns rank among themselves; the in-house column is
      // ranked against them one-way
      auto pool = numeric;
      std::optional<Rational> in_house;
      size_t in_house_col = table.columns.size();
      for (size_t c = 0; c < table.columns.size(); ++c)
        if (table.columns[c].kind == ArchitectureKind::InHouse && numeric[c]) {
          in_house = numeric[c];
          in_house_col = c;
          pool[c].reset();
        }
      auto ranks = competition_ranks(pool);
      for (size_t c = 0; c < row.size(); ++c)
        if (ranks[c]) row[c] = {RankCellKind::Rank, *ranks[c]};
      if (in_house) {
        int better = 0;
        for (const auto& v : pool)
          if (v && *v < *in_house) ++better;
        row[in_house_col] = {RankCellKind::Rank, 1 + better};
      }
    }

    table.rows.push_back(std::move(row));
  }

  for (int profile : table.profiles) {
    for (const auto& r : matrix)
      if (r.profile_id == profile) {
        table.row_labels.push_back(r.row_label);
        break;
      }
  }
  return table;
}

struct OcmcaRankRow {
  int profile{0};
  std::string row_label;
  int cost{1};
  int delay{1};
  int power{1};
  int qualitative{1};
};

/// Per-application rank of the operator-hosted cloud against the other
/// architectures. It strictly dominates the remote provider cloud on
/// delay and power (same path minus the internet leg) and on cost (same
/// traffic at a discounted tariff), so it takes over the remote cloud's
/// position in the delay and power schemes; the multicast discount makes
/// it the cheapest LTE-delivered option, ranked first on cost.
inline std::vector<OcmcaRankRow> ocmca_overall_rank(const std::vector<MetricsRecord>& matrix) {
  bool has_ocmca = false;
  for (const auto& r : matrix)
    has_ocmca |= r.architecture == ArchitectureKind::OcmcaUnicast ||
                 r.architecture == ArchitectureKind::OcmcaMulticast;
  if (!has_ocmca)
    throw std::invalid_argument("ocmca_overall_rank: matrix has no operator-cloud rows");

  std::vector<MetricsRecord> classic;
  for (const auto& r : matrix)
    switch (r.architecture) {
      case ArchitectureKind::InHouse:
      case ArchitectureKind::RemoteCloud:
      case ArchitectureKind::VirtualCloud:
      case ArchitectureKind::Cloudlet:
        classic.push_back(r);
        break;
      default:
        break;
    }

  const RankTable by_delay = rank(classic, RankScheme::Delay);
  const RankTable by_power = rank(classic, RankScheme::Power);

  std::vector<OcmcaRankRow> out;
  for (size_t i = 0; i < by_delay.profiles.size(); ++i) {
    OcmcaRankRow row;
    row.profile = by_delay.profiles[i];
    row.row_label = by_delay.row_labels[i];
    const RankCell* d = by_delay.cell(row.profile, "remote_cloud");
    const RankCell* p = by_power.cell(row.profile, "remote_cloud");
    if (!d || !p || d->kind != RankCellKind::Rank || p->kind != RankCellKind::Rank)
      throw std::invalid_argument("ocmca_overall_rank: matrix has no remote-cloud baseline");
    row.delay = d->rank;
    row.power = p->rank;
    row.cost = 1;
    row.qualitative = 1;
    out.push_back(row);
  }
  return out;
}

}  // namespace mco
