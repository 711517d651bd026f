#pragma once

#include <stdexcept>
#include <string>

#include "mco/catalog.hpp"
#include "mco/path.hpp"
#include "mco/reference_data.hpp"
#include "mco/units.hpp"

namespace mco {

/// How the multicast discount applies to the operator-cloud price range.
/// The reference results divide the whole traffic volume by m; a stricter
/// reading discounts only the downlink.
enum class OcmcaDiscountMode { TotalTraffic, DownlinkOnly };

struct CostRange {
  Rational low;
  Rational high;
};

enum class CellStatus { Ok, Disqualified, NotApplicable };

struct MetricsRecord {
  ArchitectureKind architecture{ArchitectureKind::InHouse};
  int profile_id{0};
  std::string row_label;
  CellStatus status{CellStatus::Ok};
  Delay delay;
  Rational energy;
  CostRange cost;
  std::string deviation_flag;  // metrics of this cell listed in the deviation ledger
};

/// The device-side energy accounting convention per architecture,
/// reverse-derived from the reference tables. Exposed as data so reports
/// can state which window each architecture charges.
inline const char* energy_accounting(ArchitectureKind kind) {
  switch (kind) {
    case ArchitectureKind::InHouse:
      return "compute power for the whole job";
    case ArchitectureKind::RemoteCloud:
    case ArchitectureKind::OcmcaUnicast:
    case ArchitectureKind::OcmcaMulticast:
      return "LTE energy per bit sent and received, radio active for the whole delay window";
    case ArchitectureKind::Cloudlet:
      return "Wi-Fi energy per bit, idle power only while the server computes";
    case ArchitectureKind::VirtualCloud:
      return "Wi-Fi energy per bit, compute power for the own job share, no waiting term";
  }
  return "";
}

/// Device-side energy for one offloaded job, under the architecture's
/// documented accounting convention (see energy_accounting()).
inline Rational offload_energy(ArchitectureKind kind, const ApplicationProfile& app,
                               const Rational& delay_ms, const Catalog& cat) {
  if (app.upload_bits < 0 || app.download_bits < 0 || app.processing_units < 0 ||
      delay_ms < Rational(0))
    throw std::invalid_argument("offload_energy: negative input");

  const long long bits = app.upload_bits + app.download_bits;
  const auto& e = cat.energy;
  switch (kind) {
    case ArchitectureKind::InHouse:
      return Rational(e.compute_power) * Rational::ratio(app.processing_units, cat.ue_speed);
    case ArchitectureKind::RemoteCloud:
    case ArchitectureKind::OcmcaUnicast:
    case ArchitectureKind::OcmcaMulticast:
      return Rational(e.lte_bit_energy * bits) +
             Rational(e.idle_power) * delay_ms / Rational(1000);
    case ArchitectureKind::Cloudlet:
      return Rational(e.wifi_bit_energy * bits) +
             Rational(e.idle_power) * Rational::ratio(app.processing_units, cat.cloudlet_speed);
    case ArchitectureKind::VirtualCloud:
      return Rational(e.wifi_bit_energy * bits) +
             Rational(e.compute_power) *
                 Rational::ratio(app.processing_units,
                                 cat.ue_speed * cat.virtual_participants);
  }
  throw std::invalid_argument("offload_energy: unknown architecture kind");
}

/// Monetary cost range for one job. Point values collapse to low == high.
inline CostRange monetary_cost(ArchitectureKind kind, const ApplicationProfile& app,
                               const TariffModel& tariff, int virtual_participants = 10,
                               OcmcaDiscountMode discount = OcmcaDiscountMode::TotalTraffic) {
  const long long bits = app.upload_bits + app.download_bits;
  switch (kind) {
    case ArchitectureKind::InHouse:
      return {Rational(0), Rational(0)};
    case ArchitectureKind::RemoteCloud:
      return {Rational(bits * tariff.lte_local_bit_cost),
              Rational(bits * tariff.lte_roaming_bit_cost)};
    case ArchitectureKind::Cloudlet: {
      Rational v(bits * tariff.wifi_bit_cost);
      return {v, v};
    }
    case ArchitectureKind::OcmcaUnicast:
    case ArchitectureKind::OcmcaMulticast: {
      const Rational local_total(bits * tariff.lte_local_bit_cost);
      Rational low;
      if (discount == OcmcaDiscountMode::TotalTraffic) {
        low = local_total / tariff.multicast_factor;
      } else {
        low = (Rational(app.upload_bits) +
               Rational(app.download_bits) / tariff.multicast_factor) *
              Rational(tariff.lte_local_bit_cost);
      }
      return {low, local_total};
    }
    case ArchitectureKind::VirtualCloud: {
      if (!app.resource_sharing) return {Rational(0), Rational(0)};
      Rational v(static_cast<long long>(virtual_participants) * bits * tariff.wifi_bit_cost);
      return {v, v};
    }
  }
  throw std::invalid_argument("monetary_cost: unknown architecture kind");
}

/// Full record for one (architecture, application) pair: delay, energy
/// and cost when the pair qualifies, with privacy disqualification and
/// known-deviation annotation applied.
inline MetricsRecord evaluate_cell(ArchitectureKind kind, const ApplicationProfile& app,
                                   const Catalog& cat,
                                   OcmcaDiscountMode discount = OcmcaDiscountMode::TotalTraffic) {
  MetricsRecord rec;
  rec.architecture = kind;
  rec.profile_id = app.id;
  rec.row_label = app.row_label();

  if (kind == ArchitectureKind::InHouse && !app.standalone_capable) {
    rec.status = CellStatus::NotApplicable;
    return rec;
  }

  const ArchitectureSpec* spec = cat.find_architecture(kind);
  if (!spec) throw std::invalid_argument("evaluate_cell: architecture not in catalog");
  if (spec->qualitative.privacy < app.privacy_requirement) {
    rec.status = CellStatus::Disqualified;
    return rec;
  }

  const DataPath path = build_path(kind, cat);
  rec.delay = kind == ArchitectureKind::InHouse
                  ? in_house_delay(app, path.processor)
                  : offload_delay(path, app);
  rec.energy = offload_energy(kind, app, rec.delay.exact_ms, cat);
  rec.cost = monetary_cost(kind, app, cat.tariff, cat.virtual_participants, discount);
  rec.deviation_flag = ref::ledgered_metrics(kind, app.id);
  return rec;
}

}  // namespace mco
