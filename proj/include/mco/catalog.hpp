#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "mco/units.hpp"

namespace mco {

enum class ArchitectureKind {
  InHouse,
  RemoteCloud,
  VirtualCloud,
  Cloudlet,
  OcmcaUnicast,
  OcmcaMulticast,
};

enum class PrivacyLevel { Low = 0, Medium = 1, High = 2 };
enum class MobilityLevel { VeryLow = 0, Medium = 1, High = 2 };
enum class ScalabilityLevel { Low = 0, High = 1 };

/// The five grading schemes architectures are ranked under.
enum class RankScheme { Delay = 1, Power = 2, Cost = 3, PrivacyMobility = 4, Scalability = 5 };

inline const char* to_string(RankScheme s) {
  switch (s) {
    case RankScheme::Delay: return "delay";
    case RankScheme::Power: return "power";
    case RankScheme::Cost: return "cost";
    case RankScheme::PrivacyMobility: return "privacy_mobility";
    case RankScheme::Scalability: return "scalability";
  }
  return "?";
}

inline const char* to_string(ArchitectureKind k) {
  switch (k) {
    case ArchitectureKind::InHouse: return "in_house";
    case ArchitectureKind::RemoteCloud: return "remote_cloud";
    case ArchitectureKind::VirtualCloud: return "virtual_cloud";
    case ArchitectureKind::Cloudlet: return "cloudlet";
    case ArchitectureKind::OcmcaUnicast: return "ocmca_unicast";
    case ArchitectureKind::OcmcaMulticast: return "ocmca_multicast";
  }
  return "?";
}

inline const char* display_name(ArchitectureKind k) {
  switch (k) {
    case ArchitectureKind::InHouse: return "In-house";
    case ArchitectureKind::RemoteCloud: return "Remote cloud";
    case ArchitectureKind::VirtualCloud: return "Virtual cloud";
    case ArchitectureKind::Cloudlet: return "Cloudlet";
    case ArchitectureKind::OcmcaUnicast: return "OCMCA (unicast)";
    case ArchitectureKind::OcmcaMulticast: return "OCMCA (multicast)";
  }
  return "?";
}

inline const char* to_string(PrivacyLevel p) {
  switch (p) {
    case PrivacyLevel::Low: return "Low";
    case PrivacyLevel::Medium: return "Medium";
    case PrivacyLevel::High: return "High";
  }
  return "?";
}

inline const char* to_string(MobilityLevel m) {
  switch (m) {
    case MobilityLevel::VeryLow: return "Low";
    case MobilityLevel::Medium: return "Medium";
    case MobilityLevel::High: return "High";
  }
  return "?";
}

inline const char* to_string(ScalabilityLevel s) {
  return s == ScalabilityLevel::High ? "High" : "Low";
}

/// One profiled workload. Several of the catalogued applications share a
/// profile; `ids` lists every application id the row stands for.
struct ApplicationProfile {
  int id{0};                    // representative id (smallest of the group)
  std::vector<int> ids;         // all application ids mapped to this profile
  std::string name;
  long long upload_bits{0};
  long long download_bits{0};
  long long processing_units{0};
  bool resource_sharing{false};
  PrivacyLevel privacy_requirement{PrivacyLevel::Low};  // minimum acceptable
  bool standalone_capable{false};  // can run on the device with no connection

  std::string row_label() const {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
      if (i) out += " & ";
      out += std::to_string(ids[i]);
    }
    return out;
  }

  bool operator==(const ApplicationProfile&) const = default;
};

struct NetworkSegment {
  std::string name;
  long long one_way_latency_ms{0};
  Bandwidth up;
  Bandwidth down;

  bool operator==(const NetworkSegment&) const = default;
};

enum class NodeKind {
  MobileDevice,
  CloudletServer,
  OperatorCloud,
  RemoteCloud,
  VirtualCloudParticipant,
};

struct ProcessingNode {
  NodeKind kind{NodeKind::MobileDevice};
  long long speed{0};  // processing units per second

  bool operator==(const ProcessingNode&) const = default;
};

/// Device-side energy constants (abstract power units, Table-style scale).
struct DeviceEnergyModel {
  long long wifi_bit_energy{0};   // per bit sent or received over Wi-Fi
  long long lte_bit_energy{0};    // per bit sent or received over LTE
  long long idle_power{0};        // per second waiting, radio active
  long long compute_power{0};     // per second computing

  bool operator==(const DeviceEnergyModel&) const = default;
};

struct TariffModel {
  long long lte_local_bit_cost{0};
  long long lte_roaming_bit_cost{0};
  long long wifi_bit_cost{0};
  Rational multicast_factor{1};  // m >= 1, multicast discount

  bool operator==(const TariffModel&) const = default;
};

struct QualitativeAttributes {
  PrivacyLevel privacy{PrivacyLevel::Low};
  MobilityLevel mobility{MobilityLevel::VeryLow};
  std::optional<ScalabilityLevel> scalability;  // not rated for in-house
  std::optional<bool> multicast_capable;        // not rated for in-house

  bool operator==(const QualitativeAttributes&) const = default;
};

struct ArchitectureSpec {
  ArchitectureKind kind{ArchitectureKind::InHouse};
  QualitativeAttributes qualitative;
  int participants{1};  // virtual cloud only: peers sharing one job

  bool operator==(const ArchitectureSpec&) const = default;
};

enum class UnitMode { Kilobit, Kilobyte };

struct Catalog {
  std::vector<ApplicationProfile> applications;  // 11 merged profile rows
  std::vector<NetworkSegment> segments;
  std::vector<ArchitectureSpec> architectures;
  DeviceEnergyModel energy;
  TariffModel tariff;
  long long ue_speed{0};
  long long cloud_speed{0};
  long long cloudlet_speed{0};
  int virtual_participants{10};
  UnitMode unit_mode{UnitMode::Kilobit};

  const ApplicationProfile* find_application(int app_id) const {
    for (const auto& a : applications)
      if (std::find(a.ids.begin(), a.ids.end(), app_id) != a.ids.end()) return &a;
    return nullptr;
  }

  const NetworkSegment* find_segment(const std::string& name) const {
    for (const auto& s : segments)
      if (s.name == name) return &s;
    return nullptr;
  }

  const ArchitectureSpec* find_architecture(ArchitectureKind kind) const {
    for (const auto& a : architectures)
      if (a.kind == kind) return &a;
    return nullptr;
  }

  bool operator==(const Catalog&) const = default;
};

/// Built-in application profiles. Sizes are stored in bits: each catalog
/// size unit is 1000 bits in kilobit mode (default) and 8000 bits in
/// kilobyte mode.
inline Catalog builtin_catalog(UnitMode mode = UnitMode::Kilobit) {
  const long long unit = mode == UnitMode::Kilobit ? 1000 : 8000;
  Catalog c;
  c.unit_mode = mode;

  auto app = [&](std::vector<int> ids, std::string name, long long up, long long down,
                 long long proc, bool sharing, PrivacyLevel need, bool standalone = false) {
    ApplicationProfile p;
    p.id = ids.front();
    p.ids = std::move(ids);
    p.name = std::move(name);
    p.upload_bits = up * unit;
    p.download_bits = down * unit;
    p.processing_units = proc;
    p.resource_sharing = sharing;
    p.privacy_requirement = need;
    p.standalone_capable = standalone;
    return p;
  };

  const auto low = PrivacyLevel::Low;
  const auto high = PrivacyLevel::High;
  c.applications = {
      app({1}, "image text recognition", 1000, 1, 100000, false, low, true),
      app({2}, "text to speech", 1, 1000, 1000, false, low, true),
      app({3, 4}, "crowd imaging", 1, 100000, 10000, false, high),
      app({5}, "sensor reading share", 1, 1, 100, true, low),
      app({6, 10}, "peer file retrieval", 1, 10000, 1000, true, low),
      app({7}, "live event updates", 1, 1000, 1000, true, low),
      app({8, 9}, "crowd sensing query", 1, 1, 100000, true, low),
      app({11}, "social media sync", 1000, 1000, 1000, true, high),
      app({12, 13}, "crowdsourced answers", 1, 1, 1000, false, high),
      app({14}, "wearable augmented reality", 1000, 1, 100000, true, low),
      app({15}, "vital signs upload", 10, 1, 10000, false, low),
  };

  c.segments = {
      {"air", 8, Bandwidth::mbps(0.35), Bandwidth::mbps(36)},
      {"enb", 3, Bandwidth::unlimited(), Bandwidth::unlimited()},
      {"backhaul_core", 5, Bandwidth::mbps(100), Bandwidth::mbps(100)},
      {"gateways", 2, Bandwidth::unlimited(), Bandwidth::unlimited()},
      {"internet", 25, Bandwidth::mbps(100), Bandwidth::mbps(100)},
      {"wifi", 0, Bandwidth::mbps(100), Bandwidth::mbps(100)},
  };

  c.ue_speed = 1000;
  c.cloud_speed = 100000;
  c.cloudlet_speed = 5000;
  c.virtual_participants = 10;

  c.energy = DeviceEnergyModel{1, 23, 30'000'000, 80'000'000};
  c.tariff = TariffModel{1, 100, 1, Rational(10)};

  using K = ArchitectureKind;
  using P = PrivacyLevel;
  using M = MobilityLevel;
  using S = ScalabilityLevel;
  c.architectures = {
      {K::InHouse, {P::High, M::High, std::nullopt, std::nullopt}, 1},
      {K::RemoteCloud, {P::High, M::High, S::High, false}, 1},
      {K::VirtualCloud, {P::Medium, M::Medium, S::High, false}, 10},
      {K::Cloudlet, {P::Low, M::VeryLow, S::Low, false}, 1},
      {K::OcmcaUnicast, {P::High, M::High, S::High, true}, 1},
      {K::OcmcaMulticast, {P::High, M::High, S::High, true}, 1},
  };

  return c;
}

struct Violation {
  std::string field;
  std::string message;

  bool operator==(const Violation&) const = default;
};

inline void check(std::vector<Violation>& out, bool ok, const std::string& field,
                  const std::string& message) {
  if (!ok) out.push_back({field, message});
}

inline std::vector<Violation> validate(const ApplicationProfile& p) {
  std::vector<Violation> v;
  const std::string at = "application[" + p.row_label() + "]";
  check(v, p.upload_bits >= 0, at + ".upload", "upload_size >= 0");
  check(v, p.download_bits >= 0, at + ".download", "download_size >= 0");
  check(v, p.processing_units >= 0, at + ".processing", "processing >= 0");
  check(v, !p.ids.empty(), at + ".ids", "profile maps at least one application id");
  return v;
}

inline std::vector<Violation> validate(const NetworkSegment& s) {
  std::vector<Violation> v;
  const std::string at = "segment[" + s.name + "]";
  check(v, s.one_way_latency_ms >= 0, at + ".latency", "latency >= 0");
  check(v, s.up.infinite || s.up.bps > 0, at + ".up_bandwidth", "bandwidth > 0 or unlimited");
  check(v, s.down.infinite || s.down.bps > 0, at + ".down_bandwidth", "bandwidth > 0 or unlimited");
  return v;
}

inline std::vector<Violation> validate(const DeviceEnergyModel& e) {
  std::vector<Violation> v;
  check(v, e.wifi_bit_energy >= 0, "energy.wifi_bit_energy", "wifi_bit_energy >= 0");
  check(v, e.lte_bit_energy >= 0, "energy.lte_bit_energy", "lte_bit_energy >= 0");
  check(v, e.idle_power >= 0, "energy.idle_power", "idle_power >= 0");
  check(v, e.compute_power >= e.idle_power, "energy.compute_power", "compute_power >= idle_power");
  return v;
}

inline std::vector<Violation> validate(const TariffModel& t) {
  std::vector<Violation> v;
  check(v, t.lte_local_bit_cost >= 0, "tariff.lte_local_bit_cost", "local cost >= 0");
  check(v, t.wifi_bit_cost >= 0, "tariff.wifi_bit_cost", "wifi cost >= 0");
  check(v, t.lte_roaming_bit_cost >= t.lte_local_bit_cost, "tariff.lte_roaming_bit_cost",
        "roaming >= local");
  check(v, t.multicast_factor >= Rational(1), "tariff.multicast_factor", "m >= 1");
  return v;
}

inline std::vector<Violation> validate(const Catalog& c) {
  std::vector<Violation> v;
  for (const auto& a : c.applications) {
    auto sub = validate(a);
    v.insert(v.end(), sub.begin(), sub.end());
  }
  for (const auto& s : c.segments) {
    auto sub = validate(s);
    v.insert(v.end(), sub.begin(), sub.end());
  }
  auto e = validate(c.energy);
  v.insert(v.end(), e.begin(), e.end());
  auto t = validate(c.tariff);
  v.insert(v.end(), t.begin(), t.end());
  check(v, c.ue_speed > 0, "device.ue_speed", "speed > 0");
  check(v, c.cloud_speed > 0, "device.cloud_speed", "speed > 0");
  check(v, c.cloudlet_speed > 0, "device.cloudlet_speed", "speed > 0");
  check(v, c.virtual_participants >= 1, "options.virtual_n", "participants >= 1");
  // every application id 1..15 resolves to exactly one profile
  for (int id = 1; id <= 15; ++id) {
    int hits = 0;
    for (const auto& a : c.applications)
      hits += static_cast<int>(std::count(a.ids.begin(), a.ids.end(), id));
    check(v, hits == 1, "applications", "id " + std::to_string(id) + " maps to exactly one profile");
  }
  return v;
}

}  // namespace mco
