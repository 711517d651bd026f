#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mco/catalog.hpp"
#include "mco/metrics.hpp"
#include "mco/ranking.hpp"

namespace mco {

struct ScenarioOptions {
  UnitMode unit_mode{UnitMode::Kilobit};
  RankOptions::CostUserClass cost_user_class{RankOptions::CostUserClass::Local};
  int virtual_n{10};
  std::optional<double> multicast_m;  // overrides the tariff's factor
  bool strict_table_mode{false};
  OcmcaDiscountMode ocmca_discount{OcmcaDiscountMode::TotalTraffic};
};

/// Scenario description: which applications and architectures to
/// evaluate, plus partial overrides of the built-in catalog. Flat JSON
/// schema, versioned with a `version` key; see the project README.
struct ScenarioConfig {
  int version{1};
  std::vector<int> application_ids;                  // empty = whole catalog
  std::vector<ApplicationProfile> inline_applications;
  std::vector<ArchitectureKind> architectures;       // empty = default set
  struct SegmentOverride {
    std::optional<long long> latency_ms;
    std::optional<Bandwidth> up;
    std::optional<Bandwidth> down;
  };
  std::map<std::string, SegmentOverride> network;
  struct DeviceOverride {
    std::optional<long long> ue_speed;
    std::optional<long long> cloud_speed;
    std::optional<long long> cloudlet_speed;
    std::optional<long long> wifi_bit_energy;
    std::optional<long long> lte_bit_energy;
    std::optional<long long> idle_power;
    std::optional<long long> compute_power;
  } device;
  struct TariffOverride {
    std::optional<long long> lte_local_bit_cost;
    std::optional<long long> lte_roaming_bit_cost;
    std::optional<long long> wifi_bit_cost;
    std::optional<double> multicast_factor;
  } tariff;
  ScenarioOptions options;
};

inline std::vector<ArchitectureKind> default_architectures() {
  return {ArchitectureKind::InHouse, ArchitectureKind::RemoteCloud,
          ArchitectureKind::VirtualCloud, ArchitectureKind::Cloudlet,
          ArchitectureKind::OcmcaUnicast};
}

inline std::optional<ArchitectureKind> architecture_from_string(const std::string& s) {
  using K = ArchitectureKind;
  for (K k : {K::InHouse, K::RemoteCloud, K::VirtualCloud, K::Cloudlet, K::OcmcaUnicast,
              K::OcmcaMulticast})
    if (s == to_string(k)) return k;
  if (s == "ocmca") return K::OcmcaUnicast;
  return std::nullopt;
}

inline Rational rational_from_double(double v, long long scale = 1'000'000) {
  return Rational::ratio(static_cast<long long>(v * static_cast<double>(scale) +
                                                (v >= 0 ? 0.5 : -0.5)),
                         scale);
}

namespace detail {

inline std::optional<Bandwidth> parse_bandwidth_mbps(const nlohmann::json& j,
                                                     const std::string& field,
                                                     std::vector<Violation>& errors) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Bandwidth::unlimited();
    errors.push_back({field, "expected a number (Mbps) or \"inf\""});
    return std::nullopt;
  }
  if (!j.is_number()) {
    errors.push_back({field, "expected a number (Mbps) or \"inf\""});
    return std::nullopt;
  }
  const double v = j.get<double>();
  if (v <= 0) {
    errors.push_back({field, "bandwidth must be > 0 or \"inf\""});
    return std::nullopt;
  }
  return Bandwidth::mbps(v);
}

inline std::optional<long long> parse_nonneg_int(const nlohmann::json& j,
                                                 const std::string& field,
                                                 std::vector<Violation>& errors) {
  if (!j.is_number()) {
    errors.push_back({field, "expected a number"});
    return std::nullopt;
  }
  const double v = j.get<double>();
  if (v < 0) {
    errors.push_back({field, "must be >= 0"});
    return std::nullopt;
  }
  return static_cast<long long>(v + 0.5);
}

inline std::optional<PrivacyLevel> parse_privacy(const std::string& s) {
  if (s == "low" || s == "Low") return PrivacyLevel::Low;
  if (s == "medium" || s == "Medium") return PrivacyLevel::Medium;
  if (s == "high" || s == "High") return PrivacyLevel::High;
  return std::nullopt;
}

inline std::optional<std::string> parse_string(const nlohmann::json& j, const std::string& field,
                                               std::vector<Violation>& errors) {
  if (!j.is_string()) {
    errors.push_back({field, "expected a string"});
    return std::nullopt;
  }
  return j.get<std::string>();
}

}  // namespace detail

/// Parses a scenario config; every problem becomes a field-level
/// violation rather than an exception.
inline ScenarioConfig parse_config(const nlohmann::json& j, std::vector<Violation>& errors) {
  ScenarioConfig cfg;
  if (!j.is_object()) {
    errors.push_back({"$", "config root must be an object"});
    return cfg;
  }

  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
      errors.push_back({"version", "unsupported config version (expected 1)"});
    else
      cfg.version = 1;
  }

  static const char* known[] = {"version", "applications", "architectures",
                                "network", "device",       "tariff",
                                "options"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok |= it.key() == k;
    if (!ok) errors.push_back({it.key(), "unknown config section"});
  }

  if (j.contains("applications")) {
    if (!j["applications"].is_array()) {
      errors.push_back({"applications", "expected an array of ids or profile objects"});
    } else {
      int index = 0;
      for (const auto& item : j["applications"]) {
        const std::string at = "applications[" + std::to_string(index++) + "]";
        if (item.is_number_integer()) {
          cfg.application_ids.push_back(item.get<int>());
        } else if (item.is_object()) {
          ApplicationProfile p;
          if (!item.contains("id") || !item["id"].is_number_integer() ||
              item["id"].get<int>() < 1)
            errors.push_back({at + ".id", "expected a positive integer id"});
          else
            p.id = item["id"].get<int>();
          p.ids = {p.id};
          p.name = "custom";
          if (item.contains("name")) {
            if (auto s = detail::parse_string(item["name"], at + ".name", errors)) p.name = *s;
          }
          if (auto v = detail::parse_nonneg_int(item.value("upload", nlohmann::json(0)),
                                                at + ".upload", errors))
            p.upload_bits = *v;  // catalog units; scaled later
          if (auto v = detail::parse_nonneg_int(item.value("download", nlohmann::json(0)),
                                                at + ".download", errors))
            p.download_bits = *v;
          if (auto v = detail::parse_nonneg_int(item.value("processing", nlohmann::json(0)),
                                                at + ".processing", errors))
            p.processing_units = *v;
          if (item.contains("resource_sharing")) {
            if (!item["resource_sharing"].is_boolean())
              errors.push_back({at + ".resource_sharing", "expected a boolean"});
            else
              p.resource_sharing = item["resource_sharing"].get<bool>();
          }
          if (item.contains("standalone_capable")) {
            if (!item["standalone_capable"].is_boolean())
              errors.push_back({at + ".standalone_capable", "expected a boolean"});
            else
              p.standalone_capable = item["standalone_capable"].get<bool>();
          }
          if (item.contains("privacy_requirement")) {
            auto s = detail::parse_string(item["privacy_requirement"],
                                          at + ".privacy_requirement", errors);
            if (s) {
              auto lvl = detail::parse_privacy(*s);
              if (!lvl)
                errors.push_back({at + ".privacy_requirement", "expected low|medium|high"});
              else
                p.privacy_requirement = *lvl;
            }
          }
          cfg.inline_applications.push_back(std::move(p));
        } else {
          errors.push_back({at, "expected an application id or a profile object"});
        }
      }
    }
  }

  if (j.contains("architectures")) {
    if (!j["architectures"].is_array()) {
      errors.push_back({"architectures", "expected an array of architecture names"});
    } else {
      for (const auto& item : j["architectures"]) {
        if (!item.is_string()) {
          errors.push_back({"architectures", "expected architecture names"});
          continue;
        }
        auto kind = architecture_from_string(item.get<std::string>());
        if (!kind)
          errors.push_back({"architectures", "unknown architecture: " + item.get<std::string>()});
        else
          cfg.architectures.push_back(*kind);
      }
    }
  }

  if (j.contains("network") && !j["network"].is_object()) {
    errors.push_back({"network", "expected an object of segment overrides"});
  } else if (j.contains("network")) {
    for (auto it = j["network"].begin(); it != j["network"].end(); ++it) {
      ScenarioConfig::SegmentOverride ov;
      const std::string at = "network." + it.key();
      const auto& seg = it.value();
      if (!seg.is_object()) {
        errors.push_back({at, "expected an object"});
        continue;
      }
      if (seg.contains("latency_ms"))
        ov.latency_ms = detail::parse_nonneg_int(seg["latency_ms"], at + ".latency_ms", errors);
      if (seg.contains("up_mbps"))
        ov.up = detail::parse_bandwidth_mbps(seg["up_mbps"], at + ".up_mbps", errors);
      if (seg.contains("down_mbps"))
        ov.down = detail::parse_bandwidth_mbps(seg["down_mbps"], at + ".down_mbps", errors);
      cfg.network[it.key()] = ov;
    }
  }

  for (const char* section : {"device", "tariff", "options"})
    if (j.contains(section) && !j[section].is_object())
      errors.push_back({section, "expected an object"});

  if (j.contains("device") && j["device"].is_object()) {
    const auto& d = j["device"];
    auto field = [&](const char* name) -> std::optional<long long> {
      if (!d.contains(name)) return std::nullopt;
      return detail::parse_nonneg_int(d[name], std::string("device.") + name, errors);
    };
    cfg.device.ue_speed = field("ue_speed");
    cfg.device.cloud_speed = field("cloud_speed");
    cfg.device.cloudlet_speed = field("cloudlet_speed");
    cfg.device.wifi_bit_energy = field("wifi_bit_energy");
    cfg.device.lte_bit_energy = field("lte_bit_energy");
    cfg.device.idle_power = field("idle_power");
    cfg.device.compute_power = field("compute_power");
  }

  if (j.contains("tariff") && j["tariff"].is_object()) {
    const auto& t = j["tariff"];
    auto field = [&](const char* name) -> std::optional<long long> {
      if (!t.contains(name)) return std::nullopt;
      return detail::parse_nonneg_int(t[name], std::string("tariff.") + name, errors);
    };
    cfg.tariff.lte_local_bit_cost = field("lte_local_bit_cost");
    cfg.tariff.lte_roaming_bit_cost = field("lte_roaming_bit_cost");
    cfg.tariff.wifi_bit_cost = field("wifi_bit_cost");
    if (t.contains("multicast_factor")) {
      if (!t["multicast_factor"].is_number())
        errors.push_back({"tariff.multicast_factor", "expected a number"});
      else
        cfg.tariff.multicast_factor = t["multicast_factor"].get<double>();
    }
  }

  if (j.contains("options") && j["options"].is_object()) {
    const auto& o = j["options"];
    if (o.contains("unit_mode")) {
      const auto mode = detail::parse_string(o["unit_mode"], "options.unit_mode", errors);
      if (mode == "kilobit") cfg.options.unit_mode = UnitMode::Kilobit;
      else if (mode == "kilobyte") cfg.options.unit_mode = UnitMode::Kilobyte;
      else if (mode) errors.push_back({"options.unit_mode", "expected kilobit|kilobyte"});
    }
    if (o.contains("cost_user_class")) {
      const auto cls =
          detail::parse_string(o["cost_user_class"], "options.cost_user_class", errors);
      if (cls == "local") cfg.options.cost_user_class = RankOptions::CostUserClass::Local;
      else if (cls == "roaming") cfg.options.cost_user_class = RankOptions::CostUserClass::Roaming;
      else if (cls) errors.push_back({"options.cost_user_class", "expected local|roaming"});
    }
    if (o.contains("virtual_n")) {
      if (!o["virtual_n"].is_number_integer() || o["virtual_n"].get<int>() < 1)
        errors.push_back({"options.virtual_n", "expected an integer >= 1"});
      else
        cfg.options.virtual_n = o["virtual_n"].get<int>();
    }
    if (o.contains("multicast_m")) {
      if (!o["multicast_m"].is_number() || o["multicast_m"].get<double>() < 1)
        errors.push_back({"options.multicast_m", "expected a number >= 1"});
      else
        cfg.options.multicast_m = o["multicast_m"].get<double>();
    }
    if (o.contains("strict_table_mode")) {
      if (!o["strict_table_mode"].is_boolean())
        errors.push_back({"options.strict_table_mode", "expected a boolean"});
      else
        cfg.options.strict_table_mode = o["strict_table_mode"].get<bool>();
    }
    if (o.contains("ocmca_discount")) {
      const auto d = detail::parse_string(o["ocmca_discount"], "options.ocmca_discount", errors);
      if (d == "total") cfg.options.ocmca_discount = OcmcaDiscountMode::TotalTraffic;
      else if (d == "downlink_only") cfg.options.ocmca_discount = OcmcaDiscountMode::DownlinkOnly;
      else if (d) errors.push_back({"options.ocmca_discount", "expected total|downlink_only"});
    }
  }

  return cfg;
}

/// Builds the effective catalog for a scenario: built-in values, then
/// overrides, then invariant validation.
inline Catalog build_catalog(const ScenarioConfig& cfg, std::vector<Violation>& errors) {
  Catalog cat = builtin_catalog(cfg.options.unit_mode);
  cat.virtual_participants = cfg.options.virtual_n;
  for (auto& arch : cat.architectures)
    if (arch.kind == ArchitectureKind::VirtualCloud) arch.participants = cfg.options.virtual_n;

  for (const auto& [name, ov] : cfg.network) {
    bool found = false;
    for (auto& seg : cat.segments) {
      if (seg.name != name) continue;
      found = true;
      if (ov.latency_ms) seg.one_way_latency_ms = *ov.latency_ms;
      if (ov.up) seg.up = *ov.up;
      if (ov.down) seg.down = *ov.down;
    }
    if (!found) errors.push_back({"network." + name, "unknown network segment"});
  }

  if (cfg.device.ue_speed) cat.ue_speed = *cfg.device.ue_speed;
  if (cfg.device.cloud_speed) cat.cloud_speed = *cfg.device.cloud_speed;
  if (cfg.device.cloudlet_speed) cat.cloudlet_speed = *cfg.device.cloudlet_speed;
  if (cfg.device.wifi_bit_energy) cat.energy.wifi_bit_energy = *cfg.device.wifi_bit_energy;
  if (cfg.device.lte_bit_energy) cat.energy.lte_bit_energy = *cfg.device.lte_bit_energy;
  if (cfg.device.idle_power) cat.energy.idle_power = *cfg.device.idle_power;
  if (cfg.device.compute_power) cat.energy.compute_power = *cfg.device.compute_power;

  if (cfg.tariff.lte_local_bit_cost) cat.tariff.lte_local_bit_cost = *cfg.tariff.lte_local_bit_cost;
  if (cfg.tariff.lte_roaming_bit_cost)
    cat.tariff.lte_roaming_bit_cost = *cfg.tariff.lte_roaming_bit_cost;
  if (cfg.tariff.wifi_bit_cost) cat.tariff.wifi_bit_cost = *cfg.tariff.wifi_bit_cost;
  if (cfg.tariff.multicast_factor)
    cat.tariff.multicast_factor = rational_from_double(*cfg.tariff.multicast_factor);
  if (cfg.options.multicast_m)
    cat.tariff.multicast_factor = rational_from_double(*cfg.options.multicast_m);

  // inline profiles join the catalog, scaled like built-in ones
  const long long unit = cfg.options.unit_mode == UnitMode::Kilobit ? 1000 : 8000;
  for (ApplicationProfile p : cfg.inline_applications) {
    if (cat.find_application(p.id))
      errors.push_back({"applications", "inline profile id " + std::to_string(p.id) +
                                            " collides with an existing profile"});
    p.upload_bits *= unit;
    p.download_bits *= unit;
    cat.applications.push_back(std::move(p));
  }

  for (int id : cfg.application_ids)
    if (!cat.find_application(id))
      errors.push_back({"applications", "unknown application id " + std::to_string(id)});

  auto invariants = validate(cat);
  errors.insert(errors.end(), invariants.begin(), invariants.end());
  return cat;
}

/// Applications selected by a scenario, in catalog row order.
inline std::vector<ApplicationProfile> selected_applications(const ScenarioConfig& cfg,
                                                             const Catalog& cat) {
  std::vector<ApplicationProfile> out;
  if (cfg.application_ids.empty() && cfg.inline_applications.empty()) {
    out = cat.applications;
    return out;
  }
  auto push_unique = [&](const ApplicationProfile* p) {
    if (!p) return;
    for (const auto& existing : out)
      if (existing.id == p->id) return;
    out.push_back(*p);
  };
  for (int id : cfg.application_ids) push_unique(cat.find_application(id));
  for (const auto& p : cfg.inline_applications) push_unique(cat.find_application(p.id));
  return out;
}

}  // namespace mco
