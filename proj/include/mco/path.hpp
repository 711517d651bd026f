#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mco/catalog.hpp"
#include "mco/units.hpp"

namespace mco {

/// Ordered device-to-processor hop list plus the node doing the work.
/// `parallel_nodes` > 1 means the job is split evenly across that many
/// identical processors (virtual cloud peers).
struct DataPath {
  std::vector<NetworkSegment> segments;
  ProcessingNode processor;
  int parallel_nodes{1};
  std::string topology_note;

  long long one_way_latency_ms() const {
    long long sum = 0;
    for (const auto& s : segments) sum += s.one_way_latency_ms;
    return sum;
  }
};

inline DataPath build_path(ArchitectureKind kind, const Catalog& cat) {
  auto seg = [&](const char* name) {
    const NetworkSegment* s = cat.find_segment(name);
    if (!s) throw std::invalid_argument(std::string("missing network segment: ") + name);
    return *s;
  };

  DataPath p;
  switch (kind) {
    case ArchitectureKind::InHouse:
      p.processor = {NodeKind::MobileDevice, cat.ue_speed};
      p.topology_note = "no transport; job runs on the device";
      break;
    case ArchitectureKind::RemoteCloud:
      p.segments = {seg("air"), seg("enb"), seg("backhaul_core"), seg("gateways"),
                    seg("internet")};
      p.processor = {NodeKind::RemoteCloud, cat.cloud_speed};
      p.topology_note = "LTE access, operator core, public internet to the provider cloud";
      break;
    case ArchitectureKind::OcmcaUnicast:
    case ArchitectureKind::OcmcaMulticast:
      p.segments = {seg("air"), seg("enb"), seg("backhaul_core"), seg("gateways")};
      p.processor = {NodeKind::OperatorCloud, cat.cloud_speed};
      p.topology_note = "LTE access to a cloud hosted inside the operator core";
      break;
    case ArchitectureKind::Cloudlet:
      p.segments = {seg("wifi")};
      p.processor = {NodeKind::CloudletServer, cat.cloudlet_speed};
      p.topology_note = "one Wi-Fi hop to a collocated cloudlet server";
      break;
    case ArchitectureKind::VirtualCloud:
      p.segments = {seg("wifi")};
      p.processor = {NodeKind::VirtualCloudParticipant, cat.ue_speed};
      p.parallel_nodes = cat.virtual_participants;
      p.topology_note = "ad-hoc Wi-Fi broadcast to peer devices sharing the job";
      break;
    default:
      throw std::invalid_argument("build_path: unknown architecture kind");
  }
  return p;
}

/// Serialization time of `bits` over `bw`, in milliseconds. Zero for
/// unlimited links.
inline Rational transmission_time_ms(long long bits, Bandwidth bw) {
  if (bits < 0) throw std::invalid_argument("transmission_time: negative size");
  if (bw.infinite) return Rational(0);
  if (bw.bps <= 0) throw std::invalid_argument("transmission_time: bandwidth must be > 0");
  return Rational::ratio(bits, bw.bps) * Rational(1000);
}

struct Delay {
  Rational exact_ms;
  long long reported_ms{0};  // floor of exact
};

/// End-to-end offloading delay: every hop serializes the full payload
/// (no pipelining), each direction pays every hop's one-way latency,
/// and the processor contributes work/speed. With parallel_nodes = N
/// the upload is broadcast once, each peer computes 1/N of the job, and
/// the combined result comes back over the shared medium once.
inline Delay offload_delay(const DataPath& path, const ApplicationProfile& app) {
  Rational total(0);
  for (const auto& s : path.segments) {
    total += transmission_time_ms(app.upload_bits, s.up);
    total += transmission_time_ms(app.download_bits, s.down);
    total += Rational(2 * s.one_way_latency_ms);
  }
  const long long capacity = path.processor.speed * path.parallel_nodes;
  if (capacity <= 0) throw std::invalid_argument("offload_delay: processor speed must be > 0");
  total += Rational::ratio(app.processing_units, capacity) * Rational(1000);
  return {total, total.floor()};
}

inline Delay in_house_delay(const ApplicationProfile& app, const ProcessingNode& device) {
  if (device.kind != NodeKind::MobileDevice)
    throw std::invalid_argument("in_house_delay: expects the mobile device node");
  if (device.speed <= 0) throw std::invalid_argument("in_house_delay: speed must be > 0");
  Rational ms = Rational::ratio(app.processing_units, device.speed) * Rational(1000);
  return {ms, ms.floor()};
}

}  // namespace mco
