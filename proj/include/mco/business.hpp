#pragma once

#include <stdexcept>
#include <string>

namespace mco {

/// Per-bit prices and traffic shape for the periodic-update cost model.
/// `a` is uplink to the serving gateway, `b` unicast downlink, `c` the
/// Wi-Fi peer link; multicast downlink costs b/m.
struct BusinessParams {
  double a{0};
  double b{0};
  double c{0};
  double m{10};               // multicast discount factor, >= 1
  long long n{100};           // peers within Wi-Fi range
  long long big_m{100};       // users per cell sharing one multicast channel
  double rq{0};               // request size, bits
  double rp{0};               // periodic response size, bits
  int updates_per_hour{60};   // one update per minute
};

inline void validate_business(const BusinessParams& p) {
  if (p.m < 1) throw std::invalid_argument("business: m >= 1 required");
  if (p.n < 1 || p.big_m < 1) throw std::invalid_argument("business: N, M >= 1 required");
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.rq < 0 || p.rp < 0 || p.updates_per_hour < 0)
    throw std::invalid_argument("business: negative parameter");
}

/// Physical-layer unicast bundling: delivering the same payload to n
/// hosts consumes n times the single-host bandwidth.
inline double unicast_bundle_bandwidth(double n, double bw_one) {
  if (n < 0) throw std::invalid_argument("unicast_bundle_bandwidth: n >= 0 required");
  return n * bw_one;
}

enum class CostRole {
  Ocmca,
  RemoteCloud,
  VirtualCloudSharer,
  VirtualCloudDownloader,
  Cloudlet,
};

inline const char* to_string(CostRole r) {
  switch (r) {
    case CostRole::Ocmca: return "ocmca";
    case CostRole::RemoteCloud: return "remote_cloud";
    case CostRole::VirtualCloudSharer: return "virtual_cloud_sharer";
    case CostRole::VirtualCloudDownloader: return "virtual_cloud_downloader";
    case CostRole::Cloudlet: return "cloudlet";
  }
  return "?";
}

/// Hourly cost of the periodic-update application for one user in the
/// given role. The published cost table prints `rq` inside some of the
/// per-update downlink terms although the surrounding text fixes the
/// periodic payload as `rp`; the default uses `rp` for every downlink
/// term and `strict_table` reproduces the printed formulas verbatim.
inline double hourly_cost(CostRole role, const BusinessParams& p, bool strict_table = false) {
  validate_business(p);
  const double k = p.updates_per_hour;
  const double dl = strict_table ? p.rq : p.rp;  // per-update payload on LTE downlink
  switch (role) {
    case CostRole::Ocmca:
      return p.rq * p.a + k * dl * (p.b / p.m);
    case CostRole::RemoteCloud:
      return p.rq * p.a + k * dl * p.b;
    case CostRole::VirtualCloudSharer:
      return p.rq * p.c + k * p.rp * p.c + static_cast<double>(p.n) * k * p.rp * p.c;
    case CostRole::VirtualCloudDownloader:
      return p.rq * p.a + k * p.rp * p.b + k * p.rp * p.c;
    case CostRole::Cloudlet:
      return p.rq * p.c + k * p.rp * p.c;
  }
  throw std::invalid_argument("hourly_cost: unknown role");
}

/// Average over one downloader plus N-1 sharers.
inline double virtual_cloud_average_cost(const BusinessParams& p, bool strict_table = false) {
  validate_business(p);
  const double down = hourly_cost(CostRole::VirtualCloudDownloader, p, strict_table);
  const double share = hourly_cost(CostRole::VirtualCloudSharer, p, strict_table);
  return (down + static_cast<double>(p.n - 1) * share) / static_cast<double>(p.n);
}

/// Simplified per-channel comparison with free Wi-Fi (C = 0), in units
/// of one hour of unicast downlink updates (the common join cost and the
/// 60 x rq scale are divided out).
struct SimplifiedEntry {
  std::string architecture;
  double user_cost;
  double operator_revenue;  // per downlink channel
};

struct SimplifiedComparison {
  SimplifiedEntry remote_cloud;
  SimplifiedEntry virtual_cloud;  // user cost is the per-user average
  SimplifiedEntry cloudlet;
  SimplifiedEntry ocmca;
};

inline SimplifiedComparison simplified_comparison(const BusinessParams& p) {
  validate_business(p);
  const double b = p.b;
  SimplifiedComparison out;
  out.remote_cloud = {"remote_cloud", b, b};
  out.virtual_cloud = {"virtual_cloud", b / static_cast<double>(p.n), b};
  out.cloudlet = {"cloudlet", 0.0, 0.0};
  out.ocmca = {"ocmca", b / p.m, static_cast<double>(p.big_m) * b / p.m};
  return out;
}

}  // namespace mco
