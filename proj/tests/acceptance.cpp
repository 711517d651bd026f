// Acceptance suite: exercises every published-results criterion end to
// end and prints one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mco/aka.hpp"
#include "mco/business.hpp"
#include "mco/scenario.hpp"
#include "mco/verify.hpp"

using namespace mco;

namespace {

int g_failures = 0;
std::ostringstream g_detail;

void criterion(int number, const std::string& description, bool ok) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, description.c_str());
  if (!ok) {
    ++g_failures;
    std::fputs(g_detail.str().c_str(), stdout);
  }
  g_detail.str("");
}

bool expect(bool ok, const std::string& what) {
  if (!ok) g_detail << "    failed: " << what << "\n";
  return ok;
}

const Catalog& cat() {
  static const Catalog c = builtin_catalog();
  return c;
}

const std::vector<MetricsRecord>& matrix() {
  static const auto m = evaluate_matrix(
      cat(),
      {ArchitectureKind::InHouse, ArchitectureKind::RemoteCloud, ArchitectureKind::VirtualCloud,
       ArchitectureKind::Cloudlet, ArchitectureKind::OcmcaUnicast},
      cat().applications);
  return m;
}

const MetricsRecord& record(ArchitectureKind kind, int profile) {
  for (const auto& r : matrix())
    if (r.architecture == kind && r.profile_id == profile) return r;
  throw std::logic_error("record missing");
}

// ---------------------------------------------------------------------

bool criterion1_in_house() {
  bool ok = true;
  const auto& r1 = record(ArchitectureKind::InHouse, 1);
  const auto& r2 = record(ArchitectureKind::InHouse, 2);
  ok &= expect(r1.delay.reported_ms == 100'000, "profile 1 delay 100000 ms");
  ok &= expect(r1.energy == Rational(8'000'000'000), "profile 1 power 8000e6");
  ok &= expect(r1.cost.low == Rational(0) && r1.cost.high == Rational(0), "profile 1 cost 0");
  ok &= expect(r2.delay.reported_ms == 1'000, "profile 2 delay 1000 ms");
  ok &= expect(r2.energy == Rational(80'000'000), "profile 2 power 80e6");
  ok &= expect(r2.cost.low == Rational(0) && r2.cost.high == Rational(0), "profile 2 cost 0");
  return ok;
}

bool delay_cell_unattainable(ArchitectureKind kind, int profile, long long reference_ms) {
  // lower bound from the serialization and processing terms alone
  const auto* app = cat().find_application(profile);
  const DataPath path = build_path(kind, cat());
  Rational lower(0);
  for (const auto& seg : path.segments)
    lower += transmission_time_ms(app->download_bits, seg.down);
  lower += Rational::ratio(app->processing_units, path.processor.speed * path.parallel_nodes) *
           Rational(1000);
  return Rational(reference_ms) < lower;
}

bool criterion2_delays() {
  bool ok = true;
  const std::set<std::pair<ref::Table, int>> ledgered = {
      {ref::Table::RemoteCloud, 3}, {ref::Table::RemoteCloud, 6}, {ref::Table::Ocmca, 3},
      {ref::Table::Ocmca, 6},       {ref::Table::Cloudlet, 6},    {ref::Table::Cloudlet, 8},
  };
  for (auto table : {ref::Table::RemoteCloud, ref::Table::Cloudlet, ref::Table::Ocmca}) {
    const ArchitectureKind kind = table == ref::Table::RemoteCloud
                                      ? ArchitectureKind::RemoteCloud
                                      : table == ref::Table::Cloudlet
                                            ? ArchitectureKind::Cloudlet
                                            : ArchitectureKind::OcmcaUnicast;
    for (const auto& row : ref::metric_table(table).rows) {
      if (row.disqualified) continue;
      const auto& rec = record(kind, row.profile);
      if (ledgered.count({table, row.profile})) {
        // the excepted cells must be provably out of reach, not just skipped
        ok &= expect(delay_cell_unattainable(kind, row.profile, row.delay_ms),
                     std::string(ref::to_string(table)) + " row " + rec.row_label +
                         " reference delay below the model's serialization floor");
        continue;
      }
      const long long diff = std::llabs(rec.delay.reported_ms - row.delay_ms);
      const long long slack = table == ref::Table::Cloudlet ? 0 : 2;  // cloudlet rows exact
      ok &= expect(diff <= slack, std::string(ref::to_string(table)) + " row " + rec.row_label +
                                      " delay " + std::to_string(rec.delay.reported_ms) +
                                      " vs " + std::to_string(row.delay_ms));
    }
  }
  return ok;
}

bool power_within(const Rational& engine, long long reference, long long permille) {
  Rational diff = engine - Rational(reference);
  if (diff < Rational(0)) diff = -diff;
  return diff * Rational(1000) <= Rational(reference) * Rational(permille);
}

bool criterion3_power() {
  bool ok = true;
  // peer cloud and cloudlet: every qualified row is reproduced exactly
  for (auto table : {ref::Table::VirtualCloud, ref::Table::Cloudlet}) {
    const ArchitectureKind kind = table == ref::Table::VirtualCloud
                                      ? ArchitectureKind::VirtualCloud
                                      : ArchitectureKind::Cloudlet;
    for (const auto& row : ref::metric_table(table).rows) {
      if (row.disqualified) continue;
      ok &= expect(record(kind, row.profile).energy == Rational(row.power),
                   std::string(ref::to_string(table)) + " row " +
                       std::to_string(row.profile) + " power exact");
    }
  }
  ok &= expect(record(ArchitectureKind::VirtualCloud, 1).energy == Rational(801'001'000),
               "peer-cloud profile 1 power 801.001e6");
  ok &= expect(record(ArchitectureKind::Cloudlet, 15).energy == Rational(60'011'000),
               "cloudlet profile 15 power 60.011e6");

  // LTE tables: within 10% outside the ledgered cells
  for (auto table : {ref::Table::RemoteCloud, ref::Table::Ocmca}) {
    const ArchitectureKind kind = table == ref::Table::RemoteCloud
                                      ? ArchitectureKind::RemoteCloud
                                      : ArchitectureKind::OcmcaUnicast;
    for (const auto& row : ref::metric_table(table).rows) {
      if (row.disqualified || row.profile == 3) continue;
      if (table == ref::Table::RemoteCloud && row.profile == 11) continue;
      ok &= expect(power_within(record(kind, row.profile).energy, row.power, 100),
                   std::string(ref::to_string(table)) + " row " +
                       std::to_string(row.profile) + " power within 10%");
    }
  }

  // operator-cloud row 11 also lands within the printed precision
  Rational diff = record(ArchitectureKind::OcmcaUnicast, 11).energy - Rational(134'500'000);
  if (diff < Rational(0)) diff = -diff;
  ok &= expect(diff <= Rational(50'000), "operator-cloud row 11 power 134.5e6 exact");
  return ok;
}

bool criterion4_cost() {
  bool ok = true;
  for (const auto& row : ref::metric_table(ref::Table::RemoteCloud).rows) {
    const auto& rec = record(ArchitectureKind::RemoteCloud, row.profile);
    ok &= expect(rec.cost.low == Rational(row.cost_low) && rec.cost.high == Rational(row.cost_high),
                 "remote-cloud cost row " + std::to_string(row.profile));
    ok &= expect(rec.cost.high == rec.cost.low * Rational(100), "roaming ratio 100");
  }
  for (const auto& row : ref::metric_table(ref::Table::Ocmca).rows) {
    const auto& rec = record(ArchitectureKind::OcmcaUnicast, row.profile);
    ok &= expect(rec.cost.low == Rational(row.cost_low) && rec.cost.high == Rational(row.cost_high),
                 "operator-cloud cost row " + std::to_string(row.profile));
    ok &= expect(rec.cost.low * Rational(10) == rec.cost.high, "multicast ratio 10");
  }
  for (const auto& row : ref::metric_table(ref::Table::VirtualCloud).rows) {
    if (row.disqualified) continue;
    const auto& rec = record(ArchitectureKind::VirtualCloud, row.profile);
    const auto* app = cat().find_application(row.profile);
    const Rational expected =
        app->resource_sharing
            ? Rational(10 * (app->upload_bits + app->download_bits) * cat().tariff.wifi_bit_cost)
            : Rational(0);
    ok &= expect(rec.cost.low == expected && rec.cost.high == expected,
                 "peer-cloud cost row " + std::to_string(row.profile));
    ok &= expect(rec.cost.low == Rational(row.cost_low),
                 "peer-cloud cost matches the reference row " + std::to_string(row.profile));
  }
  ok &= expect(record(ArchitectureKind::VirtualCloud, 6).cost.low == Rational(100'010'000),
               "peer-cloud row 6&10 cost 100.01e6");
  for (const auto& row : ref::metric_table(ref::Table::Cloudlet).rows) {
    if (row.disqualified || row.profile == 15) continue;  // row 15 cost is ledgered
    const auto& rec = record(ArchitectureKind::Cloudlet, row.profile);
    ok &= expect(rec.cost.low == Rational(row.cost_low),
                 "cloudlet cost row " + std::to_string(row.profile));
  }
  // the ledgered cloudlet cell: the engine value follows the tariff model
  ok &= expect(record(ArchitectureKind::Cloudlet, 15).cost.low == Rational(11'000),
               "cloudlet row 15 engine cost 11000");
  return ok;
}

bool criterion5_ranking() {
  bool ok = true;
  const auto result = verify::verify_against_reference();
  int mismatched = 0, ledgered = 0;
  for (const auto& cell : result.rank_cells) {
    if (cell.ledgered) {
      ++ledgered;
      continue;
    }
    if (!cell.match) {
      ++mismatched;
      expect(false, "rank " + cell.table + " row " + cell.row_label + " column " + cell.column +
                        ": engine " + cell.engine + " vs " + cell.reference);
    }
  }
  ok &= expect(mismatched == 0, "every non-ledgered rank cell matches");
  ok &= expect(ledgered == 7, "seven ledgered rank cells");
  for (const auto& flag : result.flag_checks)
    ok &= expect(flag.ok, "disqualification flags match");

  // ordinal invariance: strictly increasing transforms keep the ranks
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    std::vector<std::optional<double>> vs;
    for (int i = 0; i < 5; ++i) vs.push_back(value(rng));
    auto transformed = vs;
    for (auto& v : transformed) v = std::exp(*v / 50.0) + *v;
    ok &= expect(competition_ranks(vs) == competition_ranks(transformed),
                 "ranks invariant under increasing transforms");
  }
  return ok;
}

bool criterion6_business() {
  bool ok = true;
  BusinessParams p;
  p.b = 1.0;
  p.c = 0.0;
  p.m = 10;
  p.n = 100;
  p.big_m = 100;
  const auto s = simplified_comparison(p);
  ok &= expect(s.ocmca.user_cost == 1.0 / 10.0, "user cost B/10");
  ok &= expect(s.ocmca.operator_revenue == 10.0, "operator revenue 10B");

  std::mt19937 rng(37);
  std::uniform_real_distribution<double> value(0.0, 1e5);
  const CostRole roles[] = {CostRole::Ocmca, CostRole::RemoteCloud,
                            CostRole::VirtualCloudSharer, CostRole::VirtualCloudDownloader,
                            CostRole::Cloudlet};
  for (int i = 0; i < 1000 && ok; ++i) {
    BusinessParams q;
    q.a = value(rng);
    q.b = value(rng);
    q.c = value(rng);
    q.rq = value(rng);
    q.rp = value(rng);
    q.m = 1.0 + value(rng) / 1e3;
    q.n = 1 + i % 500;
    q.big_m = 1 + i % 900;
    const CostRole role = roles[i % 5];
    BusinessParams only_a = q, only_b = q, only_c = q;
    only_a.b = only_a.c = 0;
    only_b.a = only_b.c = 0;
    only_c.a = only_c.b = 0;
    const double whole = hourly_cost(role, q);
    const double parts =
        hourly_cost(role, only_a) + hourly_cost(role, only_b) + hourly_cost(role, only_c);
    ok &= expect(std::abs(whole - parts) <= 1e-9 * std::max(1.0, std::abs(whole)),
                 "superposition in the three prices");
  }
  return ok;
}

bool criterion7_bundling() {
  bool ok = true;
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> n_dist(0.0, 1e6);
  std::uniform_real_distribution<double> bw_dist(0.0, 1e9);
  for (int i = 0; i < 1000 && ok; ++i) {
    const double n1 = n_dist(rng), n2 = n_dist(rng), bw = bw_dist(rng);
    const double lhs = unicast_bundle_bandwidth(n1 + n2, bw);
    const double rhs = unicast_bundle_bandwidth(n1, bw) + unicast_bundle_bandwidth(n2, bw);
    ok &= expect(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)),
                 "bundled bandwidth additive in n");
    const double k = n_dist(rng) / 1e3;
    ok &= expect(std::abs(unicast_bundle_bandwidth(k * n1, bw) -
                          k * unicast_bundle_bandwidth(n1, bw)) <=
                     1e-9 * std::max(1.0, std::abs(k * n1 * bw)),
                 "bundled bandwidth homogeneous in n");
  }
  ok &= expect(unicast_bundle_bandwidth(0, 123.0) == 0.0, "zero recipients, zero bandwidth");
  ok &= expect(unicast_bundle_bandwidth(1, 123.0) == 123.0, "one recipient, one share");
  return ok;
}

bool criterion8_aka() {
  using namespace mco::aka;
  bool ok = true;

  auto subscriber_key = [](int i) {
    Key128 k{};
    for (size_t b = 0; b < k.size(); ++b) k[b] = static_cast<uint8_t>(i * 7 + 13 * b);
    return k;
  };
  auto subscriber_imsi = [](int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "20893%010d", i + 1);
    return std::string(buf);
  };

  // honest mutual authentication over 100 seeded subscribers
  for (int i = 0; i < 100 && ok; ++i) {
    Hss hss;
    hss.provision({subscriber_imsi(i), subscriber_key(i), 0, 0x8000});
    Mme mme("20893");
    Ue ue(subscriber_imsi(i), subscriber_key(i));
    const AkaSession s = run_aka(ue, mme, hss, {.seed = static_cast<uint64_t>(i)});
    ok &= expect(s.state == SessionState::Authenticated, "honest run authenticates");
    ok &= expect(s.ue_kasme && s.network_kasme && *s.ue_kasme == *s.network_kasme,
                 "both sides derive the same master key");
    ok &= expect(s.transcript.size() == 5, "five messages on the honest path");
  }

  // exhaustive single-bit tampering across the challenge and the response
  for (int bit = 0; bit < 128 && ok; ++bit) {
    Hss hss;
    hss.provision({subscriber_imsi(0), subscriber_key(0), 0, 0x8000});
    Mme mme("20893");
    Ue ue(subscriber_imsi(0), subscriber_key(0));
    RunOptions o;
    o.seed = static_cast<uint64_t>(bit);
    o.autn_flip_bit = bit;
    const AkaSession s = run_aka(ue, mme, hss, o);
    ok &= expect(s.state != SessionState::Authenticated, "flipped challenge bit rejected");
    ok &= expect(s.failure == FailureReason::MacMismatch, "challenge flip detected as MAC");
  }
  for (int bit = 0; bit < 64 && ok; ++bit) {
    Hss hss;
    hss.provision({subscriber_imsi(0), subscriber_key(0), 0, 0x8000});
    Mme mme("20893");
    Ue ue(subscriber_imsi(0), subscriber_key(0));
    RunOptions o;
    o.seed = static_cast<uint64_t>(bit);
    o.res_flip_bit = bit;
    const AkaSession s = run_aka(ue, mme, hss, o);
    ok &= expect(s.state != SessionState::Authenticated, "flipped response bit rejected");
    ok &= expect(s.failure == FailureReason::ResMismatch, "response flip detected");
  }

  // vector replay is stale
  for (int i = 0; i < 20 && ok; ++i) {
    SubscriberRecord rec{subscriber_imsi(i), subscriber_key(i), 0, 0x8000};
    const Rand128 rand = rand_from_seed(static_cast<uint64_t>(i));
    const AuthVector av = generate_auth_vector(rec, "20893", rand);
    const auto first = ue_process_challenge(rec.k, 0, 1, rand, av.autn, "20893");
    ok &= expect(first.ok(), "fresh vector accepted");
    const auto replay = ue_process_challenge(rec.k, first.keys->sqn, 1, rand, av.autn, "20893");
    ok &= expect(!replay.ok() && replay.failure == UeFailure::SqnOutOfRange,
                 "replayed vector is out of range");
  }

  // serving-network swap always diverges the master keys
  for (int i = 0; i < 100 && ok; ++i) {
    Hss hss;
    hss.provision({subscriber_imsi(i), subscriber_key(i), 0, 0x8000});
    Mme mme("20893");
    Ue ue(subscriber_imsi(i), subscriber_key(i));
    RunOptions o;
    o.seed = static_cast<uint64_t>(1000 + i);
    o.tamper = RunOptions::Tamper::Snid;
    const AkaSession s = run_aka(ue, mme, hss, o);
    ok &= expect(s.state == SessionState::Failed && s.failure == FailureReason::KeyMismatch,
                 "identity swap fails the key check");
    ok &= expect(s.ue_kasme && s.network_kasme && !(*s.ue_kasme == *s.network_kasme),
                 "identity swap diverges the master keys");
  }

  // transcripts are a pure function of the seed
  {
    Hss h1, h2;
    h1.provision({subscriber_imsi(0), subscriber_key(0), 0, 0x8000});
    h2.provision({subscriber_imsi(0), subscriber_key(0), 0, 0x8000});
    Mme m1("20893"), m2("20893");
    Ue u1(subscriber_imsi(0), subscriber_key(0)), u2(subscriber_imsi(0), subscriber_key(0));
    ok &= expect(run_aka(u1, m1, h1, {.seed = 7}).dump() ==
                     run_aka(u2, m2, h2, {.seed = 7}).dump(),
                 "same seed, same transcript");
  }
  return ok;
}

bool criterion9_verify() {
  bool ok = true;
  const auto result = verify::verify_against_reference();
  ok &= expect(result.ok(), "verification exits clean");

  using MetricKey = std::tuple<ref::Table, int, ref::Metric>;
  const std::set<MetricKey> expected_metric = {
      {ref::Table::RemoteCloud, 3, ref::Metric::Cost},
      {ref::Table::RemoteCloud, 3, ref::Metric::Delay},
      {ref::Table::RemoteCloud, 3, ref::Metric::Power},
      {ref::Table::RemoteCloud, 5, ref::Metric::Power},
      {ref::Table::RemoteCloud, 6, ref::Metric::Delay},
      {ref::Table::RemoteCloud, 11, ref::Metric::Power},
      {ref::Table::RemoteCloud, 12, ref::Metric::Power},
      {ref::Table::VirtualCloud, 6, ref::Metric::Delay},
      {ref::Table::Cloudlet, 6, ref::Metric::Delay},
      {ref::Table::Cloudlet, 8, ref::Metric::Delay},
      {ref::Table::Cloudlet, 15, ref::Metric::Cost},
      {ref::Table::Ocmca, 3, ref::Metric::Cost},
      {ref::Table::Ocmca, 3, ref::Metric::Delay},
      {ref::Table::Ocmca, 3, ref::Metric::Power},
      {ref::Table::Ocmca, 5, ref::Metric::Power},
      {ref::Table::Ocmca, 6, ref::Metric::Delay},
      {ref::Table::Ocmca, 12, ref::Metric::Power},
  };
  std::set<MetricKey> actual_metric;
  for (const auto* cell : result.metric_ledger())
    actual_metric.insert({cell->table, cell->profile, cell->metric});
  ok &= expect(actual_metric == expected_metric,
               "metric ledger holds exactly the documented cells");

  using RankKey = std::tuple<std::string, int, std::string>;
  const std::set<RankKey> expected_rank = {
      {"delay", 6, "remote_cloud"}, {"delay", 6, "cloudlet"},
      {"delay", 8, "virtual_cloud"}, {"delay", 8, "cloudlet"},
      {"cost", 15, "cloudlet"},     {"ocmca_overall", 6, "delay"},
      {"ocmca_overall", 7, "power"},
  };
  std::set<RankKey> actual_rank;
  for (const auto* cell : result.rank_ledger())
    actual_rank.insert({cell->table, cell->profile, cell->column});
  ok &= expect(actual_rank == expected_rank, "rank ledger holds exactly the documented cells");

  // every ledgered rank cell indeed disagrees with the engine value
  for (const auto* cell : result.rank_ledger())
    ok &= expect(!cell->match, "ledgered rank cells genuinely deviate");
  return ok;
}

}  // namespace

int main() {
  criterion(1, "standalone table reproduced exactly", criterion1_in_house());
  criterion(2, "delay columns within 2 ms, ledgered cells provably unattainable",
            criterion2_delays());
  criterion(3, "power columns exact or within 10%", criterion3_power());
  criterion(4, "cost columns exact with the documented ratios", criterion4_cost());
  criterion(5, "rank tables ordinally sound and faithful", criterion5_ranking());
  criterion(6, "multicast business model exact and linear", criterion6_business());
  criterion(7, "unicast bundling linear over the sweep range", criterion7_bundling());
  criterion(8, "authentication protocol properties", criterion8_aka());
  criterion(9, "reference verification passes with the documented ledger",
            criterion9_verify());

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
