#include <catch2/catch_amalgamated.hpp>

#include "mco/metrics.hpp"

using namespace mco;

namespace {
const Catalog& cat() {
  static const Catalog c = builtin_catalog();
  return c;
}

Rational energy_for(ArchitectureKind kind, int app_id) {
  const auto* app = cat().find_application(app_id);
  REQUIRE(app);
  const Delay d = kind == ArchitectureKind::InHouse
                      ? in_house_delay(*app, build_path(kind, cat()).processor)
                      : offload_delay(build_path(kind, cat()), *app);
  return offload_energy(kind, *app, d.exact_ms, cat());
}

Rational abs_diff(const Rational& a, long long b) {
  Rational d = a - Rational(b);
  return d < Rational(0) ? -d : d;
}
}  // namespace

TEST_CASE("energy matches the reference cells") {
  CHECK(energy_for(ArchitectureKind::InHouse, 1) == Rational(8'000'000'000));
  CHECK(energy_for(ArchitectureKind::InHouse, 2) == Rational(80'000'000));
  // cloudlet: bit energy plus waiting for the server's 2 s of work
  CHECK(energy_for(ArchitectureKind::Cloudlet, 15) == Rational(60'011'000));
  // virtual cloud: bit energy plus computing the own 10 s share
  CHECK(energy_for(ArchitectureKind::VirtualCloud, 1) == Rational(801'001'000));
  // LTE paths: within 5% of the published 27.433e6
  const Rational rc2 = energy_for(ArchitectureKind::RemoteCloud, 2);
  CHECK(abs_diff(rc2, 27'433'000) * Rational(20) < Rational(27'433'000));
  // operator cloud row 11 lands within the printed precision of 134.5e6
  const Rational oc11 = energy_for(ArchitectureKind::OcmcaUnicast, 11);
  CHECK(abs_diff(oc11, 134'500'000) <= Rational(50'000));
}

TEST_CASE("monetary cost per architecture") {
  const auto* app1 = cat().find_application(1);
  const auto rc = monetary_cost(ArchitectureKind::RemoteCloud, *app1, cat().tariff);
  CHECK(rc.low == Rational(1'001'000));
  CHECK(rc.high == Rational(100'100'000));

  const auto* app11 = cat().find_application(11);
  const auto oc = monetary_cost(ArchitectureKind::OcmcaUnicast, *app11, cat().tariff);
  CHECK(oc.low == Rational(200'000));
  CHECK(oc.high == Rational(2'000'000));

  const auto* app6 = cat().find_application(6);
  const auto vc = monetary_cost(ArchitectureKind::VirtualCloud, *app6, cat().tariff, 10);
  CHECK(vc.low == Rational(100'010'000));
  CHECK(vc.low == vc.high);

  // no resource sharing, no peer payment
  const auto vc1 = monetary_cost(ArchitectureKind::VirtualCloud, *app1, cat().tariff, 10);
  CHECK(vc1.low == Rational(0));
  CHECK(vc1.high == Rational(0));

  const auto ih = monetary_cost(ArchitectureKind::InHouse, *app1, cat().tariff);
  CHECK(ih.low == Rational(0));
}

TEST_CASE("downlink-only multicast discount") {
  const auto* app11 = cat().find_application(11);  // 1e6 up, 1e6 down
  const auto range = monetary_cost(ArchitectureKind::OcmcaUnicast, *app11, cat().tariff, 10,
                                   OcmcaDiscountMode::DownlinkOnly);
  CHECK(range.low == Rational(1'100'000));
  CHECK(range.high == Rational(2'000'000));
}

TEST_CASE("zero traffic leaves only the waiting term") {
  ApplicationProfile app;
  app.ids = {93};
  app.processing_units = 1000;
  const Delay d = offload_delay(build_path(ArchitectureKind::RemoteCloud, cat()), app);
  const Rational e = offload_energy(ArchitectureKind::RemoteCloud, app, d.exact_ms, cat());
  CHECK(e == Rational(cat().energy.idle_power) * d.exact_ms / Rational(1000));
  for (auto kind : {ArchitectureKind::RemoteCloud, ArchitectureKind::OcmcaUnicast,
                    ArchitectureKind::VirtualCloud, ArchitectureKind::Cloudlet}) {
    const auto cost = monetary_cost(kind, app, cat().tariff);
    CHECK(cost.low == Rational(0));
    CHECK(cost.high == Rational(0));
  }
}

TEST_CASE("cost range ratios") {
  for (const auto& app : cat().applications) {
    const auto rc = monetary_cost(ArchitectureKind::RemoteCloud, app, cat().tariff);
    CHECK(rc.high == rc.low * Rational(100));
    const auto oc = monetary_cost(ArchitectureKind::OcmcaUnicast, app, cat().tariff);
    CHECK(oc.low * cat().tariff.multicast_factor == oc.high);
  }
}

TEST_CASE("virtual-cloud energy ignores latency constants") {
  Catalog slow = builtin_catalog();
  for (auto& seg : slow.segments) seg.one_way_latency_ms += 500;
  const auto* app = cat().find_application(8);
  const Delay fast_delay = offload_delay(build_path(ArchitectureKind::VirtualCloud, cat()), *app);
  const Delay slow_delay = offload_delay(build_path(ArchitectureKind::VirtualCloud, slow), *app);
  CHECK(offload_energy(ArchitectureKind::VirtualCloud, *app, fast_delay.exact_ms, cat()) ==
        offload_energy(ArchitectureKind::VirtualCloud, *app, slow_delay.exact_ms, slow));
}

TEST_CASE("energy is additive per bit at fixed delay") {
  ApplicationProfile a;
  a.ids = {94};
  a.upload_bits = 10'000;
  a.download_bits = 5'000;
  a.processing_units = 100;
  ApplicationProfile b = a;
  b.upload_bits += 7'777;
  const Rational window = Rational(1234);
  const Rational ea = offload_energy(ArchitectureKind::RemoteCloud, a, window, cat());
  const Rational eb = offload_energy(ArchitectureKind::RemoteCloud, b, window, cat());
  CHECK(eb - ea == Rational(cat().energy.lte_bit_energy * 7'777));
}

TEST_CASE("evaluate_cell handles disqualification and annotation") {
  const auto* app12 = cat().find_application(12);
  CHECK(evaluate_cell(ArchitectureKind::VirtualCloud, *app12, cat()).status ==
        CellStatus::Disqualified);
  const auto* app11 = cat().find_application(11);
  CHECK(evaluate_cell(ArchitectureKind::Cloudlet, *app11, cat()).status ==
        CellStatus::Disqualified);

  const auto rc12 = evaluate_cell(ArchitectureKind::RemoteCloud, *app12, cat());
  CHECK(rc12.status == CellStatus::Ok);
  CHECK(rc12.delay.reported_ms == 98);
  CHECK(rc12.cost.low == Rational(2'000));
  CHECK(rc12.cost.high == Rational(200'000));

  // deviation annotations come from the reference dataset
  const auto* app3 = cat().find_application(3);
  CHECK(evaluate_cell(ArchitectureKind::RemoteCloud, *app3, cat()).deviation_flag ==
        "cost,delay,power");
  const auto* app15 = cat().find_application(15);
  CHECK(evaluate_cell(ArchitectureKind::Cloudlet, *app15, cat()).deviation_flag == "cost");
  const auto* app1 = cat().find_application(1);
  CHECK(evaluate_cell(ArchitectureKind::RemoteCloud, *app1, cat()).deviation_flag.empty());

  // in-house exists only for the standalone-capable profiles
  CHECK(evaluate_cell(ArchitectureKind::InHouse, *app12, cat()).status ==
        CellStatus::NotApplicable);
  CHECK(evaluate_cell(ArchitectureKind::InHouse, *app1, cat()).status == CellStatus::Ok);
}

TEST_CASE("negative inputs are rejected") {
  ApplicationProfile bad;
  bad.ids = {95};
  bad.upload_bits = -1;
  CHECK_THROWS_AS(offload_energy(ArchitectureKind::RemoteCloud, bad, Rational(1), cat()),
                  std::invalid_argument);
}
