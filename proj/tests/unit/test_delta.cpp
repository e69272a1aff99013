#include <fstream>
#include <map>

#include "json.hpp"
#include "ldp/catalog.hpp"
#include "ldp/delta.hpp"
#include "ldp/error.hpp"
#include "test_helpers.hpp"

using namespace ldp;
using namespace ldp_test;
using nlohmann::json;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_catalog(LDP_TEST_CATALOG);
  return c;
}

const LogSurface& surface_of(const char* key) {
  const CaseRecord* r = catalog().find_key(key);
  REQUIRE(r != nullptr);
  return r->surface;
}

const std::map<std::string, json>& oracle_rows() {
  static const std::map<std::string, json> rows = [] {
    std::ifstream in(std::string(LDP_TEST_DATA_DIR) + "/oracle_values.json");
    std::map<std::string, json> m;
    for (const auto& row : json::parse(in)) m[row["key"].get<std::string>()] = row;
    return m;
  }();
  return rows;
}

// Sample points inside the printed interval: both ends, the midpoint and
// the quarter points (the open end is approached within 1/1000).
std::vector<Rational> samples(const CaseRecord& r) {
  const Rational lo = r.interval.low;
  const Rational hi = r.interval.high_open ? r.interval.high - Rational(1, 1000) : r.interval.high;
  if (hi <= lo) return {lo};
  return {lo, lo + (hi - lo) / 4, (lo + hi) / 2, lo + (hi - lo) * Rational(3, 4), hi};
}

}  // namespace

TEST_SUITE("delta_global") {
  TEST_CASE("delta examples") {
    DeltaReport a = delta(surface_of("2-1"), R("6/7"));
    CHECK(a.delta == 1);
    REQUIRE(a.witnesses.size() == 1);
    CHECK(a.witnesses[0].kind == DeltaWitness::Kind::Component);
    CHECK(a.witnesses[0].source == "C");
    CHECK(a.witnesses[0].value == R("6/7"));

    DeltaReport b = delta(surface_of("13-1"), R("19/21"));
    CHECK(b.delta == 2);
    REQUIRE(b.witnesses.size() == 2);
    CHECK(b.witnesses[1].kind == DeltaWitness::Kind::Exceptional);
    CHECK(b.witnesses[1].value == R("-6/7"));

    LogSurface plane;
    plane.surface = WPSDescriptor{{1, 1, 1}};
    CHECK(delta(plane, R("6/7")).delta == 0);

    CHECK_THROWS_WITH_AS(delta(surface_of("2-1"), 1), doctest::Contains("not klt"), InputError);
  }

  TEST_CASE("delta_sweep examples") {
    auto sweep = delta_sweep(surface_of("6-1[k=2]"), {R("6/7"), (R("6/7") + R("11/12")) / 2, R("11/12")});
    REQUIRE(sweep.size() == 3);
    for (const auto& [t, rep] : sweep) CHECK(rep.delta == 1);
    // The 1/4(1,1) point where C crosses the half-weight quintic becomes
    // deep at (1 - t)/4 + 1/8 = 1/7, i.e. t = 13/14.
    CHECK(delta(surface_of("11-1[k=3]"), R("19/21")).delta == 1);
    CHECK(delta(surface_of("11-1[k=3]"), R("13/14")).delta == 2);
    CHECK(default_samples(R("7/8"), false) == std::vector<Rational>{R("6/7"), R("97/112"), R("7/8")});
    CHECK(default_samples(R("19/21"), true).back() == R("19/21") - R("1/1000"));
  }

  TEST_CASE("the threshold is configurable") {
    CHECK(delta(surface_of("2-1"), R("6/7"), R("6/7")).delta == 1);
    CHECK(delta(surface_of("2-1"), R("6/7"), R("13/14")).delta == 0);
  }

  TEST_CASE("find_degeneration") {
    Degeneration a = find_degeneration(surface_of("2-1"));
    CHECK(a.t_max == R("7/8"));
    CHECK_FALSE(a.t_delta.has_value());
    CHECK(a.t_end == R("7/8"));
    CHECK_FALSE(a.open);

    Degeneration b = find_degeneration(surface_of("13-1"));
    CHECK(b.t_max == R("19/21"));
    REQUIRE(b.t_delta.has_value());
    CHECK(*b.t_delta == R("19/21"));
    CHECK(b.open);

    Degeneration c = find_degeneration(surface_of("11-1[k=3]"));
    CHECK(c.t_max == R("29/30"));
    REQUIRE(c.t_delta.has_value());
    CHECK(*c.t_delta == R("13/14"));
  }

  TEST_CASE("property: delta at 6/7 and at the midpoint is 1 on every family") {
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      CHECK(delta(r.surface, R("6/7")).delta == 1);
      CHECK(delta(r.surface, (R("6/7") + r.interval.high) / 2).delta == 1);
    }
  }

  TEST_CASE("property: delta <= 2 at every sample and witnesses back-substitute") {
    long sampled = 0;
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      for (const auto& t : samples(r)) {
        DeltaReport rep = delta(r.surface, t);
        ++sampled;
        CHECK(rep.delta <= 2);
        CHECK(rep.delta == static_cast<long>(rep.witnesses.size()));
        for (const auto& w : rep.witnesses) {
          if (w.kind == DeltaWitness::Kind::Component) {
            CHECK(w.value >= R("6/7"));
            CHECK(Rational(1) - w.value == w.log_discrepancy.eval(t));
          } else {
            CHECK(w.value <= R("-6/7"));
            CHECK(w.log_discrepancy.eval(t) - 1 == w.value);
          }
        }
      }
    }
    CHECK(sampled > 700);
  }

  TEST_CASE("property: without C nothing is deep at 6/7") {
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      CHECK(delta(r.surface.with_coefficient("C", 0), R("6/7")).delta == 0);
    }
  }

  TEST_CASE("agreement with the independent oracle") {
    const auto& rows = oracle_rows();
    REQUIRE(rows.size() == catalog().records.size());
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      const json& row = rows.at(r.key);
      CHECK(delta(r.surface, R("6/7")).delta == row["delta_low"].get<long>());
      CHECK(delta(r.surface, (R("6/7") + r.interval.high) / 2).delta == row["delta_mid"].get<long>());
      if (!row["delta_high"].is_null()) {
        CHECK(delta(r.surface, r.interval.high).delta == row["delta_high"].get<long>());
      }
      Degeneration d = find_degeneration(r.surface);
      CHECK(d.t_max == Rational::parse(row["t_max"].get<std::string>()));
      if (!row["first_delta2"].is_null()) {
        // The oracle scans small denominators, so it can only land at or
        // after the exact onset.
        const Rational scan = Rational::parse(row["first_delta2"].get<std::string>());
        REQUIRE(d.t_delta.has_value());
        CHECK(*d.t_delta <= scan);
        CHECK(delta(r.surface, scan).delta >= 2);
      }
      if (d.t_delta && *d.t_delta < R("99/100") && *d.t_delta <= d.t_max) {
        CHECK(delta(r.surface, *d.t_delta).delta >= 2);
        if (*d.t_delta > R("6/7")) CHECK(delta(r.surface, *d.t_delta - R("1/100000")).delta == 1);
      }
    }
  }
}
