#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

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

json catalog_json() {
  std::ifstream in(LDP_TEST_CATALOG);
  return json::parse(in);
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> failing(const VerificationReport& r) {
  std::vector<std::string> out;
  for (const auto& c : r.checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

VerificationReport verify_key(const std::string& key) {
  const CaseRecord* r = catalog().find_key(key);
  REQUIRE(r != nullptr);
  return verify_case(*r);
}

}  // namespace

TEST_SUITE("case_catalog") {
  TEST_CASE("the shipped catalog covers all 56 families") {
    std::vector<long> fams = catalog().families();
    std::vector<long> want(56);
    std::iota(want.begin(), want.end(), 1L);
    CHECK(fams == want);
    CHECK(catalog().records.size() == 181);
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      CHECK(r.interval.low == R("6/7"));
      CHECK(r.surface.has_param_curve());
    }
  }

  TEST_CASE("lookup by key, id and case") {
    CHECK(catalog().resolve("2-1").size() == 1);
    CHECK(catalog().resolve("2-1(ell)").size() == 2);
    CHECK(catalog().resolve("11-1").size() == 3);
    CHECK(catalog().resolve("11-1[k=4]").size() == 1);
    CHECK(catalog().resolve("99-9").empty());
  }

  TEST_CASE("loader errors") {
    CHECK_THROWS_WITH_AS(parse_catalog_text(""), "no records", InputError);
    CHECK_THROWS_WITH_AS(parse_catalog_text(R"({"schema":"ldp-catalog","version":1,"records":[]})"), "no records",
                         InputError);
    CHECK_THROWS_WITH_AS(parse_catalog_text("{"), doctest::Contains("malformed catalog"), InputError);
    CHECK_THROWS_AS(load_catalog("/nonexistent/catalog.json"), InputError);

    json v2 = catalog_json();
    v2["version"] = 2;
    CHECK_THROWS_WITH_AS(parse_catalog(v2), doctest::Contains("schema version mismatch"), InputError);

    json marker = catalog_json();
    marker["records"][0]["marker"] = "+x";
    CHECK_THROWS_WITH_AS(parse_catalog(marker), doctest::Contains("unknown marker"), InputError);

    json undeclared = catalog_json();
    undeclared["records"][11]["points"][0]["branches"].push_back({{"curve", "B9"}, {"shape", "axis2"}});
    CHECK_THROWS_WITH_AS(parse_catalog(undeclared), doctest::Contains("undeclared incidence"), InputError);

    json missing = catalog_json();
    missing["records"][3]["interval"].erase("high");
    CHECK_THROWS_WITH_AS(parse_catalog(missing),
                         doctest::Contains("$.records[3] (1-2[k=6]).interval: missing field 'high'"), InputError);

    json bad_rational = catalog_json();
    bad_rational["records"][0]["interval"]["high"] = "0.9";
    CHECK_THROWS_WITH_AS(parse_catalog(bad_rational), doctest::Contains("$.records[0]"), InputError);

    json dup = catalog_json();
    dup["records"].push_back(dup["records"][0]);
    CHECK_THROWS_WITH_AS(parse_catalog(dup), doctest::Contains("duplicate record key"), InputError);
  }

  TEST_CASE("lint: a contact exceeding the declared incidences is rejected") {
    json doc = catalog_json();
    json& rec = doc["records"][12];
    REQUIRE(rec["key"] == "2-2");
    rec["points"].erase(rec["points"].size() - 1);
    CHECK_THROWS_WITH_AS(parse_catalog(doc), doctest::Contains("lint: C.B1 = 3 exceeds declared incidences 0"),
                         InputError);
  }

  TEST_CASE("round trip is exact") {
    const json once = catalog_to_json(catalog());
    const Catalog again = parse_catalog(once);
    CHECK(again == catalog());
    CHECK(catalog_to_json(again).dump() == once.dump());
    CHECK(once == catalog_json());
  }

  TEST_CASE("adjunction numbers agree with the independent oracle") {
    std::ifstream in(std::string(LDP_TEST_DATA_DIR) + "/oracle_values.json");
    const json rows = json::parse(in);
    std::map<std::string, json> by_key;
    for (const auto& row : rows) by_key[row["key"]] = row;
    REQUIRE(by_key.size() == catalog().records.size());
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      const json& row = by_key.at(r.key);
      const Rational b = t_max_value(r.surface);
      CHECK(b == Rational::parse(row["t_max"].get<std::string>()));
      AdjunctionReport a = adjunction(r.surface, b);
      CHECK(a.C2 == Rational::parse(row["C2"].get<std::string>()));
      CHECK(a.KC == Rational::parse(row["KC"].get<std::string>()));
      CHECK(a.deg_diff == Rational::parse(row["deg_diff"].get<std::string>()));
      CHECK(a.C2_tilde == Rational::parse(row["C2_tilde"].get<std::string>()));
    }
  }

  TEST_CASE("verify_case examples") {
    VerificationReport a = verify_key("2-1");
    CHECK(a.overall);
    REQUIRE(find_check(a, "t_max") != nullptr);
    CHECK(find_check(a, "t_max")->actual.find("t_max = 7/8") != std::string::npos);

    VerificationReport b = verify_key("18-1");
    CHECK(b.overall);
    CHECK(find_check(b, "t_max")->actual.find("t_max = 12/13") != std::string::npos);

    VerificationReport c = verify_key("13-1");
    CHECK(c.overall);
    const CheckResult* ep = find_check(c, "endpoint");
    REQUIRE(ep != nullptr);
    CHECK(ep->pass);
    CHECK(ep->actual.find("19/21") != std::string::npos);

    VerificationReport d = verify_key("52-2");
    CHECK(d.overall);
    REQUIRE(find_check(d, "diagram") != nullptr);
  }

  TEST_CASE("records where the computed end differs from the printed one") {
    VerificationReport a = verify_key("11-1[k=3]");
    CHECK_FALSE(a.overall);
    CHECK(failing(a) == std::vector<std::string>{"t_max"});
    CHECK(find_check(a, "t_max")->actual.find("13/14") != std::string::npos);

    VerificationReport b = verify_key("32");
    CHECK_FALSE(b.overall);
    CHECK(failing(b) == std::vector<std::string>{"t_max"});
    CHECK(find_check(b, "t_max")->actual.find("13/14") != std::string::npos);
  }

  TEST_CASE("verify_all summary and determinism") {
    VerifySummary s = verify_all(catalog(), false);
    CHECK(s.families_total == 56);
    CHECK(s.families_pass == 54);
    CHECK(s.records_total == 181);
    CHECK(s.records_pass == 179);
    VerifySummary p = verify_all(catalog(), true);
    REQUIRE(p.reports.size() == s.reports.size());
    for (std::size_t i = 0; i < s.reports.size(); ++i) {
      CHECK(report_to_json(p.reports[i]).dump() == report_to_json(s.reports[i]).dump());
    }
  }

  TEST_CASE("elliptic records take the genus-one route") {
    long ell = 0;
    for (const auto& r : catalog().records) {
      if (!r.marker.ell) continue;
      ++ell;
      VerificationReport rep = verify_case(r);
      const CheckResult* m = find_check(rep, "marker");
      REQUIRE(m != nullptr);
      CHECK(m->expected == "pa = 1");
      CHECK(m->actual.find("pa = 1") == 0);
    }
    CHECK(ell > 0);
  }

  TEST_CASE("diagram labels are reproduced for every record that carries one") {
    long n = 0;
    for (const auto& r : catalog().records) {
      if (!r.diagram) continue;
      ++n;
      CAPTURE(r.key);
      VerificationReport rep = verify_case(r);
      const CheckResult* d = find_check(rep, "diagram");
      REQUIRE(d != nullptr);
      CHECK(d->pass);
    }
    CHECK(n > 0);
  }

  TEST_CASE("an injected fault is caught by one named check") {
    CaseRecord r = *catalog().find_key("18-1");
    r.interval.high += Rational(1, 1000);
    VerificationReport rep = verify_case(r);
    CHECK(failing(rep) == std::vector<std::string>{"t_max"});
  }
}
