#include <fstream>
#include <variant>

#include "json.hpp"
#include "ldp/catalog.hpp"
#include "ldp/error.hpp"
#include "ldp/surface.hpp"
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

Rational value(const BValue& v) {
  REQUIRE(std::holds_alternative<Rational>(v));
  return std::get<Rational>(v);
}

// Four lines in general position on the projective plane.
LogSurface four_lines() {
  LogSurface s;
  s.surface = WPSDescriptor{{1, 1, 1}};
  const std::vector<std::pair<std::string, Rational>> lines{
      {"B1", R("1/2")}, {"B2", R("2/3")}, {"B3", R("10/11")}, {"C", R("12/13")}};
  for (const auto& [name, c] : lines) s.boundary.push_back({name, 1, c});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      s.points.push_back({lines[i].first + "." + lines[j].first, CyclicQuot::make(1, 0), 1,
                          {{lines[i].first, Shape::axis1()}, {lines[j].first, Shape::axis2()}}});
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("surface_model") {
  TEST_CASE("wps_intersect examples") {
    CHECK(wps_intersect(WPSDescriptor{{1, 1, 1}}, 1, 1) == 1);
    CHECK(wps_intersect(WPSDescriptor{{1, 1, 2}}, 4, 1) == 2);
    CHECK(wps_intersect(WPSDescriptor{{2, 3, 5}}, 8, 5) == R("4/3"));
    CHECK_THROWS_AS(WPSDescriptor({2, 4, 5}).validate(), InputError);
  }

  TEST_CASE("graph_intersect on an A1 point") {
    GraphSurface g;
    g.vertices = {{"E", -2}};
    g.handles = {{"H1", 0, true}, {"H2", 0, true}};
    g.meets = {{"H1", "E", 1}, {"H2", "E", 1}};
    CHECK(graph_intersect(g, "H1", "H2") == R("1/2"));
    CHECK(graph_intersect(g, "H1", "H1") == R("1/2"));
  }

  TEST_CASE("graph surfaces reject a non-negative-definite exceptional locus") {
    GraphSurface g;
    g.vertices = {{"E1", -1}, {"E2", -1}};
    g.edges = {{"E1", "E2"}};
    g.handles = {{"H", 1, true}};
    CHECK_THROWS_AS(g.validate(), InputError);
  }

  TEST_CASE("property: dual encodings agree") {
    std::ifstream in(std::string(LDP_TEST_DATA_DIR) + "/dual_encodings.json");
    REQUIRE(in.good());
    const json doc = json::parse(in);
    REQUIRE(doc.size() == 3);
    for (const auto& entry : doc) {
      WPSDescriptor w{{entry["weights"][0].get<long>(), entry["weights"][1].get<long>(),
                       entry["weights"][2].get<long>()}};
      GraphSurface g = parse_graph_surface(entry["graph"]);
      CHECK_NOTHROW(g.validate());
      const auto& degrees = entry["degrees"];
      for (auto a = degrees.begin(); a != degrees.end(); ++a) {
        for (auto b = degrees.begin(); b != degrees.end(); ++b) {
          CHECK(graph_intersect(g, a.key(), b.key()) == wps_intersect(w, a.value(), b.value()));
        }
        CHECK(g.canonical_dot(a.key()) ==
              Rational(-w.sum() * a.value().get<long>()) / Rational(w.product()));
      }
    }
  }

  TEST_CASE("a graph record encodes P(2,3,7)") {
    const LogSurface& s = surface_of("52-2");
    const WPSDescriptor w{{2, 3, 7}};
    CHECK(s.dot("C", "C") == wps_intersect(w, 14, 14));
    CHECK(s.canonical_dot("C") == Rational(-12 * 14, 42));
  }

  TEST_CASE("solve_b and t_max examples") {
    CHECK(value(solve_b(surface_of("2-1"))) == R("7/8"));
    CHECK(value(solve_b(surface_of("1-1[k=3]"))) == R("11/12"));
    CHECK(value(solve_b(surface_of("6-1[k=2]"))) == R("11/12"));
    CHECK(value(t_max(surface_of("6-1[k=3]"))) == R("8/9"));
    CHECK(value(t_max(surface_of("18-1"))) == R("12/13"));
    CHECK(value(t_max(surface_of("29"))) == R("23/26"));
    LogSurface no_c = surface_of("2-1").with_coefficient("C", 0);
    no_c.boundary.erase(no_c.boundary.begin());
    CHECK(std::holds_alternative<NoSolution>(solve_b(no_c)));
  }

  TEST_CASE("adjunction examples") {
    AdjunctionReport a = adjunction(surface_of("2-1"), R("7/8"));
    CHECK(a.deg_diff == 0);
    CHECK(a.C2 == 8);
    CHECK(a.C2 == wps_intersect(WPSDescriptor{{1, 1, 2}}, 4, 4));
    CHECK(a.C2_from_adjunction == a.C2);
    CHECK(a.pa == 1);

    AdjunctionReport b = adjunction(surface_of("2-2"), R("8/9"));
    CHECK(b.deg_diff == R("1/2"));
    CHECK(b.C2 == R("9/2"));
    CHECK(b.C2_tilde == 4);
    CHECK(b.pa == 0);

    CHECK_THROWS_AS(adjunction(surface_of("2-1"), 1), InputError);
  }

  TEST_CASE("property: adjunction routes agree on every record") {
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      const Rational b = t_max_value(r.surface);
      AdjunctionReport a = adjunction(r.surface, b);
      CHECK(a.C2_from_adjunction == a.C2);
      if (r.marker.ell) {
        CHECK(a.pa == 1);
        CHECK(a.C2_tilde >= 3);
      } else {
        CHECK(a.pa == 0);
        CHECK(a.C2_tilde == r.marker.q);
      }
    }
  }

  TEST_CASE("property: -(K+D) is nef on the interval and trivial at a closed endpoint") {
    for (const auto& r : catalog().records) {
      CAPTURE(r.key);
      const std::string test = r.surface.test_curve();
      const AffineForm f = r.surface.log_canonical_dot(test);
      const Rational mid = (r.interval.low + r.interval.high) / 2;
      for (const Rational& t : {r.interval.low, mid}) CHECK(f.eval(t) <= 0);
      if (!r.interval.high_open) {
        CHECK(f.eval(r.interval.high) == 0);
      } else {
        CHECK(f.eval(r.interval.high) <= 0);
      }
    }
  }

  TEST_CASE("complement_index examples") {
    CHECK(complement_index(four_lines(), 0) == 66);
    CHECK(complement_index(surface_of("2-1"), R("7/8")) == 8);
    LogSurface zero = surface_of("2-1");
    zero.boundary = {{"C", 4, 0}};
    zero.points.clear();
    CHECK(complement_index(zero, 0) == 1);
    CHECK_THROWS_AS(complement_index(surface_of("2-1"), R("15/16")), InputError);
  }

  TEST_CASE("complement index oracle: exhaustive degree scan on the four lines") {
    // n admits a complement iff every rounded coefficient is a multiple of
    // 1/n and their sum, at most 3, leaves an integral residual degree.
    const std::vector<Rational> cs{R("1/2"), R("2/3"), R("10/11"), R("12/13")};
    long first = 0;
    for (long n = 1; n <= 100 && first == 0; ++n) {
      Rational sum;
      bool ok = true;
      for (const auto& c : cs) {
        Rational r = max(c, Rational(mpq_class((c * (n + 1)).floor())) / Rational(n));
        ok = ok && (r * n).is_integer() && r <= 1;
        sum += r;
      }
      if (ok && sum <= 3 && ((Rational(3) - sum) * n).is_integer()) first = n;
    }
    CHECK(first == 66);
  }

  TEST_CASE("complement index along families (observational)") {
    long violations = 0, families = 0;
    for (const auto& r : catalog().records) {
      if (r.interval.high_open || r.interval.high == r.interval.low) continue;
      ++families;
      try {
        long at_high = complement_index(r.surface, r.interval.high);
        long at_low = complement_index(r.surface, r.interval.low);
        if (at_low > at_high) ++violations;
      } catch (const InputError&) {
      }
    }
    MESSAGE("records scanned: " << families << ", index increases toward 6/7 on " << violations);
    CHECK(families > 0);
  }

  TEST_CASE("lint rejects undeclared contact") {
    LogSurface s = surface_of("2-2");
    s.points.pop_back();
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("lint"), InputError);
    LogSurface more = surface_of("2-2");
    more.points.back().count = 4;
    CHECK_THROWS_WITH_AS(more.validate(), doctest::Contains("lint"), InputError);
  }
}
