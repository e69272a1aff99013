#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ldp/affine.hpp"
#include "ldp/rational.hpp"
#include "ldp/surface.hpp"

namespace ldp {

// (ell): C has arithmetic genus 1.  Otherwise C is rational and q is the
// self-intersection of its strict transform on the partial resolution.
struct Marker {
  bool ell = false;
  long q = 0;

  static Marker parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const Marker&, const Marker&) = default;
};

struct TInterval {
  Rational low;
  Rational high;
  bool high_open = false;
  friend bool operator==(const TInterval&, const TInterval&) = default;
};

struct EndpointAnnotation {
  Rational t;
  long delta = 0;
  friend bool operator==(const EndpointAnnotation&, const EndpointAnnotation&) = default;
};

// Exceptional configuration drawn with negated discrepancies as labels.
struct Diagram {
  struct Vertex {
    long self = -2;
    AffineForm label;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  char param = 'b';
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, AffineForm>> boundary;
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct CaseRecord {
  std::string key;      // unique, e.g. "8-3[k1=3,k2=2]"
  std::string id;       // e.g. "8-3(+1)"
  std::string case_id;  // e.g. "8-3"
  long family = 0;
  Marker marker;
  std::vector<std::pair<std::string, long>> params;
  std::string variant;
  std::string row;
  LogSurface surface;
  TInterval interval;
  std::optional<EndpointAnnotation> endpoint;
  std::optional<Diagram> diagram;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct Catalog {
  std::string schema = "ldp-catalog";
  long version = 1;
  std::vector<CaseRecord> records;

  std::vector<long> families() const;
  const CaseRecord* find_key(const std::string& key) const;
  // Exact key, exact id, or every record of a case id.
  std::vector<const CaseRecord*> resolve(const std::string& name) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

inline constexpr long kCatalogVersion = 1;

Catalog parse_catalog(const nlohmann::json& doc);
Catalog parse_catalog_text(const std::string& text);
Catalog load_catalog(const std::string& path);
nlohmann::json catalog_to_json(const Catalog& c);
// The "surface" object of a graph record (type "graph").
GraphSurface parse_graph_surface(const nlohmann::json& v);
nlohmann::json record_to_json(const CaseRecord& r);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::string key;
  std::string id;
  std::vector<CheckResult> checks;
  bool overall = false;
};

struct VerifySummary {
  long families_total = 0;
  long families_pass = 0;
  long records_total = 0;
  long records_pass = 0;
  std::vector<VerificationReport> reports;
};

VerificationReport verify_case(const CaseRecord& r);
VerifySummary verify_all(const Catalog& c, bool parallel = false);
VerifySummary summarize(std::vector<VerificationReport> reports, const Catalog& c);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace ldp
