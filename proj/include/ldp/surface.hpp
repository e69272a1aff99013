#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ldp/affine.hpp"
#include "ldp/cyclic_quot.hpp"
#include "ldp/germ.hpp"
#include "ldp/linalg.hpp"
#include "ldp/rational.hpp"

namespace ldp {

struct WPSDescriptor {
  std::array<long, 3> weights{1, 1, 1};

  long product() const { return weights[0] * weights[1] * weights[2]; }
  long sum() const { return weights[0] + weights[1] + weights[2]; }
  void validate() const;
  friend bool operator==(const WPSDescriptor&, const WPSDescriptor&) = default;
};

// X_d . X_e = d e / (a1 a2 a3).
Rational wps_intersect(const WPSDescriptor& w, long d, long e);

struct GraphVertex {
  std::string id;
  long self = -2;
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

// A curve on the minimal resolution that survives on the surface.
struct GraphHandle {
  std::string name;
  long self = 0;
  bool rational = false;
  friend bool operator==(const GraphHandle&, const GraphHandle&) = default;
};

// Number of transverse intersection points between two handles, or a
// handle and an exceptional vertex, on the resolution.
struct GraphMeet {
  std::string a;
  std::string b;
  long count = 1;
  friend bool operator==(const GraphMeet&, const GraphMeet&) = default;
};

// A surface given by the dual graph of the exceptional curves of its
// minimal resolution together with a few non-exceptional curves.
struct GraphSurface {
  std::vector<GraphVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<GraphHandle> handles;
  std::vector<GraphMeet> meets;
  std::vector<std::array<long, 2>> fan;  // rays of a toric model, if any

  // References, negative definiteness, rank-one handle lattice.
  void validate() const;

  int vertex_index(const std::string& id) const;  // -1 if absent
  const GraphHandle* handle(const std::string& name) const;
  Matrix vertex_matrix() const;
  // Intersections of a handle with the exceptional vertices.
  std::vector<Rational> handle_vertex(const std::string& h) const;
  // Intersection of two handles on the resolution.
  Rational handle_handle(const std::string& a, const std::string& b) const;
  // Intersection on the singular surface.
  Rational intersect(const std::string& a, const std::string& b) const;
  // K . h on the singular surface.
  Rational canonical_dot(const std::string& h) const;
  // Log discrepancies 1 - e_i of the vertices for the given boundary
  // coefficients on handles.
  std::vector<AffineForm> vertex_log_discrepancies(
      const std::vector<std::pair<std::string, AffineForm>>& coefficients) const;
  // Connected components of the exceptional graph (vertex indices).
  std::vector<std::vector<int>> components() const;

  friend bool operator==(const GraphSurface&, const GraphSurface&) = default;
};

Rational graph_intersect(const GraphSurface& g, const std::string& h1, const std::string& h2);

struct IncidenceBranch {
  std::string curve;
  Shape shape;
  friend bool operator==(const IncidenceBranch&, const IncidenceBranch&) = default;
};

// A point of a weighted projective plane where boundary curves meet or
// which is singular.  `count` identical points are represented at once.
struct IncidencePoint {
  std::string id;
  CyclicQuot quot;
  long count = 1;
  std::vector<IncidenceBranch> branches;
  friend bool operator==(const IncidencePoint&, const IncidencePoint&) = default;
};

struct BoundaryEntry {
  std::string curve;
  long degree = 0;  // weighted projective planes only
  AffineForm coefficient;
  friend bool operator==(const BoundaryEntry&, const BoundaryEntry&) = default;
};

// A rank-one surface with boundary t C + sum b_i B_i.  The curve named "C"
// carries the parameter.
struct LogSurface {
  std::variant<WPSDescriptor, GraphSurface> surface;
  std::vector<BoundaryEntry> boundary;
  std::vector<IncidencePoint> points;

  static constexpr const char* kParamCurve = "C";

  bool is_wps() const { return std::holds_alternative<WPSDescriptor>(surface); }
  const WPSDescriptor& wps() const { return std::get<WPSDescriptor>(surface); }
  const GraphSurface& graph() const { return std::get<GraphSurface>(surface); }
  const BoundaryEntry* find(const std::string& curve) const;
  bool has_param_curve() const { return find(kParamCurve) != nullptr; }

  Rational dot(const std::string& a, const std::string& b) const;
  Rational canonical_dot(const std::string& a) const;
  // (K + D(t)) . A as a function of t.
  AffineForm log_canonical_dot(const std::string& a) const;
  // Curve used as ample test class.
  std::string test_curve() const;

  Germ germ_at(const IncidencePoint& pt) const;
  std::vector<std::pair<std::string, AffineForm>> coefficient_list() const;
  LogSurface with_coefficient(const std::string& curve, const AffineForm& f) const;

  // References and intersection lint; throws InputError.
  void validate() const;

  friend bool operator==(const LogSurface&, const LogSurface&) = default;
};

using BValue = std::variant<Rational, NoSolution>;

BValue solve_b(const LogSurface& s);
BValue t_max(const LogSurface& s);
// Throws InputError when there is no threshold.
Rational t_max_value(const LogSurface& s);

struct AdjunctionReport {
  Rational deg_diff;
  Rational C2;
  Rational C2_from_adjunction;  // ((2pa - 2) + deg_diff + sum b_i B_i.C) / (1 - b)
  Rational C2_tilde;
  Rational KC;
  Rational pa;  // from (K + C).C = 2 pa - 2 + deg_diff
};

AdjunctionReport adjunction(const LogSurface& s, const Rational& b);

// Smallest n <= bound admitting an n-complement in the numerical sense.
long complement_index(const LogSurface& s, const Rational& t, long bound = 100);

}  // namespace ldp
