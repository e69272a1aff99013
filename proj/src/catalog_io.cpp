#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "ldp/catalog.hpp"
#include "ldp/error.hpp"

namespace ldp {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError("schema violation at " + path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* name) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema_error(path, std::string("missing field '") + name + "'");
  return *it;
}

std::string get_string(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_string()) schema_error(path + "." + name, "expected a string");
  return v.get<std::string>();
}

long as_long(const json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<long>();
}

long get_long(const json& obj, const std::string& path, const char* name) {
  return as_long(field(obj, path, name), path + "." + name);
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) schema_error(path, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const InputError& e) {
    schema_error(path, e.what());
  }
}

const json& get_array(const json& obj, const std::string& path, const char* name) {
  const json& v = field(obj, path, name);
  if (!v.is_array()) schema_error(path + "." + name, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

AffineForm parse_form(const json& v, const std::string& path) {
  return AffineForm(as_rational(field(v, path, "c"), path + ".c"), as_rational(field(v, path, "s"), path + ".s"));
}

json form_json(const AffineForm& f) { return {{"c", f.constant.str()}, {"s", f.slope.str()}}; }

Shape parse_shape(const json& v, const std::string& path) {
  const std::string kind = get_string(v, path, "shape");
  if (kind == "axis1") return Shape::axis1();
  if (kind == "axis2") return Shape::axis2();
  if (kind == "newton") return Shape::newton(get_long(v, path, "p"), get_long(v, path, "r"));
  schema_error(path + ".shape", "unknown shape '" + kind + "'");
}

json shape_fields(const Shape& s) {
  switch (s.kind) {
    case ShapeKind::Axis1:
      return {{"shape", "axis1"}};
    case ShapeKind::Axis2:
      return {{"shape", "axis2"}};
    case ShapeKind::Newton:
      return {{"shape", "newton"}, {"p", s.p}, {"r", s.r}};
  }
  return {};
}

GraphSurface parse_graph(const json& v, const std::string& path) {
  GraphSurface g;
  const json& verts = get_array(v, path, "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    g.vertices.push_back({get_string(verts[i], at(path + ".vertices", i), "id"),
                          get_long(verts[i], at(path + ".vertices", i), "self")});
  }
  const json& edges = get_array(v, path, "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      schema_error(at(path + ".edges", i), "expected a pair of vertex ids");
    }
    g.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  const json& handles = get_array(v, path, "handles");
  for (std::size_t i = 0; i < handles.size(); ++i) {
    const std::string hp = at(path + ".handles", i);
    const json& r = field(handles[i], hp, "rational");
    if (!r.is_boolean()) schema_error(hp + ".rational", "expected a boolean");
    g.handles.push_back({get_string(handles[i], hp, "name"), get_long(handles[i], hp, "self"), r.get<bool>()});
  }
  const json& meets = get_array(v, path, "meets");
  for (std::size_t i = 0; i < meets.size(); ++i) {
    const std::string mp = at(path + ".meets", i);
    long count = meets[i].contains("count") ? get_long(meets[i], mp, "count") : 1;
    g.meets.push_back({get_string(meets[i], mp, "a"), get_string(meets[i], mp, "b"), count});
  }
  if (v.contains("fan")) {
    const json& fan = get_array(v, path, "fan");
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (!fan[i].is_array() || fan[i].size() != 2) schema_error(at(path + ".fan", i), "expected a pair");
      g.fan.push_back({as_long(fan[i][0], at(path + ".fan", i)), as_long(fan[i][1], at(path + ".fan", i))});
    }
  }
  return g;
}

json graph_json(const GraphSurface& g) {
  json out{{"type", "graph"}};
  json verts = json::array(), edges = json::array(), handles = json::array(), meets = json::array();
  for (const auto& v : g.vertices) verts.push_back({{"id", v.id}, {"self", v.self}});
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  for (const auto& h : g.handles) handles.push_back({{"name", h.name}, {"self", h.self}, {"rational", h.rational}});
  for (const auto& m : g.meets) meets.push_back({{"a", m.a}, {"b", m.b}, {"count", m.count}});
  out["vertices"] = verts;
  out["edges"] = edges;
  out["handles"] = handles;
  out["meets"] = meets;
  if (!g.fan.empty()) {
    json fan = json::array();
    for (const auto& r : g.fan) fan.push_back({r[0], r[1]});
    out["fan"] = fan;
  }
  return out;
}

AffineForm parse_coefficient(const json& v, const std::string& path) {
  if (!v.is_string()) schema_error(path, "expected \"t\" or a rational string");
  const std::string s = v.get<std::string>();
  if (s == "t") return AffineForm::parameter();
  return AffineForm(as_rational(v, path));
}

json coefficient_json(const AffineForm& f) {
  if (f == AffineForm::parameter()) return "t";
  if (!f.is_constant()) throw InputError("boundary coefficients must be t or constant");
  return f.constant.str();
}

Diagram parse_diagram(const json& v, const std::string& path) {
  Diagram d;
  const std::string param = get_string(v, path, "param");
  if (param.size() != 1) schema_error(path + ".param", "expected a single letter");
  d.param = param[0];
  const json& verts = get_array(v, path, "vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string vp = at(path + ".vertices", i);
    d.vertices.push_back({get_long(verts[i], vp, "self"), parse_form(field(verts[i], vp, "label"), vp + ".label")});
  }
  const json& edges = get_array(v, path, "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 2) schema_error(at(path + ".edges", i), "expected a pair of indices");
    d.edges.emplace_back(as_long(e[0], at(path + ".edges", i)), as_long(e[1], at(path + ".edges", i)));
  }
  const json& bd = get_array(v, path, "boundary");
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const std::string bp = at(path + ".boundary", i);
    d.boundary.emplace_back(get_long(bd[i], bp, "vertex"), parse_form(field(bd[i], bp, "mult"), bp + ".mult"));
  }
  for (const auto& [a, b] : d.edges) {
    if (a < 0 || b < 0 || a >= int(d.vertices.size()) || b >= int(d.vertices.size())) {
      schema_error(path + ".edges", "index out of range");
    }
  }
  for (const auto& [a, f] : d.boundary) {
    if (a < 0 || a >= int(d.vertices.size())) schema_error(path + ".boundary", "index out of range");
  }
  return d;
}

json diagram_json(const Diagram& d) {
  json verts = json::array(), edges = json::array(), bd = json::array();
  for (const auto& v : d.vertices) verts.push_back({{"self", v.self}, {"label", form_json(v.label)}});
  for (const auto& [a, b] : d.edges) edges.push_back({a, b});
  for (const auto& [a, f] : d.boundary) bd.push_back({{"vertex", a}, {"mult", form_json(f)}});
  return {{"param", std::string(1, d.param)}, {"vertices", verts}, {"edges", edges}, {"boundary", bd}};
}

CaseRecord parse_record(const json& v, const std::string& path) {
  CaseRecord r;
  r.key = get_string(v, path, "key");
  const std::string rp = path + " (" + r.key + ")";
  r.id = get_string(v, rp, "id");
  r.case_id = get_string(v, rp, "case");
  r.family = get_long(v, rp, "family");
  try {
    r.marker = Marker::parse(get_string(v, rp, "marker"));
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " in record " + r.key);
  }
  const json& params = field(v, rp, "params");
  if (!params.is_object()) schema_error(rp + ".params", "expected an object");
  for (auto it = params.begin(); it != params.end(); ++it) {
    r.params.emplace_back(it.key(), as_long(it.value(), rp + ".params." + it.key()));
  }
  r.variant = get_string(v, rp, "variant");
  r.row = get_string(v, rp, "row");

  const json& surf = field(v, rp, "surface");
  const std::string type = get_string(surf, rp + ".surface", "type");
  if (type == "wps") {
    const json& w = get_array(surf, rp + ".surface", "weights");
    if (w.size() != 3) schema_error(rp + ".surface.weights", "expected three weights");
    WPSDescriptor d;
    for (int i = 0; i < 3; ++i) d.weights[i] = as_long(w[i], at(rp + ".surface.weights", i));
    r.surface.surface = d;
  } else if (type == "graph") {
    r.surface.surface = parse_graph(surf, rp + ".surface");
  } else {
    schema_error(rp + ".surface.type", "unknown surface type '" + type + "'");
  }

  const json& bd = get_array(v, rp, "boundary");
  for (std::size_t i = 0; i < bd.size(); ++i) {
    const std::string bp = at(rp + ".boundary", i);
    BoundaryEntry e;
    e.curve = get_string(bd[i], bp, "curve");
    e.degree = r.surface.is_wps() ? get_long(bd[i], bp, "degree") : 0;
    e.coefficient = parse_coefficient(field(bd[i], bp, "coeff"), bp + ".coeff");
    r.surface.boundary.push_back(e);
  }
  const json& pts = get_array(v, rp, "points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string pp = at(rp + ".points", i);
    IncidencePoint pt;
    pt.id = get_string(pts[i], pp, "id");
    try {
      pt.quot = CyclicQuot::make(get_long(pts[i], pp, "n"), get_long(pts[i], pp, "q"));
    } catch (const InputError& e) {
      schema_error(pp, e.what());
    }
    pt.count = pts[i].contains("count") ? get_long(pts[i], pp, "count") : 1;
    const json& brs = get_array(pts[i], pp, "branches");
    for (std::size_t j = 0; j < brs.size(); ++j) {
      const std::string bp = at(pp + ".branches", j);
      const std::string curve = get_string(brs[j], bp, "curve");
      if (!r.surface.find(curve)) {
        throw InputError("undeclared incidence point: " + pt.id + " references unknown curve '" + curve +
                         "' in record " + r.key);
      }
      pt.branches.push_back({curve, parse_shape(brs[j], bp)});
    }
    r.surface.points.push_back(pt);
  }

  const json& iv = field(v, rp, "interval");
  r.interval.low = as_rational(field(iv, rp + ".interval", "low"), rp + ".interval.low");
  r.interval.high = as_rational(field(iv, rp + ".interval", "high"), rp + ".interval.high");
  const json& open = field(iv, rp + ".interval", "high_open");
  if (!open.is_boolean()) schema_error(rp + ".interval.high_open", "expected a boolean");
  r.interval.high_open = open.get<bool>();

  if (v.contains("endpoint")) {
    const json& ep = v["endpoint"];
    r.endpoint = EndpointAnnotation{as_rational(field(ep, rp + ".endpoint", "t"), rp + ".endpoint.t"),
                                    get_long(ep, rp + ".endpoint", "delta")};
  }
  if (v.contains("diagram")) r.diagram = parse_diagram(v["diagram"], rp + ".diagram");

  try {
    r.surface.validate();
  } catch (const InputError& e) {
    throw InputError("record " + r.key + ": " + e.what());
  }
  if (!r.surface.has_param_curve()) throw InputError("record " + r.key + ": no curve C in the boundary");
  return r;
}

}  // namespace

GraphSurface parse_graph_surface(const json& v) { return parse_graph(v, "$"); }

Marker Marker::parse(const std::string& text) {
  if (text == "ell") return {true, 0};
  std::size_t i = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
  bool digits = i < text.size() && std::all_of(text.begin() + i, text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits || text.size() > 12) throw InputError("unknown marker '" + text + "'");
  return {false, std::stol(text)};
}

std::string Marker::str() const {
  if (ell) return "ell";
  return (q > 0 ? "+" : "") + std::to_string(q);
}

std::vector<long> Catalog::families() const {
  std::vector<long> out;
  for (const auto& r : records) {
    if (std::find(out.begin(), out.end(), r.family) == out.end()) out.push_back(r.family);
  }
  return out;
}

const CaseRecord* Catalog::find_key(const std::string& key) const {
  for (const auto& r : records) {
    if (r.key == key) return &r;
  }
  return nullptr;
}

std::vector<const CaseRecord*> Catalog::resolve(const std::string& name) const {
  if (const CaseRecord* r = find_key(name)) return {r};
  std::vector<const CaseRecord*> out;
  for (const auto& r : records) {
    if (r.id == name) out.push_back(&r);
  }
  if (!out.empty()) return out;
  for (const auto& r : records) {
    if (r.case_id == name) out.push_back(&r);
  }
  return out;
}

Catalog parse_catalog(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected an object");
  Catalog c;
  c.schema = get_string(doc, "$", "schema");
  if (c.schema != "ldp-catalog") schema_error("$.schema", "unknown schema '" + c.schema + "'");
  c.version = get_long(doc, "$", "version");
  if (c.version != kCatalogVersion) {
    throw InputError("schema version mismatch: expected " + std::to_string(kCatalogVersion) + ", found " +
                     std::to_string(c.version));
  }
  const json& recs = get_array(doc, "$", "records");
  if (recs.empty()) throw InputError("no records");
  std::set<std::string> keys;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CaseRecord r = parse_record(recs[i], at("$.records", i));
    if (!keys.insert(r.key).second) throw InputError("duplicate record key '" + r.key + "'");
    c.records.push_back(std::move(r));
  }
  return c;
}

Catalog parse_catalog_text(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError("no records");
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed catalog: ") + e.what());
  }
  return parse_catalog(doc);
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog_text(ss.str());
}

json record_to_json(const CaseRecord& r) {
  json out;
  out["key"] = r.key;
  out["id"] = r.id;
  out["case"] = r.case_id;
  out["family"] = r.family;
  out["marker"] = r.marker.str();
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  out["params"] = params;
  out["variant"] = r.variant;
  out["row"] = r.row;
  if (r.surface.is_wps()) {
    const auto& w = r.surface.wps().weights;
    out["surface"] = {{"type", "wps"}, {"weights", {w[0], w[1], w[2]}}};
  } else {
    out["surface"] = graph_json(r.surface.graph());
  }
  json bd = json::array();
  for (const auto& b : r.surface.boundary) {
    json e{{"curve", b.curve}};
    if (r.surface.is_wps()) e["degree"] = b.degree;
    e["coeff"] = coefficient_json(b.coefficient);
    bd.push_back(e);
  }
  out["boundary"] = bd;
  json pts = json::array();
  for (const auto& p : r.surface.points) {
    json jp{{"id", p.id}, {"n", p.quot.n}, {"q", p.quot.q}};
    jp["count"] = p.count;
    json brs = json::array();
    for (const auto& b : p.branches) {
      json jb = shape_fields(b.shape);
      jb["curve"] = b.curve;
      brs.push_back(jb);
    }
    jp["branches"] = brs;
    pts.push_back(jp);
  }
  out["points"] = pts;
  out["interval"] = {{"low", r.interval.low.str()}, {"high", r.interval.high.str()}, {"high_open", r.interval.high_open}};
  if (r.endpoint) out["endpoint"] = {{"t", r.endpoint->t.str()}, {"delta", r.endpoint->delta}};
  if (r.diagram) out["diagram"] = diagram_json(*r.diagram);
  return out;
}

json catalog_to_json(const Catalog& c) {
  json recs = json::array();
  for (const auto& r : c.records) recs.push_back(record_to_json(r));
  return {{"schema", c.schema}, {"version", c.version}, {"records", recs}};
}

}  // namespace ldp
