#include "ldp/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ldp/error.hpp"

namespace ldp {

void WPSDescriptor::validate() const {
  for (long a : weights) {
    if (a < 1) throw InputError("weights must be positive");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (std::gcd(weights[i], weights[j]) != 1) throw InputError("weights must be pairwise coprime");
    }
  }
}

Rational wps_intersect(const WPSDescriptor& w, long d, long e) {
  if (d < 0 || e < 0) throw InputError("degrees must be non-negative");
  return Rational(d) * Rational(e) / Rational(w.product());
}

// ---------------------------------------------------------------- graphs

int GraphSurface::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

const GraphHandle* GraphSurface::handle(const std::string& name) const {
  for (const auto& h : handles) {
    if (h.name == name) return &h;
  }
  return nullptr;
}

Matrix GraphSurface::vertex_matrix() const {
  const std::size_t k = vertices.size();
  Matrix m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = vertices[i].self;
  for (const auto& [a, b] : edges) {
    int i = vertex_index(a), j = vertex_index(b);
    if (i < 0 || j < 0 || i == j) throw InputError("edge " + a + "-" + b + " references an unknown vertex");
    m[i][j] += 1;
    m[j][i] += 1;
  }
  return m;
}

std::vector<Rational> GraphSurface::handle_vertex(const std::string& h) const {
  if (!handle(h)) throw InputError("unknown curve '" + h + "'");
  std::vector<Rational> out(vertices.size());
  for (const auto& m : meets) {
    if (m.a == h && vertex_index(m.b) >= 0) out[vertex_index(m.b)] += m.count;
    if (m.b == h && vertex_index(m.a) >= 0) out[vertex_index(m.a)] += m.count;
  }
  return out;
}

Rational GraphSurface::handle_handle(const std::string& a, const std::string& b) const {
  const GraphHandle* ha = handle(a);
  if (!ha || !handle(b)) throw InputError("unknown curve '" + (ha ? b : a) + "'");
  if (a == b) return Rational(ha->self);
  Rational out;
  for (const auto& m : meets) {
    if ((m.a == a && m.b == b) || (m.a == b && m.b == a)) out += m.count;
  }
  return out;
}

Rational GraphSurface::intersect(const std::string& a, const std::string& b) const {
  Rational out = handle_handle(a, b);
  if (vertices.empty()) return out;
  std::vector<Rational> hb = handle_vertex(b), ha = handle_vertex(a);
  for (auto& v : hb) v = -v;
  std::vector<Rational> corr = solve_linear(vertex_matrix(), hb);
  for (std::size_t i = 0; i < corr.size(); ++i) out += corr[i] * ha[i];
  return out;
}

Rational GraphSurface::canonical_dot(const std::string& h) const {
  const GraphHandle* ref = nullptr;
  for (const auto& c : handles) {
    if (c.rational) {
      ref = &c;
      break;
    }
  }
  if (!ref) throw InputError("graph surface has no smooth rational curve to compute K");
  std::vector<Rational> rhs(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) rhs[i] = 2 + vertices[i].self;
  std::vector<Rational> e = vertices.empty() ? std::vector<Rational>{} : solve_linear(vertex_matrix(), rhs);
  std::vector<Rational> hv = handle_vertex(ref->name);
  Rational k_ref = Rational(-2 - ref->self);
  for (std::size_t i = 0; i < e.size(); ++i) k_ref += e[i] * hv[i];
  return k_ref * intersect(ref->name, h) / intersect(ref->name, ref->name);
}

std::vector<AffineForm> GraphSurface::vertex_log_discrepancies(
    const std::vector<std::pair<std::string, AffineForm>>& coefficients) const {
  std::vector<AffineForm> rhs(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) rhs[i] = AffineForm(Rational(2 + vertices[i].self));
  for (const auto& [name, c] : coefficients) {
    std::vector<Rational> hv = handle_vertex(name);
    for (std::size_t i = 0; i < hv.size(); ++i) rhs[i] -= c * hv[i];
  }
  if (vertices.empty()) return {};
  std::vector<AffineForm> e = solve_linear(vertex_matrix(), rhs);
  for (auto& v : e) v = AffineForm(1) - v;
  return e;
}

std::vector<std::vector<int>> GraphSurface::components() const {
  const Matrix m = vertex_matrix();
  const int k = static_cast<int>(vertices.size());
  std::vector<bool> seen(k, false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < k; ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{s}, comp;
    seen[s] = true;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      comp.push_back(i);
      for (int j = 0; j < k; ++j) {
        if (j != i && !m[i][j].is_zero() && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

void GraphSurface::validate() const {
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (!names.insert(v.id).second) throw InputError("duplicate graph id '" + v.id + "'");
  }
  for (const auto& h : handles) {
    if (!names.insert(h.name).second) throw InputError("duplicate graph id '" + h.name + "'");
  }
  for (const auto& m : meets) {
    if (!names.count(m.a) || !names.count(m.b)) {
      throw InputError("meet " + m.a + "-" + m.b + " references an unknown curve");
    }
    if (!handle(m.a) && !handle(m.b)) throw InputError("meet " + m.a + "-" + m.b + " joins two exceptional vertices");
    if (m.count < 1) throw InputError("meet counts must be positive");
  }
  const Matrix m = vertex_matrix();
  if (!is_negative_definite(m)) throw InputError("exceptional matrix is not negative definite");
  if (handles.empty()) throw InputError("graph surface has no curves");
  for (std::size_t i = 0; i < handles.size(); ++i) {
    const Rational hii = intersect(handles[i].name, handles[i].name);
    if (hii.sign() <= 0) throw InputError("curve " + handles[i].name + " has non-positive self-intersection");
    for (std::size_t j = 0; j < i; ++j) {
      const Rational hij = intersect(handles[i].name, handles[j].name);
      const Rational hjj = intersect(handles[j].name, handles[j].name);
      if (hij * hij != hii * hjj) throw InputError("curve classes do not span a rank-one lattice");
    }
  }
}

Rational graph_intersect(const GraphSurface& g, const std::string& h1, const std::string& h2) {
  if (!is_negative_definite(g.vertex_matrix())) throw InputError("exceptional matrix is not negative definite");
  return g.intersect(h1, h2);
}

// ---------------------------------------------------------------- log surfaces

const BoundaryEntry* LogSurface::find(const std::string& curve) const {
  for (const auto& b : boundary) {
    if (b.curve == curve) return &b;
  }
  return nullptr;
}

Rational LogSurface::dot(const std::string& a, const std::string& b) const {
  if (is_wps()) {
    const BoundaryEntry* ea = find(a);
    const BoundaryEntry* eb = find(b);
    if (!ea || !eb) throw InputError("unknown curve '" + (ea ? b : a) + "'");
    return wps_intersect(wps(), ea->degree, eb->degree);
  }
  return graph().intersect(a, b);
}

Rational LogSurface::canonical_dot(const std::string& a) const {
  if (is_wps()) {
    const BoundaryEntry* ea = find(a);
    if (!ea) throw InputError("unknown curve '" + a + "'");
    return -wps_intersect(wps(), wps().sum(), ea->degree);
  }
  return graph().canonical_dot(a);
}

AffineForm LogSurface::log_canonical_dot(const std::string& a) const {
  AffineForm out(canonical_dot(a));
  for (const auto& b : boundary) out += b.coefficient * dot(b.curve, a);
  return out;
}

std::string LogSurface::test_curve() const {
  if (has_param_curve() && dot(kParamCurve, kParamCurve).sign() > 0) return kParamCurve;
  for (const auto& b : boundary) {
    if (dot(b.curve, b.curve).sign() > 0) return b.curve;
  }
  if (!is_wps()) return graph().handles.front().name;
  throw InputError("no boundary curve with positive self-intersection");
}

Germ LogSurface::germ_at(const IncidencePoint& pt) const {
  Germ g;
  g.id = pt.id;
  g.quot = pt.quot;
  for (const auto& br : pt.branches) {
    const BoundaryEntry* e = find(br.curve);
    if (!e) throw InputError("point " + pt.id + " references unknown curve '" + br.curve + "'");
    g.branches.push_back({br.curve, e->coefficient, br.shape});
  }
  return g;
}

std::vector<std::pair<std::string, AffineForm>> LogSurface::coefficient_list() const {
  std::vector<std::pair<std::string, AffineForm>> out;
  for (const auto& b : boundary) out.emplace_back(b.curve, b.coefficient);
  return out;
}

LogSurface LogSurface::with_coefficient(const std::string& curve, const AffineForm& f) const {
  LogSurface out = *this;
  for (auto& b : out.boundary) {
    if (b.curve == curve) b.coefficient = f;
  }
  return out;
}

namespace {

Rational local_intersection(const CyclicQuot& s, const Shape& a, const Shape& b) {
  auto axis_newton = [&](const Shape& axis, const Shape& nw) {
    long mult = axis.kind == ShapeKind::Axis1 ? nw.r : nw.p;
    return Rational(mult, s.n);
  };
  if (a.is_axis() && b.is_axis()) {
    if (a.kind == b.kind) throw InputError("two branches on the same axis");
    return Rational(1, s.n);
  }
  if (a.is_axis()) return axis_newton(a, b);
  if (b.is_axis()) return axis_newton(b, a);
  throw InputError("two non-axis branches at one point");
}

void validate_wps(const LogSurface& s) {
  const WPSDescriptor& w = s.wps();
  w.validate();
  for (const auto& b : s.boundary) {
    if (b.degree < 1) throw InputError("curve " + b.curve + " must have positive degree");
  }
  std::set<std::string> ids;
  for (const auto& pt : s.points) {
    if (!ids.insert(pt.id).second) throw InputError("duplicate point id '" + pt.id + "'");
    if (pt.count < 1) throw InputError("point " + pt.id + " has non-positive count");
    s.germ_at(pt).validate();
  }
  // Singular points of the plane.
  for (int i = 0; i < 3; ++i) {
    const long n = w.weights[i];
    const std::string pid = "P" + std::to_string(i + 1);
    const IncidencePoint* pt = nullptr;
    for (const auto& p : s.points) {
      if (p.id == pid) pt = &p;
    }
    if (n == 1) {
      if (pt && pt->quot.n != 1) throw InputError("point " + pid + " is smooth on this plane");
      continue;
    }
    if (!pt) throw InputError("singular point " + pid + " is not declared");
    const long aj = w.weights[(i + 1) % 3], ak = w.weights[(i + 2) % 3];
    const long q1 = (aj % n) * inverse_mod(ak % n, n) % n;
    const long q2 = (ak % n) * inverse_mod(aj % n, n) % n;
    if (pt->quot.n != n || (pt->quot.q != q1 && pt->quot.q != q2)) {
      throw InputError("point " + pid + " has the wrong singularity type");
    }
    for (const auto& b : s.boundary) {
      if (b.degree % n == 0) continue;
      bool declared = std::any_of(pt->branches.begin(), pt->branches.end(),
                                  [&](const IncidenceBranch& br) { return br.curve == b.curve; });
      if (!declared) throw InputError("undeclared incidence point: " + b.curve + " passes through " + pid);
    }
  }
  for (const auto& pt : s.points) {
    if (pt.quot.n > 1 && !(pt.id.size() == 2 && pt.id[0] == 'P')) {
      throw InputError("point " + pt.id + " is singular but not a vertex of the plane");
    }
  }
  // Global intersections against declared local ones.
  for (std::size_t i = 0; i < s.boundary.size(); ++i) {
    for (std::size_t j = i + 1; j < s.boundary.size(); ++j) {
      const std::string& a = s.boundary[i].curve;
      const std::string& b = s.boundary[j].curve;
      Rational declared;
      for (const auto& pt : s.points) {
        for (const auto& ba : pt.branches) {
          if (ba.curve != a) continue;
          for (const auto& bb : pt.branches) {
            if (bb.curve != b) continue;
            declared += local_intersection(pt.quot, ba.shape, bb.shape) * pt.count;
          }
        }
      }
      const Rational global = s.dot(a, b);
      if (global > declared) {
        throw InputError("lint: " + a + "." + b + " = " + global.str() + " exceeds declared incidences " +
                         declared.str());
      }
      if (global < declared) {
        throw InputError("lint: declared incidences " + declared.str() + " exceed " + a + "." + b + " = " +
                         global.str());
      }
    }
  }
}

}  // namespace

void LogSurface::validate() const {
  std::set<std::string> names;
  for (const auto& b : boundary) {
    if (!names.insert(b.curve).second) throw InputError("duplicate boundary curve '" + b.curve + "'");
  }
  if (is_wps()) {
    validate_wps(*this);
    return;
  }
  const GraphSurface& g = graph();
  g.validate();
  for (const auto& b : boundary) {
    if (!g.handle(b.curve)) throw InputError("boundary curve '" + b.curve + "' is not a curve of the graph");
  }
  if (!points.empty()) throw InputError("graph surfaces take their points from the graph");
}

BValue solve_b(const LogSurface& s) {
  if (!s.has_param_curve()) return NoSolution{};
  ZeroSet z = af_solve_zero(s.log_canonical_dot(s.test_curve()));
  if (const Rational* r = std::get_if<Rational>(&z)) return *r;
  return NoSolution{};
}

BValue t_max(const LogSurface& s) { return solve_b(s); }

Rational t_max_value(const LogSurface& s) {
  BValue v = t_max(s);
  if (const Rational* r = std::get_if<Rational>(&v)) return *r;
  throw InputError("no nef threshold: the degree of K + D does not depend on t");
}

AdjunctionReport adjunction(const LogSurface& s, const Rational& b) {
  const std::string c = LogSurface::kParamCurve;
  if (!s.has_param_curve()) throw InputError("surface has no curve C");
  if (b == Rational(1)) throw InputError("adjunction undefined at b = 1");
  AdjunctionReport rep;
  rep.C2 = s.dot(c, c);
  rep.KC = s.canonical_dot(c);
  Rational qsum;
  if (s.is_wps()) {
    for (const auto& pt : s.points) {
      if (pt.quot.n == 1) continue;
      for (const auto& br : pt.branches) {
        if (br.curve != c) continue;
        if (!br.shape.is_axis()) throw InputError("C passes through " + pt.id + " with a singular branch");
        const long q = br.shape.kind == ShapeKind::Axis1 ? pt.quot.q : inverse_mod(pt.quot.q, pt.quot.n);
        rep.deg_diff += (Rational(1) - Rational(1, pt.quot.n)) * pt.count;
        qsum += Rational(q, pt.quot.n) * pt.count;
      }
    }
    rep.C2_tilde = rep.C2 - qsum;
  } else {
    const GraphSurface& g = s.graph();
    const std::vector<Rational> hv = g.handle_vertex(c);
    const Matrix m = g.vertex_matrix();
    for (const auto& comp : g.components()) {
      int met = 0;
      int where = -1;
      for (int i : comp) {
        if (!hv[i].is_zero()) {
          met += hv[i].to_long();
          where = i;
        }
      }
      if (met == 0) continue;
      if (met > 1) throw InputError("C meets an exceptional configuration more than once");
      long edges = 0;
      int max_degree = 0, degree_where = 0;
      for (int i : comp) {
        int deg = 0;
        for (int j : comp) {
          if (i != j && !m[i][j].is_zero()) {
            ++deg;
            if (i < j) edges += m[i][j].to_long();
          }
        }
        max_degree = std::max(max_degree, deg);
        if (i == where) degree_where = deg;
      }
      if (edges + 1 != static_cast<long>(comp.size()) || max_degree > 2 || degree_where > 1) {
        throw InputError("C passes through a point that is not a cyclic quotient along an end of the chain");
      }
      Matrix sub(comp.size(), std::vector<Rational>(comp.size()));
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = m[comp[i]][comp[j]];
      }
      rep.deg_diff += Rational(1) - Rational(1) / determinant(sub).abs();
    }
    rep.C2_tilde = Rational(g.handle(c)->self);
  }
  rep.pa = (rep.KC + rep.C2 - rep.deg_diff + 2) / 2;
  Rational rest;
  for (const auto& e : s.boundary) {
    if (e.curve != c) rest += e.coefficient.eval(b) * s.dot(e.curve, c);
  }
  rep.C2_from_adjunction = (rep.pa * 2 - 2 + rep.deg_diff + rest) / (Rational(1) - b);
  return rep;
}

}  // namespace ldp
