#include "ldp/germ.hpp"

#include <algorithm>
#include <numeric>

#include "ldp/error.hpp"

namespace ldp {

Shape Shape::tangent(int axis, long order) {
  if (order < 2) throw InputError("tangency order must be at least 2");
  if (axis == 1) return newton(1, order);
  if (axis == 2) return newton(order, 1);
  throw InputError("tangent axis must be 1 or 2");
}

Rational Shape::value(const Rational& a, const Rational& b) const {
  switch (kind) {
    case ShapeKind::Axis1:
      return a;
    case ShapeKind::Axis2:
      return b;
    case ShapeKind::Newton:
      return min(a * Rational(p), b * Rational(r));
  }
  return Rational(0);
}

std::string Shape::str() const {
  switch (kind) {
    case ShapeKind::Axis1:
      return "axis1";
    case ShapeKind::Axis2:
      return "axis2";
    case ShapeKind::Newton:
      return "newton(" + std::to_string(p) + "," + std::to_string(r) + ")";
  }
  return "";
}

void Germ::validate() const {
  int axis1 = 0, axis2 = 0, newton = 0;
  for (const auto& br : branches) {
    switch (br.shape.kind) {
      case ShapeKind::Axis1:
        ++axis1;
        break;
      case ShapeKind::Axis2:
        ++axis2;
        break;
      case ShapeKind::Newton: {
        ++newton;
        const long p = br.shape.p, r = br.shape.r;
        if (p < 1 || r < 1 || (p == 1 && r == 1)) {
          throw InputError("germ " + id + ": invalid Newton exponents for " + br.curve);
        }
        const long n = quot.n, q = quot.q;
        if (n > 1) {
          long lhs = p * q - r;
          if (((lhs % n) + n) % n != 0) {
            throw InputError("germ " + id + ": branch " + br.curve + " is not invariant under the group");
          }
        }
        break;
      }
    }
  }
  if (axis1 > 1 || axis2 > 1) throw InputError("germ " + id + ": two branches on the same axis");
  if (newton > 1) throw InputError("germ " + id + ": more than one non-axis branch");
}

std::string GermValuation::describe() const {
  switch (chart) {
    case Chart::Monomial:
      return "weight (" + a.str() + ", " + b.str() + ")";
    case Chart::Tangent:
      return "along " + branch + " weight (" + a.str() + ", " + b.str() + ")";
    case Chart::Cusp:
      return "along " + branch + " multiple (" + a.str() + ", " + b.str() + ")";
  }
  return "";
}

namespace {

bool lattice_int(long n, long q, long X, long Y) {
  if (n == 1) return true;
  return ((X - q * Y) % n + n) % n == 0;
}

bool primitive_int(long n, long q, long X, long Y) {
  long g = std::gcd(X, Y);
  for (long k = 2; k <= g; ++k) {
    if (g % k == 0 && lattice_int(n, q, X / k, Y / k)) return false;
  }
  return true;
}

long floor_long(const Rational& r) {
  mpz_class f = r.floor();
  if (!f.fits_slong_p()) throw InputError("enumeration bound too large");
  return f.get_si();
}

struct Prepared {
  long n = 1;
  long q = 0;
  AffineForm c1;  // coefficient on {x = 0}
  AffineForm c2;  // coefficient on {y = 0}
  const Branch* newton = nullptr;
};

Prepared prepare(const Germ& g) {
  g.validate();
  Prepared pr;
  pr.n = g.quot.n;
  pr.q = g.quot.q;
  for (const auto& br : g.branches) {
    if (br.shape.kind == ShapeKind::Axis1) pr.c1 += br.coefficient;
    if (br.shape.kind == ShapeKind::Axis2) pr.c2 += br.coefficient;
    if (br.shape.kind == ShapeKind::Newton) pr.newton = &br;
  }
  return pr;
}

AffineForm chart1_ell(const Germ& g, const Rational& a, const Rational& b) {
  AffineForm ell(a + b);
  for (const auto& br : g.branches) ell -= br.coefficient * br.shape.value(a, b);
  return ell;
}

// Primitive lattice generator of the Newton break ray, in integer
// coordinates (X, Y) = n (a, b).
std::pair<long, long> break_generator(const Prepared& pr) {
  const long g = std::gcd(pr.newton->shape.p, pr.newton->shape.r);
  const long rx = pr.newton->shape.r / g, ry = pr.newton->shape.p / g;
  for (long k = 1;; ++k) {
    if (lattice_int(pr.n, pr.q, k * rx, k * ry)) return {k * rx, k * ry};
  }
}

void require_positive(const Rational& v, const std::string& what) {
  if (v.sign() <= 0) throw InputError("not klt: " + what);
}

void chart1(const Germ& g, const Prepared& pr, const Rational& p, const Rational& bound,
            std::vector<GermValuation>& out) {
  struct Ray {
    Rational x, y, ell;
  };
  std::vector<Ray> rays;
  const Rational ex = Rational(1) - pr.c1.eval(p), ey = Rational(1) - pr.c2.eval(p);
  require_positive(ex, "boundary coefficient reaches 1 along the first axis");
  require_positive(ey, "boundary coefficient reaches 1 along the second axis");
  rays.push_back({Rational(1), Rational(0), ex});
  if (pr.newton) {
    auto [X, Y] = break_generator(pr);
    Rational x(X, pr.n), y(Y, pr.n);
    Rational ell = chart1_ell(g, x, y).eval(p);
    require_positive(ell, "log discrepancy vanishes at weight (" + x.str() + ", " + y.str() + ")");
    rays.push_back({x, y, ell});
  }
  rays.push_back({Rational(0), Rational(1), ey});
  Rational xmax(0), ymax(0);
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
    const Ray& u = rays[i];
    const Ray& w = rays[i + 1];
    xmax = max(xmax, bound * (u.x / u.ell + w.x / w.ell));
    ymax = max(ymax, bound * (u.y / u.ell + w.y / w.ell));
  }
  const long XM = floor_long(xmax * pr.n), YM = floor_long(ymax * pr.n);
  for (long X = 1; X <= XM; ++X) {
    for (long Y = 1; Y <= YM; ++Y) {
      if (!lattice_int(pr.n, pr.q, X, Y) || !primitive_int(pr.n, pr.q, X, Y)) continue;
      Rational a(X, pr.n), b(Y, pr.n);
      AffineForm ell = chart1_ell(g, a, b);
      Rational v = ell.eval(p);
      if (v.sign() <= 0) throw InputError("not klt at weight (" + a.str() + ", " + b.str() + ")");
      if (v <= bound) out.push_back({GermValuation::Chart::Monomial, "", a, b, ell});
    }
  }
}

void chart_tangent(const Prepared& pr, const Rational& p, const Rational& bound, std::vector<GermValuation>& out) {
  const Branch& br = *pr.newton;
  const bool swapped = br.shape.p != 1;
  const long m = swapped ? br.shape.p : br.shape.r;
  const long q = swapped ? (pr.n > 1 ? inverse_mod(pr.q, pr.n) : 0) : pr.q;
  const AffineForm& ca = swapped ? pr.c2 : pr.c1;
  const AffineForm& cb = swapped ? pr.c1 : pr.c2;
  const AffineForm& c = br.coefficient;
  const AffineForm base = AffineForm(Rational(m + 1)) - ca * Rational(m) - c * Rational(m) - cb;
  const AffineForm along = AffineForm(1) - c;
  const Rational base_v = base.eval(p), along_v = along.eval(p);
  require_positive(base_v, "log discrepancy vanishes on the tangency weight");
  require_positive(along_v, "boundary coefficient of " + br.curve + " reaches 1");
  const long YM = floor_long(bound / base_v * pr.n);
  const long DM = floor_long(bound / along_v * pr.n);
  for (long Y = 1; Y <= YM; ++Y) {
    for (long D = 1; D <= DM; ++D) {
      const long X = m * Y + D;
      if (!lattice_int(pr.n, q, X, Y) || !primitive_int(pr.n, q, X, Y)) continue;
      AffineForm ell = along * Rational(D, pr.n) + base * Rational(Y, pr.n);
      if (ell.eval(p) <= bound) {
        out.push_back({GermValuation::Chart::Tangent, br.curve, Rational(X, pr.n), Rational(Y, pr.n), ell});
      }
    }
  }
}

void chart_cusp(const Germ& g, const Prepared& pr, const Rational& p, const Rational& bound,
                std::vector<GermValuation>& out) {
  const Branch& br = *pr.newton;
  auto [X, Y] = break_generator(pr);
  const AffineForm lw = chart1_ell(g, Rational(X, pr.n), Rational(Y, pr.n));
  const AffineForm along = AffineForm(1) - br.coefficient;
  const Rational lw_v = lw.eval(p), along_v = along.eval(p);
  require_positive(lw_v, "log discrepancy vanishes on the branch weight");
  require_positive(along_v, "boundary coefficient of " + br.curve + " reaches 1");
  const long GM = floor_long(bound / lw_v), DM = floor_long(bound / along_v);
  for (long k = 1; k <= GM; ++k) {
    for (long d = 1; d <= DM; ++d) {
      if (std::gcd(k, d) != 1) continue;
      AffineForm ell = lw * Rational(k) + along * Rational(d);
      if (ell.eval(p) <= bound) out.push_back({GermValuation::Chart::Cusp, br.curve, Rational(k), Rational(d), ell});
    }
  }
}

bool witness_less(const GermValuation& u, const GermValuation& v) {
  if (u.chart != v.chart) return u.chart < v.chart;
  if (u.a != v.a) return u.a < v.a;
  return u.b < v.b;
}

}  // namespace

std::vector<GermValuation> germ_valuations_below(const Germ& g, const Rational& p, const Rational& bound) {
  Prepared pr = prepare(g);
  std::vector<GermValuation> out;
  chart1(g, pr, p, bound, out);
  if (pr.newton) {
    if (pr.newton->shape.is_tangent()) {
      chart_tangent(pr, p, bound, out);
    } else {
      chart_cusp(g, pr, p, bound, out);
    }
  }
  std::stable_sort(out.begin(), out.end(), witness_less);
  return out;
}

std::vector<GermValuation> germ_break_rays(const Germ& g) {
  Prepared pr = prepare(g);
  std::vector<GermValuation> out;
  if (pr.newton) {
    auto [X, Y] = break_generator(pr);
    Rational a(X, pr.n), b(Y, pr.n);
    out.push_back({GermValuation::Chart::Monomial, "", a, b, chart1_ell(g, a, b)});
  }
  return out;
}

bool germ_is_lc(const Germ& g, const Rational& p) {
  Prepared pr = prepare(g);
  if ((Rational(1) - pr.c1.eval(p)).sign() < 0 || (Rational(1) - pr.c2.eval(p)).sign() < 0) return false;
  if (pr.newton) {
    if ((Rational(1) - pr.newton->coefficient.eval(p)).sign() < 0) return false;
    auto [X, Y] = break_generator(pr);
    if (chart1_ell(g, Rational(X, pr.n), Rational(Y, pr.n)).eval(p).sign() < 0) return false;
  }
  return true;
}

VidcResult classify_germ(const Germ& g, const Rational& p) {
  g.validate();
  const Rational deep(6, 7);
  const Branch* c_branch = nullptr;
  std::vector<const Branch*> others;
  for (const auto& br : g.branches) {
    if (br.coefficient.eval(p) >= deep) {
      if (c_branch) throw InputError("more than one branch with coefficient at least 6/7");
      c_branch = &br;
    } else {
      others.push_back(&br);
    }
  }
  if (!c_branch) throw InputError("no branch with coefficient at least 6/7");
  const Rational b = c_branch->coefficient.eval(p);
  VidcResult res;
  auto outside = [&](const std::string& why) {
    res.valid = false;
    res.reason = why;
    return res;
  };

  if (g.quot.smooth()) {
    if (others.size() > 1) return outside("more than two branches through a smooth point");
    const Branch* o = others.empty() ? nullptr : others[0];
    bool c_axis = c_branch->shape.is_axis();
    bool o_axis = !o || o->shape.is_axis();
    if (c_axis && o_axis) {
      res.vidc_case = VidcCase::Transverse;
      const Rational b1 = o ? o->coefficient.eval(p) : Rational(0);
      if (b + b1 >= Rational(13, 7)) return outside("b + b1 = " + (b + b1).str() + " >= 13/7");
      return res;
    }
    // One axis and one smooth branch tangent to it with order 2.
    const Branch* axis = c_axis ? c_branch : o;
    const Branch* tan = c_axis ? o : c_branch;
    if (!axis || !axis->shape.is_axis() || !tan->shape.is_tangent()) {
      return outside("configuration outside the three local types");
    }
    const bool tangent_to_axis = (axis->shape.kind == ShapeKind::Axis1 && tan->shape.p == 1) ||
                                 (axis->shape.kind == ShapeKind::Axis2 && tan->shape.r == 1);
    const long order = std::max(tan->shape.p, tan->shape.r);
    if (!tangent_to_axis || order != 2 || o->coefficient.eval(p) != Rational(1, 2)) {
      return outside("configuration outside the three local types");
    }
    res.vidc_case = VidcCase::Tangent;
    if (b >= Rational(13, 14)) return outside("b = " + b.str() + " >= 13/14");
    return res;
  }

  res.vidc_case = VidcCase::Quotient;
  if (!c_branch->shape.is_axis()) return outside("the branch of C is not a coordinate axis");
  if (others.size() > 1) return outside("more than two branches through a singular point");
  if (!others.empty() && !others[0]->shape.is_axis()) return outside("configuration outside the three local types");
  const long q = c_branch->shape.kind == ShapeKind::Axis1 ? g.quot.q : inverse_mod(g.quot.q, g.quot.n);
  const Rational b1 = others.empty() ? Rational(0) : others[0]->coefficient.eval(p);
  const Rational lhs = (Rational(g.quot.n, 7) - 1 + b1) / (Rational(1) - b);
  if (!(lhs < Rational(q))) {
    return outside("(n/7 - 1 + b1)/(1 - b) = " + lhs.str() + " >= q = " + std::to_string(q));
  }
  return res;
}

MinDiscrepancy min_discrepancy_germ(const Germ& g, const Rational& p) {
  // (1, 1) is a lattice point of every cyclic quotient, so its log
  // discrepancy bounds the minimum over primitive points from above.
  const Rational start = chart1_ell(g, Rational(1), Rational(1)).eval(p);
  if (start.sign() <= 0) throw InputError("not klt at weight (1, 1)");
  auto all = germ_valuations_below(g, p, start);
  if (all.empty()) throw InternalError("minimal discrepancy search found no valuation");
  const GermValuation* best = &all[0];
  for (const auto& v : all) {
    if (v.log_discrepancy.eval(p) < best->log_discrepancy.eval(p)) best = &v;
  }
  MinDiscrepancy out;
  out.discrepancy = best->log_discrepancy.eval(p) - 1;
  out.witness = *best;
  out.depth = best->chart == GermValuation::Chart::Monomial ? 0 : 1;
  return out;
}

DeepCount count_deep_divisors(const Germ& g, const Rational& p, const Rational& threshold) {
  DeepCount out;
  out.witnesses = germ_valuations_below(g, p, Rational(1) - threshold);
  out.count = static_cast<long>(out.witnesses.size());
  return out;
}

}  // namespace ldp
