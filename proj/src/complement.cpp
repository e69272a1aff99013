#include <vector>

#include "ldp/error.hpp"
#include "ldp/surface.hpp"

namespace ldp {

namespace {

bool in_semigroup(long value, const std::array<long, 3>& gens) {
  if (value < 0) return false;
  std::vector<bool> reach(static_cast<std::size_t>(value) + 1, false);
  reach[0] = true;
  for (long v = 1; v <= value; ++v) {
    for (long g : gens) {
      if (g <= v && reach[v - g]) {
        reach[v] = true;
        break;
      }
    }
  }
  return reach[value];
}

bool locally_lc(const LogSurface& s, const Rational& t) {
  if (s.is_wps()) {
    for (const auto& pt : s.points) {
      if (!germ_is_lc(s.germ_at(pt), t)) return false;
    }
    return true;
  }
  for (const auto& a : s.graph().vertex_log_discrepancies(s.coefficient_list())) {
    if (a.eval(t).sign() < 0) return false;
  }
  return true;
}

}  // namespace

long complement_index(const LogSurface& s, const Rational& t, long bound) {
  const std::string test = s.test_curve();
  if (s.log_canonical_dot(test).eval(t).sign() > 0) throw InputError("-(K+D) is not nef at t = " + t.str());
  for (long n = 1; n <= bound; ++n) {
    LogSurface plus = s;
    bool feasible = true;
    for (auto& b : plus.boundary) {
      const Rational c = b.coefficient.eval(t);
      const Rational rounded = Rational(mpq_class((c * (n + 1)).floor())) / Rational(n);
      const Rational cp = max(c, rounded);
      if (!(cp * n).is_integer() || cp > Rational(1)) {
        feasible = false;
        break;
      }
      b.coefficient = AffineForm(cp);
    }
    if (!feasible) continue;
    const Rational residual = -plus.log_canonical_dot(test).eval(t);
    if (residual.sign() < 0) continue;
    if (s.is_wps()) {
      // Residual degree in units of the grading.
      const Rational deg = residual * Rational(s.wps().product()) / Rational(s.find(test)->degree);
      const Rational total = deg * n;
      if (!total.is_integer() || !in_semigroup(total.to_long(), s.wps().weights)) continue;
    }
    if (!locally_lc(plus, t)) continue;
    return n;
  }
  throw InputError("index exceeds search bound");
}

}  // namespace ldp
