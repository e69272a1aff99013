#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldp/affine.hpp"
#include "ldp/cyclic_quot.hpp"
#include "ldp/rational.hpp"

namespace ldp {

enum class ShapeKind { Axis1, Axis2, Newton };

// Local shape of a boundary branch.  Newton(p, r) is the branch
// x^p + y^r = 0 with monomial value min(p a, r b) at the weight (a, b);
// Newton(1, m) is a smooth branch tangent to {x = 0} with order m and
// Newton(m, 1) one tangent to {y = 0}.
struct Shape {
  ShapeKind kind = ShapeKind::Axis1;
  long p = 0;
  long r = 0;

  static Shape axis1() { return {ShapeKind::Axis1, 0, 0}; }
  static Shape axis2() { return {ShapeKind::Axis2, 0, 0}; }
  static Shape newton(long p, long r) { return {ShapeKind::Newton, p, r}; }
  // axis = 1: tangent to {x = 0}; axis = 2: tangent to {y = 0}.
  static Shape tangent(int axis, long order);

  bool is_axis() const { return kind != ShapeKind::Newton; }
  // Smooth branch tangent to an axis (p = 1 or r = 1).
  bool is_tangent() const { return kind == ShapeKind::Newton && (p == 1 || r == 1); }
  Rational value(const Rational& a, const Rational& b) const;
  std::string str() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

struct Branch {
  std::string curve;
  AffineForm coefficient;
  Shape shape;
  friend bool operator==(const Branch&, const Branch&) = default;
};

struct Germ {
  std::string id;
  CyclicQuot quot;
  std::vector<Branch> branches;

  // Structural checks: at most one branch per axis, at most one Newton
  // branch, Newton exponents compatible with the group action.
  void validate() const;
};

// An exceptional valuation over a germ.  In the monomial chart (a, b) are
// its values on (x, y); in a branch chart they are the values on the
// branch equation and on the transverse coordinate.
struct GermValuation {
  enum class Chart { Monomial, Tangent, Cusp };
  Chart chart = Chart::Monomial;
  std::string branch;  // branch curve for the non-monomial charts
  Rational a;
  Rational b;
  AffineForm log_discrepancy;  // as a function of the boundary parameter

  std::string describe() const;
};

struct DeepCount {
  long count = 0;
  std::vector<GermValuation> witnesses;
};

struct MinDiscrepancy {
  Rational discrepancy;
  GermValuation witness;
  int depth = 0;  // 0: monomial weight, 1: one further blow-up at a branch
};

enum class VidcCase { Tangent = 1, Transverse = 2, Quotient = 3 };

struct VidcResult {
  VidcCase vidc_case = VidcCase::Transverse;
  bool valid = true;
  std::string reason;  // violated inequality or structural reason
};

// Exceptional valuations with log discrepancy <= bound at p.  Throws
// InputError("not klt") if the pair is not klt at p.
std::vector<GermValuation> germ_valuations_below(const Germ& g, const Rational& p, const Rational& bound);

// Primitive generators of the rays where the log discrepancy function of
// the germ changes slope (the only exceptional directions where kltness
// can fail first).
std::vector<GermValuation> germ_break_rays(const Germ& g);

bool germ_is_lc(const Germ& g, const Rational& p);

VidcResult classify_germ(const Germ& g, const Rational& p);
MinDiscrepancy min_discrepancy_germ(const Germ& g, const Rational& p);
DeepCount count_deep_divisors(const Germ& g, const Rational& p, const Rational& threshold = Rational(6, 7));

struct BlowupWeights {
  long alpha = 1;
  long beta = 1;
  long theta = 1;
  friend bool operator==(const BlowupWeights&, const BlowupWeights&) = default;
};

struct WeightSolution {
  BlowupWeights weights;
  Rational b;
  friend bool operator==(const WeightSolution&, const WeightSolution&) = default;
};

// Closed-open range [low, high).
struct ParamRange {
  Rational low;
  Rational high;
};

struct WeightConstraints {
  bool alpha_ge_beta_plus_1 = false;
  long theta_max = 1;
};

// Solutions of alpha (1 - m1(b)) + beta (1 - m2(b)) = 1/theta, theta from
// theta_max down to 1, then alpha and beta ascending.
std::vector<WeightSolution> solve_blowup_weights(const AffineForm& m1, const AffineForm& m2,
                                                 const ParamRange& range, const WeightConstraints& constraints);

}  // namespace ldp
