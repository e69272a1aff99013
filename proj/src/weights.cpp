#include <numeric>

#include "ldp/error.hpp"
#include "ldp/germ.hpp"

namespace ldp {

std::vector<WeightSolution> solve_blowup_weights(const AffineForm& m1, const AffineForm& m2,
                                                 const ParamRange& range, const WeightConstraints& constraints) {
  if (!(range.low < range.high)) throw InputError("empty parameter range");
  if (constraints.theta_max < 1) throw InputError("theta_max must be at least 1");
  const AffineForm mu1 = AffineForm(1) - m1, mu2 = AffineForm(1) - m2;
  auto lower_bound = [&](const AffineForm& mu) {
    const Rational lo = mu.eval(range.low), hi = mu.eval(range.high);
    if (lo.sign() <= 0 && hi.sign() <= 0) throw InputError("no klt solutions");
    Rational m = min(lo, hi);
    if (m.sign() <= 0) throw InputError("a multiplicity reaches 1 inside the range; split the range there");
    return m;
  };
  const Rational floor1 = lower_bound(mu1), floor2 = lower_bound(mu2);

  std::vector<WeightSolution> out;
  for (long theta = constraints.theta_max; theta >= 1; --theta) {
    const Rational target(1, theta);
    const long amax = (target / floor1).floor().get_si();
    const long bmax = (target / floor2).floor().get_si();
    for (long alpha = 1; alpha <= amax; ++alpha) {
      for (long beta = 1; beta <= bmax; ++beta) {
        if (std::gcd(alpha, beta) != 1) continue;
        if (constraints.alpha_ge_beta_plus_1 && alpha < beta + 1) continue;
        const AffineForm eq = mu1 * Rational(alpha) + mu2 * Rational(beta) - AffineForm(target);
        ZeroSet z = af_solve_zero(eq);
        if (std::holds_alternative<AllValues>(z)) {
          throw InputError("weight equation holds for every parameter value");
        }
        if (const Rational* b = std::get_if<Rational>(&z)) {
          if (range.low <= *b && *b < range.high) out.push_back({{alpha, beta, theta}, *b});
        }
      }
    }
  }
  return out;
}

}  // namespace ldp
