#pragma once

#include <utility>
#include <vector>

#include "ldp/affine.hpp"
#include "ldp/rational.hpp"

namespace ldp {

// The quotient of the plane by Z/n acting with weights (q, 1) on (x, y).
// n = 1 is a smooth point and then q = 0.  The first coordinate axis
// {x = 0} is the curve whose coefficient is called d1 throughout.
struct CyclicQuot {
  long n = 1;
  long q = 0;

  // Validates gcd(n, q) = 1 and 0 < q < n (or n = 1, q = 0).
  static CyclicQuot make(long n, long q);

  bool smooth() const { return n == 1; }
  // The same singularity with the coordinate axes exchanged.
  CyclicQuot swapped() const;

  friend bool operator==(const CyclicQuot&, const CyclicQuot&) = default;
};

// Self-intersections of a chain of exceptional curves.
using ResolutionChain = std::vector<long>;

// Chain of the minimal resolution; chain[0] meets the strict transform of
// the first axis.
ResolutionChain hj_expand(const CyclicQuot& s);
CyclicQuot hj_reconstruct(const ResolutionChain& chain);

// Negated discrepancies of the chain curves for a boundary meeting the
// two ends with the given multiplicities.  Chains containing (-1)-curves
// are accepted as long as the system is nonsingular.
std::vector<AffineForm> chain_discrepancies(const ResolutionChain& chain, const AffineForm& left_mult,
                                            const AffineForm& right_mult);

// Same system for an arbitrary tree (or graph) of exceptional curves.
// `attachments` lists (vertex, multiplicity of the boundary meeting it).
std::vector<AffineForm> tree_discrepancies(const std::vector<long>& selfints,
                                           const std::vector<std::pair<int, int>>& edges,
                                           const std::vector<std::pair<int, AffineForm>>& attachments);

// A point of Z^2 + Z(q/n, 1/n); x is the value on the first axis variable.
struct LatticeValuation {
  Rational x;
  Rational y;
  friend bool operator==(const LatticeValuation&, const LatticeValuation&) = default;
  friend auto operator<=>(const LatticeValuation&, const LatticeValuation&) = default;
};

bool in_lattice(const CyclicQuot& s, const LatticeValuation& v);
bool is_primitive(const CyclicQuot& s, const LatticeValuation& v);

// Valuations of the chain curves of hj_expand(s), in chain order.
std::vector<LatticeValuation> chain_valuations(const CyclicQuot& s);

// x (1 - d1) + y (1 - d2).
AffineForm toric_log_discrepancy(const CyclicQuot& s, const AffineForm& d1, const AffineForm& d2,
                                 const LatticeValuation& v);

struct DeepValuation {
  LatticeValuation v;
  Rational log_discrepancy;
};

// All primitive lattice valuations in the open quadrant with
// log discrepancy <= threshold at parameter p, sorted by (x, y).
std::vector<DeepValuation> enumerate_deep_valuations(const CyclicQuot& s, const AffineForm& d1,
                                                     const AffineForm& d2, const Rational& p,
                                                     const Rational& threshold = Rational(1, 7));

long gcd_long(long a, long b);
long inverse_mod(long a, long n);

}  // namespace ldp
