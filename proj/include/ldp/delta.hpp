#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldp/affine.hpp"
#include "ldp/rational.hpp"
#include "ldp/surface.hpp"

namespace ldp {

struct DeltaWitness {
  enum class Kind { Component, Exceptional };
  Kind kind = Kind::Component;
  std::string source;
  // Coefficient for a boundary component, discrepancy for an exceptional
  // divisor.
  Rational value;
  // Log discrepancy as a function of t (1 - coefficient for components).
  AffineForm log_discrepancy;
};

struct DeltaReport {
  long delta = 0;
  std::vector<DeltaWitness> witnesses;
};

// Divisors with discrepancy <= -threshold at t.
DeltaReport delta(const LogSurface& s, const Rational& t, const Rational& threshold = Rational(6, 7));

std::vector<std::pair<Rational, DeltaReport>> delta_sweep(const LogSurface& s, const std::vector<Rational>& samples,
                                                          const Rational& threshold = Rational(6, 7));

// 6/7, the midpoint of [6/7, high], and high itself (or high - 1/1000
// when the interval is open at high).
std::vector<Rational> default_samples(const Rational& high, bool high_open);

// Where a family stops: the nef threshold t_max or the first t with at
// least two deep divisors, whichever comes first.
struct Degeneration {
  Rational t_max;
  std::optional<Rational> t_delta;  // first t with delta >= 2
  Rational t_end;
  bool open = false;  // t_end is a delta degeneration rather than the nef bound
};

Degeneration find_degeneration(const LogSurface& s, const Rational& threshold = Rational(6, 7));

}  // namespace ldp
