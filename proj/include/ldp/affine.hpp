#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "ldp/rational.hpp"

namespace ldp {

// constant + slope * p for a single parameter p.  The parameter symbol is
// carried by the surrounding context, not by the form.
struct AffineForm {
  Rational constant;
  Rational slope;

  AffineForm() = default;
  AffineForm(Rational c) : constant(std::move(c)) {}  // NOLINT(implicit)
  template <std::integral I>
  AffineForm(I c) : constant(c) {}  // NOLINT(implicit)
  AffineForm(Rational c, Rational s) : constant(std::move(c)), slope(std::move(s)) {}

  static AffineForm parameter() { return AffineForm(Rational(0), Rational(1)); }

  // Accepts sums of terms such as "6/7", "t", "3 - 3*b", "-2b + 1/2".
  // Any single letter is accepted as the parameter symbol.
  static AffineForm parse(std::string_view text);

  bool is_constant() const { return slope.is_zero(); }
  Rational eval(const Rational& p) const { return constant + slope * p; }
  std::string str(char param = 't') const;

  AffineForm operator-() const { return {-constant, -slope}; }
  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rational& k);
  AffineForm& operator/=(const Rational& k);

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rational& k) { return a *= k; }
  friend AffineForm operator*(const Rational& k, AffineForm a) { return a *= k; }
  friend AffineForm operator/(AffineForm a, const Rational& k) { return a /= k; }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const AffineForm& f);

struct AllValues {
  friend bool operator==(AllValues, AllValues) { return true; }
};
struct NoSolution {
  friend bool operator==(NoSolution, NoSolution) { return true; }
};
using ZeroSet = std::variant<Rational, AllValues, NoSolution>;

Rational af_eval(const AffineForm& f, const Rational& p);
ZeroSet af_solve_zero(const AffineForm& f);

}  // namespace ldp
