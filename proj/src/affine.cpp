#include "ldp/affine.hpp"

#include <cctype>

#include "ldp/error.hpp"

namespace ldp {

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  constant += o.constant;
  slope += o.slope;
  return *this;
}
AffineForm& AffineForm::operator-=(const AffineForm& o) {
  constant -= o.constant;
  slope -= o.slope;
  return *this;
}
AffineForm& AffineForm::operator*=(const Rational& k) {
  constant *= k;
  slope *= k;
  return *this;
}
AffineForm& AffineForm::operator/=(const Rational& k) {
  constant /= k;
  slope /= k;
  return *this;
}

std::string AffineForm::str(char param) const {
  const std::string p(1, param);
  if (slope.is_zero()) return constant.str();
  auto slope_text = [&](const Rational& s) {
    return s == Rational(1) ? p : s.str() + "*" + p;
  };
  if (constant.is_zero()) {
    if (slope == Rational(-1)) return "-" + p;
    return slope_text(slope);
  }
  if (slope.sign() < 0) return constant.str() + " - " + slope_text(-slope);
  return constant.str() + " + " + slope_text(slope);
}

AffineForm AffineForm::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty affine form");
  AffineForm out;
  char symbol = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw InputError("malformed affine form '" + std::string(text) + "'");
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational coeff(1);
    bool has_number = j > i;
    if (has_number) coeff = Rational::parse(s.substr(i, j - i));
    i = j;
    bool has_param = false;
    if (i < s.size() && s[i] == '*') {
      if (!has_number) throw InputError("malformed affine form '" + std::string(text) + "'");
      ++i;
      if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) {
        throw InputError("malformed affine form '" + std::string(text) + "'");
      }
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (symbol != 0 && symbol != s[i]) {
        throw InputError("affine form mixes parameters in '" + std::string(text) + "'");
      }
      symbol = s[i];
      has_param = true;
      ++i;
    }
    if (!has_number && !has_param) throw InputError("malformed affine form '" + std::string(text) + "'");
    if (sign < 0) coeff = -coeff;
    if (has_param) {
      out.slope += coeff;
    } else {
      out.constant += coeff;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const AffineForm& f) { return os << f.str(); }

Rational af_eval(const AffineForm& f, const Rational& p) { return f.eval(p); }

ZeroSet af_solve_zero(const AffineForm& f) {
  if (!f.slope.is_zero()) return Rational(-f.constant / f.slope);
  if (f.constant.is_zero()) return AllValues{};
  return NoSolution{};
}

}  // namespace ldp
