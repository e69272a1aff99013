#include "ldp/cyclic_quot.hpp"

#include <algorithm>
#include <numeric>

#include "ldp/error.hpp"
#include "ldp/linalg.hpp"

namespace ldp {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long inverse_mod(long a, long n) {
  if (n == 1) return 0;
  long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    long k = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - k * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - k * new_r);
  }
  if (r != 1) throw InputError("gcd(n,q) must be 1");
  return t < 0 ? t + n : t;
}

CyclicQuot CyclicQuot::make(long n, long q) {
  if (n < 1) throw InputError("quotient order must be positive");
  if (n == 1) {
    if (q != 0) throw InputError("smooth point must have q = 0");
    return {1, 0};
  }
  if (q <= 0 || q >= n) throw InputError("q must satisfy 0 < q < n");
  if (std::gcd(n, q) != 1) throw InputError("gcd(n,q) must be 1");
  return {n, q};
}

CyclicQuot CyclicQuot::swapped() const {
  if (n == 1) return *this;
  return {n, inverse_mod(q, n)};
}

ResolutionChain hj_expand(const CyclicQuot& s) {
  if (s.n < 2) throw InputError("nothing to resolve");
  CyclicQuot::make(s.n, s.q);
  ResolutionChain out;
  long a = s.n, b = s.q;
  while (b > 0) {
    long c = (a + b - 1) / b;
    out.push_back(-c);
    long next = c * b - a;
    a = b;
    b = next;
  }
  return out;
}

CyclicQuot hj_reconstruct(const ResolutionChain& chain) {
  if (chain.empty()) throw InputError("empty chain");
  for (long c : chain) {
    if (c >= -1) throw InputError("not a minimal chain");
  }
  // n/q = c1 - 1/(c2 - ...) with c_i = -chain[i], evaluated from the end.
  mpz_class num = -chain.back(), den = 1;
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    mpz_class next_num = mpz_class(-*it) * num - den;
    den = num;
    num = next_num;
  }
  if (!num.fits_slong_p()) throw InputError("chain too long");
  return CyclicQuot::make(num.get_si(), den.get_si());
}

std::vector<AffineForm> tree_discrepancies(const std::vector<long>& selfints,
                                           const std::vector<std::pair<int, int>>& edges,
                                           const std::vector<std::pair<int, AffineForm>>& attachments) {
  const std::size_t k = selfints.size();
  Matrix m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = selfints[i];
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= k || static_cast<std::size_t>(b) >= k || a == b) {
      throw InputError("edge references an unknown vertex");
    }
    m[a][b] += 1;
    m[b][a] += 1;
  }
  std::vector<AffineForm> rhs(k);
  for (std::size_t j = 0; j < k; ++j) rhs[j] = AffineForm(Rational(2 + selfints[j]));
  for (const auto& [v, mult] : attachments) {
    if (v < 0 || static_cast<std::size_t>(v) >= k) throw InputError("attachment references an unknown vertex");
    rhs[v] -= mult;
  }
  if (determinant(m).is_zero()) throw InternalError("singular intersection matrix");
  return solve_linear(m, rhs);
}

std::vector<AffineForm> chain_discrepancies(const ResolutionChain& chain, const AffineForm& left_mult,
                                            const AffineForm& right_mult) {
  if (chain.empty()) throw InputError("empty chain");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(int(i), int(i + 1));
  std::vector<std::pair<int, AffineForm>> att{{0, left_mult}, {int(chain.size()) - 1, right_mult}};
  return tree_discrepancies(chain, edges, att);
}

namespace {

// Integer coordinates (X, Y) = n (x, y).
bool lattice_int(const CyclicQuot& s, long X, long Y) {
  if (s.n == 1) return true;
  return ((X - s.q * Y) % s.n + s.n) % s.n == 0;
}

bool primitive_int(const CyclicQuot& s, long X, long Y) {
  long g = std::gcd(X, Y);
  for (long k = 2; k <= g; ++k) {
    if (g % k == 0 && lattice_int(s, X / k, Y / k)) return false;
  }
  return true;
}

bool to_int(const CyclicQuot& s, const LatticeValuation& v, long& X, long& Y) {
  Rational xn = v.x * s.n, yn = v.y * s.n;
  if (!xn.is_integer() || !yn.is_integer()) return false;
  X = xn.to_long();
  Y = yn.to_long();
  return true;
}

}  // namespace

bool in_lattice(const CyclicQuot& s, const LatticeValuation& v) {
  long X, Y;
  return to_int(s, v, X, Y) && lattice_int(s, X, Y);
}

bool is_primitive(const CyclicQuot& s, const LatticeValuation& v) {
  long X, Y;
  if (!to_int(s, v, X, Y) || !lattice_int(s, X, Y)) return false;
  if (X < 0 || Y < 0 || (X == 0 && Y == 0)) return false;
  return primitive_int(s, X, Y);
}

std::vector<LatticeValuation> chain_valuations(const CyclicQuot& s) {
  ResolutionChain chain = hj_expand(s);
  std::vector<LatticeValuation> out;
  LatticeValuation prev{Rational(1), Rational(0)};
  LatticeValuation cur{Rational(s.q, s.n), Rational(1, s.n)};
  for (long c : chain) {
    out.push_back(cur);
    LatticeValuation next{cur.x * Rational(-c) - prev.x, cur.y * Rational(-c) - prev.y};
    prev = cur;
    cur = next;
  }
  return out;
}

AffineForm toric_log_discrepancy(const CyclicQuot& s, const AffineForm& d1, const AffineForm& d2,
                                 const LatticeValuation& v) {
  if (!in_lattice(s, v)) throw InputError("valuation is not in the lattice of the singularity");
  return (AffineForm(1) - d1) * v.x + (AffineForm(1) - d2) * v.y;
}

std::vector<DeepValuation> enumerate_deep_valuations(const CyclicQuot& s, const AffineForm& d1,
                                                     const AffineForm& d2, const Rational& p,
                                                     const Rational& threshold) {
  if (threshold.sign() <= 0) throw InputError("threshold must be positive");
  const Rational a1 = Rational(1) - d1.eval(p), a2 = Rational(1) - d2.eval(p);
  if (a1.sign() <= 0 || a2.sign() <= 0) throw InputError("not klt along axis, enumeration unbounded");
  const long xmax = (threshold / a1 * s.n).floor().get_si();
  const long ymax = (threshold / a2 * s.n).floor().get_si();
  std::vector<DeepValuation> out;
  for (long X = 1; X <= xmax; ++X) {
    for (long Y = 1; Y <= ymax; ++Y) {
      if (!lattice_int(s, X, Y) || !primitive_int(s, X, Y)) continue;
      Rational ell = a1 * Rational(X, s.n) + a2 * Rational(Y, s.n);
      if (ell <= threshold) out.push_back({{Rational(X, s.n), Rational(Y, s.n)}, ell});
    }
  }
  return out;
}

}  // namespace ldp
