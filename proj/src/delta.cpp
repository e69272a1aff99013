#include "ldp/delta.hpp"

#include <algorithm>
#include <numeric>

#include "ldp/error.hpp"

namespace ldp {

namespace {

std::string copy_label(const std::string& id, long i, long count) {
  if (count == 1) return id;
  return id + " (" + std::to_string(i + 1) + " of " + std::to_string(count) + ")";
}

void add_exceptional(DeltaReport& rep, const std::string& source, const AffineForm& ell, const Rational& t) {
  rep.witnesses.push_back({DeltaWitness::Kind::Exceptional, source, ell.eval(t) - 1, ell});
}

// Coprime (w1, w2) >= 1 with w1 a + w2 b <= bound, for two transverse
// divisors with log discrepancies a and b.
std::vector<std::pair<long, long>> corner_weights(const Rational& a, const Rational& b, const Rational& bound) {
  if (a.sign() <= 0 || b.sign() <= 0) throw InputError("not klt");
  std::vector<std::pair<long, long>> out;
  for (long w1 = 1; a * w1 + b <= bound; ++w1) {
    for (long w2 = 1; a * w1 + b * w2 <= bound; ++w2) {
      if (std::gcd(w1, w2) == 1) out.emplace_back(w1, w2);
    }
  }
  return out;
}

bool skip_point(const IncidencePoint& pt) {
  return pt.quot.n == 1 && pt.branches.size() <= 1 &&
         std::all_of(pt.branches.begin(), pt.branches.end(),
                     [](const IncidenceBranch& b) { return b.shape.is_axis(); });
}

void graph_deep(const LogSurface& s, const Rational& t, const Rational& bound, DeltaReport& rep) {
  const GraphSurface& g = s.graph();
  const std::vector<AffineForm> A = g.vertex_log_discrepancies(s.coefficient_list());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].eval(t).sign() <= 0) throw InputError("not klt at " + g.vertices[i].id);
  }
  auto handle_ell = [&](const std::string& h) {
    const BoundaryEntry* e = s.find(h);
    return e ? AffineForm(1) - e->coefficient : AffineForm(1);
  };
  auto corners = [&](const std::string& label, const AffineForm& fa, const AffineForm& fb, long count) {
    for (auto [w1, w2] : corner_weights(fa.eval(t), fb.eval(t), bound)) {
      for (long c = 0; c < count; ++c) {
        add_exceptional(rep,
                        copy_label(label + " weight (" + std::to_string(w1) + ", " + std::to_string(w2) + ")", c,
                                   count),
                        fa * Rational(w1) + fb * Rational(w2), t);
      }
    }
  };
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].eval(t) <= bound) add_exceptional(rep, g.vertices[i].id, A[i], t);
  }
  const Matrix m = g.vertex_matrix();
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      if (m[i][j].is_zero()) continue;
      corners(g.vertices[i].id + "-" + g.vertices[j].id, A[i], A[j], m[i][j].to_long());
    }
  }
  for (const auto& mt : g.meets) {
    const bool a_handle = g.handle(mt.a) != nullptr, b_handle = g.handle(mt.b) != nullptr;
    if (a_handle && b_handle) {
      corners(mt.a + "-" + mt.b, handle_ell(mt.a), handle_ell(mt.b), mt.count);
    } else {
      const std::string& h = a_handle ? mt.a : mt.b;
      const std::string& v = a_handle ? mt.b : mt.a;
      corners(v + "-" + h, A[g.vertex_index(v)], handle_ell(h), mt.count);
    }
  }
}

DeltaReport collect(const LogSurface& s, const Rational& t, const Rational& threshold) {
  const Rational bound = Rational(1) - threshold;
  DeltaReport rep;
  for (const auto& b : s.boundary) {
    const Rational c = b.coefficient.eval(t);
    if (c >= Rational(1)) throw InputError("not klt: coefficient of " + b.curve + " is " + c.str());
    if (c >= threshold) rep.witnesses.push_back({DeltaWitness::Kind::Component, b.curve, c, AffineForm(1) - b.coefficient});
  }
  if (s.is_wps()) {
    for (const auto& pt : s.points) {
      if (skip_point(pt)) continue;
      for (const auto& v : germ_valuations_below(s.germ_at(pt), t, bound)) {
        for (long c = 0; c < pt.count; ++c) {
          add_exceptional(rep, copy_label(pt.id, c, pt.count) + ": " + v.describe(), v.log_discrepancy, t);
        }
      }
    }
  } else {
    graph_deep(s, t, bound, rep);
  }
  rep.delta = static_cast<long>(rep.witnesses.size());
  return rep;
}

}  // namespace

DeltaReport delta(const LogSurface& s, const Rational& t, const Rational& threshold) {
  if (!(Rational(0) < threshold && threshold < Rational(1))) throw InputError("threshold must lie in (0, 1)");
  return collect(s, t, threshold);
}

std::vector<std::pair<Rational, DeltaReport>> delta_sweep(const LogSurface& s, const std::vector<Rational>& samples,
                                                          const Rational& threshold) {
  std::vector<std::pair<Rational, DeltaReport>> out;
  for (const auto& t : samples) out.emplace_back(t, delta(s, t, threshold));
  return out;
}

std::vector<Rational> default_samples(const Rational& high, bool high_open) {
  const Rational low(6, 7);
  if (high <= low) return {low};
  const Rational top = high_open ? high - Rational(1, 1000) : high;
  return {low, (low + high) / 2, max(top, low)};
}

Degeneration find_degeneration(const LogSurface& s, const Rational& threshold) {
  const Rational bound = Rational(1) - threshold;
  const Rational low(6, 7);
  Degeneration out;
  out.t_max = t_max_value(s);
  if (out.t_max >= Rational(1)) throw InputError("nef threshold " + out.t_max.str() + " is not below 1");

  // Cap the probe so that every slope-changing exceptional direction still
  // has log discrepancy >= bound; below the cap the pair is klt and the
  // enumeration is finite.
  std::vector<AffineForm> rays;
  if (s.is_wps()) {
    for (const auto& pt : s.points) {
      if (skip_point(pt)) continue;
      for (const auto& r : germ_break_rays(s.germ_at(pt))) rays.push_back(r.log_discrepancy);
    }
  } else {
    rays = s.graph().vertex_log_discrepancies(s.coefficient_list());
  }
  Rational probe = out.t_max;
  for (const auto& f : rays) {
    if (f.eval(low) <= bound) {
      probe = min(probe, low);
    } else if (f.slope.sign() < 0) {
      probe = min(probe, std::get<Rational>(af_solve_zero(f - AffineForm(bound))));
    }
  }
  probe = max(probe, min(low, out.t_max));

  const DeltaReport rep = collect(s, probe, threshold);
  std::vector<Rational> onsets;
  for (const auto& w : rep.witnesses) {
    if (w.log_discrepancy.is_constant()) {
      onsets.push_back(Rational(0));
    } else {
      onsets.push_back(std::get<Rational>(af_solve_zero(w.log_discrepancy - AffineForm(bound))));
    }
  }
  std::sort(onsets.begin(), onsets.end());
  if (onsets.size() >= 2) out.t_delta = onsets[1];
  out.t_end = out.t_delta ? min(out.t_max, *out.t_delta) : out.t_max;
  out.open = out.t_delta && *out.t_delta <= out.t_max;
  return out;
}

}  // namespace ldp
