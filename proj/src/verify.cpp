#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "ldp/catalog.hpp"
#include "ldp/cyclic_quot.hpp"
#include "ldp/delta.hpp"
#include "ldp/error.hpp"

namespace ldp {

using nlohmann::json;

namespace {

const Rational kLow(6, 7);


template <class F>
CheckResult run_check(const std::string& name, const std::string& expected, F&& body) {
  CheckResult c{name, false, expected, ""};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.actual = std::string("error: ") + e.what();
  }
  return c;
}

CheckResult check_interval(const CaseRecord& r) {
  const TInterval& iv = r.interval;
  return run_check("interval", "low = 6/7", [&](CheckResult& c) {
    c.actual = "low = " + iv.low.str();
    c.pass = iv.low == kLow;
  });
}

CheckResult check_t_max(const CaseRecord& r) {
  const TInterval& iv = r.interval;
  return run_check("t_max", "upper end " + iv.high.str() + (iv.high_open ? " (open)" : " (closed)"),
                   [&](CheckResult& c) {
                     Degeneration d = find_degeneration(r.surface);
                     c.actual = "upper end " + d.t_end.str() + (d.open ? " (open)" : " (closed)") +
                                "; t_max = " + d.t_max.str() + "; delta >= 2 from " +
                                (d.t_delta ? d.t_delta->str() : std::string("never"));
                     c.pass = d.t_end == iv.high && d.open == iv.high_open && iv.high >= kLow;
                   });
}

CheckResult check_delta(const CaseRecord& r) {
  std::vector<Rational> samples{kLow};
  if (r.interval.high > kLow) samples.push_back((kLow + r.interval.high) / 2);
  std::string expected = "delta = 1 at " + samples[0].str();
  if (samples.size() > 1) expected += " and " + samples[1].str();
  return run_check("delta", expected, [&](CheckResult& c) {
    c.pass = true;
    for (const auto& [t, rep] : delta_sweep(r.surface, samples)) {
      c.actual += (c.actual.empty() ? "" : ", ") + std::string("delta(") + t.str() + ") = " + std::to_string(rep.delta);
      if (rep.delta != 1) c.pass = false;
    }
  });
}

CheckResult check_marker(const CaseRecord& r) {
  const std::string expected =
      r.marker.ell ? "pa = 1" : "pa = 0, C~^2 = " + std::to_string(r.marker.q);
  return run_check("marker", expected, [&](CheckResult& c) {
    Rational b = t_max_value(r.surface);
    AdjunctionReport a = adjunction(r.surface, b);
    c.actual = "pa = " + a.pa.str() + ", C~^2 = " + a.C2_tilde.str() + ", deg Diff = " + a.deg_diff.str();
    c.pass = r.marker.ell ? a.pa == Rational(1) : (a.pa == Rational(0) && a.C2_tilde == Rational(r.marker.q));
  });
}

CheckResult check_nef(const CaseRecord& r) {
  return run_check("nef", "C^2 > 0 and -(K+D) nef on [6/7, min(high, t_max)]", [&](CheckResult& c) {
    const Rational tm = t_max_value(r.surface);
    const Rational top = min(r.interval.high, tm);
    if (top < kLow) {
      c.actual = "empty range";
      c.pass = true;
      return;
    }
    const Rational c2 = r.surface.dot(LogSurface::kParamCurve, LogSurface::kParamCurve);
    const AffineForm f = r.surface.log_canonical_dot(r.surface.test_curve());
    const Rational at_low = -f.eval(kLow), at_top = -f.eval(top);
    c.actual = "C^2 = " + c2.str() + ", -(K+D).A = " + at_low.str() + " at 6/7, " + at_top.str() + " at " + top.str();
    c.pass = c2.sign() > 0 && at_low.sign() >= 0 && at_top.sign() >= 0;
  });
}

CheckResult check_endpoint(const CaseRecord& r) {
  const EndpointAnnotation& ep = *r.endpoint;
  // The position of the degeneration is owned by the t_max check; this one
  // pins the annotation to the printed end and the value of delta there.
  return run_check("endpoint",
                   "delta = " + std::to_string(ep.delta) + " at the printed end t = " + ep.t.str(),
                   [&](CheckResult& c) {
                     Degeneration d = find_degeneration(r.surface);
                     if (!d.t_delta) {
                       c.actual = "delta stays below 2";
                       return;
                     }
                     DeltaReport rep = delta(r.surface, *d.t_delta);
                     c.actual = "delta = " + std::to_string(rep.delta) + " from t = " + d.t_delta->str() +
                                "; printed end " + r.interval.high.str();
                     c.pass = rep.delta == ep.delta && ep.t == r.interval.high;
                   });
}

CheckResult check_diagram(const CaseRecord& r) {
  const Diagram& dg = *r.diagram;
  std::string expected;
  for (const auto& v : dg.vertices) expected += (expected.empty() ? "" : ", ") + v.label.str(dg.param);
  return run_check("diagram", expected, [&](CheckResult& c) {
    std::vector<long> selfs;
    for (const auto& v : dg.vertices) selfs.push_back(v.self);
    std::vector<AffineForm> got = tree_discrepancies(selfs, dg.edges, dg.boundary);
    c.pass = true;
    for (std::size_t i = 0; i < got.size(); ++i) {
      c.actual += (i ? ", " : "") + got[i].str(dg.param);
      if (!(got[i] == dg.vertices[i].label)) c.pass = false;
    }
  });
}

}  // namespace

VerificationReport verify_case(const CaseRecord& r) {
  VerificationReport rep;
  rep.key = r.key;
  rep.id = r.id;
  rep.checks.push_back(check_interval(r));
  rep.checks.push_back(check_t_max(r));
  rep.checks.push_back(check_delta(r));
  rep.checks.push_back(check_marker(r));
  rep.checks.push_back(check_nef(r));
  if (r.endpoint) rep.checks.push_back(check_endpoint(r));
  if (r.diagram) rep.checks.push_back(check_diagram(r));
  rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.pass; });
  return rep;
}

VerifySummary summarize(std::vector<VerificationReport> reports, const Catalog& c) {
  VerifySummary s;
  s.reports = std::move(reports);
  std::map<long, bool> family_ok;
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    auto [it, fresh] = family_ok.emplace(c.records[i].family, true);
    it->second = it->second && s.reports[i].overall;
    ++s.records_total;
    if (s.reports[i].overall) ++s.records_pass;
  }
  s.families_total = static_cast<long>(family_ok.size());
  for (const auto& [f, ok] : family_ok) s.families_pass += ok ? 1 : 0;
  return s;
}

VerifySummary verify_all(const Catalog& c, bool parallel) {
  std::vector<VerificationReport> reports(c.records.size());
  if (!parallel) {
    for (std::size_t i = 0; i < c.records.size(); ++i) reports[i] = verify_case(c.records[i]);
  } else {
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < c.records.size(); i = next++) reports[i] = verify_case(c.records[i]);
      });
    }
    for (auto& th : pool) th.join();
  }
  return summarize(std::move(reports), c);
}

json report_to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return {{"key", r.key}, {"id", r.id}, {"pass", r.overall}, {"checks", checks}};
}

}  // namespace ldp
