#include "ldp/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldp/catalog.hpp"
#include "ldp/cyclic_quot.hpp"
#include "ldp/delta.hpp"
#include "ldp/error.hpp"
#include "ldp/germ.hpp"

#ifndef LDP_BUNDLED_CATALOG
#define LDP_BUNDLED_CATALOG "data/catalog.json"
#endif

namespace ldp {

using nlohmann::json;

std::string resolve_catalog_path(const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv(kCatalogEnv); env && *env) return env;
  return LDP_BUNDLED_CATALOG;
}

namespace {

struct Args {
  CliConfig cfg;
  std::string threshold_text = "6/7";
  std::string output_text = "table";
  bool json_flag = false;
  long hj_n = 0, hj_q = 0;
  std::string verify_id;
  std::string delta_id, delta_t;
  std::string m1, m2, range;
  bool alpha_dominant = false;
  long theta_max = 1;
};

std::string chain_text(const ResolutionChain& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + "]";
}

int cmd_hj(const Args& a, std::ostream& out) {
  if (a.hj_n < 2) throw InputError("nothing to resolve");
  ResolutionChain c = hj_expand(CyclicQuot::make(a.hj_n, a.hj_q));
  if (a.cfg.output == OutputFormat::Json) {
    out << json{{"n", a.hj_n}, {"q", a.hj_q}, {"chain", c}}.dump() << "\n";
  } else {
    out << chain_text(c) << "\n";
  }
  return 0;
}

void print_report_table(const VerificationReport& r, bool all_checks, std::ostream& out) {
  out << (r.overall ? "PASS " : "FAIL ") << r.id << "  [" << r.key << "]\n";
  for (const auto& c : r.checks) {
    if (!all_checks && c.pass) continue;
    out << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": expected " << c.expected << "; got " << c.actual
        << "\n";
  }
}

int cmd_verify(const Args& a, std::ostream& out) {
  Catalog cat = load_catalog(resolve_catalog_path(a.cfg.catalog_path));
  const bool json_out = a.cfg.output == OutputFormat::Json;
  if (a.verify_id == "all") {
    VerifySummary s = verify_all(cat, a.cfg.parallel);
    for (const auto& r : s.reports) {
      if (json_out) {
        out << report_to_json(r).dump() << "\n";
      } else {
        print_report_table(r, false, out);
      }
    }
    if (json_out) {
      out << json{{"families_pass", s.families_pass}, {"families_total", s.families_total},
                  {"records_pass", s.records_pass}, {"records_total", s.records_total}}
                 .dump()
          << "\n";
    } else {
      out << s.families_pass << "/" << s.families_total << " pass (records " << s.records_pass << "/"
          << s.records_total << ")\n";
    }
    return s.families_pass == s.families_total ? 0 : 1;
  }
  std::vector<const CaseRecord*> recs = cat.resolve(a.verify_id);
  if (recs.empty()) throw InputError("unknown case id '" + a.verify_id + "'");
  bool ok = true;
  for (const CaseRecord* r : recs) {
    VerificationReport rep = verify_case(*r);
    ok = ok && rep.overall;
    if (json_out) {
      out << report_to_json(rep).dump() << "\n";
    } else {
      print_report_table(rep, true, out);
    }
  }
  return ok ? 0 : 1;
}

int cmd_delta(const Args& a, std::ostream& out) {
  Catalog cat = load_catalog(resolve_catalog_path(a.cfg.catalog_path));
  std::vector<const CaseRecord*> recs = cat.resolve(a.delta_id);
  if (recs.empty()) throw InputError("unknown case id '" + a.delta_id + "'");
  if (recs.size() > 1) {
    std::string keys;
    for (const auto* r : recs) keys += " " + r->key;
    throw InputError("ambiguous case id '" + a.delta_id + "'; choose one of:" + keys);
  }
  const Rational t = Rational::parse(a.delta_t);
  DeltaReport rep = delta(recs[0]->surface, t, a.cfg.threshold);
  if (a.cfg.output == OutputFormat::Json) {
    json ws = json::array();
    for (const auto& w : rep.witnesses) {
      ws.push_back({{"kind", w.kind == DeltaWitness::Kind::Component ? "component" : "exceptional"},
                    {"source", w.source},
                    {"value", w.value.str()}});
    }
    out << json{{"key", recs[0]->key}, {"t", t.str()}, {"delta", rep.delta}, {"witnesses", ws}}.dump() << "\n";
  } else {
    out << "delta = " << rep.delta << "\n";
    for (const auto& w : rep.witnesses) {
      if (w.kind == DeltaWitness::Kind::Component) {
        out << "  " << w.source << ": coefficient " << w.value << "\n";
      } else {
        out << "  " << w.source << ": discrepancy " << w.value << "\n";
      }
    }
  }
  return 0;
}

ParamRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("range must look like a/b..c/d");
  return {Rational::parse(text.substr(0, dots)), Rational::parse(text.substr(dots + 2))};
}

int cmd_solve_weights(const Args& a, std::ostream& out) {
  WeightConstraints wc{a.alpha_dominant, a.theta_max};
  auto sols = solve_blowup_weights(AffineForm::parse(a.m1), AffineForm::parse(a.m2), parse_range(a.range), wc);
  if (a.cfg.output == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& s : sols) {
      arr.push_back({{"alpha", s.weights.alpha}, {"beta", s.weights.beta}, {"theta", s.weights.theta}, {"b", s.b.str()}});
    }
    out << arr.dump() << "\n";
  } else {
    if (sols.empty()) out << "no solutions\n";
    for (const auto& s : sols) {
      out << "(alpha,beta,theta,b) = (" << s.weights.alpha << "," << s.weights.beta << "," << s.weights.theta << ","
          << s.b << ")\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Exact log surface singularity calculus and catalog verifier"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--catalog", a.cfg.catalog_path, "catalog JSON file (default: $LDP_CATALOG or bundled)");
  app.add_option("--threshold", a.threshold_text, "discrepancy threshold p/q in (0,1)");
  app.add_option("--output", a.output_text, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_flag("--json", a.json_flag, "shorthand for --output json");
  app.add_flag("--parallel", a.cfg.parallel, "verify records on worker threads");

  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung chain of 1/n(q,1)");
  hj->add_option("n", a.hj_n)->required();
  hj->add_option("q", a.hj_q)->required();

  auto* verify = app.add_subcommand("verify", "verify a catalog case, or all");
  verify->add_option("id", a.verify_id)->required();

  auto* dl = app.add_subcommand("delta", "delta invariant of a catalog record at t");
  dl->add_option("id", a.delta_id)->required();
  dl->add_option("--t", a.delta_t, "parameter value p/q")->required();

  auto* sw = app.add_subcommand("solve-weights", "weighted blow-up equation solver");
  sw->add_option("--m1", a.m1)->required();
  sw->add_option("--m2", a.m2)->required();
  sw->add_option("--range", a.range, "a/b..c/d (closed-open)")->required();
  sw->add_flag("--alpha-dominant", a.alpha_dominant, "require alpha >= beta + 1");
  sw->add_option("--theta-max", a.theta_max, "largest theta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    a.cfg.output = (a.json_flag || a.output_text == "json") ? OutputFormat::Json : OutputFormat::Table;
    a.cfg.threshold = Rational::parse(a.threshold_text);
    if (!(Rational(0) < a.cfg.threshold && a.cfg.threshold < Rational(1))) {
      throw InputError("threshold must lie in (0, 1)");
    }
    if (hj->parsed()) return cmd_hj(a, out);
    if (verify->parsed()) return cmd_verify(a, out);
    if (dl->parsed()) return cmd_delta(a, out);
    if (sw->parsed()) return cmd_solve_weights(a, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ldp
