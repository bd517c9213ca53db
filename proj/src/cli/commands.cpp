#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kscyc/cli.hpp"

namespace kscyc::cli {

namespace {

struct Check {
  std::string name;
  std::string status;  // PASS, FAIL, SKIP
  std::vector<std::string> witnesses;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> settings;
  std::vector<Check> checks;
  json sections = json::object();
  std::string verdict;

  void add(const std::string& name, const Report& r) {
    checks.push_back({name, r.pass ? "PASS" : "FAIL", r.witnesses});
  }
  void skip(const std::string& name, const std::string& why) {
    checks.push_back({name, "SKIP", {why}});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "FAIL") return false;
    return true;
  }

  json to_json() const {
    json s = json::object();
    for (const auto& [k, v] : settings) s[k] = v;
    json cs = json::array();
    for (const auto& c : checks)
      cs.push_back({{"name", c.name}, {"status", c.status}, {"witnesses", c.witnesses}});
    return {{"command", command}, {"settings", s}, {"checks", cs},
            {"sections", sections}, {"verdict", verdict}};
  }

  std::string render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : settings) os << k << ": " << v << "\n";
    for (const auto& c : checks) {
      os << "[" << c.status << "] " << c.name << "\n";
      for (const auto& w : c.witnesses) os << "    " << w << "\n";
    }
    for (const auto& [k, v] : sections.items()) os << k << ": " << v.dump() << "\n";
    os << "verdict: " << verdict << "\n";
    return os.str();
  }
};

struct Options {
  std::optional<int> order;
  std::optional<std::string> energy_cutoff;
  std::optional<std::uint64_t> seed;
  bool force = false;
  std::optional<std::string> output;
  std::string format = "text";
  std::string algebra_path;
  std::string second_path;
};

Overrides overrides_of(const Options& o) {
  Overrides ov;
  ov.order = o.order;
  if (o.energy_cutoff) ov.energy_cutoff = parse_rational(*o.energy_cutoff);
  return ov;
}

AlgebraSpec load_algebra(const Options& o) {
  return algebra_from_json(parse_json(read_file(o.algebra_path), o.algebra_path),
                           overrides_of(o));
}

json load_second(const Options& o) {
  return parse_json(read_file(o.second_path), o.second_path);
}

void echo_settings(RunReport& r, const AlgebraSpec& spec, const Options& o) {
  const Truncation& t = spec.algebra.trunc();
  r.settings.emplace_back("order", std::to_string(t.order));
  r.settings.emplace_back("energy_cutoff", t.cutoff ? format_rational(*t.cutoff) : "none");
  if (o.seed) r.settings.emplace_back("seed", std::to_string(*o.seed));
  if (o.force) r.settings.emplace_back("force", "true");
}

Report defect_report(const Basis& b, const std::map<Word, Vec>& d) {
  Report r;
  for (const auto& [w, v] : d) r.fail(b.format_word(w) + ": " + format_vec(b, v));
  return r;
}

void write_payload(const Options& o, const json& payload) {
  if (!o.output) return;
  std::ofstream f(*o.output, std::ios::binary);
  if (!f) throw InputError("cannot write " + *o.output);
  f << payload.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

void cmd_check(const Options& o, RunReport& r) {
  const AlgebraSpec spec = load_algebra(o);
  const AInftyStructure& a = spec.algebra;
  const Basis& b = a.basis();
  echo_settings(r, spec, o);

  const Report gapped = gapped_validate(spec.monoid, a);
  r.add("gapped_validate", gapped);
  if (!spec.filtered) {
    r.add("ainfty_defect", defect_report(b, ainfty_defect(a)));
  } else if (gapped.pass) {
    r.add("ainfty_defect", defect_report(b, filtered_ainfty_defect(spec.monoid, a)));
  } else {
    r.skip("ainfty_defect", "structure is not gapped");
  }
  if (b.unit())
    r.add("unit_check", unit_check(a));
  else
    r.skip("unit_check", "no unit in the basis");

  if (!spec.pairing) {
    r.skip("cyclicity", "no pairing given");
  } else if (!is_graded_skew(b, *spec.pairing)) {
    Report bad;
    bad.fail("pairing is not graded skew");
    r.add("pairing", bad);
  } else {
    Report p;
    if (!is_nondegenerate(*spec.pairing)) p.fail("pairing is degenerate");
    r.add("pairing", p);
    const CyclicityReport cy = spec.filtered ? filtered_cyclicity(a, *spec.pairing)
                                             : cyclicity_defect(a, *spec.pairing);
    Report eq, lie, agree;
    for (const auto& [m, c] : cy.equation_defect)
      eq.fail(b.format_word(m.w) + ": " + format_vec(b, Vec{{m, c}}));
    for (const auto& [m, c] : cy.lie_defect) lie.fail(format_form(b, Vec{{m, c}}));
    if (!cy.agree()) agree.fail("the two cyclicity routes report different witness words");
    r.add("cyclicity_equation", eq);
    r.add("cyclicity_lie", lie);
    r.add("cyclicity_routes_agree", agree);
  }
  r.verdict = r.all_pass() ? "pass" : "fail";
  write_payload(o, r.to_json());
}

void cmd_tilde(const Options& o, RunReport& r) {
  const AlgebraSpec spec = load_algebra(o);
  const AInftyStructure& a = spec.algebra;
  const Basis& b = a.basis();
  const int n = a.trunc().order;
  echo_settings(r, spec, o);

  NegativeCyclicCochain phi;
  if (!o.second_path.empty()) {
    phi = cocycle_from_json(b, load_second(o), spec.filtered);
  } else if (o.seed) {
    phi = generate_cocycles(a, n, 1, 0, 1, *o.seed).front();
    r.sections["cocycle"] = cocycle_to_json(b, phi);
  } else {
    throw InputError("tilde needs a cocycle file or --seed");
  }

  const Report valid = validate_negative_cocycle(a, phi);
  if (!valid.pass && !o.force)
    throw PreconditionError("input is not a negative cyclic cocycle (" +
                            valid.witnesses.front() + "); rerun with --force to continue");
  r.add("cocycle", valid);

  const BimodMap psi = tilde(b, phi.cols.front());
  Report bim;
  // b* phi_0 is controlled on inputs of arity <= n - 2 only
  for (const auto& [k, c] : bimodule_defect(a, psi, n - 1))
    bim.fail(format_bimod(b, BimodMap{{k, c}}));
  r.add("bimodule_map", bim);

  const ShipReport ship = ship_check(a, psi, n);
  r.add("skew", ship.skew);
  r.add("closed", ship.closed_direct);
  r.add("closed_form_route", ship.closed_form);
  Report agree;
  if (!ship.closed_routes_agree()) agree.fail("closedness routes disagree");
  r.add("closed_routes_agree", agree);
  r.add("nondegenerate", ship.nondegenerate);
  if (b.unit()) r.add("trace", trace_compare(a, phi.cols.front()));
  r.sections["gram"] = matrix_to_json(b, ship.gram);

  r.verdict = r.all_pass() ? "pass" : "fail";
  write_payload(o, bimodmap_to_json(b, psi));
}

void cmd_equivalence(const Options& o, RunReport& r) {
  const AlgebraSpec spec = load_algebra(o);
  const AInftyStructure& a = spec.algebra;
  const Basis& b = a.basis();
  echo_settings(r, spec, o);
  if (!spec.pairing) throw PreconditionError("equivalence needs a pairing in the algebra file");
  const Cochain eta = cochain_from_json(b, load_second(o), spec.filtered);

  const EquivalenceCertificate cert = spec.filtered
                                          ? filtered_equivalence(a, *spec.pairing, eta)
                                          : equivalence_automorphism(a, *spec.pairing, eta);
  Report res, hom;
  for (const auto& [m, c] : cert.residual) res.fail(format_form(b, Vec{{m, c}}));
  if (!cert.homomorphism_ok) hom.fail("automorphism is not an A-infinity homomorphism");
  r.add("residual_zero", res);
  r.add("homomorphism", hom);
  r.add("diagram", cert.diagram);

  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back({{"order", s.order}, {"v", field_to_json(b, s.v)}});
  r.sections["steps"] = steps;
  r.sections["perturbation"] = form_to_json(b, cert.perturbation)["terms"];
  r.sections["automorphism"] = cohomomorphism_to_json(b, cert.automorphism)["components"];
  r.verdict = r.all_pass() ? "pass" : "fail";

  json payload = cohomomorphism_to_json(b, cert.automorphism);
  payload["kind"] = "certificate";
  payload["steps"] = steps;
  payload["residual_zero"] = cert.residual.empty();
  payload["homomorphism"] = cert.homomorphism_ok;
  payload["diagram"] = cert.diagram.pass;
  write_payload(o, payload);
}

int cmd_darboux(const Options& o, RunReport& r) {
  const AlgebraSpec spec = load_algebra(o);
  const Basis& b = spec.algebra.basis();
  const Truncation& t = spec.algebra.trunc();
  echo_settings(r, spec, o);
  const Vec omega = form_from_json(b, load_second(o), spec.filtered);

  DarbouxResult res;
  if (spec.filtered) {
    DarbouxOutcome out = filtered_darboux(b, omega, t);
    if (!out.result) {
      Report ob;
      ob.fail(out.obstruction);
      r.add("negative_energy", ob);
      r.sections["offending_term"] =
          form_to_json(b, Vec{{out.offending->first, out.offending->second}})["terms"];
      r.verdict = "obstruction";
      return kObstruction;
    }
    res = std::move(*out.result);
  } else {
    res = darboux(b, omega, t);
  }
  const Vec w0 = to_form(b, res.constant);
  Report rec;
  const Vec back = truncate(pullback_by_cohom(b, res.transform, omega, t), t);
  for (const auto& [m, c] : minus(back, truncate(w0, t))) rec.fail(format_form(b, Vec{{m, c}}));
  r.add("recomputation", rec);
  r.sections["constant"] = matrix_to_json(b, res.constant.g);
  r.sections["levels"] = res.levels;
  r.sections["transformation"] = cohomomorphism_to_json(b, res.transform)["components"];
  r.verdict = r.all_pass() ? "pass" : "fail";

  json payload = cohomomorphism_to_json(b, res.transform);
  payload["kind"] = "transformation";
  payload["constant"] = matrix_to_json(b, res.constant.g);
  write_payload(o, payload);
  return r.all_pass() ? kPass : kFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kscyc: cyclic A-infinity structures, strong homotopy inner products and "
               "their equivalences"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "truncation order N");
    sub->add_option("--energy-cutoff", o.energy_cutoff, "energy cutoff E");
    sub->add_option("--seed", o.seed, "seed for randomized generation");
    sub->add_flag("--force", o.force, "continue past a failed precondition check");
    sub->add_option("--output", o.output, "write the result file here");
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("algebra", o.algebra_path, "algebra file")->required();
  };
  auto* check = app.add_subcommand("check", "structural checks of an algebra file");
  common(check);
  auto* tl = app.add_subcommand("tilde", "bimodule map from a negative cyclic cocycle");
  common(tl);
  tl->add_option("cocycle", o.second_path, "cocycle file (omit with --seed to generate)");
  auto* eq = app.add_subcommand("equivalence", "automorphism for an eta perturbation");
  common(eq);
  eq->add_option("eta", o.second_path, "cochain file")->required();
  auto* db = app.add_subcommand("darboux", "normalize a closed 2-form");
  common(db);
  db->add_option("form", o.second_path, "form file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInput;
  }

  RunReport r;
  CLI::App* sub = app.get_subcommands().front();
  r.command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = kPass;
  try {
    if (sub == check) cmd_check(o, r);
    else if (sub == tl) cmd_tilde(o, r);
    else if (sub == eq) cmd_equivalence(o, r);
    else code = cmd_darboux(o, r);
    if (code == kPass && !r.all_pass()) code = kFail;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    Report rej;
    rej.fail(e.what());
    r.add("preconditions", rej);
    r.verdict = "rejected";
    code = kPrecondition;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kFail;
  }
  out << r.render(o.format);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "elapsed: " << std::fixed << std::setprecision(3) << secs << " s\n";
  return code;
}

}  // namespace kscyc::cli
