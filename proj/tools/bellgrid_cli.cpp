// bellgrid command-line front end.
//
// Exit codes: 0 = proven / pass / feasible, 1 = refuted / violated /
// infeasible, 2 = usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "bellgrid/acceptance.hpp"
#include "bellgrid/inequality.hpp"
#include "bellgrid/json_io.hpp"
#include "bellgrid/polytope.hpp"
#include "bellgrid/quantum.hpp"
#include "bellgrid/render.hpp"

namespace {

using bellgrid::Json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

int run_certify(const std::string& form_file) {
  const bellgrid::LinearForm form = bellgrid::form_from_json(load_json(form_file));
  const bellgrid::Certificate cert = bellgrid::certify(form);
  std::cout << bellgrid::to_json(cert).dump(2) << "\n";
  return cert.proven ? 0 : 1;
}

int run_catalog(const std::string& family) {
  std::vector<bellgrid::LinearForm> forms;
  if (family == "hardy64") {
    forms = bellgrid::catalog_hardy();
  } else if (family == "chsh") {
    forms = bellgrid::catalog_chsh();
  } else if (family == "zukowski") {
    forms = {bellgrid::zukowski_form()};
  } else if (family == "threeaxes") {
    forms = {bellgrid::three_axes_form()};
  } else if (family.rfind("nhardy:", 0) == 0) {
    forms = {bellgrid::n_party_hardy(std::stoi(family.substr(7)))};
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 2;
  }
  for (const auto& f : forms) {
    Json j = bellgrid::to_json(f);
    j["verdict"] = bellgrid::certify(f).proven ? "proven" : "refuted";
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int run_deduce(const std::string& file) {
  const Json j = load_json(file);
  const bellgrid::Scenario sc = bellgrid::scenario_from_json(j.at("scenario"));
  auto parse_term = [&](const Json& tj) {
    bellgrid::MarginalTerm t;
    t.settings = bellgrid::SettingVector{tj.at("settings").get<std::vector<int>>()};
    for (int b : tj.at("outcomes").get<std::vector<int>>())
      t.outcomes.push_back(static_cast<std::uint8_t>(b));
    t.coef = 1;
    return t;
  };
  std::vector<bellgrid::MarginalTerm> zeros;
  for (const auto& tj : j.at("zeros")) zeros.push_back(parse_term(tj));
  const bellgrid::MarginalTerm target = parse_term(j.at("target"));
  const bool deducible = bellgrid::hardy_deduce(sc, zeros, target);
  std::cout << Json{{"deducible", deducible}}.dump(2) << "\n";
  return deducible ? 0 : 1;
}

int run_quantum_eval(const std::string& state_file, const std::string& axes_file,
                     const std::string& form_file, const std::string& scenario_json) {
  const bellgrid::PureState state = bellgrid::state_from_json(load_json(state_file));
  bellgrid::Scenario sc(1, 1);
  std::optional<bellgrid::LinearForm> form;
  if (!form_file.empty()) {
    form = bellgrid::form_from_json(load_json(form_file));
    sc = form->scenario();
  } else if (!scenario_json.empty()) {
    sc = bellgrid::scenario_from_json(Json::parse(scenario_json));
  } else {
    std::cerr << "quantum-eval needs --form or --scenario\n";
    return 2;
  }
  const bellgrid::AxisChoice axes = bellgrid::axes_from_json(load_json(axes_file), sc);
  const bellgrid::MarginalSet ms = bellgrid::born_marginals(state, axes);
  Json out{{"marginals", bellgrid::to_json(ms)}};
  if (form) {
    const double v = bellgrid::evaluate(*form, ms).to_double();
    out["value"] = v;
    std::cout << out.dump(2) << "\n";
    return v >= 0.0 ? 0 : 1;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_scan(const std::string& form_file, const std::string& state_file, int grid_steps,
             bool full_sphere) {
  const bellgrid::LinearForm form = bellgrid::form_from_json(load_json(form_file));
  const bellgrid::PureState state = bellgrid::state_from_json(load_json(state_file));
  const bellgrid::ViolationReport rep =
      bellgrid::violation_scan(form, state, grid_steps, full_sphere);
  Json out{{"best_value", rep.best_value},
           {"violation", rep.violation},
           {"grid_steps", rep.grid_steps},
           {"refined", rep.refined},
           {"best_axes", bellgrid::to_json(rep.best_axes)}};
  std::cout << out.dump(2) << "\n";
  return rep.violation ? 1 : 0;
}

int run_membership(const std::string& marginals_file, double tol) {
  const bellgrid::MarginalSet ms = bellgrid::marginal_set_from_json(load_json(marginals_file));
  const bellgrid::MembershipResult res = bellgrid::membership(ms, tol);
  std::cout << bellgrid::to_json(res).dump(2) << "\n";
  return res.feasible ? 0 : 1;
}

int run_render(const std::string& form_file, const std::string& marginal_json,
               const std::string& format, bool ascii) {
  bellgrid::GridDiagram diagram;
  if (!form_file.empty()) {
    diagram = bellgrid::diagram_of_form(bellgrid::form_from_json(load_json(form_file)));
  } else if (!marginal_json.empty()) {
    const Json j = Json::parse(marginal_json);
    const bellgrid::Scenario sc = bellgrid::scenario_from_json(j.at("scenario"));
    bellgrid::SettingVector s{j.at("settings").get<std::vector<int>>()};
    std::vector<std::uint8_t> o;
    for (int b : j.at("outcomes").get<std::vector<int>>())
      o.push_back(static_cast<std::uint8_t>(b));
    diagram = bellgrid::diagram_of_marginal(sc, s, o);
  } else {
    std::cerr << "render needs --form or --marginal\n";
    return 2;
  }
  const auto fmt =
      format == "svg" ? bellgrid::DiagramFormat::Svg : bellgrid::DiagramFormat::Text;
  std::cout << bellgrid::emit(diagram, fmt, ascii);
  return 0;
}

int run_reproduce() {
  const auto results = bellgrid::run_acceptance();
  const bool all = bellgrid::report_acceptance(results, std::cout);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Marginal/underlying-probability toolkit: Bell-inequality certificates, "
               "quantum evaluation, and local-polytope membership"};
  app.require_subcommand(1);

  std::string form_file, state_file, axes_file, marginals_file, family, deduce_file;
  std::string marginal_json, scenario_json;
  std::string format = "text";
  bool ascii = false, full_sphere = false;
  int grid_steps = 8;
  double tol = 1e-8;

  auto* certify = app.add_subcommand("certify", "Certify a linear form file");
  certify->add_option("form", form_file, "LinearForm JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "Emit a named inequality family (NDJSON)");
  catalog->add_option("family", family, "hardy64|chsh|nhardy:n|zukowski|threeaxes")->required();

  auto* deduce = app.add_subcommand("deduce", "Hardy-style zero deduction");
  deduce->add_option("file", deduce_file, "JSON with scenario, zeros, target")->required();

  auto* qeval = app.add_subcommand("quantum-eval", "Born-rule marginals and form evaluation");
  qeval->add_option("--state", state_file, "state JSON file")->required();
  qeval->add_option("--axes", axes_file, "axes JSON file")->required();
  qeval->add_option("--form", form_file, "LinearForm JSON file");
  qeval->add_option("--scenario", scenario_json, "inline scenario JSON");

  auto* scan = app.add_subcommand("scan", "Violation scan over measurement axes");
  scan->add_option("--form", form_file, "LinearForm JSON file")->required();
  scan->add_option("--state", state_file, "state JSON file")->required();
  scan->add_option("--grid-steps", grid_steps, "theta grid resolution");
  scan->add_flag("--full-sphere", full_sphere, "scan phi uniformly too");

  auto* member = app.add_subcommand("membership", "Local-polytope membership by feasibility");
  member->add_option("marginals", marginals_file, "MarginalSet JSON file")->required();
  member->add_option("--tol", tol, "feasibility tolerance (float mode)");

  auto* render = app.add_subcommand("render", "Grid diagram of a form or marginal");
  render->add_option("--form", form_file, "LinearForm JSON file");
  render->add_option("--marginal", marginal_json,
                     "inline JSON {scenario, settings, outcomes}");
  render->add_option("--format", format, "text|svg");
  render->add_flag("--ascii", ascii, "ASCII frame instead of box drawing");

  app.add_subcommand("reproduce", "Run the acceptance suite and report per-criterion results");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("certify")) return run_certify(form_file);
    if (app.got_subcommand("catalog")) return run_catalog(family);
    if (app.got_subcommand("deduce")) return run_deduce(deduce_file);
    if (app.got_subcommand("quantum-eval"))
      return run_quantum_eval(state_file, axes_file, form_file, scenario_json);
    if (app.got_subcommand("scan")) return run_scan(form_file, state_file, grid_steps, full_sphere);
    if (app.got_subcommand("membership")) return run_membership(marginals_file, tol);
    if (app.got_subcommand("render")) return run_render(form_file, marginal_json, format, ascii);
    if (app.got_subcommand("reproduce")) return run_reproduce();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
