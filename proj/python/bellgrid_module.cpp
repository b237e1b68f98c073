// Python bindings for the core operations. Exact rationals cross the
// boundary as doubles (or as num/den pairs where exactness matters);
// full-fidelity serialization goes through the JSON helpers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bellgrid/acceptance.hpp"
#include "bellgrid/inequality.hpp"
#include "bellgrid/json_io.hpp"
#include "bellgrid/polytope.hpp"
#include "bellgrid/quantum.hpp"
#include "bellgrid/render.hpp"
#include "bellgrid/underlying.hpp"

namespace py = pybind11;
using namespace bellgrid;

namespace {

SettingVector sv(std::vector<int> s) { return SettingVector{std::move(s)}; }

std::vector<std::uint8_t> ov(const std::vector<int>& o) {
  std::vector<std::uint8_t> out;
  for (int b : o) out.push_back(static_cast<std::uint8_t>(b));
  return out;
}

UnderlyingDist dist_from_weights(const Scenario& sc, const std::vector<double>& w) {
  std::vector<Value> v;
  for (double x : w) v.emplace_back(x);
  return UnderlyingDist(sc, std::move(v));
}

AxisChoice axes_from_list(const Scenario& sc,
                          const std::vector<std::pair<double, double>>& angles) {
  AxisChoice axes;
  axes.scenario = sc;
  for (const auto& [theta, phi] : angles) axes.axes.push_back({theta, phi});
  axes.validate();
  return axes;
}

py::dict marginals_to_dict(const MarginalSet& ms) {
  py::dict out;
  for (const auto& t : ms.tables) {
    py::dict probs;
    for (std::size_t oi = 0; oi < ms.scenario.outcome_count(); ++oi) {
      std::string key;
      for (int p = 0; p < ms.scenario.parties(); ++p)
        key += static_cast<char>('0' + ((oi >> p) & 1));
      probs[py::str(key)] = t.probs[oi].to_double();
    }
    py::tuple settings(t.settings.s.size());
    for (std::size_t i = 0; i < t.settings.s.size(); ++i) settings[i] = t.settings.s[i];
    out[settings] = probs;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_bellgrid, m) {
  m.doc() = "Marginal/underlying-probability toolkit: grid encodings, Bell-inequality "
            "certificates, Born-rule evaluation, and local-polytope membership";

  py::class_<Scenario>(m, "Scenario")
      .def(py::init<int, int>(), py::arg("parties"), py::arg("settings"))
      .def_property_readonly("parties", &Scenario::parties)
      .def_property_readonly("settings", &Scenario::settings)
      .def_property_readonly("cell_count", &Scenario::cell_count)
      .def("__eq__", [](const Scenario& a, const Scenario& b) { return a == b; })
      .def("__repr__", [](const Scenario& sc) {
        return "Scenario(parties=" + std::to_string(sc.parties()) +
               ", settings=" + std::to_string(sc.settings()) + ")";
      });

  m.def("marginal_support",
        [](const Scenario& sc, std::vector<int> s, std::vector<int> o) {
          std::vector<std::vector<int>> out;
          for (const auto& g : marginal_support_grid(sc, sv(std::move(s)), ov(o)))
            out.push_back(g.coords);
          return out;
        },
        py::arg("scenario"), py::arg("settings"), py::arg("outcomes"),
        "Grid coordinates of the cells summed for P_s(o)");

  py::class_<UnderlyingDist>(m, "UnderlyingDist")
      .def(py::init(&dist_from_weights), py::arg("scenario"), py::arg("weights"))
      .def_static("uniform", &UnderlyingDist::uniform)
      .def_static("point_mass", &UnderlyingDist::point_mass)
      .def_property_readonly("scenario", &UnderlyingDist::scenario)
      .def("weights", [](const UnderlyingDist& rho) {
        std::vector<double> out;
        for (const auto& w : rho.weights()) out.push_back(w.to_double());
        return out;
      });

  py::class_<MarginalSet>(m, "MarginalSet")
      .def_property_readonly("scenario", [](const MarginalSet& ms) { return ms.scenario; })
      .def("prob",
           [](const MarginalSet& ms, std::vector<int> s, const std::vector<int>& o) {
             return ms.table(sv(std::move(s))).prob(ov(o)).to_double();
           },
           py::arg("settings"), py::arg("outcomes"))
      .def("as_dict", &marginals_to_dict)
      .def("to_json", [](const MarginalSet& ms) { return to_json(ms).dump(); });

  m.def("marginal_set_from_json",
        [](const std::string& text) { return marginal_set_from_json(Json::parse(text)); });
  m.def("marginalize_all", &marginalize_all);

  py::class_<LinearForm>(m, "LinearForm")
      .def_property_readonly("scenario", &LinearForm::scenario)
      .def("__eq__", [](const LinearForm& a, const LinearForm& b) { return a == b; })
      .def("to_json", [](const LinearForm& f) { return to_json(f).dump(); });
  m.def("form_from_json",
        [](const std::string& text) { return form_from_json(Json::parse(text)); });

  m.def("hardy_form", &hardy_form, py::arg("a"), py::arg("b"), py::arg("A"), py::arg("B"),
        py::arg("Ap"), py::arg("Bp"));
  m.def("catalog_hardy", &catalog_hardy);
  m.def("chsh_form", [](std::vector<int> leg) { return chsh_form(sv(std::move(leg))); });
  m.def("catalog_chsh", &catalog_chsh);
  m.def("n_party_hardy", &n_party_hardy);
  m.def("zukowski_form", &zukowski_form);
  m.def("three_axes_form", &three_axes_form);

  m.def("certify", [](const LinearForm& form) {
    const Certificate cert = certify(form);
    py::dict out;
    out["proven"] = cert.proven;
    if (cert.witness_cell) out["witness_cell"] = *cert.witness_cell;
    return out;
  });
  m.def("evaluate",
        [](const LinearForm& form, const MarginalSet& ms) {
          return evaluate(form, ms).to_double();
        });
  m.def("hardy_deduce",
        [](const Scenario& sc, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& zeros,
           std::vector<int> ts, const std::vector<int>& to) {
          std::vector<MarginalTerm> z;
          for (const auto& [s, o] : zeros) {
            MarginalTerm t;
            t.settings = sv(s);
            t.outcomes = ov(o);
            t.coef = 1;
            z.push_back(std::move(t));
          }
          MarginalTerm target;
          target.settings = sv(std::move(ts));
          target.outcomes = ov(to);
          target.coef = 1;
          return hardy_deduce(sc, z, target);
        },
        py::arg("scenario"), py::arg("zeros"), py::arg("target_settings"),
        py::arg("target_outcomes"));

  py::class_<PureState>(m, "PureState")
      .def(py::init<std::vector<Amplitude>, double>(), py::arg("amplitudes"),
           py::arg("tol") = 1e-12)
      .def_static("singlet", &PureState::singlet)
      .def_static("ghz", &PureState::ghz, py::arg("qubits"), py::arg("sign") = 1)
      .def_property_readonly("amplitudes", &PureState::amplitudes);

  m.def("born_marginals",
        [](const PureState& state, const Scenario& sc,
           const std::vector<std::pair<double, double>>& angles) {
          return born_marginals(state, axes_from_list(sc, angles));
        },
        py::arg("state"), py::arg("scenario"), py::arg("axes"),
        "axes: (theta, phi) per (party, setting), party fastest");

  m.def("violation_scan",
        [](const LinearForm& form, const PureState& state, int grid_steps, bool full_sphere) {
          const ViolationReport rep = violation_scan(form, state, grid_steps, full_sphere);
          py::dict out;
          out["best_value"] = rep.best_value;
          out["violation"] = rep.violation;
          std::vector<std::pair<double, double>> axes;
          for (const auto& ax : rep.best_axes.axes) axes.emplace_back(ax.theta, ax.phi);
          out["best_axes"] = axes;
          return out;
        },
        py::arg("form"), py::arg("state"), py::arg("grid_steps") = 8,
        py::arg("full_sphere") = false);

  m.def("ghz_check", [] {
    const GhzReport rep = ghz_check();
    py::dict out;
    out["c001"] = rep.c001;
    out["c010"] = rep.c010;
    out["c100"] = rep.c100;
    out["c111"] = rep.c111;
    out["lhs"] = rep.lhs;
    out["violates_bound"] = rep.violates_bound;
    return out;
  });

  m.def("hardy_probability_scan",
        [](int grid_steps) {
          const HardyScanResult res = hardy_probability_scan(grid_steps);
          py::dict out;
          out["best_probability"] = res.best_probability;
          out["thetas"] = res.thetas;
          return out;
        },
        py::arg("grid_steps") = 12);

  m.def("membership",
        [](const MarginalSet& ms, double tol) {
          const MembershipResult res = membership(ms, tol);
          py::dict out;
          out["feasible"] = res.feasible;
          out["max_residual"] = res.max_residual;
          if (res.witness) {
            std::vector<double> w;
            for (const auto& x : res.witness->weights()) w.push_back(x.to_double());
            out["witness"] = w;
          }
          return out;
        },
        py::arg("marginals"), py::arg("tol") = 1e-8);

  m.def("check_factorization",
        [](const MarginalSet& ms, double tol) {
          const FactorizationReport rep = check_factorization(ms, tol);
          py::dict out;
          out["holds"] = rep.holds();
          out["instances_checked"] = rep.instances_checked;
          out["max_residual"] = rep.max_residual;
          return out;
        },
        py::arg("marginals"), py::arg("tol") = 1e-9);

  m.def("render_form",
        [](const LinearForm& form, const std::string& format, bool ascii) {
          return emit(diagram_of_form(form),
                      format == "svg" ? DiagramFormat::Svg : DiagramFormat::Text, ascii);
        },
        py::arg("form"), py::arg("format") = "text", py::arg("ascii") = false);

  m.def("run_acceptance", [] {
    py::list out;
    for (const auto& r : run_acceptance()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      d["elapsed_ms"] = r.elapsed_ms;
      out.append(d);
    }
    return out;
  });
}
