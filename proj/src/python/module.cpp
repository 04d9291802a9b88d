#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ants/behavior.hpp"
#include "ants/engine.hpp"
#include "ants/render.hpp"
#include "ants/rules.hpp"
#include "ants/snapshot.hpp"
#include "ants/symmetry.hpp"
#include "ants/truchet.hpp"

namespace py = pybind11;
using namespace ants;

PYBIND11_MODULE(_antlab, m) {
    m.doc() = "n-state ant simulator: rules, engine, Truchet contours, "
              "symmetry detection, behavior classification and renderers";

    py::class_<RuleString>(m, "RuleString")
        .def_readonly("letters", &RuleString::letters)
        .def_readonly("code", &RuleString::code)
        .def_property_readonly("n", &RuleString::state_count)
        .def("letter", &RuleString::letter, py::arg("state"))
        .def("__repr__",
             [](const RuleString& r) {
                 return "RuleString('" + r.letters + "', code=" + std::to_string(r.code) + ")";
             });

    m.def("parse_rule_string", &parse_rule_string, py::arg("text"));
    m.def("from_code", &from_code, py::arg("code"));
    m.def("has_even_run_length", &has_even_run_length);
    m.def("is_cold", &is_cold, py::arg("rule"), py::arg("state"));
    m.def("is_hot", &is_hot, py::arg("rule"), py::arg("state"));
    m.def("recurrent_symmetry_candidates", &recurrent_symmetry_candidates, py::arg("n"));
    m.def("run_structure", [](const RuleString& r) {
        RunStructure rs = run_structure(r);
        std::vector<std::pair<std::string, int>> runs;
        for (auto [letter, len] : rs.cyclic_runs) runs.emplace_back(std::string(1, letter), len);
        return py::make_tuple(runs, rs.even_run_length);
    });

    py::class_<Universe>(m, "Universe")
        .def(py::init([](const std::string& rule) { return Universe(parse_rule_string(rule)); }),
             py::arg("rule"))
        .def_property_readonly("rule", &Universe::rule)
        .def_property_readonly("time", &Universe::time)
        .def_property_readonly("pose",
                               [](const Universe& u) {
                                   return py::make_tuple(
                                       u.pose().target.x, u.pose().target.y,
                                       std::string(1, heading_letter(u.pose().heading)));
                               })
        .def_property_readonly("visited_count", &Universe::visited_count)
        .def("state", [](const Universe& u, int x, int y) { return u.state({x, y}); })
        .def("visited", [](const Universe& u, int x, int y) { return u.visited({x, y}); })
        .def("set_state", [](Universe& u, int x, int y, int s) { u.set_state({x, y}, s); })
        .def("at_home", &Universe::at_home)
        .def("step", &Universe::step)
        .def("run_until", &Universe::run_until, py::arg("t"))
        .def("run_to_next_home_return", &Universe::run_to_next_home_return,
             py::arg("max_steps") = 100'000'000)
        .def("bounding_box",
             [](const Universe& u) {
                 BoundingBox b = u.bounding_box();
                 return py::make_tuple(b.min_x, b.max_x, b.min_y, b.max_y);
             })
        .def("copy", [](const Universe& u) { return Universe(u); });

    m.def("home_return_times", &home_return_times, py::arg("rule"), py::arg("horizon"));

    m.def("save_snapshot", &snapshot_to_string, py::arg("universe"));
    m.def("load_snapshot", &snapshot_from_string, py::arg("text"));

    auto arcs_out = [](const Contour& c) {
        std::vector<py::tuple> arcs;
        for (const Arc& a : c.arcs)
            arcs.push_back(py::make_tuple(a.cell.x, a.cell.y,
                                          std::string(1, heading_letter(a.entry_edge)),
                                          std::string(1, heading_letter(a.exit_edge))));
        return arcs;
    };

    m.def("principal_contour",
          [arcs_out](const Universe& u) { return arcs_out(principal_contour(u)); });
    m.def("trace_contour", [arcs_out](const Universe& u, int x, int y, const std::string& h) {
        return arcs_out(trace_contour(u, {{x, y}, heading_from_letter(h.at(0))}));
    });
    m.def("twice_visited_cells", [](const Universe& u) {
        std::vector<std::pair<int, int>> out;
        for (const Cell& c : twice_visited_cells(principal_contour(u))) out.emplace_back(c.x, c.y);
        return out;
    });

    m.def("diagonals_graph", [](const Universe& u) {
        DiagonalsGraph g = diagonals_graph(u);
        std::vector<py::tuple> edges;
        for (const auto& [a, b] : g.edges) edges.push_back(py::make_tuple(a.x, a.y, b.x, b.y));
        return py::make_tuple(edges, even_degree_holds(g), g.component_count());
    });

    m.def("verify_lemma1", [](const Universe& u) { return verify_lemma1(u); });
    m.def("verify_lemma2", [](const Universe& u) { return verify_lemma2(u); });

    m.def("detect_symmetries", [](const Universe& u, bool diagonal_axes) {
        std::vector<py::tuple> found;
        for (const Isometry& iso : detect_symmetries(u, diagonal_axes).found)
            found.push_back(
                py::make_tuple(isometry_kind_name(iso.kind), iso.ax2 / 2.0, iso.ay2 / 2.0));
        return found;
    }, py::arg("universe"), py::arg("diagonal_axes") = false);

    m.def("symmetry_scan", [](const RuleString& rule, std::uint64_t horizon, bool on_return) {
        std::vector<std::pair<std::uint64_t, std::vector<std::string>>> out;
        auto mode = on_return ? SampleMode::OnHomeReturn : SampleMode::EveryStep;
        for (const auto& rep : symmetry_scan(rule, horizon, mode)) {
            std::vector<std::string> kinds;
            for (const auto& iso : rep.found) kinds.push_back(isometry_kind_name(iso.kind));
            out.emplace_back(rep.time, std::move(kinds));
        }
        return out;
    }, py::arg("rule"), py::arg("horizon"), py::arg("on_return") = false);

    py::class_<HighwayReport>(m, "HighwayReport")
        .def_readonly("detected", &HighwayReport::detected)
        .def_readonly("onset_time", &HighwayReport::onset_time)
        .def_readonly("period", &HighwayReport::period)
        .def_property_readonly(
            "displacement", [](const HighwayReport& r) { return py::make_tuple(r.dx, r.dy); });

    m.def("detect_highway", &detect_highway, py::arg("rule"), py::arg("horizon"),
          py::arg("window") = 5, py::arg("period_cap") = 1000);

    m.def("unboundedness_probe",
          [](const RuleString& rule, const std::vector<int>& radii, std::uint64_t horizon) {
              std::vector<std::pair<int, std::optional<std::uint64_t>>> out;
              for (const auto& r : unboundedness_probe(rule, radii, horizon))
                  out.emplace_back(r.radius, r.escape_time);
              return out;
          });

    m.def("sweep", [](int n, std::uint64_t horizon, int k) {
        SweepOptions opts;
        opts.horizon = horizon;
        opts.k = k;
        std::vector<py::tuple> out;
        for (const auto& row : sweep(n, opts))
            out.push_back(py::make_tuple(row.code, row.letters, row.even_run_length,
                                         classification_name(row.cls), row.evidence));
        return out;
    }, py::arg("n"), py::arg("horizon") = 50'000, py::arg("k") = 5);

    m.def("render_states_ppm",
          [](const Universe& u, int scale) {
              return render_states_ppm(u, default_palette(u.rule().state_count()), scale);
          },
          py::arg("universe"), py::arg("scale") = 1);

    m.def("render_truchet_svg",
          [](const Universe& u, bool diagonals, bool highlight_principal) {
              TruchetOptions opts;
              opts.diagonals = diagonals;
              opts.highlight_principal = highlight_principal;
              return render_truchet_svg(u, opts);
          },
          py::arg("universe"), py::arg("diagonals") = false,
          py::arg("highlight_principal") = false);
}
