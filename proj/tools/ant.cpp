#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ants/behavior.hpp"
#include "ants/engine.hpp"
#include "ants/render.hpp"
#include "ants/rules.hpp"
#include "ants/snapshot.hpp"
#include "ants/symmetry.hpp"
#include "ants/truchet.hpp"

// Exit codes: 0 success, 1 runtime failure (bad snapshot, i/o), 2 usage
// error, 3 verification failure.
namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct RuleFlags {
    std::string rule;
    std::uint64_t code = 0;
};

void add_rule_flags(CLI::App* cmd, RuleFlags& rf) {
    auto* r = cmd->add_option("--rule", rf.rule, "rule-string letters, e.g. LLRR");
    auto* c = cmd->add_option("--code", rf.code, "ant code (decimal)");
    r->excludes(c);
    c->excludes(r);
}

ants::RuleString resolve_rule(const RuleFlags& rf) {
    if (!rf.rule.empty()) return ants::parse_rule_string(rf.rule);
    if (rf.code > 0) return ants::from_code(rf.code);
    throw CLI::ValidationError("one of --rule or --code is required");
}

double half(int doubled) { return doubled / 2.0; }

void print_contour(const ants::Contour& c) {
    for (const ants::Arc& a : c.arcs)
        std::cout << a.cell.x << " " << a.cell.y << " " << ants::heading_letter(a.entry_edge)
                  << " " << ants::heading_letter(a.exit_edge) << "\n";
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-state ant simulator and invariant verifier"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate an ant");
    RuleFlags run_rule;
    add_rule_flags(run, run_rule);
    std::uint64_t run_steps = 0;
    std::string run_snapshot;
    run->add_option("--steps", run_steps, "number of steps")->required();
    run->add_option("--snapshot", run_snapshot, "write an ANTSNAP snapshot here");

    // symmetry
    auto* symmetry = app.add_subcommand("symmetry", "list symmetric times");
    RuleFlags sym_rule;
    add_rule_flags(symmetry, sym_rule);
    std::uint64_t sym_horizon = 0;
    bool sym_on_return = false, sym_diagonal_axes = false;
    symmetry->add_option("--horizon", sym_horizon, "steps to scan")->required();
    symmetry->add_flag("--on-return", sym_on_return, "sample only at home returns");
    symmetry->add_flag("--diagonal-axes", sym_diagonal_axes, "also test diagonal mirror axes");

    // contours
    auto* contours = app.add_subcommand("contours", "dump Truchet contours of a snapshot");
    std::string con_snapshot;
    bool con_principal = false;
    contours->add_option("--snapshot", con_snapshot, "ANTSNAP file")->required();
    contours->add_flag("--principal", con_principal, "only the principal contour");

    // verify
    auto* verify = app.add_subcommand("verify", "check contour-tour invariants over K tours");
    RuleFlags ver_rule;
    add_rule_flags(verify, ver_rule);
    int ver_returns = 0;
    verify->add_option("--returns", ver_returns, "number of home-return tours")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "classify every rule-string of a length");
    int sw_length = 0;
    ants::SweepOptions sw_opts;
    sweep_cmd->add_option("--length", sw_length, "rule-string length (2..12)")->required();
    sweep_cmd->add_option("--horizon", sw_opts.horizon, "steps per ant");
    sweep_cmd->add_option("--k", sw_opts.k, "late symmetric returns for recurrentSymmetry");

    // render
    auto* render = app.add_subcommand("render", "render a snapshot");
    std::string ren_snapshot, ren_style, ren_out;
    bool ren_principal = false;
    int ren_scale = 1;
    render->add_option("--snapshot", ren_snapshot, "ANTSNAP file")->required();
    render->add_option("--style", ren_style, "states | truchet | diagonals")
        ->required()
        ->check(CLI::IsMember({"states", "truchet", "diagonals"}));
    render->add_option("--out", ren_out, "output path (.ppm or .svg)")->required();
    render->add_option("--scale", ren_scale, "pixel block size for states");
    render->add_flag("--principal", ren_principal, "highlight the principal contour");

    // probe
    auto* probe = app.add_subcommand("probe", "unboundedness probe");
    RuleFlags probe_rule;
    add_rule_flags(probe, probe_rule);
    std::vector<int> probe_radii;
    std::uint64_t probe_horizon = 0;
    probe->add_option("--radii", probe_radii, "ascending radii")->required()->delimiter(',');
    probe->add_option("--horizon", probe_horizon, "step budget")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run) {
            ants::Universe u(resolve_rule(run_rule));
            u.run_until(run_steps);
            std::cout << "# ant run steps=" << run_steps << "\n";
            std::cout << "rule " << u.rule().letters << " code " << u.rule().code << "\n";
            std::cout << "time " << u.time() << " target " << u.pose().target.x << " "
                      << u.pose().target.y << " heading " << ants::heading_letter(u.pose().heading)
                      << " visited " << u.visited_count() << "\n";
            if (!run_snapshot.empty()) ants::save_snapshot_file(u, run_snapshot);
        } else if (*symmetry) {
            auto rule = resolve_rule(sym_rule);
            auto mode = sym_on_return ? ants::SampleMode::OnHomeReturn : ants::SampleMode::EveryStep;
            std::cout << "# ant symmetry rule=" << rule.letters << " horizon=" << sym_horizon
                      << " on-return=" << (sym_on_return ? 1 : 0)
                      << " diagonal-axes=" << (sym_diagonal_axes ? 1 : 0) << "\n";
            for (const auto& rep : ants::symmetry_scan(rule, sym_horizon, mode, sym_diagonal_axes))
                for (const auto& iso : rep.found)
                    std::cout << rep.time << " " << ants::isometry_kind_name(iso.kind) << " "
                              << half(iso.ax2) << " " << half(iso.ay2) << "\n";
        } else if (*contours) {
            ants::Universe u = ants::load_snapshot_file(con_snapshot);
            if (con_principal) {
                print_contour(ants::principal_contour(u));
            } else {
                // every contour touching the track's neighborhood, outermost first
                std::set<std::pair<std::pair<int, int>, char>> seen;
                int min_x = -2, max_x = 1, min_y = -2, max_y = 1;
                if (u.visited_count() > 0) {
                    auto b = u.bounding_box();
                    min_x = b.min_x - 1;
                    max_x = b.max_x + 1;
                    min_y = b.min_y - 1;
                    max_y = b.max_y + 1;
                }
                int k = 0;
                for (int y = min_y; y <= max_y; ++y)
                    for (int x = min_x; x <= max_x; ++x) {
                        const ants::Cell c{x, y};
                        const ants::Heading h0 =
                            ants::is_h_cell(c) ? ants::Heading::E : ants::Heading::N;
                        for (ants::Heading h : {h0, ants::opposite(h0)}) {
                            if (seen.contains({{x, y}, ants::heading_letter(h)})) continue;
                            ants::Contour con = ants::trace_contour(u, {c, h});
                            for (std::size_t i = 0; i < con.size(); ++i) {
                                auto p = con.pose_at(i);
                                seen.insert({{p.target.x, p.target.y},
                                             ants::heading_letter(p.heading)});
                            }
                            std::cout << "# contour " << k++ << " arcs " << con.size() << "\n";
                            print_contour(con);
                        }
                    }
            }
        } else if (*verify) {
            auto rule = resolve_rule(ver_rule);
            std::cout << "# ant verify rule=" << rule.letters << " returns=" << ver_returns << "\n";
            ants::Universe u(rule);
            bool all_ok = true;
            for (int tour = 1; tour <= ver_returns; ++tour) {
                const ants::Contour pc = ants::principal_contour(u);
                bool cold_ok = true;
                for (const ants::Cell& c : ants::twice_visited_cells(pc))
                    if (!ants::is_cold(u.rule(), u.state(c))) cold_ok = false;
                const bool even_ok = ants::even_degree_holds(ants::diagonals_graph(u));
                const bool l1 = even_ok && ants::verify_lemma1(u);
                const bool l2 = even_ok && ants::verify_lemma2(u);
                std::cout << "tour " << tour << " start " << u.time()
                          << " evenDegree " << (even_ok ? "ok" : "FAIL")
                          << " property1 " << (cold_ok ? "ok" : "FAIL")
                          << " lemma1 " << (l1 ? "ok" : "FAIL")
                          << " lemma2 " << (l2 ? "ok" : "FAIL") << "\n";
                all_ok = all_ok && cold_ok && even_ok && l1 && l2;
                u.run_to_next_home_return();
            }
            if (!all_ok) return kExitVerifyFailed;
        } else if (*sweep_cmd) {
            std::cout << "# ant sweep length=" << sw_length << " horizon=" << sw_opts.horizon
                      << " k=" << sw_opts.k << "\n";
            for (const auto& row : ants::sweep(sw_length, sw_opts))
                std::cout << row.code << " " << row.letters << " "
                          << (row.even_run_length ? "even" : "uneven") << " "
                          << ants::classification_name(row.cls) << " " << row.evidence << "\n";
        } else if (*render) {
            if (ren_principal && ren_style == "states")
                throw std::runtime_error("--principal only applies to truchet/diagonals styles");
            ants::Universe u = ants::load_snapshot_file(ren_snapshot);
            if (ren_style == "states") {
                spit(ren_out, ants::render_states_ppm(
                                  u, ants::default_palette(u.rule().state_count()), ren_scale));
            } else {
                ants::TruchetOptions opts;
                opts.diagonals = ren_style == "diagonals";
                opts.highlight_principal = ren_principal;
                spit(ren_out, ants::render_truchet_svg(u, opts));
            }
        } else if (*probe) {
            auto rule = resolve_rule(probe_rule);
            std::cout << "# ant probe rule=" << rule.letters << " horizon=" << probe_horizon
                      << "\n";
            for (const auto& r : ants::unboundedness_probe(rule, probe_radii, probe_horizon)) {
                std::cout << r.radius << " ";
                if (r.escape_time)
                    std::cout << *r.escape_time << "\n";
                else
                    std::cout << "not-yet\n";
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
