#include "ants/behavior.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "ants/engine.hpp"
#include "ants/symmetry.hpp"

namespace ants {

HighwayReport detect_highway(const RuleString& rule, std::uint64_t horizon, int window,
                             std::uint64_t period_cap) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (window < 1) throw std::invalid_argument("window must be >= 1");

    const int side = 2 * window + 1;
    const std::size_t snap_len = static_cast<std::size_t>(side) * side;

    Universe u(rule);
    std::vector<AntPose> poses;
    std::vector<std::uint8_t> snaps;  // per-step window snapshot, ant-centered
    poses.reserve(horizon + 1);
    snaps.reserve((horizon + 1) * snap_len);

    auto capture = [&] {
        poses.push_back(u.pose());
        const Cell c = u.pose().target;
        for (int dy = -window; dy <= window; ++dy)
            for (int dx = -window; dx <= window; ++dx)
                snaps.push_back(static_cast<std::uint8_t>(u.state({c.x + dx, c.y + dy})));
    };

    capture();
    for (std::uint64_t t = 0; t < horizon; ++t) {
        u.step();
        capture();
    }

    auto window_equal = [&](std::uint64_t t1, std::uint64_t t2) {
        return std::memcmp(&snaps[t1 * snap_len], &snaps[t2 * snap_len], snap_len) == 0;
    };

    for (std::uint64_t t = 0; t + 3 <= horizon; ++t) {
        for (std::uint64_t p = 1; p <= period_cap && t + 3 * p <= horizon; ++p) {
            const AntPose& p0 = poses[t];
            const int dx = poses[t + p].target.x - p0.target.x;
            const int dy = poses[t + p].target.y - p0.target.y;
            if (dx == 0 && dy == 0) continue;
            bool ok = true;
            for (int k = 1; k <= 3 && ok; ++k) {
                const AntPose& pk = poses[t + k * p];
                ok = pk.heading == p0.heading && pk.target.x - p0.target.x == k * dx &&
                     pk.target.y - p0.target.y == k * dy;
            }
            if (!ok) continue;
            if (window_equal(t, t + p) && window_equal(t, t + 2 * p) && window_equal(t, t + 3 * p))
                return {true, t, p, dx, dy};
        }
    }
    return {};
}

std::vector<ProbeResult> unboundedness_probe(const RuleString& rule, const std::vector<int>& radii,
                                             std::uint64_t horizon) {
    if (!std::is_sorted(radii.begin(), radii.end()))
        throw std::invalid_argument("radii must be ascending");
    std::vector<ProbeResult> out;
    for (int r : radii) out.push_back({r, std::nullopt});

    Universe u(rule);
    std::size_t next = 0;
    int reach = -1;  // Chebyshev reach of the track so far
    while (next < out.size() && u.time() < horizon) {
        const Cell c = u.pose().target;  // cell entered by this step
        u.step();
        reach = std::max(reach, std::max(std::abs(c.x), std::abs(c.y)));
        while (next < out.size() && reach >= out[next].radius) {
            out[next].escape_time = u.time();
            ++next;
        }
    }
    return out;
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Highway: return "highway";
        case Classification::RecurrentSymmetry: return "recurrentSymmetry";
        case Classification::Undetermined: return "undetermined";
    }
    throw std::logic_error("bad classification");
}

std::vector<SweepRow> sweep(int n, const SweepOptions& opts) {
    if (n < 2 || n > 12) throw std::invalid_argument("sweep length must be in 2..12");
    std::vector<SweepRow> out;
    for (std::uint64_t code = 1ull << (n - 1); code < (1ull << n); ++code) {
        RuleString rule = from_code(code);
        SweepRow row;
        row.code = code;
        row.letters = rule.letters;
        row.even_run_length = has_even_run_length(rule);

        if (rule.letters.find('R') == std::string::npos) {
            row.cls = Classification::Undetermined;
            row.evidence = "degenerate: never turns right";
            out.push_back(std::move(row));
            continue;
        }

        Universe u(rule);
        int sym_returns = 0, late_sym_returns = 0;
        while (u.time() < opts.horizon) {
            u.step();
            if (u.at_home() && !detect_symmetries(u).found.empty()) {
                ++sym_returns;
                if (u.time() > opts.horizon / 2) ++late_sym_returns;
            }
        }

        if (late_sym_returns >= opts.k) {
            row.cls = Classification::RecurrentSymmetry;
            row.evidence = "symmetric-returns=" + std::to_string(sym_returns) +
                           " late-symmetric-returns=" + std::to_string(late_sym_returns);
        } else {
            HighwayReport hw = detect_highway(rule, opts.horizon, opts.highway_window, opts.period_cap);
            if (hw.detected) {
                row.cls = Classification::Highway;
                row.evidence = "onset=" + std::to_string(hw.onset_time) +
                               " period=" + std::to_string(hw.period) + " displacement=" +
                               std::to_string(hw.dx) + "," + std::to_string(hw.dy);
            } else {
                row.cls = Classification::Undetermined;
                row.evidence = "symmetric-returns=" + std::to_string(sym_returns);
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace ants
