#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ants/rules.hpp"

namespace ants {

struct HighwayReport {
    bool detected = false;
    std::uint64_t onset_time = 0;
    std::uint64_t period = 0;
    int dx = 0;  // displacement per period
    int dy = 0;
};

/// Finds the least (onset, period) such that the pose advances by a fixed
/// nonzero displacement each period and the state pattern within `window`
/// of the ant repeats translated, verified over 3 consecutive periods.
/// Pure circling (zero displacement) is rejected.
HighwayReport detect_highway(const RuleString& rule, std::uint64_t horizon, int window = 5,
                             std::uint64_t period_cap = 1000);

struct ProbeResult {
    int radius = 0;
    std::optional<std::uint64_t> escape_time;  // empty = not yet at horizon
};

/// For each radius r (ascending), the first time some visited cell has
/// Chebyshev norm >= r.
std::vector<ProbeResult> unboundedness_probe(const RuleString& rule, const std::vector<int>& radii,
                                             std::uint64_t horizon);

enum class Classification { Highway, RecurrentSymmetry, Undetermined };

const char* classification_name(Classification c);

struct SweepRow {
    std::uint64_t code = 0;
    std::string letters;
    bool even_run_length = false;
    Classification cls = Classification::Undetermined;
    std::string evidence;
};

struct SweepOptions {
    std::uint64_t horizon = 50'000;
    /// Symmetric home returns needed in the late half of the horizon for a
    /// recurrentSymmetry classification. Early returns with tiny tracks are
    /// symmetric for almost every ant, so only recurrence that persists past
    /// horizon/2 counts.
    int k = 5;
    int highway_window = 5;
    std::uint64_t period_cap = 1000;
};

/// Classifies every ant code in [2^(n-1), 2^n - 1], ascending.
std::vector<SweepRow> sweep(int n, const SweepOptions& opts = {});

}  // namespace ants
