#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ants/engine.hpp"

namespace ants {

enum class IsometryKind {
    PointReflection,
    MirrorVertical,    // vertical axis, reflects x
    MirrorHorizontal,  // horizontal axis, reflects y
    MirrorDiagonal,     // axis y = x + c
    MirrorAntidiagonal  // axis y = -x + c
};

const char* isometry_kind_name(IsometryKind k);

/// A self-inverse lattice isometry. Anchors are stored in doubled
/// coordinates so half-integer centers and axis offsets stay exact:
/// for point reflections (ax2/2, ay2/2) is the center; for axis mirrors
/// ax2/2 (or ay2/2) is the axis offset; for diagonal mirrors ax2/2 is the
/// intercept c of the axis line.
struct Isometry {
    IsometryKind kind;
    int ax2 = 0;
    int ay2 = 0;
    bool operator==(const Isometry&) const = default;
};

Cell apply_isometry(const Isometry& iso, Cell c);

/// True iff the isometry maps the visited set onto itself preserving cell
/// states. Requires a nonempty track.
bool check_isometry(const Universe& u, const Isometry& iso);

struct SymmetryReport {
    std::uint64_t time = 0;
    std::vector<Isometry> found;
};

/// Any global symmetry must fix the bounding box, so the candidate anchors
/// are forced: point reflection about the box center and the two box
/// midline mirrors. Diagonal axes (square boxes only) are off by default.
std::vector<Isometry> candidate_isometries(const Universe& u, bool include_diagonals = false);

SymmetryReport detect_symmetries(const Universe& u, bool include_diagonals = false);

enum class SampleMode { EveryStep, OnHomeReturn };

/// Runs a fresh universe of the rule to `horizon` and reports every sampled
/// time with at least one symmetry.
std::vector<SymmetryReport> symmetry_scan(const RuleString& rule, std::uint64_t horizon,
                                          SampleMode mode, bool include_diagonals = false);

}  // namespace ants
