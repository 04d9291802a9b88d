#include "ants/symmetry.hpp"

#include <stdexcept>

namespace ants {

const char* isometry_kind_name(IsometryKind k) {
    switch (k) {
        case IsometryKind::PointReflection: return "pointReflection";
        case IsometryKind::MirrorVertical: return "mirrorVertical";
        case IsometryKind::MirrorHorizontal: return "mirrorHorizontal";
        case IsometryKind::MirrorDiagonal: return "mirrorDiagonal";
        case IsometryKind::MirrorAntidiagonal: return "mirrorAntidiagonal";
    }
    throw std::logic_error("bad isometry kind");
}

Cell apply_isometry(const Isometry& iso, Cell c) {
    switch (iso.kind) {
        case IsometryKind::PointReflection:
            return {iso.ax2 - c.x - 1, iso.ay2 - c.y - 1};
        case IsometryKind::MirrorVertical:
            return {iso.ax2 - c.x - 1, c.y};
        case IsometryKind::MirrorHorizontal:
            return {c.x, iso.ay2 - c.y - 1};
        case IsometryKind::MirrorDiagonal: {
            const int cc = iso.ax2 / 2;  // axis y = x + c, c integral
            return {c.y - cc, c.x + cc};
        }
        case IsometryKind::MirrorAntidiagonal: {
            const int cc = iso.ax2 / 2;  // axis y = -x + c
            return {cc - c.y - 1, cc - c.x - 1};
        }
    }
    throw std::logic_error("bad isometry kind");
}

bool check_isometry(const Universe& u, const Isometry& iso) {
    if (u.visited_count() == 0) throw std::runtime_error("empty track");
    for (const Cell& c : u.visited_cells()) {
        const Cell m = apply_isometry(iso, c);
        if (!u.visited(m) || u.state(m) != u.state(c)) return false;
    }
    return true;
}

std::vector<Isometry> candidate_isometries(const Universe& u, bool include_diagonals) {
    const BoundingBox b = u.bounding_box();
    const int sx = b.min_x + b.max_x + 1;  // doubled midline coordinates
    const int sy = b.min_y + b.max_y + 1;
    std::vector<Isometry> out{
        {IsometryKind::PointReflection, sx, sy},
        {IsometryKind::MirrorVertical, sx, sy},
        {IsometryKind::MirrorHorizontal, sx, sy},
    };
    if (include_diagonals && b.width() == b.height()) {
        out.push_back({IsometryKind::MirrorDiagonal, 2 * (b.min_y - b.min_x), 0});
        out.push_back({IsometryKind::MirrorAntidiagonal, 2 * (b.min_x + b.max_y + 1), 0});
    }
    return out;
}

SymmetryReport detect_symmetries(const Universe& u, bool include_diagonals) {
    SymmetryReport r{u.time(), {}};
    for (const Isometry& iso : candidate_isometries(u, include_diagonals))
        if (check_isometry(u, iso)) r.found.push_back(iso);
    return r;
}

std::vector<SymmetryReport> symmetry_scan(const RuleString& rule, std::uint64_t horizon,
                                          SampleMode mode, bool include_diagonals) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    Universe u(rule);
    std::vector<SymmetryReport> out;
    while (u.time() < horizon) {
        u.step();
        if (mode == SampleMode::OnHomeReturn && !u.at_home()) continue;
        SymmetryReport r = detect_symmetries(u, include_diagonals);
        if (!r.found.empty()) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ants
