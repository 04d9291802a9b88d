#include "ants/render.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ants/truchet.hpp"

namespace ants {

Palette default_palette(int n) {
    if (n < 1) throw std::invalid_argument("need at least one state");
    Palette p;
    for (int k = 1; k <= n; ++k)
        p.grey[k] = n == 1 ? 255 : (255 * (n - k) + (n - 1) / 2) / (n - 1);
    return p;
}

namespace {

void validate_palette(const Palette& p, int n) {
    std::set<int> seen;
    for (int k = 1; k <= n; ++k) {
        auto it = p.grey.find(k);
        if (it == p.grey.end()) throw std::invalid_argument("palette misses a state");
        if (it->second < 0 || it->second > 255) throw std::invalid_argument("grey out of range");
        if (!seen.insert(it->second).second) throw std::invalid_argument("palette not injective");
    }
}

}  // namespace

std::string render_states_ppm(const Universe& u, const Palette& palette, int scale) {
    if (scale < 1) throw std::invalid_argument("scale must be >= 1");
    validate_palette(palette, u.rule().state_count());
    const BoundingBox b = u.bounding_box();  // throws on empty track

    std::ostringstream out;
    out << "P3\n" << b.width() * scale << " " << b.height() * scale << "\n255\n";
    for (int y = b.max_y; y >= b.min_y; --y) {
        std::ostringstream row;
        for (int x = b.min_x; x <= b.max_x; ++x) {
            std::string px;
            if (u.visited({x, y})) {
                const int g = palette.grey.at(u.state({x, y}));
                px = std::to_string(g) + " " + std::to_string(g) + " " + std::to_string(g);
            } else {
                px = "210 225 255";  // background, never an exact grey
            }
            for (int i = 0; i < scale; ++i) row << px << "\n";
        }
        for (int i = 0; i < scale; ++i) out << row.str();
    }
    return out.str();
}

namespace {

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

std::string render_truchet_svg(const Universe& u, const TruchetOptions& opts) {
    if (opts.diagonals && !has_even_run_length(u.rule()))
        throw std::domain_error("diagonals need an even run-length rule");
    if (opts.highlight_principal && !u.at_home())
        throw std::runtime_error("cannot highlight the principal contour: ant is not at home");

    int min_x = -4, max_x = 3, min_y = -4, max_y = 3;  // default patch for an empty track
    if (u.visited_count() > 0) {
        const BoundingBox b = u.bounding_box();
        min_x = b.min_x - opts.margin;
        max_x = b.max_x + opts.margin;
        min_y = b.min_y - opts.margin;
        max_y = b.max_y + opts.margin;
    }
    const int w = max_x - min_x + 1, h = max_y - min_y + 1;

    // Model -> viewBox coordinates (y flipped to point down).
    auto X = [&](double mx) { return mx - min_x; };
    auto Y = [&](double my) { return (max_y + 1) - my; };

    auto side_midpoint = [](Cell c, Heading s) -> Pt {
        switch (s) {
            case Heading::N: return {c.x + 0.5, c.y + 1.0};
            case Heading::E: return {c.x + 1.0, c.y + 0.5};
            case Heading::S: return {c.x + 0.5, static_cast<double>(c.y)};
            case Heading::W: return {static_cast<double>(c.x), c.y + 0.5};
        }
        throw std::logic_error("bad side");
    };
    auto shared_corner = [](Cell c, Heading a, Heading b) -> Pt {
        const bool n = a == Heading::N || b == Heading::N;
        const bool e = a == Heading::E || b == Heading::E;
        return {c.x + (e ? 1.0 : 0.0), c.y + (n ? 1.0 : 0.0)};
    };

    // Quarter-circle path between two side midpoints, bulging around the
    // shared corner. The sweep flag is chosen so the implied arc center is
    // that corner (endpoint parameterization with large-arc = 0).
    auto arc_path = [&](Cell c, Heading a, Heading b) {
        const Pt s0 = side_midpoint(c, a), e0 = side_midpoint(c, b);
        const Pt corner = shared_corner(c, a, b);
        const Pt s{X(s0.x), Y(s0.y)}, e{X(e0.x), Y(e0.y)}, cc{X(corner.x), Y(corner.y)};
        const double mx = (s.x + e.x) / 2, my = (s.y + e.y) / 2;
        const double d1x = (s.x - e.x) / 2, d1y = (s.y - e.y) / 2;
        const double dot = (cc.x - mx) * d1y + (cc.y - my) * -d1x;
        const int sweep = dot > 0 ? 1 : 0;
        return "M" + fmt(s.x) + "," + fmt(s.y) + " A0.5,0.5 0 0," + std::to_string(sweep) + " " +
               fmt(e.x) + "," + fmt(e.y);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"0.08\">\n";
    for (int y = min_y; y <= max_y; ++y)
        for (int x = min_x; x <= max_x; ++x) {
            const Cell c{x, y};
            const TileGeometry g = tile_geometry(orientation_of(u, c));
            for (const auto& [a, b] : g.arcs)
                out << "<path d=\"" << arc_path(c, a, b) << "\"/>\n";
        }
    out << "</g>\n";

    if (opts.diagonals) {
        out << "<g stroke=\"#777777\" stroke-width=\"0.05\">\n";
        for (int y = min_y; y <= max_y; ++y)
            for (int x = min_x; x <= max_x; ++x) {
                const Cell c{x, y};
                if (is_cold(u.rule(), u.state(c))) continue;
                auto [p, q] = diagonal_of(c, orientation_of(u, c));
                out << "<line x1=\"" << fmt(X(p.x)) << "\" y1=\"" << fmt(Y(p.y)) << "\" x2=\""
                    << fmt(X(q.x)) << "\" y2=\"" << fmt(Y(q.y)) << "\"/>\n";
            }
        out << "</g>\n";
    }

    if (opts.highlight_principal) {
        out << "<g fill=\"none\" stroke=\"red\" stroke-width=\"0.12\">\n";
        for (const Arc& a : principal_contour(u).arcs)
            out << "<path d=\"" << arc_path(a.cell, a.entry_edge, a.exit_edge) << "\"/>\n";
        out << "</g>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace ants
