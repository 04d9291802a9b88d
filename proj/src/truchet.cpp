#include "ants/truchet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace ants {

namespace {

struct PoseHash {
    std::size_t operator()(const AntPose& p) const {
        return CellHash{}(p.target) * 4 + static_cast<std::size_t>(p.heading);
    }
};

void check_pose_parity(const AntPose& p) {
    if (is_horizontal(p.heading) != is_h_cell(p.target))
        throw std::invalid_argument("pose heading does not match target cell parity");
}

/// One arc transit under the static tile map, optionally with one cell's
/// orientation flipped.
AntPose transit(const Universe& u, const AntPose& pose, const std::optional<Cell>& flip,
                Arc* arc_out) {
    const Cell c = pose.target;
    char letter = u.rule().letter(u.state(c));
    if (flip && *flip == c) letter = letter == 'L' ? 'R' : 'L';
    const Heading out = letter == 'L' ? left_of(pose.heading) : right_of(pose.heading);
    if (arc_out) *arc_out = Arc{c, opposite(pose.heading), out};
    return AntPose{neighbor(c, out), out};
}

Contour trace_impl(const Universe& u, AntPose start, std::uint64_t step_cap,
                   const std::optional<Cell>& flip) {
    check_pose_parity(start);
    Contour contour;
    AntPose pose = start;
    do {
        Arc arc;
        pose = transit(u, pose, flip, &arc);
        contour.arcs.push_back(arc);
        if (contour.arcs.size() > step_cap)
            throw std::runtime_error("contour did not close within step cap");
    } while (!(pose == start));
    return contour;
}

}  // namespace

TileGeometry tile_geometry(TileOrientation o) {
    using H = Heading;
    TileGeometry g;
    if (o.h_cell && o.letter == 'L') {
        g.arcs[0] = {H::W, H::N};
        g.arcs[1] = {H::E, H::S};
        g.diagonal = {{1, 1}, {0, 0}};  // NE-SW
    } else if (o.h_cell && o.letter == 'R') {
        g.arcs[0] = {H::W, H::S};
        g.arcs[1] = {H::E, H::N};
        g.diagonal = {{0, 1}, {1, 0}};  // NW-SE
    } else if (!o.h_cell && o.letter == 'L') {
        g.arcs[0] = {H::S, H::W};
        g.arcs[1] = {H::N, H::E};
        g.diagonal = {{0, 1}, {1, 0}};  // NW-SE
    } else if (!o.h_cell && o.letter == 'R') {
        g.arcs[0] = {H::S, H::E};
        g.arcs[1] = {H::N, H::W};
        g.diagonal = {{1, 1}, {0, 0}};  // NE-SW
    } else {
        throw std::invalid_argument("tile letter must be L or R");
    }
    return g;
}

TileOrientation orientation_of(const Universe& u, Cell c) {
    return {is_h_cell(c), u.rule().letter(u.state(c))};
}

std::pair<Corner, Corner> diagonal_of(Cell c, TileOrientation o) {
    auto [a, b] = tile_geometry(o).diagonal;
    Corner p{c.x + a.x, c.y + a.y};
    Corner q{c.x + b.x, c.y + b.y};
    return p < q ? std::pair{p, q} : std::pair{q, p};
}

AntPose Contour::pose_at(std::size_t i) const {
    const Arc& a = arcs.at(i);
    return {a.cell, opposite(a.entry_edge)};
}

Contour trace_contour(const Universe& u, AntPose start, std::uint64_t step_cap) {
    return trace_impl(u, start, step_cap, std::nullopt);
}

Contour principal_contour(const Universe& u, std::uint64_t step_cap) {
    if (!u.at_home()) throw std::runtime_error("ant is not at home");
    return trace_impl(u, u.pose(), step_cap, std::nullopt);
}

std::vector<Cell> twice_visited_cells(const Contour& c) {
    std::map<std::pair<int, int>, int> count;
    for (const Arc& a : c.arcs) ++count[{a.cell.x, a.cell.y}];
    std::vector<Cell> out;
    for (auto [cell, k] : count)
        if (k >= 2) out.push_back({cell.first, cell.second});
    return out;
}

bool DiagonalsGraph::has_edge(Corner a, Corner b) const {
    auto e = a < b ? std::pair{a, b} : std::pair{b, a};
    return std::binary_search(edges.begin(), edges.end(), e);
}

namespace {

/// Union-find over the graph's corners.
struct Components {
    std::map<Corner, Corner> parent;

    Corner find(Corner a) {
        auto it = parent.find(a);
        if (it == parent.end()) {
            parent[a] = a;
            return a;
        }
        if (it->second == a) return a;
        Corner root = find(it->second);
        parent[a] = root;
        return root;
    }

    void unite(Corner a, Corner b) { parent[find(a)] = find(b); }
};

Components components_of(const DiagonalsGraph& g) {
    Components c;
    for (const auto& [a, b] : g.edges) c.unite(a, b);
    return c;
}

}  // namespace

int DiagonalsGraph::component_count() const {
    Components c = components_of(*this);
    std::set<Corner> roots;
    for (const auto& [v, _] : c.parent) roots.insert(c.find(v));
    return static_cast<int>(roots.size());
}

bool DiagonalsGraph::same_component(Corner a, Corner b) const {
    Components c = components_of(*this);
    return c.find(a) == c.find(b);
}

bool DiagonalsGraph::interior(Corner v) const {
    return v.x > min_x && v.x <= max_x && v.y > min_y && v.y <= max_y;
}

DiagonalsGraph diagonals_graph(const Universe& u) {
    if (!has_even_run_length(u.rule()))
        throw std::domain_error("diagonals graph needs an even run-length rule");
    DiagonalsGraph g;
    g.min_x = g.min_y = -3;
    g.max_x = g.max_y = 2;
    if (u.visited_count() > 0) {
        const BoundingBox b = u.bounding_box();
        g.min_x = b.min_x - 2;
        g.max_x = b.max_x + 2;
        g.min_y = b.min_y - 2;
        g.max_y = b.max_y + 2;
    }
    for (int y = g.min_y; y <= g.max_y; ++y)
        for (int x = g.min_x; x <= g.max_x; ++x) {
            const Cell c{x, y};
            if (is_cold(u.rule(), u.state(c))) continue;
            g.edges.push_back(diagonal_of(c, orientation_of(u, c)));
        }
    std::sort(g.edges.begin(), g.edges.end());
    for (const auto& [a, b] : g.edges) {
        ++g.degree[a];
        ++g.degree[b];
    }
    return g;
}

bool even_degree_holds(const DiagonalsGraph& g) {
    for (const auto& [v, d] : g.degree)
        if (d % 2 != 0 && g.interior(v)) return false;
    return true;
}

bool handshake_holds(const DiagonalsGraph& g) {
    int odd = 0;
    for (const auto& [v, d] : g.degree)
        if (d % 2 != 0) ++odd;
    return odd % 2 == 0;
}

SplitResult split_check(const Universe& u, const Contour& c, Cell t, std::uint64_t step_cap) {
    int transits = 0;
    for (const Arc& a : c.arcs)
        if (a.cell == t) ++transits;
    if (transits != 2)
        throw std::invalid_argument("cell is not twice-visited by the contour");
    if (is_cold(u.rule(), u.state(t)))
        throw std::invalid_argument("cell is cold, it has no diagonal");

    SplitResult r;
    r.a = trace_impl(u, c.pose_at(0), step_cap, t);

    std::unordered_set<AntPose, PoseHash> in_a;
    for (std::size_t i = 0; i < r.a.arcs.size(); ++i) in_a.insert(r.a.pose_at(i));

    std::optional<AntPose> b_start;
    for (std::size_t i = 0; i < c.arcs.size(); ++i)
        if (!in_a.contains(c.pose_at(i))) {
            b_start = c.pose_at(i);
            break;
        }
    if (b_start) {
        r.b = trace_impl(u, *b_start, step_cap, t);
        std::unordered_set<AntPose, PoseHash> in_b;
        for (std::size_t i = 0; i < r.b.arcs.size(); ++i) in_b.insert(r.b.pose_at(i));
        // The original arc poses must partition into a and b.
        r.exactly_two = r.a.size() + r.b.size() == c.size();
        for (std::size_t i = 0; r.exactly_two && i < c.arcs.size(); ++i) {
            AntPose p = c.pose_at(i);
            if (in_a.contains(p) == in_b.contains(p)) r.exactly_two = false;
        }
    }

    DiagonalsGraph g = diagonals_graph(u);
    auto d = diagonal_of(t, orientation_of(u, t));
    g.edges.erase(std::remove(g.edges.begin(), g.edges.end(), d), g.edges.end());
    r.disjoint_components = !g.same_component(d.first, d.second);
    return r;
}

namespace {

void check_lemma_preconditions(const Universe& u) {
    if (!u.at_home()) throw std::runtime_error("ant is not at home");
    if (!even_degree_holds(diagonals_graph(u)))
        throw std::runtime_error("even diagonal-degree property does not hold");
}

}  // namespace

bool verify_lemma1(const Universe& u, std::uint64_t step_cap) {
    check_lemma_preconditions(u);
    const Contour expected = principal_contour(u, step_cap);
    Universe walk = u;
    std::vector<Arc> actual;
    for (std::uint64_t i = 0; i < step_cap; ++i) {
        const AntPose before = walk.pose();
        walk.step();
        actual.push_back(Arc{before.target, opposite(before.heading), walk.pose().heading});
        if (walk.at_home()) return actual == expected.arcs;
        if (actual.size() > expected.size()) return false;  // already off the contour
    }
    throw std::runtime_error("no home return within step cap");
}

bool verify_lemma2(const Universe& u, std::uint64_t step_cap) {
    check_lemma_preconditions(u);
    Universe walk = u;
    walk.run_to_next_home_return(step_cap);
    return even_degree_holds(diagonals_graph(walk));
}

}  // namespace ants
