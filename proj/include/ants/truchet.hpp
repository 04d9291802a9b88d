#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ants/engine.hpp"

namespace ants {

/// A lattice corner (cell corners live on the integer lattice).
struct Corner {
    int x = 0;
    int y = 0;
    bool operator==(const Corner&) const = default;
    auto operator<=>(const Corner&) const = default;
};

/// A cell's Truchet decoration: which checkerboard class it is in and which
/// turn letter currently governs it.
struct TileOrientation {
    bool h_cell = true;
    char letter = 'L';
};

/// The two quarter-circle arcs of a tile (as unordered side pairs) and the
/// diagonal, given as corner offsets relative to the cell's SW corner.
struct TileGeometry {
    std::pair<Heading, Heading> arcs[2];
    std::pair<Corner, Corner> diagonal;  // offsets in {0,1}^2
};

TileGeometry tile_geometry(TileOrientation o);

TileOrientation orientation_of(const Universe& u, Cell c);

/// Absolute endpoints of the tile's diagonal.
std::pair<Corner, Corner> diagonal_of(Cell c, TileOrientation o);

/// One quarter-circle transit of a cell, entering and leaving through two
/// adjacent edge midpoints.
struct Arc {
    Cell cell;
    Heading entry_edge;
    Heading exit_edge;
    bool operator==(const Arc&) const = default;
};

/// A closed directed sequence of arcs; each arc's exit edge coincides with
/// the next arc's entry edge (cyclically).
struct Contour {
    std::vector<Arc> arcs;

    std::size_t size() const { return arcs.size(); }
    /// Pose about to transit arcs[i].
    AntPose pose_at(std::size_t i) const;
    bool operator==(const Contour&) const = default;
};

/// Follows the Truchet arcs from `start` without modifying any state until
/// the start pose recurs. Throws if the contour does not close within
/// `step_cap` arcs.
Contour trace_contour(const Universe& u, AntPose start, std::uint64_t step_cap = 10'000'000);

/// The contour through the ant's home edge; requires the ant to be at home.
Contour principal_contour(const Universe& u, std::uint64_t step_cap = 10'000'000);

/// Cells transited twice by the contour.
std::vector<Cell> twice_visited_cells(const Contour& c);

/// Graph on lattice corners whose edges are the diagonals of hot tiles.
/// Built over a finite cell region (the track's bounding box plus margin):
/// when state 1 is hot the unvisited background carries diagonals too, so
/// the full graph is infinite and only a window of it can be materialized.
struct DiagonalsGraph {
    /// Normalized (smaller corner first), sorted edge list.
    std::vector<std::pair<Corner, Corner>> edges;
    std::map<Corner, int> degree;
    /// Inclusive cell region the edges were collected from.
    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;

    bool has_edge(Corner a, Corner b) const;
    /// All four cells meeting at the corner lie inside the region, so its
    /// degree is not truncated by the window.
    bool interior(Corner v) const;
    /// Components of the edge-induced subgraph (isolated corners excluded).
    int component_count() const;
    bool same_component(Corner a, Corner b) const;
};

/// Requires an even run-length rule (hot/cold must be meaningful).
DiagonalsGraph diagonals_graph(const Universe& u);

/// Every interior corner has even degree; rim corners are skipped because
/// the window clips their neighborhoods.
bool even_degree_holds(const DiagonalsGraph& g);

/// Handshake check: the number of odd-degree vertices is even.
bool handshake_holds(const DiagonalsGraph& g);

struct SplitResult {
    Contour a;
    Contour b;
    /// The original contour's arcs re-partition into exactly contours a, b.
    bool exactly_two = false;
    /// After deleting the flipped tile's diagonal, its endpoints lie in
    /// disjoint components of the diagonals graph.
    bool disjoint_components = false;
};

/// Re-traces contour `c` with hot cell `t`'s orientation flipped and reports
/// the two resulting contours plus the component split of t's diagonal
/// endpoints. `t` must be transited twice by `c` and must be hot.
SplitResult split_check(const Universe& u, const Contour& c, Cell t,
                        std::uint64_t step_cap = 10'000'000);

/// With the ant at home and the even diagonal-degree property holding,
/// simulates until the next home return and checks that the ant's path is
/// arc-for-arc the principal contour.
bool verify_lemma1(const Universe& u, std::uint64_t step_cap = 10'000'000);

/// With the same preconditions, runs one full tour and checks that the even
/// diagonal-degree property still holds at return.
bool verify_lemma2(const Universe& u, std::uint64_t step_cap = 10'000'000);

}  // namespace ants
