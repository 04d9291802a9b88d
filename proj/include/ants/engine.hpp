#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ants/rules.hpp"

namespace ants {

enum class Heading : std::uint8_t { N, E, S, W };

Heading left_of(Heading h);
Heading right_of(Heading h);
Heading opposite(Heading h);
bool is_horizontal(Heading h);
char heading_letter(Heading h);
Heading heading_from_letter(char c);

struct Cell {
    int x = 0;
    int y = 0;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

Cell neighbor(Cell c, Heading h);

/// H-cells are entered horizontally, V-cells vertically; the classes split
/// the plane checkerboard-fashion, anchored by home (0,0) being an H-cell.
inline bool is_h_cell(Cell c) { return ((c.x + c.y) & 1) == 0; }

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t k = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                          static_cast<std::uint32_t>(c.y);
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdull;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

/// The edge the ant occupies, as (cell about to be entered, heading).
struct AntPose {
    Cell target;
    Heading heading = Heading::W;
    bool operator==(const AntPose&) const = default;
};

struct BoundingBox {
    int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
};

/// Sparse unbounded grid of cell states plus the ant's pose and clock.
/// Absent cells are in state 1. Visited cells are tracked separately:
/// a cell cycled back to state 1 is still part of the track.
class Universe {
public:
    explicit Universe(RuleString rule);

    const RuleString& rule() const { return rule_; }
    const AntPose& pose() const { return pose_; }
    std::uint64_t time() const { return time_; }

    int state(Cell c) const;
    bool visited(Cell c) const { return visited_.contains(c); }
    std::size_t visited_count() const { return visited_.size(); }
    const std::unordered_set<Cell, CellHash>& visited_cells() const { return visited_; }
    const std::unordered_map<Cell, int, CellHash>& switched_cells() const { return cells_; }

    bool at_home() const { return pose_ == AntPose{{0, 0}, Heading::W}; }

    void step();
    void run_until(std::uint64_t t);

    /// Steps until the pose equals the home pose again; returns the arrival
    /// time. Throws if no return happens within max_steps further steps.
    std::uint64_t run_to_next_home_return(std::uint64_t max_steps = 100'000'000);

    BoundingBox bounding_box() const;

    /// Directly sets a cell's state (marks it visited when != 1). Intended
    /// for building synthetic universes; the simulator itself only mutates
    /// state through step().
    void set_state(Cell c, int s);
    void mark_visited(Cell c) { visited_.insert(c); }

    /// Restores an exact pose/clock, for snapshot loading.
    void restore(AntPose pose, std::uint64_t time);

    bool operator==(const Universe& other) const;

private:
    RuleString rule_;
    std::unordered_map<Cell, int, CellHash> cells_;  // states != 1 only
    std::unordered_set<Cell, CellHash> visited_;
    AntPose pose_{{0, 0}, Heading::W};
    std::uint64_t time_ = 0;
};

/// Ascending times t <= horizon at which a fresh run of the rule is back at
/// the home pose.
std::vector<std::uint64_t> home_return_times(const RuleString& rule, std::uint64_t horizon);

}  // namespace ants
