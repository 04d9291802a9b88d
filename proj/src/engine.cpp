#include "ants/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace ants {

Heading left_of(Heading h) {
    switch (h) {
        case Heading::N: return Heading::W;
        case Heading::W: return Heading::S;
        case Heading::S: return Heading::E;
        case Heading::E: return Heading::N;
    }
    throw std::logic_error("bad heading");
}

Heading right_of(Heading h) {
    switch (h) {
        case Heading::N: return Heading::E;
        case Heading::E: return Heading::S;
        case Heading::S: return Heading::W;
        case Heading::W: return Heading::N;
    }
    throw std::logic_error("bad heading");
}

Heading opposite(Heading h) { return left_of(left_of(h)); }

bool is_horizontal(Heading h) { return h == Heading::E || h == Heading::W; }

char heading_letter(Heading h) {
    switch (h) {
        case Heading::N: return 'N';
        case Heading::E: return 'E';
        case Heading::S: return 'S';
        case Heading::W: return 'W';
    }
    throw std::logic_error("bad heading");
}

Heading heading_from_letter(char c) {
    switch (c) {
        case 'N': return Heading::N;
        case 'E': return Heading::E;
        case 'S': return Heading::S;
        case 'W': return Heading::W;
    }
    throw std::invalid_argument(std::string("bad heading letter '") + c + "'");
}

Cell neighbor(Cell c, Heading h) {
    switch (h) {
        case Heading::N: return {c.x, c.y + 1};
        case Heading::E: return {c.x + 1, c.y};
        case Heading::S: return {c.x, c.y - 1};
        case Heading::W: return {c.x - 1, c.y};
    }
    throw std::logic_error("bad heading");
}

Universe::Universe(RuleString rule) : rule_(std::move(rule)) {
    if (rule_.letters.empty()) throw std::invalid_argument("empty rule");
}

int Universe::state(Cell c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? 1 : it->second;
}

void Universe::step() {
    const Cell c = pose_.target;
    const int s = state(c);
    const char letter = rule_.letter(s);
    const Heading h = letter == 'L' ? left_of(pose_.heading) : right_of(pose_.heading);
    const int next = s < rule_.state_count() ? s + 1 : 1;
    if (next == 1)
        cells_.erase(c);
    else
        cells_[c] = next;
    visited_.insert(c);
    pose_ = {neighbor(c, h), h};
    ++time_;
}

void Universe::run_until(std::uint64_t t) {
    if (t < time_) throw std::invalid_argument("cannot step backwards");
    while (time_ < t) step();
}

std::uint64_t Universe::run_to_next_home_return(std::uint64_t max_steps) {
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        step();
        if (at_home()) return time_;
    }
    throw std::runtime_error("no home return within step cap");
}

BoundingBox Universe::bounding_box() const {
    if (visited_.empty()) throw std::runtime_error("empty track has no bounding box");
    BoundingBox b{INT32_MAX, INT32_MIN, INT32_MAX, INT32_MIN};
    for (const Cell& c : visited_) {
        b.min_x = std::min(b.min_x, c.x);
        b.max_x = std::max(b.max_x, c.x);
        b.min_y = std::min(b.min_y, c.y);
        b.max_y = std::max(b.max_y, c.y);
    }
    return b;
}

void Universe::set_state(Cell c, int s) {
    if (s < 1 || s > rule_.state_count()) throw std::out_of_range("state out of range");
    if (s == 1)
        cells_.erase(c);
    else {
        cells_[c] = s;
        visited_.insert(c);
    }
}

void Universe::restore(AntPose pose, std::uint64_t time) {
    pose_ = pose;
    time_ = time;
}

bool Universe::operator==(const Universe& other) const {
    return rule_ == other.rule_ && cells_ == other.cells_ && visited_ == other.visited_ &&
           pose_ == other.pose_ && time_ == other.time_;
}

std::vector<std::uint64_t> home_return_times(const RuleString& rule, std::uint64_t horizon) {
    Universe u(rule);
    std::vector<std::uint64_t> out;
    while (u.time() < horizon) {
        u.step();
        if (u.at_home()) out.push_back(u.time());
    }
    return out;
}

}  // namespace ants
