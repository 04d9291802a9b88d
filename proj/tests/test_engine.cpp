#include <doctest.h>

#include <stdexcept>

#include "ants/engine.hpp"

using namespace ants;

TEST_CASE("heading algebra") {
    for (Heading h : {Heading::N, Heading::E, Heading::S, Heading::W}) {
        CHECK(left_of(left_of(h)) == opposite(h));
        CHECK(right_of(right_of(h)) == opposite(h));
        CHECK(left_of(right_of(h)) == h);
        CHECK(heading_from_letter(heading_letter(h)) == h);
    }
    CHECK(left_of(Heading::W) == Heading::S);
    CHECK(right_of(Heading::W) == Heading::N);
}

TEST_CASE("fresh universe: home pose, all cells state 1") {
    for (const char* rule : {"LR", "LLRR"}) {
        Universe u(parse_rule_string(rule));
        CHECK(u.pose() == AntPose{{0, 0}, Heading::W});
        CHECK(u.time() == 0);
        CHECK(u.visited_count() == 0);
        CHECK(u.state({5, 7}) == 1);
        CHECK(u.at_home());
    }
}

TEST_CASE("ant 12 hand trace") {
    Universe u(from_code(12));
    u.step();
    // state 1 is an L-state; left of W is S
    CHECK(u.pose() == AntPose{{0, -1}, Heading::S});
    CHECK(u.state({0, 0}) == 2);

    u.run_until(4);
    CHECK(u.at_home());
    CHECK(u.time() == 4);
    for (Cell c : {Cell{0, 0}, Cell{1, 0}, Cell{0, -1}, Cell{1, -1}}) CHECK(u.state(c) == 2);
    CHECK(u.visited_count() == 4);

    BoundingBox b = u.bounding_box();
    CHECK(b.min_x == 0);
    CHECK(b.max_x == 1);
    CHECK(b.min_y == -1);
    CHECK(b.max_y == 0);
}

TEST_CASE("stepping is deterministic and composable") {
    Universe a(from_code(2)), b(from_code(2));
    a.run_until(10);
    a.run_until(10);  // identity
    a.run_until(20);
    b.run_until(20);
    CHECK(a == b);
    CHECK_THROWS_AS(a.run_until(5), std::invalid_argument);
}

TEST_CASE("state legality and parity alternation") {
    Universe u(from_code(98));  // 7-state ant
    for (int t = 0; t < 5000; ++t) {
        const bool horizontal = is_horizontal(u.pose().heading);
        CHECK(horizontal == is_h_cell(u.pose().target));
        u.step();
        CHECK(is_horizontal(u.pose().heading) != horizontal);
    }
    for (const auto& [c, s] : u.switched_cells()) {
        CHECK(s >= 2);
        CHECK(s <= 7);
        CHECK(u.visited(c));
    }
}

TEST_CASE("visited set grows by at most one cell per step") {
    Universe u(from_code(9));
    std::size_t prev = 0;
    for (int t = 0; t < 2000; ++t) {
        u.step();
        CHECK(u.visited_count() >= prev);
        CHECK(u.visited_count() <= prev + 1);
        prev = u.visited_count();
    }
}

TEST_CASE("home return times") {
    SUBCASE("ant 12 begins 4, 8, 28, 32") {
        auto times = home_return_times(from_code(12), 40);
        REQUIRE(times.size() >= 4);
        CHECK(times[0] == 4);
        CHECK(times[1] == 8);
        CHECK(times[2] == 28);
        CHECK(times[3] == 32);
    }
    SUBCASE("horizon 0 is empty") {
        CHECK(home_return_times(from_code(12), 0).empty());
    }
    SUBCASE("ant 9 returns home at 38,836") {
        auto times = home_return_times(from_code(9), 40'000);
        CHECK(std::find(times.begin(), times.end(), 38'836u) != times.end());
        // the body-text variant 36,836 is not a home return
        CHECK(std::find(times.begin(), times.end(), 36'836u) == times.end());
    }
}

TEST_CASE("bounding box probes") {
    Universe u(from_code(2));
    CHECK_THROWS_AS(u.bounding_box(), std::runtime_error);
    u.step();
    BoundingBox b = u.bounding_box();
    CHECK(b.width() == 1);
    CHECK(b.height() == 1);

    u.run_until(12'000);
    b = u.bounding_box();
    CHECK(std::max(b.width(), b.height()) > 50);
}
