#include <doctest.h>

#include <stdexcept>

#include "ants/behavior.hpp"
#include "ants/engine.hpp"

using namespace ants;

TEST_CASE("ant 2 builds its highway after about 10,000 steps") {
    HighwayReport r = detect_highway(from_code(2), 15'000);
    REQUIRE(r.detected);
    CHECK(r.onset_time == 10'119);
    CHECK(r.period == 104);
    CHECK(r.dx == 2);
    CHECK(r.dy == 2);
}

TEST_CASE("re-running from the onset reproduces the displacement for 10 more periods") {
    HighwayReport r = detect_highway(from_code(2), 15'000);
    REQUIRE(r.detected);
    Universe u(from_code(2));
    u.run_until(r.onset_time);
    const AntPose base = u.pose();
    for (int k = 1; k <= 10; ++k) {
        u.run_until(r.onset_time + k * r.period);
        CHECK(u.pose().heading == base.heading);
        CHECK(u.pose().target.x - base.target.x == k * r.dx);
        CHECK(u.pose().target.y - base.target.y == k * r.dy);
    }
}

TEST_CASE("pure circling is not a highway") {
    CHECK_FALSE(detect_highway(parse_rule_string("L"), 1000).detected);
    CHECK_FALSE(detect_highway(parse_rule_string("LL"), 1000).detected);
}

TEST_CASE("ant 12 shows no highway within 50,000 steps") {
    CHECK_FALSE(detect_highway(from_code(12), 50'000).detected);
}

TEST_CASE("unboundedness probe") {
    SUBCASE("radius 0 escapes on the first step") {
        auto res = unboundedness_probe(from_code(2), {0}, 10);
        REQUIRE(res.size() == 1);
        CHECK(res[0].escape_time == 1);
    }
    SUBCASE("ant 2 escapes radius 5 well before 1,000") {
        auto res = unboundedness_probe(from_code(2), {5}, 1'000);
        REQUIRE(res[0].escape_time.has_value());
        CHECK(*res[0].escape_time < 1'000);
    }
    SUBCASE("ant 9 spreads slowly but does escape radius 50") {
        auto res = unboundedness_probe(from_code(9), {50}, 200'000);
        REQUIRE(res[0].escape_time.has_value());
        CHECK(*res[0].escape_time == 146'392);
    }
    SUBCASE("escape times ascend with radius and unreachable radii stay open") {
        auto res = unboundedness_probe(from_code(2), {0, 2, 4, 1'000'000}, 2'000);
        CHECK(res[0].escape_time < res[1].escape_time);
        CHECK(res[1].escape_time < res[2].escape_time);
        CHECK_FALSE(res[3].escape_time.has_value());
    }
    SUBCASE("radii must ascend") {
        CHECK_THROWS_AS(unboundedness_probe(from_code(2), {5, 1}, 10), std::invalid_argument);
    }
}

TEST_CASE("sweep of the 2-state ants") {
    auto rows = sweep(2, {.horizon = 20'000});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].code == 2);
    CHECK(rows[0].cls == Classification::Highway);
    CHECK_FALSE(rows[0].even_run_length);
    CHECK(rows[1].code == 3);
    CHECK(rows[1].cls == Classification::Undetermined);
    CHECK(rows[1].evidence == "degenerate: never turns right");
    CHECK(rows[1].even_run_length);
}

TEST_CASE("sweep is deterministic") {
    auto a = sweep(3, {.horizon = 5'000});
    auto b = sweep(3, {.horizon = 5'000});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].code == b[i].code);
        CHECK(a[i].cls == b[i].cls);
        CHECK(a[i].evidence == b[i].evidence);
    }
}
