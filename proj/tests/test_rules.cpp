#include <doctest.h>

#include <stdexcept>

#include "ants/rules.hpp"

using namespace ants;

TEST_CASE("parse_rule_string computes binary codes, L=1 R=0") {
    CHECK(parse_rule_string("LR").code == 2);
    CHECK(parse_rule_string("LR").state_count() == 2);
    CHECK(parse_rule_string("LLRRRLR").code == 98);
    CHECK(parse_rule_string("LLRRRLR").state_count() == 7);
    CHECK(parse_rule_string("LLRR").code == 12);
    CHECK(parse_rule_string("L").code == 1);
    CHECK(parse_rule_string("L").state_count() == 1);
}

TEST_CASE("parse_rule_string rejects bad input, naming the position") {
    CHECK_THROWS_AS(parse_rule_string(""), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_rule_string("LXR"),
                         doctest::Contains("position 2"), std::invalid_argument);
}

TEST_CASE("from_code reconstructs letters from binary digits") {
    CHECK(from_code(9).letters == "LRRL");
    CHECK(from_code(12).letters == "LLRR");
    CHECK(from_code(2).letters == "LR");
    CHECK_THROWS_AS(from_code(0), std::invalid_argument);
}

TEST_CASE("round trip over all codes up to length 16") {
    for (std::uint64_t code = 1; code < (1ull << 16); ++code) {
        RuleString r = from_code(code);
        CHECK(parse_rule_string(r.letters).code == code);
    }
}

TEST_CASE("run_structure wraps the final run cyclically") {
    SUBCASE("LRRLLRRRRL is even") {
        RunStructure rs = run_structure(parse_rule_string("LRRLLRRRRL"));
        CHECK(rs.even_run_length);
    }
    SUBCASE("LR has two unit runs") {
        RunStructure rs = run_structure(parse_rule_string("LR"));
        CHECK_FALSE(rs.even_run_length);
        CHECK(rs.cyclic_runs == std::vector<std::pair<char, int>>{{'L', 1}, {'R', 1}});
    }
    SUBCASE("LRRL wraps into (L,2),(R,2)") {
        RunStructure rs = run_structure(parse_rule_string("LRRL"));
        CHECK(rs.cyclic_runs == std::vector<std::pair<char, int>>{{'L', 2}, {'R', 2}});
        CHECK(rs.even_run_length);
    }
    SUBCASE("all-L is a single cyclic run of length n") {
        CHECK(run_structure(parse_rule_string("LLLL")).cyclic_runs ==
              std::vector<std::pair<char, int>>{{'L', 4}});
        CHECK(has_even_run_length(parse_rule_string("LLLL")));
        CHECK_FALSE(has_even_run_length(parse_rule_string("LLL")));
    }
}

TEST_CASE("cyclic runs concatenate back to the letters up to rotation") {
    for (std::uint64_t code = 1; code < (1ull << 10); ++code) {
        RuleString r = from_code(code);
        RunStructure rs = run_structure(r);
        std::string flat;
        int total = 0;
        for (auto [letter, len] : rs.cyclic_runs) {
            flat.append(static_cast<std::size_t>(len), letter);
            total += len;
        }
        REQUIRE(total == r.state_count());
        const std::string doubled = r.letters + r.letters;
        CHECK(doubled.find(flat) != std::string::npos);
    }
}

TEST_CASE("hot/cold classification") {
    RuleString r = parse_rule_string("LLRR");
    CHECK(is_cold(r, 1));
    CHECK(is_hot(r, 2));
    CHECK(is_hot(r, 4));
    for (int k = 1; k <= 4; ++k) CHECK(is_cold(r, k) != is_hot(r, k));
    CHECK_THROWS_AS(is_cold(r, 0), std::out_of_range);
    CHECK_THROWS_AS(is_cold(r, 5), std::out_of_range);
    // only meaningful with the even run-length property
    CHECK_THROWS_AS(is_cold(parse_rule_string("LR"), 1), std::domain_error);

    // a run wrapping through state 1 shifts the classification: the cyclic
    // runs of LRRL are L at (4,1) and R at (2,3), so the run-starts 4 and 2
    // are the cold states
    RuleString w = parse_rule_string("LRRL");
    CHECK(is_hot(w, 1));
    CHECK(is_cold(w, 2));
    CHECK(is_hot(w, 3));
    CHECK(is_cold(w, 4));

    // LLLRRL: cyclic L-run (6,1,2,3), R-run (4,5)
    RuleString v = parse_rule_string("LLLRRL");
    for (int s : {6, 2, 4}) CHECK(is_cold(v, s));
    for (int s : {1, 3, 5}) CHECK(is_hot(v, s));

    // single cyclic run: anchored at state 1
    CHECK(is_cold(parse_rule_string("LLLL"), 1));
    CHECK(is_hot(parse_rule_string("LLLL"), 2));

    // a cold cell's next visit keeps its letter
    for (const char* txt : {"LLRR", "LRRL", "LLLRRL", "LRRLLRRRRL"}) {
        RuleString rr = parse_rule_string(txt);
        const int n = rr.state_count();
        for (int s = 1; s <= n; ++s)
            if (is_cold(rr, s)) CHECK(rr.letter(s) == rr.letter(s % n + 1));
    }
}

TEST_CASE("recurrent symmetry candidates by length") {
    // all-L strings satisfy the predicate too (their dynamics is a
    // degenerate circle tour; the sweep flags them separately)
    CHECK(recurrent_symmetry_candidates(4) == std::vector<std::uint64_t>{9, 12, 15});
    CHECK(recurrent_symmetry_candidates(6) ==
          std::vector<std::uint64_t>{33, 39, 48, 51, 57, 60, 63});
    CHECK(recurrent_symmetry_candidates(2) == std::vector<std::uint64_t>{3});
    CHECK(recurrent_symmetry_candidates(3).empty());
}

TEST_CASE("every even run-length code is divisible by three") {
    for (int n = 2; n <= 16; ++n)
        for (std::uint64_t code : recurrent_symmetry_candidates(n)) CHECK(code % 3 == 0);
}
