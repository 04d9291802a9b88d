#include "ants/rules.hpp"

#include <stdexcept>

namespace ants {

char RuleString::letter(int state) const {
    if (state < 1 || state > state_count())
        throw std::out_of_range("state " + std::to_string(state) +
                                " out of range 1.." + std::to_string(state_count()));
    return letters[static_cast<std::size_t>(state - 1)];
}

RuleString parse_rule_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rule-string");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("illegal character '" + std::string(1, c) +
                                        "' at position " + std::to_string(i + 1) +
                                        " in rule-string");
        code = (code << 1) | (c == 'L' ? 1u : 0u);
    }
    if (text.size() > 63) throw std::invalid_argument("rule-string longer than 63 letters");
    return RuleString{text, code};
}

RuleString from_code(std::uint64_t code) {
    if (code == 0) throw std::invalid_argument("ant code must be positive");
    std::string letters;
    for (int bit = 63; bit >= 0; --bit) {
        if (!letters.empty() || (code >> bit) & 1)
            letters.push_back(((code >> bit) & 1) ? 'L' : 'R');
    }
    return RuleString{letters, code};
}

RunStructure run_structure(const RuleString& rule) {
    const std::string& s = rule.letters;
    RunStructure rs;
    for (char c : s) {
        if (!rs.cyclic_runs.empty() && rs.cyclic_runs.back().first == c)
            ++rs.cyclic_runs.back().second;
        else
            rs.cyclic_runs.emplace_back(c, 1);
    }
    // Wrap the final run into the first when the letters match.
    if (rs.cyclic_runs.size() > 1 && rs.cyclic_runs.front().first == rs.cyclic_runs.back().first) {
        rs.cyclic_runs.front().second += rs.cyclic_runs.back().second;
        rs.cyclic_runs.pop_back();
    }
    rs.even_run_length = true;
    for (auto [letter, len] : rs.cyclic_runs)
        if (len % 2 != 0) rs.even_run_length = false;
    return rs;
}

bool has_even_run_length(const RuleString& rule) {
    return run_structure(rule).even_run_length;
}

bool is_cold(const RuleString& rule, int state) {
    if (!has_even_run_length(rule))
        throw std::domain_error("hot/cold is only defined for even run-length rules");
    if (state < 1 || state > rule.state_count())
        throw std::out_of_range("state " + std::to_string(state) + " out of range");
    // Cold states sit at odd (1-indexed) positions within their cyclic
    // letter-run, so a cold cell keeps its letter on the next visit. When
    // the run containing state 1 wraps around, this differs from plain
    // state parity.
    const int n = rule.state_count();
    std::vector<int> starts;  // states whose letter differs from their cyclic predecessor
    for (int s = 1; s <= n; ++s)
        if (rule.letter(s) != rule.letter(s == 1 ? n : s - 1)) starts.push_back(s);
    if (starts.empty()) return state % 2 == 1;  // single cyclic run: anchor at state 1
    int run_start = starts.back() - n;
    for (int s : starts)
        if (s <= state) run_start = s;
    return (state - run_start) % 2 == 0;
}

bool is_hot(const RuleString& rule, int state) { return !is_cold(rule, state); }

std::vector<std::uint64_t> recurrent_symmetry_candidates(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::vector<std::uint64_t> out;
    const std::uint64_t lo = 1ull << (n - 1), hi = (1ull << n) - 1;
    for (std::uint64_t code = lo; code <= hi; ++code)
        if (has_even_run_length(from_code(code))) out.push_back(code);
    return out;
}

}  // namespace ants
