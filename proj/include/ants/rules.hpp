#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ants {

/// An ant's genome: a cyclic string of L/R turn letters. Letter k (1-based)
/// governs the turn taken in a cell of state k. The code is the binary
/// reading of the letters with L=1, R=0, most significant bit first.
struct RuleString {
    std::string letters;
    std::uint64_t code = 0;

    int state_count() const { return static_cast<int>(letters.size()); }

    /// Turn letter for a cell state in 1..n.
    char letter(int state) const;

    bool operator==(const RuleString&) const = default;
};

/// Maximal runs of equal letters in cyclic order, starting with the run
/// containing letter 1 (the final run wraps into the first when the letters
/// match).
struct RunStructure {
    std::vector<std::pair<char, int>> cyclic_runs;
    bool even_run_length = false;
};

RuleString parse_rule_string(const std::string& text);
RuleString from_code(std::uint64_t code);

RunStructure run_structure(const RuleString& rule);

/// True iff every maximal cyclic run of the rule has even length.
bool has_even_run_length(const RuleString& rule);

/// Hot/cold classification is only meaningful for even run-length rules:
/// a cold cell cannot change orientation on its next visit. Cold states
/// are those at odd (1-indexed) positions within their cyclic letter-run;
/// when the string starts at a run boundary this is exactly odd-state.
bool is_cold(const RuleString& rule, int state);
bool is_hot(const RuleString& rule, int state);

/// All codes in [2^(n-1), 2^n - 1] whose rule-strings have the even
/// run-length property, ascending.
std::vector<std::uint64_t> recurrent_symmetry_candidates(int n);

}  // namespace ants
