#pragma once

#include <optional>
#include <vector>

#include "hcf/shift.hpp"

namespace hcf {

// S(1+im) = S(-1+im) = im, S(m+i) = S(m-i) = m, |m| >= 2.
GaussianInt s_map(const GaussianInt& a);  // NotInDomain
bool in_s_domain(const GaussianInt& a);
// Mir1 after a digit m±i, Mir2 after ±1+im.
Symmetry tail_mirror(const GaussianInt& a);  // NotInDomain

struct RewriteState {
    size_t N = 0;
    Word b;                       // window b_N(1..H)
    std::vector<size_t> j_history;  // 1-based breakpoints
    std::vector<Symmetry> mir_history;
    std::vector<int> states;      // graph states along the regular prefix
};

RewriteState initial_state(Word window);
// Least j >= start with b(1..j) regular and b(1..j+1) not, j < min(horizon, |b|).
std::optional<size_t> find_breakpoint(const Word& b, size_t start, size_t horizon);
// Applies one step in place; false when no breakpoint remains (b_{N+1} = b_N).
bool rewrite_step(RewriteState& st);
json trace_line(const RewriteState& st);

struct RegularizeResult {
    Word digits;
    RewriteState state;
    std::vector<json> trace;
    WordClass input_class = WordClass::RegularFull;
};

RegularizeResult regularize_report(const DigitSeq& a, size_t out_len, size_t slack = 4);
Word regularize(const DigitSeq& a, size_t out_len, size_t slack = 4);

}  // namespace hcf
