#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hcf/shift.hpp"

namespace hcf {

// r(n, a): least m such that the window of length n+2 at m already occurred
// at some i <= m - n. window = 0 selects n + 2.
std::optional<size_t> repetition(const Word& a, size_t n, size_t window = 0);

struct RepetitionProfile {
    std::vector<std::pair<size_t, size_t>> r_values;  // (n, r(n, a)) where witnessed
    std::optional<mpq_class> min_ratio, last_ratio;  // r(n, a)/n over computed n
    std::string caveat;
};
RepetitionProfile repetition_profile(const Word& a, size_t max_n, size_t window = 0);
json to_json(const RepetitionProfile& p);

struct WUV {
    Word W, U, V;
    mpq_class ratio() const;  // (|W| + |V|)/|U|
    Word prefix() const;      // W U V U
};
json to_json(const WUV& d);

// Every prefix of a of the form W U V U with |U| >= 1, sorted by (|W|, |U|, |V|).
std::vector<WUV> find_wuv(const Word& a);
// Odd |U| = |Û x|: U := Û, V := x V. nullopt when Û would be empty.
std::optional<WUV> even_u(const WUV& d);

Word shuffle(const Word& a, const Word& b);  // LengthMismatch
// (-1)^k 2 for k = first, ..., first + len - 1
Word alternating_twos(size_t first, size_t len);

// Least (preperiod, period) with at least two full periods visible, if any.
std::optional<std::pair<size_t, size_t>> detect_period(const Word& a);

struct GrowthRow {
    size_t w = 0, u = 0, v = 0;
    double lhs_log = 0, rhs_log = 0;  // log of psi^(2u) and of |q_{2w} q_{2w+2u+2v}|^eps
    bool holds = false;
};
// psi^(2u) >= |q_{2w} q_{2w+2u+2v}|^eps with q the convergent denominators of a.
std::vector<GrowthRow> check_growth_inequality(const DigitSeq& a, const std::vector<std::array<size_t, 3>>& wuv,
                                               const mpq_class& eps);

}  // namespace hcf
