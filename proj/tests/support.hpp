#pragma once

#include <random>
#include <vector>

#include "hcf/engine.hpp"
#include "hcf/shift.hpp"

namespace hcft {

using namespace hcf;

inline GaussianInt G(long re, long im = 0) { return GaussianInt(re, im); }

inline QuadScalar Q(long p, long q = 1) { return QuadScalar(mpq_class(p, q)); }

// alpha = (2 - sqrt 3)/2
inline QuadScalar alpha() { return QuadScalar(mpq_class(1), mpq_class(-1, 2), 3); }
inline QuadComplex zeta1() { return {Q(-1, 2), alpha()}; }
inline QuadComplex zeta2() { return {Q(-1, 2), -alpha()}; }
inline QuadComplex zeta3() { return {-alpha(), Q(-1, 2)}; }
inline QuadComplex zeta4() { return {alpha(), Q(-1, 2)}; }

inline QuadComplex rat(long a, long b, long c, long d) { return {Q(a, b), Q(c, d)}; }

inline GaussianInt random_digit(std::mt19937_64& rng, long r) {
    std::uniform_int_distribution<long> u(-r, r);
    for (;;) {
        GaussianInt g(u(rng), u(rng));
        if (is_digit(g)) return g;
    }
}

inline Word random_word(std::mt19937_64& rng, size_t len, long r) {
    Word w;
    for (size_t k = 0; k < len; ++k) w.push_back(random_digit(rng, r));
    return w;
}

// Extends digit by digit, keeping only regular prefixes.
inline Word random_regular_word(std::mt19937_64& rng, size_t len, long r) {
    Word w;
    int state = kSQ;
    while (w.size() < len) {
        GaussianInt b = random_digit(rng, r);
        int nx = SoficGraph::instance().next(state, b);
        if (nx == kNoEdge) continue;
        w.push_back(b);
        state = nx;
    }
    return w;
}

// Independent finite continued fraction [0; w] evaluated from the back.
inline QuadComplex backward_value(const Word& w) {
    QuadComplex x;
    for (size_t k = w.size(); k-- > 0;) x = (QuadComplex(w[k]) + x).inverse();
    return x;
}

}  // namespace hcft
