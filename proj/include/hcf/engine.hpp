#pragma once

#include <utility>
#include <vector>

#include "hcf/ball.hpp"
#include "hcf/shift.hpp"

namespace hcf {

struct ConvergentPair {
    GaussianInt p, q;
    size_t n = 0;
};

// Pairs for n = 0..|w| with p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1.
std::vector<ConvergentPair> convergents(const Word& w);
QuadComplex evaluate_finite(const Word& w);
// |q|^2 >= phi^(n-1), i.e. |q| >= psi^(n-1), decided exactly.
bool q_lower_bound_holds(const GaussianInt& q, size_t n);
// phi^k = (L_k + F_k sqrt 5)/2
QuadScalar golden_power(size_t k);

std::pair<GaussianInt, QuadComplex> gauss_map(const QuadComplex& z);  // ZeroInput

struct Expansion {
    GaussianInt a0;
    Word digits;
    bool terminated = false;
    mpfr_prec_t precision = 0;  // ball mode only
};

Expansion expand(const QuadComplex& z, size_t n_digits);
// Single pass at the ball's precision; Undecidable near a tie line.
Expansion expand_ball(const ComplexBall& z, size_t n_digits);
// Exact value, evaluated with balls starting at prec and doubling up to the cap.
Expansion expand_certified(const QuadComplex& z, size_t n_digits, mpfr_prec_t prec = 128);
mpfr_prec_t precision_cap();  // HCF_PRECISION_CAP, default 8192

// Prefix length m with 2/psi^(m-1) <= r.
size_t lambda_prefix_length(const mpq_class& r);
ComplexBall lambda_bar(const DigitSeq& seq, const mpq_class& target_radius);

struct MirrorSides {
    QuadComplex lhs, rhs;
};
MirrorSides mirror(const Word& w);  // ZeroDenominator

}  // namespace hcf
