#include "hcf/engine.hpp"

#include <cstdlib>

namespace hcf {

std::vector<ConvergentPair> convergents(const Word& w) {
    std::vector<ConvergentPair> out;
    GaussianInt p2(0), p1(1), q2(1), q1(0);
    out.push_back({GaussianInt(0), GaussianInt(1), 0});
    p2 = p1;
    q2 = q1;
    p1 = GaussianInt(0);
    q1 = GaussianInt(1);
    for (size_t n = 1; n <= w.size(); ++n) {
        GaussianInt p = w[n - 1] * p1 + p2, q = w[n - 1] * q1 + q2;
        out.push_back({p, q, n});
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = q;
    }
    return out;
}

QuadComplex evaluate_finite(const Word& w) {
    const auto cv = convergents(w);
    const auto& last = cv.back();
    if (last.q.is_zero()) fail(ErrorKind::ZeroDenominator, "q_n = 0 for " + word_str(w));
    return QuadComplex(last.p) / QuadComplex(last.q);
}

QuadScalar golden_power(size_t k) {
    mpz_class L, F;
    mpz_lucnum_ui(L.get_mpz_t(), k);
    mpz_fib_ui(F.get_mpz_t(), k);
    return QuadScalar(mpq_class(L, 2), mpq_class(F, 2), 5);
}

bool q_lower_bound_holds(const GaussianInt& q, size_t n) {
    if (n == 0) return true;  // psi^-1 < 1 = |q_0|
    return QuadScalar(q.norm()) >= golden_power(n - 1);
}

std::pair<GaussianInt, QuadComplex> gauss_map(const QuadComplex& z) {
    if (z.is_zero()) fail(ErrorKind::ZeroInput, "T(0) is undefined");
    if (!in_fundamental_domain(z)) fail(ErrorKind::PreconditionViolated, z.str() + " is not in F");
    QuadComplex inv = z.inverse();
    GaussianInt a = nearest_gaussian(inv);
    return {a, inv - QuadComplex(a)};
}

Expansion expand(const QuadComplex& z, size_t n_digits) {
    Expansion e;
    e.a0 = nearest_gaussian(z);
    QuadComplex x = z - QuadComplex(e.a0);
    while (e.digits.size() < n_digits) {
        if (x.is_zero()) {
            e.terminated = true;
            break;
        }
        auto [a, next] = gauss_map(x);
        e.digits.push_back(a);
        x = next;
    }
    if (x.is_zero()) e.terminated = true;
    return e;
}

Expansion expand_ball(const ComplexBall& z, size_t n_digits) {
    Expansion e;
    e.precision = z.prec();
    e.a0 = nearest_gaussian(z);
    ComplexBall x = z.sub_gaussian(e.a0);
    while (e.digits.size() < n_digits) {
        ComplexBall inv = x.inverse();
        GaussianInt a = nearest_gaussian(inv);
        if (!is_digit(a)) fail(ErrorKind::Undecidable, "ball digit " + a.str() + " outside the alphabet");
        e.digits.push_back(a);
        x = inv.sub_gaussian(a);
    }
    return e;
}

mpfr_prec_t precision_cap() {
    const char* env = std::getenv("HCF_PRECISION_CAP");
    if (env) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 64) return v;
    }
    return 8192;
}

Expansion expand_certified(const QuadComplex& z, size_t n_digits, mpfr_prec_t prec) {
    mpfr_prec_t cap = precision_cap();
    for (mpfr_prec_t p = prec;; p *= 2) {
        try {
            // exact finite expansions end in 0, which no ball can certify; cut them short
            Expansion ex = expand(z, n_digits);
            Expansion e = expand_ball(ComplexBall::from_quad(z, p), ex.digits.size());
            e.terminated = ex.terminated;
            return e;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::Undecidable || p * 2 > cap) throw;
        }
    }
}

size_t lambda_prefix_length(const mpq_class& r) {
    if (r <= 0) fail(ErrorKind::Usage, "radius must be positive");
    // 2/psi^(m-1) <= r  <=>  phi^(m-1) >= 4/r^2
    QuadScalar bound(mpq_class(4 / (r * r)));
    size_t m = 1;
    while (golden_power(m - 1) < bound) ++m;
    return m;
}

ComplexBall lambda_bar(const DigitSeq& seq, const mpq_class& target_radius) {
    size_t m = lambda_prefix_length(target_radius);
    for (;; ++m) {
        Word w = seq.prefix(m);
        check_digits(w);
        Walk wk = walk(w);
        if (wk.regular_len < m)
            fail(ErrorKind::NotInClosedShift, "prefix of length " + std::to_string(wk.regular_len + 1) + " is not regular");
        const auto cv = convergents(w);
        const auto& c = cv.back();
        QuadComplex v = QuadComplex(c.p) / QuadComplex(c.q);
        mpfr_prec_t prec = 64 + 4 * static_cast<mpfr_prec_t>(m);
        ComplexBall b = ComplexBall::from_quad(v, prec);
        Real t(64);
        mpfr_set_z(t.get(), c.q.norm().get_mpz_t(), MPFR_RNDD);
        mpfr_ui_div(t.get(), 1, t.get(), MPFR_RNDU);
        mpfr_add(b.rad_mut().get(), b.rad().get(), t.get(), MPFR_RNDU);
        Real tr(64);
        mpfr_set_q(tr.get(), target_radius.get_mpq_t(), MPFR_RNDD);
        if (mpfr_cmp(b.rad().get(), tr.get()) <= 0) return b;
    }
}

MirrorSides mirror(const Word& w) {
    if (w.empty()) fail(ErrorKind::PreconditionViolated, "empty word");
    auto cv = convergents(w);
    const auto& qn = cv.back().q;
    const auto& qm = cv[cv.size() - 2].q;
    if (qn.is_zero()) fail(ErrorKind::ZeroDenominator, "q_n = 0");
    MirrorSides s;
    s.lhs = QuadComplex(qm) / QuadComplex(qn);
    QuadComplex x(w.front());
    for (size_t k = 1; k < w.size(); ++k) {
        if (x.is_zero()) fail(ErrorKind::ZeroDenominator, "reversed evaluation hits 0");
        x = QuadComplex(w[k]) + x.inverse();
    }
    if (x.is_zero()) fail(ErrorKind::ZeroDenominator, "reversed evaluation hits 0");
    s.rhs = x.inverse();
    return s;
}

}  // namespace hcf
