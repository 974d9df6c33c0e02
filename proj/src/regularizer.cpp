#include "hcf/regularizer.hpp"

namespace hcf {

namespace {

// m with a = 1+im or -1+im (kind 2), or a = m+i or m-i (kind 1); 0 if outside.
int s_kind(const GaussianInt& a, mpz_class& m) {
    if ((a.re == 1 || a.re == -1) && abs(a.im) >= 2) {
        m = a.im;
        return 2;
    }
    if ((a.im == 1 || a.im == -1) && abs(a.re) >= 2) {
        m = a.re;
        return 1;
    }
    return 0;
}

void extend_states(RewriteState& st) {
    const auto& g = SoficGraph::instance();
    if (st.states.empty()) st.states.push_back(kSQ);
    while (st.states.size() <= st.b.size()) {
        int s = g.next(st.states.back(), st.b[st.states.size() - 1]);
        if (s == kNoEdge) break;
        st.states.push_back(s);
    }
}

}  // namespace

bool in_s_domain(const GaussianInt& a) {
    mpz_class m;
    return s_kind(a, m) != 0;
}

GaussianInt s_map(const GaussianInt& a) {
    mpz_class m;
    switch (s_kind(a, m)) {
        case 2: return GaussianInt(mpz_class(0), m);
        case 1: return GaussianInt(m, mpz_class(0));
        default: fail(ErrorKind::NotInDomain, "S is undefined at " + a.str());
    }
}

Symmetry tail_mirror(const GaussianInt& a) {
    mpz_class m;
    switch (s_kind(a, m)) {
        case 2: return Symmetry::mir2();
        case 1: return Symmetry::mir1();
        default: fail(ErrorKind::NotInDomain, "S is undefined at " + a.str());
    }
}

RewriteState initial_state(Word window) {
    RewriteState st;
    st.b = std::move(window);
    extend_states(st);
    return st;
}

std::optional<size_t> find_breakpoint(const Word& b, size_t start, size_t horizon) {
    Walk w = walk(b);
    size_t j = w.regular_len;
    if (j >= b.size() || j >= horizon || j < start) return std::nullopt;
    return j;
}

bool rewrite_step(RewriteState& st) {
    size_t j = st.states.size() - 1;  // regular prefix length
    if (j >= st.b.size()) return false;
    if (!st.j_history.empty() && j <= st.j_history.back())
        fail(ErrorKind::InternalInvariantViolation, "breakpoints not increasing at " + std::to_string(j));
    const GaussianInt d = st.b[j];
    if (!in_s_domain(d))
        fail(ErrorKind::InternalInvariantViolation, "breakpoint digit " + d.str() + " outside the domain of S");
    Symmetry mir = tail_mirror(d);
    st.b[j] = s_map(d);
    for (size_t k = j + 1; k < st.b.size(); ++k) st.b[k] = apply_symmetry(mir, st.b[k]);
    st.j_history.push_back(j);
    st.mir_history.push_back(mir);
    ++st.N;
    extend_states(st);
    if (st.states.size() < j + 2)
        fail(ErrorKind::InternalInvariantViolation, "prefix through " + std::to_string(j + 1) + " is not regular after S");
    return true;
}

json trace_line(const RewriteState& st) {
    size_t j = st.j_history.back();
    Word prefix(st.b.begin(), st.b.begin() + static_cast<long>(j + 1));
    return json{{"N", st.N - 1}, {"j", j}, {"mir", st.mir_history.back().name()}, {"prefix", word_json(prefix)}};
}

RegularizeResult regularize_report(const DigitSeq& a, size_t out_len, size_t slack) {
    size_t horizon = out_len + slack;
    if (a.finite()) horizon = std::min(horizon, a.size());
    Word window = a.prefix(horizon);
    check_digits(window);
    RegularizeResult res;
    res.input_class = classify(window);
    if (res.input_class == WordClass::Invalid)
        fail(ErrorKind::NotValid, "input prefix of length " + std::to_string(horizon) + " is invalid");
    res.state = initial_state(std::move(window));
    while (rewrite_step(res.state)) res.trace.push_back(trace_line(res.state));
    size_t n = std::min(out_len, res.state.b.size());
    res.digits.assign(res.state.b.begin(), res.state.b.begin() + static_cast<long>(n));
    return res;
}

Word regularize(const DigitSeq& a, size_t out_len, size_t slack) {
    return regularize_report(a, out_len, slack).digits;
}

}  // namespace hcf
