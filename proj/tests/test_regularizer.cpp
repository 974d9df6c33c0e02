#include <doctest.h>

#include <cmath>

#include "hcf/ball.hpp"
#include "hcf/regularizer.hpp"
#include "hcf/seqspec.hpp"
#include "support.hpp"

using namespace hcft;

namespace {

const long kB[] = {3, -4, 5};
long B(size_t n) { return kB[(n - 1) % 3]; }  // 1-based

DigitSeq example1() { return example1_sequence(IntSeq::from_json(json{{"rule", "periodic"}, {"values", {3, -4, 5}}})); }
DigitSeq example2() { return DigitSeq::periodic({G(-2)}, {G(1, 2), G(-2, 1)}); }

double dist(const QuadComplex& x, const QuadComplex& y) { return std::sqrt((x - y).norm().approx()); }

}  // namespace

TEST_CASE("S map") {
    CHECK(s_map(G(1, 3)) == G(0, 3));
    CHECK(s_map(G(-1, 3)) == G(0, 3));
    CHECK(s_map(G(-2, 1)) == G(-2));
    CHECK(s_map(G(4, -1)) == G(4));
    CHECK_THROWS_AS(s_map(G(5)), Error);
    CHECK_THROWS_AS(s_map(G(1, 1)), Error);
    CHECK_FALSE(in_s_domain(G(2, 2)));
    CHECK(tail_mirror(G(3, 1)) == Symmetry::mir1());
    CHECK(tail_mirror(G(-1, -4)) == Symmetry::mir2());
}

TEST_CASE("S commutes with both mirrors") {
    for (long m = -9; m <= 9; ++m) {
        if (m > -2 && m < 2) continue;
        for (auto a : {G(1, m), G(-1, m), G(m, 1), G(m, -1)})
            for (auto s : {Symmetry::mir1(), Symmetry::mir2()}) CHECK(s_map(apply_symmetry(s, a)) == apply_symmetry(s, s_map(a)));
    }
}

TEST_CASE("breakpoints and rewrite steps on the first worked sequence") {
    Word a = example1().prefix(16);
    CHECK(find_breakpoint(a, 0, 16) == std::optional<size_t>(1));
    RewriteState st = initial_state(a);
    REQUIRE(rewrite_step(st));
    // b1 = (-2, iB1, 2, -1+iB2, 2, -1+iB3, ...)
    CHECK(st.b[0] == G(-2));
    CHECK(st.b[1] == G(0, B(1)));
    for (size_t k = 1; k < 8; ++k) {
        CHECK(st.b[2 * k] == G(2));
        CHECK(st.b[2 * k + 1] == G(-1, B(k + 1)));
    }
    CHECK(find_breakpoint(st.b, 0, 16) == std::optional<size_t>(3));
    REQUIRE(rewrite_step(st));
    // b2 = (-2, iB1, 2, iB2, -2, 1+iB3, -2, 1+iB4, ...)
    CHECK(st.b[2] == G(2));
    CHECK(st.b[3] == G(0, B(2)));
    for (size_t k = 2; k < 8; ++k) {
        CHECK(st.b[2 * k] == G(-2));
        CHECK(st.b[2 * k + 1] == G(1, B(k + 1)));
    }
    CHECK(st.j_history == std::vector<size_t>{1, 3});
    CHECK(st.mir_history == std::vector<Symmetry>{Symmetry::mir2(), Symmetry::mir2()});
    json t = trace_line(st);
    CHECK(t["N"] == 1);
    CHECK(t["j"] == 3);
    CHECK(t["mir"] == Symmetry::mir2().name());
    CHECK(t["prefix"].size() == 4);
}

TEST_CASE("worked sequences regularize to the displayed outputs") {
    Word b1 = regularize(example1(), 40);
    REQUIRE(b1.size() == 40);
    for (size_t k = 0; k < 20; ++k) {
        CHECK(b1[2 * k] == (k % 2 == 0 ? G(-2) : G(2)));
        CHECK(b1[2 * k + 1] == G(0, B(k + 1)));
    }
    Word b2 = regularize(example2(), 40);
    const GaussianInt cyc[] = {G(-2), G(0, 2), G(2), G(0, -2)};
    for (size_t k = 0; k < 40; ++k) CHECK(b2[k] == cyc[k % 4]);
    for (const Word& w : {b1, b2}) CHECK(walk(w).regular_len == w.size());
}

TEST_CASE("regular inputs are left alone") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        Word w = random_regular_word(rng, 12, 4);
        CHECK(find_breakpoint(w, 0, w.size()) == std::nullopt);
        RewriteState st = initial_state(w);
        CHECK_FALSE(rewrite_step(st));
        auto r = regularize_report(DigitSeq(w), 12);
        CHECK(r.digits == w);
        CHECK(r.trace.empty());
    }
}

TEST_CASE("invalid inputs are rejected") {
    try {
        regularize(DigitSeq(Word{G(2), G(-1, 3), G(2), G(-1, 3)}), 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotValid);
    }
}

TEST_CASE("breakpoints increase and every rewrite keeps the prefix regular") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 20; ++k) {
        json spec{{"rule", "explicit"}, {"values", json::array()}};
        for (int n = 0; n < 30; ++n) {
            long v = std::uniform_int_distribution<long>(3, 9)(rng);
            spec["values"].push_back(rng() % 2 ? v : -v);
        }
        auto r = regularize_report(example1_sequence(IntSeq::from_json(spec)), 40);
        const auto& js = r.state.j_history;
        for (size_t i = 1; i < js.size(); ++i) CHECK(js[i] > js[i - 1]);
        CHECK(walk(r.digits).regular_len == r.digits.size());
        CHECK(r.trace.size() == r.state.N);
    }
}

TEST_CASE("value is preserved") {
    for (const auto& a : {example1(), example2()}) {
        Word in = a.prefix(60), out = regularize(a, 60);
        auto ca = convergents(in).back(), cb = convergents(out).back();
        double gap = dist(QuadComplex(ca.p) / QuadComplex(ca.q), QuadComplex(cb.p) / QuadComplex(cb.q));
        double bound = 1 / ca.q.norm().get_d() + 1 / cb.q.norm().get_d();
        CHECK(gap <= bound);
        CHECK(gap < 1e-12);
    }
    // the second sequence is the expansion of zeta_1
    Word out = regularize(example2(), 200);
    CHECK(ComplexBall::from_quad(zeta1(), 1024).distance_upper(evaluate_finite(out)).to_double() < 1e-40);
}

TEST_CASE("lambda bar commutes with mirrors") {
    DigitSeq b = DigitSeq::periodic({}, {G(-2), G(0, 2), G(2), G(0, -2)});
    for (auto s : {Symmetry::mir1(), Symmetry::mir2()}) {
        DigitSeq mb = DigitSeq::periodic({}, apply_symmetry(s, b.prefix(4)));
        CHECK(lambda_bar(mb, mpq_class(1, 1000000000)).certainly_contains(apply_symmetry(s, zeta1())));
    }
    CHECK(apply_symmetry(Symmetry::mir1(), zeta1()) == zeta2());
}

TEST_CASE("digits m and im of size 2 or more reset the prototype") {
    std::mt19937_64 rng(21);
    size_t checked = 0;
    for (int k = 0; k < 300 && checked < 60; ++k) {
        Word x = random_regular_word(rng, 1 + k % 3, 3);
        long m = std::uniform_int_distribution<long>(2, 4)(rng) * (rng() % 2 ? 1 : -1);
        GaussianInt c = rng() % 2 ? G(m) : G(0, m);
        Word d = random_regular_word(rng, 1 + k % 3, 3);
        Word w = x;
        w.push_back(c);
        w.insert(w.end(), d.begin(), d.end());
        if (walk(w).regular_len < w.size()) continue;
        ++checked;
        CHECK(walk(w).states.back() == walk(d).states.back());
    }
    CHECK(checked >= 30);
}
