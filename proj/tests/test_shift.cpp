#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace hcft;

namespace {

std::vector<GaussianInt> digits_up_to(long norm) {
    std::vector<GaussianInt> ds;
    for (long x = -10; x <= 10; ++x)
        for (long y = -10; y <= 10; ++y) {
            GaussianInt b(x, y);
            if (is_digit(b) && b.norm() <= norm) ds.push_back(b);
        }
    return ds;
}

bool on_unit_circle_or_square_edge(const QuadComplex& w) {
    QuadScalar h = Q(1, 2);
    if (w.re() == -h || w.im() == -h) return true;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            if ((w - QuadComplex(G(x, y))).norm() == Q(1)) return true;
    return false;
}

}  // namespace

TEST_CASE("catalogue states") {
    CHECK(PrototypeState{1}.excluded() == std::vector<GaussianInt>{G(1)});
    CHECK(SoficGraph::instance().next(kSQ, G(-2)) == 1);
    CHECK(match_state(open_prototype_region({G(-2)})) == 1);
    auto reach = SoficGraph::instance().reachable_from_sq();
    CHECK(reach.size() == 13);
    std::set<int> ids(reach.begin(), reach.end());
    CHECK(ids.size() == 13);
}

TEST_CASE("frozen graph constants") {
    const auto& g = SoficGraph::instance();
    CHECK(g.exception_edge_count() == 148);
    CHECK(g.exception_entry_count() == 224);
    for (int s = 0; s < kStateCount; ++s) CHECK(g.cut(s) == ((s >= 5 && s <= 8) ? 8 : 5));
    std::string text = g.export_text();
    size_t edges = 0;
    for (size_t p = text.find("\ne "); p != std::string::npos; p = text.find("\ne ", p + 1)) ++edges;
    if (text.rfind("e ", 0) == 0) ++edges;
    CHECK(edges == 148);
    CHECK(g.export_json()["edges"].size() == 148);
}

TEST_CASE("graph agrees with exact geometry for |b| <= 10") {
    const auto& g = SoficGraph::instance();
    size_t edges = 0;
    for (int s = 0; s < kStateCount; ++s)
        for (const auto& b : digits_up_to(100)) {
            int t = SoficGraph::next_geometric(s, b);
            CHECK(g.next(s, b) == t);
            if (t != kNoEdge) ++edges;
            if (b.norm() > g.cut(s)) CHECK(SoficGraph::large_digit_rule(s, b) == t);
        }
    CHECK(edges == 2564);
}

TEST_CASE("classification examples") {
    CHECK(classify({G(-2)}) == WordClass::RegularNotFull);
    CHECK(classify({G(-2), G(1, 3)}) == WordClass::IrregularValid);
    CHECK(classify({G(3, 3), G(-4), G(0, 5)}) == WordClass::RegularFull);
    CHECK(classify({}) == WordClass::RegularFull);
    CHECK_THROWS_AS(classify({G(0, -1)}), Error);
    CHECK(is_regular_prefix_closed({G(3, 3), G(-2)}));
    CHECK(factor_check({G(3, 3), G(-2)}));
    CHECK_FALSE(is_regular_prefix_closed({G(-2), G(1, 3), G(-2)}));
    CHECK_FALSE(factor_check({G(-2), G(1, 3), G(-2)}));
    CHECK(is_regular_prefix_closed({}));
    CHECK(factor_check({}));
}

TEST_CASE("graph walk matches direct cylinders") {
    auto ds = digits_up_to(9);
    for (const auto& a : ds) {
        CHECK(classify({a}) == classify_direct({a}));
        for (const auto& b : ds) CHECK(classify({a, b}) == classify_direct({a, b}));
    }
    // longer words: sampled, biased toward valid prefixes
    std::mt19937_64 rng(11);
    for (int k = 0; k < 60; ++k) {
        Word w = random_regular_word(rng, 2 + k % 2, 3);
        w.push_back(random_digit(rng, 3));
        CHECK(classify(w) == classify_direct(w));
    }
}

TEST_CASE("prototype and cylinder sets") {
    CHECK(prototype_region({}) == Region::square());
    for (long b : {3, -3, 4, 7}) {
        Region p = prototype_region({G(-2), G(1, b), G(-2)});
        CHECK(same_set(p, intersect(Region::square(), Region::curve(Circline::circle(1, 0, 1)))));
    }
    Region c = cylinder_region({G(-2)});
    CHECK(same_set(c, intersect(Region::square(), invert(translate(Region::square(), G(-2))))));
    CHECK(same_set(c, cylinder_direct({G(-2)})));
    CHECK(has_nonempty_interior(c));
    CHECK(classify({G(2), G(-1, 3)}) == WordClass::Invalid);
    CHECK_THROWS_AS(prototype_region({G(2), G(-1, 3)}), Error);
}

TEST_CASE("mirror symmetry on regular words") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 40; ++k) {
        Word w = random_regular_word(rng, 1 + k % 4, 4);
        for (auto s : {Symmetry::mir1(), Symmetry::mir2()}) {
            Word m = apply_symmetry(s, w);
            CHECK(classify(m) == classify(w));
            CHECK(same_set(open_prototype_region(m), apply_symmetry(s, open_prototype_region(w))));
        }
    }
}

TEST_CASE("large digits give full words") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; ++k) {
        Word w;
        while (w.size() < 6) {
            GaussianInt b = random_digit(rng, 6);
            if (b.norm() >= 8) w.push_back(b);
        }
        CHECK(classify(w) == WordClass::RegularFull);
        auto st = walk(w).states;
        CHECK(std::all_of(st.begin(), st.end(), [](int s) { return s == kSQ; }));
    }
}

TEST_CASE("irregular extensions only leave five prototype sets") {
    const std::set<int> allowed = {1, 4, 9, 11, 12};
    std::mt19937_64 rng(17);
    auto ds = digits_up_to(10);
    size_t hits = 0;
    for (int k = 0; k < 40; ++k) {
        Word w = random_regular_word(rng, 1 + k % 3, 3);
        int s = walk(w).states.back();
        for (const auto& b : ds) {
            if (SoficGraph::instance().next(s, b) != kNoEdge) continue;
            Word v = w;
            v.push_back(b);
            WordClass c = classify(v);
            if (c == WordClass::Invalid) continue;
            ++hits;
            CHECK(allowed.count(s) == 1);
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("concatenation and full extensions") {
    CHECK(concat_regular({G(3, 3)}, {G(-2)}) == Word{G(3, 3), G(-2)});
    CHECK_THROWS_AS(concat_regular({G(4)}, {G(-2), G(1, 3)}), Error);
    CHECK_THROWS_AS(concat_regular({G(-2)}, {G(4)}), Error);
    CHECK(find_full_extension({}) == G(3, 3));
    GaussianInt b = find_full_extension({G(-2)});
    CHECK(b == G(-3, 3));
    CHECK(pm(b) >= 3);
    CHECK(classify({G(-2), b}) == WordClass::RegularFull);
    std::mt19937_64 rng(23);
    for (int k = 0; k < 30; ++k) {
        Word w = random_regular_word(rng, 1 + k % 5, 3);
        GaussianInt e = find_full_extension(w);
        w.push_back(e);
        CHECK(pm(e) >= 3);
        CHECK(classify(w) == WordClass::RegularFull);
        CHECK(in_witness_set(w));
    }
}

TEST_CASE("shift distance") {
    DigitSeq a(Word{G(2), G(3), G(4), G(5)});
    CHECK(shift_distance(a, a, 4) == 0);
    CHECK(shift_distance(a, DigitSeq(Word{G(-2), G(3), G(4), G(5)}), 4) == mpq_class(1, 2));
    CHECK(shift_distance(a, DigitSeq(Word{G(2), G(3), G(7), G(5)}), 4) == mpq_class(1, 8));
}

TEST_CASE("boundary points map to boundary points") {
    for (long t = -20; t < 20; ++t) {
        QuadComplex z = rat(-1, 2, t, 40);
        auto [d, w] = gauss_map(z);
        CHECK(in_fundamental_domain(w));
        CHECK(on_unit_circle_or_square_edge(w));
    }
    CHECK(on_unit_circle_or_square_edge(gauss_map(zeta1()).second));
    CHECK(on_unit_circle_or_square_edge(gauss_map(zeta3()).second));
}
