// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "hcf/ball.hpp"
#include "hcf/regularizer.hpp"
#include "hcf/seqspec.hpp"
#include "hcf/stats.hpp"
#include "hcf/wordlab.hpp"
#include "support.hpp"

using namespace hcft;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        if (!ok) pass = false;
    }
};

// Expected layout (-2, iB1, 2, iB2, -2, iB3, ...)
bool example1_shape(const Word& b, const IntSeq& B) {
    for (size_t k = 0; k < b.size(); ++k) {
        size_t n = k / 2 + 1;
        GaussianInt want = k % 2 == 0 ? G(n % 2 ? -2 : 2) : G(0, B.at(n));
        if (b[k] != want) return false;
    }
    return true;
}

Verdict criterion1() {
    Verdict v;
    std::mt19937_64 rng(101);
    std::vector<json> specs = {{{"rule", "periodic"}, {"values", {3, -4, 5}}},
                               {{"rule", "power-perturbation"}, {"base", 3}, {"alt", 4}},
                               {{"rule", "fibonacci"}, {"values", {-3, 7}}}};
    for (int k = 0; k < 7; ++k) {
        json vals = json::array();
        for (int t = 0; t < 25; ++t) {
            long x = std::uniform_int_distribution<long>(3, 12)(rng);
            vals.push_back(rng() % 2 ? x : -x);
        }
        specs.push_back({{"rule", "explicit"}, {"values", vals}});
    }
    for (const auto& s : specs) {
        IntSeq B = IntSeq::from_json(s);
        auto t0 = Clock::now();
        Word b = regularize(example1_sequence(B), 40);
        double dt = seconds_since(t0);
        v.require(b.size() == 40 && example1_shape(b, B), "wrong digits for B = " + s.dump());
        v.require(dt < 1.0, "took " + std::to_string(dt) + " s for B = " + s.dump());
    }
    v.detail = v.pass ? std::to_string(specs.size()) + " B sequences, 40 digits each, each under 1 s" : v.detail;
    return v;
}

Verdict criterion2() {
    Verdict v;
    DigitSeq a = DigitSeq::periodic({G(-2)}, {G(1, 2), G(-2, 1)});
    Word b = regularize(a, 400);
    const GaussianInt cyc[] = {G(-2), G(0, 2), G(2), G(0, -2)};
    for (size_t k = 0; k < 40; ++k) v.require(b[k] == cyc[k % 4], "digit " + std::to_string(k + 1) + " differs");
    mpq_class r(1);
    mpz_class ten30;
    mpz_ui_pow_ui(ten30.get_mpz_t(), 10, 30);
    r /= ten30;
    size_t m = lambda_prefix_length(r);
    v.require(m >= 200, "prefix length " + std::to_string(m) + " < 200");
    DigitSeq bs([b](size_t i) { return b.at(i); }, "regularized output");
    ComplexBall ball = lambda_bar(bs, r);
    v.require(ball.certainly_contains(zeta1()), "ball misses zeta_1");
    v.require(mpfr_cmp_d(ball.rad().get(), 1e-30) <= 0, "radius above 1e-30");
    if (v.pass) v.detail = "40 digits match; prefix length " + std::to_string(m) + ", radius " + ball.rad().str(3);
    return v;
}

Verdict criterion3() {
    Verdict v;
    struct Row {
        QuadComplex z;
        GaussianInt d;
        QuadComplex t;
        const char* name;
    } rows[] = {{zeta1(), G(-2), zeta4(), "zeta1"},
                {zeta2(), G(-2, 1), zeta4(), "zeta2"},
                {zeta3(), G(0, 2), zeta2(), "zeta3"},
                {zeta4(), G(1, 2), zeta2(), "zeta4"}};
    for (const auto& r : rows) {
        auto [d, t] = gauss_map(r.z);
        v.require(d == r.d, std::string("first digit of ") + r.name);
        v.require(t == r.t, std::string("image of ") + r.name);
    }
    if (v.pass) v.detail = "four digits and four images equal exactly in Q(sqrt 3)";
    return v;
}

Verdict criterion4() {
    Verdict v;
    auto reach = SoficGraph::instance().reachable_from_sq();
    std::set<int> ids(reach.begin(), reach.end());
    v.require(reach.size() == 13 && ids.size() == 13, "reachable states: " + std::to_string(reach.size()));
    if (v.pass) v.detail = "13 states reachable from the open square";
    return v;
}

bool segment_is(const Region& r, const QuadComplex& closed_end, const QuadComplex& open_end) {
    if (r.kind() != Kind::Segment) return false;
    const auto& sh = r.shape();
    if (sh.arcs.size() != 1 || !sh.points.empty()) return false;
    const Arc& a = sh.arcs[0];
    if (a.carrier != Circline::vertical(mpq_class(-1, 2)).curve() || !a.start || !a.end) return false;
    bool fwd = *a.start == closed_end && *a.end == open_end && a.start_in && !a.end_in;
    bool bwd = *a.end == closed_end && *a.start == open_end && a.end_in && !a.start_in;
    return (fwd || bwd) && r.contains(closed_end) && !r.contains(open_end);
}

Verdict criterion5() {
    Verdict v;
    QuadComplex lo = rat(-1, 2, -1, 2), hi = rat(-1, 2, 1, 2);
    QuadComplex up(Q(-1, 2), alpha()), down(Q(-1, 2), -alpha());
    v.require(segment_is(prototype_region({G(-2), G(1, 2)}), down, hi), "m = 2");
    v.require(segment_is(prototype_region({G(-2), G(1, -2)}), lo, up), "m = -2");
    for (long m : {3, -3, 5}) v.require(segment_is(prototype_region({G(-2), G(1, m)}), lo, hi), "m = " + std::to_string(m));
    if (v.pass) v.detail = "m in {2, -2, 3, -3, 5}: exact endpoints and inclusion flags";
    return v;
}

// z = [0; w, e + y] with w e full and y inside the open square
Verdict criterion6() {
    Verdict v;
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> len(1, 29), u(-40, 40), pos(1, 40);
    size_t violations = 0, checks = 0;
    for (int k = 0; k < 1000; ++k) {
        Word w = random_regular_word(rng, static_cast<size_t>(len(rng)), 4);
        w.push_back(find_full_extension(w));
        QuadComplex y;
        do {
            y = QuadComplex(QuadScalar(mpq_class(u(rng), 97), mpq_class(pos(rng), 211), 3),
                            QuadScalar(mpq_class(u(rng), 89), mpq_class(-pos(rng), 223), 3));
        } while (!(y.re() > Q(-1, 2) && y.im() > Q(-1, 2) && in_fundamental_domain(y) && !y.is_zero()));
        QuadComplex x = y;
        for (size_t i = w.size(); i-- > 0;) x = (QuadComplex(w[i]) + x).inverse();
        Expansion e = expand(x, w.size());
        if (e.digits != w) {
            ++violations;
            continue;
        }
        auto cv = convergents(w);
        for (size_t n = 1; n < cv.size(); ++n) {
            ++checks;
            bool ok = is_digit(w[n - 1]) && cv[n].q.norm() > cv[n - 1].q.norm() && q_lower_bound_holds(cv[n].q, n);
            QuadScalar qn(cv[n].q.norm());
            ok = ok && (x - QuadComplex(cv[n].p) / QuadComplex(cv[n].q)).norm() * qn * qn < Q(1);
            if (!ok) ++violations;
        }
    }
    v.require(violations == 0, std::to_string(violations) + " violations");
    if (v.pass) v.detail = "1000 words, " + std::to_string(checks) + " convergent checks, 0 violations";
    return v;
}

Verdict criterion7() {
    Verdict v;
    std::mt19937_64 rng(707);
    size_t checked = 0, skipped = 0, bad = 0;
    for (int k = 0; k < 500; ++k) {
        Word w = random_word(rng, 1 + static_cast<size_t>(k % 30), 5);
        try {
            auto s = mirror(w);
            ++checked;
            if (s.lhs != s.rhs) ++bad;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ZeroDenominator) throw;
            ++skipped;
        }
    }
    v.require(bad == 0, std::to_string(bad) + " violations");
    if (v.pass) v.detail = std::to_string(checked) + " words equal, " + std::to_string(skipped) + " zero-denominator skips";
    return v;
}

Verdict criterion8() {
    Verdict v;
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<size_t> ml(5, 50);
    for (int k = 0; k < 200; ++k) {
        Word u = random_regular_word(rng, 1 + k % 6, 4);
        u.push_back(find_full_extension(u));
        size_t m = ml(rng);
        Word vv = random_regular_word(rng, m, 4);
        Word vp(vv.begin(), vv.end() - 1);
        vp.push_back(find_full_extension(vp));
        Word uv = u;
        uv.insert(uv.end(), vp.begin(), vp.end());
        v.require(in_witness_set(u), "u not in the witness set");
        v.require(vp.size() == vv.size(), "length changed");
        v.require(hamming(vv, vp) <= mpq_class(1, static_cast<unsigned long>(m)), "Hamming distance above 1/m");
        v.require(in_witness_set(uv), "u v' not in the witness set: " + word_str(uv));
    }
    if (v.pass) v.detail = "200 pairs, empty gap word, all witnesses valid";
    return v;
}

struct Equivariance {
    size_t inputs = 0, class_breaks = 0, reg_breaks = 0, mirror_invalid = 0, both_valid_ok = 0, both_valid = 0;
};

Verdict criterion9() {
    Verdict v;
    std::mt19937_64 rng(909);
    std::vector<DigitSeq> inputs;
    inputs.push_back(DigitSeq::periodic({G(-2)}, {G(1, 2), G(-2, 1)}));
    while (inputs.size() < 200) {
        json vals = json::array();
        for (int t = 0; t < 30; ++t) {
            long x = std::uniform_int_distribution<long>(3, 9)(rng);
            vals.push_back(rng() % 2 ? x : -x);
        }
        json B{{"rule", "explicit"}, {"values", vals}, {"assert_aperiodic", true}};
        inputs.push_back(example1_sequence(IntSeq::from_json(B)));
    }
    const size_t L = 24;
    Equivariance e;
    for (const auto& a : inputs) {
        Word w = a.prefix(L + 4);
        WordClass c = classify(w);
        if (is_regular(c)) continue;
        ++e.inputs;
        Word b = regularize(a, L);
        for (auto s : {Symmetry::mir1(), Symmetry::mir2()}) {
            Word mw = apply_symmetry(s, w);
            WordClass mc = classify(mw);
            if (mc != c) ++e.class_breaks;
            if (mc == WordClass::Invalid) {
                ++e.mirror_invalid;
                ++e.reg_breaks;
                continue;
            }
            ++e.both_valid;
            Word mb = regularize(DigitSeq(mw), L);
            if (mb != apply_symmetry(s, b))
                ++e.reg_breaks;
            else
                ++e.both_valid_ok;
        }
    }
    v.require(e.class_breaks == 0 && e.reg_breaks == 0, "equivariance broken");
    char buf[400];
    std::snprintf(buf, sizeof buf,
                  "%zu irregular inputs x 2 mirrors: %zu class changes, %zu regularize mismatches "
                  "(%zu mirror images invalid; %zu/%zu agree where both sides are valid); "
                  "half-open square: Mir2(-2, 1+3i) = (2, -1+3i) is %s",
                  e.inputs, e.class_breaks, e.reg_breaks, e.mirror_invalid, e.both_valid_ok, e.both_valid,
                  class_name(classify({G(2), G(-1, 3)})));
    v.detail = buf;
    return v;
}

// The counterexample that makes criterion 9 unattainable, checked on its own.
bool criterion9_expected_failure() {
    return classify({G(-2), G(1, 3)}) == WordClass::IrregularValid &&
           classify(apply_symmetry(Symmetry::mir2(), Word{G(-2), G(1, 3)})) == WordClass::Invalid;
}

// Frozen at the first run (seed 2024, 1000 x 1000); any change in sampling or arithmetic shows up here.
struct Frozen {
    Word word;
    double estimate, stderr_;
};
const Frozen kFrozen[] = {
    {{GaussianInt(-2)}, 0.027083999999999896, 0.00016015803006593613},
    {{GaussianInt(1, 2)}, 0.034295999999999993, 0.00018557160564272934},
    {{GaussianInt(2, 2)}, 0.016544999999999976, 0.00012576084760684145},
    {{}, 0.44344900000000032, 0.00046747184827415948},
};

Verdict criterion10() {
    Verdict v;
    auto t0 = Clock::now();
    auto rows = estimate_level1_partition(8, 1000, 1000, 2024);
    double dt = seconds_since(t0);
    double s = 0, var = 0;
    for (const auto& r : rows) {
        s += r.estimate;
        var += r.stderr_ * r.stderr_;
    }
    v.require(std::fabs(s - 1) <= 3 * std::sqrt(var) + 1e-12, "partition sum " + std::to_string(s));
    v.require(dt < 30, "1e6 orbit steps took " + std::to_string(dt) + " s");
    std::vector<Word> pats = {{G(-2, 1)}, {G(1, 2)}, {G(-2), G(0, 2)}, {G(2, 1), G(-3)}};
    std::vector<Word> conj;
    for (const auto& p : pats) conj.push_back(apply_symmetry(Symmetry::mir1(), p));
    auto a = estimate_measures(pats, 400, 500, 7), b = estimate_measures(conj, 400, 500, 8);
    for (size_t k = 0; k < pats.size(); ++k)
        v.require(std::fabs(a[k].estimate - b[k].estimate) <= 3 * std::hypot(a[k].stderr_, b[k].stderr_),
                  "conjugate patterns disagree: " + word_str(pats[k]));
    char buf[200];
    for (const auto& f : kFrozen) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const MeasureEstimate& m) { return m.word == f.word; });
        bool same = it != rows.end() && std::fabs(it->estimate - f.estimate) <= 1e-12 &&
                    std::fabs(it->stderr_ - f.stderr_) <= 1e-12;
        if (it != rows.end()) std::snprintf(buf, sizeof buf, " %.17g %.17g", it->estimate, it->stderr_);
        v.require(same, "regression value moved: " + word_str(f.word) + (it != rows.end() ? buf : " missing"));
    }
    if (v.pass) {
        std::snprintf(buf, sizeof buf, "partition sum %.6f +- %.6f; 1e6 steps in %.1f s; 4 conjugate pairs agree", s,
                      std::sqrt(var), dt);
        v.detail = buf;
    }
    return v;
}

Verdict criterion11() {
    Verdict v;
    std::vector<json> specs = {{{"rule", "power-perturbation"}, {"base", 3}, {"alt", 4}},
                               {{"rule", "power-perturbation"}, {"base", -5}, {"alt", 3}, {"power", 3}},
                               {{"rule", "fibonacci"}, {"values", {3, -4}}},
                               {{"rule", "fibonacci"}, {"values", {6, 5}}}};
    std::vector<mpq_class> eps = {0, mpq_class(1, 1000), mpq_class(1, 100), mpq_class(1, 10), mpq_class(1, 2), 1, 4};
    size_t rows_checked = 0;
    for (const auto& s : specs) {
        auto g = gen_theorem14(s, 120);
        v.require(classify({g.prefix[0], g.prefix[1]}) == WordClass::IrregularValid, "prefix class for " + s.dump());
        Word b = regularize(g.seq, 60);
        v.require(walk(b).regular_len == b.size(), "regularized output not regular");
        auto cv = convergents(b);
        for (size_t n = 1; n < cv.size(); ++n) {
            v.require(is_digit(b[n - 1]), "digit outside the alphabet");
            v.require(cv[n].q.norm() > cv[n - 1].q.norm(), "|q_n| not increasing");
            v.require(q_lower_bound_holds(cv[n].q, n), "|q_n| below psi^(n-1)");
        }
        std::vector<std::array<size_t, 3>> idx;
        for (const auto& d : find_wuv(g.prefix))
            if (d.U.size() >= 2 && 2 * (d.W.size() + d.U.size() + d.V.size()) <= g.prefix.size())
                idx.push_back({d.W.size(), d.U.size(), d.V.size()});
        v.require(!idx.empty(), "no decompositions");
        std::vector<std::vector<GrowthRow>> rs;
        for (const auto& e : eps) rs.push_back(check_growth_inequality(g.seq, idx, e));
        for (size_t k = 0; k < idx.size(); ++k) {
            v.require(rs[0][k].holds, "fails at eps = 0");
            for (size_t e = 1; e < eps.size(); ++e)
                if (rs[e][k].holds) v.require(rs[e - 1][k].holds, "not monotone in eps");
            ++rows_checked;
        }
    }
    if (v.pass) v.detail = "4 families; prefix classes, laws on regularized outputs, " + std::to_string(rows_checked) + " growth rows monotone";
    return v;
}

}  // namespace

int main() {
    using Fn = std::function<Verdict()>;
    const std::pair<const char*, Fn> crits[] = {
        {"Example-1 reproduction", criterion1},       {"Example-2 reproduction and lambda bar", criterion2},
        {"zeta-orbit identities", criterion3},       {"prototype catalogue has 13 states", criterion4},
        {"segment formulas", criterion5},            {"convergent laws", criterion6},
        {"mirror formula", criterion7},              {"feeble-specification witnesses", criterion8},
        {"D8 equivariance on irregular inputs", criterion9}, {"normality statistics", criterion10},
        {"generator families", criterion11},
    };
    int unexpected = 0;
    for (size_t k = 0; k < std::size(crits); ++k) {
        const int id = static_cast<int>(k + 1);
        Verdict v;
        auto t0 = Clock::now();
        try {
            v = crits[k].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %2d %-40s %6.2fs  %s\n", v.pass ? "PASS" : "FAIL", id, crits[k].first, seconds_since(t0),
                    v.detail.c_str());
        std::fflush(stdout);
        // 9 is known to be unattainable; it must fail for the documented reason and no other
        bool expected = id == 9 ? (!v.pass && criterion9_expected_failure()) : v.pass;
        if (!expected) ++unexpected;
    }
    std::printf("%s\n", unexpected ? "unexpected results" : "all criteria as expected (9 fails: see README)");
    return unexpected ? 1 : 0;
}
