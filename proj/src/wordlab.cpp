#include "hcf/wordlab.hpp"

#include <algorithm>

#include "hcf/ball.hpp"
#include "hcf/engine.hpp"

namespace hcf {

std::optional<size_t> repetition(const Word& a, size_t n, size_t window) {
    size_t len = window ? window : n + 2;
    // 1-based m, i with i <= m - n and both windows inside a
    for (size_t m = n + 1; m + len - 1 <= a.size(); ++m) {
        for (size_t i = 1; i + n <= m; ++i)
            if (std::equal(a.begin() + static_cast<long>(i - 1), a.begin() + static_cast<long>(i - 1 + len),
                           a.begin() + static_cast<long>(m - 1)))
                return m;
    }
    return std::nullopt;
}

RepetitionProfile repetition_profile(const Word& a, size_t max_n, size_t window) {
    RepetitionProfile p;
    for (size_t n = 1; n <= max_n; ++n) {
        auto r = repetition(a, n, window);
        if (!r) continue;
        p.r_values.push_back({n, *r});
        mpq_class q(static_cast<unsigned long>(*r), static_cast<unsigned long>(n));
        q.canonicalize();
        if (!p.min_ratio || q < *p.min_ratio) p.min_ratio = q;
        p.last_ratio = q;
    }
    p.caveat = "liminf not certifiable from a prefix; ratios cover computed n only";
    return p;
}

json to_json(const RepetitionProfile& p) {
    json r = json::array();
    for (auto [n, m] : p.r_values) r.push_back({n, m});
    json j{{"r_values", r}, {"caveat", p.caveat}};
    j["min_ratio"] = p.min_ratio ? json(rational_str(*p.min_ratio)) : json(nullptr);
    j["last_ratio"] = p.last_ratio ? json(rational_str(*p.last_ratio)) : json(nullptr);
    return j;
}

mpq_class WUV::ratio() const {
    mpq_class q(static_cast<unsigned long>(W.size() + V.size()), static_cast<unsigned long>(U.size()));
    q.canonicalize();
    return q;
}

Word WUV::prefix() const {
    Word out = W;
    out.insert(out.end(), U.begin(), U.end());
    out.insert(out.end(), V.begin(), V.end());
    out.insert(out.end(), U.begin(), U.end());
    return out;
}

json to_json(const WUV& d) {
    return json{{"W", word_json(d.W)}, {"U", word_json(d.U)}, {"V", word_json(d.V)}, {"ratio", rational_str(d.ratio())}};
}

std::vector<WUV> find_wuv(const Word& a) {
    std::vector<WUV> out;
    const size_t L = a.size();
    auto it = [&](size_t k) { return a.begin() + static_cast<long>(k); };
    for (size_t w = 0; w < L; ++w)
        for (size_t u = 1; w + 2 * u <= L; ++u)
            for (size_t v = 0; w + 2 * u + v <= L; ++v)
                if (std::equal(it(w), it(w + u), it(w + u + v)))
                    out.push_back({Word(it(0), it(w)), Word(it(w), it(w + u)), Word(it(w + u), it(w + u + v))});
    return out;
}

std::optional<WUV> even_u(const WUV& d) {
    if (d.U.size() % 2 == 0) return d;
    if (d.U.size() == 1) return std::nullopt;
    WUV e;
    e.W = d.W;
    e.U.assign(d.U.begin(), d.U.end() - 1);
    e.V.push_back(d.U.back());
    e.V.insert(e.V.end(), d.V.begin(), d.V.end());
    return e;
}

Word shuffle(const Word& a, const Word& b) {
    if (a.size() != b.size())
        fail(ErrorKind::LengthMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    Word out;
    out.reserve(2 * a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        out.push_back(a[k]);
        out.push_back(b[k]);
    }
    return out;
}

Word alternating_twos(size_t first, size_t len) {
    Word out;
    for (size_t k = first; k < first + len; ++k) out.push_back(GaussianInt(k % 2 ? -2 : 2));
    return out;
}

std::optional<std::pair<size_t, size_t>> detect_period(const Word& a) {
    const size_t L = a.size();
    for (size_t total = 1; total <= L; ++total)
        for (size_t p = 1; p <= total; ++p) {
            size_t pre = total - p;
            if (pre + 2 * p > L) continue;
            bool ok = true;
            for (size_t i = pre; i + p < L && ok; ++i) ok = a[i] == a[i + p];
            if (ok) return std::make_pair(pre, p);
        }
    return std::nullopt;
}

namespace {

// log |q| from the exact norm
void log_abs(Real& out, const GaussianInt& q) {
    mpfr_set_z(out.get(), q.norm().get_mpz_t(), MPFR_RNDN);
    mpfr_log(out.get(), out.get(), MPFR_RNDN);
    mpfr_div_2ui(out.get(), out.get(), 1, MPFR_RNDN);
}

}  // namespace

std::vector<GrowthRow> check_growth_inequality(const DigitSeq& a, const std::vector<std::array<size_t, 3>>& wuv,
                                               const mpq_class& eps) {
    if (eps < 0) fail(ErrorKind::PreconditionViolated, "eps must be >= 0");
    size_t need = 0;
    for (const auto& t : wuv) need = std::max(need, 2 * (t[0] + t[1] + t[2]));
    auto cv = convergents(a.prefix(need));
    std::vector<GrowthRow> rows;
    const mpfr_prec_t prec = 256;
    for (const auto& t : wuv) {
        GrowthRow r{t[0], t[1], t[2], 0, 0, false};
        const auto& q1 = cv[2 * r.w].q;
        const auto& q2 = cv[2 * (r.w + r.u + r.v)].q;
        // psi^(2u) = phi^u
        Real lhs(prec), rhs(prec), tmp(prec), e(prec);
        mpfr_set_ui(tmp.get(), 5, MPFR_RNDN);
        mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
        mpfr_add_ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
        mpfr_div_2ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
        mpfr_log(lhs.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul_ui(lhs.get(), lhs.get(), static_cast<unsigned long>(r.u), MPFR_RNDN);
        log_abs(rhs, q1);
        log_abs(tmp, q2);
        mpfr_add(rhs.get(), rhs.get(), tmp.get(), MPFR_RNDN);
        mpfr_set_q(e.get(), eps.get_mpq_t(), MPFR_RNDN);
        mpfr_mul(rhs.get(), rhs.get(), e.get(), MPFR_RNDN);
        r.lhs_log = lhs.to_double();
        r.rhs_log = rhs.to_double();
        r.holds = eps == 0 || mpfr_cmp(lhs.get(), rhs.get()) >= 0;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace hcf
