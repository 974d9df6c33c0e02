#include "hcf/seqspec.hpp"

#include <cstdlib>

namespace hcf {

int fibonacci_bit(size_t n) {
    // s_n = 1 - (floor((n+1)/phi) - floor(n/phi)), with floor(k/phi) = floor((sqrt(5k^2) - k)/2)
    auto fl = [](size_t k) {
        mpz_class kk(static_cast<unsigned long>(k)), s;
        mpz_class t = 5 * kk * kk;
        mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
        mpz_class r = s - kk;
        mpz_fdiv_q_2exp(r.get_mpz_t(), r.get_mpz_t(), 1);
        return r;
    };
    return 1 - static_cast<int>(mpz_class(fl(n + 1) - fl(n)).get_si());
}

IntSeq IntSeq::from_json(const json& spec) {
    IntSeq s;
    s.spec_ = spec;
    if (!spec.is_object() || !spec.contains("rule")) fail(ErrorKind::Usage, "integer sequence spec needs a \"rule\"");
    std::string rule = spec.at("rule").get<std::string>();
    s.asserted_ = spec.value("assert_aperiodic", false);
    try {
        if (rule == "power-perturbation") {
            long base = spec.at("base").get<long>(), alt = spec.at("alt").get<long>();
            long p = spec.value("power", 2L);
            if (p < 2) fail(ErrorKind::Usage, "power must be >= 2");
            if (base == alt) fail(ErrorKind::Usage, "base and alt must differ");
            s.f_ = [base, alt, p](size_t n) {
                size_t k = n;
                while (k % static_cast<size_t>(p) == 0) k /= static_cast<size_t>(p);
                return k == 1 ? alt : base;
            };
            s.certified_ = true;
        } else if (rule == "fibonacci") {
            auto v = spec.at("values").get<std::vector<long>>();
            if (v.size() != 2 || v[0] == v[1]) fail(ErrorKind::Usage, "fibonacci needs two distinct values");
            s.f_ = [v](size_t n) { return v[static_cast<size_t>(fibonacci_bit(n))]; };
            s.certified_ = true;
        } else if (rule == "periodic" || rule == "explicit") {
            auto v = spec.at("values").get<std::vector<long>>();
            if (v.empty()) fail(ErrorKind::Usage, rule + " needs values");
            if (rule == "explicit") s.limit_ = v.size();
            s.f_ = [v](size_t n) { return v[(n - 1) % v.size()]; };
        } else {
            fail(ErrorKind::Usage, "unknown integer rule " + rule);
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::Usage, std::string("bad integer sequence spec: ") + e.what());
    }
    return s;
}

long IntSeq::at(size_t n) const {
    if (n == 0) fail(ErrorKind::PreconditionViolated, "sequences are 1-based");
    if (limit_ && n > limit_)
        fail(ErrorKind::HypothesisViolated, "explicit sequence has only " + std::to_string(limit_) + " terms");
    return f_(n);
}

DigitSeq example1_sequence(const IntSeq& b) {
    return DigitSeq(
        [b](size_t i) {
            if (i % 2 == 0) return GaussianInt(-2);
            return GaussianInt(mpz_class(1), mpz_class(b.at(i / 2 + 1)));
        },
        "(-2, 1+iB_1, -2, 1+iB_2, ...)");
}

namespace {

void require_aperiodic(const IntSeq& b, std::vector<std::string>& warnings, const std::string& what) {
    if (b.certified_aperiodic()) return;
    if (b.user_asserted()) {
        warnings.push_back(what + " aperiodicity is user-asserted, not certified");
        return;
    }
    fail(ErrorKind::HypothesisViolated, what + " has no aperiodicity certificate");
}

}  // namespace

GenResult gen_theorem14(const json& b_spec, size_t length) {
    IntSeq b = IntSeq::from_json(b_spec);
    GenResult r;
    require_aperiodic(b, r.warnings, "B");
    for (size_t n = 1; 2 * n <= length + 1; ++n)
        if (std::labs(b.at(n)) < 3)
            fail(ErrorKind::HypothesisViolated, "|B_" + std::to_string(n) + "| = " + std::to_string(std::labs(b.at(n))) + " < 3");
    r.warnings.push_back("rep(B) < infinity is not checkable from a prefix");
    r.seq = example1_sequence(b);
    r.prefix = r.seq.prefix(length);
    return r;
}

GaussianInt b_digit(long b, const std::string& b_form) {
    if (b_form == "iB") return GaussianInt(mpz_class(0), mpz_class(b));
    if (b_form == "B") return GaussianInt(mpz_class(b), mpz_class(0));
    if (b_form == "1+iB") return GaussianInt(mpz_class(1), mpz_class(b));
    fail(ErrorKind::Usage, "unknown b_form " + b_form);
}

DigitSeq a_sequence(const json& a_spec) {
    if (!a_spec.is_object() || !a_spec.contains("values")) fail(ErrorKind::Usage, "A spec needs \"values\"");
    std::string rule = a_spec.value("rule", std::string("periodic"));
    if (rule != "periodic" && rule != "explicit") fail(ErrorKind::Usage, "unknown A rule " + rule);
    Word v = word_from_json(a_spec.at("values"));
    if (v.empty()) fail(ErrorKind::Usage, "A needs values");
    for (const auto& a : v)
        if (a.norm() != 4 || (a.re != 0 && a.im != 0))
            fail(ErrorKind::HypothesisViolated, "A digit " + a.str() + " not in {2, 2i, -2, -2i}");
    if (rule == "explicit") return DigitSeq(v);
    return DigitSeq::periodic({}, v);
}

GenResult gen_theorem_new(const json& a_spec, const json& b_spec, size_t length, const std::string& b_form) {
    DigitSeq a = a_sequence(a_spec);
    IntSeq b = IntSeq::from_json(b_spec);
    b_digit(0, b_form);
    GenResult r;
    // C periodic forces B periodic, so a certificate for B covers C
    require_aperiodic(b, r.warnings, "C");
    r.warnings.push_back("rep(C) < infinity is not checkable from a prefix");
    r.seq = DigitSeq(
        [a, b, b_form](size_t i) { return i % 2 == 0 ? a.at(i / 2) : b_digit(b.at(i / 2 + 1), b_form); },
        "s(A, " + b_form + ")");
    r.prefix = r.seq.prefix(length);
    check_digits(r.prefix);
    if (classify(r.prefix) == WordClass::Invalid) fail(ErrorKind::NotValid, "generated prefix " + word_str(r.prefix) + " is invalid");
    return r;
}

DigitSeq parse_sequence(const json& j) {
    try {
        if (j.is_array()) return DigitSeq(word_from_json(j));
        if (!j.is_object() || !j.contains("family")) fail(ErrorKind::Usage, "expected a digit array or a generator spec");
        std::string fam = j.at("family").get<std::string>();
        if (fam == "periodic") return DigitSeq::periodic(word_from_json(j.value("pre", json::array())), word_from_json(j.at("period")));
        if (fam == "example1") return example1_sequence(IntSeq::from_json(j.at("B")));
        if (fam == "thm14") return gen_theorem14(j.at("B"), 0).seq;
        if (fam == "new")
            return gen_theorem_new(j.at("A"), j.at("B"), 0, j.value("b_form", std::string("iB"))).seq;
        fail(ErrorKind::Usage, "unknown family " + fam);
    } catch (const json::exception& e) {
        fail(ErrorKind::Usage, std::string("bad sequence spec: ") + e.what());
    }
}

}  // namespace hcf
