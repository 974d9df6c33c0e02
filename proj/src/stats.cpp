#include "hcf/stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "hcf/ball.hpp"

namespace hcf {

size_t pattern_count(const DigitSeq& x, const Word& w, size_t n) {
    if (w.empty()) return 0;
    size_t avail = n + w.size() - 1;
    if (x.finite()) avail = std::min(avail, x.size());
    Word p = x.prefix(avail);
    size_t c = 0;
    for (size_t j = 0; j < n && j + w.size() <= p.size(); ++j)
        if (std::equal(w.begin(), w.end(), p.begin() + static_cast<long>(j))) ++c;
    return c;
}

mpq_class hamming(const Word& v, const Word& w) {
    if (v.size() != w.size() || v.empty())
        fail(ErrorKind::LengthMismatch, std::to_string(v.size()) + " vs " + std::to_string(w.size()));
    unsigned long d = 0;
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != w[j]) ++d;
    mpq_class q(d, static_cast<unsigned long>(v.size()));
    q.canonicalize();
    return q;
}

Orbit sample_orbit(uint64_t seed, uint64_t index, size_t len) {
    std::seed_seq ss{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(index),
                     static_cast<uint32_t>(index >> 32)};
    std::mt19937_64 rng(ss);
    const mpfr_prec_t prec = 64 + 4 * static_cast<mpfr_prec_t>(len);
    auto coord = [&]() {
        mpz_class k = 0;
        for (mpfr_prec_t b = 0; b < prec; b += 64) {
            k <<= 64;
            uint64_t r = rng();
            k += mpz_class(static_cast<unsigned long>(r >> 32)) * mpz_class(1UL << 32) +
                 mpz_class(static_cast<unsigned long>(r & 0xffffffffUL));
        }
        mpz_class den = 1;
        den <<= static_cast<mp_bitcnt_t>(((prec + 63) / 64) * 64);
        mpq_class q(k, den);
        q.canonicalize();
        return mpq_class(q - mpq_class(1, 2));
    };
    mpq_class re = coord(), im = coord();
    ComplexBall x = ComplexBall::from_gaussian_rational(re, im, prec);
    Orbit o;
    o.digits.reserve(len);
    try {
        while (o.digits.size() < len) {
            ComplexBall inv = x.inverse();
            GaussianInt a = nearest_gaussian(inv);
            o.digits.push_back(a);
            x = inv.sub_gaussian(a);
            // about 4 bits are consumed per step
            if (o.digits.size() % 32 == 0)
                x.round_to(64 + 4 * static_cast<mpfr_prec_t>(len - o.digits.size()));
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Undecidable) throw;
        o.skipped = true;
    }
    return o;
}

json to_json(const MeasureEstimate& m) {
    return json{{"word", word_json(m.word)},   {"estimate", m.estimate},   {"stderr", m.stderr_},
                {"samples", m.samples},        {"boundary_skips", m.boundary_skips},
                {"orbit_len", m.orbit_len},    {"seed", m.seed}};
}

namespace {

std::vector<Orbit> sample_orbits(size_t samples, size_t len, uint64_t seed) {
    std::vector<Orbit> out(samples);
    std::atomic<size_t> next{0};
    unsigned nt = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&]() {
            for (size_t i = next++; i < samples; i = next++) out[i] = sample_orbit(seed, i, len);
        });
    for (auto& t : pool) t.join();
    return out;
}

// Per-sample frequencies summed in index order, so threads cannot change the result.
template <class Match>
MeasureEstimate aggregate(const std::vector<Orbit>& orbits, size_t wlen, size_t orbit_len, Match match) {
    MeasureEstimate m;
    m.orbit_len = orbit_len;
    double s = 0, s2 = 0;
    for (const auto& o : orbits) {
        if (o.skipped) ++m.boundary_skips;
        if (o.digits.size() < wlen) continue;
        size_t windows = std::min(orbit_len, o.digits.size() - wlen + 1);
        size_t c = 0;
        for (size_t j = 0; j < windows; ++j)
            if (match(o.digits, j)) ++c;
        double f = static_cast<double>(c) / static_cast<double>(windows);
        s += f;
        s2 += f * f;
        ++m.samples;
    }
    if (m.samples) {
        double n = static_cast<double>(m.samples);
        m.estimate = s / n;
        double var = m.samples > 1 ? std::max(0.0, (s2 - s * s / n) / (n - 1)) : 0.0;
        m.stderr_ = std::sqrt(var / n);
    }
    return m;
}

size_t max_len(const std::vector<Word>& ws) {
    size_t l = 1;
    for (const auto& w : ws) l = std::max(l, w.size());
    return l;
}

}  // namespace

std::vector<MeasureEstimate> estimate_measures(const std::vector<Word>& ws, size_t samples, size_t orbit_len,
                                               uint64_t seed) {
    for (const auto& w : ws) {
        if (w.empty()) fail(ErrorKind::PreconditionViolated, "empty pattern");
        check_digits(w);
        if (walk(w).regular_len < w.size()) fail(ErrorKind::NotRegular, word_str(w) + " is not regular");
    }
    std::vector<MeasureEstimate> out;
    if (ws.empty()) return out;
    auto orbits = sample_orbits(samples, orbit_len + max_len(ws) - 1, seed);
    for (const auto& w : ws) {
        auto m = aggregate(orbits, w.size(), orbit_len, [&](const Word& d, size_t j) {
            return std::equal(w.begin(), w.end(), d.begin() + static_cast<long>(j));
        });
        m.word = w;
        m.seed = seed;
        out.push_back(std::move(m));
    }
    return out;
}

MeasureEstimate estimate_measure(const Word& w, size_t samples, size_t orbit_len, uint64_t seed) {
    return estimate_measures({w}, samples, orbit_len, seed).front();
}

std::vector<MeasureEstimate> estimate_level1_partition(long max_norm, size_t samples, size_t orbit_len,
                                                       uint64_t seed) {
    auto orbits = sample_orbits(samples, orbit_len, seed);
    std::vector<MeasureEstimate> out;
    long r = static_cast<long>(std::sqrt(static_cast<double>(max_norm))) + 1;
    std::vector<GaussianInt> ds;
    for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y) {
            GaussianInt b(x, y);
            if (is_digit(b) && x * x + y * y <= max_norm) ds.push_back(b);
        }
    std::sort(ds.begin(), ds.end(), [](const GaussianInt& a, const GaussianInt& b) {
        return a.norm() != b.norm() ? a.norm() < b.norm() : a < b;
    });
    for (const auto& b : ds) {
        auto m = aggregate(orbits, 1, orbit_len, [&](const Word& d, size_t j) { return d[j] == b; });
        m.word = {b};
        m.seed = seed;
        out.push_back(std::move(m));
    }
    auto tail = aggregate(orbits, 1, orbit_len, [&](const Word& d, size_t j) { return d[j].norm() > max_norm; });
    tail.seed = seed;
    out.push_back(std::move(tail));
    return out;
}

std::vector<NormalityRow> normality_report(const DigitSeq& x, const std::vector<Word>& patterns, size_t n,
                                           size_t samples, size_t orbit_len, uint64_t seed) {
    std::vector<NormalityRow> rows;
    if (patterns.empty()) return rows;
    auto mus = estimate_measures(patterns, samples, orbit_len, seed);
    for (size_t k = 0; k < patterns.size(); ++k) {
        NormalityRow r;
        r.pattern = patterns[k];
        r.count = pattern_count(x, patterns[k], n);
        r.frequency = n ? static_cast<double>(r.count) / static_cast<double>(n) : 0.0;
        r.mu = mus[k];
        double mu = r.mu.estimate;
        double var = (n ? mu * (1 - mu) / static_cast<double>(n) : 0.0) + r.mu.stderr_ * r.mu.stderr_;
        r.z = (r.frequency - mu) / std::sqrt(std::max(var, 1e-24));
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const NormalityRow& r) {
    return json{{"pattern", word_json(r.pattern)}, {"count", r.count},  {"frequency", r.frequency},
                {"mu_estimate", r.mu.estimate},    {"mu_stderr", r.mu.stderr_}, {"z", r.z}};
}

std::string normality_csv(const std::vector<NormalityRow>& rows) {
    std::ostringstream os;
    os << "pattern,count,frequency,mu_estimate,mu_stderr,z\n";
    for (const auto& r : rows) {
        std::string p = word_str(r.pattern);
        os << '"' << p << "\"," << r.count << ',' << r.frequency << ',' << r.mu.estimate << ',' << r.mu.stderr_ << ','
           << r.z << '\n';
    }
    return os.str();
}

}  // namespace hcf
