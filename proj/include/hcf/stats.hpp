#pragma once

#include <cstdint>
#include <vector>

#include "hcf/shift.hpp"

namespace hcf {

// #{j in 1..N : (x_j, ..., x_{j+|w|-1}) = w}
size_t pattern_count(const DigitSeq& x, const Word& w, size_t n);
mpq_class hamming(const Word& v, const Word& w);  // LengthMismatch

// Digits of a Lebesgue-uniform point of F drawn from (seed, index), certified with
// balls. Stops early at a boundary it cannot decide; `skipped` reports that.
struct Orbit {
    Word digits;
    bool skipped = false;
};
Orbit sample_orbit(uint64_t seed, uint64_t index, size_t len);

struct MeasureEstimate {
    Word word;
    double estimate = 0;
    double stderr_ = 0;
    size_t samples = 0;        // samples that contributed
    size_t boundary_skips = 0; // orbits cut short at an undecidable digit
    size_t orbit_len = 0;
    uint64_t seed = 0;
};
json to_json(const MeasureEstimate& m);

// Shared orbits for every word; deterministic in (samples, orbit_len, seed).
std::vector<MeasureEstimate> estimate_measures(const std::vector<Word>& ws, size_t samples, size_t orbit_len,
                                               uint64_t seed);
MeasureEstimate estimate_measure(const Word& w, size_t samples, size_t orbit_len, uint64_t seed);  // NotRegular

// Level-1 cylinders of digits with norm <= max_norm plus one bucket (empty word) for the rest.
std::vector<MeasureEstimate> estimate_level1_partition(long max_norm, size_t samples, size_t orbit_len,
                                                       uint64_t seed);

struct NormalityRow {
    Word pattern;
    size_t count = 0;
    double frequency = 0;
    MeasureEstimate mu;
    double z = 0;
};
std::vector<NormalityRow> normality_report(const DigitSeq& x, const std::vector<Word>& patterns, size_t n,
                                           size_t samples, size_t orbit_len, uint64_t seed);
json to_json(const NormalityRow& r);
std::string normality_csv(const std::vector<NormalityRow>& rows);

}  // namespace hcf
