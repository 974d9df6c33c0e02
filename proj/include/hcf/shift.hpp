#pragma once

#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hcf/geometry.hpp"

namespace hcf {

using Word = std::vector<GaussianInt>;

std::string word_str(const Word& w);
json word_json(const Word& w);
Word word_from_json(const json& j);
void check_digits(const Word& w);  // InvalidDigit
Word apply_symmetry(const Symmetry& s, const Word& w);

// Finite word or an infinite rule; positions are 0-based.
class DigitSeq {
public:
    DigitSeq() = default;
    DigitSeq(Word w);
    DigitSeq(std::function<GaussianInt(size_t)> f, std::string description);
    static DigitSeq periodic(Word preperiod, Word period);

    bool finite() const { return !rule_; }
    size_t size() const { return word_.size(); }  // finite only
    GaussianInt at(size_t i) const;
    Word prefix(size_t n) const;
    const std::string& description() const { return desc_; }

private:
    Word word_;
    std::function<GaussianInt(size_t)> rule_;
    std::string desc_;
};

enum class WordClass {
    RegularFull,
    RegularNotFull,
    IrregularValid,
    ExtremelyIrregular,
    Invalid,
    ValidUnknownDegenerate,
};
const char* class_name(WordClass c);
WordClass class_from_name(const std::string& s);
bool is_regular(WordClass c);
bool is_valid(WordClass c);

// The 13 open prototype sets: the open square minus closed unit disks.
//  0: SQ   1-4: D(1), D(i), D(-1), D(-i)   5-8: D(1+i), D(-1+i), D(-1-i), D(1-i)
//  9-12: D(1)+D(i), D(i)+D(-1), D(-1)+D(-i), D(-i)+D(1)
constexpr int kStateCount = 13;
constexpr int kSQ = 0;
constexpr int kNoEdge = -1;

struct PrototypeState {
    int id = kSQ;
    std::vector<GaussianInt> excluded() const;
    std::string name() const;
    Region region() const;
};

Mobius step_map(const GaussianInt& b);  // w -> 1/(w + b)
// Open prototype transition: interior of T[P ∩ C_1(b)].
Region open_transition(const Region& p, const GaussianInt& b);
// Half-open prototype transition: T[P ∩ C_1(b)].
Region prototype_step(const Region& p, const GaussianInt& b);
int match_state(const Region& open_region);  // CatalogueViolation

class SoficGraph {
public:
    static const SoficGraph& instance();

    int next(int state, const GaussianInt& b) const;
    static int next_geometric(int state, const GaussianInt& b);
    static int large_digit_rule(int state, const GaussianInt& b);
    // Digits with norm above cut(state) follow the large-digit rule.
    long cut(int state) const;
    size_t exception_edge_count() const;
    size_t exception_entry_count() const;
    std::vector<int> reachable_from_sq() const;
    std::string export_text() const;
    json export_json() const;

    static constexpr long kExactNorm = 18;

private:
    SoficGraph();
    // Small-digit edges are computed on first use; the full table only for cuts and exports.
    void ensure_full() const;
    static constexpr int kUnknown = -2;
    mutable std::mutex mu_;
    mutable std::array<std::array<int, 81>, kStateCount> lazy_;
    mutable std::once_flag full_once_;
    mutable std::vector<std::vector<std::pair<GaussianInt, int>>> table_;
    mutable long cut_[kStateCount];
};

struct Walk {
    std::vector<int> states;  // states[0] = start, states[k] after k digits
    size_t regular_len = 0;   // longest regular prefix
};
Walk walk(const Word& w, int start = kSQ);

struct Classification {
    WordClass tag;
    std::vector<int> states;
    size_t regular_len = 0;
    std::optional<Region> prototype;  // half-open prototype when computed
};
Classification classify_report(const Word& w);
WordClass classify(const Word& w);
// Oracle: classification from the direct cylinder construction.
WordClass classify_direct(const Word& w);

bool is_regular_prefix_closed(const Word& w);
bool factor_check(const Word& w);

Region prototype_region(const Word& w);       // InvalidWord if empty
Region open_prototype_region(const Word& w);  // interior
Region cylinder_region(const Word& w);        // image of the prototype
Region cylinder_direct(const Word& w);        // F ∩ ιτ_{a1}F ∩ ...

Word concat_regular(const Word& u, const Word& v);
GaussianInt find_full_extension(const Word& w);
bool in_witness_set(const Word& w);  // regular with pm(last) >= 3
mpq_class shift_distance(const DigitSeq& a, const DigitSeq& b, size_t horizon);

}  // namespace hcf
