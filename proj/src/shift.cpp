#include "hcf/shift.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "hcf/engine.hpp"

namespace hcf {

std::string word_str(const Word& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + w[i].str();
    return out + ")";
}

json word_json(const Word& w) {
    json j = json::array();
    for (const auto& a : w) j.push_back(to_json(a));
    return j;
}

Word word_from_json(const json& j) {
    if (!j.is_array()) fail(ErrorKind::Usage, "word must be an array of [re, im] pairs");
    Word w;
    for (const auto& e : j) w.push_back(gaussian_from_json(e));
    return w;
}

void check_digits(const Word& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (!is_digit(w[i])) fail(ErrorKind::InvalidDigit, w[i].str() + " at position " + std::to_string(i + 1));
}

Word apply_symmetry(const Symmetry& s, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const auto& a : w) out.push_back(apply_symmetry(s, a));
    return out;
}

DigitSeq::DigitSeq(Word w) : word_(std::move(w)) {}

DigitSeq::DigitSeq(std::function<GaussianInt(size_t)> f, std::string description)
    : rule_(std::move(f)), desc_(std::move(description)) {}

DigitSeq DigitSeq::periodic(Word preperiod, Word period) {
    if (period.empty()) return DigitSeq(std::move(preperiod));
    std::string d = "periodic " + word_str(preperiod) + word_str(period);
    return DigitSeq(
        [pre = std::move(preperiod), per = std::move(period)](size_t i) {
            return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
        },
        d);
}

GaussianInt DigitSeq::at(size_t i) const {
    if (rule_) return rule_(i);
    if (i >= word_.size())
        fail(ErrorKind::PreconditionViolated, "sequence has only " + std::to_string(word_.size()) + " digits");
    return word_[i];
}

Word DigitSeq::prefix(size_t n) const {
    Word w;
    w.reserve(n);
    for (size_t i = 0; i < n; ++i) w.push_back(at(i));
    return w;
}

const char* class_name(WordClass c) {
    switch (c) {
        case WordClass::RegularFull: return "regular-full";
        case WordClass::RegularNotFull: return "regular-not-full";
        case WordClass::IrregularValid: return "irregular-valid";
        case WordClass::ExtremelyIrregular: return "extremely-irregular";
        case WordClass::Invalid: return "invalid";
        case WordClass::ValidUnknownDegenerate: return "valid-unknown-degenerate";
    }
    return "?";
}

WordClass class_from_name(const std::string& s) {
    for (auto c : {WordClass::RegularFull, WordClass::RegularNotFull, WordClass::IrregularValid,
                   WordClass::ExtremelyIrregular, WordClass::Invalid, WordClass::ValidUnknownDegenerate})
        if (s == class_name(c)) return c;
    fail(ErrorKind::Usage, "unknown class '" + s + "'");
}

bool is_regular(WordClass c) { return c == WordClass::RegularFull || c == WordClass::RegularNotFull; }
bool is_valid(WordClass c) { return c != WordClass::Invalid; }

// ---------------------------------------------------------------------------

namespace {
const GaussianInt kUnits[4] = {GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(0, -1)};
const GaussianInt kCorners[4] = {GaussianInt(1, 1), GaussianInt(-1, 1), GaussianInt(-1, -1), GaussianInt(1, -1)};

const std::vector<Region>& catalogue() {
    static const std::vector<Region> cat = [] {
        std::vector<Region> out;
        for (int id = 0; id < kStateCount; ++id) {
            std::vector<Constraint> cs = Region::square_open().constraints();
            for (const auto& u : PrototypeState{id}.excluded())
                cs.push_back(Region::exterior_open(u).constraints().front());
            out.emplace_back(cs, true);
        }
        return out;
    }();
    return cat;
}
}  // namespace

std::vector<GaussianInt> PrototypeState::excluded() const {
    if (id == kSQ) return {};
    if (id <= 4) return {kUnits[id - 1]};
    if (id <= 8) return {kCorners[id - 5]};
    int k = id - 9;
    return {kUnits[k], kUnits[(k + 1) % 4]};
}

std::string PrototypeState::name() const {
    std::string out = "SQ";
    for (const auto& u : excluded()) out += "-D(" + u.str() + ")";
    return out;
}

Region PrototypeState::region() const { return catalogue().at(id); }

Mobius step_map(const GaussianInt& b) { return {GaussianInt(0), GaussianInt(1), GaussianInt(1), b, false}; }

namespace {
Region pulled_with(const Region& base, const Region& p, const GaussianInt& b) {
    if (p.is_empty()) return Region::empty();
    Mobius n = step_map(b);
    std::vector<Constraint> cs = base.constraints();
    for (const auto& c : p.constraints()) cs.push_back({pullback(c.f, n), c.rel});
    return Region(cs, true, p.field());
}
}  // namespace

Region open_transition(const Region& p, const GaussianInt& b) { return pulled_with(Region::square_open(), p, b); }

Region prototype_step(const Region& p, const GaussianInt& b) { return pulled_with(Region::square(), p, b); }

int match_state(const Region& open_region) {
    const auto& cat = catalogue();
    for (int id = 0; id < kStateCount; ++id)
        if (cat[id] == open_region) return id;
    for (int id = 0; id < kStateCount; ++id)
        if (same_set(cat[id], open_region)) return id;
    fail(ErrorKind::CatalogueViolation, "open set outside the catalogue: " + region_json(open_region).dump());
}

int SoficGraph::next_geometric(int state, const GaussianInt& b) {
    Region r = open_transition(PrototypeState{state}.region(), b);
    if (!r.has_interior()) return kNoEdge;
    return match_state(r);
}

int SoficGraph::large_digit_rule(int state, const GaussianInt& b) {
    for (const auto& u : PrototypeState{state}.excluded()) {
        if (u == kUnits[0] && b.re > 0) return kNoEdge;
        if (u == kUnits[1] && b.im < 0) return kNoEdge;
        if (u == kUnits[2] && b.re < 0) return kNoEdge;
        if (u == kUnits[3] && b.im > 0) return kNoEdge;
    }
    return kSQ;
}

SoficGraph::SoficGraph() : table_(kStateCount) {
    for (auto& row : lazy_) row.fill(kUnknown);
}

const SoficGraph& SoficGraph::instance() {
    static const SoficGraph g;
    return g;
}

int SoficGraph::next(int state, const GaussianInt& b) const {
    if (!is_digit(b)) fail(ErrorKind::InvalidDigit, b.str());
    if (b.norm() > kExactNorm) return large_digit_rule(state, b);
    const size_t k = static_cast<size_t>((b.re.get_si() + 4) * 9 + b.im.get_si() + 4);
    std::lock_guard<std::mutex> lock(mu_);
    int& t = lazy_[state][k];
    if (t == kUnknown) t = next_geometric(state, b);
    return t;
}

void SoficGraph::ensure_full() const {
    std::call_once(full_once_, [this] {
        for (int s = 0; s < kStateCount; ++s) {
            cut_[s] = 0;
            for (long x = -4; x <= 4; ++x)
                for (long y = -4; y <= 4; ++y) {
                    GaussianInt b(x, y);
                    long n = x * x + y * y;
                    if (!is_digit(b) || n > kExactNorm) continue;
                    int t = next(s, b);
                    table_[s].push_back({b, t});
                    if (t != large_digit_rule(s, b)) cut_[s] = std::max(cut_[s], n);
                }
            std::sort(table_[s].begin(), table_[s].end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
    });
}

long SoficGraph::cut(int state) const {
    ensure_full();
    return cut_[state];
}

size_t SoficGraph::exception_entry_count() const {
    ensure_full();
    size_t n = 0;
    for (int s = 0; s < kStateCount; ++s)
        for (const auto& [b, t] : table_[s])
            if (b.norm() <= cut_[s]) ++n;
    return n;
}

size_t SoficGraph::exception_edge_count() const {
    ensure_full();
    size_t n = 0;
    for (int s = 0; s < kStateCount; ++s)
        for (const auto& [b, t] : table_[s])
            if (b.norm() <= cut_[s] && t != kNoEdge) ++n;
    return n;
}

std::vector<int> SoficGraph::reachable_from_sq() const {
    ensure_full();
    std::vector<bool> seen(kStateCount, false);
    std::deque<int> todo{kSQ};
    seen[kSQ] = true;
    while (!todo.empty()) {
        int s = todo.front();
        todo.pop_front();
        for (const auto& [b, t] : table_[s])
            if (t != kNoEdge && !seen[t]) {
                seen[t] = true;
                todo.push_back(t);
            }
    }
    std::vector<int> out;
    for (int s = 0; s < kStateCount; ++s)
        if (seen[s]) out.push_back(s);
    return out;
}

std::string SoficGraph::export_text() const {
    ensure_full();
    std::ostringstream os;
    os << "# vertices: id name\n";
    for (int s = 0; s < kStateCount; ++s) os << "v " << s << " " << PrototypeState{s}.name() << "\n";
    os << "# edges: from to digit (digits with norm <= cut)\n";
    for (int s = 0; s < kStateCount; ++s)
        for (const auto& [b, t] : table_[s])
            if (b.norm() <= cut_[s] && t != kNoEdge) os << "e " << s << " " << t << " " << b.str() << "\n";
    os << "# large digits: norm > cut(state); target SQ unless a half-plane of the state excludes the tile\n";
    for (int s = 0; s < kStateCount; ++s) os << "cut " << s << " " << cut_[s] << "\n";
    return os.str();
}

json SoficGraph::export_json() const {
    ensure_full();
    json v = json::array(), e = json::array(), cuts = json::array();
    for (int s = 0; s < kStateCount; ++s) {
        json ex = json::array();
        for (const auto& u : PrototypeState{s}.excluded()) ex.push_back(to_json(u));
        v.push_back({{"id", s}, {"name", PrototypeState{s}.name()}, {"excluded_disks", ex}});
        cuts.push_back(cut_[s]);
        for (const auto& [b, t] : table_[s])
            if (b.norm() <= cut_[s] && t != kNoEdge) e.push_back({{"from", s}, {"to", t}, {"digit", to_json(b)}});
    }
    return {{"vertices", v}, {"edges", e}, {"cut_norm", cuts}, {"exception_edges", exception_edge_count()}};
}

// ---------------------------------------------------------------------------

Walk walk(const Word& w, int start) {
    check_digits(w);
    const auto& g = SoficGraph::instance();
    Walk out;
    out.states.push_back(start);
    for (const auto& b : w) {
        int t = g.next(out.states.back(), b);
        if (t == kNoEdge) break;
        out.states.push_back(t);
        ++out.regular_len;
    }
    return out;
}

namespace {
WordClass degenerate_class(const Region& r) {
    switch (r.kind()) {
        case Kind::Empty: return WordClass::Invalid;
        case Kind::Segment: return WordClass::IrregularValid;
        case Kind::Point: return r.shape().points.size() == 1 ? WordClass::ExtremelyIrregular : WordClass::IrregularValid;
        case Kind::TwoDim: break;
    }
    fail(ErrorKind::InternalInvariantViolation, "interior found where the graph has no edge");
}
}  // namespace

Classification classify_report(const Word& w) {
    Walk wk = walk(w);
    Classification c{WordClass::Invalid, wk.states, wk.regular_len, std::nullopt};
    if (wk.regular_len == w.size()) {
        c.tag = wk.states.back() == kSQ ? WordClass::RegularFull : WordClass::RegularNotFull;
        return c;
    }
    try {
        Region p = Region::square();
        for (const auto& b : w) {
            p = prototype_step(p, b);
            if (p.is_empty()) break;
        }
        c.tag = degenerate_class(p);
        c.prototype = p;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FieldOverflow) throw;
        c.tag = WordClass::ValidUnknownDegenerate;
    }
    return c;
}

WordClass classify(const Word& w) { return classify_report(w).tag; }

namespace {
Mobius cylinder_map(const Word& w) {
    auto cv = convergents(w);
    const auto& last = cv.back();
    GaussianInt pp = cv.size() >= 2 ? cv[cv.size() - 2].p : GaussianInt(1);
    GaussianInt qp = cv.size() >= 2 ? cv[cv.size() - 2].q : GaussianInt(0);
    return {pp, last.p, qp, last.q, false};
}

Mobius inverse_map(const Mobius& m) { return {m.d, -m.b, -m.c, m.a, false}; }

std::vector<Constraint> pulled(const std::vector<Constraint>& cs, const Mobius& n) {
    std::vector<Constraint> out;
    for (const auto& c : cs) out.push_back({pullback(c.f, n), c.rel});
    return out;
}
}  // namespace

Region cylinder_direct(const Word& w) {
    check_digits(w);
    const auto sq = Region::square().constraints();
    Region r = Region::square();
    for (size_t k = 1; k <= w.size(); ++k) {
        Word pre(w.begin(), w.begin() + static_cast<long>(k));
        auto cs = r.constraints();
        auto more = pulled(sq, inverse_map(cylinder_map(pre)));
        cs.insert(cs.end(), more.begin(), more.end());
        r = Region(cs, true);
        if (r.is_empty()) return Region::empty();
    }
    return r;
}

WordClass classify_direct(const Word& w) {
    Region c = cylinder_direct(w);
    if (c.is_empty()) return WordClass::Invalid;
    if (!c.has_interior()) return degenerate_class(c);
    auto cs = Region::square_open().constraints();
    auto more = pulled(c.interior_region().constraints(), cylinder_map(w));
    cs.insert(cs.end(), more.begin(), more.end());
    Region proto(cs, true);
    return same_set(proto, Region::square_open()) ? WordClass::RegularFull : WordClass::RegularNotFull;
}

bool is_regular_prefix_closed(const Word& w) { return walk(w).regular_len == w.size(); }

bool factor_check(const Word& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (!is_regular_prefix_closed(Word(w.begin() + static_cast<long>(i), w.end()))) return false;
    return true;
}

Region prototype_region(const Word& w) {
    check_digits(w);
    Region p = Region::square();
    for (const auto& b : w) {
        p = prototype_step(p, b);
        if (p.is_empty()) fail(ErrorKind::InvalidWord, word_str(w) + " is not valid");
    }
    return p;
}

Region open_prototype_region(const Word& w) {
    Walk wk = walk(w);
    if (wk.regular_len < w.size()) return Region::empty();
    return PrototypeState{wk.states.back()}.region();
}

Region cylinder_region(const Word& w) {
    Region p = prototype_region(w);
    if (w.empty()) return p;
    auto sq = Region::square().constraints();
    auto cs = sq;
    cs.insert(cs.end(), p.constraints().begin(), p.constraints().end());
    auto out = pulled(cs, inverse_map(cylinder_map(w)));
    out.insert(out.end(), sq.begin(), sq.end());
    return Region(out, true);
}

Word concat_regular(const Word& u, const Word& v) {
    if (u.empty() || pm(u.back()) < 3) fail(ErrorKind::PreconditionViolated, "last digit of u needs Pm >= 3");
    if (!is_regular_prefix_closed(u)) fail(ErrorKind::PreconditionViolated, "u is not regular");
    if (!is_regular_prefix_closed(v)) fail(ErrorKind::PreconditionViolated, "v is not regular");
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    if (!is_regular_prefix_closed(out)) fail(ErrorKind::InternalInvariantViolation, word_str(out) + " not regular");
    return out;
}

GaussianInt find_full_extension(const Word& w) {
    Walk wk = walk(w);
    if (wk.regular_len < w.size()) fail(ErrorKind::PreconditionViolated, "word is not regular");
    int s = wk.states.back();
    const auto& g = SoficGraph::instance();
    long tested = 0;
    for (long R = 3;; R += 3) {
        std::vector<GaussianInt> cands;
        for (long x = -R; x <= R; ++x)
            for (long y = -R; y <= R; ++y) {
                long n = x * x + y * y;
                if (n > R * R || n <= tested) continue;
                if (std::min(std::labs(x), std::labs(y)) < 3) continue;
                cands.emplace_back(x, y);
            }
        std::sort(cands.begin(), cands.end(), [](const GaussianInt& a, const GaussianInt& b) {
            if (a.norm() != b.norm()) return a.norm() < b.norm();
            return b < a;
        });
        for (const auto& b : cands)
            if (g.next(s, b) == kSQ) return b;
        tested = R * R;
    }
}

bool in_witness_set(const Word& w) { return !w.empty() && pm(w.back()) >= 3 && is_regular_prefix_closed(w); }

mpq_class shift_distance(const DigitSeq& a, const DigitSeq& b, size_t horizon) {
    for (size_t i = 0; i < horizon; ++i)
        if (a.at(i) != b.at(i)) {
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, i + 1);
            return mpq_class(mpz_class(1), den);
        }
    return 0;
}

}  // namespace hcf
