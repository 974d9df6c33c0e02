#include "hcf/geometry.hpp"

#include <algorithm>
#include <functional>

#include "hcf/ball.hpp"

namespace hcf {

namespace {

mpz_class lcm_den(const std::vector<mpq_class>& v) {
    mpz_class l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

Circline primitive(mpz_class A, mpz_class Br, mpz_class Bi, mpz_class C) {
    mpz_class g = 0;
    for (const mpz_class* x : {&A, &Br, &Bi, &C}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x->get_mpz_t());
    if (g > 1) {
        A /= g;
        Br /= g;
        Bi /= g;
        C /= g;
    }
    return {A, Br, Bi, C};
}

GaussianInt gconj(const GaussianInt& z) { return z.conj(); }

}  // namespace

Circline Circline::make(mpq_class A, mpq_class Br, mpq_class Bi, mpq_class C) {
    for (mpq_class* x : {&A, &Br, &Bi, &C}) x->canonicalize();
    mpz_class l = lcm_den({A, Br, Bi, C});
    auto scale = [&](const mpq_class& q) { return mpz_class(q.get_num() * (l / q.get_den())); };
    return primitive(scale(A), scale(Br), scale(Bi), scale(C));
}

Circline Circline::vertical(const mpq_class& k) { return make(0, mpq_class(1, 2), 0, -k); }
Circline Circline::horizontal(const mpq_class& k) { return make(0, 0, mpq_class(1, 2), -k); }

Circline Circline::circle(const mpq_class& cx, const mpq_class& cy, const mpq_class& r2) {
    if (r2 <= 0) fail(ErrorKind::Usage, "circle radius must be positive");
    return make(1, -cx, -cy, cx * cx + cy * cy - r2);
}

mpq_class Circline::radius2() const {
    mpq_class r(Br * Br + Bi * Bi - A * C, A * A);
    r.canonicalize();
    return r;
}

Circline Circline::curve() const {
    for (const mpz_class* x : {&A, &Br, &Bi, &C}) {
        if (*x > 0) return *this;
        if (*x < 0) return negated();
    }
    return *this;
}

int Circline::orientation() const { return curve() == *this ? 1 : -1; }

mpq_class Circline::eval(const mpq_class& x, const mpq_class& y) const {
    return mpq_class(A) * (x * x + y * y) + 2 * (mpq_class(Br) * x + mpq_class(Bi) * y) + mpq_class(C);
}

QuadScalar Circline::eval(const QuadComplex& z) const {
    return QuadScalar(A) * z.norm() + QuadScalar(2) * (QuadScalar(Br) * z.re() + QuadScalar(Bi) * z.im()) +
           QuadScalar(C);
}

std::string Circline::str() const {
    if (is_line()) {
        return "line(" + Br.get_str() + "," + Bi.get_str() + "," + C.get_str() + ")";
    }
    mpq_class cx = center_re(), cy = center_im();
    return "circle(" + cx.get_str() + "," + cy.get_str() + ";r2=" + radius2().get_str() + ")";
}

json Circline::to_json() const {
    return json{{"A", A.get_str()}, {"Br", Br.get_str()}, {"Bi", Bi.get_str()}, {"C", C.get_str()}};
}

bool operator<(const Circline& a, const Circline& b) {
    if (a.A != b.A) return a.A < b.A;
    if (a.Br != b.Br) return a.Br < b.Br;
    if (a.Bi != b.Bi) return a.Bi < b.Bi;
    return a.C < b.C;
}

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::Lt: return "lt";
        case Rel::Le: return "le";
        case Rel::Eq: return "eq";
    }
    return "?";
}

bool operator<(const Constraint& a, const Constraint& b) {
    if (a.f != b.f) return a.f < b.f;
    return static_cast<int>(a.rel) < static_cast<int>(b.rel);
}

Mobius Mobius::symmetry(const Symmetry& s) {
    static const GaussianInt powers[4] = {GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(0, -1)};
    return {powers[s.rot], GaussianInt(0), GaussianInt(0), GaussianInt(1), s.mir};
}

Mobius Mobius::then(const Mobius& outer) const {
    Mobius in = *this;
    if (outer.conj_first) {
        in.a = gconj(a);
        in.b = gconj(b);
        in.c = gconj(c);
        in.d = gconj(d);
    }
    Mobius out;
    out.a = outer.a * in.a + outer.b * in.c;
    out.b = outer.a * in.b + outer.b * in.d;
    out.c = outer.c * in.a + outer.d * in.c;
    out.d = outer.c * in.b + outer.d * in.d;
    out.conj_first = conj_first != outer.conj_first;
    return out;
}

QuadComplex Mobius::apply(const QuadComplex& z) const {
    QuadComplex u = conj_first ? z.conj() : z;
    QuadComplex den = QuadComplex(c) * u + QuadComplex(d);
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "Mobius pole");
    return (QuadComplex(a) * u + QuadComplex(b)) / den;
}

namespace {
Mobius inverse(const Mobius& m) {
    if (!m.conj_first) return {m.d, -m.b, -m.c, m.a, false};
    return {gconj(m.d), -gconj(m.b), -gconj(m.c), gconj(m.a), true};
}

mpz_class re_of(const GaussianInt& z) { return z.re; }
}  // namespace

Circline pullback(const Circline& f, const Mobius& n) {
    GaussianInt B(f.Br, f.Bi), Bc = B.conj();
    const GaussianInt &a = n.a, &b = n.b, &c = n.c, &d = n.d;
    mpz_class A2 = f.A * a.norm() + 2 * re_of(Bc * a * c.conj()) + f.C * c.norm();
    GaussianInt B2 = GaussianInt(f.A, 0) * a.conj() * b + B * a.conj() * d + Bc * b * c.conj() + GaussianInt(f.C, 0) * c.conj() * d;
    mpz_class C2 = f.A * b.norm() + 2 * re_of(Bc * b * d.conj()) + f.C * d.norm();
    if (n.conj_first) B2 = B2.conj();
    return primitive(A2, B2.re, B2.im, C2);
}

Circline push_forward(const Circline& f, const Mobius& m) { return pullback(f, inverse(m)); }

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::TwoDim: return "TwoDim";
        case Kind::Segment: return "Segment";
        case Kind::Point: return "Point";
        case Kind::Empty: return "Empty";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Sign-set representation and exact cell analysis.

namespace {

constexpr unsigned NEG = 1, ZERO = 2, POS = 4, ALL = 7;

unsigned sign_bit(int s) { return s < 0 ? NEG : s == 0 ? ZERO : POS; }

struct Item {
    Circline K;  // orientation-free
    unsigned mask;
};

Item to_item(const Constraint& c) {
    int o = c.f.orientation();
    unsigned side = o > 0 ? NEG : POS;
    switch (c.rel) {
        case Rel::Lt: return {c.f.curve(), side};
        case Rel::Le: return {c.f.curve(), side | ZERO};
        case Rel::Eq: return {c.f.curve(), ZERO};
    }
    return {c.f.curve(), ALL};
}

Constraint to_constraint(const Item& it) {
    switch (it.mask) {
        case NEG: return {it.K, Rel::Lt};
        case POS: return {it.K.negated(), Rel::Lt};
        case ZERO: return {it.K, Rel::Eq};
        case NEG | ZERO: return {it.K, Rel::Le};
        case POS | ZERO: return {it.K.negated(), Rel::Le};
    }
    fail(ErrorKind::InternalInvariantViolation, "unrepresentable sign set");
}

// Merges constraints on a common curve; false if the set is empty outright.
bool merge(const std::vector<Constraint>& cs, std::vector<Item>& out) {
    out.clear();
    for (const auto& c : cs) {
        Item it = to_item(c);
        if (it.K.is_constant()) {
            if (!(it.mask & sign_bit(sgn(it.K.C)))) return false;
            continue;
        }
        if (it.K.A != 0) {
            mpz_class disc = it.K.Br * it.K.Br + it.K.Bi * it.K.Bi - it.K.A * it.K.C;
            if (disc < 0) {
                if (!(it.mask & sign_bit(sgn(it.K.A)))) return false;
                continue;
            }
            if (disc == 0) fail(ErrorKind::InternalInvariantViolation, "degenerate circle " + it.K.str());
        }
        auto pos = std::find_if(out.begin(), out.end(), [&](const Item& o) { return o.K == it.K; });
        if (pos == out.end()) {
            out.push_back(it);
        } else {
            pos->mask &= it.mask;
            if (pos->mask == 0) return false;
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Item& i) { return i.mask == ALL; }), out.end());
    std::sort(out.begin(), out.end(), [](const Item& x, const Item& y) { return x.K < y.K; });
    return true;
}

// Rational parametrization of a curve.
//   line:   z(s) = z0 + s dir
//   circle: z(s) = m + rho v (s^2 - 1 + 2 s i)/(s^2 + 1), pole s = inf at m + rho v
struct Param {
    bool circle = false;
    mpq_class x0, y0, dx, dy;  // line
    mpq_class mx, my, rho;     // circle
    int vx = 1, vy = 0;        // circle pole direction

    void at(const mpq_class& s, mpq_class& x, mpq_class& y) const {
        if (!circle) {
            x = x0 + s * dx;
            y = y0 + s * dy;
            return;
        }
        mpq_class den = s * s + 1;
        mpq_class wr = (s * s - 1) / den, wi = 2 * s / den;
        x = mx + rho * (vx * wr - vy * wi);
        y = my + rho * (vx * wi + vy * wr);
    }

    QuadComplex at(const QuadScalar& s) const {
        if (!circle) return {QuadScalar(x0) + s * QuadScalar(dx), QuadScalar(y0) + s * QuadScalar(dy)};
        QuadScalar den = s * s + QuadScalar(1);
        QuadScalar wr = (s * s - QuadScalar(1)) / den, wi = QuadScalar(2) * s / den;
        QuadScalar r(rho);
        return {QuadScalar(mx) + r * (QuadScalar(vx) * wr - QuadScalar(vy) * wi),
                QuadScalar(my) + r * (QuadScalar(vx) * wi + QuadScalar(vy) * wr)};
    }

    QuadComplex pole() const { return {QuadScalar(mx + rho * vx), QuadScalar(my + rho * vy)}; }
};

Param make_param(const Circline& K) {
    Param p;
    if (K.is_line()) {
        mpq_class n2 = mpq_class(K.Br * K.Br + K.Bi * K.Bi);
        p.dx = mpq_class(-K.Bi);
        p.dy = mpq_class(K.Br);
        p.x0 = -mpq_class(K.C) * K.Br / (2 * n2);
        p.y0 = -mpq_class(K.C) * K.Bi / (2 * n2);
        return p;
    }
    p.circle = true;
    mpz_class disc = K.Br * K.Br + K.Bi * K.Bi - K.A * K.C;
    if (!mpz_perfect_square_p(disc.get_mpz_t()))
        fail(ErrorKind::FieldOverflow, "circle with irrational radius " + K.str());
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    p.rho = mpq_class(root, abs(K.A));
    p.rho.canonicalize();
    p.mx = K.center_re();
    p.my = K.center_im();
    p.mx.canonicalize();
    p.my.canonicalize();
    static const int dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    mpq_class best = -1;
    for (const auto& d : dirs) {
        mpq_class x = p.mx + p.rho * d[0], y = p.my + p.rho * d[1];
        mpq_class n = x * x + y * y;
        if (n > best) {
            best = n;
            p.vx = d[0];
            p.vy = d[1];
        }
    }
    return p;
}

// phi(s) = f(z(s)) * (s^2 + 1 for circles): quadratic a s^2 + b s + c.
struct Quadratic {
    mpq_class a, b, c;
    template <class T>
    T eval(const T& s) const {
        return T(a) * s * s + T(b) * s + T(c);
    }
};

Quadratic restrict(const Circline& f, const Param& p) {
    auto val = [&](long s) {
        mpq_class x, y;
        p.at(mpq_class(s), x, y);
        mpq_class v = f.eval(x, y);
        if (p.circle) v *= (s * s + 1);
        return v;
    };
    mpq_class v0 = val(0), v1 = val(1), vm = val(-1);
    Quadratic q;
    q.c = v0;
    q.a = (v1 + vm) / 2 - v0;
    q.b = (v1 - vm) / 2;
    return q;
}

void roots(const Quadratic& q, std::vector<QuadScalar>& out) {
    if (q.a == 0) {
        if (q.b != 0) out.emplace_back(mpq_class(-q.c / q.b));
        return;
    }
    mpq_class disc = q.b * q.b - 4 * q.a * q.c;
    if (disc < 0) return;
    mpq_class center = -q.b / (2 * q.a);
    if (disc == 0) {
        out.emplace_back(center);
        return;
    }
    mpz_class D = disc.get_num() * disc.get_den();
    if (!D.fits_slong_p()) fail(ErrorKind::FieldOverflow, "radicand too large");
    mpq_class coef = 1 / (2 * q.a * disc.get_den());
    out.emplace_back(center, coef, D.get_si());
    out.emplace_back(center, -coef, D.get_si());
}

mpq_class rational_between(const QuadScalar& lo, const QuadScalar& hi) {
    for (mpfr_prec_t p = 64;; p *= 2) {
        mpq_class l1, h1, l2, h2;
        rational_enclosure(lo, p, l1, h1);
        rational_enclosure(hi, p, l2, h2);
        if (h1 < l2) return (h1 + l2) / 2;
    }
}

mpq_class rational_below(const QuadScalar& x) {
    mpq_class l, h;
    rational_enclosure(x, 64, l, h);
    return l - 1;
}

mpq_class rational_above(const QuadScalar& x) {
    mpq_class l, h;
    rational_enclosure(x, 64, l, h);
    return h + 1;
}

// One cell of a curve: a root (point), an open interval, or the circle's pole.
struct Cell {
    enum Type { Root, Interval, Pole } type;
    QuadScalar s;        // Root
    mpq_class sample;    // Interval
    int lo = -1, hi = -1;  // Interval: indices of bounding roots (-1: unbounded or pole)
    std::vector<int> signs;  // per item index; 0 for the carrier
};

struct CurveCells {
    Param param;
    std::vector<QuadScalar> rts;
    std::vector<Cell> cells;  // in parameter order; for circles cells[0] is the pole
};

CurveCells build_cells(const std::vector<Item>& items, size_t j) {
    CurveCells cc;
    cc.param = make_param(items[j].K);
    std::vector<Quadratic> qs(items.size());
    for (size_t i = 0; i < items.size(); ++i) {
        if (i == j) continue;
        qs[i] = restrict(items[i].K, cc.param);
        roots(qs[i], cc.rts);
    }
    std::sort(cc.rts.begin(), cc.rts.end(), [](const QuadScalar& x, const QuadScalar& y) { return compare_mixed(x, y) < 0; });
    cc.rts.erase(std::unique(cc.rts.begin(), cc.rts.end(), [](const QuadScalar& x, const QuadScalar& y) { return compare_mixed(x, y) == 0; }),
                 cc.rts.end());

    auto interval = [&](int lo, int hi) {
        Cell c{Cell::Interval, {}, {}, lo, hi, {}};
        if (lo < 0 && hi < 0)
            c.sample = 0;
        else if (lo < 0)
            c.sample = rational_below(cc.rts[hi]);
        else if (hi < 0)
            c.sample = rational_above(cc.rts[lo]);
        else
            c.sample = rational_between(cc.rts[lo], cc.rts[hi]);
        return c;
    };
    if (cc.param.circle) cc.cells.push_back(Cell{Cell::Pole, {}, {}, -1, -1, {}});
    int n = static_cast<int>(cc.rts.size());
    cc.cells.push_back(interval(-1, n ? 0 : -1));
    for (int k = 0; k < n; ++k) {
        cc.cells.push_back(Cell{Cell::Root, cc.rts[k], {}, -1, -1, {}});
        cc.cells.push_back(interval(k, k + 1 < n ? k + 1 : -1));
    }

    QuadComplex pole;
    if (cc.param.circle) pole = cc.param.pole();
    for (auto& c : cc.cells) {
        c.signs.assign(items.size(), 0);
        for (size_t i = 0; i < items.size(); ++i) {
            if (i == j) continue;
            switch (c.type) {
                case Cell::Root: c.signs[i] = qs[i].eval(c.s).sign(); break;
                case Cell::Interval: c.signs[i] = sgn(qs[i].eval(c.sample)); break;
                case Cell::Pole: c.signs[i] = items[i].K.eval(pole).sign(); break;
            }
        }
    }
    return cc;
}

bool cell_ok(const Cell& c, const std::vector<Item>& items, size_t j, bool strict) {
    for (size_t i = 0; i < items.size(); ++i) {
        if (i == j) continue;
        unsigned m = items[i].mask;
        if (strict) m &= ~ZERO;
        if (!(m & sign_bit(c.signs[i]))) return false;
    }
    return true;
}

struct RawArc {
    size_t curve;
    std::optional<QuadComplex> start, end;
    bool start_in = false, end_in = false, loop = false;
};

struct Analysis {
    bool interior = false;
    std::vector<RawArc> arcs;
    std::vector<QuadComplex> points;
    bool empty() const { return !interior && arcs.empty() && points.empty(); }
};

QuadComplex cell_point(const CurveCells& cc, const Cell& c) {
    return c.type == Cell::Pole ? cc.param.pole() : cc.param.at(c.s);
}

// Endpoint at the boundary between cells k and k+1 (cyclic for circles).
void runs(const CurveCells& cc, const std::vector<bool>& ok, size_t j, std::vector<RawArc>& arcs,
          std::vector<QuadComplex>& pts) {
    const auto& cells = cc.cells;
    size_t n = cells.size();
    if (std::all_of(ok.begin(), ok.end(), [](bool b) { return b; })) {
        RawArc a{j, {}, {}, false, false, cc.param.circle};
        arcs.push_back(a);
        return;
    }
    size_t start = 0;
    if (cc.param.circle) {
        while (ok[start]) ++start;
        start = (start + 1) % n;
    }
    // endpoint value of an interval's bound
    auto bound = [&](const Cell& c, bool upper) -> std::optional<QuadComplex> {
        int idx = upper ? c.hi : c.lo;
        if (idx >= 0) return cc.param.at(cc.rts[idx]);
        if (cc.param.circle) return cc.param.pole();
        return std::nullopt;
    };
    for (size_t step = 0; step < n;) {
        size_t k = (start + step) % n;
        if (!ok[k]) {
            ++step;
            continue;
        }
        size_t len = 0;
        while (step + len < n && ok[(start + step + len) % n]) ++len;
        const Cell& first = cells[k];
        const Cell& last = cells[(start + step + len - 1) % n];
        if (len == 1 && first.type != Cell::Interval) {
            pts.push_back(cell_point(cc, first));
        } else {
            RawArc a{j, {}, {}, false, false, false};
            if (first.type == Cell::Interval) {
                a.start = bound(first, false);
            } else {
                a.start = cell_point(cc, first);
                a.start_in = true;
            }
            if (last.type == Cell::Interval) {
                a.end = bound(last, true);
            } else {
                a.end = cell_point(cc, last);
                a.end_in = true;
            }
            arcs.push_back(a);
        }
        step += len;
    }
}

Analysis analyze(const std::vector<Item>& items) {
    Analysis an;
    if (items.empty()) {
        an.interior = true;
        return an;
    }
    bool has_eq = std::any_of(items.begin(), items.end(), [](const Item& i) { return i.mask == ZERO; });
    std::vector<CurveCells> all;
    all.reserve(items.size());
    for (size_t j = 0; j < items.size(); ++j) {
        all.push_back(build_cells(items, j));
        if (has_eq) continue;
        for (const auto& c : all.back().cells)
            if (c.type == Cell::Interval && cell_ok(c, items, j, true)) {
                an.interior = true;
                return an;
            }
    }
    std::vector<std::vector<QuadComplex>> isolated(items.size());
    for (size_t j = 0; j < items.size(); ++j) {
        if (!(items[j].mask & ZERO)) continue;
        const auto& cc = all[j];
        std::vector<bool> ok(cc.cells.size());
        for (size_t k = 0; k < cc.cells.size(); ++k) ok[k] = cell_ok(cc.cells[k], items, j, false);
        runs(cc, ok, j, an.arcs, isolated[j]);
    }
    for (size_t j = 0; j < items.size(); ++j) {
        for (const auto& p : isolated[j]) {
            bool keep = true;
            for (size_t i = 0; i < items.size() && keep; ++i) {
                if (i == j || !items[i].K.eval(p).is_zero()) continue;
                keep = std::find(isolated[i].begin(), isolated[i].end(), p) != isolated[i].end();
            }
            if (keep && std::find(an.points.begin(), an.points.end(), p) == an.points.end()) an.points.push_back(p);
        }
    }
    return an;
}

bool items_empty(const std::vector<Item>& items) { return analyze(items).empty(); }

bool empty_with(std::vector<Item> items, const Circline& K, unsigned mask) {
    auto pos = std::find_if(items.begin(), items.end(), [&](const Item& o) { return o.K == K; });
    if (pos != items.end()) {
        pos->mask &= mask;
        if (pos->mask == 0) return true;
    } else {
        items.push_back({K, mask});
    }
    return items_empty(items);
}

// True if items ∩ complement(c) is empty.
bool implied(const std::vector<Item>& items, const Item& c) {
    unsigned comp = ALL & ~c.mask;
    if (comp == (NEG | POS)) return empty_with(items, c.K, NEG) && empty_with(items, c.K, POS);
    return empty_with(items, c.K, comp);
}

std::vector<Item> items_of(const Region& r) {
    std::vector<Item> out;
    for (const auto& c : r.constraints()) out.push_back(to_item(c));
    return out;
}

// Drops constraints that hold strictly on the closed bounding box of the axis-parallel lines.
void box_prune(std::vector<Item>& items) {
    std::optional<mpq_class> lo[2], hi[2];
    for (const auto& it : items) {
        if (!it.K.is_line()) continue;
        int axis = it.K.Bi == 0 ? 0 : it.K.Br == 0 ? 1 : -1;
        if (axis < 0) continue;
        // K = 2 c v + C with c > 0, zero at v = -C / 2c
        const mpz_class& c = axis == 0 ? it.K.Br : it.K.Bi;
        mpq_class root(-it.K.C, 2 * c);
        root.canonicalize();
        bool below = (it.mask & POS) == 0;  // v <= root
        bool above = (it.mask & NEG) == 0;
        if (below && (!hi[axis] || root < *hi[axis])) hi[axis] = root;
        if (above && (!lo[axis] || root > *lo[axis])) lo[axis] = root;
    }
    if (!lo[0] || !hi[0] || !lo[1] || !hi[1]) return;
    if (*lo[0] > *hi[0] || *lo[1] > *hi[1]) return;
    mpq_class xs[2] = {*lo[0], *hi[0]}, ys[2] = {*lo[1], *hi[1]};
    auto strict_on_box = [&](const Item& it) {
        const Circline& K = it.K;
        if (K.is_line()) {
            int s = 0;
            for (const auto& x : xs)
                for (const auto& y : ys) {
                    int t = sgn(K.eval(x, y));
                    if (t == 0 || (s != 0 && t != s)) return false;
                    s = t;
                }
            return (it.mask & sign_bit(s)) != 0;
        }
        // circle, K.A > 0
        if (it.mask & NEG) {
            for (const auto& x : xs)
                for (const auto& y : ys)
                    if (sgn(K.eval(x, y)) >= 0) return false;
            return true;
        }
        if (!(it.mask & POS)) return false;
        mpq_class cx = K.center_re(), cy = K.center_im();
        mpq_class px = cx < xs[0] ? xs[0] : cx > xs[1] ? xs[1] : cx;
        mpq_class py = cy < ys[0] ? ys[0] : cy > ys[1] ? ys[1] : cy;
        return sgn(K.eval(px, py)) > 0;
    };
    items.erase(std::remove_if(items.begin(), items.end(),
                               [&](const Item& it) {
                                   bool axis_line = it.K.is_line() && (it.K.Br == 0 || it.K.Bi == 0);
                                   return !axis_line && strict_on_box(it);
                               }),
                items.end());
}

bool field_ok(const QuadComplex& z, long d) {
    return (z.re().is_rational() || z.re().d() == d) && (z.im().is_rational() || z.im().d() == d);
}

}  // namespace

// ---------------------------------------------------------------------------

Region::Region(std::vector<Constraint> cs, bool reduce, long field_d) : d_(field_d) {
    std::vector<Item> items;
    if (!merge(cs, items)) {
        empty_ = true;
        return;
    }
    if (reduce) {
        box_prune(items);
        if (items_empty(items)) {
            empty_ = true;
            return;
        }
        for (size_t k = items.size(); k-- > 0;) {
            std::vector<Item> others;
            for (size_t i = 0; i < items.size(); ++i)
                if (i != k) others.push_back(items[i]);
            if (implied(others, items[k])) items = std::move(others);
        }
    }
    for (const auto& it : items) cs_.push_back(to_constraint(it));
    std::sort(cs_.begin(), cs_.end());
}

Region Region::square() {
    return Region({{Circline::vertical(mpq_class(-1, 2)).negated(), Rel::Le},
                   {Circline::vertical(mpq_class(1, 2)), Rel::Lt},
                   {Circline::horizontal(mpq_class(-1, 2)).negated(), Rel::Le},
                   {Circline::horizontal(mpq_class(1, 2)), Rel::Lt}},
                  false);
}

Region Region::square_closed() { return square().closure_hint(); }

Region Region::square_open() { return square().interior_region(); }

Region Region::disk_closed(const GaussianInt& c) {
    return Region({{Circline::circle(mpq_class(c.re), mpq_class(c.im), 1), Rel::Le}}, false);
}

Region Region::disk_open(const GaussianInt& c) {
    return Region({{Circline::circle(mpq_class(c.re), mpq_class(c.im), 1), Rel::Lt}}, false);
}

Region Region::exterior_closed(const GaussianInt& c) {
    return Region({{Circline::circle(mpq_class(c.re), mpq_class(c.im), 1).negated(), Rel::Le}}, false);
}

Region Region::exterior_open(const GaussianInt& c) {
    return Region({{Circline::circle(mpq_class(c.re), mpq_class(c.im), 1).negated(), Rel::Lt}}, false);
}

Region Region::curve(const Circline& f) { return Region({{f, Rel::Eq}}, false); }

bool Region::is_empty() const {
    if (empty_) return true;
    return kind() == Kind::Empty;
}

namespace {
Shape to_shape(const Analysis& an, const std::vector<Item>& items) {
    Shape s;
    if (an.interior) {
        s.kind = Kind::TwoDim;
        return s;
    }
    for (const auto& a : an.arcs) s.arcs.push_back({items[a.curve].K, a.start, a.end, a.start_in, a.end_in, a.loop});
    s.points = an.points;
    s.kind = !s.arcs.empty() ? Kind::Segment : !s.points.empty() ? Kind::Point : Kind::Empty;
    return s;
}
}  // namespace

const Shape& Region::shape() const {
    if (!shape_) {
        if (empty_) {
            shape_ = Shape{};
        } else {
            auto items = items_of(*this);
            shape_ = to_shape(analyze(items), items);
        }
    }
    auto check = [&](const QuadComplex& z) {
        if (!field_ok(z, d_)) fail(ErrorKind::FieldOverflow, "endpoint " + z.str() + " outside Q(sqrt " + std::to_string(d_) + ")");
    };
    for (const auto& a : shape_->arcs) {
        if (a.start) check(*a.start);
        if (a.end) check(*a.end);
    }
    for (const auto& p : shape_->points) check(p);
    return *shape_;
}

Kind Region::kind() const {
    if (empty_) return Kind::Empty;
    if (!shape_) {
        auto items = items_of(*this);
        shape_ = to_shape(analyze(items), items);
    }
    return shape_->kind;
}

bool Region::has_interior() const { return kind() == Kind::TwoDim; }

bool Region::contains(const QuadComplex& z) const {
    if (empty_) return false;
    for (const auto& c : cs_)
        if (!c.holds(c.f.eval(z).sign())) return false;
    return true;
}

Region Region::interior_region() const {
    if (empty_) return *this;
    std::vector<Constraint> cs;
    for (const auto& c : cs_) {
        if (c.rel == Rel::Eq) return Region::empty();
        cs.push_back({c.f, Rel::Lt});
    }
    return Region(cs, false, d_);
}

Region Region::closure_hint() const {
    if (empty_) return *this;
    std::vector<Constraint> cs;
    for (const auto& c : cs_) cs.push_back({c.f, c.rel == Rel::Lt ? Rel::Le : c.rel});
    return Region(cs, false, d_);
}

Region image(const Region& r, const Mobius& m) {
    if (r.is_empty()) return Region::empty();
    Mobius inv = inverse(m);
    std::vector<Constraint> cs;
    for (const auto& c : r.constraints()) cs.push_back({pullback(c.f, inv), c.rel});
    return Region(cs, true, r.field());
}

namespace {

// Nonempty circline region; unbounded iff no disk or circle constraint and the
// half-planes admit a nonzero recession direction.
bool unbounded(const Region& r) {
    if (r.is_empty()) return false;
    std::vector<std::pair<const Circline*, Rel>> lines;
    for (const auto& c : r.constraints()) {
        if (c.f.A > 0 || (c.f.A != 0 && c.rel == Rel::Eq)) return false;
        if (c.f.A == 0 && !c.f.is_constant()) lines.push_back({&c.f, c.rel});
    }
    if (lines.empty()) return true;
    for (const auto& [f, rel] : lines)
        for (int sgn : {1, -1}) {
            const mpz_class dx = -sgn * f->Bi, dy = sgn * f->Br;
            bool ok = true;
            for (const auto& [g, grel] : lines) {
                mpz_class dot = g->Br * dx + g->Bi * dy;
                if (dot > 0 || (grel == Rel::Eq && dot != 0)) ok = false;
            }
            if (ok) return true;
        }
    return false;
}

}  // namespace

Region invert(const Region& r, bool punctured) {
    Region img = image(r, Mobius::inversion());
    if (!punctured && (r.contains(QuadComplex()) || unbounded(img))) fail(ErrorKind::OriginInRegion, "0 in the closure");
    return img;
}

Region translate(const Region& r, const GaussianInt& a) { return image(r, Mobius::translation(a)); }

Region intersect(const Region& r1, const Region& r2, bool reduce) {
    if (r1.is_empty() || r2.is_empty()) return Region::empty();
    std::vector<Constraint> cs = r1.constraints();
    cs.insert(cs.end(), r2.constraints().begin(), r2.constraints().end());
    return Region(cs, reduce, r1.field());
}

Region apply_symmetry(const Symmetry& s, const Region& r) { return image(r, Mobius::symmetry(s)); }

bool has_nonempty_interior(const Region& r) { return r.has_interior(); }

bool subset(const Region& a, const Region& b) {
    if (a.is_empty()) return true;
    if (b.is_empty()) return false;
    auto items = items_of(a);
    for (const auto& c : b.constraints())
        if (!implied(items, to_item(c))) return false;
    return true;
}

bool same_set(const Region& a, const Region& b) { return subset(a, b) && subset(b, a); }

json arc_json(const Arc& a) {
    json j{{"carrier", a.carrier.to_json()}, {"loop", a.loop}};
    j["start"] = a.start ? to_json(*a.start) : json(nullptr);
    j["end"] = a.end ? to_json(*a.end) : json(nullptr);
    j["start_in"] = a.start_in;
    j["end_in"] = a.end_in;
    return j;
}

json region_json(const Region& r) {
    json cs = json::array();
    for (const auto& c : r.constraints()) cs.push_back({{"f", c.f.to_json()}, {"rel", rel_name(c.rel)}});
    json j{{"constraints", cs}};
    j["variant"] = kind_name(r.kind());
    try {
        const Shape& s = r.shape();
        if (s.kind == Kind::Segment || s.kind == Kind::Point) {
            json arcs = json::array(), pts = json::array();
            for (const auto& a : s.arcs) arcs.push_back(arc_json(a));
            for (const auto& p : s.points) pts.push_back(to_json(p));
            j["arcs"] = arcs;
            j["points"] = pts;
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::FieldOverflow) throw;
        j["uncertified"] = true;
    }
    return j;
}

}  // namespace hcf
