#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcf/gaussian.hpp"

namespace hcf {

// f(z) = A|z|^2 + conj(B) z + B conj(z) + C = A(x^2+y^2) + 2(Br x + Bi y) + C.
// Coefficients are kept as primitive integers (scaled by positive factors only).
struct Circline {
    mpz_class A, Br, Bi, C;

    static Circline make(mpq_class A, mpq_class Br, mpq_class Bi, mpq_class C);
    static Circline vertical(const mpq_class& k);    // x - k
    static Circline horizontal(const mpq_class& k);  // y - k
    static Circline circle(const mpq_class& cx, const mpq_class& cy, const mpq_class& r2);  // |z-c|^2 - r^2

    bool is_line() const { return A == 0; }
    bool is_constant() const { return A == 0 && Br == 0 && Bi == 0; }
    mpq_class radius2() const;  // circles only
    mpq_class center_re() const { return mpq_class(-Br, A); }
    mpq_class center_im() const { return mpq_class(-Bi, A); }

    Circline negated() const { return {-A, -Br, -Bi, -C}; }
    Circline conj() const { return {A, Br, -Bi, C}; }
    // orientation-free key: first nonzero coefficient positive
    Circline curve() const;
    int orientation() const;  // +1 if *this == curve(), else -1

    mpq_class eval(const mpq_class& x, const mpq_class& y) const;
    QuadScalar eval(const QuadComplex& z) const;

    std::string str() const;
    json to_json() const;

    friend bool operator==(const Circline& a, const Circline& b) {
        return a.A == b.A && a.Br == b.Br && a.Bi == b.Bi && a.C == b.C;
    }
    friend bool operator!=(const Circline& a, const Circline& b) { return !(a == b); }
    friend bool operator<(const Circline& a, const Circline& b);
};

enum class Rel { Lt, Le, Eq };
const char* rel_name(Rel r);

struct Constraint {
    Circline f;
    Rel rel;
    bool holds(int sign) const {
        return rel == Rel::Lt ? sign < 0 : rel == Rel::Le ? sign <= 0 : sign == 0;
    }
    friend bool operator==(const Constraint& a, const Constraint& b) { return a.f == b.f && a.rel == b.rel; }
    friend bool operator<(const Constraint& a, const Constraint& b);
};

// z -> (a z' + b)/(c z' + d), z' = conj(z) when conj_first.
struct Mobius {
    GaussianInt a{1}, b{0}, c{0}, d{1};
    bool conj_first = false;

    static Mobius inversion() { return {GaussianInt(0), GaussianInt(1), GaussianInt(1), GaussianInt(0), false}; }
    static Mobius translation(const GaussianInt& t) { return {GaussianInt(1), t, GaussianInt(0), GaussianInt(1), false}; }
    static Mobius symmetry(const Symmetry& s);

    Mobius then(const Mobius& outer) const;  // outer after this
    QuadComplex apply(const QuadComplex& z) const;  // throws ZeroDenominator at the pole
};

// Pullback of f by the Mobius map N: g(z) = f(N z) |c z' + d|^2.
Circline pullback(const Circline& f, const Mobius& n);
// Image of the curve {f = 0} (with sides) under M.
Circline push_forward(const Circline& f, const Mobius& m);

enum class Kind { TwoDim, Segment, Point, Empty };
const char* kind_name(Kind k);

// Connected piece of a carrier curve, traversed in the direction of the carrier's parameter.
struct Arc {
    Circline carrier;  // orientation-free form
    std::optional<QuadComplex> start, end;  // nullopt: unbounded end of a line
    bool start_in = false, end_in = false;
    bool loop = false;  // whole circle
};

struct Shape {
    Kind kind = Kind::Empty;
    std::vector<Arc> arcs;
    std::vector<QuadComplex> points;
};

class Region {
public:
    Region() : empty_(true) {}
    static Region plane() { return Region(std::vector<Constraint>{}, false); }
    static Region empty() { return Region(); }
    static Region square();         // -1/2 <= Re, Im < 1/2
    static Region square_closed();
    static Region square_open();
    static Region disk_closed(const GaussianInt& c);  // closed unit disk
    static Region disk_open(const GaussianInt& c);
    static Region exterior_closed(const GaussianInt& c);  // complement of the open unit disk
    static Region exterior_open(const GaussianInt& c);    // complement of the closed unit disk
    static Region curve(const Circline& f);               // the curve itself

    // reduce=true drops redundant constraints (canonical form); false keeps them.
    Region(std::vector<Constraint> cs, bool reduce = true, long field_d = 3);

    bool is_empty() const;
    const std::vector<Constraint>& constraints() const { return cs_; }
    long field() const { return d_; }
    const Shape& shape() const;  // FieldOverflow if a degenerate endpoint leaves Q(sqrt d)
    Kind kind() const;
    bool has_interior() const;
    bool contains(const QuadComplex& z) const;
    Region interior_region() const;  // strict version of every constraint
    Region closure_hint() const;     // non-strict version of every constraint
    Region reduced() const { return Region(cs_, true, d_); }

    friend bool operator==(const Region& a, const Region& b) {
        return a.empty_ == b.empty_ && a.cs_ == b.cs_;
    }

private:
    bool empty_ = false;
    std::vector<Constraint> cs_;
    long d_ = 3;
    mutable std::optional<Shape> shape_;
    mutable std::optional<bool> interior_;
};

Region image(const Region& r, const Mobius& m);
Region invert(const Region& r, bool punctured = false);  // OriginInRegion if 0 in the closure
Region translate(const Region& r, const GaussianInt& a);
Region intersect(const Region& r1, const Region& r2, bool reduce = true);
Region apply_symmetry(const Symmetry& s, const Region& r);
bool has_nonempty_interior(const Region& r);
bool subset(const Region& a, const Region& b);
bool same_set(const Region& a, const Region& b);

json region_json(const Region& r);
json arc_json(const Arc& a);

struct Style {
    std::string fill = "#9ecae1";
    std::string stroke = "#08519c";
    std::string label;
};
// Deterministic SVG; each entry is one panel with viewBox [-1.6, 1.6]^2.
std::string emit_svg(const std::vector<std::vector<std::pair<Region, Style>>>& panels);
std::string emit_svg(const std::vector<std::pair<Region, Style>>& single_panel);

}  // namespace hcf
