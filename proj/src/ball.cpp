#include "hcf/ball.hpp"

#include <algorithm>

namespace hcf {

namespace {
constexpr mpfr_prec_t kRadPrec = 64;

// |v| * 2^(shift - prec), rounded up, added to acc.
void add_relative(Real& acc, mpfr_srcptr v, mpfr_prec_t prec, int shift) {
    Real t(kRadPrec);
    mpfr_abs(t.get(), v, MPFR_RNDU);
    mpfr_mul_2si(t.get(), t.get(), shift - static_cast<long>(prec), MPFR_RNDU);
    mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDU);
}

// Upper bound for |re| + |im|.
void abs_sum_upper(Real& out, const Real& re, const Real& im) {
    Real t(kRadPrec);
    mpfr_abs(out.get(), re.get(), MPFR_RNDU);
    mpfr_abs(t.get(), im.get(), MPFR_RNDU);
    mpfr_add(out.get(), out.get(), t.get(), MPFR_RNDU);
}
}  // namespace

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}
Real::Real(const Real& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}
Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}
Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
    char* buf = nullptr;
    if (digits <= 0) digits = static_cast<int>(prec() * 0.30103) + 1;
    mpfr_asprintf(&buf, "%.*Re", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

void enclose(const QuadScalar& x, Real& mid, Real& err) {
    mpfr_prec_t p = mid.prec() + 16;
    Real lo(p), hi(p), s_lo(p), s_hi(p), t_lo(p), t_hi(p);
    mpfr_set_q(lo.get(), x.a().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), x.a().get_mpq_t(), MPFR_RNDU);
    if (!x.is_rational()) {
        mpfr_set_si(s_lo.get(), x.d(), MPFR_RNDD);
        mpfr_sqrt(s_lo.get(), s_lo.get(), MPFR_RNDD);
        mpfr_set_si(s_hi.get(), x.d(), MPFR_RNDU);
        mpfr_sqrt(s_hi.get(), s_hi.get(), MPFR_RNDU);
        if (x.b() >= 0) {
            mpfr_mul_q(t_lo.get(), s_lo.get(), x.b().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(t_hi.get(), s_hi.get(), x.b().get_mpq_t(), MPFR_RNDU);
        } else {
            mpfr_mul_q(t_lo.get(), s_hi.get(), x.b().get_mpq_t(), MPFR_RNDD);
            mpfr_mul_q(t_hi.get(), s_lo.get(), x.b().get_mpq_t(), MPFR_RNDU);
        }
        mpfr_add(lo.get(), lo.get(), t_lo.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), t_hi.get(), MPFR_RNDU);
    }
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    Real a(kRadPrec), b(kRadPrec);
    mpfr_sub(a.get(), hi.get(), mid.get(), MPFR_RNDU);
    mpfr_sub(b.get(), mid.get(), lo.get(), MPFR_RNDU);
    mpfr_set_prec(err.get(), kRadPrec);
    mpfr_max(err.get(), a.get(), b.get(), MPFR_RNDU);
}

ComplexBall::ComplexBall(mpfr_prec_t prec) : prec_(prec), re_(prec), im_(prec), rad_(kRadPrec) {}

ComplexBall ComplexBall::from_quad(const QuadComplex& z, mpfr_prec_t prec) {
    ComplexBall b(prec);
    Real er(kRadPrec), ei(kRadPrec);
    enclose(z.re(), b.re_, er);
    enclose(z.im(), b.im_, ei);
    mpfr_add(b.rad_.get(), er.get(), ei.get(), MPFR_RNDU);
    return b;
}

ComplexBall ComplexBall::from_gaussian_rational(const mpq_class& re, const mpq_class& im, mpfr_prec_t prec) {
    return from_quad(QuadComplex(QuadScalar(re), QuadScalar(im)), prec);
}

void ComplexBall::add_rounding_error() {
    add_relative(rad_, re_.get(), prec_, 1);
    add_relative(rad_, im_.get(), prec_, 1);
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
    ComplexBall r(std::min(prec_, o.prec_));
    mpfr_add(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_add(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    r.add_rounding_error();
    return r;
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const {
    ComplexBall r(std::min(prec_, o.prec_));
    mpfr_sub(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_sub(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(r.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    r.add_rounding_error();
    return r;
}

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
    ComplexBall r(std::min(prec_, o.prec_));
    mpfr_fmms(r.re_.get(), re_.get(), o.re_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_fmma(r.im_.get(), re_.get(), o.im_.get(), im_.get(), o.re_.get(), MPFR_RNDN);
    Real m1(kRadPrec), m2(kRadPrec), t(kRadPrec);
    abs_sum_upper(m1, re_, im_);
    abs_sum_upper(m2, o.re_, o.im_);
    mpfr_mul(r.rad_.get(), m1.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), m2.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    r.add_rounding_error();
    return r;
}

ComplexBall ComplexBall::inverse() const {
    ComplexBall r(prec_);
    Real n(prec_ + 8), mlo(kRadPrec), gap(kRadPrec), t(kRadPrec);
    // lower bound for |m|
    mpfr_sqr(n.get(), re_.get(), MPFR_RNDD);
    mpfr_sqr(t.get(), im_.get(), MPFR_RNDD);
    mpfr_add(mlo.get(), n.get(), t.get(), MPFR_RNDD);
    mpfr_sqrt(mlo.get(), mlo.get(), MPFR_RNDD);
    mpfr_sub(gap.get(), mlo.get(), rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(gap.get()) <= 0) fail(ErrorKind::Undecidable, "ball meets zero; cannot invert");
    mpfr_fmma(n.get(), re_.get(), re_.get(), im_.get(), im_.get(), MPFR_RNDN);
    mpfr_div(r.re_.get(), re_.get(), n.get(), MPFR_RNDN);
    mpfr_div(r.im_.get(), im_.get(), n.get(), MPFR_RNDN);
    mpfr_neg(r.im_.get(), r.im_.get(), MPFR_RNDN);
    // propagated: rad / (|m| (|m| - rad))
    mpfr_mul(t.get(), mlo.get(), gap.get(), MPFR_RNDD);
    mpfr_div(r.rad_.get(), rad_.get(), t.get(), MPFR_RNDU);
    // rounding of the midpoint: 8 ulp-relative of 1/|m|
    mpfr_ui_div(t.get(), 1, mlo.get(), MPFR_RNDU);
    mpfr_mul_2si(t.get(), t.get(), 3 - static_cast<long>(prec_), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    return r;
}

ComplexBall ComplexBall::sub_gaussian(const GaussianInt& g) const {
    ComplexBall r(prec_);
    mpfr_sub_z(r.re_.get(), re_.get(), g.re.get_mpz_t(), MPFR_RNDN);
    mpfr_sub_z(r.im_.get(), im_.get(), g.im.get_mpz_t(), MPFR_RNDN);
    mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
    r.add_rounding_error();
    return r;
}

void ComplexBall::round_to(mpfr_prec_t prec) {
    if (prec >= prec_) return;
    mpfr_prec_round(re_.get(), prec, MPFR_RNDN);
    mpfr_prec_round(im_.get(), prec, MPFR_RNDN);
    prec_ = prec;
    add_rounding_error();
}

bool ComplexBall::contains_zero() const {
    Real t(kRadPrec), u(kRadPrec);
    mpfr_abs(t.get(), re_.get(), MPFR_RNDD);
    mpfr_abs(u.get(), im_.get(), MPFR_RNDD);
    mpfr_hypot(t.get(), t.get(), u.get(), MPFR_RNDD);
    return mpfr_cmp(t.get(), rad_.get()) <= 0;
}

Real ComplexBall::distance_upper(const QuadComplex& z) const {
    mpfr_prec_t p = prec_ + 32;
    Real zr(p), zi(p), er(kRadPrec), ei(kRadPrec), dx(p), dy(p), out(kRadPrec);
    enclose(z.re(), zr, er);
    enclose(z.im(), zi, ei);
    mpfr_sub(dx.get(), re_.get(), zr.get(), MPFR_RNDN);
    mpfr_sub(dy.get(), im_.get(), zi.get(), MPFR_RNDN);
    Real hx(kRadPrec), hy(kRadPrec);
    mpfr_abs(hx.get(), dx.get(), MPFR_RNDU);
    mpfr_abs(hy.get(), dy.get(), MPFR_RNDU);
    // the two subtractions were rounded at precision p
    add_relative(hx, dx.get(), p, 1);
    add_relative(hy, dy.get(), p, 1);
    mpfr_hypot(out.get(), hx.get(), hy.get(), MPFR_RNDU);
    mpfr_add(out.get(), out.get(), er.get(), MPFR_RNDU);
    mpfr_add(out.get(), out.get(), ei.get(), MPFR_RNDU);
    return out;
}

bool ComplexBall::certainly_contains(const QuadComplex& z) const {
    Real d = distance_upper(z);
    return mpfr_cmp(d.get(), rad_.get()) <= 0;
}

json ComplexBall::to_json(int digits) const {
    return json{{"re", re_.str(digits)}, {"im", im_.str(digits)}, {"rad", rad_.str(6)}, {"prec", prec_}};
}

namespace {
mpz_class floor_half_shift(const Real& c, const Real& rad, mpfr_rnd_t dir, int sign) {
    Real t(c.prec() + 8);
    if (sign < 0)
        mpfr_sub(t.get(), c.get(), rad.get(), dir);
    else
        mpfr_add(t.get(), c.get(), rad.get(), dir);
    mpfr_add_d(t.get(), t.get(), 0.5, dir);
    mpz_class k;
    mpfr_get_z(k.get_mpz_t(), t.get(), MPFR_RNDD);
    return k;
}

mpz_class certain_floor(const Real& c, const Real& rad) {
    mpz_class lo = floor_half_shift(c, rad, MPFR_RNDD, -1);
    mpz_class hi = floor_half_shift(c, rad, MPFR_RNDU, +1);
    if (lo != hi) fail(ErrorKind::Undecidable, "ball straddles a tie line");
    return lo;
}
}  // namespace

void rational_enclosure(const QuadScalar& x, mpfr_prec_t p, mpq_class& lo, mpq_class& hi) {
    if (x.is_rational()) {
        lo = hi = x.a();
        return;
    }
    Real mid(p), err(kRadPrec), t(p + 8);
    enclose(x, mid, err);
    mpfr_sub(t.get(), mid.get(), err.get(), MPFR_RNDD);
    mpfr_get_q(lo.get_mpq_t(), t.get());
    mpfr_add(t.get(), mid.get(), err.get(), MPFR_RNDU);
    mpfr_get_q(hi.get_mpq_t(), t.get());
}

int compare_mixed(const QuadScalar& x, const QuadScalar& y) {
    if (x.is_rational() || y.is_rational() || x.d() == y.d()) return (x - y).sign();
    // distinct fields: sqrt(d1), sqrt(d2), 1 are independent, so x != y
    for (mpfr_prec_t p = 64;; p *= 2) {
        mpq_class xl, xh, yl, yh;
        rational_enclosure(x, p, xl, xh);
        rational_enclosure(y, p, yl, yh);
        if (xh < yl) return -1;
        if (yh < xl) return 1;
    }
}

GaussianInt nearest_gaussian(const ComplexBall& z) {
    return {certain_floor(z.mid_re(), z.rad()), certain_floor(z.mid_im(), z.rad())};
}

bool in_fundamental_domain(const ComplexBall& z) { return nearest_gaussian(z).is_zero(); }

}  // namespace hcf
