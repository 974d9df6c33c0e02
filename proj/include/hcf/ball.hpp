#pragma once

#include <mpfr.h>

#include <string>

#include "hcf/gaussian.hpp"

namespace hcf {

// RAII wrapper over an mpfr_t.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 0) const;

private:
    mpfr_t v_;
};

// Midpoint-radius complex ball {m + e : |e| <= rad}; radius is kept rounded upward.
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t prec = 128);

    static ComplexBall from_quad(const QuadComplex& z, mpfr_prec_t prec);
    static ComplexBall from_gaussian_rational(const mpq_class& re, const mpq_class& im, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    const Real& mid_re() const { return re_; }
    const Real& mid_im() const { return im_; }
    const Real& rad() const { return rad_; }
    Real& rad_mut() { return rad_; }

    ComplexBall operator+(const ComplexBall& o) const;
    ComplexBall operator-(const ComplexBall& o) const;
    ComplexBall operator*(const ComplexBall& o) const;
    ComplexBall inverse() const;  // Undecidable if the ball meets 0
    ComplexBall sub_gaussian(const GaussianInt& g) const;
    // Lower working precision; the rounding error moves into the radius.
    void round_to(mpfr_prec_t prec);

    bool contains_zero() const;
    // Upper bound of |mid - z| + (enclosure error of z).
    Real distance_upper(const QuadComplex& z) const;
    bool certainly_contains(const QuadComplex& z) const;
    json to_json(int digits = 40) const;

private:
    void add_rounding_error();

    mpfr_prec_t prec_;
    Real re_, im_, rad_;
};

// Encloses a QuadScalar: value in [mid - err, mid + err].
void enclose(const QuadScalar& x, Real& mid, Real& err);

// Rational bounds lo <= x <= hi with hi - lo roughly 2^-p |x|.
void rational_enclosure(const QuadScalar& x, mpfr_prec_t p, mpq_class& lo, mpq_class& hi);
// Exact comparison, also across different quadratic fields.
int compare_mixed(const QuadScalar& x, const QuadScalar& y);

GaussianInt nearest_gaussian(const ComplexBall& z);  // Undecidable near a tie line
bool in_fundamental_domain(const ComplexBall& z);

}  // namespace hcf
