#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>

#include "hcf/errors.hpp"

namespace hcf {

using json = nlohmann::json;

mpq_class parse_rational(const std::string& s);
std::string rational_str(const mpq_class& q);

struct GaussianInt {
    mpz_class re;
    mpz_class im;

    GaussianInt() = default;
    GaussianInt(long r, long i = 0) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    mpz_class norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    std::string str() const;

    GaussianInt operator-() const { return {-re, -im}; }
    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    }
};

// Digit alphabet: every Gaussian integer except 0 and the four units.
bool is_digit(const GaussianInt& a);
mpz_class pm(const GaussianInt& a);

json to_json(const GaussianInt& a);
GaussianInt gaussian_from_json(const json& j);

// a + b sqrt(d), d squarefree. d is irrelevant (stored as 0) when b == 0.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long v) : a_(v) {}
    QuadScalar(const mpz_class& v) : a_(v) {}
    QuadScalar(const mpq_class& v) : a_(v) { a_.canonicalize(); }
    QuadScalar(mpq_class a, mpq_class b, long d);

    static QuadScalar sqrt_of(long d);

    const mpq_class& a() const { return a_; }
    const mpq_class& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    int sign() const;
    mpz_class floor() const;
    QuadScalar inverse() const;
    QuadScalar conj_field() const;  // a - b sqrt(d)
    double approx() const;
    std::string str() const;

    QuadScalar operator-() const;
    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
    friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() >= 0; }

private:
    void normalize();
    static long common_d(const QuadScalar& x, const QuadScalar& y);

    mpq_class a_{0};
    mpq_class b_{0};
    long d_ = 0;
};

json to_json(const QuadScalar& x);
QuadScalar quad_from_json(const json& j);

class QuadComplex {
public:
    QuadComplex() = default;
    QuadComplex(QuadScalar re, QuadScalar im = QuadScalar()) : re_(std::move(re)), im_(std::move(im)) {}
    QuadComplex(const GaussianInt& g) : re_(g.re), im_(g.im) {}

    const QuadScalar& re() const { return re_; }
    const QuadScalar& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_gaussian_rational() const { return re_.is_rational() && im_.is_rational(); }

    QuadComplex conj() const { return {re_, -im_}; }
    QuadScalar norm() const { return re_ * re_ + im_ * im_; }
    QuadComplex inverse() const;
    std::string str() const;

    QuadComplex operator-() const { return {-re_, -im_}; }
    friend QuadComplex operator+(const QuadComplex& x, const QuadComplex& y) {
        return {x.re_ + y.re_, x.im_ + y.im_};
    }
    friend QuadComplex operator-(const QuadComplex& x, const QuadComplex& y) {
        return {x.re_ - y.re_, x.im_ - y.im_};
    }
    friend QuadComplex operator*(const QuadComplex& x, const QuadComplex& y) {
        return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
    }
    friend QuadComplex operator/(const QuadComplex& x, const QuadComplex& y) {
        return x * y.inverse();
    }
    friend bool operator==(const QuadComplex& x, const QuadComplex& y) {
        return x.re_ == y.re_ && x.im_ == y.im_;
    }
    friend bool operator!=(const QuadComplex& x, const QuadComplex& y) { return !(x == y); }

private:
    QuadScalar re_;
    QuadScalar im_;
};

json to_json(const QuadComplex& z);
QuadComplex complex_from_json(const json& j);

// [z] = floor(Re z + 1/2) + i floor(Im z + 1/2).
GaussianInt nearest_gaussian(const QuadComplex& z);
bool in_fundamental_domain(const QuadComplex& z);

// z -> i^rot * (mir ? conj(z) : z)
struct Symmetry {
    int rot = 0;
    bool mir = false;

    static Symmetry identity() { return {0, false}; }
    static Symmetry rota() { return {1, false}; }
    static Symmetry mir1() { return {0, true}; }
    static Symmetry mir2() { return {2, true}; }

    Symmetry compose(const Symmetry& inner) const;  // this after inner
    Symmetry inverse() const;
    std::string name() const;
    static Symmetry from_name(const std::string& n);

    friend bool operator==(const Symmetry& a, const Symmetry& b) {
        return a.rot == b.rot && a.mir == b.mir;
    }
    friend bool operator!=(const Symmetry& a, const Symmetry& b) { return !(a == b); }
};

GaussianInt apply_symmetry(const Symmetry& s, const GaussianInt& z);
QuadComplex apply_symmetry(const Symmetry& s, const QuadComplex& z);

}  // namespace hcf
