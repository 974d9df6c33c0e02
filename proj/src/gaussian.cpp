#include "hcf/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hcf {

mpq_class parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) fail(ErrorKind::Usage, "empty rational");
    auto dot = s.find('.');
    try {
        if (dot != std::string::npos) {
            bool neg = s[0] == '-';
            std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
            dot = body.find('.');
            std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
            if (ip.empty()) ip = "0";
            mpz_class num(ip + fp), den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
            mpq_class q(num, den);
            q.canonicalize();
            return neg ? mpq_class(-q) : q;
        }
        if (s[0] == '+') s = s.substr(1);
        mpq_class q(s);
        if (q.get_den() == 0) fail(ErrorKind::Usage, "zero denominator in '" + raw + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Usage, "not a rational: '" + raw + "'");
    }
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string GaussianInt::str() const {
    if (im == 0) return re.get_str();
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = im.get_str() + "i";
    if (re == 0) return imag;
    std::string out = re.get_str();
    if (im > 0) out += "+";
    return out + imag;
}

bool is_digit(const GaussianInt& a) { return a.norm() > 1; }

mpz_class pm(const GaussianInt& a) {
    mpz_class x = abs(a.re), y = abs(a.im);
    return x < y ? x : y;
}

json to_json(const GaussianInt& a) {
    auto part = [](const mpz_class& v) -> json {
        if (v.fits_slong_p()) return v.get_si();
        return v.get_str();
    };
    return json::array({part(a.re), part(a.im)});
}

namespace {
mpz_class integer_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpq_class q = parse_rational(j.get<std::string>());
        if (q.get_den() != 1) fail(ErrorKind::Usage, "expected an integer, got " + j.dump());
        return q.get_num();
    }
    fail(ErrorKind::Usage, "expected an integer, got " + j.dump());
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return parse_rational(os.str());
    }
    fail(ErrorKind::Usage, "expected a rational, got " + j.dump());
}

long squarefree_part(long d, mpz_class& root_factor) {
    root_factor = 1;
    if (d <= 1) return d;
    long out = d;
    for (long p = 2; p * p <= out; ++p) {
        while (out % (p * p) == 0) {
            out /= p * p;
            root_factor *= p;
        }
    }
    return out;
}
}  // namespace

GaussianInt gaussian_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::Usage, "Gaussian integer must be [re, im]: " + j.dump());
    return {integer_from_json(j[0]), integer_from_json(j[1])};
}

QuadScalar::QuadScalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d < 0) fail(ErrorKind::FieldMismatch, "negative radicand");
    normalize();
}

QuadScalar QuadScalar::sqrt_of(long d) { return QuadScalar(0, 1, d); }

void QuadScalar::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    mpz_class k;
    long sf = squarefree_part(d_, k);
    if (sf == 0) {
        b_ = 0;
        d_ = 0;
    } else if (sf == 1) {
        a_ += b_ * k;
        b_ = 0;
        d_ = 0;
    } else {
        b_ *= k;
        d_ = sf;
    }
}

long QuadScalar::common_d(const QuadScalar& x, const QuadScalar& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        fail(ErrorKind::FieldMismatch,
             "sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ") mixed");
    return x.d_;
}

int QuadScalar::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
    int c = cmp(lhs, rhs);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

mpz_class QuadScalar::floor() const {
    mpz_class k;
    if (b_ == 0) {
        mpz_fdiv_q(k.get_mpz_t(), a_.get_num_mpz_t(), a_.get_den_mpz_t());
        return k;
    }
    size_t bits = 64 + 2 * std::max({mpz_sizeinbase(a_.get_num_mpz_t(), 2), mpz_sizeinbase(a_.get_den_mpz_t(), 2),
                                     mpz_sizeinbase(b_.get_num_mpz_t(), 2), mpz_sizeinbase(b_.get_den_mpz_t(), 2)});
    mpf_class x(a_, bits), r(d_, bits);
    r = sqrt(r);
    x += mpf_class(b_, bits) * r;
    mpf_class f(0, bits);
    mpf_floor(f.get_mpf_t(), x.get_mpf_t());
    k = mpz_class(f);
    while ((*this - QuadScalar(mpq_class(k))).sign() < 0) --k;
    while ((*this - QuadScalar(mpq_class(k + 1))).sign() >= 0) ++k;
    return k;
}

QuadScalar QuadScalar::conj_field() const { return QuadScalar(a_, -b_, d_); }

QuadScalar QuadScalar::inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero");
    mpq_class n = a_ * a_ - b_ * b_ * d_;
    return QuadScalar(a_ / n, -b_ / n, d_);
}

double QuadScalar::approx() const {
    double v = a_.get_d();
    if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string QuadScalar::str() const {
    if (b_ == 0) return rational_str(a_);
    std::string out;
    if (a_ != 0) out = rational_str(a_) + (b_ > 0 ? "+" : "");
    return out + rational_str(b_) + "*sqrt(" + std::to_string(d_) + ")";
}

QuadScalar QuadScalar::operator-() const { return QuadScalar(-a_, -b_, d_); }

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    long d = QuadScalar::common_d(x, y);
    return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    long d = QuadScalar::common_d(x, y);
    return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    long d = QuadScalar::common_d(x, y);
    return QuadScalar(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

json to_json(const QuadScalar& x) {
    return json{{"a", rational_str(x.a())}, {"b", rational_str(x.b())}, {"d", x.d()}};
}

QuadScalar quad_from_json(const json& j) {
    if (j.is_object()) {
        mpq_class a = j.contains("a") ? rational_from_json(j.at("a")) : mpq_class(0);
        mpq_class b = j.contains("b") ? rational_from_json(j.at("b")) : mpq_class(0);
        long d = j.contains("d") ? j.at("d").get<long>() : 0;
        return QuadScalar(a, b, d);
    }
    return QuadScalar(rational_from_json(j));
}

QuadComplex QuadComplex::inverse() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero");
    QuadScalar n = norm().inverse();
    return {re_ * n, -im_ * n};
}

std::string QuadComplex::str() const {
    if (im_.is_zero()) return re_.str();
    return "(" + re_.str() + ")+(" + im_.str() + ")i";
}

json to_json(const QuadComplex& z) { return json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

QuadComplex complex_from_json(const json& j) {
    if (j.is_object()) {
        QuadScalar re = j.contains("re") ? quad_from_json(j.at("re")) : QuadScalar();
        QuadScalar im = j.contains("im") ? quad_from_json(j.at("im")) : QuadScalar();
        return {re, im};
    }
    if (j.is_array() && j.size() == 2) return {quad_from_json(j[0]), quad_from_json(j[1])};
    return {quad_from_json(j)};
}

GaussianInt nearest_gaussian(const QuadComplex& z) {
    QuadScalar half(mpq_class(1, 2));
    return {(z.re() + half).floor(), (z.im() + half).floor()};
}

bool in_fundamental_domain(const QuadComplex& z) { return nearest_gaussian(z).is_zero(); }

Symmetry Symmetry::compose(const Symmetry& inner) const {
    int r = mir ? (rot - inner.rot) : (rot + inner.rot);
    return {((r % 4) + 4) % 4, mir != inner.mir};
}

Symmetry Symmetry::inverse() const {
    if (mir) return *this;
    return {(4 - rot) % 4, false};
}

std::string Symmetry::name() const {
    static const char* plain[] = {"id", "Rota", "Rota2", "Rota3"};
    static const char* refl[] = {"Mir1", "Rota*Mir1", "Mir2", "Rota3*Mir1"};
    return mir ? refl[rot] : plain[rot];
}

Symmetry Symmetry::from_name(const std::string& n) {
    for (int r = 0; r < 4; ++r)
        for (bool m : {false, true})
            if (Symmetry{r, m}.name() == n) return {r, m};
    if (n == "Mir1Mir2" || n == "Mir1*Mir2") return mir1().compose(mir2());
    fail(ErrorKind::Usage, "unknown symmetry '" + n + "'");
}

GaussianInt apply_symmetry(const Symmetry& s, const GaussianInt& z) {
    GaussianInt w = s.mir ? z.conj() : z;
    for (int k = 0; k < s.rot; ++k) w = GaussianInt(-w.im, w.re);
    return w;
}

QuadComplex apply_symmetry(const Symmetry& s, const QuadComplex& z) {
    QuadComplex w = s.mir ? z.conj() : z;
    for (int k = 0; k < s.rot; ++k) w = QuadComplex(-w.im(), w.re());
    return w;
}

}  // namespace hcf
