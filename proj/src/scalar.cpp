#include "algrad/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

#include "algrad/errors.hpp"

namespace algrad {

std::string_view to_string(Field f) { return f == Field::Real ? "R" : "C"; }
std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "approx"; }
std::string to_string(Domain d) { return std::string(to_string(d.field)) + "/" + std::string(to_string(d.mode)); }

double to_double(const mpq_class& q) {
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    double r = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

double sqrt_rounded_once(const mpq_class& q) {
    if (q < 0) throw DomainError("square root of a negative rational");
    mpfr_t x, r;
    mpfr_init2(x, 256);
    mpfr_init2(r, 53);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(r, x, MPFR_RNDN);
    double out = mpfr_get_d(r, MPFR_RNDN);
    mpfr_clear(x);
    mpfr_clear(r);
    return out;
}

namespace {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_complex_parts(const std::string& re, const std::string& im, bool re_zero, bool im_zero,
                                  bool im_negative) {
    if (im_zero) return re;
    std::string imag = im_negative ? im.substr(1) : im;
    if (re_zero) return (im_negative ? "-" : "") + imag + "i";
    return re + (im_negative ? "-" : "+") + imag + "i";
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
    throw FieldError("mixed-domain scalar operation: " + to_string(a.domain()) + " with " + to_string(b.domain()));
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

Scalar::Scalar(GaussianRational z) : value_(std::move(z)) {
    auto& g = std::get<GaussianRational>(value_);
    g.re.canonicalize();
    g.im.canonicalize();
}

Scalar Scalar::from_int(long v, Domain d) { return from_rational(v, 1, d); }

Scalar Scalar::from_rational(long num, long den, Domain d) {
    if (den == 0) throw DomainError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return from_parts(q, mpq_class(0), d);
}

Scalar Scalar::from_parts(const mpq_class& re, const mpq_class& im, Domain d) {
    if (d.field == Field::Real && im != 0) throw FieldError("imaginary part given for a real scalar");
    if (d.mode == Mode::Exact) {
        if (d.field == Field::Real) return Scalar(re);
        return Scalar(GaussianRational{re, im});
    }
    if (d.field == Field::Real) return Scalar(to_double(re));
    return Scalar(std::complex<double>(to_double(re), to_double(im)));
}

Scalar Scalar::imaginary_unit(Domain d) { return from_parts(0, 1, d); }

Domain Scalar::domain() const {
    switch (value_.index()) {
        case 0: return {Field::Real, Mode::Exact};
        case 1: return {Field::Complex, Mode::Exact};
        case 2: return {Field::Real, Mode::Approx};
        default: return {Field::Complex, Mode::Approx};
    }
}

bool Scalar::is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>)
                return v.re == 0 && v.im == 0;
            else if constexpr (std::is_same_v<T, std::complex<double>>)
                return v == std::complex<double>(0.0, 0.0);
            else
                return v == 0;
        },
        value_);
}

mpq_class Scalar::real_exact() const {
    if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
    if (auto* g = std::get_if<GaussianRational>(&value_)) return g->re;
    throw UnsupportedModeError("exact real part requested from an approximate scalar");
}

mpq_class Scalar::imag_exact() const {
    if (std::holds_alternative<mpq_class>(value_)) return 0;
    if (auto* g = std::get_if<GaussianRational>(&value_)) return g->im;
    throw UnsupportedModeError("exact imaginary part requested from an approximate scalar");
}

mpq_class Scalar::norm_squared_exact() const {
    mpq_class re = real_exact();
    mpq_class im = imag_exact();
    return re * re + im * im;
}

Scalar Scalar::operator-() const {
    return std::visit(
        [](const auto& v) -> Scalar {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>)
                return Scalar(GaussianRational{-v.re, -v.im});
            else if constexpr (std::is_same_v<T, mpq_class>)
                return Scalar(mpq_class(-v));
            else
                return Scalar(-v);
        },
        value_);
}

Scalar Scalar::conj() const {
    if (auto* g = std::get_if<GaussianRational>(&value_)) return Scalar(GaussianRational{g->re, -g->im});
    if (auto* c = std::get_if<std::complex<double>>(&value_)) return Scalar(std::conj(*c));
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    return std::visit(
        [](const auto& v) -> Scalar {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>) {
                mpq_class n = v.re * v.re + v.im * v.im;
                return Scalar(GaussianRational{v.re / n, -v.im / n});
            } else if constexpr (std::is_same_v<T, mpq_class>) {
                return Scalar(mpq_class(1 / v));
            } else if constexpr (std::is_same_v<T, double>) {
                return Scalar(1.0 / v);
            } else {
                return Scalar(1.0 / v);
            }
        },
        value_);
}

Scalar Scalar::cast(Domain target) const {
    Domain src = domain();
    if (src == target) return *this;
    if (src.mode == Mode::Approx && target.mode == Mode::Exact)
        throw UnsupportedModeError("cannot convert an approximate scalar to exact");
    if (src.mode == Mode::Exact) {
        mpq_class re = real_exact(), im = imag_exact();
        if (target.field == Field::Real && im != 0) throw FieldError("non-real value cast to a real field");
        return from_parts(re, im, target);
    }
    std::complex<double> z = to_complex();
    if (target.field == Field::Real) {
        if (z.imag() != 0.0) throw FieldError("non-real value cast to a real field");
        return Scalar(z.real());
    }
    return Scalar(z);
}

std::complex<double> Scalar::to_complex() const {
    return std::visit(
        [](const auto& v) -> std::complex<double> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>)
                return {to_double(v.re), to_double(v.im)};
            else if constexpr (std::is_same_v<T, mpq_class>)
                return {to_double(v), 0.0};
            else
                return v;
        },
        value_);
}

double Scalar::magnitude() const {
    return std::visit(
        [](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>) {
                if (v.im == 0) return to_double(abs(v.re));
                if (v.re == 0) return to_double(abs(v.im));
                return sqrt_rounded_once(v.re * v.re + v.im * v.im);
            } else if constexpr (std::is_same_v<T, mpq_class>) {
                return to_double(abs(v));
            } else {
                return std::abs(v);
            }
        },
        value_);
}

std::string Scalar::to_string() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GaussianRational>) {
                return format_complex_parts(v.re.get_str(), v.im.get_str(), v.re == 0, v.im == 0, v.im < 0);
            } else if constexpr (std::is_same_v<T, mpq_class>) {
                return v.get_str();
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                return format_complex_parts(format_double(v.real()), format_double(v.imag()), v.real() == 0.0,
                                            v.imag() == 0.0, std::signbit(v.imag()));
            }
        },
        value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) mismatch(a, b);
    switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<0>(a.value_) + std::get<0>(b.value_)));
        case 1: {
            const auto &x = std::get<1>(a.value_), &y = std::get<1>(b.value_);
            return Scalar(GaussianRational{x.re + y.re, x.im + y.im});
        }
        case 2: return Scalar(std::get<2>(a.value_) + std::get<2>(b.value_));
        default: return Scalar(std::get<3>(a.value_) + std::get<3>(b.value_));
    }
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) mismatch(a, b);
    switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<0>(a.value_) - std::get<0>(b.value_)));
        case 1: {
            const auto &x = std::get<1>(a.value_), &y = std::get<1>(b.value_);
            return Scalar(GaussianRational{x.re - y.re, x.im - y.im});
        }
        case 2: return Scalar(std::get<2>(a.value_) - std::get<2>(b.value_));
        default: return Scalar(std::get<3>(a.value_) - std::get<3>(b.value_));
    }
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) mismatch(a, b);
    switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<0>(a.value_) * std::get<0>(b.value_)));
        case 1: {
            const auto &x = std::get<1>(a.value_), &y = std::get<1>(b.value_);
            if (x.im == 0 && y.im == 0) return Scalar(GaussianRational{x.re * y.re, 0});
            return Scalar(GaussianRational{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re});
        }
        case 2: return Scalar(std::get<2>(a.value_) * std::get<2>(b.value_));
        default: return Scalar(std::get<3>(a.value_) * std::get<3>(b.value_));
    }
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) mismatch(a, b);
    if (b.is_zero()) throw DomainError("division by zero");
    switch (a.value_.index()) {
        case 0: return Scalar(mpq_class(std::get<0>(a.value_) / std::get<0>(b.value_)));
        case 1: return a * b.inverse();
        case 2: return Scalar(std::get<2>(a.value_) / std::get<2>(b.value_));
        default: return Scalar(std::get<3>(a.value_) / std::get<3>(b.value_));
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    switch (a.value_.index()) {
        case 0: return std::get<0>(a.value_) == std::get<0>(b.value_);
        case 1: {
            const auto &x = std::get<1>(a.value_), &y = std::get<1>(b.value_);
            return x.re == y.re && x.im == y.im;
        }
        case 2: return std::get<2>(a.value_) == std::get<2>(b.value_);
        default: return std::get<3>(a.value_) == std::get<3>(b.value_);
    }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Number {
    mpq_class exact;
    double approx = 0.0;
    bool is_decimal = false;
};

class ScalarParser {
   public:
    ScalarParser(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

    Scalar parse(Field field) {
        trim();
        if (text_.empty()) throw ParseError("empty scalar");
        mpq_class re_q = 0, im_q = 0;
        double re_d = 0.0, im_d = 0.0;
        bool has_imag = false;

        auto first = term();
        if (first.imaginary) {
            im_q = first.value.exact;
            im_d = first.value.approx;
            has_imag = true;
            if (pos_ != text_.size()) fail();
        } else {
            re_q = first.value.exact;
            re_d = first.value.approx;
            skip_space();
            if (pos_ != text_.size()) {
                if (text_[pos_] != '+' && text_[pos_] != '-') fail();
                auto second = term();
                if (!second.imaginary || pos_ != text_.size()) fail();
                im_q = second.value.exact;
                im_d = second.value.approx;
                has_imag = true;
            }
        }
        if (field == Field::Real && has_imag)
            throw FieldError("imaginary unit in scalar '" + std::string(text_) + "' for a real field");

        if (mode_ == Mode::Exact) return Scalar::from_parts(re_q, im_q, {field, mode_});
        if (field == Field::Real) return Scalar(re_d);
        return Scalar(std::complex<double>(re_d, im_d));
    }

   private:
    struct Term {
        Number value;
        bool imaginary = false;
    };

    void trim() {
        while (!text_.empty() && std::isspace(static_cast<unsigned char>(text_.front()))) text_.remove_prefix(1);
        while (!text_.empty() && std::isspace(static_cast<unsigned char>(text_.back()))) text_.remove_suffix(1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail() const {
        std::size_t end = pos_ + 1;
        while (end < text_.size() && text_[end] != '+' && text_[end] != '-') ++end;
        std::string token(text_.substr(pos_ < text_.size() ? pos_ : text_.size(), end - pos_));
        if (token.empty()) token = "<end of input>";
        throw ParseError("unexpected token '" + token + "' in scalar '" + std::string(text_) + "'");
    }

    Term term() {
        Term t;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            negative = text_[pos_] == '-';
            ++pos_;
            skip_space();
        }
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            t.value.exact = 1;
            t.value.approx = 1.0;
        } else {
            t.value = number();
        }
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            t.imaginary = true;
            ++pos_;
        }
        if (negative) {
            t.value.exact = -t.value.exact;
            t.value.approx = -t.value.approx;
        }
        return t;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Number number() {
        Number n;
        std::size_t start = pos_;
        std::string num = digits();
        bool decimal = false;
        if (mode_ == Mode::Approx && pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
            decimal = true;
            if (text_[pos_] == '.') {
                ++pos_;
                std::string frac = digits();
                if (num.empty() && frac.empty()) {
                    pos_ = start;
                    fail();
                }
            } else if (num.empty()) {
                pos_ = start;
                fail();
            }
            if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
                ++pos_;
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
                if (digits().empty()) {
                    pos_ = start;
                    fail();
                }
            }
        }
        if (decimal) {
            double x = 0.0;
            auto res = std::from_chars(text_.data() + start, text_.data() + pos_, x);
            if (res.ec != std::errc()) {
                pos_ = start;
                fail();
            }
            n.approx = x;
            n.is_decimal = true;
            return n;
        }
        if (num.empty()) fail();
        std::string den = "1";
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string sign;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) sign = text_[pos_++];
            den = digits();
            if (!den.empty() && sign == "-") den = "-" + den;
            if (den.empty()) fail();
        }
        mpz_class d(den);
        if (d == 0) {
            pos_ = start;
            throw ParseError("zero denominator in scalar '" + std::string(text_) + "'");
        }
        n.exact = mpq_class(mpz_class(num), d);
        n.exact.canonicalize();
        n.approx = to_double(n.exact);
        return n;
    }

    std::string_view text_;
    Mode mode_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, Field field, Mode mode) { return ScalarParser(text, mode).parse(field); }

}  // namespace algrad
