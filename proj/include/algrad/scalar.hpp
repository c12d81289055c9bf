#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>
#include <variant>

namespace algrad {

enum class Field { Real, Complex };
enum class Mode { Exact, Approx };

/// The (field, mode) pair every scalar, element, algebra and polynomial lives in.
struct Domain {
    Field field = Field::Real;
    Mode mode = Mode::Exact;
    friend bool operator==(const Domain&, const Domain&) = default;
};

std::string_view to_string(Field f);
std::string_view to_string(Mode m);
std::string to_string(Domain d);

struct GaussianRational {
    mpq_class re;
    mpq_class im;
};

/// A field element over R or C, either exact (GMP rationals) or binary64.
///
/// Exact rationals are kept canonical (lowest terms, positive denominator).
/// Binary operations require both operands to share a Domain and throw
/// FieldError otherwise; use cast() to move a value between domains.
class Scalar {
   public:
    using Value = std::variant<mpq_class, GaussianRational, double, std::complex<double>>;

    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(mpq_class q);
    explicit Scalar(GaussianRational z);
    explicit Scalar(double x) : value_(x) {}
    explicit Scalar(std::complex<double> z) : value_(z) {}

    static Scalar zero(Domain d) { return from_int(0, d); }
    static Scalar one(Domain d) { return from_int(1, d); }
    static Scalar from_int(long v, Domain d);
    static Scalar from_rational(long num, long den, Domain d);
    static Scalar from_parts(const mpq_class& re, const mpq_class& im, Domain d);
    static Scalar imaginary_unit(Domain d);

    Domain domain() const;
    bool is_exact() const { return value_.index() < 2; }
    bool is_zero() const;
    const Value& value() const { return value_; }

    /// Exact real and imaginary parts. Throws UnsupportedModeError in approx mode.
    mpq_class real_exact() const;
    mpq_class imag_exact() const;
    /// Exact |z|^2. Throws UnsupportedModeError in approx mode.
    mpq_class norm_squared_exact() const;

    Scalar operator-() const;
    Scalar conj() const;
    Scalar inverse() const;
    Scalar cast(Domain target) const;

    std::complex<double> to_complex() const;
    double real_double() const { return to_complex().real(); }

    /// |z|. Exact values are rounded once, at the final square root.
    double magnitude() const;

    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);

   private:
    Value value_;
};

inline double magnitude(const Scalar& z) { return z.magnitude(); }

/// Parses `int | int/int | [a][+-bi]` (a, b in int|int/int form). Approx mode
/// additionally accepts decimal literals in place of int/int.
Scalar parse_scalar(std::string_view text, Field field, Mode mode = Mode::Exact);

/// Round-to-nearest conversion of an exact rational.
double to_double(const mpq_class& q);

/// sqrt(q) for q >= 0, with a single rounding to binary64.
double sqrt_rounded_once(const mpq_class& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace algrad
