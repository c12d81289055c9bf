#include "algrad/matrix_algebras.hpp"

#include <algorithm>

#include "algrad/errors.hpp"
#include "algrad/roots.hpp"

namespace algrad {

namespace {

std::pair<int, int> corner(int n, ProductKind kind) {
    switch (kind) {
        case ProductKind::Star1n: return {0, n - 1};
        case ProductKind::StarN1: return {n - 1, 0};
        default: throw DomainError("prime map is defined only for the star products");
    }
}

/// Sign test on a real-valued entry: -1, 0, 1; nullopt for non-real entries.
std::optional<int> real_sign(const Scalar& s) {
    if (s.is_exact()) {
        if (s.imag_exact() != 0) return std::nullopt;
        return sgn(s.real_exact());
    }
    auto z = s.to_complex();
    if (z.imag() != 0.0) return std::nullopt;
    return (z.real() > 0) - (z.real() < 0);
}

}  // namespace

std::string_view to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::Standard: return "standard";
        case ProductKind::Hadamard: return "hadamard";
        case ProductKind::Jordan: return "jordan";
        case ProductKind::Star1n: return "star1n";
        case ProductKind::StarN1: return "starn1";
    }
    return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
    for (auto k : {ProductKind::Standard, ProductKind::Hadamard, ProductKind::Jordan, ProductKind::Star1n, ProductKind::StarN1})
        if (to_string(k) == name) return k;
    return std::nullopt;
}

bool is_star(ProductKind kind) { return kind == ProductKind::Star1n || kind == ProductKind::StarN1; }

MatrixElement hadamard_product(const MatrixElement& a, const MatrixElement& b) {
    if (a.n() != b.n()) throw ShapeError("matrix sizes differ");
    MatrixElement c = a;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) c(i, j) = a(i, j) * b(i, j);
    return c;
}

MatrixElement jordan_product(const MatrixElement& a, const MatrixElement& b) {
    return Scalar::from_rational(1, 2, a.domain()) * (a * b + b * a);
}

MatrixElement prime_map(const MatrixElement& a, ProductKind kind) {
    auto [i, j] = corner(a.n(), kind);
    MatrixElement c = a;
    c(i, j) = -c(i, j);
    return c;
}

MatrixElement star_product(const MatrixElement& a, const MatrixElement& b, ProductKind kind) {
    return prime_map(prime_map(a, kind) * prime_map(b, kind), kind);
}

MatrixElement matrix_product(const MatrixElement& a, const MatrixElement& b, ProductKind kind) {
    switch (kind) {
        case ProductKind::Standard: return a * b;
        case ProductKind::Hadamard: return hadamard_product(a, b);
        case ProductKind::Jordan: return jordan_product(a, b);
        default: return star_product(a, b, kind);
    }
}

std::vector<Scalar> MatrixProductRule::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
    MatrixElement ma(n_, domain_, {a.begin(), a.end()});
    MatrixElement mb(n_, domain_, {b.begin(), b.end()});
    MatrixElement c = matrix_product(ma, mb, kind_);
    return {c.entries().begin(), c.entries().end()};
}

AlgebraHandle make_matrix_algebra(int n, Field field, ProductKind kind, Mode mode) {
    if (n < 2) throw DomainError("matrix algebras need n >= 2");
    const Domain d{field, mode};
    MatrixElement unit = kind == ProductKind::Hadamard ? MatrixElement::ones(n, d) : MatrixElement::identity(n, d);
    std::string name = std::string(to_string(kind)) + "(n=" + std::to_string(n) + "," + std::string(to_string(field)) + ")";
    return AlgebraHandle(std::move(name), static_cast<std::size_t>(n) * static_cast<std::size_t>(n), d,
                         std::make_shared<MatrixProductRule>(n, kind, d),
                         std::vector<Scalar>(unit.entries().begin(), unit.entries().end()));
}

std::optional<MatrixAlgebraInfo> matrix_algebra_info(const AlgebraHandle& alg) {
    if (auto* rule = dynamic_cast<const MatrixProductRule*>(&alg.rule())) return MatrixAlgebraInfo{rule->n(), rule->kind()};
    return std::nullopt;
}

double hadamard_radius_oracle(const MatrixElement& a) {
    double m = 0.0;
    for (const auto& x : a.entries()) m = std::max(m, x.magnitude());
    return m;
}

Polynomial hadamard_minpoly_oracle(const MatrixElement& a) {
    if (a.domain().mode != Mode::Exact)
        throw UnsupportedModeError("distinct entries cannot be decided robustly in approx mode");
    std::vector<Scalar> distinct;
    for (const auto& x : a.entries())
        if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
    return Polynomial::from_roots(distinct, a.domain());
}

MatrixElement hadamard_power_oracle(const MatrixElement& a, int k) {
    if (k < 1) throw DomainError("power must be positive");
    MatrixElement c = a;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            Scalar p = a(i, j);
            for (int e = 1; e < k; ++e) p = p * a(i, j);
            c(i, j) = p;
        }
    return c;
}

double star_radius_oracle(const MatrixElement& a, ProductKind kind) { return spectral_radius(prime_map(a, kind)); }

MatrixElement star_power_oracle(const MatrixElement& a, int k, ProductKind kind) {
    if (k < 1) throw DomainError("power must be positive");
    return prime_map(matrix_power(prime_map(a, kind), k), kind);
}

MatrixElement example_star_nilpotent(int n, Mode mode) {
    if (n < 2) throw DomainError("example needs n >= 2");
    const Domain d{Field::Complex, mode};
    MatrixElement a(n, d);
    a(0, 0) = Scalar::one(d);
    a(0, n - 1) = -Scalar::imaginary_unit(d);
    a(n - 1, 0) = Scalar::imaginary_unit(d);
    a(n - 1, n - 1) = -Scalar::one(d);
    return a;
}

MatrixElement example_positive_negative_square(int n, Domain domain) {
    if (n < 2) throw DomainError("example needs n >= 2");
    MatrixElement a(n, domain);
    a(0, n - 1) = Scalar::one(domain);
    a(n - 1, 0) = Scalar::one(domain);
    return a;
}

std::pair<MatrixElement, MatrixElement> example_jordan_nonalternative(int n, Domain domain) {
    if (n < 2) throw DomainError("example needs n >= 2");
    MatrixElement a(n, domain), b(n, domain);
    a(0, 1) = Scalar::one(domain);
    b(1, 0) = Scalar::one(domain);
    return {a, b};
}

bool is_positive_matrix(const MatrixElement& a) {
    if (a.is_zero()) return false;
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Scalar& s) {
        auto sign = real_sign(s);
        return sign && *sign >= 0;
    });
}

bool is_negative_matrix(const MatrixElement& a) {
    if (a.is_zero()) return false;
    return std::all_of(a.entries().begin(), a.entries().end(), [](const Scalar& s) {
        auto sign = real_sign(s);
        return sign && *sign <= 0;
    });
}

}  // namespace algrad
