#include "algrad/cayley_dickson.hpp"

#include <cmath>

#include "algrad/errors.hpp"

namespace algrad {

namespace {

std::vector<Scalar> add(std::span<const Scalar> x, std::span<const Scalar> y) {
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + y[i]);
    return out;
}

std::vector<Scalar> sub(std::span<const Scalar> x, std::span<const Scalar> y) {
    std::vector<Scalar> out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
    return out;
}

}  // namespace

std::vector<Scalar> cayley_dickson_conjugate(std::span<const Scalar> x) {
    std::vector<Scalar> out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

std::vector<Scalar> cayley_dickson_multiply(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw ShapeError("Cayley-Dickson operands differ in length");
    if (x.size() == 1) return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    auto a = x.first(h), b = x.subspan(h);
    auto c = y.first(h), d = y.subspan(h);
    auto dbar = cayley_dickson_conjugate(d);
    auto cbar = cayley_dickson_conjugate(c);
    auto left = sub(cayley_dickson_multiply(a, c), cayley_dickson_multiply(dbar, b));
    auto right = add(cayley_dickson_multiply(d, a), cayley_dickson_multiply(b, cbar));
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

AlgebraHandle make_cayley_dickson(int dim, Mode mode) {
    if (dim != 1 && dim != 2 && dim != 4 && dim != 8 && dim != 16)
        throw DomainError("Cayley-Dickson dimension must be one of 1, 2, 4, 8, 16");
    const Domain d{Field::Real, mode};
    std::vector<Scalar> unit(static_cast<std::size_t>(dim), Scalar::zero(d));
    unit[0] = Scalar::one(d);
    return AlgebraHandle("cd" + std::to_string(dim), static_cast<std::size_t>(dim), d, std::make_shared<CayleyDicksonRule>(),
                         std::move(unit));
}

double euclidean_norm(const Element& x) {
    if (x.size() == 0) return 0.0;
    if (x[0].is_exact()) {
        mpq_class q = 0;
        for (const auto& c : x.coords()) q += c.norm_squared_exact();
        return sqrt_rounded_once(q);
    }
    double s = 0.0;
    for (const auto& c : x.coords()) s += std::norm(c.to_complex());
    return std::sqrt(s);
}

}  // namespace algrad
