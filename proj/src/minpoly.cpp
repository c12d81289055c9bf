#include "algrad/minpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "algrad/errors.hpp"

namespace algrad {

namespace {

using cplx = std::complex<double>;

double norm2(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

double sup_norm(std::span<const Scalar> v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, x.magnitude());
    return m;
}

/// Walks the ladder of powers, handing each coordinate vector to `absorb`
/// until it reports a dependency.
template <class Absorb>
void walk_ladder(const AlgebraHandle& alg, const Element& a, Absorb&& absorb) {
    const bool unital = alg.has_unit();
    const int first_power = unital ? 0 : 1;
    Element current = unital ? alg.unit() : a;
    for (int power = first_power; power <= static_cast<int>(alg.dim()) + 1; ++power) {
        if (absorb(power - first_power, current)) return;
        current = power == 0 ? a : alg.multiply(a, current);
    }
    throw std::logic_error("power ladder exceeded dim + 1 without a dependency");
}

Polynomial assemble(const std::vector<Scalar>& expr, int first_power, Domain d) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(first_power), Scalar::zero(d));
    coeffs.insert(coeffs.end(), expr.begin(), expr.end());
    coeffs.back() = Scalar::one(d);
    return Polynomial(std::move(coeffs), d);
}

MinimalPolynomialResult exact_ladder(const AlgebraHandle& alg, const Element& a) {
    struct Row {
        std::vector<Scalar> vec;
        std::vector<Scalar> expr;
        std::size_t pivot;
    };
    const Domain dom = alg.domain();
    const int first_power = alg.has_unit() ? 0 : 1;
    std::vector<Row> rows;
    std::vector<double> residuals;
    double max_norm = 0.0;
    std::optional<Polynomial> result;

    walk_ladder(alg, a, [&](int step, const Element& power) {
        std::vector<Scalar> v = coords_of(power);
        max_norm = std::max(max_norm, sup_norm(v));
        std::vector<Scalar> e(static_cast<std::size_t>(step) + 1, Scalar::zero(dom));
        e.back() = Scalar::one(dom);
        for (const auto& row : rows) {
            Scalar c = v[row.pivot];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!row.vec[i].is_zero()) v[i] -= c * row.vec[i];
            for (std::size_t j = 0; j < row.expr.size(); ++j) e[j] -= c * row.expr[j];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (nz == v.end()) {
            residuals.push_back(0.0);
            result = assemble(e, first_power, dom);
            return true;
        }
        residuals.push_back(max_norm > 0.0 ? sup_norm(v) / max_norm : 0.0);
        const auto pivot = static_cast<std::size_t>(nz - v.begin());
        Scalar inv = nz->inverse();
        for (auto& x : v) x = x * inv;
        for (auto& x : e) x = x * inv;
        rows.push_back({std::move(v), std::move(e), pivot});
        return false;
    });
    return {std::move(*result), std::move(residuals), false};
}

MinimalPolynomialResult approx_ladder(const AlgebraHandle& alg, const Element& a) {
    struct Row {
        std::vector<cplx> q;
        std::vector<cplx> expr;
    };
    const Domain dom = alg.domain();
    const int first_power = alg.has_unit() ? 0 : 1;
    std::vector<Row> rows;
    std::vector<double> residuals;
    double max_norm = 0.0;
    bool ill = false;
    std::optional<Polynomial> result;

    walk_ladder(alg, a, [&](int step, const Element& power) {
        std::vector<cplx> v;
        v.reserve(power.size());
        for (const auto& c : power.coords()) v.push_back(c.to_complex());
        max_norm = std::max(max_norm, norm2(v));
        std::vector<cplx> e(static_cast<std::size_t>(step) + 1, 0.0);
        e.back() = 1.0;
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& row : rows) {
                cplx c = 0.0;
                for (std::size_t i = 0; i < v.size(); ++i) c += std::conj(row.q[i]) * v[i];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * row.q[i];
                for (std::size_t j = 0; j < row.expr.size(); ++j) e[j] -= c * row.expr[j];
            }
        }
        double r = norm2(v);
        double rel = max_norm > 0.0 ? r / max_norm : 0.0;
        residuals.push_back(rel);
        if (rel >= kLadderTolerance / 10 && rel <= kLadderTolerance * 10) ill = true;
        if (rel < kLadderTolerance) {
            std::vector<Scalar> expr;
            expr.reserve(e.size());
            for (const auto& x : e)
                expr.push_back(dom.field == Field::Real ? Scalar(x.real()) : Scalar(x));
            result = assemble(expr, first_power, dom);
            return true;
        }
        for (auto& x : v) x /= r;
        for (auto& x : e) x /= r;
        rows.push_back({std::move(v), std::move(e)});
        return false;
    });
    return {std::move(*result), std::move(residuals), ill};
}

}  // namespace

MinimalPolynomialResult minimal_polynomial_with_certificate(const AlgebraHandle& alg, const Element& a) {
    alg.check_owns(a);
    return alg.mode() == Mode::Exact ? exact_ladder(alg, a) : approx_ladder(alg, a);
}

Polynomial minimal_polynomial(const AlgebraHandle& alg, const Element& a) {
    return minimal_polynomial_with_certificate(alg, a).polynomial;
}

Element evaluate_at_element(const AlgebraHandle& alg, const Polynomial& p, const Element& a) {
    alg.check_owns(a);
    if (p.domain() != alg.domain())
        throw FieldError("polynomial over " + to_string(p.domain()) + " evaluated in algebra over " +
                         to_string(alg.domain()));
    Element acc = alg.zero();
    if (p.is_zero()) return acc;
    const Scalar& c0 = p.coeffs().front();
    if (!c0.is_zero()) acc = alg.add(acc, alg.scalar_multiple(c0, alg.unit()));
    Element power = a;
    for (int k = 1; k <= p.degree(); ++k) {
        if (k > 1) power = alg.multiply(a, power);
        const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (!c.is_zero()) acc = alg.add(acc, alg.scalar_multiple(c, power));
    }
    return acc;
}

}  // namespace algrad
