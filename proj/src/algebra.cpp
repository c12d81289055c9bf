#include "algrad/algebra.hpp"

#include <algorithm>
#include <atomic>

#include "algrad/errors.hpp"
#include "algrad/linear_solve.hpp"

namespace algrad {

namespace {

AlgebraId next_algebra_id() {
    static std::atomic<AlgebraId> counter{1};
    return counter.fetch_add(1);
}

void require_same_algebra(const Element& a, const Element& b) {
    if (a.algebra_id() != b.algebra_id()) throw DomainError("elements belong to different algebras");
}

}  // namespace

bool Element::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

double Element::sup_norm() const {
    double m = 0.0;
    for (const auto& c : coords_) m = std::max(m, c.magnitude());
    return m;
}

StructureConstants::StructureConstants(std::size_t dim, std::vector<Scalar> gamma) : dim_(dim), gamma_(std::move(gamma)) {
    if (dim_ == 0) throw ShapeError("structure constants need dimension >= 1");
    if (gamma_.size() != dim_ * dim_ * dim_)
        throw ShapeError("structure constants have " + std::to_string(gamma_.size()) + " entries, expected " +
                         std::to_string(dim_ * dim_ * dim_));
    Domain d = gamma_.front().domain();
    for (const auto& g : gamma_)
        if (g.domain() != d) throw FieldError("structure constants mix domains");
}

StructureConstants StructureConstants::from_nested(const std::vector<std::vector<std::vector<Scalar>>>& gamma) {
    const std::size_t d = gamma.size();
    if (d == 0) throw ShapeError("structure constants need dimension >= 1");
    std::vector<Scalar> flat;
    flat.reserve(d * d * d);
    for (const auto& plane : gamma) {
        if (plane.size() != d) throw ShapeError("structure constants are not d x d x d");
        for (const auto& row : plane) {
            if (row.size() != d) throw ShapeError("structure constants are not d x d x d");
            flat.insert(flat.end(), row.begin(), row.end());
        }
    }
    return StructureConstants(d, std::move(flat));
}

std::vector<Scalar> StructureConstantRule::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
    const std::size_t d = gamma_.dim();
    Domain dom = a.empty() ? gamma_.flat().front().domain() : a.front().domain();
    std::vector<Scalar> out(d, Scalar::zero(dom));
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            Scalar w = a[i] * b[j];
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& g = gamma_(i, j, k);
                if (!g.is_zero()) out[k] += w * g;
            }
        }
    }
    return out;
}

AlgebraHandle::AlgebraHandle(std::string name, std::size_t dim, Domain domain, std::shared_ptr<const ProductRule> rule,
                             std::optional<std::vector<Scalar>> unit_coords) {
    if (dim == 0) throw ShapeError("algebra dimension must be positive");
    auto state = std::make_shared<State>();
    state->id = next_algebra_id();
    state->name = std::move(name);
    state->dim = dim;
    state->domain = domain;
    state->rule = std::move(rule);
    if (unit_coords) {
        if (unit_coords->size() != dim) throw ShapeError("unit has wrong length");
        for (const auto& c : *unit_coords)
            if (c.domain() != domain) throw FieldError("unit coordinates are not in the algebra's domain");
        state->unit.emplace(state->id, std::move(*unit_coords));
    }
    state_ = std::move(state);
}

const Element& AlgebraHandle::unit() const {
    if (!state_->unit) throw DomainError("algebra '" + name() + "' has no unit element");
    return *state_->unit;
}

Element AlgebraHandle::zero() const { return Element(id(), std::vector<Scalar>(dim(), Scalar::zero(domain()))); }

Element AlgebraHandle::basis(std::size_t i) const {
    if (i >= dim()) throw ShapeError("basis index out of range");
    std::vector<Scalar> c(dim(), Scalar::zero(domain()));
    c[i] = Scalar::one(domain());
    return Element(id(), std::move(c));
}

Element AlgebraHandle::element_from_coords(std::vector<Scalar> coords) const {
    if (coords.size() != dim())
        throw ShapeError("expected " + std::to_string(dim()) + " coordinates, got " + std::to_string(coords.size()));
    for (const auto& c : coords)
        if (c.domain() != domain())
            throw FieldError("coordinate in " + to_string(c.domain()) + " for algebra over " + to_string(domain()));
    return Element(id(), std::move(coords));
}

void AlgebraHandle::check_owns(const Element& a) const {
    if (a.algebra_id() != id()) throw DomainError("element does not belong to algebra '" + name() + "'");
}

Element AlgebraHandle::scalar_multiple(const Scalar& alpha, const Element& a) const {
    check_owns(a);
    std::vector<Scalar> c;
    c.reserve(dim());
    for (const auto& x : a.coords()) c.push_back(alpha * x);
    return Element(id(), std::move(c));
}

Element AlgebraHandle::add(const Element& a, const Element& b) const {
    check_owns(a);
    check_owns(b);
    std::vector<Scalar> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(a[i] + b[i]);
    return Element(id(), std::move(c));
}

Element AlgebraHandle::subtract(const Element& a, const Element& b) const {
    check_owns(a);
    check_owns(b);
    std::vector<Scalar> c;
    c.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) c.push_back(a[i] - b[i]);
    return Element(id(), std::move(c));
}

Element AlgebraHandle::multiply(const Element& a, const Element& b) const {
    check_owns(a);
    check_owns(b);
    return Element(id(), rule().multiply(a.coords(), b.coords()));
}

Element AlgebraHandle::power(const Element& a, int k) const {
    check_owns(a);
    if (k < 0) throw DomainError("negative powers are not defined");
    if (k == 0) {
        if (!has_unit()) throw DomainError("a^0 requested in non-unital algebra '" + name() + "'");
        return unit();
    }
    Element p = a;
    for (int i = 1; i < k; ++i) p = multiply(a, p);
    return p;
}

AlgebraHandle make_structure_algebra(const StructureConstants& gamma, Field field, std::optional<std::vector<Scalar>> unit,
                                     std::string name) {
    const std::size_t d = gamma.dim();
    Domain dom{field, gamma.flat().front().domain().mode};
    std::vector<Scalar> cast;
    cast.reserve(gamma.flat().size());
    for (const auto& g : gamma.flat()) cast.push_back(g.cast(dom));
    StructureConstants constants(d, std::move(cast));

    if (unit) {
        for (auto& u : *unit) u = u.cast(dom);
    } else {
        // e * b_j = b_j  and  b_j * e = b_j, unknown e; 2 d^2 equations.
        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhs;
        rows.reserve(2 * d * d);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Scalar> left, right;
                left.reserve(d);
                right.reserve(d);
                for (std::size_t i = 0; i < d; ++i) {
                    left.push_back(constants(i, j, k));
                    right.push_back(constants(j, i, k));
                }
                Scalar target = j == k ? Scalar::one(dom) : Scalar::zero(dom);
                rows.push_back(std::move(left));
                rhs.push_back(target);
                rows.push_back(std::move(right));
                rhs.push_back(target);
            }
        }
        unit = solve_linear_system(std::move(rows), std::move(rhs), d, dom);
    }
    auto rule = std::make_shared<StructureConstantRule>(std::move(constants));
    return AlgebraHandle(std::move(name), d, dom, std::move(rule), std::move(unit));
}

StructureConstants structure_constants_of(const AlgebraHandle& alg) {
    const std::size_t d = alg.dim();
    std::vector<Scalar> flat;
    flat.reserve(d * d * d);
    for (std::size_t i = 0; i < d; ++i) {
        Element bi = alg.basis(i);
        for (std::size_t j = 0; j < d; ++j) {
            Element p = alg.multiply(bi, alg.basis(j));
            flat.insert(flat.end(), p.coords().begin(), p.coords().end());
        }
    }
    return StructureConstants(d, std::move(flat));
}

Element linear_combine(const Scalar& alpha, const Element& a, const Scalar& beta, const Element& b) {
    require_same_algebra(a, b);
    if (a.size() != b.size()) throw ShapeError("elements have different lengths");
    std::vector<Scalar> c;
    c.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c.push_back(alpha * a[i] + beta * b[i]);
    return Element(a.algebra_id(), std::move(c));
}

Element alg_mul(const AlgebraHandle& alg, const Element& a, const Element& b) { return alg.multiply(a, b); }

Element alg_power(const AlgebraHandle& alg, const Element& a, int k) { return alg.power(a, k); }

Element element_from_coords(const AlgebraHandle& alg, std::vector<Scalar> coords) {
    return alg.element_from_coords(std::move(coords));
}

std::vector<Scalar> coords_of(const Element& a) { return {a.coords().begin(), a.coords().end()}; }

double sup_distance(const Element& a, const Element& b) {
    require_same_algebra(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, (a[i] - b[i]).magnitude());
    return m;
}

}  // namespace algrad
