#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algrad/scalar.hpp"

namespace algrad {

using AlgebraId = std::uint64_t;

/// Coordinate vector of an algebra element in the algebra's fixed basis.
class Element {
   public:
    Element(AlgebraId id, std::vector<Scalar> coords) : id_(id), coords_(std::move(coords)) {}

    AlgebraId algebra_id() const { return id_; }
    std::span<const Scalar> coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    /// Max coordinate modulus.
    double sup_norm() const;

    friend bool operator==(const Element& a, const Element& b) { return a.id_ == b.id_ && a.coords_ == b.coords_; }

   private:
    AlgebraId id_;
    std::vector<Scalar> coords_;
};

/// A bilinear product on coordinate vectors of a fixed length.
class ProductRule {
   public:
    virtual ~ProductRule() = default;
    virtual std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const = 0;
};

/// gamma(i, j, k) is the k-th coordinate of basis_i * basis_j.
class StructureConstants {
   public:
    StructureConstants(std::size_t dim, std::vector<Scalar> gamma);
    /// Throws ShapeError unless the nesting is exactly d x d x d with d >= 1.
    static StructureConstants from_nested(const std::vector<std::vector<std::vector<Scalar>>>& gamma);

    std::size_t dim() const { return dim_; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Scalar>& flat() const { return gamma_; }

   private:
    std::size_t dim_;
    std::vector<Scalar> gamma_;
};

/// Immutable handle to a finite-dimensional algebra over R or C.
///
/// Copies share state and compare equal by id. Elements remember the id of
/// the algebra that created them; mixing elements across algebras throws
/// DomainError.
class AlgebraHandle {
   public:
    AlgebraHandle(std::string name, std::size_t dim, Domain domain, std::shared_ptr<const ProductRule> rule,
                  std::optional<std::vector<Scalar>> unit_coords);

    AlgebraId id() const { return state_->id; }
    std::size_t dim() const { return state_->dim; }
    Domain domain() const { return state_->domain; }
    Field field() const { return state_->domain.field; }
    Mode mode() const { return state_->domain.mode; }
    const std::string& name() const { return state_->name; }
    const ProductRule& rule() const { return *state_->rule; }

    bool has_unit() const { return state_->unit.has_value(); }
    /// Throws DomainError for non-unital algebras.
    const Element& unit() const;

    Element zero() const;
    Element basis(std::size_t i) const;
    Element element_from_coords(std::vector<Scalar> coords) const;
    Element scalar_multiple(const Scalar& alpha, const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element subtract(const Element& a, const Element& b) const;
    Element multiply(const Element& a, const Element& b) const;
    /// a^k as the left-to-right iterate a * a^(k-1); a^0 is the unit.
    Element power(const Element& a, int k) const;

    void check_owns(const Element& a) const;
    Scalar scalar(long num, long den = 1) const { return Scalar::from_rational(num, den, domain()); }

   private:
    struct State {
        AlgebraId id;
        std::string name;
        std::size_t dim;
        Domain domain;
        std::shared_ptr<const ProductRule> rule;
        std::optional<Element> unit;
    };
    std::shared_ptr<const State> state_;
};

/// Product defined by a table of structure constants.
class StructureConstantRule final : public ProductRule {
   public:
    explicit StructureConstantRule(StructureConstants gamma) : gamma_(std::move(gamma)) {}
    std::vector<Scalar> multiply(std::span<const Scalar> a, std::span<const Scalar> b) const override;
    const StructureConstants& constants() const { return gamma_; }

   private:
    StructureConstants gamma_;
};

/// Builds an algebra from structure constants. Without an explicit unit, the
/// linear system e*b_j = b_j = b_j*e is solved and its solution, if any, is stored.
AlgebraHandle make_structure_algebra(const StructureConstants& gamma, Field field,
                                     std::optional<std::vector<Scalar>> unit = std::nullopt,
                                     std::string name = "structure");

/// Materializes the structure constants of any algebra from basis products.
StructureConstants structure_constants_of(const AlgebraHandle& alg);

Element linear_combine(const Scalar& alpha, const Element& a, const Scalar& beta, const Element& b);
Element alg_mul(const AlgebraHandle& alg, const Element& a, const Element& b);
Element alg_power(const AlgebraHandle& alg, const Element& a, int k);
Element element_from_coords(const AlgebraHandle& alg, std::vector<Scalar> coords);
std::vector<Scalar> coords_of(const Element& a);

/// Max coordinate modulus of a - b.
double sup_distance(const Element& a, const Element& b);

}  // namespace algrad
