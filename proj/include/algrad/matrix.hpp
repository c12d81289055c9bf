#pragma once

#include <span>
#include <vector>

#include "algrad/algebra.hpp"
#include "algrad/scalar.hpp"

namespace algrad {

/// Square n x n matrix of Scalars, row-major, indices 0-based.
class MatrixElement {
   public:
    MatrixElement(int n, Domain d);
    MatrixElement(int n, Domain d, std::vector<Scalar> row_major);

    static MatrixElement identity(int n, Domain d);
    /// The all-ones matrix E.
    static MatrixElement ones(int n, Domain d);
    static MatrixElement from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Row-major reading of an element's coordinates; requires size n^2.
    static MatrixElement from_element(const Element& e, int n);

    int n() const { return n_; }
    Domain domain() const { return domain_; }
    const Scalar& operator()(int i, int j) const { return entries_[index(i, j)]; }
    Scalar& operator()(int i, int j) { return entries_[index(i, j)]; }
    std::span<const Scalar> entries() const { return entries_; }

    Scalar trace() const;
    bool is_zero() const;
    Element to_element(const AlgebraHandle& alg) const;

    friend MatrixElement operator+(const MatrixElement& a, const MatrixElement& b);
    friend MatrixElement operator-(const MatrixElement& a, const MatrixElement& b);
    /// Standard matrix product.
    friend MatrixElement operator*(const MatrixElement& a, const MatrixElement& b);
    friend MatrixElement operator*(const Scalar& s, const MatrixElement& a);
    friend bool operator==(const MatrixElement& a, const MatrixElement& b) = default;

   private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j); }

    int n_;
    Domain domain_;
    std::vector<Scalar> entries_;
};

/// Standard k-th power, k >= 0.
MatrixElement matrix_power(const MatrixElement& a, int k);

}  // namespace algrad
