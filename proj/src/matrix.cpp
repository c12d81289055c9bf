#include "algrad/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "algrad/errors.hpp"

namespace algrad {

namespace {

void require_compatible(const MatrixElement& a, const MatrixElement& b) {
    if (a.n() != b.n()) throw ShapeError("matrix sizes differ");
    if (a.domain() != b.domain()) throw FieldError("matrices over different domains");
}

}  // namespace

MatrixElement::MatrixElement(int n, Domain d)
    : n_(n), domain_(d), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar::zero(d)) {
    if (n < 1) throw ShapeError("matrix size must be positive");
}

MatrixElement::MatrixElement(int n, Domain d, std::vector<Scalar> row_major) : n_(n), domain_(d), entries_(std::move(row_major)) {
    if (n < 1) throw ShapeError("matrix size must be positive");
    if (entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw ShapeError("matrix needs n^2 entries");
    for (const auto& e : entries_)
        if (e.domain() != d) throw FieldError("matrix entry outside " + to_string(d));
}

MatrixElement MatrixElement::identity(int n, Domain d) {
    MatrixElement m(n, d);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(d);
    return m;
}

MatrixElement MatrixElement::ones(int n, Domain d) {
    return MatrixElement(n, d, std::vector<Scalar>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar::one(d)));
}

MatrixElement MatrixElement::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw ShapeError("matrix needs at least one row");
    std::vector<Scalar> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n) throw ShapeError("matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    Domain d = flat.front().domain();
    return MatrixElement(n, d, std::move(flat));
}

MatrixElement MatrixElement::from_element(const Element& e, int n) {
    if (e.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) throw ShapeError("element is not n^2 long");
    return MatrixElement(n, e[0].domain(), coords_of(e));
}

Scalar MatrixElement::trace() const {
    Scalar t = Scalar::zero(domain_);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool MatrixElement::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element MatrixElement::to_element(const AlgebraHandle& alg) const { return alg.element_from_coords(entries_); }

MatrixElement operator+(const MatrixElement& a, const MatrixElement& b) {
    require_compatible(a, b);
    MatrixElement c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

MatrixElement operator-(const MatrixElement& a, const MatrixElement& b) {
    require_compatible(a, b);
    MatrixElement c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
}

MatrixElement operator*(const MatrixElement& a, const MatrixElement& b) {
    require_compatible(a, b);
    const int n = a.n_;
    MatrixElement c(n, a.domain_);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

MatrixElement operator*(const Scalar& s, const MatrixElement& a) {
    MatrixElement c = a;
    for (auto& x : c.entries_) x = s * x;
    return c;
}

MatrixElement matrix_power(const MatrixElement& a, int k) {
    if (k < 0) throw DomainError("negative matrix power");
    MatrixElement p = MatrixElement::identity(a.n(), a.domain());
    for (int i = 0; i < k; ++i) p = a * p;
    return p;
}

}  // namespace algrad
