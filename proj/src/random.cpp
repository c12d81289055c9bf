#include "algrad/random.hpp"

#include <algorithm>
#include <numeric>

namespace algrad {

int RandomSource::uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

mpq_class RandomSource::small_rational() {
    int num = uniform_int(-9, 9);
    int den = 0;
    while (den == 0) den = uniform_int(-9, 9);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Scalar RandomSource::scalar(Domain d) {
    mpq_class re = small_rational();
    mpq_class im = d.field == Field::Complex ? small_rational() : mpq_class(0);
    return Scalar::from_parts(re, im, d);
}

Scalar RandomSource::nonzero_scalar(Domain d) {
    for (;;) {
        Scalar s = scalar(d);
        if (!s.is_zero()) return s;
    }
}

MatrixElement RandomSource::matrix(int n, Domain d) {
    MatrixElement m(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = scalar(d);
    return m;
}

MatrixElement RandomSource::strictly_upper_matrix(int n, Domain d) {
    MatrixElement m(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = scalar(d);
    return m;
}

Element RandomSource::element(const AlgebraHandle& alg) {
    std::vector<Scalar> c;
    c.reserve(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) c.push_back(scalar(alg.domain()));
    return alg.element_from_coords(std::move(c));
}

std::vector<std::size_t> RandomSource::permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), engine_);
    return p;
}

}  // namespace algrad
