#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "algrad/errors.hpp"
#include "algrad/matrix_algebras.hpp"
#include "algrad/minpoly.hpp"
#include "algrad/random.hpp"
#include "algrad/roots.hpp"
#include "support.hpp"

using namespace algrad;
using algrad::oracle::charpoly_by_interpolation;
using algrad::oracle::gauss;
using algrad::oracle::q;

namespace {

const Domain kRX{Field::Real, Mode::Exact};
const Domain kCX{Field::Complex, Mode::Exact};

Polynomial poly(std::initializer_list<long> c, Domain d = kRX) {
    std::vector<Scalar> v;
    for (long x : c) v.push_back(Scalar::from_int(x, d));
    return Polynomial(std::move(v), d);
}

MatrixElement mat(std::initializer_list<std::initializer_list<long>> rows, Domain d = kRX) {
    std::vector<std::vector<Scalar>> r;
    for (auto row : rows) {
        r.emplace_back();
        for (long x : row) r.back().push_back(Scalar::from_int(x, d));
    }
    return MatrixElement::from_rows(r);
}

std::vector<double> sorted_real_parts(const RootSet& rs) {
    std::vector<double> out;
    for (auto z : rs.roots) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

TEST(PolyRoots, SqrtTwo) {
    RootSet rs = poly_roots(poly({-2, 0, 1}));
    ASSERT_EQ(rs.size(), 2u);
    auto re = sorted_real_parts(rs);
    EXPECT_NEAR(re[0], -std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(re[1], std::sqrt(2.0), 1e-14);
    for (auto z : rs.roots) EXPECT_EQ(z.imag(), 0.0);
    for (double r : rs.residuals) EXPECT_LE(r, 1e-10 * 2);
}

TEST(PolyRoots, IntegerQuarticIsExact) {
    RootSet rs = poly_roots(poly({24, -50, 35, -10, 1}));
    ASSERT_EQ(rs.size(), 4u);
    EXPECT_EQ(sorted_real_parts(rs), (std::vector<double>{1, 2, 3, 4}));
    for (std::size_t i = 0; i < rs.size(); ++i) {
        ASSERT_TRUE(rs.exact[i].has_value());
        EXPECT_EQ(rs.residuals[i], 0.0);
    }
}

TEST(PolyRoots, MonomialHasOnlyZeroRoots) {
    RootSet rs = poly_roots(poly({0, 0, 0, 1}));
    ASSERT_EQ(rs.size(), 3u);
    for (auto z : rs.roots) EXPECT_EQ(z, std::complex<double>(0.0, 0.0));
}

TEST(PolyRoots, RepeatedAndComplexRoots) {
    // (t - 1/2)^3 (t^2 + 1)
    Polynomial p = Polynomial({q(-1, 2), q(1)}, kRX);
    p = p * p * p * poly({1, 0, 1});
    RootSet rs = poly_roots(p);
    ASSERT_EQ(rs.size(), 5u);
    int halves = 0, units = 0;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (std::abs(rs.roots[i] - std::complex<double>(0.5, 0)) < 1e-14) ++halves;
        if (std::abs(std::abs(rs.roots[i].imag()) - 1.0) < 1e-14 && std::abs(rs.roots[i].real()) < 1e-14) ++units;
    }
    EXPECT_EQ(halves, 3);
    EXPECT_EQ(units, 2);
}

TEST(PolyRoots, ApproxModeAndNonMonicInput) {
    Polynomial p({Scalar(-4.0), Scalar(0.0), Scalar(2.0)}, {Field::Real, Mode::Approx});
    RootSet rs = poly_roots(p);
    auto re = sorted_real_parts(rs);
    EXPECT_NEAR(re[0], -std::sqrt(2.0), 1e-13);
    EXPECT_NEAR(re[1], std::sqrt(2.0), 1e-13);
    EXPECT_THROW(poly_roots(poly({3})), DomainError);
}

TEST(PolyRoots, VietaOnMinimalPolynomials) {
    RandomSource rng(41);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 3;
        const Field f = t % 2 ? Field::Complex : Field::Real;
        AlgebraHandle alg = make_matrix_algebra(n, f, ProductKind::Standard);
        Polynomial p = minimal_polynomial(alg, rng.element(alg));
        RootSet rs = poly_roots(p);
        const int m = p.degree();
        ASSERT_EQ(static_cast<int>(rs.size()), m);
        std::complex<double> sum = 0.0, prod = 1.0;
        for (auto z : rs.roots) {
            sum += z;
            prod *= z;
        }
        std::complex<double> want_sum = -p.coeff(m - 1).to_complex();
        std::complex<double> want_prod = (m % 2 ? -1.0 : 1.0) * p.coeff(0).to_complex();
        ASSERT_LE(std::abs(sum - want_sum), 1e-8 * std::max(1.0, std::abs(want_sum))) << p;
        ASSERT_LE(std::abs(prod - want_prod), 1e-8 * std::max(1.0, std::abs(want_prod))) << p;
        double cmax = 1.0;
        for (const auto& c : p.coeffs()) cmax = std::max(cmax, c.magnitude());
        for (double r : rs.residuals) ASSERT_LE(r, kRootResidualFactor * cmax);
    }
}

TEST(Radius, UnitHasRadiusOne) {
    for (ProductKind k : {ProductKind::Standard, ProductKind::Hadamard, ProductKind::Jordan, ProductKind::StarN1}) {
        AlgebraHandle alg = make_matrix_algebra(3, Field::Real, k);
        RadiusReport r = radius(alg, alg.unit());
        EXPECT_EQ(r.minpoly, poly({-1, 1}));
        EXPECT_EQ(r.radius, 1.0);
        EXPECT_EQ(r.algebra_name, alg.name());
    }
}

TEST(Radius, HadamardExample) {
    AlgebraHandle alg = make_matrix_algebra(2, Field::Real, ProductKind::Hadamard);
    RadiusReport r = radius(alg, mat({{1, 2}, {3, 4}}).to_element(alg));
    EXPECT_EQ(r.radius, 4.0);
    EXPECT_EQ(r.argmax_root, std::complex<double>(4.0, 0.0));
}

TEST(Radius, StarNilpotentExample) {
    AlgebraHandle alg = make_matrix_algebra(2, Field::Complex, ProductKind::Star1n);
    RadiusReport r = radius(alg, example_star_nilpotent(2).to_element(alg));
    EXPECT_EQ(r.radius, 0.0);
    EXPECT_EQ(r.minpoly, poly({0, 0, 1}, kCX));
}

TEST(Radius, TiesPreferLargestRealThenImaginary) {
    RootSet pm = poly_roots(poly({-1, 0, 1}));
    EXPECT_EQ(pm.roots[argmax_root_index(pm)], std::complex<double>(1.0, 0.0));
    RootSet pi = poly_roots(poly({1, 0, 1}));
    EXPECT_EQ(pi.roots[argmax_root_index(pi)], std::complex<double>(0.0, 1.0));
    // t^4 - 1: roots 1, -1, i, -i all of modulus one.
    RootSet four = poly_roots(poly({-1, 0, 0, 0, 1}));
    EXPECT_EQ(four.roots[argmax_root_index(four)], std::complex<double>(1.0, 0.0));
    AlgebraHandle alg = make_matrix_algebra(2, Field::Real, ProductKind::Standard);
    RadiusReport r = radius(alg, mat({{0, -1}, {1, 0}}).to_element(alg));
    EXPECT_EQ(r.argmax_root, std::complex<double>(0.0, 1.0));
}

TEST(SpectralRadius, Examples) {
    EXPECT_EQ(spectral_radius(MatrixElement::identity(3, kRX)), 1.0);
    EXPECT_EQ(spectral_radius(mat({{0, 1}, {0, 0}})), 0.0);
    EXPECT_EQ(spectral_radius(mat({{0, -1}, {1, 0}})), 1.0);
}

TEST(CharacteristicPolynomial, MatchesInterpolationOracle) {
    RandomSource rng(43);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + t % 4;
        Domain d{t % 2 ? Field::Complex : Field::Real, Mode::Exact};
        MatrixElement a = rng.matrix(n, d);
        ASSERT_EQ(characteristic_polynomial(a).coeffs(), charpoly_by_interpolation(a));
    }
}

TEST(CharacteristicPolynomial, NilpotentExample) {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Scalar> want(static_cast<std::size_t>(n + 1), Scalar::zero(kCX));
        want[n - 2] = Scalar::from_int(-2, kCX);
        want[n] = Scalar::one(kCX);
        EXPECT_EQ(characteristic_polynomial(example_star_nilpotent(n)).coeffs(), want);
    }
}

TEST(Radius, StandardMatchesSpectralRadius) {
    RandomSource rng(47);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 3;
        AlgebraHandle alg = make_matrix_algebra(n, t % 2 ? Field::Complex : Field::Real, ProductKind::Standard);
        MatrixElement a = rng.matrix(n, alg.domain());
        ASSERT_NEAR(radius(alg, a.to_element(alg)).radius, spectral_radius(a), 1e-8);
    }
}

TEST(Radius, ExactAndApproxAgree) {
    RandomSource rng(53);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 3;
        const Field f = t % 2 ? Field::Complex : Field::Real;
        for (ProductKind k : {ProductKind::Standard, ProductKind::Hadamard, ProductKind::Star1n}) {
            AlgebraHandle ex = make_matrix_algebra(n, f, k);
            AlgebraHandle ap = make_matrix_algebra(n, f, k, Mode::Approx);
            MatrixElement a = rng.matrix(n, ex.domain());
            std::vector<Scalar> cast;
            for (const auto& x : a.entries()) cast.push_back(x.cast(ap.domain()));
            double re = radius(ex, a.to_element(ex)).radius;
            double ra = radius(ap, ap.element_from_coords(cast)).radius;
            ASSERT_NEAR(re, ra, 1e-8 * std::max(1.0, re)) << ex.name();
        }
    }
}

// Unscored: radius drift under tiny entry perturbations. This is a smoke test
// of continuity on sampled matrices, not a test of the continuity theorem.
TEST(RadiusSmoke, SmallPerturbationsMoveRadiusLittle) {
    RandomSource rng(59);
    std::uniform_real_distribution<double> jitter(-1e-9, 1e-9);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 3;
        AlgebraHandle alg = make_matrix_algebra(n, Field::Real, ProductKind::Standard, Mode::Approx);
        Element a = rng.element(alg);
        std::vector<Scalar> moved;
        for (const auto& x : a.coords()) moved.push_back(Scalar(x.real_double() + jitter(rng.engine())));
        double r0 = radius(alg, a).radius;
        double r1 = radius(alg, alg.element_from_coords(moved)).radius;
        EXPECT_LT(std::fabs(r0 - r1), 1e-3);
    }
}

}  // namespace
