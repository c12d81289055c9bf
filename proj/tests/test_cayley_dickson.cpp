#include <gtest/gtest.h>

#include <cmath>

#include "algrad/cayley_dickson.hpp"
#include "algrad/errors.hpp"
#include "algrad/laws.hpp"
#include "algrad/minpoly.hpp"
#include "algrad/random.hpp"
#include "algrad/roots.hpp"
#include "support.hpp"

using namespace algrad;
using algrad::oracle::q;

namespace {

Element coords(const AlgebraHandle& alg, std::initializer_list<long> xs) {
    std::vector<Scalar> v;
    for (long x : xs) v.push_back(Scalar::from_int(x, alg.domain()));
    return alg.element_from_coords(std::move(v));
}

TEST(CayleyDickson, ComplexNumbers) {
    AlgebraHandle c = make_cayley_dickson(2);
    EXPECT_EQ(c.multiply(coords(c, {0, 1}), coords(c, {0, 1})), coords(c, {-1, 0}));
    EXPECT_EQ(c.unit(), coords(c, {1, 0}));
    EXPECT_EQ(c.field(), Field::Real);
}

TEST(CayleyDickson, QuaternionsAnticommute) {
    AlgebraHandle h = make_cayley_dickson(4);
    for (std::size_t a = 1; a < 4; ++a) {
        EXPECT_EQ(h.multiply(h.basis(a), h.basis(a)), h.scalar_multiple(q(-1), h.unit()));
        for (std::size_t b = a + 1; b < 4; ++b) {
            Element ab = h.multiply(h.basis(a), h.basis(b));
            Element ba = h.multiply(h.basis(b), h.basis(a));
            EXPECT_EQ(ab, h.scalar_multiple(q(-1), ba));
            EXPECT_FALSE(ab.is_zero());
        }
    }
    // ij is a unit quaternion orthogonal to 1, i, j.
    Element ij = h.multiply(h.basis(1), h.basis(2));
    EXPECT_TRUE(ij == h.basis(3) || ij == h.scalar_multiple(q(-1), h.basis(3)));
}

TEST(CayleyDickson, SedenionsArePowerAssociative) {
    AlgebraHandle s = make_cayley_dickson(16);
    LawReport r = check_power_associativity(s, 10, 5, 101);
    EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(CayleyDickson, OctonionsNotAssociativeSedenionsNotAlternative) {
    EXPECT_EQ(check_binary_law(make_cayley_dickson(8), Law::Associativity, 5, 103).verdict, Verdict::FailsWithWitness);
    EXPECT_EQ(check_binary_law(make_cayley_dickson(4), Law::Associativity, 20, 103).verdict, Verdict::Holds);
    EXPECT_EQ(check_alternativity(make_cayley_dickson(8), 20, 107).verdict, Verdict::Holds);
    EXPECT_EQ(check_alternativity(make_cayley_dickson(16), 20, 107).verdict, Verdict::FailsWithWitness);
}

TEST(CayleyDickson, UnsupportedDimension) {
    for (int d : {0, 3, 6, 32, -2}) EXPECT_THROW(make_cayley_dickson(d), DomainError) << d;
    EXPECT_EQ(make_cayley_dickson(1).dim(), 1u);
}

TEST(CayleyDickson, ConjugationIsInvolutionAndNormMultiplies) {
    RandomSource rng(109);
    for (int d : {2, 4, 8, 16}) {
        AlgebraHandle alg = make_cayley_dickson(d);
        for (int t = 0; t < 20; ++t) {
            Element x = rng.element(alg);
            auto c = cayley_dickson_conjugate(x.coords());
            EXPECT_EQ(cayley_dickson_conjugate(c), coords_of(x));
            // x * conj(x) = |x|^2 * unit
            mpq_class n2 = 0;
            for (const auto& v : x.coords()) n2 += v.norm_squared_exact();
            Element xc = alg.multiply(x, alg.element_from_coords(c));
            EXPECT_EQ(xc, alg.scalar_multiple(Scalar(n2), alg.unit()));
        }
    }
}

TEST(EuclideanNorm, Examples) {
    AlgebraHandle c = make_cayley_dickson(2);
    EXPECT_EQ(euclidean_norm(c.unit()), 1.0);
    EXPECT_EQ(euclidean_norm(coords(c, {3, 4})), 5.0);
    EXPECT_EQ(euclidean_norm(c.zero()), 0.0);
    AlgebraHandle o = make_cayley_dickson(8);
    EXPECT_EQ(euclidean_norm(coords(o, {1, 1, 1, 1, 1, 1, 1, 1})), std::sqrt(8.0));
}

TEST(CayleyDickson, RadiusEqualsNorm) {
    RandomSource rng(113);
    for (int d : {2, 4, 8, 16}) {
        AlgebraHandle alg = make_cayley_dickson(d);
        for (int t = 0; t < 25; ++t) {
            Element x = rng.element(alg);
            ASSERT_NEAR(radius(alg, x).radius, euclidean_norm(x), 1e-8) << alg.name();
        }
    }
}

// Empirical: the minimal polynomial of a non-real element is quadratic.
TEST(CayleyDickson, NonRealElementsHaveQuadraticMinpoly) {
    RandomSource rng(127);
    for (int d : {2, 4, 8, 16}) {
        AlgebraHandle alg = make_cayley_dickson(d);
        for (int t = 0; t < 20; ++t) {
            Element x = rng.element(alg);
            bool real = true;
            for (std::size_t i = 1; i < x.size(); ++i) real = real && x[i].is_zero();
            ASSERT_EQ(minimal_polynomial(alg, x).degree(), real ? 1 : 2);
        }
        EXPECT_EQ(minimal_polynomial(alg, alg.scalar_multiple(q(5), alg.unit())).degree(), 1);
    }
}

TEST(CayleyDickson, ApproxModeMatchesNorm) {
    AlgebraHandle alg = make_cayley_dickson(8, Mode::Approx);
    RandomSource rng(131);
    for (int t = 0; t < 20; ++t) {
        Element x = rng.element(alg);
        ASSERT_NEAR(radius(alg, x).radius, euclidean_norm(x), 1e-8);
    }
}

}  // namespace
