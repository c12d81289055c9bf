#include <gtest/gtest.h>

#include "algrad/cayley_dickson.hpp"
#include "algrad/errors.hpp"
#include "algrad/laws.hpp"
#include "algrad/matrix_algebras.hpp"
#include "algrad/random.hpp"
#include "algrad/roots.hpp"
#include "support.hpp"

using namespace algrad;
using algrad::oracle::q;

namespace {

const Domain kRX{Field::Real, Mode::Exact};

/// b0 b0 = b1, b0 b1 = b0, everything else 0: (b0 b0) b0 = 0 but b0 (b0 b0) = b0.
AlgebraHandle not_power_associative() {
    std::vector<Scalar> g(8, q(0));
    g[(0 * 2 + 0) * 2 + 1] = q(1);
    g[(0 * 2 + 1) * 2 + 0] = q(1);
    return make_structure_algebra(StructureConstants(2, g), Field::Real);
}

bool same_report(const LawReport& a, const LawReport& b) {
    return a.law == b.law && a.verdict == b.verdict && a.trials == b.trials && a.parameter == b.parameter &&
           a.max_discrepancy == b.max_discrepancy && a.witness.size() == b.witness.size() &&
           std::equal(a.witness.begin(), a.witness.end(), b.witness.begin(),
                      [](const Element& x, const Element& y) { return coords_of(x) == coords_of(y); });
}

TEST(Parenthesizations, CatalanCounts) {
    AlgebraHandle alg = make_matrix_algebra(2, Field::Real, ProductKind::Standard);
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(all_parenthesizations(alg, alg.unit(), k).size(), catalan[k - 1]);
    EXPECT_THROW(all_parenthesizations(alg, alg.unit(), 7), DomainError);
    EXPECT_THROW(all_parenthesizations(alg, alg.unit(), 0), DomainError);
}

TEST(PowerAssociativity, Examples) {
    EXPECT_EQ(check_power_associativity(make_matrix_algebra(3, Field::Real, ProductKind::Jordan), 10, 6, 1).verdict,
              Verdict::Holds);
    EXPECT_EQ(check_power_associativity(make_matrix_algebra(2, Field::Real, ProductKind::Hadamard), 10, 6, 1).verdict,
              Verdict::Holds);
    EXPECT_EQ(check_power_associativity(make_cayley_dickson(16), 5, 5, 1).verdict, Verdict::Holds);
}

TEST(PowerAssociativity, DetectsFailureWithReplayableWitness) {
    AlgebraHandle alg = not_power_associative();
    LawReport r = check_power_associativity(alg, 5, 4, 3);
    ASSERT_EQ(r.verdict, Verdict::FailsWithWitness);
    EXPECT_EQ(r.witness.size(), 1u);
    EXPECT_GE(r.parameter, 3);
    EXPECT_GT(r.witness_discrepancy, 0.0);
    EXPECT_TRUE(replay_witness(alg, r));
}

TEST(PowerAssociativity, Preconditions) {
    AlgebraHandle alg = make_matrix_algebra(2, Field::Real, ProductKind::Standard);
    EXPECT_THROW(check_power_associativity(alg, 0, 3, 1), DomainError);
    EXPECT_THROW(check_power_associativity(alg, 1, 1, 1), DomainError);
    EXPECT_THROW(check_power_associativity(alg, 1, 7, 1), DomainError);
}

TEST(Alternativity, JordanPairIsTheWitness) {
    for (int n = 2; n <= 4; ++n) {
        AlgebraHandle alg = make_matrix_algebra(n, Field::Real, ProductKind::Jordan);
        LawReport r = check_alternativity(alg, 5, 7);
        ASSERT_EQ(r.verdict, Verdict::FailsWithWitness);
        auto [a, b] = example_jordan_nonalternative(n, kRX);
        ASSERT_EQ(r.witness.size(), 2u);
        EXPECT_EQ(r.witness[0], a.to_element(alg));
        EXPECT_EQ(r.witness[1], b.to_element(alg));
        EXPECT_EQ(r.witness_discrepancy, 0.5);
        EXPECT_TRUE(replay_witness(alg, r));
    }
}

TEST(Alternativity, AssociativeAlgebrasHold) {
    EXPECT_EQ(check_alternativity(make_matrix_algebra(3, Field::Real, ProductKind::Standard), 20, 1).verdict, Verdict::Holds);
    EXPECT_EQ(check_alternativity(make_matrix_algebra(2, Field::Real, ProductKind::Hadamard), 20, 1).verdict, Verdict::Holds);
}

TEST(BinaryLaws, Examples) {
    AlgebraHandle star = make_matrix_algebra(2, Field::Complex, ProductKind::Star1n);
    EXPECT_EQ(check_binary_law(star, Law::Associativity, 20, 1).verdict, Verdict::Holds);
    LawReport comm = check_binary_law(star, Law::Commutativity, 20, 1);
    ASSERT_EQ(comm.verdict, Verdict::FailsWithWitness);
    EXPECT_TRUE(replay_witness(star, comm));
    AlgebraHandle jordan = make_matrix_algebra(2, Field::Real, ProductKind::Jordan);
    EXPECT_EQ(check_binary_law(jordan, Law::Commutativity, 20, 1).verdict, Verdict::Holds);
    LawReport assoc = check_binary_law(jordan, Law::Associativity, 20, 1);
    ASSERT_EQ(assoc.verdict, Verdict::FailsWithWitness);
    EXPECT_TRUE(replay_witness(jordan, assoc));
    for (Law law : {Law::LeftDistributivity, Law::RightDistributivity})
        EXPECT_EQ(check_binary_law(star, law, 20, 1).verdict, Verdict::Holds);
    EXPECT_THROW(check_binary_law(star, Law::RadiusLaws, 2, 1), DomainError);
}

TEST(BinaryLaws, HadamardCommutativeAssociative) {
    AlgebraHandle h = make_matrix_algebra(3, Field::Complex, ProductKind::Hadamard);
    for (Law law : {Law::Associativity, Law::Commutativity, Law::LeftDistributivity, Law::RightDistributivity}) {
        LawReport r = check_binary_law(h, law, 30, 5);
        EXPECT_EQ(r.verdict, Verdict::Holds) << to_string(law);
        EXPECT_EQ(r.max_discrepancy, 0.0);
    }
}

TEST(RadiusLaws, Examples) {
    EXPECT_EQ(check_radius_laws(make_matrix_algebra(3, Field::Real, ProductKind::Standard), 10, 2).verdict, Verdict::Holds);
    AlgebraHandle star = make_matrix_algebra(2, Field::Complex, ProductKind::Star1n);
    EXPECT_EQ(check_radius_laws(star, 8, 2).verdict, Verdict::Holds);
    RadiusReport r = radius(star, example_star_nilpotent(2).to_element(star));
    EXPECT_EQ(r.radius, 0.0);
    EXPECT_TRUE(r.minpoly.is_monomial());
    AlgebraHandle h = make_matrix_algebra(2, Field::Real, ProductKind::Hadamard);
    Element a = h.element_from_coords({q(1), q(2), q(3), q(4)});
    EXPECT_EQ(radius(h, h.power(a, 3)).radius, 64.0);
}

TEST(RadiusLaws, HomogeneityWithNegativeScalar) {
    AlgebraHandle alg = make_matrix_algebra(3, Field::Real, ProductKind::Standard);
    RandomSource rng(9);
    for (int t = 0; t < 10; ++t) {
        Element a = rng.element(alg);
        double lhs = radius(alg, alg.scalar_multiple(q(-2), a)).radius;
        double rhs = 2.0 * radius(alg, a).radius;
        EXPECT_LE(std::fabs(lhs - rhs), kHomogeneityTolerance * std::max(1.0, rhs));
    }
}

TEST(RadiusLaws, RequiresUnit) {
    AlgebraHandle z = make_structure_algebra(StructureConstants(1, {q(0)}), Field::Real);
    EXPECT_THROW(check_radius_laws(z, 3, 1), DomainError);
}

TEST(Harness, DeterministicSeeding) {
    AlgebraHandle jordan = make_matrix_algebra(3, Field::Real, ProductKind::Jordan);
    EXPECT_TRUE(same_report(check_alternativity(jordan, 10, 42), check_alternativity(jordan, 10, 42)));
    EXPECT_TRUE(same_report(check_binary_law(jordan, Law::Associativity, 10, 42),
                            check_binary_law(jordan, Law::Associativity, 10, 42)));
    EXPECT_TRUE(same_report(check_radius_laws(jordan, 6, 42), check_radius_laws(jordan, 6, 42)));
    AlgebraHandle bad = not_power_associative();
    EXPECT_TRUE(same_report(check_power_associativity(bad, 5, 4, 42), check_power_associativity(bad, 5, 4, 42)));
}

TEST(Harness, EveryFailureReplays) {
    std::vector<AlgebraHandle> algs{make_matrix_algebra(2, Field::Real, ProductKind::Jordan),
                                    make_matrix_algebra(2, Field::Complex, ProductKind::StarN1),
                                    make_matrix_algebra(2, Field::Real, ProductKind::Standard),
                                    make_cayley_dickson(8), make_cayley_dickson(16), not_power_associative()};
    for (const auto& alg : algs) {
        std::vector<LawReport> reports{check_alternativity(alg, 5, 1)};
        for (Law law : {Law::Associativity, Law::Commutativity, Law::LeftDistributivity, Law::RightDistributivity})
            reports.push_back(check_binary_law(alg, law, 5, 1));
        for (const auto& r : reports) {
            if (r.verdict == Verdict::FailsWithWitness) {
                EXPECT_TRUE(replay_witness(alg, r)) << alg.name() << " " << to_string(r.law);
            } else {
                EXPECT_FALSE(replay_witness(alg, r));
            }
        }
    }
}

TEST(Harness, ApproxModeComparesWithTolerance) {
    AlgebraHandle alg = make_matrix_algebra(3, Field::Complex, ProductKind::Standard, Mode::Approx);
    EXPECT_EQ(check_power_associativity(alg, 10, 5, 3).verdict, Verdict::Holds);
    EXPECT_EQ(check_binary_law(alg, Law::Associativity, 20, 3).verdict, Verdict::Holds);
    EXPECT_EQ(check_binary_law(alg, Law::Commutativity, 20, 3).verdict, Verdict::FailsWithWitness);
    EXPECT_EQ(check_radius_laws(alg, 10, 3).verdict, Verdict::Holds);
}

TEST(Harness, LawNames) {
    for (Law l : {Law::PowerAssociativity, Law::Alternativity, Law::Associativity, Law::Commutativity,
                  Law::LeftDistributivity, Law::RightDistributivity, Law::RadiusLaws})
        EXPECT_EQ(parse_law(to_string(l)), l);
    EXPECT_FALSE(parse_law("flexibility"));
}

}  // namespace
