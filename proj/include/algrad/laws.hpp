#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algrad/algebra.hpp"

namespace algrad {

enum class Law {
    PowerAssociativity,
    Alternativity,
    Associativity,
    Commutativity,
    LeftDistributivity,
    RightDistributivity,
    RadiusLaws,
};

enum class Verdict { Holds, FailsWithWitness };

std::string_view to_string(Law law);
std::string_view to_string(Verdict v);
std::optional<Law> parse_law(std::string_view name);

/// Approx-mode equality tolerance for law checks, relative to max(1, operand scale).
inline constexpr double kApproxLawTolerance = 1e-10;
inline constexpr double kHomogeneityTolerance = 1e-9;
inline constexpr double kPowerRuleTolerance = 1e-8;
inline constexpr int kMaxParenthesizationPower = 6;

struct LawReport {
    Law law = Law::Associativity;
    std::string algebra_name;
    int trials = 0;
    Verdict verdict = Verdict::Holds;
    /// Operands of the first violation found.
    std::vector<Element> witness;
    /// Scalar operand of a homogeneity violation.
    std::optional<Scalar> witness_scalar;
    /// Law-specific selector: power k, alternative identity (0 left, 1 right),
    /// or radius sub-law (1 homogeneity, k >= 2 power rule, -1 nilpotency).
    int parameter = 0;
    /// Largest discrepancy over all comparisons made.
    double max_discrepancy = 0.0;
    /// Discrepancy of the witness itself.
    double witness_discrepancy = 0.0;
    std::string detail;
};

/// All Catalan(k-1) bracketings of the k-fold product a*a*...*a.
std::vector<Element> all_parenthesizations(const AlgebraHandle& alg, const Element& a, int k);

/// Compares every bracketing of a^k for 2 <= k <= kmax (kmax <= 6).
LawReport check_power_associativity(const AlgebraHandle& alg, int trials, int kmax, std::uint64_t seed);

/// x(xy) = (xx)y and (yx)x = y(xx). Matrix Jordan algebras try the pair
/// A = e12, B = e21 before the random trials.
LawReport check_alternativity(const AlgebraHandle& alg, int trials, std::uint64_t seed);

/// Associativity, commutativity, or a distributive law on random operands,
/// after sweeping basis elements (pairs always, triples when dim <= 9).
LawReport check_binary_law(const AlgebraHandle& alg, Law law, int trials, std::uint64_t seed);

/// Homogeneity r(alpha a) = |alpha| r(a), the power rule r(a^k) = r(a)^k for
/// k = 2, 3, 4, and (exact mode) r(a) = 0 iff the minimal polynomial is t^m.
/// Every fourth trial uses a nilpotent element when one is known for the algebra.
LawReport check_radius_laws(const AlgebraHandle& alg, int trials, std::uint64_t seed);

/// Re-evaluates a FailsWithWitness report; true iff the violation reproduces.
bool replay_witness(const AlgebraHandle& alg, const LawReport& report);

}  // namespace algrad
