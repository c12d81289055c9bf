#include "algrad/laws.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "algrad/errors.hpp"
#include "algrad/matrix_algebras.hpp"
#include "algrad/minpoly.hpp"
#include "algrad/random.hpp"
#include "algrad/roots.hpp"

namespace algrad {

namespace {

struct Comparison {
    double discrepancy;
    bool violated;
};

Comparison compare(const AlgebraHandle& alg, const Element& x, const Element& y) {
    double disc = sup_distance(x, y);
    if (alg.mode() == Mode::Exact) return {disc, !(x == y)};
    double scale = std::max({1.0, x.sup_norm(), y.sup_norm()});
    return {disc, disc > kApproxLawTolerance * scale};
}

/// Accumulates trial outcomes; the first violation becomes the witness.
class ReportBuilder {
   public:
    ReportBuilder(Law law, const AlgebraHandle& alg) { report_.law = law, report_.algebra_name = alg.name(); }

    void record(const Comparison& c, std::vector<Element> operands, int parameter, std::string detail,
                std::optional<Scalar> scalar = std::nullopt) {
        report_.max_discrepancy = std::max(report_.max_discrepancy, c.discrepancy);
        if (c.violated && report_.verdict == Verdict::Holds) report_.witness_discrepancy = c.discrepancy;
        record_outcome(c.violated, std::move(operands), parameter, std::move(detail), std::move(scalar));
    }

    void record_outcome(bool violated, std::vector<Element> operands, int parameter, std::string detail,
                        std::optional<Scalar> scalar = std::nullopt) {
        if (!violated || report_.verdict == Verdict::FailsWithWitness) return;
        report_.verdict = Verdict::FailsWithWitness;
        report_.witness = std::move(operands);
        report_.witness_scalar = std::move(scalar);
        report_.parameter = parameter;
        report_.detail = std::move(detail);
    }

    LawReport finish(int trials) {
        report_.trials = trials;
        return std::move(report_);
    }

   private:
    LawReport report_;
};

Comparison alternative_identity(const AlgebraHandle& alg, const Element& p, const Element& q, int which) {
    if (which == 0) return compare(alg, alg.multiply(p, alg.multiply(p, q)), alg.multiply(alg.multiply(p, p), q));
    return compare(alg, alg.multiply(alg.multiply(p, q), q), alg.multiply(p, alg.multiply(q, q)));
}

Comparison binary_identity(const AlgebraHandle& alg, Law law, const std::vector<Element>& ops) {
    const Element& a = ops[0];
    const Element& b = ops[1];
    switch (law) {
        case Law::Commutativity: return compare(alg, alg.multiply(a, b), alg.multiply(b, a));
        case Law::Associativity:
            return compare(alg, alg.multiply(alg.multiply(a, b), ops[2]), alg.multiply(a, alg.multiply(b, ops[2])));
        case Law::LeftDistributivity:
            return compare(alg, alg.multiply(a, alg.add(b, ops[2])), alg.add(alg.multiply(a, b), alg.multiply(a, ops[2])));
        case Law::RightDistributivity:
            return compare(alg, alg.multiply(alg.add(a, b), ops[2]), alg.add(alg.multiply(a, ops[2]), alg.multiply(b, ops[2])));
        default: throw DomainError("not a binary law: " + std::string(to_string(law)));
    }
}

int arity(Law law) { return law == Law::Commutativity ? 2 : 3; }

/// First pairwise disagreement among all bracketings of a^k, if any; else max discrepancy only.
Comparison power_identity(const AlgebraHandle& alg, const Element& a, int k) {
    auto shapes = all_parenthesizations(alg, a, k);
    Comparison worst{0.0, false};
    for (std::size_t i = 1; i < shapes.size(); ++i) {
        Comparison c = compare(alg, shapes[0], shapes[i]);
        worst.discrepancy = std::max(worst.discrepancy, c.discrepancy);
        worst.violated = worst.violated || c.violated;
    }
    return worst;
}

std::optional<Element> nilpotent_sample(const AlgebraHandle& alg, RandomSource& rng) {
    auto info = matrix_algebra_info(alg);
    if (!info) return alg.zero();
    switch (info->kind) {
        case ProductKind::Standard:
        case ProductKind::Jordan: return rng.strictly_upper_matrix(info->n, alg.domain()).to_element(alg);
        case ProductKind::Star1n:
        case ProductKind::StarN1:
            return prime_map(rng.strictly_upper_matrix(info->n, alg.domain()), info->kind).to_element(alg);
        case ProductKind::Hadamard: return alg.zero();
    }
    return std::nullopt;
}

struct RadiusChecks {
    Comparison homogeneity;
    std::vector<Comparison> power_rule;  // k = 2, 3, 4
    bool nilpotency_violated = false;
};

bool within(double diff, double tol) { return diff <= tol; }

Comparison check_homogeneity(const AlgebraHandle& alg, const Element& a, const Scalar& alpha, double r_a) {
    double lhs = radius(alg, alg.scalar_multiple(alpha, a)).radius;
    double rhs = alpha.magnitude() * r_a;
    double diff = std::fabs(lhs - rhs);
    return {diff, !within(diff, kHomogeneityTolerance * std::max(1.0, rhs))};
}

Comparison check_power_rule(const AlgebraHandle& alg, const Element& a, int k, double r_a) {
    double lhs = radius(alg, alg.power(a, k)).radius;
    double rhs = std::pow(r_a, k);
    double diff = std::fabs(lhs - rhs);
    return {diff, !within(diff, kPowerRuleTolerance * std::max(rhs, 1e-12))};
}

/// Exact certificate: r(a) = 0 iff p_a = t^m, and then a^m = 0.
bool nilpotency_violated(const AlgebraHandle& alg, const Element& a, const RadiusReport& rep) {
    if (alg.mode() != Mode::Exact) return false;
    bool monomial = rep.minpoly.is_monomial();
    if ((rep.radius == 0.0) != monomial) return true;
    if (monomial && !alg.power(a, rep.minpoly.degree()).is_zero()) return true;
    return false;
}

}  // namespace

std::string_view to_string(Law law) {
    switch (law) {
        case Law::PowerAssociativity: return "power-associativity";
        case Law::Alternativity: return "alternativity";
        case Law::Associativity: return "associativity";
        case Law::Commutativity: return "commutativity";
        case Law::LeftDistributivity: return "left-distributivity";
        case Law::RightDistributivity: return "right-distributivity";
        case Law::RadiusLaws: return "radius-laws";
    }
    return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::Holds ? "Holds" : "FailsWithWitness"; }

std::optional<Law> parse_law(std::string_view name) {
    for (auto l : {Law::PowerAssociativity, Law::Alternativity, Law::Associativity, Law::Commutativity,
                   Law::LeftDistributivity, Law::RightDistributivity, Law::RadiusLaws})
        if (to_string(l) == name) return l;
    return std::nullopt;
}

std::vector<Element> all_parenthesizations(const AlgebraHandle& alg, const Element& a, int k) {
    if (k < 1 || k > kMaxParenthesizationPower)
        throw DomainError("parenthesization power must lie in [1, " + std::to_string(kMaxParenthesizationPower) + "]");
    std::map<int, std::vector<Element>> memo;
    memo.emplace(1, std::vector<Element>{a});
    for (int m = 2; m <= k; ++m) {
        std::vector<Element> shapes;
        for (int left = 1; left < m; ++left)
            for (const auto& l : memo.at(left))
                for (const auto& r : memo.at(m - left)) shapes.push_back(alg.multiply(l, r));
        memo.emplace(m, std::move(shapes));
    }
    return memo.at(k);
}

LawReport check_power_associativity(const AlgebraHandle& alg, int trials, int kmax, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (kmax < 2 || kmax > kMaxParenthesizationPower) throw DomainError("kmax must lie in [2, 6]");
    RandomSource rng(seed);
    ReportBuilder report(Law::PowerAssociativity, alg);
    for (int t = 0; t < trials; ++t) {
        Element a = rng.element(alg);
        for (int k = 3; k <= kmax; ++k)
            report.record(power_identity(alg, a, k), {a}, k, "bracketings of a^" + std::to_string(k) + " disagree");
    }
    return report.finish(trials);
}

LawReport check_alternativity(const AlgebraHandle& alg, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    RandomSource rng(seed);
    ReportBuilder report(Law::Alternativity, alg);
    static constexpr const char* kIdentity[] = {"x(xy) != (xx)y", "(xy)y != x(yy)"};
    auto info = matrix_algebra_info(alg);
    if (info && info->kind == ProductKind::Jordan) {
        auto [a, b] = example_jordan_nonalternative(info->n, alg.domain());
        Element ea = a.to_element(alg), eb = b.to_element(alg);
        for (int which : {1, 0}) report.record(alternative_identity(alg, ea, eb, which), {ea, eb}, which, kIdentity[which]);
    }
    for (int t = 0; t < trials; ++t) {
        Element x = rng.element(alg);
        Element y = rng.element(alg);
        for (int which : {0, 1}) report.record(alternative_identity(alg, x, y, which), {x, y}, which, kIdentity[which]);
    }
    return report.finish(trials);
}

LawReport check_binary_law(const AlgebraHandle& alg, Law law, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    const int n_ops = arity(law);
    RandomSource rng(seed);
    ReportBuilder report(law, alg);
    const std::string detail = std::string(to_string(law)) + " violated";
    const std::size_t d = alg.dim();

    if (n_ops == 2) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                std::vector<Element> ops{alg.basis(i), alg.basis(j)};
                report.record(binary_identity(alg, law, ops), ops, 0, detail);
            }
    } else if (d <= 9) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<Element> ops{alg.basis(i), alg.basis(j), alg.basis(k)};
                    report.record(binary_identity(alg, law, ops), ops, 0, detail);
                }
    }
    for (int t = 0; t < trials; ++t) {
        std::vector<Element> ops;
        for (int i = 0; i < n_ops; ++i) ops.push_back(rng.element(alg));
        report.record(binary_identity(alg, law, ops), ops, 0, detail);
    }
    return report.finish(trials);
}

LawReport check_radius_laws(const AlgebraHandle& alg, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    if (!alg.has_unit()) throw DomainError("radius laws are checked on unital algebras only");
    RandomSource rng(seed);
    ReportBuilder report(Law::RadiusLaws, alg);
    auto info = matrix_algebra_info(alg);

    for (int t = 0; t < trials; ++t) {
        Element a = alg.zero();
        if (t == 0 && info && is_star(info->kind) && alg.field() == Field::Complex)
            a = example_star_nilpotent(info->n, alg.mode()).to_element(alg);
        else if (t % 4 == 3)
            a = *nilpotent_sample(alg, rng);
        else
            a = rng.element(alg);
        Scalar alpha = rng.scalar(alg.domain());

        RadiusReport base = radius(alg, a);
        const double r_a = base.radius;
        if (r_a < 0.0) report.record_outcome(true, {a}, 0, "negative radius");

        report.record(check_homogeneity(alg, a, alpha, r_a), {a}, 1, "r(alpha a) != |alpha| r(a)", alpha);
        for (int k = 2; k <= 4; ++k)
            report.record(check_power_rule(alg, a, k, r_a), {a}, k, "r(a^" + std::to_string(k) + ") != r(a)^" + std::to_string(k));
        report.record_outcome(nilpotency_violated(alg, a, base), {a}, -1, "r(a) = 0 disagrees with p_a = t^m");
    }
    return report.finish(trials);
}

bool replay_witness(const AlgebraHandle& alg, const LawReport& report) {
    if (report.verdict != Verdict::FailsWithWitness) return false;
    const auto& w = report.witness;
    switch (report.law) {
        case Law::PowerAssociativity: return power_identity(alg, w.at(0), report.parameter).violated;
        case Law::Alternativity: return alternative_identity(alg, w.at(0), w.at(1), report.parameter).violated;
        case Law::Associativity:
        case Law::Commutativity:
        case Law::LeftDistributivity:
        case Law::RightDistributivity: return binary_identity(alg, report.law, w).violated;
        case Law::RadiusLaws: {
            const Element& a = w.at(0);
            RadiusReport base = radius(alg, a);
            if (report.parameter == 1) return check_homogeneity(alg, a, report.witness_scalar.value(), base.radius).violated;
            if (report.parameter >= 2) return check_power_rule(alg, a, report.parameter, base.radius).violated;
            if (report.parameter == -1) return nilpotency_violated(alg, a, base);
            return base.radius < 0.0;
        }
    }
    return false;
}

}  // namespace algrad
