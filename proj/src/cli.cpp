#include "algrad/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "algrad/cayley_dickson.hpp"
#include "algrad/errors.hpp"
#include "algrad/json_io.hpp"
#include "algrad/laws.hpp"
#include "algrad/matrix_algebras.hpp"
#include "algrad/minpoly.hpp"
#include "algrad/random.hpp"
#include "algrad/roots.hpp"

namespace algrad {

namespace {

struct CliConfig {
    std::string command;
    std::string algebra;
    int n = 0;
    std::string field;
    std::string mode = "exact";
    std::string input;
    std::uint64_t seed = 1;
    int trials = 50;
    bool json = false;
};

/// Bad flags, files or values; mapped to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Selection {
    AlgebraHandle alg;
    std::optional<ProductKind> kind;  // empty for Cayley-Dickson
    int n = 0;                        // matrix size
};

struct Operand {
    Selection sel;
    Element element;
};

Mode parse_mode(const std::string& s) {
    if (s == "exact") return Mode::Exact;
    if (s == "approx") return Mode::Approx;
    throw InputError("--mode must be exact or approx, got \"" + s + "\"");
}

std::optional<Field> parse_field_flag(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "R") return Field::Real;
    if (s == "C") return Field::Complex;
    throw InputError("--field must be R or C, got \"" + s + "\"");
}

std::optional<int> cayley_dickson_dim(const std::string& name) {
    if (name.rfind("cd", 0) != 0) return std::nullopt;
    try {
        std::size_t used = 0;
        int d = std::stoi(name.substr(2), &used);
        if (used == name.size() - 2) return d;
    } catch (const std::exception&) {
    }
    throw InputError("bad Cayley-Dickson algebra \"" + name + "\"; use cd1, cd2, cd4, cd8 or cd16");
}

ProductKind parse_kind(const std::string& name) {
    auto kind = parse_product_kind(name);
    if (!kind) throw InputError("unknown --algebra \"" + name + "\"");
    return *kind;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file \"" + path + "\"");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("invalid JSON in \"" + path + "\": " + e.what());
    }
}

MatrixElement cast_matrix(const MatrixElement& a, Domain d) {
    std::vector<Scalar> entries;
    for (const auto& x : a.entries()) entries.push_back(x.cast(d));
    return MatrixElement(a.n(), d, std::move(entries));
}

Selection matrix_selection(ProductKind kind, int n, Field field, Mode mode) {
    return {make_matrix_algebra(n, field, kind, mode), kind, n};
}

/// Resolves the algebra and operand from flags, the input file or the seeded generator.
Operand resolve_operand(const CliConfig& cfg) {
    const Mode mode = parse_mode(cfg.mode);
    const auto field_flag = parse_field_flag(cfg.field);
    const std::string name = cfg.algebra.empty() ? "standard" : cfg.algebra;

    if (auto dim = cayley_dickson_dim(name)) {
        if (field_flag == Field::Complex) throw InputError("Cayley-Dickson algebras are real; drop --field C");
        Selection sel{make_cayley_dickson(*dim, mode), std::nullopt, 0};
        if (cfg.input.empty()) {
            RandomSource rng(cfg.seed);
            Element e = rng.element(sel.alg);
            return {sel, e};
        }
        Element e = sel.alg.element_from_coords(coords_from_json(read_json_file(cfg.input), Field::Real, mode));
        return {sel, e};
    }

    const ProductKind kind = parse_kind(name);
    if (cfg.input.empty()) {
        Field field = field_flag.value_or(is_star(kind) ? Field::Complex : Field::Real);
        Selection sel = matrix_selection(kind, cfg.n == 0 ? 2 : cfg.n, field, mode);
        RandomSource rng(cfg.seed);
        Element e = rng.matrix(sel.n, sel.alg.domain()).to_element(sel.alg);
        return {sel, e};
    }
    MatrixElement m = matrix_from_json(read_json_file(cfg.input), mode);
    if (cfg.n != 0 && cfg.n != m.n())
        throw InputError("--n " + std::to_string(cfg.n) + " disagrees with the " + std::to_string(m.n()) + "x" +
                         std::to_string(m.n()) + " input matrix");
    Field field = field_flag.value_or(m.domain().field);
    if (field == Field::Real && m.domain().field == Field::Complex)
        throw InputError("input matrix is complex but --field R was requested");
    Selection sel = matrix_selection(kind, m.n(), field, mode);
    return {sel, cast_matrix(m, sel.alg.domain()).to_element(sel.alg)};
}

std::string format_number(double x) { return Scalar(x).to_string(); }
std::string format_complex(std::complex<double> z) { return Scalar(z).to_string(); }

std::string format_element(const Selection& sel, const Element& e) {
    std::ostringstream os;
    if (sel.kind) {
        os << '[';
        for (int i = 0; i < sel.n; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < sel.n; ++j) os << (j ? ", " : "") << e[static_cast<std::size_t>(i * sel.n + j)];
            os << ']';
        }
        os << ']';
    } else {
        os << '(';
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? ", " : "") << e[i];
        os << ')';
    }
    return os.str();
}

std::string format_matrix(const MatrixElement& m) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < m.n(); ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < m.n(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Json element_json(const Selection& sel, const Element& e) {
    if (sel.kind) return matrix_to_json(MatrixElement::from_element(e, sel.n));
    return element_to_json(e, sel.alg.field());
}

std::string coefficient_list(const Polynomial& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? ", " : "") + p.coeffs()[i].to_string();
    return s + "]";
}

bool annihilates(const AlgebraHandle& alg, const Polynomial& p, const Element& a) {
    Element value = evaluate_at_element(alg, p, a);
    if (alg.mode() == Mode::Exact) return value.is_zero();
    double scale = 1.0;
    for (int k = 1; k <= p.degree(); ++k) scale = std::max(scale, alg.power(a, k).sup_norm());
    return value.sup_norm() <= 1e-8 * scale;
}

void print_radius_report(std::ostream& out, const RadiusReport& r) {
    out << "minpoly: " << r.minpoly << "\n";
    out << "coefficients: " << coefficient_list(r.minpoly) << "\n";
    out << "roots:\n";
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
        out << "  " << (r.roots.exact[i] ? r.roots.exact[i]->to_string() : format_complex(r.roots.roots[i]))
            << "  |z| = " << format_number(r.roots.modulus(i)) << "  residual = " << format_number(r.roots.residuals[i])
            << "\n";
    }
    out << "radius: " << format_number(r.radius) << "\n";
    out << "argmax_root: " << format_complex(r.argmax_root) << "\n";
    if (r.ill_conditioned) out << "warning: rank decision near the ladder tolerance\n";
}

int cmd_minpoly(const CliConfig& cfg, std::ostream& out) {
    Operand op = resolve_operand(cfg);
    auto res = minimal_polynomial_with_certificate(op.sel.alg, op.element);
    bool ok = annihilates(op.sel.alg, res.polynomial, op.element);
    if (cfg.json) {
        out << Json{{"algebra", op.sel.alg.name()},
                    {"element", element_json(op.sel, op.element)},
                    {"minpoly", polynomial_to_json(res.polynomial)},
                    {"relative_residuals", res.relative_residuals},
                    {"ill_conditioned", res.ill_conditioned},
                    {"annihilates", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "algebra: " << op.sel.alg.name() << "\n";
        out << "element: " << format_element(op.sel, op.element) << "\n";
        out << "minpoly: " << res.polynomial << "\n";
        out << "coefficients: " << coefficient_list(res.polynomial) << "\n";
        out << "annihilates: " << (ok ? "yes" : "NO") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

int cmd_radius(const CliConfig& cfg, std::ostream& out) {
    Operand op = resolve_operand(cfg);
    RadiusReport r = radius(op.sel.alg, op.element);
    bool ok = annihilates(op.sel.alg, r.minpoly, op.element);
    if (cfg.json) {
        Json j = radius_report_to_json(r);
        j["element"] = element_json(op.sel, op.element);
        j["annihilates"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "algebra: " << op.sel.alg.name() << "\n";
        out << "element: " << format_element(op.sel, op.element) << "\n";
        print_radius_report(out, r);
        out << "annihilates: " << (ok ? "yes" : "NO") << "\n";
    }
    return ok ? kExitOk : kExitViolation;
}

/// Laws whose failure in a built-in algebra is a defect rather than a finding.
bool must_hold(Law law) {
    return law == Law::PowerAssociativity || law == Law::LeftDistributivity || law == Law::RightDistributivity ||
           law == Law::RadiusLaws;
}

int cmd_laws(const CliConfig& cfg, std::ostream& out) {
    if (cfg.trials < 1) throw InputError("--trials must be positive");
    if (!cfg.input.empty()) throw InputError("laws draws its own operands; --input is not accepted");
    Operand op = resolve_operand(cfg);
    const AlgebraHandle& alg = op.sel.alg;

    std::vector<LawReport> reports;
    reports.push_back(check_power_associativity(alg, cfg.trials, kMaxParenthesizationPower, cfg.seed));
    reports.push_back(check_alternativity(alg, cfg.trials, cfg.seed));
    for (Law law : {Law::Associativity, Law::Commutativity, Law::LeftDistributivity, Law::RightDistributivity})
        reports.push_back(check_binary_law(alg, law, cfg.trials, cfg.seed));
    reports.push_back(check_radius_laws(alg, cfg.trials, cfg.seed));

    int code = kExitOk;
    Json arr = Json::array();
    for (const auto& r : reports) {
        bool fails = r.verdict == Verdict::FailsWithWitness;
        bool replayed = !fails || replay_witness(alg, r);
        if ((fails && must_hold(r.law)) || !replayed) code = kExitViolation;
        if (cfg.json) {
            Json j = law_report_to_json(r, alg.field());
            if (fails) j["replayed"] = replayed;
            arr.push_back(std::move(j));
            continue;
        }
        out << to_string(r.law) << ": " << to_string(r.verdict) << "  (trials " << r.trials << ", max discrepancy "
            << format_number(r.max_discrepancy) << ")\n";
        if (!fails) continue;
        out << "  " << r.detail << " (discrepancy " << format_number(r.witness_discrepancy) << ")\n";
        for (std::size_t i = 0; i < r.witness.size(); ++i)
            out << "  witness[" << i << "] = " << format_element(op.sel, r.witness[i]) << "\n";
        if (r.witness_scalar) out << "  scalar = " << *r.witness_scalar << "\n";
        out << "  replayed: " << (replayed ? "yes" : "NO") << "\n";
    }
    if (cfg.json) out << Json{{"algebra", alg.name()}, {"seed", cfg.seed}, {"reports", std::move(arr)}}.dump(2) << "\n";
    return code;
}

struct ExampleCheck {
    std::string name;
    bool ok;
};

struct Example {
    std::string name;
    Selection sel;
    std::vector<std::pair<std::string, MatrixElement>> matrices;
    std::vector<ExampleCheck> checks;
    std::vector<std::string> notes;
};

Example nilpotent_example(ProductKind star, int n, Mode mode) {
    Selection sel = matrix_selection(star, n, Field::Complex, mode);
    MatrixElement a = example_star_nilpotent(n, mode);
    Domain d = sel.alg.domain();
    Example ex{"star-nilpotent", sel, {{"A", a}}, {}, {}};

    Element ea = a.to_element(sel.alg);
    ex.checks.push_back({"A*A = 0", sel.alg.multiply(ea, ea).is_zero()});

    Polynomial expected = Polynomial::monomial(n - 2, d) *
                          (Polynomial::monomial(2, d) - Polynomial::constant(Scalar::from_int(2, d)));
    Polynomial chi = characteristic_polynomial(a);
    ex.checks.push_back({"det(tI - A) = t^(n-2)(t^2 - 2)", mode == Mode::Exact ? chi == expected
                                                                               : poly_divides(expected, chi)});
    RadiusReport r = radius(sel.alg, ea);
    ex.checks.push_back({"star radius of A = 0", r.radius == 0.0});
    double rho = spectral_radius(a);
    ex.checks.push_back({"spectral radius of A = sqrt(2)", std::fabs(rho - std::sqrt(2.0)) <= 1e-10});

    RootSet eig = poly_roots(chi);
    std::string eigs;
    for (std::size_t i = 0; i < eig.size(); ++i) eigs += (i ? ", " : "") + format_complex(eig.roots[i]);
    ex.notes.push_back("eigenvalues of A: " + eigs);
    return ex;
}

Example positive_negative_example(ProductKind star, int n, Mode mode) {
    Selection sel = matrix_selection(star, n, Field::Real, mode);
    Domain d = sel.alg.domain();
    MatrixElement a = example_positive_negative_square(n, d);
    MatrixElement sq = star_product(a, a, star);
    MatrixElement expected(n, d);
    expected(0, 0) = Scalar::from_int(-1, d);
    expected(n - 1, n - 1) = Scalar::from_int(-1, d);
    Example ex{"positive-negative-square", sel, {{"A", a}, {"A*A", sq}}, {}, {}};
    ex.checks.push_back({"A is positive", is_positive_matrix(a)});
    ex.checks.push_back({"A*A is negative", is_negative_matrix(sq)});
    ex.checks.push_back({"A*A = -e11 - enn", sq == expected});
    Element ea = a.to_element(sel.alg);
    ex.checks.push_back({"generic square agrees", sel.alg.multiply(ea, ea) == sq.to_element(sel.alg)});
    return ex;
}

Example jordan_example(int n, Mode mode) {
    Selection sel = matrix_selection(ProductKind::Jordan, n, Field::Real, mode);
    Domain d = sel.alg.domain();
    auto [a, b] = example_jordan_nonalternative(n, d);
    Element ea = a.to_element(sel.alg), eb = b.to_element(sel.alg);
    Element left = sel.alg.multiply(sel.alg.multiply(ea, eb), eb);
    Element right = sel.alg.multiply(ea, sel.alg.multiply(eb, eb));
    Example ex{"jordan-nonalternative", sel, {{"A", a}, {"B", b}}, {}, {}};
    ex.checks.push_back({"(A.B).B = B/2", left == sel.alg.scalar_multiple(Scalar::from_rational(1, 2, d), eb)});
    ex.checks.push_back({"A.(B.B) = 0", right.is_zero()});
    return ex;
}

int cmd_examples(const CliConfig& cfg, std::ostream& out) {
    const Mode mode = parse_mode(cfg.mode);
    if (!cfg.input.empty()) throw InputError("examples takes no --input");
    ProductKind star = ProductKind::Star1n;
    if (!cfg.algebra.empty() && !cayley_dickson_dim(cfg.algebra)) {
        ProductKind k = parse_kind(cfg.algebra);
        if (is_star(k)) star = k;
    }
    const int n = cfg.n == 0 ? 2 : cfg.n;
    if (n < 2) throw InputError("--n must be at least 2");

    std::vector<Example> examples{nilpotent_example(star, n, mode), positive_negative_example(star, n, mode),
                                  jordan_example(n, mode)};
    bool all_ok = true;
    Json arr = Json::array();
    for (const auto& ex : examples) {
        Json checks = Json::object();
        for (const auto& c : ex.checks) {
            checks[c.name] = c.ok;
            all_ok = all_ok && c.ok;
        }
        if (cfg.json) {
            Json mats = Json::object();
            Json reports = Json::object();
            for (const auto& [label, m] : ex.matrices) {
                mats[label] = matrix_to_json(m);
                reports[label] = radius_report_to_json(radius(ex.sel.alg, m.to_element(ex.sel.alg)));
            }
            arr.push_back(Json{{"example", ex.name},
                               {"algebra", ex.sel.alg.name()},
                               {"matrices", std::move(mats)},
                               {"radius_reports", std::move(reports)},
                               {"checks", std::move(checks)},
                               {"notes", ex.notes}});
            continue;
        }
        out << "== " << ex.name << " in " << ex.sel.alg.name() << "\n";
        for (const auto& [label, m] : ex.matrices) out << label << " = " << format_matrix(m) << "\n";
        for (const auto& c : ex.checks) out << "  [" << (c.ok ? "ok" : "FAILED") << "] " << c.name << "\n";
        for (const auto& note : ex.notes) out << "  " << note << "\n";
        for (const auto& [label, m] : ex.matrices) {
            out << "  radius report for " << label << ":\n";
            std::ostringstream body;
            print_radius_report(body, radius(ex.sel.alg, m.to_element(ex.sel.alg)));
            std::istringstream lines(body.str());
            for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
        }
    }
    if (cfg.json) out << Json{{"n", n}, {"examples", std::move(arr)}}.dump(2) << "\n";
    return all_ok ? kExitOk : kExitViolation;
}

struct OracleCheck {
    std::string algebra;
    std::string check;
    double max_discrepancy = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool ok() const { return max_discrepancy <= tolerance; }
    void add(double d) {
        max_discrepancy = std::max(max_discrepancy, d);
        ++samples;
    }
};

/// 0 when equal, 1 otherwise; exact comparisons use tolerance 0.
double mismatch(bool equal) { return equal ? 0.0 : 1.0; }

std::vector<OracleCheck> oracle_diff_matrix(ProductKind kind, int n, Field field, Mode mode, int trials,
                                            std::uint64_t seed) {
    Selection sel = matrix_selection(kind, n, field, mode);
    const AlgebraHandle& alg = sel.alg;
    const bool exact = mode == Mode::Exact;
    const std::string name = alg.name();
    RandomSource rng(seed);
    AlgebraHandle standard = make_matrix_algebra(n, field, ProductKind::Standard, mode);

    std::vector<OracleCheck> checks;
    auto check = [&](const std::string& what, double tol) -> OracleCheck& {
        for (auto& c : checks)
            if (c.check == what) return c;
        checks.push_back({name, what, 0.0, tol, 0});
        return checks.back();
    };

    for (int t = 0; t < trials; ++t) {
        MatrixElement a = rng.matrix(n, alg.domain());
        Element e = a.to_element(alg);
        RadiusReport r = radius(alg, e);
        switch (kind) {
            case ProductKind::Standard:
                check("radius vs spectral radius", 1e-8).add(std::fabs(r.radius - spectral_radius(a)));
                break;
            case ProductKind::Hadamard:
                check("radius vs max|a_ij|", 1e-9).add(std::fabs(r.radius - hadamard_radius_oracle(a)));
                if (exact) check("minpoly vs distinct-entry product", 0.0).add(mismatch(r.minpoly == hadamard_minpoly_oracle(a)));
                for (int k = 1; k <= 6; ++k)
                    check("power vs entrywise power", exact ? 0.0 : 1e-9)
                        .add(sup_distance(alg.power(e, k), hadamard_power_oracle(a, k).to_element(alg)));
                break;
            case ProductKind::Jordan:
                check("radius vs spectral radius", 1e-8).add(std::fabs(r.radius - spectral_radius(a)));
                if (exact)
                    check("minpoly vs standard minpoly", 0.0)
                        .add(mismatch(r.minpoly == minimal_polynomial(standard, a.to_element(standard))));
                break;
            case ProductKind::Star1n:
            case ProductKind::StarN1: {
                MatrixElement ap = prime_map(a, kind);
                check("radius vs rho(A')", 1e-8).add(std::fabs(r.radius - star_radius_oracle(a, kind)));
                if (exact)
                    check("minpoly vs minpoly of A'", 0.0)
                        .add(mismatch(r.minpoly == minimal_polynomial(standard, ap.to_element(standard))));
                for (int k = 1; k <= 6; ++k)
                    check("power vs ((A')^k)'", exact ? 0.0 : 1e-9)
                        .add(sup_distance(alg.power(e, k), star_power_oracle(a, k, kind).to_element(alg)));
                break;
            }
        }
    }
    return checks;
}

std::vector<OracleCheck> oracle_diff_cd(int dim, Mode mode, int trials, std::uint64_t seed) {
    AlgebraHandle alg = make_cayley_dickson(dim, mode);
    RandomSource rng(seed);
    OracleCheck c{alg.name(), "radius vs euclidean norm", 0.0, 1e-8, 0};
    for (int t = 0; t < trials; ++t) {
        Element x = rng.element(alg);
        c.add(std::fabs(radius(alg, x).radius - euclidean_norm(x)));
    }
    return {c};
}

int cmd_oracle_diff(const CliConfig& cfg, std::ostream& out) {
    if (cfg.trials < 1) throw InputError("--trials must be positive");
    if (!cfg.input.empty()) throw InputError("oracle-diff draws its own matrices; --input is not accepted");
    const Mode mode = parse_mode(cfg.mode);
    const auto field_flag = parse_field_flag(cfg.field);
    const int n = cfg.n == 0 ? 2 : cfg.n;

    std::vector<OracleCheck> all;
    auto run_kind = [&](ProductKind k) {
        Field f = field_flag.value_or(is_star(k) ? Field::Complex : Field::Real);
        for (auto& c : oracle_diff_matrix(k, n, f, mode, cfg.trials, cfg.seed)) all.push_back(std::move(c));
    };
    if (cfg.algebra.empty()) {
        for (ProductKind k : {ProductKind::Standard, ProductKind::Hadamard, ProductKind::Jordan, ProductKind::Star1n,
                              ProductKind::StarN1})
            run_kind(k);
    } else if (auto dim = cayley_dickson_dim(cfg.algebra)) {
        if (field_flag == Field::Complex) throw InputError("Cayley-Dickson algebras are real; drop --field C");
        all = oracle_diff_cd(*dim, mode, cfg.trials, cfg.seed);
    } else {
        run_kind(parse_kind(cfg.algebra));
    }

    bool ok = true;
    Json arr = Json::array();
    for (const auto& c : all) {
        ok = ok && c.ok();
        if (cfg.json) {
            arr.push_back(Json{{"algebra", c.algebra},
                               {"check", c.check},
                               {"samples", c.samples},
                               {"max_discrepancy", c.max_discrepancy},
                               {"tolerance", c.tolerance},
                               {"ok", c.ok()}});
        } else {
            out << c.algebra << "  " << c.check << ": max discrepancy " << format_number(c.max_discrepancy)
                << " (tolerance " << format_number(c.tolerance) << ", " << c.samples << " samples) "
                << (c.ok() ? "ok" : "VIOLATED") << "\n";
        }
    }
    if (cfg.json) out << Json{{"seed", cfg.seed}, {"checks", std::move(arr)}}.dump(2) << "\n";
    return ok ? kExitOk : kExitViolation;
}

void add_common_options(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--algebra", cfg.algebra, "standard|hadamard|jordan|star1n|starn1|cd<dim>");
    sub->add_option("--n", cfg.n, "matrix size (default 2, or taken from --input)");
    sub->add_option("--field", cfg.field, "R or C (default C for star algebras, else R)");
    sub->add_option("--mode", cfg.mode, "exact or approx")->capture_default_str();
    sub->add_option("--input", cfg.input, "matrix or element JSON file");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "random trials")->capture_default_str();
    sub->add_flag("--json", cfg.json, "JSON output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Minimal polynomials and radii in finite-dimensional algebras", "algrad"};
    app.require_subcommand(1);
    const std::pair<const char*, const char*> commands[] = {
        {"minpoly", "minimal polynomial of an element"},
        {"radius", "radius report of an element"},
        {"laws", "randomized law checks with witnesses"},
        {"examples", "the nilpotent, positive/negative and Jordan example matrices"},
        {"oracle-diff", "generic engine vs closed-form oracles"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common_options(sub, cfg);
        sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
    }

    std::vector<std::string> argv_store{"algrad"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (cfg.command == "minpoly") return cmd_minpoly(cfg, out);
        if (cfg.command == "radius") return cmd_radius(cfg, out);
        if (cfg.command == "laws") return cmd_laws(cfg, out);
        if (cfg.command == "examples") return cmd_examples(cfg, out);
        return cmd_oracle_diff(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const FieldError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const UnsupportedModeError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const RootFindingError& e) {
        err << "root finding failed: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInputError;
}

}  // namespace algrad
