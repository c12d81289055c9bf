#include "algrad/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "algrad/errors.hpp"
#include "algrad/minpoly.hpp"

namespace algrad {

namespace {

using lcplx = std::complex<long double>;

long double to_long_double(const mpq_class& q) {
    mpfr_t x;
    mpfr_init2(x, 64);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    long double r = mpfr_get_ld(x, MPFR_RNDN);
    mpfr_clear(x);
    return r;
}

lcplx to_lcplx(const Scalar& s) {
    if (s.is_exact()) return {to_long_double(s.real_exact()), to_long_double(s.imag_exact())};
    auto z = s.to_complex();
    return {z.real(), z.imag()};
}

std::vector<lcplx> long_coeffs(const Polynomial& p) {
    std::vector<lcplx> c;
    c.reserve(p.coeffs().size());
    for (const auto& s : p.coeffs()) c.push_back(to_lcplx(s));
    return c;
}

lcplx horner(const std::vector<lcplx>& c, lcplx z) {
    lcplx acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

lcplx horner_derivative(const std::vector<lcplx>& c, lcplx z) {
    lcplx acc = 0;
    for (std::size_t k = c.size() - 1; k >= 1; --k) {
        acc = acc * z + static_cast<long double>(k) * c[k];
    }
    return acc;
}

double residual_bound(const std::vector<lcplx>& c) {
    long double m = 1.0L;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return kRootResidualFactor * static_cast<double>(m);
}

struct DkResult {
    std::vector<lcplx> roots;
    int sweeps = 0;
    bool converged = false;
};

/// Durand-Kerner on a monic coefficient vector (low-to-high).
DkResult durand_kerner(const std::vector<lcplx>& c) {
    const std::size_t n = c.size() - 1;
    DkResult out;
    if (n == 1) {
        out.roots = {-c[0]};
        out.converged = true;
        return out;
    }
    // Fujiwara bound on root moduli.
    long double bound = 0.0L;
    for (std::size_t k = 1; k <= n; ++k) {
        long double a = std::abs(c[n - k]);
        if (k == n) a /= 2;
        bound = std::max(bound, std::pow(a, 1.0L / static_cast<long double>(k)));
    }
    bound = 2 * std::max(bound, 1e-3L);
    // Circle centred at the root centroid, angularly offset so no start is real.
    lcplx centre = -c[n - 1] / static_cast<long double>(n);
    out.roots.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
        out.roots[k] = centre + 0.5L * bound * lcplx(std::cos(theta), std::sin(theta));
    }
    for (int sweep = 1; sweep <= kMaxRootSweeps; ++sweep) {
        long double max_update = 0.0L;
        for (std::size_t k = 0; k < n; ++k) {
            lcplx z = out.roots[k];
            lcplx den = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) den *= z - out.roots[j];
            if (den == lcplx(0)) den = lcplx(1e-30L, 1e-30L);
            lcplx w = horner(c, z) / den;
            out.roots[k] = z - w;
            max_update = std::max(max_update, std::abs(w) / std::max(1.0L, std::abs(out.roots[k])));
        }
        out.sweeps = sweep;
        if (max_update < kRootUpdateTolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

lcplx newton_polish(const std::vector<lcplx>& c, lcplx z) {
    for (int it = 0; it < 3; ++it) {
        lcplx f = horner(c, z);
        lcplx d = horner_derivative(c, z);
        if (d == lcplx(0)) break;
        lcplx next = z - f / d;
        if (std::abs(horner(c, next)) >= std::abs(f)) break;
        z = next;
    }
    return z;
}

/// Drops a negligible imaginary part from a root of a real polynomial when the
/// real point is at least as good a root.
lcplx settle_real_axis(const std::vector<lcplx>& c, lcplx z, double bound) {
    if (z.imag() == 0.0L) return z;
    for (const auto& x : c)
        if (x.imag() != 0.0L) return z;
    if (std::fabs(z.imag()) > 1e-12L * std::max(1.0L, std::abs(z))) return z;
    lcplx r(z.real(), 0.0L);
    long double fr = std::abs(horner(c, r));
    return fr <= std::max<long double>(std::abs(horner(c, z)), bound) ? r : z;
}

/// Continued-fraction convergents of x within tolerance, smallest denominators first.
std::vector<mpq_class> rational_candidates(long double x) {
    std::vector<mpq_class> out;
    const long double tol = 1e-9L * std::max(1.0L, std::fabs(x));
    mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
    long double r = x;
    for (int iter = 0; iter < 40; ++iter) {
        long double a = std::floor(r);
        if (std::fabs(a) > 1e15L) break;
        mpz_class ai(static_cast<double>(a));
        mpz_class h_next = ai * h + h_prev;
        mpz_class k_next = ai * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (k > 100000000) break;
        mpq_class cand(h, k);
        cand.canonicalize();
        long double approx = to_long_double(cand);
        if (std::fabs(approx - x) <= tol) {
            out.push_back(cand);
            if (out.size() == 2) break;
        }
        long double frac = r - a;
        if (frac < 1e-18L) break;
        r = 1.0L / frac;
    }
    return out;
}

/// Roots of a square-free exact polynomial over the complex-exact domain.
void square_free_roots(const Polynomial& f, int multiplicity, RootSet& out) {
    const Domain dom = f.domain();
    if (f.degree() == 1) {
        Scalar root = -f.coeffs()[0] / f.coeffs()[1];
        for (int m = 0; m < multiplicity; ++m) {
            out.roots.push_back(root.to_complex());
            out.residuals.push_back(0.0);
            out.exact.push_back(root);
        }
        return;
    }
    auto coeffs = long_coeffs(f);
    DkResult dk = durand_kerner(coeffs);
    out.sweeps += dk.sweeps;

    Polynomial remaining = f;
    std::vector<std::optional<Scalar>> exact(dk.roots.size());
    for (std::size_t i = 0; i < dk.roots.size() && remaining.degree() >= 1; ++i) {
        lcplx z = dk.roots[i];
        auto re_cands = rational_candidates(z.real());
        std::vector<mpq_class> im_cands;
        if (std::fabs(z.imag()) <= 1e-12L * std::max(1.0L, std::abs(z)))
            im_cands.push_back(0);
        else
            im_cands = rational_candidates(z.imag());
        for (const auto& re : re_cands) {
            for (const auto& im : im_cands) {
                Scalar cand = Scalar::from_parts(re, im, dom);
                if (remaining(cand).is_zero()) {
                    exact[i] = cand;
                    remaining = divmod(remaining, Polynomial({-cand, Scalar::one(dom)}, dom)).quotient;
                    break;
                }
            }
            if (exact[i]) break;
        }
    }

    const double bound = residual_bound(coeffs);
    bool ok = true;
    RootSet local;
    for (std::size_t i = 0; i < dk.roots.size(); ++i) {
        if (exact[i]) {
            local.roots.push_back(exact[i]->to_complex());
            local.residuals.push_back(0.0);
            local.exact.push_back(exact[i]);
            continue;
        }
        lcplx z = settle_real_axis(coeffs, newton_polish(coeffs, dk.roots[i]), bound);
        double res = static_cast<double>(std::abs(horner(coeffs, z)));
        if (!dk.converged && res > bound) ok = false;
        local.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        local.residuals.push_back(res);
        local.exact.push_back(std::nullopt);
    }
    for (int m = 0; m < multiplicity; ++m) {
        out.roots.insert(out.roots.end(), local.roots.begin(), local.roots.end());
        out.residuals.insert(out.residuals.end(), local.residuals.begin(), local.residuals.end());
        out.exact.insert(out.exact.end(), local.exact.begin(), local.exact.end());
    }
    if (!ok) throw RootFindingError("root iteration did not converge within " + std::to_string(kMaxRootSweeps) + " sweeps", out);
}

void approximate_roots(const Polynomial& f, RootSet& out) {
    auto coeffs = long_coeffs(f);
    DkResult dk = durand_kerner(coeffs);
    out.sweeps += dk.sweeps;
    const double bound = residual_bound(coeffs);
    bool ok = true;
    for (auto z : dk.roots) {
        z = settle_real_axis(coeffs, newton_polish(coeffs, z), bound);
        double res = static_cast<double>(std::abs(horner(coeffs, z)));
        if (!dk.converged && res > bound) ok = false;
        out.roots.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
        out.residuals.push_back(res);
        out.exact.push_back(std::nullopt);
    }
    if (!ok) throw RootFindingError("root iteration did not converge within " + std::to_string(kMaxRootSweeps) + " sweeps", out);
}

}  // namespace

double RootSet::modulus(std::size_t i) const {
    if (exact[i]) return exact[i]->magnitude();
    return std::abs(roots[i]);
}

RootSet poly_roots(const Polynomial& p) {
    if (p.degree() < 1) throw DomainError("root finding needs a polynomial of degree >= 1");
    Polynomial f = p.is_monic() ? p : p.monic();
    RootSet out;

    std::size_t zeros = 0;
    while (f.coeffs()[zeros].is_zero()) ++zeros;
    const Domain cdom{Field::Complex, f.domain().mode};
    for (std::size_t i = 0; i < zeros; ++i) {
        out.roots.emplace_back(0.0, 0.0);
        out.residuals.push_back(0.0);
        out.exact.push_back(f.domain().mode == Mode::Exact ? std::optional<Scalar>(Scalar::zero(cdom)) : std::nullopt);
    }
    if (static_cast<int>(zeros) == f.degree()) return out;
    std::vector<Scalar> rest(f.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), f.coeffs().end());
    Polynomial g(std::move(rest), f.domain());

    if (f.domain().mode == Mode::Approx) {
        approximate_roots(g, out);
        return out;
    }
    Polynomial gc = g.cast(cdom);
    for (const auto& [factor, mult] : squarefree_decomposition(gc)) square_free_roots(factor, mult, out);
    return out;
}

std::size_t argmax_root_index(const RootSet& roots) {
    if (roots.size() == 0) throw DomainError("empty root set");
    std::vector<double> mods(roots.size());
    double best = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        mods[i] = roots.modulus(i);
        best = std::max(best, mods[i]);
    }
    const double tie = 1e-10 * std::max(1.0, best);
    std::size_t arg = roots.size();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (best - mods[i] > tie) continue;
        if (arg == roots.size()) {
            arg = i;
            continue;
        }
        const auto& z = roots.roots[i];
        const auto& w = roots.roots[arg];
        if (z.real() > w.real() || (z.real() == w.real() && z.imag() > w.imag())) arg = i;
    }
    return arg;
}

RadiusReport radius(const AlgebraHandle& alg, const Element& a) {
    auto mp = minimal_polynomial_with_certificate(alg, a);
    RadiusReport report{mp.polynomial, poly_roots(mp.polynomial), 0.0, {}, alg.name(), mp.ill_conditioned};
    std::size_t i = argmax_root_index(report.roots);
    report.radius = report.roots.modulus(i);
    report.argmax_root = report.roots.roots[i];
    return report;
}

Polynomial characteristic_polynomial(const MatrixElement& a) {
    const int n = a.n();
    const Domain d = a.domain();
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar::zero(d));
    c[static_cast<std::size_t>(n)] = Scalar::one(d);
    MatrixElement m(n, d);
    const MatrixElement id = MatrixElement::identity(n, d);
    for (int k = 1; k <= n; ++k) {
        m = a * m + c[static_cast<std::size_t>(n - k + 1)] * id;
        Scalar tr = (a * m).trace();
        c[static_cast<std::size_t>(n - k)] = -tr / Scalar::from_int(k, d);
    }
    return Polynomial(std::move(c), d);
}

double spectral_radius(const MatrixElement& a) {
    RootSet roots = poly_roots(characteristic_polynomial(a));
    return roots.modulus(argmax_root_index(roots));
}

}  // namespace algrad
