#include "algrad/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "algrad/errors.hpp"

namespace algrad {

namespace {

void require_exact(const Polynomial& p, const char* what) {
    if (p.domain().mode != Mode::Exact) throw UnsupportedModeError(std::string(what) + " requires exact mode");
}

void require_same_domain(const Polynomial& a, const Polynomial& b) {
    if (a.domain() != b.domain())
        throw FieldError("polynomials over " + to_string(a.domain()) + " and " + to_string(b.domain()));
}

}  // namespace

Polynomial::Polynomial(std::vector<Scalar> coeffs, Domain d) : coeffs_(std::move(coeffs)), domain_(d) {
    for (const auto& c : coeffs_)
        if (c.domain() != d) throw FieldError("polynomial coefficient outside " + algrad::to_string(d));
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}, c.domain()); }

Polynomial Polynomial::monomial(int k, Domain d) {
    std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, Scalar::zero(d));
    c.back() = Scalar::one(d);
    return Polynomial(std::move(c), d);
}

Polynomial Polynomial::from_roots(const std::vector<Scalar>& roots, Domain d) {
    std::vector<Scalar> c{Scalar::one(d)};
    for (const auto& r : roots) {
        std::vector<Scalar> next(c.size() + 1, Scalar::zero(d));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c), d);
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar::one(domain_); }

bool Polynomial::is_monomial() const {
    if (degree() < 1 || !is_monic()) return false;
    return std::all_of(coeffs_.begin(), coeffs_.end() - 1, [](const Scalar& s) { return s.is_zero(); });
}

Scalar Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Scalar::zero(domain_);
    return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& Polynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial Polynomial::monic() const {
    Scalar inv = leading().inverse();
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * inv);
    c.back() = Scalar::one(domain_);
    return Polynomial(std::move(c), domain_);
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial(domain_);
    std::vector<Scalar> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(Scalar::from_int(static_cast<long>(i), domain_) * coeffs_[i]);
    return Polynomial(std::move(c), domain_);
}

Polynomial Polynomial::cast(Domain d) const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.cast(d));
    return Polynomial(std::move(c), d);
}

Scalar Polynomial::operator()(const Scalar& x) const {
    Scalar acc = Scalar::zero(domain_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<long double> Polynomial::evaluate(std::complex<long double> x) const {
    std::complex<long double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        auto c = it->to_complex();
        acc = acc * x + std::complex<long double>(c.real(), c.imag());
    }
    return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        std::string s = c.to_string();
        bool compound = s.find_first_of("+-", 1) != std::string::npos;
        bool negative = !compound && s.front() == '-';
        if (negative) s.erase(0, 1);
        if (compound) s = "(" + s + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool unit_coeff = s == "1";
        if (k == 0) {
            os << s;
            continue;
        }
        if (!unit_coeff) os << s << " ";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_domain(a, b);
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(c), a.domain_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_domain(a, b);
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Scalar> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i)));
    return Polynomial(std::move(c), a.domain_);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_domain(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.domain_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.domain_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c), a.domain_);
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
    require_same_domain(a, b);
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const Domain d = a.domain();
    if (a.degree() < b.degree()) return {Polynomial(d), a};
    std::vector<Scalar> rem = a.coeffs();
    const auto& den = b.coeffs();
    const std::size_t db = den.size() - 1;
    std::vector<Scalar> quo(rem.size() - db, Scalar::zero(d));
    Scalar inv_lead = den.back().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        Scalar q = rem[k] * inv_lead;
        if (!q.is_zero())
            for (std::size_t j = 0; j < db; ++j) rem[k - db + j] -= q * den[j];
        quo[k - db] = std::move(q);
    }
    rem.resize(db);
    return {Polynomial(std::move(quo), d), Polynomial(std::move(rem), d)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_exact(a, "gcd");
    require_same_domain(a, b);
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

bool poly_divides(const Polynomial& p, const Polynomial& q) {
    require_same_domain(p, q);
    Polynomial r = divmod(q, p).remainder;
    if (p.domain().mode == Mode::Exact) return r.is_zero();
    double scale = 1.0;
    for (const auto& c : q.coeffs()) scale = std::max(scale, c.magnitude());
    for (const auto& c : r.coeffs())
        if (c.magnitude() > 1e-9 * scale) return false;
    return true;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    require_exact(p, "square-free decomposition");
    if (p.degree() < 1) throw DomainError("square-free decomposition of a constant");
    const Polynomial f = p.monic();
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial fp = f.derivative();
    Polynomial a0 = gcd(f, fp);
    Polynomial b = divmod(f, a0).quotient;
    Polynomial c = divmod(fp, a0).quotient;
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        Polynomial a = gcd(b, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        b = divmod(b, a).quotient;
        c = divmod(d, a).quotient;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace algrad
