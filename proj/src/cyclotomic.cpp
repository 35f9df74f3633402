// Exact cyclotomic arithmetic: contexts (cyclotomic polynomial + power
// table), field operations, Galois conjugation, numeric embeddings with
// rigorous sign determination, minimal polynomials and subfield expression
// via exact linear algebra.

#include "polyweb/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace polyweb {

namespace {

std::vector<unsigned> divisors_ascending(unsigned m) {
    std::vector<unsigned> divs;
    for (unsigned d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) divs.push_back(m / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Phi_m via the recursion Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
RationalPolynomial cyclotomic_poly(unsigned m) {
    std::map<unsigned, RationalPolynomial> phi;
    for (unsigned d : divisors_ascending(m)) {
        RationalPolynomial num =
            RationalPolynomial::monomial(Rational(1), d) + RationalPolynomial::constant(Rational(-1));
        RationalPolynomial den = RationalPolynomial::constant(Rational(1));
        for (const auto& [e, p] : phi) {
            if (d % e == 0 && e < d) den = den * p;
        }
        RationalPolynomial q, r;
        RationalPolynomial::divmod(num, den, q, r);
        if (!r.is_zero()) fail(Errc::internal, "cyclotomic polynomial recursion failed");
        phi[d] = q;
    }
    return phi[m];
}

} // namespace

CycloContext::CycloContext(unsigned m) : m_(m) {
    if (m == 0) fail(Errc::invalid_argument, "conductor must be positive");
    phi_ = totient(m);

    RationalPolynomial p = cyclotomic_poly(m);
    if (p.degree() != static_cast<int>(phi_))
        fail(Errc::internal, "cyclotomic polynomial has wrong degree");
    phi_poly_.resize(phi_ + 1);
    for (unsigned k = 0; k <= phi_; ++k) {
        Rational c = p.coeff(k);
        if (boost::multiprecision::denominator(c) != 1)
            fail(Errc::internal, "cyclotomic polynomial not integral");
        phi_poly_[k] = Integer(boost::multiprecision::numerator(c));
    }
    if (phi_poly_[phi_] != 1) fail(Errc::internal, "cyclotomic polynomial not monic");

    // x^j mod Phi_m for j = 0 .. max(m-1, 2*phi-2): enough for products of
    // reduced elements (degree <= 2*phi-2) and for zeta powers / Galois
    // substitutions (exponents < m).
    std::size_t rows = std::max<std::size_t>(m, 2 * static_cast<std::size_t>(phi_) - 1);
    table_.reserve(rows);
    std::vector<Integer> row(phi_, Integer(0));
    row[0] = 1;
    table_.push_back(row);
    for (std::size_t j = 1; j < rows; ++j) {
        const std::vector<Integer>& prev = table_.back();
        std::vector<Integer> next(phi_, Integer(0));
        Integer top = prev[phi_ - 1]; // coefficient that overflows past x^(phi-1)
        next[0] = -top * phi_poly_[0];
        for (unsigned i = 1; i < phi_; ++i) next[i] = prev[i - 1] - top * phi_poly_[i];
        table_.push_back(std::move(next));
    }
}

std::shared_ptr<const CycloContext> CycloContext::get(unsigned conductor) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycloContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(conductor));
    cache.emplace(conductor, ctx);
    return ctx;
}

unsigned CycloContext::conductor_for_ngon(unsigned n) {
    if (n < 3) fail(Errc::invalid_argument, "polygon needs at least 3 vertices");
    return std::lcm(4u, 2u * n);
}

// ---------------------------------------------------------------------------
// ExactNumber
// ---------------------------------------------------------------------------

ExactNumber::ExactNumber(CycloContextPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
    if (!ctx_) fail(Errc::invalid_argument, "null cyclotomic context");
    if (c_.size() != ctx_->degree())
        fail(Errc::invalid_argument, "coordinate vector has wrong length");
}

ExactNumber ExactNumber::zero(const CycloContextPtr& ctx) {
    return ExactNumber(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

ExactNumber ExactNumber::one(const CycloContextPtr& ctx) {
    return from_rational(ctx, Rational(1));
}

ExactNumber ExactNumber::from_rational(const CycloContextPtr& ctx, const Rational& q) {
    std::vector<Rational> v(ctx->degree(), Rational(0));
    v[0] = q;
    return ExactNumber(ctx, std::move(v));
}

ExactNumber ExactNumber::zeta(const CycloContextPtr& ctx) {
    return zeta_pow(ctx, 1);
}

ExactNumber ExactNumber::zeta_pow(const CycloContextPtr& ctx, long t) {
    if (!ctx) fail(Errc::invalid_argument, "null cyclotomic context");
    long m = static_cast<long>(ctx->conductor());
    long j = ((t % m) + m) % m;
    const std::vector<Integer>& row = ctx->power_table()[static_cast<std::size_t>(j)];
    std::vector<Rational> v(ctx->degree());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(row[i]);
    return ExactNumber(ctx, std::move(v));
}

ExactNumber ExactNumber::i(const CycloContextPtr& ctx) {
    if (!ctx || ctx->conductor() % 4 != 0)
        fail(Errc::invalid_argument, "context conductor must be divisible by 4 to contain i");
    return zeta_pow(ctx, static_cast<long>(ctx->conductor() / 4));
}

void ExactNumber::require_same_context(const ExactNumber& o) const {
    if (!ctx_ || !o.ctx_) fail(Errc::invalid_argument, "operation on empty ExactNumber");
    if (ctx_->conductor() != o.ctx_->conductor())
        fail(Errc::context_mismatch, "operands live in different cyclotomic fields");
}

bool ExactNumber::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool ExactNumber::is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

Rational ExactNumber::rational_value() const {
    if (!is_rational()) fail(Errc::not_real, "element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
}

bool ExactNumber::operator==(const ExactNumber& o) const {
    require_same_context(o);
    return c_ == o.c_;
}

ExactNumber ExactNumber::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::operator+(const ExactNumber& o) const {
    require_same_context(o);
    std::vector<Rational> v = c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.c_[i];
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::operator-(const ExactNumber& o) const {
    require_same_context(o);
    std::vector<Rational> v = c_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.c_[i];
    return ExactNumber(ctx_, std::move(v));
}

namespace {

// Fold a polynomial in zeta (arbitrary degree, low-first) into canonical
// power-basis coordinates using the context's reduction table.
std::vector<Rational> reduce_poly(const CycloContextPtr& ctx, const std::vector<Rational>& poly) {
    unsigned phi = ctx->degree();
    if (poly.size() > ctx->table_size())
        fail(Errc::internal, "reduction table too small for polynomial degree");
    std::vector<Rational> out(phi, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] == 0) continue;
        if (j < phi) {
            out[j] += poly[j];
        } else {
            const std::vector<Integer>& row = ctx->power_table()[j];
            for (unsigned i = 0; i < phi; ++i) {
                if (row[i] != 0) out[i] += poly[j] * Rational(row[i]);
            }
        }
    }
    return out;
}

} // namespace

ExactNumber ExactNumber::operator*(const ExactNumber& o) const {
    require_same_context(o);
    unsigned phi = ctx_->degree();
    std::vector<Rational> conv(2 * static_cast<std::size_t>(phi) - 1, Rational(0));
    for (std::size_t a = 0; a < phi; ++a) {
        if (c_[a] == 0) continue;
        for (std::size_t b = 0; b < phi; ++b) {
            if (o.c_[b] == 0) continue;
            conv[a + b] += c_[a] * o.c_[b];
        }
    }
    return ExactNumber(ctx_, reduce_poly(ctx_, conv));
}

ExactNumber& ExactNumber::operator+=(const ExactNumber& o) { return *this = *this + o; }
ExactNumber& ExactNumber::operator-=(const ExactNumber& o) { return *this = *this - o; }
ExactNumber& ExactNumber::operator*=(const ExactNumber& o) { return *this = *this * o; }

ExactNumber ExactNumber::operator*(const Rational& s) const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::operator/(const Rational& s) const {
    if (s == 0) fail(Errc::division_by_zero, "division by zero rational");
    std::vector<Rational> v = c_;
    for (auto& x : v) x /= s;
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::operator+(const Rational& s) const {
    std::vector<Rational> v = c_;
    v[0] += s;
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::operator-(const Rational& s) const {
    std::vector<Rational> v = c_;
    v[0] -= s;
    return ExactNumber(ctx_, std::move(v));
}

ExactNumber ExactNumber::inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    // Extended Euclid in Q[x] against Phi_M: since Phi_M is irreducible and
    // deg(a) < deg(Phi_M), gcd(a, Phi_M) is a nonzero constant c, and the
    // Bezout coefficient u with u*a + v*Phi = c gives a^(-1) = u/c.
    unsigned phi = ctx_->degree();
    std::vector<Rational> phi_coeffs(phi + 1);
    for (unsigned k = 0; k <= phi; ++k) phi_coeffs[k] = Rational(ctx_->cyclotomic_polynomial()[k]);
    RationalPolynomial r0(std::move(phi_coeffs));
    RationalPolynomial r1(c_);
    RationalPolynomial u0 = RationalPolynomial::zero();
    RationalPolynomial u1 = RationalPolynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        RationalPolynomial q, r;
        RationalPolynomial::divmod(r0, r1, q, r);
        RationalPolynomial u = u0 - q * u1;
        r0 = r1;
        u0 = u1;
        r1 = r;
        u1 = u;
    }
    if (r0.degree() != 0) fail(Errc::internal, "cyclotomic polynomial split unexpectedly");
    RationalPolynomial inv = u0 * (Rational(1) / r0.coeff(0));
    std::vector<Rational> padded = inv.coeffs();
    padded.resize(std::max<std::size_t>(padded.size(), phi), Rational(0));
    return ExactNumber(ctx_, reduce_poly(ctx_, padded));
}

ExactNumber ExactNumber::operator/(const ExactNumber& o) const {
    require_same_context(o);
    if (o.is_zero()) fail(Errc::division_by_zero, "division by zero");
    return *this * o.inverse();
}

ExactNumber ExactNumber::pow(long e) const {
    if (!ctx_) fail(Errc::invalid_argument, "pow on empty ExactNumber");
    if (e < 0) return inverse().pow(-e);
    ExactNumber acc = one(ctx_);
    ExactNumber base = *this;
    unsigned long exp = static_cast<unsigned long>(e);
    while (exp > 0) {
        if (exp & 1) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

ExactNumber ExactNumber::conj() const {
    if (!ctx_) fail(Errc::invalid_argument, "conj on empty ExactNumber");
    // zeta -> zeta^(M-1), i.e. zeta^k -> zeta^(M-k).
    unsigned m = ctx_->conductor();
    unsigned phi = ctx_->degree();
    std::vector<Rational> out(phi, Rational(0));
    for (unsigned k = 0; k < phi; ++k) {
        if (c_[k] == 0) continue;
        std::size_t j = (k == 0) ? 0 : (m - k);
        const std::vector<Integer>& row = ctx_->power_table()[j];
        for (unsigned i = 0; i < phi; ++i) {
            if (row[i] != 0) out[i] += c_[k] * Rational(row[i]);
        }
    }
    return ExactNumber(ctx_, std::move(out));
}

bool ExactNumber::is_real() const {
    return *this == conj();
}

ExactNumber ExactNumber::real_part() const {
    return (*this + conj()) / Rational(2);
}

ExactNumber ExactNumber::imag_part() const {
    return (*this - conj()) / (i(ctx_) * Rational(2));
}

BigComplex ExactNumber::embed(unsigned digits) const {
    if (!ctx_) fail(Errc::invalid_argument, "embed on empty ExactNumber");
    PrecisionGuard guard(digits + 20);
    unsigned m = ctx_->conductor();
    BigFloat two_pi_over_m = 2 * bf_pi() / m;
    BigFloat re(0), im(0);
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigFloat coeff(c_[k]);
        BigFloat angle = two_pi_over_m * static_cast<unsigned long>(k);
        re += coeff * cos(angle);
        im += coeff * sin(angle);
    }
    return {re, im};
}

double ExactNumber::to_double_real() const {
    if (!is_real()) fail(Errc::not_real, "element has nonzero imaginary part");
    return to_double(embed(kDefaultDigits).re);
}

int ExactNumber::sign_real() const {
    if (!is_real()) fail(Errc::not_real, "sign of a non-real element");
    if (is_zero()) return 0; // canonical coordinates: zero vector <=> zero
    // Nonzero element: refine the embedding until the interval
    // [re - bound, re + bound] excludes zero. The error bound is a generous
    // multiple of the coefficient L1 norm times the unit roundoff.
    for (unsigned digits = kDefaultDigits; digits <= 20480; digits *= 2) {
        BigComplex z = embed(digits);
        PrecisionGuard guard(digits + 20);
        BigFloat l1(0);
        for (const auto& x : c_) {
            BigFloat t(x);
            l1 += abs(t);
        }
        long bits = static_cast<long>((digits + 10) * 3.322);
        BigFloat bound = l1 * (static_cast<unsigned long>(c_.size()) + 2);
        bound = ldexp(bound, static_cast<long>(8) - bits);
        if (z.re > bound) return 1;
        if (z.re < -bound) return -1;
    }
    fail(Errc::precision_exhausted, "sign_real: could not separate value from zero");
}

std::string ExactNumber::serialize() const {
    if (!ctx_) fail(Errc::invalid_argument, "serialize on empty ExactNumber");
    std::ostringstream os;
    os << "cyclo(" << ctx_->conductor() << ")[";
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ",";
        os << rational_to_string(c_[k]);
    }
    os << "]";
    return os.str();
}

ExactNumber ExactNumber::parse(const std::string& text) {
    const std::string prefix = "cyclo(";
    if (text.compare(0, prefix.size(), prefix) != 0)
        fail(Errc::parse_error, "expected 'cyclo(M)[...]' form");
    std::size_t close = text.find(')', prefix.size());
    if (close == std::string::npos || close + 1 >= text.size() || text[close + 1] != '[' ||
        text.back() != ']')
        fail(Errc::parse_error, "expected 'cyclo(M)[...]' form");
    unsigned m = 0;
    {
        std::string num = text.substr(prefix.size(), close - prefix.size());
        if (num.empty()) fail(Errc::parse_error, "missing conductor");
        for (char ch : num)
            if (ch < '0' || ch > '9') fail(Errc::parse_error, "conductor must be a positive integer");
        unsigned long v = std::strtoul(num.c_str(), nullptr, 10);
        if (v == 0 || v > 1000000) fail(Errc::parse_error, "conductor out of range");
        m = static_cast<unsigned>(v);
    }
    CycloContextPtr ctx = CycloContext::get(m);
    std::string body = text.substr(close + 2, text.size() - close - 3);
    std::vector<Rational> coords;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(rational_from_string(item));
    if (coords.size() != ctx->degree())
        fail(Errc::parse_error, "coordinate count does not match field degree");
    return ExactNumber(ctx, std::move(coords));
}

// ---------------------------------------------------------------------------
// Exact trigonometry
// ---------------------------------------------------------------------------

ExactNumber trig_exact(TrigKind kind, long k, unsigned denom, const CycloContextPtr& ctx) {
    if (!ctx) fail(Errc::invalid_argument, "null cyclotomic context");
    if (denom == 0) fail(Errc::invalid_argument, "trig denominator must be positive");
    unsigned m = ctx->conductor();
    if (m % (2 * denom) != 0 || m % 4 != 0)
        fail(Errc::invalid_argument,
             "conductor lacks the roots of unity for angle pi*k/" + std::to_string(denom));
    // w = exp(i*k*pi/denom) = zeta_M^(k * M/(2*denom)).
    long step = static_cast<long>(m / (2 * denom));
    ExactNumber w = ExactNumber::zeta_pow(ctx, step * k);
    ExactNumber winv = ExactNumber::zeta_pow(ctx, -step * k);
    ExactNumber cosv = (w + winv) / Rational(2);
    if (kind == TrigKind::Cos) return cosv;
    ExactNumber sinv = (w - winv) / (ExactNumber::i(ctx) * Rational(2));
    if (kind == TrigKind::Sin) return sinv;
    if (cosv.is_zero()) fail(Errc::trig_pole, "tangent pole at pi*" + std::to_string(k) + "/" +
                                                  std::to_string(denom));
    return sinv / cosv;
}

// ---------------------------------------------------------------------------
// Linear algebra over Q for minimal polynomials and subfield expression
// ---------------------------------------------------------------------------

namespace {

// Row-reduced basis with tracking: each basis row remembers its expression
// as a combination of the original inserted vectors.
class TrackedEchelon {
public:
    // Attempt to insert `v` (as the next original vector). On success returns
    // false. If `v` is dependent on prior rows, returns true and writes the
    // combination c with v = sum_j c[j] * original_j into `combo`.
    bool insert_or_combo(const std::vector<Rational>& v, std::vector<Rational>& combo) {
        std::vector<Rational> w = v;
        std::vector<Rational> expr(n_inserted_ + 1, Rational(0));
        expr[n_inserted_] = 1; // w starts as the new original vector itself
        reduce(w, expr);
        std::size_t pivot = first_nonzero(w);
        if (pivot == w.size()) {
            // Dependent: 0 = w = original_new - sum(...), so
            // original_new = -(expr minus its last entry), with expr[last]=1.
            combo.assign(n_inserted_, Rational(0));
            for (std::size_t j = 0; j < n_inserted_; ++j) combo[j] = -expr[j];
            ++n_inserted_;
            return true;
        }
        // Back-substitute to keep all rows reduced at the new pivot.
        for (auto& row : rows_) {
            if (row.v[pivot] != 0) {
                Rational f = row.v[pivot] / w[pivot];
                sub_scaled(row.v, w, f);
                sub_scaled_expr(row.expr, expr, f);
            }
        }
        rows_.push_back({std::move(w), std::move(expr), pivot});
        ++n_inserted_;
        return false;
    }

    // Express `v` in terms of the original inserted vectors. Returns false if
    // v is outside the span.
    bool express(const std::vector<Rational>& v, std::vector<Rational>& combo) const {
        std::vector<Rational> w = v;
        std::vector<Rational> expr(n_inserted_, Rational(0));
        for (const auto& row : rows_) {
            if (w[row.pivot] != 0) {
                Rational f = w[row.pivot] / row.v[row.pivot];
                sub_scaled(w, row.v, f);
                for (std::size_t j = 0; j < row.expr.size() && j < expr.size(); ++j)
                    expr[j] += f * row.expr[j];
            }
        }
        if (first_nonzero(w) != w.size()) return false;
        combo = std::move(expr);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        std::vector<Rational> v;
        std::vector<Rational> expr; // combination of originals giving v
        std::size_t pivot;
    };

    static std::size_t first_nonzero(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return v.size();
    }

    static void sub_scaled(std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& f) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (b[i] != 0) a[i] -= f * b[i];
    }

    static void sub_scaled_expr(std::vector<Rational>& a, const std::vector<Rational>& b,
                                const Rational& f) {
        if (a.size() < b.size()) a.resize(b.size(), Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i)
            if (b[i] != 0) a[i] -= f * b[i];
    }

    void reduce(std::vector<Rational>& w, std::vector<Rational>& expr) const {
        for (const auto& row : rows_) {
            if (w[row.pivot] != 0) {
                Rational f = w[row.pivot] / row.v[row.pivot];
                sub_scaled(w, row.v, f);
                sub_scaled_expr(expr, row.expr, f);
            }
        }
    }

    std::vector<Row> rows_;
    std::size_t n_inserted_ = 0;
};

} // namespace

RationalPolynomial minimal_polynomial(const ExactNumber& a) {
    if (!a.valid()) fail(Errc::invalid_argument, "minimal_polynomial of empty ExactNumber");
    const CycloContextPtr& ctx = a.context();
    TrackedEchelon basis;
    ExactNumber power = ExactNumber::one(ctx);
    for (unsigned d = 0; d <= ctx->degree(); ++d) {
        std::vector<Rational> combo;
        if (basis.insert_or_combo(power.coords(), combo)) {
            // power = a^d depends on earlier powers: minpoly is
            // x^d - sum_j combo[j] x^j.
            std::vector<Rational> coeffs(d + 1, Rational(0));
            for (std::size_t j = 0; j < combo.size(); ++j) coeffs[j] = -combo[j];
            coeffs[d] = 1;
            return RationalPolynomial(std::move(coeffs)).primitive_integer_form();
        }
        power = power * a;
    }
    fail(Errc::internal, "no dependency among powers up to the field degree");
}

RationalPolynomial express_in_generator(const ExactNumber& a, const ExactNumber& g) {
    if (!a.valid() || !g.valid())
        fail(Errc::invalid_argument, "express_in_generator on empty ExactNumber");
    if (a.context()->conductor() != g.context()->conductor())
        fail(Errc::context_mismatch, "value and generator live in different fields");
    const CycloContextPtr& ctx = g.context();
    TrackedEchelon basis;
    ExactNumber power = ExactNumber::one(ctx);
    for (unsigned d = 0; d <= ctx->degree(); ++d) {
        std::vector<Rational> combo;
        if (basis.insert_or_combo(power.coords(), combo)) break; // rank = deg minpoly(g)
        power = power * g;
    }
    std::vector<Rational> combo;
    if (!basis.express(a.coords(), combo))
        fail(Errc::not_in_subfield, "value does not lie in the subfield generated by g");
    return RationalPolynomial(std::move(combo));
}

Integrality integrality(const ExactNumber& a) {
    RationalPolynomial p = minimal_polynomial(a).primitive_integer_form();
    if (!p.is_monic_integer()) return Integrality::NonIntegral;
    Rational c0 = p.coeff(0);
    if (c0 == 1 || c0 == -1) return Integrality::Unit;
    return Integrality::IntegerNonUnit;
}

const char* integrality_name(Integrality v) {
    switch (v) {
        case Integrality::Unit: return "unit";
        case Integrality::IntegerNonUnit: return "integer";
        case Integrality::NonIntegral: return "non-integral";
    }
    return "?";
}

RationalPolynomial zeta_polynomial_form(const ExactNumber& a, unsigned order) {
    if (!a.valid()) fail(Errc::invalid_argument, "zeta_polynomial_form on empty ExactNumber");
    unsigned m = a.context()->conductor();
    if (order == 0) order = m;
    if (m % order != 0)
        fail(Errc::invalid_argument, "order must divide the field conductor");
    if (order == m) return RationalPolynomial(a.coords());
    ExactNumber g = ExactNumber::zeta_pow(a.context(), static_cast<long>(m / order));
    return express_in_generator(a, g);
}

} // namespace polyweb
