#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// An ExactNumber is a vector of phi(M) rational coordinates in the power
// basis 1, zeta, ..., zeta^(phi(M)-1), always reduced canonically modulo the
// M-th cyclotomic polynomial. Equality of coordinate vectors is therefore
// equality of field elements, and a real element is exactly zero iff all of
// its coordinates are zero.
//
// For the regular N-gon all lengths this library needs (tan/sin/cos of
// multiples of pi/N, apothems, scales, map coefficients) live in Q(zeta_M)
// with the conductor choice M = lcm(4, 2N): the factor 4 supplies i so that
// tangents can be formed as -i (z^k - 1)/(z^k + 1).

#include "polyweb/error.hpp"
#include "polyweb/numeric.hpp"
#include "polyweb/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace polyweb {

// Immutable, shared per-conductor data: the cyclotomic polynomial Phi_M and
// a table of x^j mod Phi_M used for products and Galois substitutions.
class CycloContext {
public:
    unsigned conductor() const { return m_; }
    unsigned degree() const { return phi_; } // phi(M)

    // Coefficients of Phi_M, low degree first, length phi(M)+1, monic.
    const std::vector<Integer>& cyclotomic_polynomial() const { return phi_poly_; }

    // Row j (0 <= j < table_size()) holds the coordinates of x^j mod Phi_M.
    const std::vector<std::vector<Integer>>& power_table() const { return table_; }
    std::size_t table_size() const { return table_.size(); }

    // Shared, cached context for a conductor (M >= 1).
    static std::shared_ptr<const CycloContext> get(unsigned conductor);

    // Conductor for all exact data attached to a regular n-gon: lcm(4, 2n).
    static unsigned conductor_for_ngon(unsigned n);

private:
    explicit CycloContext(unsigned m);
    unsigned m_ = 0;
    unsigned phi_ = 0;
    std::vector<Integer> phi_poly_;
    std::vector<std::vector<Integer>> table_;
};

using CycloContextPtr = std::shared_ptr<const CycloContext>;

class ExactNumber {
public:
    ExactNumber() = default; // empty; only assignment and destruction allowed

    // Coordinates must have length ctx->degree() (already reduced).
    ExactNumber(CycloContextPtr ctx, std::vector<Rational> coords);

    static ExactNumber zero(const CycloContextPtr& ctx);
    static ExactNumber one(const CycloContextPtr& ctx);
    static ExactNumber from_rational(const CycloContextPtr& ctx, const Rational& q);
    static ExactNumber zeta(const CycloContextPtr& ctx);          // zeta_M
    static ExactNumber zeta_pow(const CycloContextPtr& ctx, long t); // zeta_M^t
    static ExactNumber i(const CycloContextPtr& ctx);             // zeta_M^(M/4)

    bool valid() const { return ctx_ != nullptr; }
    const CycloContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;           // lies in Q
    Rational rational_value() const;    // requires is_rational()

    bool operator==(const ExactNumber& o) const;
    bool operator!=(const ExactNumber& o) const { return !(*this == o); }

    ExactNumber operator-() const;
    ExactNumber operator+(const ExactNumber& o) const;
    ExactNumber operator-(const ExactNumber& o) const;
    ExactNumber operator*(const ExactNumber& o) const;
    ExactNumber operator/(const ExactNumber& o) const; // Errc::division_by_zero
    ExactNumber& operator+=(const ExactNumber& o);
    ExactNumber& operator-=(const ExactNumber& o);
    ExactNumber& operator*=(const ExactNumber& o);

    ExactNumber operator*(const Rational& s) const;
    ExactNumber operator/(const Rational& s) const;
    ExactNumber operator+(const Rational& s) const;
    ExactNumber operator-(const Rational& s) const;

    ExactNumber inverse() const;
    ExactNumber pow(long e) const; // negative e inverts

    // Complex conjugation (the Galois map zeta -> zeta^(M-1)).
    ExactNumber conj() const;
    bool is_real() const;
    ExactNumber real_part() const;  // (a + conj a)/2
    ExactNumber imag_part() const;  // (a - conj a)/(2i), a real element

    // Numeric embedding with zeta_M -> exp(2*pi*i/M), correct to `digits`
    // significant decimal digits (guard digits are added internally).
    BigComplex embed(unsigned digits = kDefaultDigits) const;
    double to_double_real() const; // requires is_real()

    // Sign of a real element: exact zero test first, then numeric refinement
    // at escalating precision (terminates because nonzero elements have
    // nonzero embeddings).
    int sign_real() const;

    // Serialization: "cyclo(M)[c0,c1,...]" with rationals in lowest terms.
    std::string serialize() const;
    static ExactNumber parse(const std::string& text);

private:
    void require_same_context(const ExactNumber& o) const;
    CycloContextPtr ctx_;
    std::vector<Rational> c_;
};

inline ExactNumber operator*(const Rational& s, const ExactNumber& a) { return a * s; }

enum class TrigKind { Cos, Sin, Tan };

// Exact cos/sin/tan of k*pi/denom. Requires lcm(4, 2*denom) | M so the needed
// roots of unity exist in the context. k may be any integer; tangent poles
// raise Errc::trig_pole.
ExactNumber trig_exact(TrigKind kind, long k, unsigned denom, const CycloContextPtr& ctx);

// Minimal polynomial over Q, returned in primitive integer form with positive
// leading coefficient (degree >= 1; for a = 0 this is x).
RationalPolynomial minimal_polynomial(const ExactNumber& a);

// Write `a` as a polynomial in `g` of degree < deg(minpoly(g)), or raise
// Errc::not_in_subfield when a is not in Q(g).
RationalPolynomial express_in_generator(const ExactNumber& a, const ExactNumber& g);

enum class Integrality { Unit, IntegerNonUnit, NonIntegral };

// Algebraic-integer classification via the minimal polynomial: monic integer
// minpoly => integer; additionally |constant term| = 1 => unit.
Integrality integrality(const ExactNumber& a);
const char* integrality_name(Integrality v);

// Re-express `a` in the power basis of zeta_order (order must divide the
// conductor; order = 0 means the conductor itself, i.e. the identity form).
RationalPolynomial zeta_polynomial_form(const ExactNumber& a, unsigned order = 0);

} // namespace polyweb
