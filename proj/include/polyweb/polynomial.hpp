#pragma once

// Dense univariate polynomials with rational coefficients.
//
// Coefficients are stored low degree first and kept trimmed (no trailing
// zeros), so the zero polynomial has an empty coefficient vector and
// degree() == -1.

#include "polyweb/numeric.hpp"

#include <string>
#include <vector>

namespace polyweb {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial zero() { return RationalPolynomial(); }
    static RationalPolynomial constant(const Rational& c);
    // x^k with coefficient c.
    static RationalPolynomial monomial(const Rational& c, std::size_t k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of x^k (zero when k exceeds the degree).
    Rational coeff(std::size_t k) const;
    Rational leading() const;

    bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& s) const;
    RationalPolynomial operator-() const;

    // Quotient and remainder; divisor must be nonzero.
    static void divmod(const RationalPolynomial& num, const RationalPolynomial& den,
                       RationalPolynomial& quot, RationalPolynomial& rem);

    // Evaluate with Horner's rule over any ring with +,* and rational scaling.
    template <typename T>
    T eval(const T& x, const T& one_value) const {
        T acc = one_value * Rational(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + one_value * c_[i];
        }
        return acc;
    }
    Rational eval(const Rational& x) const;
    double eval(double x) const;

    // True if every coefficient is an integer.
    bool is_integral() const;
    // True if integral, with leading coefficient 1.
    bool is_monic_integer() const;

    // Scale by the unique positive rational that makes the polynomial have
    // coprime integer coefficients and positive leading coefficient.
    RationalPolynomial primitive_integer_form() const;

    // Human-readable form like "1 - 23*x - 27/2*x^2 + 1/2*x^4" in `var`.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace polyweb
