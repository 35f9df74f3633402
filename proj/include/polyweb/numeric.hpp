#pragma once

// Arbitrary-precision numeric foundation.
//
// Integers and rationals are GMP-backed; floats are MPFR-backed with a
// configurable decimal precision (library default: 40 significant digits).
// All exact arithmetic in the library works over `Rational`; `BigFloat` is
// used only for numeric embeddings, surrogate orbits and rendering shadows.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace polyweb {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using BigFloat = boost::multiprecision::mpfr_float; // variable precision

// Default number of significant decimal digits for numeric embeddings and
// surrogate orbits. Can be overridden per call and via the POLYWEB_DIGITS
// environment variable (read by the CLI layer).
inline constexpr unsigned kDefaultDigits = 40;

// Scope guard that sets the (thread-local) default BigFloat precision in
// decimal digits and restores the previous value on exit.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(digits10);
    }
    ~PrecisionGuard() { BigFloat::default_precision(saved_); }

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// pi at the current default BigFloat precision.
BigFloat bf_pi();

// Euler totient of m (m >= 1).
unsigned totient(unsigned m);

// Parse "p", "-p", or "p/q" into a rational. Throws Errc::parse_error.
Rational rational_from_string(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1, lowest terms, sign on p.
std::string rational_to_string(const Rational& q);

// Shorthand conversions.
double to_double(const Rational& q);
double to_double(const BigFloat& x);

// Decimal string with the requested number of significant digits.
std::string bigfloat_to_string(const BigFloat& x, unsigned digits10);

// Minimal complex pair over BigFloat (only the operations the library needs).
struct BigComplex {
    BigFloat re;
    BigFloat im;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigFloat& s, const BigComplex& a);

} // namespace polyweb
