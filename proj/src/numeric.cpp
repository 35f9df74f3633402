// Small numeric helpers shared across the library: pi at the active MPFR
// precision, totient, and rational/float string conversions.

#include "polyweb/numeric.hpp"
#include "polyweb/error.hpp"

#include <boost/math/constants/constants.hpp>

#include <iomanip>
#include <sstream>

namespace polyweb {

BigFloat bf_pi() {
    // Computed at the current default precision (pi<> caches per precision).
    return boost::math::constants::pi<BigFloat>();
}

unsigned totient(unsigned m) {
    if (m == 0) fail(Errc::invalid_argument, "totient(0) is undefined");
    unsigned result = m;
    unsigned rest = m;
    for (unsigned p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            while (rest % p == 0) rest /= p;
            result -= result / p;
        }
    }
    if (rest > 1) result -= result / rest;
    return result;
}

Rational rational_from_string(const std::string& text) {
    // Reject forms GMP would accept but we do not document (whitespace,
    // hex prefixes) by checking the character set first.
    if (text.empty()) fail(Errc::parse_error, "empty rational literal");
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/') {
            ++slashes;
            continue;
        }
        if (ch == '-' || ch == '+') {
            // Sign allowed only at the start of numerator or denominator.
            if (i != 0 && text[i - 1] != '/')
                fail(Errc::parse_error, "invalid rational literal: '" + text + "'");
            continue;
        }
        if (ch < '0' || ch > '9')
            fail(Errc::parse_error, "invalid rational literal: '" + text + "'");
    }
    if (slashes > 1 || text.back() == '/' || text.front() == '/')
        fail(Errc::parse_error, "invalid rational literal: '" + text + "'");
    if (slashes == 1) {
        // GMP canonicalization crashes on a zero denominator; reject it here.
        std::string den = text.substr(text.find('/') + 1);
        bool all_zero = true;
        for (char ch : den)
            if (ch != '0' && ch != '+' && ch != '-') all_zero = false;
        if (all_zero) fail(Errc::parse_error, "zero denominator in '" + text + "'");
    }
    try {
        return Rational(text);
    } catch (const std::exception&) {
        fail(Errc::parse_error, "invalid rational literal: '" + text + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    return q.str(); // mpq canonical form: lowest terms, sign on numerator
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

double to_double(const BigFloat& x) {
    return x.convert_to<double>();
}

std::string bigfloat_to_string(const BigFloat& x, unsigned digits10) {
    std::ostringstream os;
    os << std::setprecision(static_cast<int>(digits10)) << x;
    return os.str();
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator*(const BigFloat& s, const BigComplex& a) {
    return {s * a.re, s * a.im};
}

} // namespace polyweb
