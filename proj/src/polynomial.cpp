#include "polyweb/polynomial.hpp"
#include "polyweb/error.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <sstream>

namespace polyweb {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return RationalPolynomial(std::move(v));
}

Rational RationalPolynomial::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
}

Rational RationalPolynomial::leading() const {
    if (c_.empty()) fail(Errc::invalid_argument, "leading() of zero polynomial");
    return c_.back();
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return zero();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    if (s == 0) return zero();
    std::vector<Rational> v = c_;
    for (auto& x : v) x *= s;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::divmod(const RationalPolynomial& num, const RationalPolynomial& den,
                                RationalPolynomial& quot, RationalPolynomial& rem) {
    if (den.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    std::vector<Rational> r = num.c_;
    const std::vector<Rational>& d = den.c_;
    if (r.size() < d.size()) {
        quot = zero();
        rem = num;
        return;
    }
    std::vector<Rational> q(r.size() - d.size() + 1, Rational(0));
    const Rational lead = d.back();
    for (std::size_t qi = q.size(); qi-- > 0;) {
        Rational factor = r[qi + d.size() - 1] / lead;
        if (factor != 0) {
            q[qi] = factor;
            for (std::size_t j = 0; j < d.size(); ++j) r[qi + j] -= factor * d[j];
        }
    }
    quot = RationalPolynomial(std::move(q));
    rem = RationalPolynomial(std::move(r));
}

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double RationalPolynomial::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].convert_to<double>();
    return acc;
}

bool RationalPolynomial::is_integral() const {
    for (const auto& x : c_)
        if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

bool RationalPolynomial::is_monic_integer() const {
    return !c_.empty() && is_integral() && c_.back() == 1;
}

RationalPolynomial RationalPolynomial::primitive_integer_form() const {
    if (c_.empty()) return zero();
    // Multiply by lcm of denominators, divide by gcd of numerators, fix sign.
    Integer den_lcm = 1;
    for (const auto& x : c_)
        den_lcm = boost::multiprecision::lcm(den_lcm, Integer(boost::multiprecision::denominator(x)));
    Integer num_gcd = 0;
    for (const auto& x : c_) {
        Integer scaled_num = Integer(boost::multiprecision::numerator(x)) * den_lcm /
                             Integer(boost::multiprecision::denominator(x));
        num_gcd = boost::multiprecision::gcd(num_gcd, scaled_num);
    }
    Rational scale(den_lcm, num_gcd); // num_gcd > 0 since poly is nonzero
    if (c_.back() < 0) scale = -scale;
    return *this * scale;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& a = c_[k];
        if (a == 0) continue;
        Rational mag = a < 0 ? Rational(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && k > 0;
        if (!unit_coeff) os << rational_to_string(mag);
        if (k > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace polyweb
