// Exact cyclotomic arithmetic tests.
//
// Numeric reference values in this file were frozen from independent
// computer-algebra derivations (cyclotomic polynomial recursions, minimal
// polynomials, high-precision trigonometric evaluations) before the code
// under test existed; they are not recomputed here.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyweb/cyclotomic.hpp"
#include "polyweb/error.hpp"

#include <vector>

using namespace polyweb;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> qv(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

ExactNumber tan_exact(long k, unsigned denom, const CycloContextPtr& ctx) {
    return trig_exact(TrigKind::Tan, k, denom, ctx);
}

} // namespace

TEST_CASE("context: cyclotomic polynomials and conductors") {
    // Phi_1 = x - 1
    auto c1 = CycloContext::get(1);
    CHECK(c1->degree() == 1);
    CHECK(c1->cyclotomic_polynomial() == std::vector<Integer>{Integer(-1), Integer(1)});

    // Phi_4 = x^2 + 1
    auto c4 = CycloContext::get(4);
    CHECK(c4->degree() == 2);
    CHECK(c4->cyclotomic_polynomial() == std::vector<Integer>{Integer(1), Integer(0), Integer(1)});

    // Phi_12 = x^4 - x^2 + 1
    auto c12 = CycloContext::get(12);
    CHECK(c12->degree() == 4);
    CHECK(c12->cyclotomic_polynomial() ==
          std::vector<Integer>{Integer(1), Integer(0), Integer(-1), Integer(0), Integer(1)});

    // Phi_48 = x^16 - x^8 + 1
    auto c48 = CycloContext::get(48);
    CHECK(c48->degree() == 16);
    for (unsigned k = 0; k <= 16; ++k) {
        Integer expect = (k == 0 || k == 16) ? 1 : (k == 8 ? -1 : 0);
        CHECK(c48->cyclotomic_polynomial()[k] == expect);
    }

    // Phi_44 and Phi_92: alternating 1,0,-1,0,... of degrees 20 and 44.
    for (unsigned m : {44u, 92u}) {
        auto c = CycloContext::get(m);
        CHECK(c->degree() == totient(m));
        const auto& p = c->cyclotomic_polynomial();
        REQUIRE(p.size() == c->degree() + 1);
        for (unsigned k = 0; k < p.size(); ++k) {
            Integer expect = (k % 2 == 1) ? 0 : (k % 4 == 0 ? 1 : -1);
            CHECK(p[k] == expect);
        }
    }

    CHECK(CycloContext::conductor_for_ngon(7) == 28);
    CHECK(CycloContext::conductor_for_ngon(11) == 44);
    CHECK(CycloContext::conductor_for_ngon(12) == 24);
    CHECK(CycloContext::conductor_for_ngon(23) == 92);
    CHECK(CycloContext::conductor_for_ngon(24) == 48);
    CHECK(CycloContext::conductor_for_ngon(4) == 8);
    CHECK_THROWS_AS(CycloContext::conductor_for_ngon(2), Error);
}

TEST_CASE("field arithmetic: ring and division identities") {
    auto ctx = CycloContext::get(44);
    ExactNumber z = ExactNumber::zeta(ctx);
    ExactNumber one = ExactNumber::one(ctx);

    CHECK(z.pow(44) == one);
    CHECK(z * ExactNumber::zeta_pow(ctx, 43) == one);
    CHECK(z.pow(-1) == ExactNumber::zeta_pow(ctx, -1));
    CHECK((z + ExactNumber::from_rational(ctx, Q(3))).is_zero() == false);

    // i^2 = -1 via zeta_44^11.
    ExactNumber i = ExactNumber::i(ctx);
    CHECK(i * i == -one);

    // inverse: (zeta+3) * (zeta+3)^-1 = 1
    ExactNumber a = z + Q(3);
    CHECK(a * a.inverse() == one);
    CHECK(a / a == one);
    CHECK_THROWS_AS(ExactNumber::zero(ctx).inverse(), Error);
    CHECK_THROWS_AS(a / ExactNumber::zero(ctx), Error);

    // context mismatch is refused
    auto ctx2 = CycloContext::get(28);
    CHECK_THROWS_AS(z + ExactNumber::zeta(ctx2), Error);

    // lambda_11 = zeta_11 + conj(zeta_11) is real; zeta_11 itself is not
    ExactNumber z11 = ExactNumber::zeta_pow(ctx, 4); // zeta_44^4 = zeta_11
    CHECK_FALSE(z11.is_real());
    ExactNumber lambda = z11 + z11.conj();
    CHECK(lambda.is_real());
    CHECK(lambda == trig_exact(TrigKind::Cos, 2, 11, ctx) * Q(2)); // 2cos(2pi/11)

    // conjugation is an involution and a ring morphism
    ExactNumber b = z11 * Q(2, 7) + z * Q(-3) + Q(1, 5);
    CHECK(b.conj().conj() == b);
    CHECK((a * b).conj() == a.conj() * b.conj());

    // real/imag decomposition reassembles through i
    CHECK(b.real_part() + ExactNumber::i(ctx) * b.imag_part() == b);
}

TEST_CASE("exact trigonometry") {
    auto ctx = CycloContext::get(44);
    ExactNumber one = ExactNumber::one(ctx);

    // tan(pi/4) = 1, sin(pi/2) = 1, cos(pi) = -1 (conductor 8 holds zeta_8)
    auto c8 = CycloContext::get(8);
    ExactNumber one8 = ExactNumber::one(c8);
    CHECK(tan_exact(1, 4, c8) == one8);
    CHECK(trig_exact(TrigKind::Sin, 1, 2, ctx) == one);
    CHECK(trig_exact(TrigKind::Cos, 1, 1, ctx) == -one);

    // Pythagorean identity, exactly, at k=3 denom=11
    ExactNumber s = trig_exact(TrigKind::Sin, 3, 11, ctx);
    ExactNumber c = trig_exact(TrigKind::Cos, 3, 11, ctx);
    CHECK(s * s + c * c == one);

    // tangent poles raise
    CHECK_THROWS_AS(tan_exact(1, 2, ctx), Error);
    CHECK_THROWS_AS(tan_exact(11, 22, ctx), Error);

    // periodicity and oddness, exactly
    CHECK(trig_exact(TrigKind::Cos, 25, 11, ctx) == trig_exact(TrigKind::Cos, 3, 11, ctx));
    CHECK(tan_exact(-1, 4, c8) == -one8);

    // tan(theta) = -i(u-1)/(u+1) with u = e^{2i theta}: theta = 3pi/22, u = zeta_44^6
    ExactNumber i = ExactNumber::i(ctx);
    ExactNumber u = ExactNumber::zeta_pow(ctx, 6);
    ExactNumber moebius = (-i) * (u - Q(1)) / (u + Q(1));
    CHECK(moebius == tan_exact(3, 22, ctx));

    // tan(pi/18) + tan(7pi/18) - tan(5pi/18) = sqrt(3) = tan(pi/3), exactly
    auto c36 = CycloContext::get(36);
    ExactNumber lhs = tan_exact(1, 18, c36) + tan_exact(7, 18, c36) - tan_exact(5, 18, c36);
    CHECK(lhs == tan_exact(1, 3, c36));

    // a conductor without the needed roots of unity is refused
    CHECK_THROWS_AS(tan_exact(1, 7, ctx), Error);
}

TEST_CASE("embedding and exact sign") {
    auto ctx = CycloContext::get(44);

    // frozen 35-digit reference: cos(pi/11)
    const char* kCosPi11 = "0.95949297361449738989036805706632770";
    ExactNumber c = trig_exact(TrigKind::Cos, 1, 11, ctx);
    {
        PrecisionGuard guard(60);
        BigFloat want(kCosPi11);
        BigFloat got = c.embed(40).re;
        CHECK(abs(got - want) < BigFloat("1e-34"));
    }
    CHECK(c.to_double_real() == doctest::Approx(0.959492973614497).epsilon(1e-14));

    CHECK(ExactNumber::zero(ctx).sign_real() == 0);
    CHECK(ExactNumber::zeta_pow(ctx, 4).is_real() == false);
    CHECK_THROWS_AS(ExactNumber::zeta(ctx).sign_real(), Error);

    // sign separates nearby field elements: cos(pi/11) > cos(2pi/11)
    ExactNumber c2 = trig_exact(TrigKind::Cos, 2, 11, ctx);
    CHECK((c - c2).sign_real() == 1);
    CHECK((c2 - c).sign_real() == -1);

    // a genuinely tiny nonzero value (~1.3e-7): GenScale[11]^5
    ExactNumber g = tan_exact(1, 11, ctx) * tan_exact(1, 22, ctx);
    CHECK(g.pow(5).sign_real() == 1);
    CHECK((-g.pow(5)).sign_real() == -1);

    // imaginary parts are detected
    CHECK_THROWS_AS((ExactNumber::zeta(ctx) + Q(1)).to_double_real(), Error);
}

TEST_CASE("minimal polynomials and integrality") {
    auto c28 = CycloContext::get(28);
    auto c24 = CycloContext::get(24);
    auto c44 = CycloContext::get(44);

    // rational numbers
    CHECK(minimal_polynomial(ExactNumber::zero(c28)) == RationalPolynomial(qv({0, 1})));
    CHECK(minimal_polynomial(ExactNumber::one(c28)) == RationalPolynomial(qv({-1, 1})));
    CHECK(minimal_polynomial(ExactNumber::from_rational(c28, Q(1, 3))) ==
          RationalPolynomial(qv({-1, 3})));

    // frozen: minpoly(tan(pi/7)) = x^6 - 21x^4 + 35x^2 - 7
    CHECK(minimal_polynomial(tan_exact(1, 7, c28)) ==
          RationalPolynomial(qv({-7, 0, 35, 0, -21, 0, 1})));

    // frozen: minpoly(2cos(2pi/7)) = x^3 + x^2 - 2x - 1
    ExactNumber lam7 = trig_exact(TrigKind::Cos, 2, 7, c28) * Q(2);
    CHECK(minimal_polynomial(lam7) == RationalPolynomial(qv({-1, -2, 1, 1})));

    // minpoly(zeta_12) is the 12th cyclotomic polynomial itself
    CHECK(minimal_polynomial(ExactNumber::zeta_pow(c24, 2)) ==
          RationalPolynomial(qv({1, 0, -1, 0, 1})));

    // frozen: tan^2(pi/12) has minpoly x^2 - 14x + 1  -> unit
    ExactNumber gs12 = tan_exact(1, 12, c24).pow(2);
    CHECK(minimal_polynomial(gs12) == RationalPolynomial(qv({1, -14, 1})));
    CHECK(integrality(gs12) == Integrality::Unit);

    // tan^2(pi/6) = 1/3: minpoly 3x - 1 -> not an algebraic integer
    ExactNumber gs6 = tan_exact(1, 6, c24).pow(2);
    CHECK(gs6.is_rational());
    CHECK(gs6.rational_value() == Q(1, 3));
    CHECK(integrality(gs6) == Integrality::NonIntegral);

    // frozen: tan(pi/12)/tan(2pi/12) has minpoly x^2 + 6x - 3
    // (monic integer, constant term -3 -> integer but not a unit)
    ExactNumber sc2 = tan_exact(1, 12, c24) / tan_exact(2, 12, c24);
    CHECK(minimal_polynomial(sc2) == RationalPolynomial(qv({-3, 6, 1})));
    CHECK(integrality(sc2) == Integrality::IntegerNonUnit);

    // frozen: tan(pi/11)tan(pi/22) has minpoly x^5 - x^4 - 26x^3 - 30x^2 + 25x - 1
    ExactNumber gs11 = tan_exact(1, 11, c44) * tan_exact(1, 22, c44);
    CHECK(minimal_polynomial(gs11) ==
          RationalPolynomial(qv({-1, 25, -30, -26, -1, 1})));
    CHECK(integrality(gs11) == Integrality::Unit);

    // the defining generator has the full field degree
    CHECK(minimal_polynomial(ExactNumber::zeta(c44)).degree() == 20);
}

TEST_CASE("generator expression and zeta-basis forms") {
    auto c44 = CycloContext::get(44);
    ExactNumber gs11 = tan_exact(1, 11, c44) * tan_exact(1, 22, c44);

    // a = g -> x
    CHECK(express_in_generator(gs11, gs11) == RationalPolynomial(qv({0, 1})));
    // constants -> degree-0 polynomial
    CHECK(express_in_generator(ExactNumber::from_rational(c44, Q(5, 2)), gs11) ==
          RationalPolynomial(std::vector<Rational>{Q(5, 2)}));

    // frozen: tan(pi/11)/tan(4pi/11) = (-1 + 48x + 26x^2 - x^4)/8 at x = tan(pi/11)tan(pi/22)
    ExactNumber s4 = tan_exact(1, 11, c44) / tan_exact(4, 11, c44);
    RationalPolynomial expect(std::vector<Rational>{Q(-1, 8), Q(6), Q(13, 4), Q(0), Q(-1, 8)});
    CHECK(express_in_generator(s4, gs11) == expect);

    // the same value in the power basis of zeta_11:
    // -(3 + 4x^2 + 2x^4 + 2x^5 + 2x^6 + 2x^7 + 4x^9)
    RationalPolynomial z11_form = zeta_polynomial_form(s4, 11);
    CHECK(z11_form == RationalPolynomial(qv({-3, 0, -4, 0, -2, -2, -2, -2, 0, -4})));

    // lambda_7 = zeta_7 + zeta_7^-1 reduced in the zeta_7 power basis:
    // -1 - x^2 - x^3 - x^4 - x^5
    auto c28 = CycloContext::get(28);
    ExactNumber z7 = ExactNumber::zeta_pow(c28, 4);
    ExactNumber lam7 = z7 + z7.pow(-1);
    CHECK(zeta_polynomial_form(lam7, 7) == RationalPolynomial(qv({-1, 0, -1, -1, -1, -1})));

    // order 0 / conductor order is the identity form
    ExactNumber a = ExactNumber::zeta(c44) * Q(2) + Q(1, 3);
    RationalPolynomial ident = zeta_polynomial_form(a, 0);
    CHECK(ident.coeff(0) == Q(1, 3));
    CHECK(ident.coeff(1) == Q(2));

    // elements outside the subfield are refused
    CHECK_THROWS_AS(express_in_generator(ExactNumber::zeta(c44), gs11), Error);
    // order must divide the conductor
    CHECK_THROWS_AS(zeta_polynomial_form(a, 7), Error);
}

TEST_CASE("serialization round trip") {
    auto ctx = CycloContext::get(12);
    ExactNumber a(ctx, {Q(1, 2), Q(-3), Q(0), Q(22, 7)});
    std::string text = a.serialize();
    CHECK(text == "cyclo(12)[1/2,-3,0,22/7]");
    CHECK(ExactNumber::parse(text) == a);

    ExactNumber z = trig_exact(TrigKind::Tan, 1, 11, CycloContext::get(44));
    CHECK(ExactNumber::parse(z.serialize()) == z);

    CHECK_THROWS_AS(ExactNumber::parse("cyclo(12)[1,2,3]"), Error);       // wrong count
    CHECK_THROWS_AS(ExactNumber::parse("cyclo(0)[1]"), Error);           // bad conductor
    CHECK_THROWS_AS(ExactNumber::parse("zeta(12)[1,0,0,0]"), Error);     // bad prefix
    CHECK_THROWS_AS(ExactNumber::parse("cyclo(12)[1,x,0,0]"), Error);    // bad rational
    CHECK_THROWS_AS(ExactNumber::parse("cyclo(12)[1,1/0,0,0]"), Error);  // zero denominator
}

TEST_CASE("rational polynomial utilities") {
    RationalPolynomial p(qv({-1, 0, 2}));  // 2x^2 - 1
    RationalPolynomial q(qv({1, 1}));      // x + 1
    RationalPolynomial quot, rem;
    RationalPolynomial::divmod(p, q, quot, rem);
    CHECK(quot * q + rem == p);
    CHECK(rem.degree() < q.degree());

    CHECK(p.eval(Q(2)) == Q(7));
    CHECK(p.eval(0.5) == doctest::Approx(-0.5));

    // primitive integer form: clear denominators, normalize sign and content
    RationalPolynomial r(std::vector<Rational>{Q(1, 2), Q(0), Q(-1)}); // -x^2 + 1/2
    CHECK(r.primitive_integer_form() == RationalPolynomial(qv({-1, 0, 2})));
    CHECK(RationalPolynomial(qv({2, 4})).primitive_integer_form() ==
          RationalPolynomial(qv({1, 2})));

    CHECK(RationalPolynomial(qv({1, -14, 1})).is_monic_integer());
    CHECK_FALSE(RationalPolynomial(qv({-1, 3})).is_monic_integer());

    CHECK(RationalPolynomial(qv({-1, 0, 35, 1})).to_string() == "-1 + 35*x^2 + x^3");
    CHECK(RationalPolynomial(std::vector<Rational>{Q(-1, 8), Q(6), Q(13, 4)}).to_string("u") ==
          "-1/8 + 6*u + 13/4*u^2");
    CHECK(RationalPolynomial::zero().to_string() == "0");
}
