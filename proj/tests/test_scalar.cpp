#include "doctest.h"

#include "braidalg/errors.hpp"
#include "braidalg/scalar.hpp"

using namespace braidalg;

TEST_CASE("cyclotomic relation zeta3 + zeta3^2 + 1 = 0") {
    auto ring = make_ring(3, {}, {});
    Scalar s = Scalar::zeta_pow(ring, 1) + Scalar::zeta_pow(ring, 2) + Scalar::one(ring);
    CHECK(s.is_zero());
}

TEST_CASE("laurent cancellation and distributivity") {
    auto ring = make_ring(1, {"lambda"}, {"q"});
    Scalar lam = Scalar::variable(ring, "lambda");
    Scalar q = Scalar::variable(ring, "q");
    CHECK((lam * lam.invert()).is_one());
    Scalar lhs = (q + q.invert()) * q;
    Scalar rhs = q * q + Scalar::one(ring);
    CHECK(lhs == rhs);
}

TEST_CASE("conjugation rules") {
    auto ring = make_ring(4, {"lambda"}, {"q"});
    Scalar lam2 = Scalar::variable(ring, "lambda").pow(2);
    CHECK(lam2.conj() == Scalar::variable(ring, "lambda").pow(-2));
    Scalar q = Scalar::variable(ring, "q");
    CHECK(q.conj() == q);
    // zeta(4) = i conjugates to zeta(4)^3 = -i
    CHECK(Scalar::zeta_pow(ring, 1).conj() == Scalar::zeta_pow(ring, 3));
}

TEST_CASE("inversion of monomials only") {
    auto ring = make_ring(3, {"lambda"}, {"q"});
    Scalar two_lam2 = Scalar::from_int(ring, 2) * Scalar::variable(ring, "lambda").pow(2);
    Scalar inv = two_lam2.invert();
    CHECK((two_lam2 * inv).is_one());
    CHECK(inv == Scalar::from_rational(ring, Rational(1, 2)) * Scalar::variable(ring, "lambda").pow(-2));
    Scalar q1 = Scalar::variable(ring, "q") + Scalar::one(ring);
    CHECK_THROWS_AS(q1.invert(), NotInvertible);
    CHECK(Scalar::zeta_pow(ring, 1).invert() == Scalar::zeta_pow(ring, 2));
}

TEST_CASE("conj is an involutive ring automorphism") {
    auto ring = make_ring(12, {"u"}, {"p"});
    Scalar a = parse_scalar(ring, "zeta(12)^5 u^2 p - 2/3 u^-1");
    Scalar b = parse_scalar(ring, "(1 + zeta(4)) p^2 + u");
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
}

TEST_CASE("scalar parser basics") {
    auto ring = make_ring(4, {"lambda"}, {"q"});
    CHECK(parse_scalar(ring, "lambda^-2") == Scalar::variable(ring, "lambda").pow(-2));
    CHECK(parse_scalar(ring, "1/2 q^2") ==
          Scalar::from_rational(ring, Rational(1, 2)) * Scalar::variable(ring, "q").pow(2));
    CHECK(parse_scalar(ring, "zeta(4)") == Scalar::zeta_pow(ring, 1));
    CHECK(parse_scalar(ring, "(q + q^-1)*q - q^2 - 1").is_zero());
    CHECK_THROWS_AS(parse_scalar(ring, "nope"), ParseError);
}

TEST_CASE("exact division") {
    auto ring = make_ring(1, {}, {"q"});
    Scalar q = Scalar::variable(ring, "q");
    Scalar a = (Scalar::one(ring) - q) * (q * q + Scalar::from_int(ring, 3));
    auto d = a.try_divide(Scalar::one(ring) - q);
    REQUIRE(d.has_value());
    CHECK(*d == q * q + Scalar::from_int(ring, 3));
    auto bad = (q * q).try_divide(Scalar::one(ring) - q);
    CHECK(!bad.has_value());
}

TEST_CASE("substitute_power realizes recorded root relations") {
    auto ring = make_ring(4, {"mu"}, {});
    // mu^4 = zeta(4): mu^6 -> zeta(4) mu^2, mu^-1 -> zeta(4)^-1 mu^3
    Scalar target = Scalar::zeta_pow(ring, 1);
    Scalar v = Scalar::variable(ring, "mu");
    CHECK(v.pow(6).substitute_power(0, 4, target) == target * v.pow(2));
    CHECK(v.pow(-1).substitute_power(0, 4, target) == target.invert() * v.pow(3));
}
