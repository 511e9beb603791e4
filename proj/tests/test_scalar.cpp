#include <random>

#include "doctest.h"
#include "freecurve/scalar.hpp"

using namespace freecurve;

TEST_CASE("rational normalization") {
    CHECK(Rational::make(2, 4) == Rational::make(1, 2));
    CHECK(Rational::make(-3, -6).str() == "1/2");
    CHECK(Rational::make(0, 7).str() == "0");
    CHECK(Rational::make(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational::make(1, 0), ArithmeticError);
    CHECK(Rational::parse("-6/4").str() == "-3/2");
}

TEST_CASE("quadratic field arithmetic") {
    QuadElem s = QuadElem::root(-2);
    CHECK(s * s == QuadElem(-2));
    QuadElem a(Rational(1), Rational(1), 2), b(Rational(-1), Rational(1), 2);
    CHECK((a * b).is_one());
    CHECK(QuadElem(Rational::make(1, 2)) + QuadElem(Rational::make(1, 3)) == QuadElem(Rational::make(5, 6)));
    CHECK_THROWS_AS(QuadElem::root(2) + QuadElem::root(3), ArithmeticError);
    CHECK_THROWS_AS(QuadElem(1) / QuadElem(0), ArithmeticError);
    CHECK_THROWS_AS(QuadElem(Rational(1), Rational(1), 4), ArithmeticError);
    CHECK(quad_arith(a, b, QuadOp::Div) == a * b.inverse());
}

TEST_CASE("quadratic square roots") {
    QuadElem r;
    CHECK(quad_sqrt(QuadElem(-8), -2, r));
    CHECK(r * r == QuadElem(-8));
    QuadElem x(Rational(3), Rational(2), 2);  // (1 + s)^2
    CHECK(quad_sqrt(x, 2, r));
    CHECK(r * r == x);
    CHECK_FALSE(quad_sqrt(QuadElem(3), 2, r));
}

namespace {

QuadElem random_elem(std::mt19937_64& rng, FieldTag d) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    return QuadElem(Rational::make(num(rng), den(rng)), Rational::make(num(rng), den(rng)), d);
}

}  // namespace

TEST_CASE("field axioms on fuzzed triples") {
    std::mt19937_64 rng(20240517);
    for (FieldTag d : {2L, -2L, -3L}) {
        for (int i = 0; i < 1000; ++i) {
            QuadElem x = random_elem(rng, d), y = random_elem(rng, d), z = random_elem(rng, d);
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE((x + y) + z == x + (y + z));
            REQUIRE(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) REQUIRE((x * x.inverse()).is_one());
        }
    }
}

TEST_CASE("rational embedding commutes with operations") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
    for (int i = 0; i < 500; ++i) {
        Rational p = Rational::make(num(rng), den(rng)), q = Rational::make(num(rng), den(rng));
        QuadElem ep(Rational(p), Rational(0), 0), eq(q);
        CHECK(ep + eq == QuadElem(p + q));
        CHECK(ep - eq == QuadElem(p - q));
        CHECK(ep * eq == QuadElem(p * q));
        if (!q.is_zero()) CHECK(ep / eq == QuadElem(p / q));
        if (!p.is_zero()) CHECK((ep * QuadElem::root(-3)).d() == -3);
    }
}
