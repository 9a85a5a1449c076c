#include <doctest.h>

#include "magni/rational_function.hpp"
#include "support.hpp"

using namespace magni;

TEST_CASE("polynomial arithmetic basics") {
    IntPoly a({Int(1), Int(2)});        // 1 + 2u
    IntPoly b({Int(-1), Int(0), Int(3)}); // -1 + 3u^2
    CHECK((a + b) == IntPoly({Int(0), Int(2), Int(3)}));
    CHECK((a * b) == IntPoly({Int(-1), Int(-2), Int(3), Int(6)}));
    CHECK((a - a).is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(a.degree() == 1);
    CHECK(b.coeff(2) == 3);
    CHECK(b.coeff(5) == 0);
}

TEST_CASE("exact division and gcd") {
    IntPoly a({Int(1), Int(2), Int(1)}); // (1+u)^2
    IntPoly b({Int(1), Int(1)});         // 1+u
    CHECK(IntPoly::div_exact(a, b) == b);
    CHECK_THROWS_AS(IntPoly::div_exact(b, a), InternalCheckError);

    IntPoly c = a * IntPoly({Int(2), Int(0), Int(2)}); // (1+u)^2 * 2(1+u^2)
    CHECK(poly_gcd(c, a * IntPoly::constant(Int(3))) == a);

    // gcd picks up shared content.
    CHECK(poly_gcd(IntPoly::constant(Int(6)), IntPoly::constant(Int(4))) ==
          IntPoly::constant(Int(2)));
    CHECK(poly_gcd(IntPoly(), IntPoly()).is_zero());
}

TEST_CASE("polynomial serialization") {
    CHECK(IntPoly().to_string() == "0");
    CHECK(IntPoly({Int(2)}).to_string() == "2");
    CHECK(IntPoly({Int(1), Int(1)}).to_string() == "1 + 1*u^1");
    CHECK(IntPoly({Int(3), Int(-1)}).to_string() == "3 - 1*u^1");
    CHECK(IntPoly({Int(0), Int(0), Int(-5)}).to_string() == "-5*u^2");
}

TEST_CASE("rational function canonical form") {
    // (2 + 2u) / (2) -> (1 + u) / 1
    RationalFunctionQ f(1, IntPoly({Int(2), Int(2)}), IntPoly::constant(Int(2)));
    CHECK(f.num() == IntPoly({Int(1), Int(1)}));
    CHECK(f.den() == IntPoly::constant(Int(1)));

    // Negative leading denominator flips.
    RationalFunctionQ g(1, IntPoly::constant(Int(1)), IntPoly({Int(0), Int(-1)}));
    CHECK(g.den() == IntPoly({Int(0), Int(1)}));
    CHECK(g.num() == IntPoly::constant(Int(-1)));

    CHECK_THROWS_AS(RationalFunctionQ(1, IntPoly::constant(Int(1)), IntPoly()), ValidationError);
}

TEST_CASE("exponent denominator is minimized and equality rescales") {
    // u^2 with N=2 is really q^1.
    RationalFunctionQ f(2, IntPoly::monomial(Int(1), 2), IntPoly::constant(Int(1)));
    CHECK(f.exponent_denominator() == 1);
    CHECK(f.num() == IntPoly({Int(0), Int(1)}));

    RationalFunctionQ a(1, IntPoly({Int(0), Int(1)}), IntPoly::constant(Int(1)));      // q
    RationalFunctionQ b(3, IntPoly::monomial(Int(1), 3), IntPoly::constant(Int(1)));   // (q^(1/3))^3
    CHECK(a == b);
    RationalFunctionQ c(2, IntPoly::monomial(Int(1), 1), IntPoly::constant(Int(1)));   // q^(1/2)
    CHECK(a != c);
}

TEST_CASE("field arithmetic") {
    RationalFunctionQ q(1, IntPoly({Int(0), Int(1)}), IntPoly::constant(Int(1)));
    RationalFunctionQ one(1, IntPoly::constant(Int(1)), IntPoly::constant(Int(1)));
    auto r = one / (one + q); // 1/(1+q)
    CHECK(r.den() == IntPoly({Int(1), Int(1)}));
    auto s = r + r;
    CHECK(s.num() == IntPoly::constant(Int(2)));
    CHECK((r - r).is_zero());
    CHECK((r * (one + q)) == one);
    CHECK_THROWS_AS(one / (r - r), ValidationError);
}

TEST_CASE("exponent scaling") {
    RationalFunctionQ q(1, IntPoly({Int(0), Int(1)}), IntPoly::constant(Int(1)));
    auto q_half = q.with_exponents_scaled(make_rat(1, 2));
    CHECK(q_half.exponent_denominator() == 2);
    CHECK(q_half.num() == IntPoly::monomial(Int(1), 1));
    auto back = q_half.with_exponents_scaled(make_rat(2));
    CHECK(back == q);
}

TEST_CASE("serialization matches the pinned format") {
    RationalFunctionQ two_over_1_plus_q(1, IntPoly::constant(Int(2)), IntPoly({Int(1), Int(1)}));
    CHECK(two_over_1_plus_q.to_string() == "(2)/(1 + 1*u^1) in q^(1/1)");
}
