#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace massign;
using namespace testutil;

namespace {
const VarSpace kXX{2, 0, 0};
const VarSpace kWW{0, 2, 0};
const VarSpace kMix{1, 2, 1};
}  // namespace

TEST_CASE("addition is symmetric difference over F2") {
    Poly x1 = X(kXX, 1), x2 = X(kXX, 2);
    CHECK(to_string((x1 + x2) + (x2 + X(kXX, 1, 2))) == "x1^2 + x1");
    Poly p = x1 * x2 + X(kXX, 2, 3);
    CHECK(p + Poly::zero(kXX) == p);
    Poly w12 = W(kWW, 1) + W(kWW, 2);
    CHECK((w12 + w12).is_zero());
}

TEST_CASE("addition rejects mismatched variable spaces") {
    CHECK_THROWS_AS(add(X(kXX, 1), W(kWW, 1)), VarSpaceMismatch);
    CHECK_THROWS_AS(mul(X(kXX, 1), W(kWW, 1)), VarSpaceMismatch);
}

TEST_CASE("multiplication distributes with F2 cancellation") {
    Poly x1 = X(kXX, 1), x2 = X(kXX, 2);
    CHECK(to_string(x1 * (x1 + x2)) == "x1^2 + x1x2");
    CHECK(to_string((x1 + x2) * (x1 + x2)) == "x1^2 + x2^2");  // Frobenius
    VarSpace vs{1, 1, 0};
    Poly wx = W(vs, 1) + X(vs, 1);
    CHECK(to_string(wx * wx) == "x1^2 + w1^2");
}

TEST_CASE("multiplication checks the exponent cap") {
    Poly big = X(kXX, 1, kExponentCap);
    CHECK_THROWS_AS(mul(big, X(kXX, 1)), ExponentOverflow);
    CHECK_NOTHROW(mul(big, X(kXX, 2)));
    CHECK_THROWS_AS(pow(X(kXX, 1, 2), 1ull << 15), ExponentOverflow);  // 2^16 > cap
}

TEST_CASE("pow uses Frobenius plus binary decomposition") {
    Poly s = X(kXX, 1) + X(kXX, 2);
    CHECK(to_string(pow(s, 2)) == "x1^2 + x2^2");
    // All binomial coefficients of 3 are odd; cross-checked by repeated mul.
    Poly cube = pow(s, 3);
    CHECK(cube == naive_pow(s, 3));
    CHECK(to_string(cube) == "x1^3 + x1^2x2 + x1x2^2 + x2^3");
    CHECK(pow(s, 0) == Poly::one(kXX));
}

TEST_CASE("pow agrees with the repeated-mul oracle on random polynomials") {
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_poly(rng, kMix, 5, 3);
        for (unsigned n = 0; n <= 8; ++n) CHECK(pow(p, n) == naive_pow(p, n));
    }
}

TEST_CASE("Frobenius powers scale exponents without changing term counts") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, kXX, 6, 4);
        for (unsigned a = 1; a <= 3; ++a) {
            Poly q = pow(p, 1ull << a);
            REQUIRE(q.term_count() == p.term_count());
            for (std::size_t t = 0; t < p.term_count(); ++t)
                for (int v = 0; v < kXX.total(); ++v)
                    CHECK(q.terms()[t].exponent(v) == (p.terms()[t].exponent(v) << a));
        }
    }
}

TEST_CASE("exact division by a monomial") {
    Poly d2 = X(kXX, 1, 2) * X(kXX, 2) + X(kXX, 1) * X(kXX, 2, 2);
    Monomial x1x2 = (X(kXX, 1) * X(kXX, 2)).leading_term();
    CHECK(to_string(divide_exact_by_monomial(d2, x1x2)) == "x1 + x2");
    Monomial unit(kXX.total());
    CHECK(divide_exact_by_monomial(d2, unit) == d2);

    Poly sq = X(kXX, 1, 2) + X(kXX, 2, 2);
    try {
        divide_exact_by_monomial(sq, x1x2);
        FAIL("expected NonDivisible");
    } catch (const NonDivisible& e) {
        CHECK(to_string(kXX, e.offending_term) == "x1^2");
    }
}

TEST_CASE("weighted degree respects the grading deg(w_s) = s") {
    Poly e22 = X(kXX, 1, 3) * X(kXX, 2) + X(kXX, 1) * X(kXX, 2, 3);
    CHECK(weighted_degree(e22) == 4);
    VarSpace vs{1, 2, 0};
    CHECK(weighted_degree(W(vs, 2) + X(vs, 1, 2)) == 2);
    CHECK(!weighted_degree(W(vs, 1) + X(vs, 1, 2)).has_value());
    CHECK_THROWS_AS(weighted_degree(Poly::zero(vs)), std::invalid_argument);
}

TEST_CASE("products of homogeneous polynomials add degrees") {
    std::mt19937 rng(4242);
    VarSpace vs{2, 2, 0};
    for (int trial = 0; trial < 20; ++trial) {
        Poly p = random_homogeneous(rng, vs, 3);
        Poly q = random_homogeneous(rng, vs, 4);
        Poly prod = p * q;
        if (!prod.is_zero()) CHECK(weighted_degree(prod) == 7);
    }
}

TEST_CASE("mul is commutative and distributes over add") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        Poly p = random_poly(rng, kMix, 4, 3);
        Poly q = random_poly(rng, kMix, 4, 3);
        Poly r = random_poly(rng, kMix, 4, 3);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + p).is_zero());
        CHECK(p + Poly::zero(kMix) == p);
    }
}

TEST_CASE("canonical order and rendering") {
    // Graded first: degree ties break on the exponent tuple from x1 onward.
    Monomial a = (X(kXX, 1, 3) * X(kXX, 2)).leading_term();
    Monomial b = (X(kXX, 1) * X(kXX, 2, 3)).leading_term();
    CHECK(grlex_less(kXX, b, a));
    CHECK(!grlex_less(kXX, a, b));
    CHECK(grlex_less(kXX, a, (X(kXX, 1, 5)).leading_term()));  // lower degree first

    CHECK(to_string(Poly::zero(kXX)) == "0");
    CHECK(to_string(Poly::one(kXX)) == "1");
    Poly p = W(kMix, 1, 2) + W(kMix, 2);
    CHECK(to_string(p) == "w1^2 + w2");
    Poly q = X(kMix, 1) * W(kMix, 1) * WB(kMix, 1, 3);
    CHECK(to_string(q) == "x1w1wb1^3");
    // Within one degree, x-heavy terms lead.
    Poly mix = WB(kMix, 1, 2) + X(kMix, 1, 2) + X(kMix, 1) * W(kMix, 1) + W(kMix, 2);
    CHECK(to_string(mix) == "x1^2 + x1w1 + w2 + wb1^2");
}

TEST_CASE("promote embeds into a larger space blockwise") {
    VarSpace small{1, 1, 0};
    Poly p = X(small, 1, 2) + W(small, 1);
    Poly q = promote(p, kMix);
    CHECK(q.space() == kMix);
    CHECK(to_string(q) == "x1^2 + w1");
    CHECK_THROWS_AS(promote(q, small), std::invalid_argument);
    CHECK(promote(p, small) == p);
}

TEST_CASE("from_terms cancels duplicates in pairs") {
    Monomial m = X(kXX, 1).leading_term();
    Poly two = Poly::from_terms(kXX, {m, m});
    CHECK(two.is_zero());
    Poly three = Poly::from_terms(kXX, {m, m, m});
    CHECK(to_string(three) == "x1");
}
