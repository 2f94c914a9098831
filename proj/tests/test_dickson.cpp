#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace massign;
using namespace testutil;

TEST_CASE("top Dickson class as an expanded product") {
    CHECK(to_string(dickson_top(1)) == "x1");
    CHECK(to_string(dickson_top(2)) == "x1^2x2 + x1x2^2");
    CHECK_THROWS_AS(dickson_top(0), std::invalid_argument);
    Poly d3 = dickson_top(3);
    CHECK(weighted_degree(d3) == 7);
}

TEST_CASE("coefficient family via the auxiliary-variable expansion") {
    auto f1 = dickson_family(1);
    VarSpace v1 = x_space(1);
    REQUIRE(f1->coeffs.size() == 2);
    CHECK(f1->coeffs[0] == X(v1, 1));
    CHECK(f1->coeffs[1] == Poly::one(v1));

    auto f2 = dickson_family(2);
    VarSpace v2 = x_space(2);
    REQUIRE(f2->coeffs.size() == 3);
    CHECK(to_string(f2->coeffs[0]) == "x1^2x2 + x1x2^2");
    CHECK(to_string(f2->coeffs[1]) == "x1^2 + x1x2 + x2^2");
    CHECK(f2->coeffs[2] == Poly::one(v2));

    for (int k = 1; k <= 4; ++k) {
        auto fam = dickson_family(k);
        CHECK(fam->coeffs.back() == Poly::one(x_space(k)));
        CHECK(fam->coeffs.front() == fam->top);
        for (int i = 0; i <= k; ++i) {
            const Poly& c = fam->coeffs[static_cast<std::size_t>(i)];
            REQUIRE(!c.is_zero());
            CHECK(weighted_degree(c) == (1LL << k) - (1LL << i));
        }
    }
}

TEST_CASE("recursion rebuilds the top class from the previous family") {
    for (int k = 2; k <= 4; ++k) {
        VarSpace vs = x_space(k);
        auto prev = dickson_family(k - 1);
        Poly sum(vs);
        for (int i = 0; i <= k - 1; ++i)
            sum += mul(promote(prev->coeffs[static_cast<std::size_t>(i)], vs),
                       Poly::var(vs, vs.x(k), (1ull << i) - 1).leading_term());
        CHECK(promote(prev->top, vs) * X(vs, k) * sum == dickson_top(k));
    }
}

TEST_CASE("Dickson polynomials are symmetric") {
    for (int k = 2; k <= 3; ++k) {
        auto fam = dickson_family(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                std::vector<int> perm(static_cast<std::size_t>(k));
                for (int v = 0; v < k; ++v) perm[static_cast<std::size_t>(v)] = v;
                std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
                CHECK(permute_x(fam->top, perm) == fam->top);
                for (const Poly& c : fam->coeffs) CHECK(permute_x(c, perm) == c);
            }
    }
}

TEST_CASE("Euler class examples") {
    for (int d = 2; d <= 6; ++d)
        CHECK(euler_class(1, d).poly == X(x_space(1), 1, static_cast<unsigned long long>(d - 1)));
    CHECK(to_string(euler_class(2, 1).poly) == "x1 + x2");
    CHECK(to_string(euler_class(2, 2).poly) == "x1^3x2 + x1x2^3");
    CHECK_THROWS_AS(euler_class(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(euler_class(1, 0), std::invalid_argument);
}

TEST_CASE("Euler class degree and symmetry invariants") {
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 5; ++j) {
            EulerClass e = euler_class(k, j);
            long long expected = ((1LL << k) - 1) * j - k;
            if (expected == 0) {
                CHECK(e.poly == Poly::one(x_space(k)));
            } else {
                CHECK(weighted_degree(e.poly) == expected);
            }
            if (k >= 2 && j <= 4) {
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        std::vector<int> perm(static_cast<std::size_t>(k));
                        for (int v = 0; v < k; ++v) perm[static_cast<std::size_t>(v)] = v;
                        std::swap(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
                        CHECK(permute_x(e.poly, perm) == e.poly);
                    }
            }
        }
}

TEST_CASE("the two displayed forms of the Euler class coincide") {
    for (int k = 1; k <= 3; ++k)
        for (int j = 1; j <= 3; ++j)
            CHECK(euler_class(k, j).poly == euler_class_product_form(k, j));
}

TEST_CASE("Frobenius sanity: 2-power Dickson powers keep the term count") {
    for (int k = 1; k <= 3; ++k) {
        const Poly& top = dickson_family(k)->top;
        for (unsigned a = 1; a <= 3; ++a)
            CHECK(pow(top, 1ull << a).term_count() == top.term_count());
    }
}

TEST_CASE("families are memoized") {
    auto a = dickson_family(3);
    auto b = dickson_family(3);
    CHECK(a.get() == b.get());
}
