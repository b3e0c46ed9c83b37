#include "doctest.h"
#include "lensurg/modular.hpp"

using namespace lensurg;

TEST_CASE("symmetric reduction window") {
    CHECK(mod_reduce_sym(4, 7) == -3);
    CHECK(mod_reduce_sym(3, 7) == 3);
    CHECK(mod_reduce_sym(-3, 7) == -3);
    CHECK(mod_reduce_sym(5, 10) == 5);
    CHECK(mod_reduce_sym(6, 10) == -4);
    CHECK(mod_reduce(-1, 5) == 4);
    for (i64 p = 2; p <= 40; ++p)
        for (i64 x = -3 * p; x <= 3 * p; ++x) {
            i64 r = mod_reduce_sym(x, p);
            CHECK(2 * r > -p);
            CHECK(2 * r <= p);
            CHECK(mod_reduce(x - r, p) == 0);
        }
}

TEST_CASE("inverses and integer helpers") {
    CHECK(mod_inverse(2, 7) == 4);
    CHECK(mod_inverse(5, 22) == 9);
    CHECK_THROWS_AS(mod_inverse(4, 22), DomainError);
    CHECK(gcd(-12, 18) == 6);
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(80) == 8);
    CHECK(isqrt(81) == 9);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(to_string(static_cast<i128>(-1234567890123LL) * 1000000) == "-1234567890123000000");
}

TEST_CASE("dual classes") {
    DualClass d = dual_class(22, 5);
    CHECK(d.reps == std::array<i64, 4>{5, 9, 13, 17});
    CHECK(d.min_rep == 5);
    CHECK(dual_class(7, 1).reps == std::array<i64, 4>{1, 1, 6, 6});
    CHECK(dual_class(191, 140).min_rep == 15);
    CHECK_THROWS_AS(dual_class(22, 4), DomainError);
    CHECK_THROWS_AS(dual_class(1, 0), DomainError);
    for (i64 p = 2; p <= 60; ++p)
        for (i64 k = 1; k < p; ++k)
            if (gcd(p, k) == 1)
                for (i64 r : dual_class(p, k).reps) CHECK(dual_class(p, r).min_rep == dual_class(p, k).min_rep);
}
