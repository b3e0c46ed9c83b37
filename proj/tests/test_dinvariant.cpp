#include "doctest.h"
#include "lensurg/dinvariant.hpp"

using namespace lensurg;

TEST_CASE("correction terms of L(p,1)") {
    CHECK(d_lens(1, 1, 0) == Rational(0));
    CHECK(d_lens(2, 1, 0) == Rational(1, 4));
    CHECK(d_lens(2, 1, 1) == Rational(-1, 4));
    for (i64 p = 1; p <= 120; ++p) {
        Rational sum(0);
        CorrectionTable table(p, 1);
        for (i64 i = 0; i < p; ++i) {
            CHECK(d_lens(p, 1, i) == d_lens_q1(p, i));
            CHECK(table.value(i) == d_lens_q1(p, i));
            sum += d_lens_q1(p, i);
        }
        CHECK(sum == Rational((p - 1) * (p - 2), 12));
    }
}

TEST_CASE("denominators divide 4pq and the table agrees with the recursion") {
    for (i64 p = 2; p <= 45; ++p)
        for (i64 q = 1; q < p; ++q) {
            if (gcd(p, q) != 1) continue;
            CorrectionTable table(p, q);
            CHECK(table.scale() == 4 * p * q);
            for (i64 i = 0; i < p; ++i) {
                Rational v = d_lens(p, q, i);
                CHECK((4 * p * q) % v.denominator() == 0);
                CHECK(v == table.value(i));
                CHECK(Rational(table.scaled(i), table.scale()) == v);
            }
        }
}

TEST_CASE("torsion sequence of (22,5)") {
    TorsionSequence t = torsion_sequence(22, 5);
    CHECK(t.at(11) == Rational(-2));
    Verdict v = check_pos(t);
    CHECK_FALSE(v.pass);
    CHECK(v.reason.find("-2") != std::string::npos);
}

TEST_CASE("torsion of Berge data is nonnegative") {
    CHECK(check_pos(7, 2).pass);
    CHECK(check_pos(18, 5).pass);
    CHECK(check_pos(5, 1).pass);
    for (i64 i = -3; i <= 3; ++i) CHECK(torsion_sequence(7, 2).at(i).denominator() == 1);
}
