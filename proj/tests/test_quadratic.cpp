#include "doctest.h"
#include "lensurg/harness.hpp"

using namespace lensurg;

TEST_CASE("associated relation anchors") {
    CHECK(associated_relation(43, 12) == QuadraticRelation{2, 1, 1, 7});
    CHECK(associated_relation(22, 5) == QuadraticRelation{2, -1, -1, 2});
    CHECK(associated_relation(191, 15) == QuadraticRelation{22, 1, 1, 26});
    CHECK(associated_relation(102, 11) == QuadraticRelation{6, -1, -1, 7});
    CHECK(associated_relation(106, 19) == QuadraticRelation{2, 1, 1, 7});
    CHECK_THROWS_AS(associated_relation(9, 1), UnknotBranch);
    bool secondary = false;
    for (const auto& r : relations_up_to(43, 12, 10)) {
        CHECK((static_cast<i128>(r.a) * 144 + r.eps1 * 12 + r.eps2) == static_cast<i128>(r.n) * 43);
        if (r == QuadraticRelation{5, 1, -1, 17}) secondary = true;
    }
    CHECK(secondary);
}

TEST_CASE("tau decomposition anchors") {
    TauDecomposition d = tau_decompose(22, 5, associated_relation(22, 5));
    CHECK(d.k2 == 9);
    CHECK(d.q2 == -7);
    CHECK(d.X == 19);
    CHECK(d.tau == 2);
    CHECK(d.gamma == 3);
    CHECK(d.gamma_prime == 1);

    d = tau_decompose(191, 15, associated_relation(191, 15));
    CHECK(d.k2 == 22 * 15 + 1);
    CHECK(reduced_k2(191, 15) == 51);
    CHECK(d.q2 == -73);
    CHECK(d.X == 661);
    CHECK(d.tau == 0);
    CHECK(d.gamma_prime == 15);
    CHECK_FALSE(is_stable(d));

    d = tau_decompose(106, 19, associated_relation(106, 19));
    CHECK(d.X == 77);
    CHECK(d.tau == 2);
    CHECK(d.gamma == 21);
    CHECK(d.gamma_prime == 5);
    CHECK(d.k2 == 39);
    CHECK(d.q2 == 37);
    CHECK(n_sequences(d, 1).n_i == 1);
    CHECK(n_sequences(d, 1).n_prime_i == 4);
    CHECK(n_prime(d) == 3);
    CHECK(integrality_check(d).pass);

    CHECK(tau_decompose(102, 11, associated_relation(102, 11)).tau == 1);
    CHECK_THROWS_AS(tau_decompose(43, 12, QuadraticRelation{3, 1, 1, 7}), DomainError);
}

TEST_CASE("decomposition identities hold on every class") {
    for (i64 p = 5; p <= 400; ++p)
        for (i64 k : class_minima(p)) {
            if (k == 1) continue;
            QuadraticRelation r = associated_relation(p, k);
            TauDecomposition d = tau_decompose(p, k, r);
            CHECK(static_cast<i128>(r.a) * k * k + r.eps1 * k + r.eps2 == static_cast<i128>(r.n) * p);
            CHECK(d.k1 == d.n * d.tau + d.gamma_prime);
            CHECK(d.X == static_cast<i128>(2) * d.a * d.n * d.tau + d.gamma);
            CHECK(d.X * d.X == 1 - static_cast<i128>(4) * d.a * (d.eps2 - static_cast<i128>(d.n) * p));
            for (const auto& s : relations_up_to(p, k, r.a)) CHECK(s.a >= r.a);
        }
}

TEST_CASE("underline correspondence") {
    auto image = [](i64 p, i64 k) { return underline_involution(tau_decompose(p, k, associated_relation(p, k))); };
    CHECK(image(191, 15) == std::pair<i64, i64>{102, 11});
    CHECK(image(102, 11) == std::pair<i64, i64>{87, 10});
    CHECK(image(106, 19) == std::pair<i64, i64>{71, 16});
    for (i64 p = 5; p <= 500; ++p)
        for (i64 k : class_minima(p)) {
            if (k == 1) continue;
            TauDecomposition d = tau_decompose(p, k, associated_relation(p, k));
            if (!is_stable(d) || d.a == 1) continue;
            auto [pb, kb] = underline_involution(d);
            CHECK(associated_relation(pb, kb) == QuadraticRelation{d.a, -d.eps1, d.eps2, d.n});
            TauDecomposition back = tau_decompose(pb, kb, associated_relation(pb, kb));
            if (is_stable(back)) CHECK(underline_involution(back) == std::pair<i64, i64>{p, k});
        }
}

TEST_CASE("n sequences need gcd(a, n) = 1") {
    TauDecomposition d = tau_decompose(22, 5, associated_relation(22, 5));
    CHECK_THROWS_AS(n_sequences(d, 1), BranchUnavailable);
    CHECK_FALSE(integrality_check(d).pass);
}
