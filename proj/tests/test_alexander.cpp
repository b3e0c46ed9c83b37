#include "doctest.h"
#include "lensurg/alexander.hpp"

using namespace lensurg;

namespace {
Rational R(i64 v) { return Rational(v); }
}  // namespace

TEST_CASE("torus knot polynomials") {
    LaurentPoly t23 = torus_knot_poly(2, 3);
    CHECK(t23.terms() == std::map<i64, i64>{{-1, 1}, {0, -1}, {1, 1}});
    LaurentPoly t34 = torus_knot_poly(3, 4);
    CHECK(t34.terms() == std::map<i64, i64>{{-3, 1}, {-2, -1}, {0, 1}, {2, -1}, {3, 1}});
    CHECK(torus_knot_poly(1, 9).terms() == std::map<i64, i64>{{0, 1}});
    CHECK_THROWS_AS(torus_knot_poly(2, 4), DomainError);
}

TEST_CASE("trefoil class through both routes") {
    SymmetricPoly phi = delta_via_phi(7, 2);
    CHECK(phi.coeff(0) == R(-1));
    CHECK(phi.coeff(1) == R(1));
    CHECK(phi.coeff(-1) == R(1));
    CHECK(phi.genus() == 1);
    CHECK(phi == delta_via_torus(7, 2));
    CHECK(phi.eval_at_one() == R(1));
}

TEST_CASE("(22,5) polynomial") {
    SymmetricPoly d = delta_via_phi(22, 5);
    const std::map<i64, i64> want{{0, -1}, {2, 1}, {5, -1}, {6, 1}, {10, -1}, {11, 1}};
    for (i64 e = -11; e <= 11; ++e) {
        i64 ae = e < 0 ? -e : e;
        auto it = want.find(ae);
        CHECK(d.coeff(e) == R(it == want.end() ? 0 : it->second));
    }
    CHECK(d.genus() == 11);
    CHECK(check_alternating(d).pass);
    CHECK(check_ky_form(22, 5, d).pass);
}

TEST_CASE("unknot class") {
    SymmetricPoly d = delta_via_phi(9, 1);
    CHECK(d.coeff(0) == R(1));
    CHECK(d.genus() == 0);
    CHECK(check_alternating(d).pass);
}

TEST_CASE("phi route equals torus route") {
    for (i64 p = 2; p <= 90; ++p)
        for (i64 k = 1; k < p; ++k) {
            if (gcd(p, k) != 1 || !torus_representative(p, k)) continue;
            SymmetricPoly a = delta_via_phi(p, k);
            CHECK(a == delta_via_torus(p, k));
            CHECK(a.symmetric());
            CHECK(a.eval_at_one() == R(1));
            for (i64 r : dual_class(p, k).reps) CHECK(delta_via_phi(p, r) == a);
        }
}

TEST_CASE("alternating check rejects bad tables") {
    SymmetricPoly bad(9);
    bad.set_twice(0, 2);
    bad.set_twice(1, 2);
    bad.set_twice(-1, 2);
    CHECK_FALSE(check_alternating(bad).pass);
    SymmetricPoly two(9);
    two.set_twice(0, -6);
    two.set_twice(1, 4);
    two.set_twice(-1, 4);
    CHECK_FALSE(check_alternating(two).pass);
}

TEST_CASE("polynomial JSON round trip") {
    SymmetricPoly d = delta_via_phi(22, 5);
    nlohmann::json j = poly_to_json(d);
    CHECK(j.at("p") == 22);
    CHECK(poly_from_json(j) == d);
    CHECK(poly_digest(poly_from_json(j)) == poly_digest(d));
    CHECK(poly_digest(d).size() == 16);
}
