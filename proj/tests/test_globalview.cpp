#include <algorithm>

#include "doctest.h"
#include "lensurg/harness.hpp"

using namespace lensurg;

namespace {
struct Stable {
    TauDecomposition dec;
    SymmetricPoly poly;
    CyclicCoeffs cc;
};

std::vector<Stable> stable_alternating(i64 p_max) {
    std::vector<Stable> out;
    for (i64 p = 5; p <= p_max; ++p)
        for (i64 k : class_minima(p)) {
            if (k == 1) continue;
            TauDecomposition d = tau_decompose(p, k, associated_relation(p, k));
            if (!is_stable(d)) continue;
            SymmetricPoly poly = delta_via_phi(p, k);
            if (!check_alternating(poly).pass) continue;
            out.push_back({d, poly, cyclic_lift(poly, d)});
        }
    return out;
}
}  // namespace

TEST_CASE("cyclic lift of the trefoil") {
    CyclicCoeffs cc = cyclic_lift(delta_via_phi(7, 2), 2);
    CHECK(cc.g_bar == 5);
    CHECK(cc.table == std::vector<i64>{-1, 1, 0, 0, 0, 0, 1});
    auto runs = find_runs(cc);
    auto admitted = std::count_if(runs.begin(), runs.end(), [](const Run& r) { return r.kind == Run::Kind::Admitted; });
    CHECK(admitted == 1);
    for (const Run& r : runs)
        if (r.kind == Run::Kind::Admitted) {
            CHECK(r.start == 1);
            CHECK(r.end == 6);
        }
}

TEST_CASE("unknot view") {
    TauDecomposition d = view_decomposition(9, 1);
    CyclicCoeffs cc = cyclic_lift(delta_via_phi(9, 1), 1);
    CHECK(cc.g_bar == 0);
    for (i64 a = 0; a < 9; ++a)
        for (i64 b = 0; b < 9; ++b) CHECK(big_a(cc, a, b, 2) == (mod_reduce(a + b + 2, 9) == 0 ? 1 : 0));
    for (i64 x = 0; x < 9; ++x) CHECK(difference_class(d, x).value == direct_difference(cc, d, x));
}

TEST_CASE("(22,5) has one doubled point") {
    CyclicCoeffs cc = cyclic_lift(delta_via_phi(22, 5), 5);
    CHECK(has_a2_point(cc));
    CHECK(std::count(cc.table.begin(), cc.table.end(), 2) == 1);
    TauDecomposition d = view_decomposition(22, 5);
    i64 twos = 0;
    for (i64 x = 0; x < 22; ++x) twos += a_of_x(cc, d, x) == 2;
    CHECK(twos == 1);
}

TEST_CASE("(106,19) sampled differences") {
    TauDecomposition d = view_decomposition(106, 19);
    CyclicCoeffs cc = cyclic_lift(delta_via_phi(106, 19), d);
    for (i64 x : {3, 40, 77}) CHECK(difference_class(d, x).value == direct_difference(cc, d, x));
}

TEST_CASE("global view properties on stable alternating data") {
    for (const Stable& s : stable_alternating(400)) {
        const TauDecomposition& d = s.dec;
        const i64 p = d.p;
        for (i64 x = 0; x < p; ++x) REQUIRE(difference_class(d, x).value == direct_difference(s.cc, d, x));

        const i64 rows = std::min<i64>(3 * d.n + 6, 40);
        Grid g = grid(s.cc, d, std::min<i64>(3 * d.k1, 160), -rows, rows);
        for (const Block& b : find_blocks(g, d)) {
            CHECK(b.top_width() >= d.tau);
            CHECK(b.top_width() <= d.tau + 1);
            CHECK(b.bottom_width() >= d.tau);
            CHECK(b.bottom_width() <= d.tau + 1);
        }
        if (d.alpha != Rational(0)) {
            Rational ratio = Rational(d.n) / d.alpha;
            i64 f = ratio.numerator() / ratio.denominator();
            for (i64 m : wide_segment_spacings(g, d)) CHECK((m == f || m == f + 1));
        }
        for (const Run& r : find_runs(s.cc))
            if (r.kind == Run::Kind::Admitted) {
                CHECK(mod_reduce(r.start - s.poly.genus(), p) == 0);
                CHECK(mod_reduce(r.end + s.poly.genus(), p) == 0);
            }
        if (d.eps1 * d.q2 > 0) CHECK(floor_identity_failure(d) == 0);
    }
}

TEST_CASE("grid rendering") {
    TauDecomposition d = view_decomposition(22, 5);
    CyclicCoeffs cc = cyclic_lift(delta_via_phi(22, 5), d);
    Grid g = grid(cc, d, 5, -1, 1);
    CHECK(g.ascii().size() == 3 * 7);
    CHECK(g.csv().substr(0, 14) == "j,0,1,2,3,4,5\n");
    CHECK_THROWS_AS(Grid(3, 2, 1), DomainError);
}
