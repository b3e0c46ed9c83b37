#include <algorithm>

#include "doctest.h"
#include "lensurg/families.hpp"

using namespace lensurg;

namespace {
bool has(const std::vector<FamilyMatch>& ms, Family f, i64 parameter) {
    return std::any_of(ms.begin(), ms.end(), [&](const FamilyMatch& m) { return m.family == f && m.parameter == parameter; });
}
}  // namespace

TEST_CASE("family names round trip") {
    for (Family f : kAllFamilies) CHECK(family_from_name(family_name(f)) == f);
    CHECK(family_name(Family::IIIp) == "III+");
    CHECK_FALSE(family_from_name("XI").has_value());
    CHECK(is_berge(Family::X));
    CHECK_FALSE(is_berge(Family::A1));
    CHECK_FALSE(is_main_theorem_type(Family::Vp));
    CHECK(main_theorem_types().size() == 24);
}

TEST_CASE("recognizer anchors") {
    auto m = match_all(22, 5);
    CHECK(has(m, Family::A1, 1));
    CHECK(has(m, Family::B, -1));
    CHECK(has(m, Family::C1, -1));
    CHECK(has(m, Family::E2, -1));
    CHECK(has(m, Family::J, 0));
    CHECK(has(match_all(32, 13), Family::IX, 1));
    CHECK(has(match_all(7, 2), Family::I, 1));
    CHECK(has(match_all(7, 2), Family::VII, 0));
    CHECK(has(match_all(191, 15), Family::K, 0));
    for (const auto& x : match_all(22, 5)) CHECK(verify_match(22, x));
}

TEST_CASE("generated pairs are recognized") {
    for (Family f : kAllFamilies)
        for (i64 J = -12; J <= 12; ++J)
            for (const GeneratedPair& g : generate_family(f, J)) {
                if (g.p < 2 || gcd(g.p, g.k) != 1) continue;
                auto ms = match_all(g.p, g.k);
                bool found = std::any_of(ms.begin(), ms.end(), [&](const FamilyMatch& m) {
                    return m.family == f && m.parameter == g.parameter && m.sign == g.sign;
                });
                CHECK_MESSAGE(found, family_name(f), " ", J, " (", g.p, ",", g.k, ")");
            }
}

TEST_CASE("matches are deduplicated and sorted") {
    for (i64 p = 5; p <= 150; ++p)
        for (i64 k = 2; k < p; ++k) {
            if (gcd(p, k) != 1) continue;
            auto ms = match_all(p, k);
            CHECK(std::is_sorted(ms.begin(), ms.end()));
            CHECK(std::adjacent_find(ms.begin(), ms.end()) == ms.end());
        }
}

TEST_CASE("associated relation table") {
    for (Family f : assoc_sampled_families())
        for (const auto& row : reproduce_assoc_table(f, -5, 5)) CHECK_MESSAGE(row.matches, family_name(f), " ", row.J);
    for (Family f : assoc_reported_families())
        for (const auto& row : reproduce_assoc_table(f, -5, 5)) CHECK_MESSAGE(row.matches, family_name(f), " ", row.J);
}

TEST_CASE("tau = 1 table") {
    auto rows = reproduce_tau1_table();
    CHECK(rows.size() == 22);
    for (const auto& row : rows) {
        CHECK(row.relation_ok);
        CHECK(row.tau_ok);
        CHECK(row.types_ok);
    }
}
