#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lensurg/quadratic.hpp"

namespace lensurg {

enum class Family {
    I, II, IIIp, IIIm, IVp, IVm, Vp, Vm, VII, VIII, IX, X,
    A1, A2, B, C1, C2, D1, D2, E1, E2, F1, F2, G1, G2, H1, H2, I1, I2, I3, J, K
};

inline constexpr std::array<Family, 32> kAllFamilies = {
    Family::I,  Family::II, Family::IIIp, Family::IIIm, Family::IVp, Family::IVm, Family::Vp, Family::Vm,
    Family::VII, Family::VIII, Family::IX, Family::X,  Family::A1, Family::A2, Family::B,  Family::C1,
    Family::C2, Family::D1, Family::D2, Family::E1, Family::E2, Family::F1, Family::F2, Family::G1,
    Family::G2, Family::H1, Family::H2, Family::I1, Family::I2, Family::I3, Family::J,  Family::K};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool is_berge(Family f);
bool is_main_theorem_type(Family f);

// Types named in the classification theorem under test.
const std::set<Family>& main_theorem_types();

struct FamilyMatch {
    Family family = Family::I;
    // J for parametric families; i in [0, r) for I/II; 0 for VII/VIII/K.
    i64 parameter = 0;
    // Sign choice: the +-1 in p = i r +- 1 for I/II, the linear sign for VII/VIII.
    int sign = 0;
    // Element of the dual class that witnessed the match.
    i64 representative = 0;

    bool operator==(const FamilyMatch&) const = default;
    auto operator<=>(const FamilyMatch&) const = default;
};

std::string to_string(const FamilyMatch& m);

std::vector<FamilyMatch> match_berge(i64 p, i64 k);
std::vector<FamilyMatch> match_poincare(i64 p, i64 k);
std::vector<FamilyMatch> match_all(i64 p, i64 k);

// Re-evaluates the defining conditions of `m` at (p, m.representative).
bool verify_match(i64 p, const FamilyMatch& m);

// Coefficients of a family with quadratic p: p = alpha J^2 + beta J + c, k = u J + v.
struct QuadraticFamily {
    Family family;
    i64 alpha, beta, c, u, v;
};
const std::vector<QuadraticFamily>& quadratic_families();

struct GeneratedPair {
    Family family;
    i64 parameter;
    int sign;
    i64 p;
    i64 k;  // residue in (0, p)
};

// Sample members of a family for parameter J. Quadratic families give at
// most one pair; congruence families give a few pairs with small k.
std::vector<GeneratedPair> generate_family(Family f, i64 J);

struct AssocRow {
    Family family;
    i64 J;
    i64 p, k1;
    QuadraticRelation computed;
    i64 tau;
    QuadraticRelation expected;
    bool either_eps1;  // the expectation leaves the sign of the linear term open
    bool matches;
};

// Reference associated relation for a family at parameter J, when one is known.
std::optional<std::pair<QuadraticRelation, bool>> expected_assoc(Family f, i64 J);
std::vector<AssocRow> reproduce_assoc_table(Family f, i64 j_min, i64 j_max);
// Families whose reference relations are checked on 2 <= |J| <= 5.
const std::vector<Family>& assoc_sampled_families();
const std::vector<Family>& assoc_reported_families();

struct Tau1Row {
    i64 p, k1;
    std::string listed_types;  // e.g. "A1:-2 F2:-1 G2:-1"
    QuadraticRelation expected;
    QuadraticRelation computed;
    i64 tau;
    bool relation_ok;
    bool tau_ok;
    bool types_ok;  // every listed (type, J) is recovered by the matcher
};

std::vector<Tau1Row> reproduce_tau1_table();

}  // namespace lensurg
