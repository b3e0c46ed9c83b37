#pragma once

#include <optional>
#include <vector>

#include "lensurg/alexander.hpp"

namespace lensurg {

struct QuadraticRelation {
    i64 a = 0;
    int eps1 = 1;
    int eps2 = 1;
    i64 n = 0;

    bool operator==(const QuadraticRelation&) const = default;
};

std::string to_string(const QuadraticRelation& r);

struct TauDecomposition {
    i64 p = 0, k1 = 0;
    i64 a = 0;
    int eps1 = 1, eps2 = 1;
    i64 n = 0;

    i128 X = 0;
    i64 gamma = 0;
    i64 gamma_prime = 0;
    i64 tau = 0;
    i64 D = 0;

    i64 k2 = 0;        // a*k1 + eps1, the reduced inverse partner when tau >= 2
    i64 k1_prime = 0;  // k2 if eps2 = -1, else p - k2
    i64 q1 = 0;        // [k1^2]_p
    i64 q2 = 0;        // [[k2^2]]_p
    i64 eta = 0;       // [n]_a
    Rational alpha;    // gamma' + eps1*eps2 + a/|q2|

    i64 d = 1;    // gcd(a, n)
    i64 a1 = 0;   // a / d
    i64 eta1 = 0; // eta / d

    QuadraticRelation relation() const { return {a, eps1, eps2, n}; }
};

// min(k1', p - k1') with k1' the inverse of k1 mod p.
i64 reduced_k2(i64 p, i64 k1);

// Raised for k1 = 1: the relation degenerates to a = 0 (the unknot).
class UnknotBranch : public DomainError {
public:
    using DomainError::DomainError;
};

QuadraticRelation associated_relation(i64 p, i64 k1);

// Every relation a*k1^2 + e1*k1 + e2 = n*p with 0 <= a <= a_max, in order of a.
std::vector<QuadraticRelation> relations_up_to(i64 p, i64 k1, i64 a_max);

TauDecomposition tau_decompose(i64 p, i64 k1, const QuadraticRelation& rel);
bool is_stable(const TauDecomposition& dec);

class BranchUnavailable : public DomainError {
public:
    using DomainError::DomainError;
};

struct NPair {
    i64 n_i = 0;
    i64 n_prime_i = 0;
};

// (n_i, n'_i) with n_i = [-eps2 * eta^-1 * i]_a and a*n'_i = n*n_i + eps2*i.
NPair n_sequences(const TauDecomposition& dec, i64 i);
// n' with a*n' = n*n_{a-1} - eps2.
i64 n_prime(const TauDecomposition& dec);

Verdict integrality_check(const TauDecomposition& dec);

std::pair<i64, i64> underline_involution(const TauDecomposition& dec);

}  // namespace lensurg
