#include "lensurg/quadratic.hpp"

namespace lensurg {

std::string to_string(const QuadraticRelation& r) {
    std::string s = std::to_string(r.a) + "k^2" + (r.eps1 > 0 ? "+" : "-") + "k" + (r.eps2 > 0 ? "+" : "-") +
                    "1=" + std::to_string(r.n) + "p";
    return s;
}

i64 reduced_k2(i64 p, i64 k1) {
    if (p < 2 || gcd(p, k1) != 1) throw DomainError("(p, k1) must be coprime with p >= 2");
    i64 inv = mod_inverse(k1, p);
    return std::min(inv, p - inv);
}

QuadraticRelation associated_relation(i64 p, i64 k1) {
    if (p < 2 || gcd(p, k1) != 1) throw DomainError("(p, k1) must be coprime with p >= 2");
    k1 = mod_reduce(k1, p);
    if (k1 == 1 || k1 == p - 1) throw UnknotBranch("k1 = 1: unknot branch");
    const i64 k2 = reduced_k2(p, k1);
    const i64 q2 = mod_reduce_sym(static_cast<i128>(k2) * k2, p);
    const i64 a = std::abs(std::abs(q2) - k2);
    const i128 sq = static_cast<i128>(a) * k1 * k1;
    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            i128 v = sq + e1 * static_cast<i128>(k1) + e2;
            if (v % p == 0) return {a, e1, e2, static_cast<i64>(v / p)};
        }
    throw DomainError("no sign pair satisfies the associated congruence for (" + std::to_string(p) + ", " +
                      std::to_string(k1) + ")");
}

std::vector<QuadraticRelation> relations_up_to(i64 p, i64 k1, i64 a_max) {
    std::vector<QuadraticRelation> out;
    const i128 kk = static_cast<i128>(k1) * k1;
    for (i64 a = 0; a <= a_max; ++a)
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                i128 v = a * kk + e1 * static_cast<i128>(k1) + e2;
                if (v % p == 0) out.push_back({a, e1, e2, static_cast<i64>(v / p)});
            }
    return out;
}

TauDecomposition tau_decompose(i64 p, i64 k1, const QuadraticRelation& rel) {
    if (rel.a < 1) throw DomainError("decomposition needs a >= 1");
    const i128 lhs = static_cast<i128>(rel.a) * k1 * k1 + rel.eps1 * static_cast<i128>(k1) + rel.eps2;
    if (lhs != static_cast<i128>(rel.n) * p) throw DomainError("relation does not hold over the integers");
    if (rel.n < 1) throw DomainError("relation must have n >= 1");

    TauDecomposition dec;
    dec.p = p;
    dec.k1 = k1;
    dec.a = rel.a;
    dec.eps1 = rel.eps1;
    dec.eps2 = rel.eps2;
    dec.n = rel.n;

    const i128 X2 = 1 - 4 * static_cast<i128>(rel.a) * (rel.eps2 - static_cast<i128>(rel.n) * p);
    const i128 X = isqrt(X2);
    if (X * X != X2) throw DomainError("discriminant is not a perfect square");
    dec.X = X;
    const i128 two_an = 2 * static_cast<i128>(rel.a) * rel.n;
    dec.tau = static_cast<i64>(floor_div(X, two_an));
    dec.gamma = static_cast<i64>(X - two_an * dec.tau);
    if ((dec.gamma - rel.eps1) % (2 * rel.a) != 0) throw DomainError("gamma is not congruent to eps1 mod 2a");
    dec.gamma_prime = (dec.gamma - rel.eps1) / (2 * rel.a);
    dec.D = 1 - 4 * rel.a * rel.eps2;

    dec.k2 = rel.a * k1 + rel.eps1;
    dec.k1_prime = rel.eps2 == -1 ? dec.k2 : p - dec.k2;
    dec.q1 = mod_reduce(static_cast<i128>(k1) * k1, p);
    dec.q2 = mod_reduce_sym(static_cast<i128>(reduced_k2(p, k1)) * reduced_k2(p, k1), p);
    dec.eta = mod_reduce(rel.n, rel.a);
    dec.alpha = Rational(dec.gamma_prime + rel.eps1 * rel.eps2) + Rational(rel.a, std::abs(dec.q2));
    dec.d = gcd(rel.a, rel.n);
    dec.a1 = rel.a / dec.d;
    dec.eta1 = dec.eta / dec.d;
    return dec;
}

bool is_stable(const TauDecomposition& dec) { return dec.tau >= 2; }

namespace {

i64 n_index(const TauDecomposition& dec, i64 i) {
    if (i == 0) return 0;
    if (i == dec.a) return dec.a;
    if (gcd(dec.a, dec.n) != 1)
        throw BranchUnavailable("gcd(a, n) = " + std::to_string(gcd(dec.a, dec.n)) + ": eta is not invertible mod a");
    i64 eta_inv = mod_inverse(dec.eta, dec.a);
    return mod_reduce(-static_cast<i128>(dec.eps2) * eta_inv * i, dec.a);
}

}  // namespace

NPair n_sequences(const TauDecomposition& dec, i64 i) {
    if (dec.a < 1) throw DomainError("n_i needs a >= 1");
    NPair out;
    out.n_i = n_index(dec, i);
    i128 num = static_cast<i128>(dec.n) * out.n_i + static_cast<i128>(dec.eps2) * i;
    if (num % dec.a != 0) throw DomainError("a does not divide n*n_i + eps2*i");
    out.n_prime_i = static_cast<i64>(num / dec.a);
    return out;
}

i64 n_prime(const TauDecomposition& dec) {
    if (dec.a < 1) throw DomainError("n' needs a >= 1");
    i64 top = n_index(dec, dec.a - 1);
    i128 num = static_cast<i128>(dec.n) * top - dec.eps2;
    if (num % dec.a != 0) throw DomainError("a does not divide n*n_{a-1} - eps2");
    return static_cast<i64>(num / dec.a);
}

Verdict integrality_check(const TauDecomposition& dec) {
    i64 np;
    try {
        np = n_prime(dec);
    } catch (const BranchUnavailable& e) {
        return Verdict::fail(std::string("branch-unavailable: ") + e.what());
    }
    const i128 g = dec.gamma_prime;
    i128 v = g * g - static_cast<i128>(dec.eps1 * dec.eps2) * np * g - np;
    if (mod_reduce(v, dec.n) == 0) return Verdict::ok();
    return Verdict::fail("(gamma')^2 - e1 e2 n' gamma' - n' = " + to_string(v) + " is not 0 mod " +
                         std::to_string(dec.n));
}

std::pair<i64, i64> underline_involution(const TauDecomposition& dec) {
    i128 shift = (static_cast<i128>(dec.gamma) - static_cast<i128>(dec.a) * dec.n) * (2 * dec.tau + 1);
    i64 p_bar = static_cast<i64>(dec.p - shift);
    i64 k_bar = dec.k1 + dec.n - 2 * dec.gamma_prime;
    return {p_bar, k_bar};
}

}  // namespace lensurg
