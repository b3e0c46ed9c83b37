#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lensurg {

using i64 = std::int64_t;
using i128 = __int128;

// Raised when an input violates a precondition (non-coprime pair, bad modulus).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Representative of x in [0, p).
i64 mod_reduce(i128 x, i64 p);

// Representative of x in the half-open window (-p/2, p/2].
// For odd p this is [-(p-1)/2, (p-1)/2]; for even p it is [-p/2+1, p/2].
i64 mod_reduce_sym(i128 x, i64 p);

// Inverse of k modulo p in (0, p). Throws DomainError when gcd(k, p) != 1.
// For p == 1 every residue is 0 and the inverse is reported as 0.
i64 mod_inverse(i64 k, i64 p);

i64 gcd(i64 a, i64 b);

// Floor of the square root for non-negative 128-bit values.
i128 isqrt(i128 n);

// Floor division with the remainder carrying the sign of the divisor.
i128 floor_div(i128 a, i128 b);

std::string to_string(i128 v);

struct DualClass {
    i64 p = 0;
    std::array<i64, 4> reps{};  // sorted ascending, multiset
    i64 min_rep = 0;

    bool contains(i64 r) const;
    bool operator==(const DualClass&) const = default;
};

// {k, -k, k^-1, -k^-1} mod p with its smallest positive member.
DualClass dual_class(i64 p, i64 k);

}  // namespace lensurg
