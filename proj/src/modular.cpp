#include "lensurg/modular.hpp"

#include <algorithm>

namespace lensurg {

i64 mod_reduce(i128 x, i64 p) {
    if (p < 1) throw DomainError("modulus must be positive");
    i128 r = x % p;
    if (r < 0) r += p;
    return static_cast<i64>(r);
}

i64 mod_reduce_sym(i128 x, i64 p) {
    i64 r = mod_reduce(x, p);
    // r > floor(p/2) maps down; for odd p this leaves (p-1)/2 as the top value.
    return r > p / 2 ? r - p : r;
}

i64 gcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 mod_inverse(i64 k, i64 p) {
    if (p < 1) throw DomainError("modulus must be positive");
    if (p == 1) return 0;
    i64 a = mod_reduce(k, p);
    i64 old_r = a, r = p;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw DomainError("no inverse of " + std::to_string(k) + " modulo " + std::to_string(p));
    return mod_reduce(old_s, p);
}

i128 isqrt(i128 n) {
    if (n < 0) throw DomainError("square root of a negative value");
    if (n < 2) return n;
    // Newton iteration from an overestimate; monotone decreasing until it settles.
    i128 x = n;
    int bits = 0;
    for (i128 t = n; t > 0; t >>= 1) ++bits;
    x = static_cast<i128>(1) << ((bits + 1) / 2);
    while (true) {
        i128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

bool DualClass::contains(i64 r) const {
    i64 x = mod_reduce(r, p);
    return std::find(reps.begin(), reps.end(), x) != reps.end();
}

DualClass dual_class(i64 p, i64 k) {
    if (p < 2) throw DomainError("dual class needs p >= 2");
    if (gcd(k, p) != 1)
        throw DomainError("(" + std::to_string(p) + ", " + std::to_string(k) + ") is not coprime");
    i64 kr = mod_reduce(k, p);
    i64 ki = mod_inverse(kr, p);
    DualClass dc;
    dc.p = p;
    dc.reps = {kr, mod_reduce(-static_cast<i128>(kr), p), ki, mod_reduce(-static_cast<i128>(ki), p)};
    std::sort(dc.reps.begin(), dc.reps.end());
    dc.min_rep = dc.reps.front();
    return dc;
}

}  // namespace lensurg
