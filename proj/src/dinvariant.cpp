#include "lensurg/dinvariant.hpp"

namespace lensurg {

Rational d_lens(i64 p, i64 q, i64 i) {
    if (p < 1) throw DomainError("p must be positive");
    if (p == 1) return Rational(0);
    if (q < 1 || q >= p) throw DomainError("q must lie in (0, p)");
    if (gcd(p, q) != 1) throw DomainError("(p, q) must be coprime");
    i = mod_reduce(i, p);
    i64 s = 2 * i + 1 - p - q;
    Rational head(s * s - p * q, 4 * p * q);
    return head - d_lens(q, p % q, i % q);
}

Rational d_lens_q1(i64 p, i64 i) {
    i = mod_reduce(i, p);
    i64 s = 2 * i - p;
    return Rational(s * s - p, 4 * p);
}

CorrectionTable::CorrectionTable(i64 p, i64 q) : p_(p), q_(q) {
    if (p < 1) throw DomainError("p must be positive");
    if (p == 1) {
        scaled_.assign(1, 0);
        return;
    }
    if (q < 1 || q >= p || gcd(p, q) != 1) throw DomainError("(p, q) must be coprime with 0 < q < p");
    const i64 r = p % q;
    std::vector<i64> inner;
    if (q > 1) inner = CorrectionTable(q, r).scaled_;
    scaled_.resize(static_cast<std::size_t>(p));
    for (i64 i = 0; i < p; ++i) {
        i128 s = 2 * static_cast<i128>(i) + 1 - p - q;
        i128 head = s * s - static_cast<i128>(p) * q;
        i128 tail = 0;
        if (q > 1) {
            // 4pq * d(q, r, j) = p * (4qr * d(q, r, j)) / r
            i128 num = static_cast<i128>(p) * inner[static_cast<std::size_t>(i % q)];
            if (num % r != 0)
                throw DomainError("correction term denominator does not divide 4pq at (" + std::to_string(p) +
                                  ", " + std::to_string(q) + ")");
            tail = num / r;
        }
        scaled_[static_cast<std::size_t>(i)] = static_cast<i64>(head - tail);
    }
}

Rational CorrectionTable::value(i64 i) const {
    if (p_ == 1) return Rational(0);
    return Rational(scaled(i), scale());
}

Rational TorsionSequence::at(i64 i) const {
    i64 h = half();
    if (i < -h || i > h) return Rational(0);
    return values[static_cast<std::size_t>(i + h)];
}

TorsionSequence torsion_sequence(i64 p, i64 k) {
    PhiContext ctx = PhiContext::make(p, k);
    const i64 q1 = ctx.q;
    CorrectionTable base(p, 1);
    CorrectionTable twisted(p, q1);
    TorsionSequence t;
    t.p = p;
    t.k = ctx.k;
    t.c = ctx.c;
    const i64 h = p / 2;
    t.values.resize(static_cast<std::size_t>(2 * h + 1));
    for (i64 i = -h; i <= h; ++i) {
        if (2 * (i < 0 ? -i : i) > p) continue;
        i64 label = mod_reduce(static_cast<i128>(ctx.k) * i + ctx.c, p);
        // base.scaled / 4p - twisted.scaled / (4 p q1), over the common denominator 4 p q1
        i128 num = static_cast<i128>(base.scaled(i)) * q1 - twisted.scaled(label);
        i64 den = 4 * p * q1;
        i64 g = gcd(static_cast<i64>(num % den), den);
        i64 reduced_den = den / g;
        i64 reduced_num = static_cast<i64>(num / g);
        t.values[static_cast<std::size_t>(i + h)] = Rational(reduced_num, reduced_den);
    }
    return t;
}

Verdict check_pos(const TorsionSequence& t) {
    for (i64 i = -t.half(); i <= t.half(); ++i) {
        Rational v = t.at(i);
        if (v.denominator() != 1) return Verdict::fail("t_" + std::to_string(i) + "=" + to_string(v) + " not integral");
        if (v.numerator() < 0) return Verdict::fail("t_" + std::to_string(i) + "=" + to_string(v));
    }
    return Verdict::ok();
}

Verdict check_pos(i64 p, i64 k) { return check_pos(torsion_sequence(p, k)); }

}  // namespace lensurg
