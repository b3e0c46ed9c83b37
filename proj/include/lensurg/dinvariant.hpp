#pragma once

#include <vector>

#include "lensurg/alexander.hpp"

namespace lensurg {

// d(L(p,q), i) for one label, by the two-variable recursion on exact rationals.
Rational d_lens(i64 p, i64 q, i64 i);

// Closed form for q = 1: ((2i - p)^2 - p) / (4p).
Rational d_lens_q1(i64 p, i64 i);

// All labels of one lens space at once. Values are kept as the integers
// 4pq * d(p,q,i); a non-integral intermediate throws, so constructing the
// table proves that every denominator divides 4pq.
class CorrectionTable {
public:
    CorrectionTable(i64 p, i64 q);

    i64 p() const { return p_; }
    i64 q() const { return q_; }
    // 4pq * d(L(p,q), i) for i in [0, p); for p == 1 the single value is 0.
    i64 scaled(i64 i) const { return scaled_[static_cast<std::size_t>(mod_reduce(i, p_))]; }
    Rational value(i64 i) const;
    i64 scale() const { return 4 * p_ * q_; }

private:
    i64 p_, q_;
    std::vector<i64> scaled_;
};

struct TorsionSequence {
    i64 p = 0, k = 0, c = 0;
    std::vector<Rational> values;  // index i + floor(p/2), i in [-floor(p/2), floor(p/2)]

    Rational at(i64 i) const;
    i64 half() const { return p / 2; }
};

// t_i = d(L(p,1), [i]_p) - d(L(p,q1), [k i + c]_p) for 2|i| <= p.
TorsionSequence torsion_sequence(i64 p, i64 k);
Verdict check_pos(i64 p, i64 k);
Verdict check_pos(const TorsionSequence& t);

}  // namespace lensurg
