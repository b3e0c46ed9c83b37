#pragma once

#include <string>
#include <vector>

#include "lensurg/quadratic.hpp"

namespace lensurg {

struct CyclicCoeffs {
    i64 p = 0;
    i64 k1 = 0;
    i64 k1_inv = 0;
    std::vector<i64> table;  // residue -> lifted coefficient
    i64 g_bar = 0;           // -2 g_bar = k1 + k1_inv - 2 (mod p)

    i64 at(i128 index) const { return table[static_cast<std::size_t>(mod_reduce(index, p))]; }
};

// Decomposition used to lay out the global view: the associated one for
// k1 >= 2, and for the unknot a = 0 with eps1 = eps2 = 1 so that A(x) is the
// plain cyclic coefficient at x.
TauDecomposition view_decomposition(i64 p, i64 k1);

// Throws DomainError on a half-integer table.
CyclicCoeffs cyclic_lift(const SymmetricPoly& poly, i64 k1);
CyclicCoeffs cyclic_lift(const SymmetricPoly& poly, const TauDecomposition& dec);

i64 big_a(const CyclicCoeffs& cc, i128 n1, i128 n2, i128 n3);
// A(eps1 eps2 a - 1, eps1 x, 1)
i64 a_of_x(const CyclicCoeffs& cc, const TauDecomposition& dec, i128 x);
// A(eps1 eps2 a - 1, eps1 x, 1) - A(eps1 eps2 a - 1, eps1 x - 1, 1), read off the table.
i64 direct_difference(const CyclicCoeffs& cc, const TauDecomposition& dec, i128 x);

struct DifferencePrediction {
    int value = 0;    // -1, 0 or +1
    std::string tag;  // which interval fired and where
};

// Predicts the difference from (p, k2, q2, a, eps) alone. With Q = eps1*q2 and
// c = eps1*eps2*a, the point x*sign(Q) is tested against the intervals
// (floor((p l - c0)/|Q|), floor((p l - c0 + k2)/|Q|)]: c0 = c + k2 adds +1,
// c0 = c adds -1.
DifferencePrediction difference_class(const TauDecomposition& dec, i128 x);

class Grid {
public:
    Grid(i64 i_max, i64 j_min, i64 j_max);

    i64 i_max() const { return i_max_; }
    i64 j_min() const { return j_min_; }
    i64 j_max() const { return j_max_; }
    bool inside(i64 i, i64 j) const { return i >= 0 && i <= i_max_ && j >= j_min_ && j <= j_max_; }
    i64 at(i64 i, i64 j) const;
    void set(i64 i, i64 j, i64 v);

    std::string ascii() const;
    std::string csv() const;

private:
    i64 i_max_, j_min_, j_max_;
    std::vector<i64> cells_;
};

// G(i, j) = A(i + j k1) for 0 <= i <= i_max, j_min <= j <= j_max.
Grid grid(const CyclicCoeffs& cc, const TauDecomposition& dec, i64 i_max, i64 j_min, i64 j_max);

struct Segment {
    i64 row = 0, start = 0, end = 0;
    i64 length() const { return end - start + 1; }
};

// Maximal runs of the region sign -eps1 in one row. A cell of magnitude 2 ends
// one run and starts the next, so it belongs to both.
std::vector<Segment> row_segments(const Grid& g, i64 row, int sign);

struct Block {
    i64 t0 = 0, t1 = 0, b0 = 0, b1 = 0, s0 = 0, s1 = 0;
    int sign = 1;
    // Widths count a segment together with one bounding zero, which is the
    // spacing of consecutive floor points.
    i64 top_width() const { return t1 - t0 + 2; }
    i64 bottom_width() const { return b1 - b0 + 2; }
    i64 top_run() const { return t1 - t0 + 1; }
    i64 bottom_run() const { return b1 - b0 + 1; }
    i64 height() const { return s1 - s0 + 1; }
    // t1 - b0 or b1 - t0 depending on the stair direction
    i64 stair_offset(int e1e2) const { return e1e2 > 0 ? t1 - b0 : b1 - t0; }
};

std::vector<Block> find_blocks(const Grid& g, const TauDecomposition& dec);

// Block-index distances between consecutive (tau+1)-wide segments that lie in
// the same band of a row (a band is a stretch with no cell of the opposite sign).
std::vector<i64> wide_segment_spacings(const Grid& g, const TauDecomposition& dec);

struct Run {
    enum class Kind { Forbidden, Admitted };
    Kind kind;
    i64 start;  // residue of the first nonzero entry
    i64 end;    // start + length; may exceed p when the run wraps
};

std::vector<Run> find_runs(const std::vector<i64>& cyclic);
std::vector<Run> find_runs(const CyclicCoeffs& cc);

bool has_a2_point(const CyclicCoeffs& cc);

// floor(m n p/|q2|) - floor((m-1) n p/|q2|) - (k1 + e1 e2) compared with
// floor(m a/|q2|) - floor((m-1) a/|q2|) for 1 <= m <= |q2|; returns the first
// failing m, or 0 when every m agrees.
i64 floor_identity_failure(const TauDecomposition& dec);

}  // namespace lensurg
