#include "lensurg/globalview.hpp"

#include <algorithm>
#include <sstream>

namespace lensurg {

TauDecomposition view_decomposition(i64 p, i64 k1) {
    DualClass dc = dual_class(p, k1);
    if (dc.min_rep != 1) return tau_decompose(p, k1, associated_relation(p, k1));
    TauDecomposition dec;
    dec.p = p;
    dec.k1 = mod_reduce(k1, p);
    dec.k2 = 1;
    dec.k1_prime = 1;
    dec.q1 = 1 % p;
    dec.q2 = 1 % p;
    return dec;
}

CyclicCoeffs cyclic_lift(const SymmetricPoly& poly, i64 k1) {
    if (!poly.integral()) throw DomainError("cyclic lift needs integer coefficients");
    const i64 p = poly.p();
    PhiContext ctx = PhiContext::make(p, k1);
    CyclicCoeffs cc;
    cc.p = p;
    cc.k1 = ctx.k;
    cc.k1_inv = ctx.k_inv;
    cc.table.assign(static_cast<std::size_t>(p), 0);
    // Sum both halves of an even-p middle term back into one residue.
    for (i64 e = -poly.half(); e <= poly.half(); ++e)
        cc.table[static_cast<std::size_t>(mod_reduce(e, p))] += poly.twice(e);
    for (i64& v : cc.table) {
        if (v % 2 != 0) throw DomainError("cyclic lift is not integral");
        v /= 2;
    }
    cc.g_bar = mod_reduce(static_cast<i128>(ctx.k_inv) * (ctx.c - ctx.q) + 1, p);
    return cc;
}

CyclicCoeffs cyclic_lift(const SymmetricPoly& poly, const TauDecomposition& dec) {
    return cyclic_lift(poly, dec.k1);
}

i64 big_a(const CyclicCoeffs& cc, i128 n1, i128 n2, i128 n3) {
    i64 n1r = mod_reduce(n1, cc.p), n2r = mod_reduce(n2, cc.p);
    i128 idx = -static_cast<i128>(cc.g_bar) + static_cast<i128>(n1r) * cc.k1 + static_cast<i128>(n2r) * cc.k1_inv + n3;
    return cc.at(idx);
}

i64 a_of_x(const CyclicCoeffs& cc, const TauDecomposition& dec, i128 x) {
    const i64 n1 = static_cast<i64>(dec.eps1 * dec.eps2) * dec.a - 1;
    return big_a(cc, n1, dec.eps1 * x, 1);
}

i64 direct_difference(const CyclicCoeffs& cc, const TauDecomposition& dec, i128 x) {
    const i64 n1 = static_cast<i64>(dec.eps1 * dec.eps2) * dec.a - 1;
    return big_a(cc, n1, dec.eps1 * x, 1) - big_a(cc, n1, dec.eps1 * x - 1, 1);
}

namespace {

struct IntervalHit {
    bool hit = false;
    i128 ell = 0;
    i128 offset = 0;  // 1-based position of the point inside its interval
};

// Does xs lie in (floor((p l - c0)/Q), floor((p l - c0 + k2)/Q)] modulo p for some l?
IntervalHit interval_member(i64 p, i64 Q, i64 k2, i128 c0, i128 xs) {
    IntervalHit out;
    xs = mod_reduce(xs, p);
    // The condition is p l - c0 < xs Q <= p l - c0 + k2; an interval has length k2 < p,
    // so only l = floor((xs Q + c0 - 1)/p) can work.
    i128 z = xs * Q + c0;
    i128 ell = floor_div(z - 1, p);
    i128 rem = z - ell * p;  // in [1, p]
    if (rem >= 1 && rem <= k2) {
        out.hit = true;
        out.ell = ell;
        out.offset = xs - floor_div(static_cast<i128>(p) * ell - c0, Q);
    }
    return out;
}

}  // namespace

DifferencePrediction difference_class(const TauDecomposition& dec, i128 x) {
    const i64 p = dec.p;
    const i64 Qs = dec.eps1 * dec.q2;
    const i64 Q = Qs < 0 ? -Qs : Qs;
    const i128 xs = Qs < 0 ? -x : x;
    const i128 c = static_cast<i128>(dec.eps1 * dec.eps2) * dec.a;
    const i64 k2 = dec.k2;
    IntervalHit rise = interval_member(p, Q, k2, c + k2, xs);
    IntervalHit drop = interval_member(p, Q, k2, c, xs);
    DifferencePrediction out;
    out.value = (rise.hit ? 1 : 0) - (drop.hit ? 1 : 0);
    std::ostringstream tag;
    if (Qs < 0) tag << "reflected ";
    if (rise.hit && drop.hit)
        tag << "both@" << to_string(rise.offset) << "/" << to_string(drop.offset);
    else if (rise.hit)
        tag << "rise@" << to_string(rise.offset);
    else if (drop.hit)
        tag << "drop@" << to_string(drop.offset);
    else
        tag << "flat";
    out.tag = tag.str();
    return out;
}

Grid::Grid(i64 i_max, i64 j_min, i64 j_max) : i_max_(i_max), j_min_(j_min), j_max_(j_max) {
    if (i_max < 0 || j_max < j_min) throw DomainError("empty grid range");
    cells_.assign(static_cast<std::size_t>((i_max + 1) * (j_max - j_min + 1)), 0);
}

i64 Grid::at(i64 i, i64 j) const {
    if (!inside(i, j)) throw DomainError("grid index out of range");
    return cells_[static_cast<std::size_t>((j - j_min_) * (i_max_ + 1) + i)];
}

void Grid::set(i64 i, i64 j, i64 v) {
    if (!inside(i, j)) throw DomainError("grid index out of range");
    cells_[static_cast<std::size_t>((j - j_min_) * (i_max_ + 1) + i)] = v;
}

std::string Grid::ascii() const {
    std::ostringstream os;
    for (i64 j = j_max_; j >= j_min_; --j) {
        for (i64 i = 0; i <= i_max_; ++i) {
            i64 v = at(i, j);
            char ch = '0';
            if (v == 1) ch = '+';
            else if (v == -1) ch = '-';
            else if (v >= 2) ch = '2';
            else if (v <= -2) ch = 'm';
            os << ch;
        }
        os << '\n';
    }
    return os.str();
}

std::string Grid::csv() const {
    std::ostringstream os;
    os << "j";
    for (i64 i = 0; i <= i_max_; ++i) os << "," << i;
    os << '\n';
    for (i64 j = j_max_; j >= j_min_; --j) {
        os << j;
        for (i64 i = 0; i <= i_max_; ++i) os << "," << at(i, j);
        os << '\n';
    }
    return os.str();
}

Grid grid(const CyclicCoeffs& cc, const TauDecomposition& dec, i64 i_max, i64 j_min, i64 j_max) {
    Grid g(i_max, j_min, j_max);
    for (i64 j = j_min; j <= j_max; ++j)
        for (i64 i = 0; i <= i_max; ++i) g.set(i, j, a_of_x(cc, dec, static_cast<i128>(i) + static_cast<i128>(j) * dec.k1));
    return g;
}

std::vector<Segment> row_segments(const Grid& g, i64 row, int sign) {
    std::vector<Segment> out;
    i64 i = 0;
    const i64 n = g.i_max();
    auto in_region = [&](i64 v) { return v == sign || v == 2 * sign; };
    while (i <= n) {
        if (!in_region(g.at(i, row))) {
            ++i;
            continue;
        }
        i64 start = i;
        while (i + 1 <= n && in_region(g.at(i + 1, row))) {
            ++i;
            if (g.at(i, row) == 2 * sign) break;
        }
        // A doubled cell closes this run; the next run starts on the same cell.
        out.push_back({row, start, i});
        if (g.at(i, row) == 2 * sign && i > start) continue;
        ++i;
    }
    // Runs touching the left or right edge may be truncated by the window.
    std::vector<Segment> inner;
    for (const auto& s : out)
        if (s.start > 0 && s.end < n) inner.push_back(s);
    return inner;
}

std::vector<Block> find_blocks(const Grid& g, const TauDecomposition& dec) {
    std::vector<Block> out;
    const int sigma = -dec.eps1;
    const i64 stair = -sigma;
    const int e1e2 = dec.eps1 * dec.eps2;
    const i64 step = e1e2 > 0 ? -1 : 1;
    for (i64 s1 = g.j_max(); s1 > g.j_min(); --s1) {
        for (const Segment& top : row_segments(g, s1, sigma)) {
            i64 x = e1e2 > 0 ? top.end : top.start;
            i64 y = s1 - 1;
            if (!g.inside(x, y) || g.at(x, y) != stair) continue;
            bool clipped = false;
            while (true) {
                i64 nx = x + step, ny = y - 1;
                if (!g.inside(nx, ny)) {
                    clipped = true;
                    break;
                }
                if (g.at(nx, ny) != stair) break;
                x = nx;
                y = ny;
            }
            const i64 s0 = y - 1;
            if (clipped || s0 < g.j_min()) continue;
            for (const Segment& bottom : row_segments(g, s0, sigma)) {
                bool joins = e1e2 > 0 ? bottom.start == x : bottom.end == x;
                if (!joins) continue;
                out.push_back({top.start, top.end, bottom.start, bottom.end, s0, s1, sigma});
                break;
            }
        }
    }
    return out;
}

std::vector<i64> wide_segment_spacings(const Grid& g, const TauDecomposition& dec) {
    std::vector<i64> out;
    const int sigma = -dec.eps1;
    for (i64 row = g.j_min(); row <= g.j_max(); ++row) {
        std::vector<Segment> segs = row_segments(g, row, sigma);
        i64 last_wide = -1;
        for (std::size_t idx = 0; idx < segs.size(); ++idx) {
            if (idx > 0) {
                // A cell of the opposite sign between two segments starts a new band.
                bool same_band = true;
                for (i64 i = segs[idx - 1].end + 1; i < segs[idx].start; ++i)
                    if (g.at(i, row) == -sigma || g.at(i, row) == -2 * sigma) same_band = false;
                if (!same_band) last_wide = -1;
            }
            if (segs[idx].length() + 1 == dec.tau + 1) {
                if (last_wide >= 0) out.push_back(static_cast<i64>(idx) - last_wide);
                last_wide = static_cast<i64>(idx);
            }
        }
    }
    return out;
}

std::vector<Run> find_runs(const std::vector<i64>& cyclic) {
    std::vector<Run> out;
    const i64 p = static_cast<i64>(cyclic.size());
    std::vector<i64> nz;
    for (i64 i = 0; i < p; ++i)
        if (cyclic[static_cast<std::size_t>(i)] != 0) nz.push_back(i);
    for (std::size_t idx = 0; idx < nz.size(); ++idx) {
        i64 i = nz[idx];
        i64 j = nz[(idx + 1) % nz.size()];
        i64 vi = cyclic[static_cast<std::size_t>(i)], vj = cyclic[static_cast<std::size_t>(j)];
        if (vi != vj || (vi != 1 && vi != -1)) continue;
        i64 len = mod_reduce(j - i, p);
        if (len == 0) len = p;
        out.push_back({vi == -1 ? Run::Kind::Forbidden : Run::Kind::Admitted, i, i + len});
    }
    return out;
}

std::vector<Run> find_runs(const CyclicCoeffs& cc) { return find_runs(cc.table); }

bool has_a2_point(const CyclicCoeffs& cc) {
    return std::any_of(cc.table.begin(), cc.table.end(), [](i64 v) { return v >= 2 || v <= -2; });
}

i64 floor_identity_failure(const TauDecomposition& dec) {
    const i64 Q = dec.q2 < 0 ? -dec.q2 : dec.q2;
    const i128 np = static_cast<i128>(dec.n) * dec.p;
    for (i64 m = 1; m <= Q; ++m) {
        i128 lhs = floor_div(m * np, Q) - floor_div((m - 1) * np, Q) - (dec.k1 + dec.eps1 * dec.eps2);
        i128 rhs = floor_div(static_cast<i128>(m) * dec.a, Q) - floor_div(static_cast<i128>(m - 1) * dec.a, Q);
        if (lhs != rhs) return m;
    }
    return 0;
}

}  // namespace lensurg
