#include "lensurg/alexander.hpp"

#include <cstdio>

namespace lensurg {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

i64 LaurentPoly::coeff(i64 e) const {
    i64 j = e - low;
    if (j < 0 || j >= static_cast<i64>(coeffs.size())) return 0;
    return coeffs[static_cast<std::size_t>(j)];
}

std::map<i64, i64> LaurentPoly::terms() const {
    std::map<i64, i64> out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) out[low + static_cast<i64>(j)] = coeffs[j];
    return out;
}

SymmetricPoly::SymmetricPoly(i64 p) : p_(p), twice_(static_cast<std::size_t>(2 * (p / 2) + 1), 0) {
    if (p < 1) throw DomainError("modulus must be positive");
}

i64 SymmetricPoly::twice(i64 e) const {
    i64 h = half();
    if (e < -h || e > h) return 0;
    return twice_[static_cast<std::size_t>(e + h)];
}

void SymmetricPoly::set_twice(i64 e, i64 value) {
    i64 h = half();
    if (e < -h || e > h) throw DomainError("exponent " + std::to_string(e) + " outside the window");
    twice_[static_cast<std::size_t>(e + h)] = value;
}

void SymmetricPoly::add_twice(i64 e, i64 value) { set_twice(e, twice(e) + value); }

Rational SymmetricPoly::coeff(i64 e) const { return Rational(twice(e), 2); }

i64 SymmetricPoly::genus() const {
    for (i64 e = half(); e > 0; --e)
        if (twice(e) != 0 || twice(-e) != 0) return e;
    return 0;
}

bool SymmetricPoly::integral() const {
    for (i64 v : twice_)
        if (v % 2 != 0) return false;
    return true;
}

Rational SymmetricPoly::eval_at_one() const {
    i64 s = 0;
    for (i64 v : twice_) s += v;
    return Rational(s, 2);
}

bool SymmetricPoly::symmetric() const {
    for (i64 e = 1; e <= half(); ++e)
        if (twice(e) != twice(-e)) return false;
    return true;
}

std::vector<std::pair<i64, Rational>> SymmetricPoly::terms() const {
    std::vector<std::pair<i64, Rational>> out;
    i64 h = half();
    for (i64 e = -h; e <= h; ++e)
        if (twice(e) != 0) out.emplace_back(e, coeff(e));
    return out;
}

PhiContext PhiContext::make(i64 p, i64 k) {
    if (p < 2) throw DomainError("p must be at least 2");
    if (gcd(k, p) != 1) throw DomainError("(p, k) must be coprime");
    PhiContext ctx;
    ctx.p = p;
    ctx.k = mod_reduce(k, p);
    if (ctx.k == 0) throw DomainError("k must be a unit modulo p");
    ctx.k_inv = mod_inverse(ctx.k, p);
    i128 kk = static_cast<i128>(ctx.k) * ctx.k_inv - 1;
    ctx.m = static_cast<i64>(kk / p);
    ctx.q = mod_reduce(static_cast<i128>(ctx.k) * ctx.k, p);
    ctx.c = static_cast<i64>((static_cast<i128>(ctx.k) + 1 - p) * (ctx.k - 1) / 2);
    return ctx;
}

namespace {

// Exact division by t^d - 1; throws if the remainder is not zero.
std::vector<i64> divide_by_binomial(std::vector<i64> n, std::size_t d) {
    if (n.size() <= d) throw DomainError("division by t^d - 1 is not exact");
    std::vector<i64> q(n.size() - d, 0);
    for (std::size_t i = n.size(); i-- > d;) {
        i64 c = n[i];
        q[i - d] = c;
        n[i] = 0;
        n[i - d] += c;
    }
    for (std::size_t i = 0; i < d; ++i)
        if (n[i] != 0) throw DomainError("division by t^d - 1 is not exact");
    return q;
}

SymmetricPoly split_even_middle(SymmetricPoly poly) {
    i64 p = poly.p();
    if (p % 2 == 0) {
        i64 h = p / 2;
        i64 v = poly.twice(h);
        if (v != 0) {
            // v is twice an integer a; put a/2 at both ends.
            poly.set_twice(h, v / 2);
            poly.add_twice(-h, v / 2);
        }
    }
    return poly;
}

}  // namespace

LaurentPoly torus_knot_poly(i64 h, i64 g) {
    if (h < 1 || g < 1) throw DomainError("torus knot parameters must be positive");
    if (gcd(h, g) != 1) throw DomainError("torus knot parameters must be coprime");
    std::size_t hg = static_cast<std::size_t>(h) * static_cast<std::size_t>(g);
    // (t^{hg} - 1)(t - 1) = t^{hg+1} - t^{hg} - t + 1
    std::vector<i64> num(hg + 2, 0);
    num[hg + 1] += 1;
    num[hg] -= 1;
    num[1] -= 1;
    num[0] += 1;
    std::vector<i64> q = divide_by_binomial(std::move(num), static_cast<std::size_t>(g));
    q = divide_by_binomial(std::move(q), static_cast<std::size_t>(h));
    while (q.size() > 1 && q.back() == 0) q.pop_back();
    LaurentPoly out;
    i64 deg = static_cast<i64>(q.size()) - 1;
    out.low = -deg / 2;
    out.coeffs = std::move(q);
    return out;
}

SymmetricPoly reduce_mod_tp(const LaurentPoly& poly, i64 p) {
    SymmetricPoly out(p);
    for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
        i64 c = poly.coeffs[j];
        if (c == 0) continue;
        out.add_twice(mod_reduce_sym(poly.low + static_cast<i64>(j), p), 2 * c);
    }
    return split_even_middle(std::move(out));
}

std::optional<std::pair<i64, i64>> torus_representative(i64 p, i64 k) {
    PhiContext ctx = PhiContext::make(p, k);
    const i64 kk = ctx.k, ki = ctx.k_inv;
    const std::pair<i64, i64> candidates[] = {{kk, ki}, {kk, p - ki}, {p - kk, ki}, {p - kk, p - ki}};
    for (auto [h, g] : candidates)
        if (h > 0 && g > 0 && gcd(h, g) == 1) return std::make_pair(h, g);
    return std::nullopt;
}

SymmetricPoly delta_via_torus(i64 p, i64 h, i64 g) { return reduce_mod_tp(torus_knot_poly(h, g), p); }

SymmetricPoly delta_via_torus(i64 p, i64 k) {
    auto hg = torus_representative(p, k);
    if (!hg)
        throw NoTorusRepresentative("no torus representative for (" + std::to_string(p) + ", " +
                                    std::to_string(k) + ")");
    return delta_via_torus(p, hg->first, hg->second);
}

i64 phi(const PhiContext& ctx, i64 l) {
    i64 count = 0;
    for (i64 j = 1; j <= ctx.k_inv; ++j) {
        i64 r = mod_reduce(static_cast<i128>(ctx.q) * j - l, ctx.p);
        if (r >= 1 && r <= ctx.k) ++count;
    }
    return count;
}

std::vector<i64> phi_coefficients_cyclic(i64 p, i64 k) {
    PhiContext ctx = PhiContext::make(p, k);
    const auto P = static_cast<std::size_t>(p);
    std::vector<i64> cnt(P, 0);
    i64 v = 0;
    for (i64 j = 1; j <= ctx.k_inv; ++j) {
        v += ctx.q;
        if (v >= p) v -= p;
        ++cnt[static_cast<std::size_t>(v)];
    }
    // prefix[i] = cnt[0] + ... + cnt[i-1] over the doubled sequence
    std::vector<i64> prefix(2 * P + 1, 0);
    for (std::size_t i = 0; i < 2 * P; ++i) prefix[i + 1] = prefix[i] + cnt[i % P];
    std::vector<i64> out(P, 0);
    for (i64 i = 0; i < p; ++i) {
        auto l = static_cast<std::size_t>(mod_reduce(static_cast<i128>(ctx.k) * i + ctx.c, p));
        // Phi(l) sums cnt over residues l+1 .. l+k
        i64 phi_l = prefix[l + static_cast<std::size_t>(ctx.k) + 1] - prefix[l + 1];
        out[static_cast<std::size_t>(i)] = phi_l - ctx.m;
    }
    return out;
}

SymmetricPoly delta_via_phi(i64 p, i64 k) {
    std::vector<i64> cyc = phi_coefficients_cyclic(p, k);
    SymmetricPoly out(p);
    const i64 lo = -((p - 1) / 2), hi = p / 2;
    for (i64 e = lo; e <= hi; ++e) out.set_twice(e, 2 * cyc[static_cast<std::size_t>(mod_reduce(e, p))]);
    return split_even_middle(std::move(out));
}

Verdict check_alternating(const SymmetricPoly& poly) {
    if (!poly.integral()) return Verdict::fail("non-integral");
    if (!poly.symmetric()) return Verdict::fail("not symmetric");
    std::vector<std::pair<i64, i64>> positive;
    for (auto& [e, c] : poly.terms()) {
        i64 v = c.numerator();
        if (v < -1 || v > 1) return Verdict::fail("coefficient " + std::to_string(v) + " at " + std::to_string(e));
        if (e > 0) positive.emplace_back(e, v);
    }
    i64 expected = 1;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
        if (it->second != expected)
            return Verdict::fail("sign does not alternate at " + std::to_string(it->first));
        expected = -expected;
    }
    i64 c0 = poly.twice(0) / 2;
    if (c0 != expected) return Verdict::fail("constant term " + std::to_string(c0));
    if (poly.eval_at_one() != Rational(1)) return Verdict::fail("value at 1 is not 1");
    return Verdict::ok();
}

Verdict check_ky_form(i64 p, i64 k, const SymmetricPoly& poly) {
    PhiContext ctx = PhiContext::make(p, k);
    if (poly.p() != p) return Verdict::fail("modulus mismatch");
    const i64 kk = ctx.k, ki = ctx.k_inv;
    const std::pair<i64, i64> candidates[] = {{kk, ki}, {kk, p - ki}, {p - kk, ki}, {p - kk, p - ki}};
    bool any = false;
    for (auto [h, g] : candidates) {
        if (h <= 0 || g <= 0 || gcd(h, g) != 1) continue;
        any = true;
        if (delta_via_torus(p, h, g) == poly) return Verdict::ok();
    }
    if (!any) return Verdict::ok("no-torus-representative");
    return Verdict::fail("differs from the torus-knot reduction");
}

i64 genus(i64 p, i64 k) { return delta_via_phi(p, k).genus(); }

nlohmann::json poly_to_json(const SymmetricPoly& poly) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& [e, c] : poly.terms()) coeffs.push_back({e, c.numerator(), c.denominator()});
    return {{"p", poly.p()}, {"coeffs", coeffs}};
}

SymmetricPoly poly_from_json(const nlohmann::json& j) {
    SymmetricPoly out(j.at("p").get<i64>());
    for (const auto& term : j.at("coeffs")) {
        i64 e = term.at(0).get<i64>();
        Rational c(term.at(1).get<i64>(), term.at(2).get<i64>());
        if (2 % c.denominator() != 0) throw DomainError("coefficient denominator must divide 2");
        out.set_twice(e, c.numerator() * (2 / c.denominator()));
    }
    return out;
}

std::string poly_digest(const SymmetricPoly& poly) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    mix(std::to_string(poly.p()) + "|");
    for (i64 e = -poly.half(); e <= poly.half(); ++e) {
        i64 v = poly.twice(e);
        if (v != 0) mix(std::to_string(e) + ":" + std::to_string(v) + ";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace lensurg
