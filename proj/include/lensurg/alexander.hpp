#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include "json.hpp"

#include "lensurg/modular.hpp"

namespace lensurg {

using Rational = boost::rational<i64>;

std::string to_string(const Rational& r);

// Pass/fail outcome of an obstruction test. `reason` is empty on a plain pass
// and names the first failing feature otherwise.
struct Verdict {
    bool pass = true;
    std::string reason;

    static Verdict ok(std::string note = {}) { return {true, std::move(note)}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return pass; }
};

// Integer Laurent polynomial stored densely: coeffs[j] multiplies t^(low + j).
struct LaurentPoly {
    i64 low = 0;
    std::vector<i64> coeffs;

    i64 coeff(i64 e) const;
    i64 degree() const { return low + static_cast<i64>(coeffs.size()) - 1; }
    std::map<i64, i64> terms() const;
};

// Symmetric polynomial on the window of exponents [-floor(p/2), floor(p/2)].
// Coefficients are halves of integers: only an even modulus can carry a
// half-integer, and only at +-p/2.
class SymmetricPoly {
public:
    SymmetricPoly() = default;
    explicit SymmetricPoly(i64 p);

    i64 p() const { return p_; }
    i64 half() const { return p_ / 2; }

    Rational coeff(i64 e) const;
    // Twice the coefficient at e; exact integer.
    i64 twice(i64 e) const;
    void set_twice(i64 e, i64 value);
    void add_twice(i64 e, i64 value);

    // Largest |e| with a nonzero coefficient.
    i64 genus() const;
    bool integral() const;
    Rational eval_at_one() const;
    bool symmetric() const;
    // Nonzero terms sorted by exponent.
    std::vector<std::pair<i64, Rational>> terms() const;

    bool operator==(const SymmetricPoly&) const = default;

private:
    i64 p_ = 0;
    std::vector<i64> twice_;  // index e + floor(p/2)
};

struct PhiContext {
    i64 p = 0, k = 0, k_inv = 0, m = 0, q = 0, c = 0;

    static PhiContext make(i64 p, i64 k);
};

LaurentPoly torus_knot_poly(i64 h, i64 g);

// Folds every exponent into the window, then splits an even-p middle
// coefficient a at p/2 into a/2 at each of +-p/2.
SymmetricPoly reduce_mod_tp(const LaurentPoly& poly, i64 p);

// First coprime (h, g) among (k,k'), (k,p-k'), (p-k,k'), (p-k,p-k').
std::optional<std::pair<i64, i64>> torus_representative(i64 p, i64 k);

class NoTorusRepresentative : public DomainError {
public:
    using DomainError::DomainError;
};

SymmetricPoly delta_via_torus(i64 p, i64 k);
SymmetricPoly delta_via_torus(i64 p, i64 h, i64 g);

i64 phi(const PhiContext& ctx, i64 l);

// All values -m + Phi(k i + c) indexed by the residue i mod p, computed with a
// cyclic prefix sum in O(p).
std::vector<i64> phi_coefficients_cyclic(i64 p, i64 k);

SymmetricPoly delta_via_phi(i64 p, i64 k);

Verdict check_alternating(const SymmetricPoly& poly);
Verdict check_ky_form(i64 p, i64 k, const SymmetricPoly& poly);
i64 genus(i64 p, i64 k);

nlohmann::json poly_to_json(const SymmetricPoly& poly);
SymmetricPoly poly_from_json(const nlohmann::json& j);

// Stable 64-bit FNV-1a digest of the coefficient table, as 16 hex digits.
std::string poly_digest(const SymmetricPoly& poly);

}  // namespace lensurg
