#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hforest/bigint.hpp"
#include "hforest/errors.hpp"

namespace hforest {

// Variable kinds in canonical order; `t` sorts before everything else.
enum class VarKind : uint8_t { T = 0, Q, S, W, X, Y, YV };

// Structured variable symbol. `index` is the direction / arc / factor index,
// `spin` the epsilon component (both 0 where the kind has no such component).
struct VarId {
    VarKind kind = VarKind::T;
    int32_t index = 0;
    int32_t spin = 0;

    static VarId t() { return {VarKind::T, 0, 0}; }
    static VarId x(int index, int spin) { return {VarKind::X, index, spin}; }
    static VarId y() { return {VarKind::Y, 0, 0}; }
    static VarId w(int arc) { return {VarKind::W, arc, 0}; }
    static VarId q(int index) { return {VarKind::Q, index, 0}; }
    static VarId yv(int index, int spin) { return {VarKind::YV, index, spin}; }
    static VarId s() { return {VarKind::S, 0, 0}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    // Renders as "t", "x1_0", "y", "w3", "q2", "yv1_1", "s".
    std::string name() const;
    // Inverse of name(); nullopt on anything unrecognized.
    static std::optional<VarId> parse(std::string_view text);
};

// Exponent map of a term. Canonical: sorted by VarId, no zero exponents.
// Exponents are signed (Laurent monomials are first-class).
class Monomial {
  public:
    Monomial() = default;

    static Monomial unit() { return {}; }
    static Monomial var(VarId v, int32_t exp = 1);

    const std::vector<std::pair<VarId, int32_t>>& exponents() const { return exps_; }
    int32_t exponent_of(VarId v) const;
    bool is_unit() const { return exps_.empty(); }

    Monomial operator*(const Monomial& other) const;
    Monomial without(VarId v) const;
    Monomial pow(int32_t k) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string str() const;

  private:
    std::vector<std::pair<VarId, int32_t>> exps_;
};

// Canonical term order: scan variables in VarId order and put the term with
// the larger exponent at the first difference in front. Since t is the first
// VarId this sorts by descending t-degree, then lexicographically.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate Laurent polynomial with exact integer coefficients.
// Immutable in spirit: all operations return new values.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, BigInt, TermOrder>;

    Polynomial() = default;
    Polynomial(long value);  // NOLINT: implicit by design
    Polynomial(BigInt value);

    static Polynomial variable(VarId v);
    static Polynomial term(Monomial m, BigInt coeff);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Simultaneous ring homomorphism: every bound variable is replaced in the
    // original terms. A variable occurring with negative exponent may only be
    // bound to a single monomial with coefficient +-1 (NonInvertibleBinding).
    Polynomial substitute(const std::map<VarId, Polynomial>& bindings) const;

    // Coefficient of v^k, as a polynomial in the remaining variables.
    Polynomial coefficient_of(VarId v, int32_t k) const;

    int32_t degree_in(VarId v) const;
    int32_t min_exponent_in(VarId v) const;
    std::set<VarId> variables() const;

    // Deterministic rendering: terms in canonical order, "t^2 + 2*t - 1".
    std::string canonical_string() const;

  private:
    void add_term(const Monomial& m, const BigInt& c);

    TermMap terms_;
};

Polynomial pow(const Polynomial& base, uint32_t exp);

// Exact quotient num/den in the polynomial ring; throws InexactDivision if a
// leading-coefficient division fails. Callers must guarantee exactness.
Polynomial exact_div(const Polynomial& num, const Polynomial& den);

// Fraction-free (Bareiss) determinant over the polynomial ring. `m` is a
// square row-major matrix; intermediate divisions are exact by Sylvester's
// identity.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

// Determinant of the Sylvester matrix of a and b with respect to v.
// Requires non-negative exponents in v and deg_v >= 1 on at least one input
// (DegenerateResultant otherwise).
Polynomial resultant(const Polynomial& a, const Polynomial& b, VarId v);

}  // namespace hforest
