#pragma once

#include "staircase/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace staircase {

// The six indeterminates, in the fixed order used by exponent vectors,
// canonical term order and the text form (a, b, g, d, q, u).
enum class Var : std::uint8_t { Alpha, Beta, Gamma, Delta, Q, U };

inline constexpr std::size_t kVarCount = 6;
inline constexpr std::array<char, kVarCount> kVarSymbols = {'a', 'b', 'g', 'd', 'q', 'u'};

constexpr std::size_t index_of(Var v) noexcept
{
    return static_cast<std::size_t>(v);
}

class Monomial {
public:
    using Exponents = std::array<std::uint16_t, kVarCount>;

    constexpr Monomial() = default;
    constexpr explicit Monomial(const Exponents& exps) : exps_(exps)
    {
        for (auto e : exps_) {
            degree_ += e;
        }
    }

    static Monomial of(Var v, unsigned power = 1);

    unsigned operator[](Var v) const noexcept { return exps_[index_of(v)]; }
    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    const Exponents& exponents() const noexcept { return exps_; }

    unsigned degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree() == 0; }

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

    // Same monomial with the exponent of v zeroed.
    Monomial without(Var v) const;
    Monomial with_exponent(Var v, unsigned e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents exps_{};
    std::uint32_t degree_ = 0; // cached: the canonical order compares it first
};

// Graded-lex with a < b < g < d < q < u ranked by position: higher total degree
// first, then the larger exponent vector (compared left to right) first. This
// is the canonical order for iteration, printing and serialization.
struct CanonicalOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept;
};

// Sparse polynomial with integer coefficients in the six indeterminates.
// No stored coefficient is ever zero.
class GfPoly {
public:
    using Terms = std::map<Monomial, BigInt, CanonicalOrder>;

    GfPoly() = default;
    explicit GfPoly(const BigInt& constant);
    GfPoly(const Monomial& m, const BigInt& coeff = 1);

    static GfPoly one() { return GfPoly(BigInt(1)); }
    static GfPoly var(Var v, unsigned power = 1) { return GfPoly(Monomial::of(v, power)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    BigInt coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const BigInt& coeff);

    GfPoly& operator+=(const GfPoly& other);
    GfPoly& operator-=(const GfPoly& other);
    GfPoly& operator*=(const GfPoly& other);
    GfPoly& operator*=(const BigInt& scalar);

    friend GfPoly operator+(GfPoly lhs, const GfPoly& rhs) { return lhs += rhs; }
    friend GfPoly operator-(GfPoly lhs, const GfPoly& rhs) { return lhs -= rhs; }
    friend GfPoly operator*(const GfPoly& lhs, const GfPoly& rhs);
    friend GfPoly operator*(GfPoly lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend GfPoly operator-(const GfPoly& p);

    friend bool operator==(const GfPoly&, const GfPoly&) = default;

private:
    Terms terms_;
};

using Point = std::array<BigRational, kVarCount>;

// Exact substitution of all six indeterminates.
BigRational evaluate(const GfPoly& p, const Point& point);

// Specializes u = 1 (projects the u exponent away and merges terms).
GfPoly set_u_one(const GfPoly& p);

// Restores u in a polynomial whose terms should all have the given degree by
// multiplying each term by the missing power of u.
GfPoly homogenize_u(const GfPoly& p, unsigned degree);

// Renames indeterminates: variable v of p becomes image[v].
GfPoly rename_vars(const GfPoly& p, const std::array<Var, kVarCount>& image);

// Text form: terms joined by " + " (" - " for negative coefficients), each term
// written `coeff*a^i b^j ...` with unit exponents and unit coefficients elided.
// The zero polynomial prints as "0".
std::string to_string(const Monomial& m);
std::string to_string(const GfPoly& p);
GfPoly parse_poly(std::string_view text);

} // namespace staircase
