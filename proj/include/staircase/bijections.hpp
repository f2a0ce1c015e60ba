#pragma once

#include "staircase/tableau.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

enum class Step : std::uint8_t { Horizontal, Vertical };

// Southeast border of a Young diagram (English notation), read from the
// northeast corner to the southwest corner. Each V is a row whose length is
// the number of H steps after it; each H is a column whose height is the
// number of V steps before it. Empty rows and columns are representable.
class BorderShape {
public:
    BorderShape() = default;
    explicit BorderShape(std::vector<Step> steps) : steps_(std::move(steps)) {}

    // "VVHV"
    static BorderShape parse(std::string_view text);

    unsigned length() const noexcept { return static_cast<unsigned>(steps_.size()); }
    const std::vector<Step>& steps() const noexcept { return steps_; }
    unsigned row_count() const noexcept;
    unsigned column_count() const noexcept;
    std::vector<unsigned> row_lengths() const;     // top to bottom
    std::vector<unsigned> column_heights() const;  // left to right

    std::string to_string() const;

    friend auto operator<=>(const BorderShape&, const BorderShape&) = default;

private:
    std::vector<Step> steps_;
};

// Rows top to bottom, cells left to right; row lengths must match the border.
struct PermutationTableau {
    BorderShape shape;
    std::vector<std::vector<std::uint8_t>> rows;

    unsigned length() const noexcept { return shape.length(); }
    friend auto operator<=>(const PermutationTableau&, const PermutationTableau&) = default;
};

enum class Arrow : std::uint8_t { Empty, Left, Up };

struct AlternativeTableau {
    BorderShape shape;
    std::vector<std::vector<Arrow>> rows;

    unsigned length() const noexcept { return shape.length(); }
    friend auto operator<=>(const AlternativeTableau&, const AlternativeTableau&) = default;
};

// First violated invariant, or nothing.
std::optional<std::string> violation(const PermutationTableau& t);
std::optional<std::string> violation(const AlternativeTableau& t);

// Throw ValidationError if invalid.
void require_valid(const PermutationTableau& t);
void require_valid(const AlternativeTableau& t);

// Length n + 1 -> length n. Rightmost restricted 0s become left arrows,
// topmost 1s below the top row become up arrows, and the top row goes.
AlternativeTableau perm_to_alt(const PermutationTableau& t);
PermutationTableau alt_to_perm(const AlternativeTableau& t);

// Staircase tableaux without gamma/delta <-> alternative tableaux of the same
// length: alpha diagonals are V steps, beta diagonals are H steps.
AlternativeTableau staircase_to_alt(const StaircaseTableau& t);
StaircaseTableau alt_to_staircase(const AlternativeTableau& t);

inline PermutationTableau staircase_to_perm(const StaircaseTableau& t) { return alt_to_perm(staircase_to_alt(t)); }
inline StaircaseTableau perm_to_staircase(const PermutationTableau& t) { return alt_to_staircase(perm_to_alt(t)); }

// Exhaustive enumeration (backtracking), ordered by border word then fill.
inline constexpr unsigned kMaxBijectionLength = 9;
std::vector<PermutationTableau> permutation_tableaux(unsigned length);
std::vector<AlternativeTableau> alternative_tableaux(unsigned length);
std::vector<StaircaseTableau> gamma_delta_free_tableaux(unsigned n);

// Border word on the first line, then one line per row (possibly empty):
// '0'/'1' for permutation tableaux, '.', '<', '^' for alternative tableaux.
std::string to_text(const PermutationTableau& t);
std::string to_text(const AlternativeTableau& t);
PermutationTableau parse_permutation_tableau(std::string_view text);
AlternativeTableau parse_alternative_tableau(std::string_view text);

char arrow_char(Arrow a) noexcept;

} // namespace staircase
