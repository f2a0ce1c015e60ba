#pragma once

#include "staircase/poly.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace staircase {

// Largest tableau / lattice size any representation in this library accepts.
inline constexpr unsigned kMaxSize = 31;

enum class CellLabel : std::uint8_t { Empty, Alpha, Beta, Gamma, Delta };

// Labels after the blank cells have been assigned q or u.
enum class FillLabel : std::uint8_t { Alpha, Beta, Gamma, Delta, QMark, UMark };

// A configuration of the lattice: site 1 is leftmost and is stored in bit 0.
// In tableau terms, site i is the diagonal cell of row i (northeast end first).
class StateWord {
public:
    StateWord() = default;
    StateWord(unsigned length, std::uint32_t bits);

    // Accepts '0'/'1' or the symbols "∘"/"•".
    static StateWord parse(std::string_view text);

    unsigned size() const noexcept { return length_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool occupied(unsigned site) const noexcept { return (bits_ >> (site - 1)) & 1U; }

    StateWord with(unsigned site, bool occupied) const;
    StateWord reversed() const;
    StateWord complemented() const;

    std::string to_string() const;  // "110"
    std::string to_symbols() const; // "••∘"

    friend auto operator<=>(const StateWord&, const StateWord&) = default;

private:
    unsigned length_ = 0;
    std::uint32_t bits_ = 0;
};

// Staircase-shaped grid: row r (1 = top) has n + 1 - r cells, column c
// (1 = left) runs left to right, and the diagonal cell of row r is
// (r, n + 1 - r). Shape is enforced on construction; the labeling rules are
// checked by validate().
class StaircaseTableau {
public:
    explicit StaircaseTableau(unsigned n);

    // Throws ShapeError unless rows[r-1] has n + 1 - r entries.
    static StaircaseTableau from_rows(const std::vector<std::vector<CellLabel>>& rows);

    unsigned size() const noexcept { return n_; }
    unsigned row_length(unsigned r) const noexcept { return n_ + 1 - r; }
    unsigned diagonal_column(unsigned r) const noexcept { return n_ + 1 - r; }

    CellLabel at(unsigned r, unsigned c) const noexcept { return cells_[offset(r) + c - 1]; }
    void set(unsigned r, unsigned c, CellLabel label) noexcept { cells_[offset(r) + c - 1] = label; }
    CellLabel diagonal(unsigned r) const noexcept { return at(r, diagonal_column(r)); }
    std::span<const CellLabel> row(unsigned r) const noexcept
    {
        return {cells_.data() + offset(r), row_length(r)};
    }

    friend bool operator==(const StaircaseTableau&, const StaircaseTableau&) = default;

private:
    std::size_t offset(unsigned r) const noexcept
    {
        // rows 1..r-1 hold n + (n-1) + ... + (n-r+2) cells
        return std::size_t(r - 1) * n_ - std::size_t(r - 1) * (r - 2) / 2;
    }

    unsigned n_;
    std::vector<CellLabel> cells_;
};

class FilledGrid {
public:
    explicit FilledGrid(unsigned n);

    unsigned size() const noexcept { return n_; }
    FillLabel at(unsigned r, unsigned c) const noexcept { return cells_[offset(r) + c - 1]; }
    void set(unsigned r, unsigned c, FillLabel label) noexcept { cells_[offset(r) + c - 1] = label; }

    friend bool operator==(const FilledGrid&, const FilledGrid&) = default;

private:
    std::size_t offset(unsigned r) const noexcept
    {
        return std::size_t(r - 1) * n_ - std::size_t(r - 1) * (r - 2) / 2;
    }

    unsigned n_;
    std::vector<FillLabel> cells_;
};

// Diagonal non-empty; nothing left of a beta/delta in its row; nothing above
// an alpha/gamma in its column.
bool validate(const StaircaseTableau& t);

StateWord tableau_type(const StaircaseTableau& t);

// Blank cells look at the nearest label to the right (R) and below (B):
// R = beta -> u; R = delta -> q; R in {alpha, gamma} -> u if B in {alpha, delta},
// q if B in {beta, gamma}.
FilledGrid fill_qu(const StaircaseTableau& t);

// The mirrored rule: B = alpha -> u; B = gamma -> q; B in {beta, delta} ->
// q if R in {alpha, delta}, u if R in {beta, gamma}.
FilledGrid fill_dual(const StaircaseTableau& t);

Monomial product_of(const FilledGrid& grid);
Monomial weight(const StaircaseTableau& t);
Monomial dual_weight(const StaircaseTableau& t);

// Transpose (cell (r, c) moves to (c, r)) and swap alpha<->delta, beta<->gamma.
// Maps staircase tableaux to staircase tableaux and reverses the type.
StaircaseTableau transpose_swap(const StaircaseTableau& t);

// Rows of a filled grid classified by their leftmost non-q/u label.
struct RowIndexCounts {
    unsigned beta = 0;
    unsigned delta = 0;
    unsigned alpha_gamma = 0;
};
RowIndexCounts row_index_counts(const FilledGrid& grid);

// Text form: n on the first line, then one line per row using '.', 'a', 'b',
// 'g', 'd'.
std::string to_text(const StaircaseTableau& t);
StaircaseTableau parse_tableau(std::string_view text);

char label_char(CellLabel label) noexcept;
CellLabel label_from_char(char ch);

} // namespace staircase
