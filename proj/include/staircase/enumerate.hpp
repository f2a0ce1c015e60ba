#pragma once

#include "staircase/tableau.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace staircase {

// Exhaustive enumeration is supported up to this size (4^7 7! = 82,575,360
// tableaux). Larger partition functions go through the transfer tensors.
inline constexpr unsigned kMaxEnumerationSize = 7;

// Number of staircase tableaux of size n, 4^n n!.
BigInt tableau_count_formula(unsigned n);

namespace detail {

// Backtracking over cells in row-major order with labels tried in the order
// Empty < Alpha < Beta < Gamma < Delta. A beta/delta needs an empty row prefix
// and an alpha/gamma an empty column prefix; both prefixes are already fixed
// when the cell is reached, so one flag per row and column is enough.
template <class Visit>
class TableauWalker {
public:
    TableauWalker(unsigned n, const CellLabel* fixed_diagonal, Visit& visit)
        : n_(n), fixed_(fixed_diagonal), visit_(visit), t_(n), row_used_(n + 1, 0), col_used_(n + 1, 0)
    {
    }

    void run() { step(1, 1); }

private:
    void step(unsigned r, unsigned c)
    {
        if (r > n_) {
            visit_(static_cast<const StaircaseTableau&>(t_));
            return;
        }
        const unsigned last = n_ + 1 - r;
        const unsigned next_r = c == last ? r + 1 : r;
        const unsigned next_c = c == last ? 1 : c + 1;
        const bool diagonal = c == last;

        if (!diagonal) {
            t_.set(r, c, CellLabel::Empty);
            step(next_r, next_c);
        }
        for (CellLabel l : {CellLabel::Alpha, CellLabel::Beta, CellLabel::Gamma, CellLabel::Delta}) {
            if (diagonal && fixed_ != nullptr && fixed_[r - 1] != l) {
                continue;
            }
            const bool row_rule = l == CellLabel::Beta || l == CellLabel::Delta;
            if (row_rule ? row_used_[r] != 0 : col_used_[c] != 0) {
                continue;
            }
            const auto saved_row = row_used_[r];
            const auto saved_col = col_used_[c];
            row_used_[r] = 1;
            col_used_[c] = 1;
            t_.set(r, c, l);
            step(next_r, next_c);
            row_used_[r] = saved_row;
            col_used_[c] = saved_col;
        }
        t_.set(r, c, CellLabel::Empty);
    }

    unsigned n_;
    const CellLabel* fixed_;
    Visit& visit_;
    StaircaseTableau t_;
    std::vector<std::uint8_t> row_used_;
    std::vector<std::uint8_t> col_used_;
};

void check_enumeration_size(unsigned n);

} // namespace detail

// Streams every valid tableau of size n exactly once, in the fixed order
// described on TableauWalker. The reference passed to visit is only valid for
// the duration of the call.
template <class Visit>
void for_each_tableau(unsigned n, Visit&& visit)
{
    detail::check_enumeration_size(n);
    detail::TableauWalker<std::remove_reference_t<Visit>> walker(n, nullptr, visit);
    walker.run();
}

// Same order, restricted to tableaux whose diagonal (row 1 first) is fixed.
// The 4^n diagonal assignments partition the tableaux.
template <class Visit>
void for_each_tableau_with_diagonal(unsigned n, const std::vector<CellLabel>& diagonal, Visit&& visit)
{
    detail::check_enumeration_size(n);
    detail::TableauWalker<std::remove_reference_t<Visit>> walker(n, diagonal.data(), visit);
    walker.run();
}

struct EnumerationOptions {
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

std::uint64_t count_tableaux(unsigned n, const EnumerationOptions& options = {});

// Weight generating functions of all 2^n types, and their sum Z_n.
struct TypeGenerating {
    unsigned n = 0;
    std::map<StateWord, GfPoly> by_type;
    GfPoly total;
};

TypeGenerating generating_functions(unsigned n, const EnumerationOptions& options = {});

// Z_n = sum of wt(T) over tableaux of size n; Z_0 = 1. With keep_u = false, u is
// set to 1. Sizes above kMaxEnumerationSize use the transfer tensors (computed
// at u = 1, with u restored by homogeneity when requested).
GfPoly gf_total(unsigned n, bool keep_u = true, const EnumerationOptions& options = {});

// Sum of weights of tableaux of type tau (enumerates only the 2^n diagonal
// assignments compatible with tau).
GfPoly gf_by_type(const StateWord& tau, const EnumerationOptions& options = {});

// Generating function of tableaux whose diagonal is alpha or delta at every
// listed position (1-based, row 1 first).
GfPoly gf_occupied(unsigned n, const std::vector<unsigned>& positions, const TypeGenerating& table);

} // namespace staircase
