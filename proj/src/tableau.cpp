#include "staircase/tableau.hpp"

#include "staircase/errors.hpp"

#include <array>
#include <sstream>

namespace staircase {

StateWord::StateWord(unsigned length, std::uint32_t bits) : length_(length), bits_(bits)
{
    if (length > kMaxSize) {
        throw CapacityError("state word longer than " + std::to_string(kMaxSize));
    }
    if (length < 32 && (bits >> length) != 0) {
        throw DomainError("state bits exceed word length");
    }
}

StateWord StateWord::parse(std::string_view text)
{
    static constexpr std::string_view kFilled = "•";
    static constexpr std::string_view kHollow = "∘";
    unsigned length = 0;
    std::uint32_t bits = 0;
    while (!text.empty()) {
        bool bit = false;
        if (text.front() == '0' || text.front() == '1') {
            bit = text.front() == '1';
            text.remove_prefix(1);
        } else if (text.starts_with(kFilled)) {
            bit = true;
            text.remove_prefix(kFilled.size());
        } else if (text.starts_with(kHollow)) {
            text.remove_prefix(kHollow.size());
        } else {
            throw ParseError("state word: unexpected character");
        }
        if (length == kMaxSize) {
            throw CapacityError("state word longer than " + std::to_string(kMaxSize));
        }
        bits |= std::uint32_t(bit) << length;
        ++length;
    }
    return StateWord(length, bits);
}

StateWord StateWord::with(unsigned site, bool occupied) const
{
    const std::uint32_t mask = 1U << (site - 1);
    return StateWord(length_, occupied ? (bits_ | mask) : (bits_ & ~mask));
}

StateWord StateWord::reversed() const
{
    std::uint32_t out = 0;
    for (unsigned i = 0; i < length_; ++i) {
        if ((bits_ >> i) & 1U) {
            out |= 1U << (length_ - 1 - i);
        }
    }
    return StateWord(length_, out);
}

StateWord StateWord::complemented() const
{
    const std::uint32_t mask = length_ == 32 ? ~0U : ((1U << length_) - 1);
    return StateWord(length_, ~bits_ & mask);
}

std::string StateWord::to_string() const
{
    std::string s;
    for (unsigned site = 1; site <= length_; ++site) {
        s += occupied(site) ? '1' : '0';
    }
    return s;
}

std::string StateWord::to_symbols() const
{
    std::string s;
    for (unsigned site = 1; site <= length_; ++site) {
        s += occupied(site) ? "•" : "∘";
    }
    return s;
}

StaircaseTableau::StaircaseTableau(unsigned n) : n_(n), cells_(std::size_t(n) * (n + 1) / 2, CellLabel::Empty)
{
    if (n > kMaxSize) {
        throw CapacityError("tableau size above " + std::to_string(kMaxSize));
    }
}

StaircaseTableau StaircaseTableau::from_rows(const std::vector<std::vector<CellLabel>>& rows)
{
    const auto n = static_cast<unsigned>(rows.size());
    StaircaseTableau t(n);
    for (unsigned r = 1; r <= n; ++r) {
        const auto& row = rows[r - 1];
        if (row.size() != t.row_length(r)) {
            throw ShapeError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                             " cells, expected " + std::to_string(t.row_length(r)));
        }
        for (unsigned c = 1; c <= row.size(); ++c) {
            t.set(r, c, row[c - 1]);
        }
    }
    return t;
}

FilledGrid::FilledGrid(unsigned n) : n_(n), cells_(std::size_t(n) * (n + 1) / 2, FillLabel::UMark) {}

bool validate(const StaircaseTableau& t)
{
    const unsigned n = t.size();
    for (unsigned r = 1; r <= n; ++r) {
        if (t.diagonal(r) == CellLabel::Empty) {
            return false;
        }
        for (unsigned c = 1; c <= t.row_length(r); ++c) {
            const CellLabel l = t.at(r, c);
            if (l == CellLabel::Beta || l == CellLabel::Delta) {
                for (unsigned left = 1; left < c; ++left) {
                    if (t.at(r, left) != CellLabel::Empty) {
                        return false;
                    }
                }
            }
            if (l == CellLabel::Alpha || l == CellLabel::Gamma) {
                for (unsigned up = 1; up < r; ++up) {
                    if (t.at(up, c) != CellLabel::Empty) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

StateWord tableau_type(const StaircaseTableau& t)
{
    std::uint32_t bits = 0;
    for (unsigned r = 1; r <= t.size(); ++r) {
        const CellLabel d = t.diagonal(r);
        if (d == CellLabel::Alpha || d == CellLabel::Delta) {
            bits |= 1U << (r - 1);
        }
    }
    return StateWord(t.size(), bits);
}

namespace {

FillLabel greek(CellLabel l) noexcept
{
    switch (l) {
    case CellLabel::Alpha:
        return FillLabel::Alpha;
    case CellLabel::Beta:
        return FillLabel::Beta;
    case CellLabel::Gamma:
        return FillLabel::Gamma;
    default:
        return FillLabel::Delta;
    }
}

FillLabel standard_rule(CellLabel right, CellLabel below) noexcept
{
    if (right == CellLabel::Beta) {
        return FillLabel::UMark;
    }
    if (right == CellLabel::Delta) {
        return FillLabel::QMark;
    }
    return (below == CellLabel::Alpha || below == CellLabel::Delta) ? FillLabel::UMark : FillLabel::QMark;
}

FillLabel dual_rule(CellLabel right, CellLabel below) noexcept
{
    if (below == CellLabel::Alpha) {
        return FillLabel::UMark;
    }
    if (below == CellLabel::Gamma) {
        return FillLabel::QMark;
    }
    return (right == CellLabel::Alpha || right == CellLabel::Delta) ? FillLabel::QMark : FillLabel::UMark;
}

// Visits every cell with its fill label. Rows are processed bottom to top so
// that below[c] always holds the nearest label under the current row, and each
// row right to left so that `right` holds the nearest label to the right.
template <class Rule, class Sink>
void fill_cells(const StaircaseTableau& t, Rule rule, Sink&& sink)
{
    const unsigned n = t.size();
    std::array<CellLabel, kMaxSize + 1> below{};
    for (unsigned r = n; r >= 1; --r) {
        CellLabel right = CellLabel::Empty;
        for (unsigned c = t.row_length(r); c >= 1; --c) {
            const CellLabel l = t.at(r, c);
            if (l == CellLabel::Empty) {
                sink(r, c, rule(right, below[c]));
            } else {
                sink(r, c, greek(l));
                right = l;
                below[c] = l;
            }
        }
    }
}

template <class Rule>
FilledGrid fill_with(const StaircaseTableau& t, Rule rule)
{
    FilledGrid grid(t.size());
    fill_cells(t, rule, [&](unsigned r, unsigned c, FillLabel f) { grid.set(r, c, f); });
    return grid;
}

template <class Rule>
Monomial weight_with(const StaircaseTableau& t, Rule rule)
{
    Monomial::Exponents e{};
    fill_cells(t, rule, [&](unsigned, unsigned, FillLabel f) { ++e[static_cast<std::size_t>(f)]; });
    return Monomial(e);
}

// FillLabel and Var share the order alpha, beta, gamma, delta, q, u.
static_assert(static_cast<int>(FillLabel::QMark) == static_cast<int>(Var::Q));
static_assert(static_cast<int>(FillLabel::UMark) == static_cast<int>(Var::U));

} // namespace

FilledGrid fill_qu(const StaircaseTableau& t)
{
    return fill_with(t, standard_rule);
}

FilledGrid fill_dual(const StaircaseTableau& t)
{
    return fill_with(t, dual_rule);
}

Monomial product_of(const FilledGrid& grid)
{
    Monomial::Exponents e{};
    const unsigned n = grid.size();
    for (unsigned r = 1; r <= n; ++r) {
        for (unsigned c = 1; c <= n + 1 - r; ++c) {
            ++e[static_cast<std::size_t>(grid.at(r, c))];
        }
    }
    return Monomial(e);
}

Monomial weight(const StaircaseTableau& t)
{
    return weight_with(t, standard_rule);
}

Monomial dual_weight(const StaircaseTableau& t)
{
    return weight_with(t, dual_rule);
}

StaircaseTableau transpose_swap(const StaircaseTableau& t)
{
    StaircaseTableau out(t.size());
    for (unsigned r = 1; r <= t.size(); ++r) {
        for (unsigned c = 1; c <= t.row_length(r); ++c) {
            CellLabel l = t.at(r, c);
            switch (l) {
            case CellLabel::Alpha:
                l = CellLabel::Delta;
                break;
            case CellLabel::Delta:
                l = CellLabel::Alpha;
                break;
            case CellLabel::Beta:
                l = CellLabel::Gamma;
                break;
            case CellLabel::Gamma:
                l = CellLabel::Beta;
                break;
            case CellLabel::Empty:
                break;
            }
            out.set(c, r, l);
        }
    }
    return out;
}

RowIndexCounts row_index_counts(const FilledGrid& grid)
{
    RowIndexCounts counts;
    const unsigned n = grid.size();
    for (unsigned r = 1; r <= n; ++r) {
        for (unsigned c = 1; c <= n + 1 - r; ++c) {
            const FillLabel f = grid.at(r, c);
            if (f == FillLabel::QMark || f == FillLabel::UMark) {
                continue;
            }
            if (f == FillLabel::Beta) {
                ++counts.beta;
            } else if (f == FillLabel::Delta) {
                ++counts.delta;
            } else {
                ++counts.alpha_gamma;
            }
            break;
        }
    }
    return counts;
}

char label_char(CellLabel label) noexcept
{
    constexpr std::array<char, 5> chars = {'.', 'a', 'b', 'g', 'd'};
    return chars[static_cast<std::size_t>(label)];
}

CellLabel label_from_char(char ch)
{
    switch (ch) {
    case '.':
        return CellLabel::Empty;
    case 'a':
        return CellLabel::Alpha;
    case 'b':
        return CellLabel::Beta;
    case 'g':
        return CellLabel::Gamma;
    case 'd':
        return CellLabel::Delta;
    default:
        throw ParseError(std::string("unknown cell label '") + ch + "'");
    }
}

std::string to_text(const StaircaseTableau& t)
{
    std::string out = std::to_string(t.size()) + "\n";
    for (unsigned r = 1; r <= t.size(); ++r) {
        for (CellLabel l : t.row(r)) {
            out += label_char(l);
        }
        out += '\n';
    }
    return out;
}

StaircaseTableau parse_tableau(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("tableau: missing size line");
    }
    const BigInt size = parse_integer(line.substr(0, line.find_last_not_of(" \r\t") + 1));
    if (size < 0) {
        throw ParseError("tableau: negative size");
    }
    if (size > kMaxSize) {
        throw CapacityError("tableau size above " + std::to_string(kMaxSize));
    }
    const auto n = static_cast<unsigned>(size.get_ui());
    std::vector<std::vector<CellLabel>> rows;
    for (unsigned r = 1; r <= n; ++r) {
        if (!std::getline(in, line)) {
            throw ShapeError("tableau: expected " + std::to_string(n) + " rows");
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.pop_back();
        }
        std::vector<CellLabel> row;
        for (char ch : line) {
            row.push_back(label_from_char(ch));
        }
        rows.push_back(std::move(row));
    }
    return StaircaseTableau::from_rows(rows);
}

} // namespace staircase
