#include "staircase/bijections.hpp"

#include "staircase/enumerate.hpp"
#include "staircase/errors.hpp"

#include <sstream>

namespace staircase {

namespace {

std::vector<std::string> text_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

template <class Cell>
std::optional<std::string> shape_violation(const BorderShape& shape, const std::vector<std::vector<Cell>>& rows)
{
    const auto lengths = shape.row_lengths();
    if (rows.size() != lengths.size()) {
        return "expected " + std::to_string(lengths.size()) + " rows, got " + std::to_string(rows.size());
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != lengths[r]) {
            return "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                   " cells, border requires " + std::to_string(lengths[r]);
        }
    }
    return std::nullopt;
}

template <class Tableau, class Cell, class FromChar>
Tableau parse_filled(std::string_view text, const char* what, FromChar from_char)
{
    auto lines = text_lines(text);
    if (lines.empty()) {
        throw ParseError(std::string(what) + ": missing border line");
    }
    Tableau t;
    t.shape = BorderShape::parse(lines[0]);
    const unsigned rows = t.shape.row_count();
    for (std::size_t i = 1 + rows; i < lines.size(); ++i) {
        if (!lines[i].empty()) {
            throw ParseError(std::string(what) + ": trailing content after " + std::to_string(rows) + " rows");
        }
    }
    for (unsigned r = 0; r < rows; ++r) {
        std::vector<Cell> row;
        if (1 + r < lines.size()) {
            for (char ch : lines[1 + r]) {
                row.push_back(from_char(ch));
            }
        }
        t.rows.push_back(std::move(row));
    }
    if (auto why = shape_violation(t.shape, t.rows)) {
        throw ShapeError(std::string(what) + ": " + *why);
    }
    return t;
}

void check_length(unsigned length)
{
    if (length > kMaxBijectionLength) {
        throw CapacityError("exhaustive enumeration limited to length " + std::to_string(kMaxBijectionLength));
    }
}

// Calls fn for each border word of the given length, in lexicographic order
// with H < V.
template <class Fn>
void for_each_border(unsigned length, Fn&& fn)
{
    for (std::uint32_t bits = 0; bits < (1U << length); ++bits) {
        std::vector<Step> steps(length);
        for (unsigned i = 0; i < length; ++i) {
            steps[i] = ((bits >> (length - 1 - i)) & 1U) ? Step::Vertical : Step::Horizontal;
        }
        fn(BorderShape(std::move(steps)));
    }
}

} // namespace

BorderShape BorderShape::parse(std::string_view text)
{
    while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    std::vector<Step> steps;
    for (char ch : text) {
        if (ch == 'V' || ch == 'v') {
            steps.push_back(Step::Vertical);
        } else if (ch == 'H' || ch == 'h') {
            steps.push_back(Step::Horizontal);
        } else {
            throw ParseError(std::string("border: unexpected character '") + ch + "'");
        }
    }
    if (steps.size() > kMaxSize + 1) {
        throw CapacityError("border longer than " + std::to_string(kMaxSize + 1));
    }
    return BorderShape(std::move(steps));
}

unsigned BorderShape::row_count() const noexcept
{
    unsigned count = 0;
    for (Step s : steps_) {
        count += s == Step::Vertical;
    }
    return count;
}

unsigned BorderShape::column_count() const noexcept { return length() - row_count(); }

std::vector<unsigned> BorderShape::row_lengths() const
{
    std::vector<unsigned> lengths;
    unsigned remaining = column_count();
    for (Step s : steps_) {
        if (s == Step::Vertical) {
            lengths.push_back(remaining);
        } else {
            --remaining;
        }
    }
    return lengths;
}

std::vector<unsigned> BorderShape::column_heights() const
{
    std::vector<unsigned> heights;
    unsigned above = 0;
    for (Step s : steps_) {
        if (s == Step::Vertical) {
            ++above;
        } else {
            heights.push_back(above);
        }
    }
    // border meets the rightmost column first
    return {heights.rbegin(), heights.rend()};
}

std::string BorderShape::to_string() const
{
    std::string out;
    for (Step s : steps_) {
        out += s == Step::Vertical ? 'V' : 'H';
    }
    return out;
}

std::optional<std::string> violation(const PermutationTableau& t)
{
    if (auto why = shape_violation(t.shape, t.rows)) {
        return why;
    }
    const unsigned cols = t.shape.column_count();
    std::vector<bool> has_one(cols, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        bool one_left = false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const auto v = t.rows[r][c];
            if (v > 1) {
                return "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not 0/1";
            }
            if (v == 0 && one_left && has_one[c]) {
                return "0 at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                       ") has a 1 above it and a 1 to its left";
            }
            if (v == 1) {
                one_left = true;
                has_one[c] = true;
            }
        }
    }
    for (unsigned c = 0; c < cols; ++c) {
        if (!has_one[c]) {
            return "column " + std::to_string(c + 1) + " contains no 1";
        }
    }
    return std::nullopt;
}

std::optional<std::string> violation(const AlternativeTableau& t)
{
    if (auto why = shape_violation(t.shape, t.rows)) {
        return why;
    }
    std::vector<bool> filled_above(t.shape.column_count(), false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        bool filled_left = false;
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const Arrow a = t.rows[r][c];
            const std::string at = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
            if (a == Arrow::Left && filled_left) {
                return "left arrow at " + at + " has a filled box to its left";
            }
            if (a == Arrow::Up && filled_above[c]) {
                return "up arrow at " + at + " has a filled box above it";
            }
            if (a != Arrow::Empty) {
                filled_left = true;
                filled_above[c] = true;
            }
        }
    }
    return std::nullopt;
}

void require_valid(const PermutationTableau& t)
{
    if (auto why = violation(t)) {
        throw ValidationError("invalid permutation tableau: " + *why);
    }
}

void require_valid(const AlternativeTableau& t)
{
    if (auto why = violation(t)) {
        throw ValidationError("invalid alternative tableau: " + *why);
    }
}

AlternativeTableau perm_to_alt(const PermutationTableau& t)
{
    require_valid(t);
    if (t.shape.length() == 0 || t.shape.steps().front() != Step::Vertical) {
        throw ValidationError("permutation tableau has no top row");
    }
    const unsigned cols = t.shape.column_count();
    std::vector<std::vector<Arrow>> arrows;
    std::vector<bool> one_above(cols, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        std::vector<Arrow> out(row.size(), Arrow::Empty);
        std::optional<std::size_t> rightmost_restricted;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 0 && one_above[c]) {
                rightmost_restricted = c;
            }
            if (row[c] == 1 && !one_above[c] && r > 0) {
                out[c] = Arrow::Up;
            }
        }
        if (rightmost_restricted) {
            out[*rightmost_restricted] = Arrow::Left;
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == 1) {
                one_above[c] = true;
            }
        }
        arrows.push_back(std::move(out));
    }
    AlternativeTableau alt;
    alt.shape = BorderShape(std::vector<Step>(t.shape.steps().begin() + 1, t.shape.steps().end()));
    alt.rows.assign(arrows.begin() + 1, arrows.end());
    return alt;
}

PermutationTableau alt_to_perm(const AlternativeTableau& t)
{
    require_valid(t);
    PermutationTableau p;
    std::vector<Step> steps{Step::Vertical};
    steps.insert(steps.end(), t.shape.steps().begin(), t.shape.steps().end());
    p.shape = BorderShape(std::move(steps));

    const unsigned cols = t.shape.column_count();
    std::vector<bool> has_up(cols, false);
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            has_up[c] = has_up[c] || row[c] == Arrow::Up;
        }
    }
    std::vector<std::uint8_t> top(cols);
    std::vector<bool> one_above(cols);
    for (unsigned c = 0; c < cols; ++c) {
        top[c] = has_up[c] ? 0 : 1;
        one_above[c] = !has_up[c];
    }
    p.rows.push_back(std::move(top));

    for (const auto& row : t.rows) {
        std::optional<std::size_t> left_arrow;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == Arrow::Left) {
                left_arrow = c;
            }
        }
        std::vector<std::uint8_t> out(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] == Arrow::Up) {
                out[c] = 1;
            } else if (one_above[c]) {
                out[c] = (left_arrow && c <= *left_arrow) ? 0 : 1;
            }
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (out[c] == 1) {
                one_above[c] = true;
            }
        }
        p.rows.push_back(std::move(out));
    }
    return p;
}

AlternativeTableau staircase_to_alt(const StaircaseTableau& t)
{
    if (!validate(t)) {
        throw ValidationError("invalid staircase tableau");
    }
    const unsigned n = t.size();
    for (unsigned r = 1; r <= n; ++r) {
        for (CellLabel label : t.row(r)) {
            if (label == CellLabel::Gamma || label == CellLabel::Delta) {
                throw DomainError("staircase tableau contains gamma or delta");
            }
        }
    }
    std::vector<Step> steps;
    std::vector<unsigned> alpha_rows;
    std::vector<unsigned> beta_columns; // increasing staircase column
    for (unsigned i = 1; i <= n; ++i) {
        if (t.diagonal(i) == CellLabel::Alpha) {
            steps.push_back(Step::Vertical);
            alpha_rows.push_back(i);
        } else {
            steps.push_back(Step::Horizontal);
            beta_columns.insert(beta_columns.begin(), n + 1 - i);
        }
    }
    AlternativeTableau alt;
    alt.shape = BorderShape(std::move(steps));
    for (unsigned r : alpha_rows) {
        std::vector<Arrow> row;
        for (unsigned c : beta_columns) {
            if (c >= n + 1 - r) {
                break;
            }
            const CellLabel label = t.at(r, c);
            row.push_back(label == CellLabel::Alpha  ? Arrow::Up
                          : label == CellLabel::Beta ? Arrow::Left
                                                     : Arrow::Empty);
        }
        alt.rows.push_back(std::move(row));
    }
    return alt;
}

StaircaseTableau alt_to_staircase(const AlternativeTableau& t)
{
    require_valid(t);
    const unsigned n = t.length();
    if (n > kMaxSize) {
        throw CapacityError("alternative tableau longer than " + std::to_string(kMaxSize));
    }
    StaircaseTableau st(n);
    std::vector<unsigned> alpha_rows;
    std::vector<unsigned> beta_columns;
    for (unsigned i = 1; i <= n; ++i) {
        if (t.shape.steps()[i - 1] == Step::Vertical) {
            st.set(i, n + 1 - i, CellLabel::Alpha);
            alpha_rows.push_back(i);
        } else {
            st.set(i, n + 1 - i, CellLabel::Beta);
            beta_columns.insert(beta_columns.begin(), n + 1 - i);
        }
    }
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            const Arrow a = t.rows[r][c];
            if (a != Arrow::Empty) {
                st.set(alpha_rows[r], beta_columns[c], a == Arrow::Up ? CellLabel::Alpha : CellLabel::Beta);
            }
        }
    }
    return st;
}

std::vector<PermutationTableau> permutation_tableaux(unsigned length)
{
    check_length(length);
    std::vector<PermutationTableau> out;
    for_each_border(length, [&](BorderShape shape) {
        const auto lengths = shape.row_lengths();
        const unsigned cols = shape.column_count();
        PermutationTableau t{shape, {}};
        for (unsigned len : lengths) {
            t.rows.emplace_back(len, 0);
        }
        std::vector<unsigned> ones_in_col(cols, 0);
        // row-major; a 0 is refused when a 1 sits both above and to the left
        std::function<void(std::size_t, std::size_t, bool)> fill = [&](std::size_t r, std::size_t c, bool one_left) {
            if (r == t.rows.size()) {
                for (unsigned k = 0; k < cols; ++k) {
                    if (ones_in_col[k] == 0) {
                        return;
                    }
                }
                out.push_back(t);
                return;
            }
            if (c == t.rows[r].size()) {
                fill(r + 1, 0, false);
                return;
            }
            if (!(one_left && ones_in_col[c] > 0)) {
                t.rows[r][c] = 0;
                fill(r, c + 1, one_left);
            }
            t.rows[r][c] = 1;
            ++ones_in_col[c];
            fill(r, c + 1, true);
            --ones_in_col[c];
            t.rows[r][c] = 0;
        };
        fill(0, 0, false);
    });
    return out;
}

std::vector<AlternativeTableau> alternative_tableaux(unsigned length)
{
    check_length(length);
    std::vector<AlternativeTableau> out;
    for_each_border(length, [&](BorderShape shape) {
        AlternativeTableau t{shape, {}};
        for (unsigned len : shape.row_lengths()) {
            t.rows.emplace_back(len, Arrow::Empty);
        }
        std::vector<bool> filled_above(shape.column_count(), false);
        std::function<void(std::size_t, std::size_t, bool)> fill = [&](std::size_t r, std::size_t c, bool filled_left) {
            if (r == t.rows.size()) {
                out.push_back(t);
                return;
            }
            if (c == t.rows[r].size()) {
                fill(r + 1, 0, false);
                return;
            }
            const bool above = filled_above[c];
            t.rows[r][c] = Arrow::Empty;
            fill(r, c + 1, filled_left);
            filled_above[c] = true;
            if (!filled_left) {
                t.rows[r][c] = Arrow::Left;
                fill(r, c + 1, true);
            }
            if (!above) {
                t.rows[r][c] = Arrow::Up;
                fill(r, c + 1, true);
            }
            filled_above[c] = above;
            t.rows[r][c] = Arrow::Empty;
        };
        fill(0, 0, false);
    });
    return out;
}

std::vector<StaircaseTableau> gamma_delta_free_tableaux(unsigned n)
{
    if (n > kMaxEnumerationSize) {
        throw CapacityError("enumeration limited to size " + std::to_string(kMaxEnumerationSize));
    }
    if (n == 0) {
        return {StaircaseTableau(0)};
    }
    std::vector<StaircaseTableau> out;
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        std::vector<CellLabel> diagonal(n);
        for (unsigned i = 0; i < n; ++i) {
            diagonal[i] = ((bits >> (n - 1 - i)) & 1U) ? CellLabel::Beta : CellLabel::Alpha;
        }
        for_each_tableau_with_diagonal(n, diagonal, [&](const StaircaseTableau& t) {
            for (unsigned r = 1; r <= n; ++r) {
                for (CellLabel label : t.row(r)) {
                    if (label == CellLabel::Gamma || label == CellLabel::Delta) {
                        return;
                    }
                }
            }
            out.push_back(t);
        });
    }
    return out;
}

char arrow_char(Arrow a) noexcept
{
    switch (a) {
    case Arrow::Left:
        return '<';
    case Arrow::Up:
        return '^';
    default:
        return '.';
    }
}

std::string to_text(const PermutationTableau& t)
{
    std::string out = t.shape.to_string() + "\n";
    for (const auto& row : t.rows) {
        for (auto v : row) {
            out += v ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const AlternativeTableau& t)
{
    std::string out = t.shape.to_string() + "\n";
    for (const auto& row : t.rows) {
        for (Arrow a : row) {
            out += arrow_char(a);
        }
        out += '\n';
    }
    return out;
}

PermutationTableau parse_permutation_tableau(std::string_view text)
{
    return parse_filled<PermutationTableau, std::uint8_t>(text, "permutation tableau", [](char ch) -> std::uint8_t {
        if (ch == '0' || ch == '1') {
            return static_cast<std::uint8_t>(ch - '0');
        }
        throw ParseError(std::string("permutation tableau: unexpected character '") + ch + "'");
    });
}

AlternativeTableau parse_alternative_tableau(std::string_view text)
{
    return parse_filled<AlternativeTableau, Arrow>(text, "alternative tableau", [](char ch) {
        switch (ch) {
        case '.':
            return Arrow::Empty;
        case '<':
            return Arrow::Left;
        case '^':
            return Arrow::Up;
        default:
            throw ParseError(std::string("alternative tableau: unexpected character '") + ch + "'");
        }
    });
}

} // namespace staircase
