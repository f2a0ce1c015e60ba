#include "staircase/poly.hpp"

#include "staircase/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace staircase {

Monomial Monomial::of(Var v, unsigned power)
{
    Exponents e{};
    e[index_of(v)] = static_cast<std::uint16_t>(power);
    return Monomial(e);
}

Monomial& Monomial::operator*=(const Monomial& other)
{
    for (std::size_t i = 0; i < kVarCount; ++i) {
        const unsigned sum = unsigned(exps_[i]) + other.exps_[i];
        if (sum > std::numeric_limits<std::uint16_t>::max()) {
            throw CapacityError("monomial exponent overflow");
        }
        exps_[i] = static_cast<std::uint16_t>(sum);
    }
    degree_ += other.degree_;
    return *this;
}

Monomial Monomial::without(Var v) const
{
    return with_exponent(v, 0);
}

Monomial Monomial::with_exponent(Var v, unsigned e) const
{
    Exponents copy = exps_;
    copy[index_of(v)] = static_cast<std::uint16_t>(e);
    return Monomial(copy);
}

bool CanonicalOrder::operator()(const Monomial& lhs, const Monomial& rhs) const noexcept
{
    const unsigned dl = lhs.degree();
    const unsigned dr = rhs.degree();
    if (dl != dr) {
        return dl > dr;
    }
    return lhs.exponents() > rhs.exponents();
}

GfPoly::GfPoly(const BigInt& constant)
{
    add_term(Monomial{}, constant);
}

GfPoly::GfPoly(const Monomial& m, const BigInt& coeff)
{
    add_term(m, coeff);
}

BigInt GfPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void GfPoly::add_term(const Monomial& m, const BigInt& coeff)
{
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GfPoly& GfPoly::operator+=(const GfPoly& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

GfPoly& GfPoly::operator-=(const GfPoly& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

GfPoly operator*(const GfPoly& lhs, const GfPoly& rhs)
{
    if (lhs.terms_.size() > rhs.terms_.size()) {
        return rhs * lhs;
    }
    GfPoly out;
    if (lhs.terms_.empty()) {
        return out;
    }
    if (lhs.terms_.size() == 1) {
        // a fixed monomial factor keeps the order, so append in place
        const auto& [ml, cl] = *lhs.terms_.begin();
        for (const auto& [mr, cr] : rhs.terms_) {
            out.terms_.emplace_hint(out.terms_.end(), ml * mr, cl * cr);
        }
        return out;
    }
    std::vector<std::pair<Monomial, BigInt>> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& [ml, cl] : lhs.terms_) {
        for (const auto& [mr, cr] : rhs.terms_) {
            products.emplace_back(ml * mr, cl * cr);
        }
    }
    const CanonicalOrder before;
    std::sort(products.begin(), products.end(),
              [&](const auto& x, const auto& y) { return before(x.first, y.first); });
    for (std::size_t i = 0; i < products.size();) {
        std::size_t j = i + 1;
        BigInt& sum = products[i].second;
        for (; j < products.size() && products[j].first == products[i].first; ++j) {
            sum += products[j].second;
        }
        if (sum != 0) {
            out.terms_.emplace_hint(out.terms_.end(), products[i].first, std::move(sum));
        }
        i = j;
    }
    return out;
}

GfPoly& GfPoly::operator*=(const GfPoly& other)
{
    *this = *this * other;
    return *this;
}

GfPoly& GfPoly::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

GfPoly operator-(const GfPoly& p)
{
    GfPoly out = p;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

BigRational evaluate(const GfPoly& p, const Point& point)
{
    // powers[v][e] = point[v]^e, grown on demand
    std::array<std::vector<BigRational>, kVarCount> powers;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        powers[v].push_back(BigRational(1));
    }
    BigRational total = 0;
    for (const auto& [m, c] : p.terms()) {
        BigRational term(c);
        for (std::size_t v = 0; v < kVarCount; ++v) {
            const unsigned e = m[v];
            if (e == 0) {
                continue;
            }
            auto& pw = powers[v];
            while (pw.size() <= e) {
                pw.push_back(pw.back() * point[v]);
            }
            term *= pw[e];
        }
        total += term;
    }
    total.canonicalize();
    return total;
}

GfPoly set_u_one(const GfPoly& p)
{
    GfPoly out;
    for (const auto& [m, c] : p.terms()) {
        out.add_term(m.without(Var::U), c);
    }
    return out;
}

GfPoly homogenize_u(const GfPoly& p, unsigned degree)
{
    GfPoly out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned d = m.degree();
        if (d > degree) {
            throw DomainError("term of degree " + std::to_string(d) + " exceeds target degree " +
                              std::to_string(degree));
        }
        out.add_term(m.with_exponent(Var::U, m[Var::U] + (degree - d)), c);
    }
    return out;
}

GfPoly rename_vars(const GfPoly& p, const std::array<Var, kVarCount>& image)
{
    GfPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial::Exponents e{};
        for (std::size_t v = 0; v < kVarCount; ++v) {
            e[index_of(image[v])] += static_cast<std::uint16_t>(m[v]);
        }
        out.add_term(Monomial(e), c);
    }
    return out;
}

std::string to_string(const Monomial& m)
{
    std::string out;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        const unsigned e = m[v];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += kVarSymbols[v];
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const GfPoly& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const BigInt mag = abs(c);
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += to_string(m);
        } else {
            out += mag.get_str() + "*" + to_string(m);
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    GfPoly parse()
    {
        GfPoly out;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            auto [m, c] = term();
            out.add_term(m, negative ? BigInt(-c) : c);
            skip_space();
            if (at_end()) {
                break;
            }
            const char op = text_[pos_];
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            negative = op == '-';
            ++pos_;
        }
        return out;
    }

private:
    std::pair<Monomial, BigInt> term()
    {
        skip_space();
        BigInt coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = BigInt(std::string(digits()), 10);
            have_coeff = true;
            skip_space();
            if (peek() == '*') {
                ++pos_;
            } else {
                return {Monomial{}, coeff};
            }
        }
        Monomial::Exponents exps{};
        bool any_var = false;
        for (;;) {
            skip_space();
            const auto it = std::find(kVarSymbols.begin(), kVarSymbols.end(), peek());
            if (at_end() || it == kVarSymbols.end()) {
                break;
            }
            ++pos_;
            unsigned power = 1;
            if (peek() == '^') {
                ++pos_;
                power = static_cast<unsigned>(std::stoul(std::string(digits())));
            }
            exps[static_cast<std::size_t>(it - kVarSymbols.begin())] += static_cast<std::uint16_t>(power);
            any_var = true;
        }
        if (!any_var) {
            fail(have_coeff ? "expected a variable after '*'" : "expected a term");
        }
        return {Monomial(exps), coeff};
    }

    std::string_view digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return text_.substr(start, pos_ - start);
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GfPoly parse_poly(std::string_view text)
{
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text.substr(first) == "0") {
        return GfPoly{};
    }
    return PolyParser(text).parse();
}

} // namespace staircase
