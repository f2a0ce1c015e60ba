#include "staircase/rational.hpp"

#include "staircase/errors.hpp"

#include <algorithm>
#include <cctype>

namespace staircase {

namespace {

bool is_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

std::string_view strip_sign(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

BigInt parse_integer(std::string_view text)
{
    if (!is_digits(strip_sign(text))) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_integer(text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_digits(den)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    BigInt n = parse_integer(num);
    BigInt d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    }
    BigRational r(n, d);
    r.canonicalize();
    return r;
}

std::string to_string(const BigRational& value)
{
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

BigRational pow(const BigRational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw DegeneracyError("zero raised to a negative power");
        }
        return pow(BigRational(1) / base, -exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace staircase
