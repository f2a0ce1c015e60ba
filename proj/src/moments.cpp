#include "staircase/moments.hpp"

#include "staircase/ansatz.hpp"
#include "staircase/errors.hpp"

#include <mutex>

namespace staircase {

namespace {

BigRational reduced(BigRational v)
{
    v.canonicalize();
    return v;
}

BigRational checked_div(const BigRational& num, const BigRational& den, const char* what)
{
    if (den == 0) {
        throw DegeneracyError(std::string("vanishing denominator in ") + what);
    }
    return reduced(num / den);
}

// q^e * factor, read as 0 when factor is 0 so that negative powers of q = 0
// are only an error when they actually contribute.
BigRational qpow_times(const BigRational& q, long e, const BigRational& factor)
{
    if (factor == 0) {
        return 0;
    }
    return pow(q, e) * factor;
}

// Nearest integer to sqrt(value).
BigInt nearest_isqrt(const BigInt& value)
{
    BigInt s = sqrt(value);
    if (value - s * s > s) {
        s += 1;
    }
    return s;
}

// Square root of a non-negative rational: exact when possible, otherwise rounded.
BigRational rational_sqrt(const BigRational& v, unsigned bits, bool& exact)
{
    const BigInt& num = v.get_num();
    const BigInt& den = v.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        return BigRational(BigInt(sqrt(num)), BigInt(sqrt(den)));
    }
    exact = false;
    // sqrt(num/den) = sqrt(num * den) / den, scaled by 2^bits
    const BigInt scale = pow(BigInt(2), bits);
    const BigInt root = nearest_isqrt(num * den * scale * scale);
    return reduced(BigRational(root, den * scale));
}

std::pair<BigRational, BigRational> invert_pair(const BigRational& x, const BigRational& y, const BigRational& q,
                                                unsigned bits, bool& exact, const char* name)
{
    if (x == 0) {
        throw DegeneracyError(std::string(name) + " must be nonzero to invert the parameter map");
    }
    const BigRational shift = BigRational(1) - q - x + y;
    const BigRational disc = reduced(shift * shift + 4 * x * y);
    if (disc < 0) {
        throw DomainError(std::string("negative discriminant inverting ") + name + "; complex branch not supported");
    }
    const BigRational root = rational_sqrt(disc, bits, exact);
    return {reduced((shift + root) / (2 * x)), reduced((shift - root) / (2 * x))};
}

} // namespace

bool AwParams::in_orthogonality_regime() const
{
    auto small = [](const BigRational& v) { return abs(v) < 1; };
    return small(a) && small(b) && small(c) && small(d) && small(q);
}

AsepParams forward_params(const AwParams& aw)
{
    const BigRational one_q = BigRational(1) - aw.q;
    const BigRational left = 1 + aw.a * aw.c + aw.a + aw.c;
    const BigRational right = 1 + aw.b * aw.d + aw.b + aw.d;
    AsepParams p;
    p.alpha = checked_div(one_q, left, "alpha");
    p.beta = checked_div(one_q, right, "beta");
    p.gamma = checked_div(-one_q * aw.a * aw.c, left, "gamma");
    p.delta = checked_div(-one_q * aw.b * aw.d, right, "delta");
    p.q = aw.q;
    p.u = 1;
    return p;
}

BackwardParams backward_params(const AsepParams& rates, unsigned precision_bits)
{
    BackwardParams out;
    auto [a, c] = invert_pair(rates.alpha, rates.gamma, rates.q, precision_bits, out.exact, "alpha");
    auto [b, d] = invert_pair(rates.beta, rates.delta, rates.q, precision_bits, out.exact, "beta");
    out.abcd = {a, b, c, d};
    out.precision_bits = out.exact ? 0 : precision_bits;
    return out;
}

RecurrenceCoeffs recurrence_coeffs(unsigned n, const AwParams& aw)
{
    const auto& [a, b, c, d, q] = aw;
    const long m = static_cast<long>(n);
    const BigRational e = a * b * c * d;
    const BigRational s = a + b + c + d;
    // abcd * (1/a + 1/b + 1/c + 1/d), cleared so zero parameters are allowed
    const BigRational t = b * c * d + a * c * d + a * b * d + a * b * c;
    const BigRational one = 1;

    RecurrenceCoeffs r;
    if (n == 0) {
        // The q^-1 and q^-2 factors cancel: A_0 = 1/(1-abcd),
        // B_0 = (s - abcd s')/(1-abcd), and C_0 carries the factor 1 - q^0.
        r.A = checked_div(one, one - e, "A_0");
        r.B = checked_div(s - t, one - e, "B_0");
        r.C = 0;
        return r;
    }
    r.A = checked_div(one - qpow_times(q, m - 1, e),
                      (one - qpow_times(q, 2 * m - 1, e)) * (one - qpow_times(q, 2 * m, e)), "A_n");

    const BigRational bracket = (one + qpow_times(q, 2 * m - 1, e)) * (q * s + t) -
                                qpow_times(q, m - 1, (1 + q) * (e * s + q * t));
    r.B = checked_div(qpow_times(q, m - 1, bracket),
                      (one - qpow_times(q, 2 * m - 2, e)) * (one - qpow_times(q, 2 * m, e)), "B_n");

    BigRational num = one - pow(q, m);
    const std::array<BigRational, 6> pairs{a * b, a * c, a * d, b * c, b * d, c * d};
    for (const BigRational& pair : pairs) {
        num *= one - qpow_times(q, m - 1, pair);
    }
    r.C = checked_div(num, (one - qpow_times(q, 2 * m - 2, e)) * (one - qpow_times(q, 2 * m - 1, e)), "C_n");
    return r;
}

JacobiCoeffs jacobi_coeffs(unsigned levels, const AwParams& aw)
{
    JacobiCoeffs j;
    std::vector<RecurrenceCoeffs> rc;
    for (unsigned n = 0; n <= levels; ++n) {
        rc.push_back(recurrence_coeffs(n, aw));
    }
    for (unsigned n = 0; n <= levels; ++n) {
        j.diagonal.push_back(reduced(rc[n].B / 2));
        j.lambda.push_back(n == 0 ? BigRational(0) : reduced(rc[n - 1].A * rc[n].C / 4));
    }
    return j;
}

MomentVector moments_motzkin(unsigned max_k, const AwParams& aw)
{
    // A path of length k only reaches heights <= k/2, so levels 0..K suffice.
    const JacobiCoeffs jac = jacobi_coeffs(max_k, aw);
    const std::size_t levels = max_k + 1;
    std::vector<BigRational> weight(levels, BigRational(0));
    weight[0] = 1;
    MomentVector nu{BigRational(1)};
    for (unsigned k = 1; k <= max_k; ++k) {
        std::vector<BigRational> next(levels, BigRational(0));
        for (std::size_t h = 0; h < levels; ++h) {
            if (weight[h] == 0) {
                continue;
            }
            next[h] += weight[h] * jac.diagonal[h];
            if (h + 1 < levels) {
                next[h + 1] += weight[h];
            }
            if (h >= 1) {
                next[h - 1] += weight[h] * jac.lambda[h];
            }
        }
        for (auto& w : next) {
            w.canonicalize();
        }
        weight = std::move(next);
        nu.push_back(weight[0]);
    }
    return nu;
}

const std::vector<GfPoly>& partition_functions_u1(unsigned max_n)
{
    static std::mutex mutex;
    static std::vector<GfPoly> cache;
    std::lock_guard lock(mutex);
    while (cache.size() <= max_n) {
        // transfer matrices are much faster than enumeration here and agree with it
        cache.push_back(partition_function_transfer(static_cast<unsigned>(cache.size())));
    }
    return cache;
}

MomentVector moments_staircase(unsigned max_k, const AwParams& aw)
{
    const AsepParams rates = forward_params(aw);
    const Point point = rates.point();
    const auto& z = partition_functions_u1(max_k);

    // term[l] = ((1-q)/2)^l Z_l / prod_{i<l} (ab - gd q^i)
    std::vector<BigRational> term;
    BigRational scale = 1;
    const BigRational half_gap = reduced((BigRational(1) - rates.q) / 2);
    for (unsigned l = 0; l <= max_k; ++l) {
        if (l > 0) {
            const BigRational lam = rates.alpha * rates.beta - rates.gamma * rates.delta * pow(rates.q, l - 1);
            if (lam == 0) {
                throw DegeneracyError("ab = gd q^" + std::to_string(l - 1) + ": staircase moment formula undefined");
            }
            scale = reduced(scale * half_gap / lam);
        }
        term.push_back(reduced(scale * evaluate(z[l], point)));
    }
    MomentVector nu;
    for (unsigned k = 0; k <= max_k; ++k) {
        BigRational sum = 0;
        for (unsigned l = 0; l <= k; ++l) {
            const BigRational c(binomial(k, l));
            sum += ((k - l) % 2 == 0 ? c : BigRational(-c)) * term[l];
        }
        nu.push_back(reduced(sum));
    }
    return nu;
}

MomentComparison compare_moments(unsigned max_k, const AwParams& aw)
{
    MomentComparison cmp;
    cmp.staircase = moments_staircase(max_k, aw);
    cmp.motzkin = moments_motzkin(max_k, aw);
    for (unsigned k = 0; k <= max_k; ++k) {
        if (cmp.staircase[k] != cmp.motzkin[k]) {
            cmp.first_mismatch = k;
            break;
        }
    }

    const AsepParams rates = forward_params(aw);
    const Point point = rates.point();
    const auto& z = partition_functions_u1(max_k);
    const BigRational half_gap = reduced((BigRational(1) - rates.q) / 2);
    BigRational scale = 1;
    for (unsigned n = 0; n <= max_k; ++n) {
        if (n > 0) {
            scale = reduced(scale * half_gap /
                            (rates.alpha * rates.beta - rates.gamma * rates.delta * pow(rates.q, n - 1)));
        }
        const BigRational lhs = reduced(scale * evaluate(z[n], point));
        BigRational rhs = 0;
        for (unsigned k = 0; k <= n; ++k) {
            rhs += BigRational(binomial(n, k)) * cmp.motzkin[k];
        }
        if (lhs != reduced(rhs)) {
            cmp.bridge_mismatch = n;
            break;
        }
    }
    return cmp;
}

BigRational hankel_determinant(const MomentVector& moments, unsigned order)
{
    if (order == 0) {
        return 1;
    }
    if (moments.size() < 2 * order - 1) {
        throw DomainError("not enough moments for a Hankel determinant of order " + std::to_string(order));
    }
    std::vector<std::vector<BigRational>> m(order, std::vector<BigRational>(order));
    for (unsigned i = 0; i < order; ++i) {
        for (unsigned j = 0; j < order; ++j) {
            m[i][j] = moments[i + j];
        }
    }
    BigRational det = 1;
    for (unsigned col = 0; col < order; ++col) {
        unsigned pivot = col;
        while (pivot < order && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == order) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (unsigned r = col + 1; r < order; ++r) {
            const BigRational f = m[r][col] / m[col][col];
            for (unsigned c = col; c < order; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    return reduced(det);
}

} // namespace staircase
