#include "staircase/asep.hpp"

#include "staircase/errors.hpp"

#include <algorithm>
#include <queue>

namespace staircase {

namespace {

void require_unit_interval(const BigRational& value, const char* name)
{
    if (value < 0 || value > 1) {
        throw DomainError(std::string("parameter ") + name + " = " + to_string(value) + " outside [0, 1]");
    }
}

std::vector<bool> reachable(std::size_t states, std::uint32_t start,
                            const std::vector<std::vector<std::uint32_t>>& edges)
{
    std::vector<bool> seen(states, false);
    std::queue<std::uint32_t> todo;
    seen[start] = true;
    todo.push(start);
    while (!todo.empty()) {
        const auto s = todo.front();
        todo.pop();
        for (auto t : edges[s]) {
            if (!seen[t]) {
                seen[t] = true;
                todo.push(t);
            }
        }
    }
    return seen;
}

} // namespace

BigRational AsepChain::probability(const StateWord& from, const StateWord& to) const
{
    const Row& r = row(from.bits());
    auto it = std::lower_bound(r.begin(), r.end(), to.bits(),
                               [](const auto& entry, std::uint32_t target) { return entry.first < target; });
    return (it != r.end() && it->first == to.bits()) ? it->second : BigRational(0);
}

AsepChain build_chain(unsigned n, const AsepParams& params)
{
    if (n < 1 || n > kMaxChainSize) {
        throw CapacityError("chain size must be in 1.." + std::to_string(kMaxChainSize));
    }
    require_unit_interval(params.alpha, "alpha");
    require_unit_interval(params.beta, "beta");
    require_unit_interval(params.gamma, "gamma");
    require_unit_interval(params.delta, "delta");
    require_unit_interval(params.q, "q");
    require_unit_interval(params.u, "u");

    const BigRational scale = BigRational(1, n + 1);
    AsepChain chain;
    chain.n_ = n;
    chain.rows_.resize(std::size_t(1) << n);
    for (std::uint32_t x = 0; x < chain.rows_.size(); ++x) {
        std::map<std::uint32_t, BigRational> out;
        auto move = [&](std::uint32_t y, const BigRational& rate) {
            if (rate != 0) {
                out[y] += rate * scale;
            }
        };
        const auto bit = [&](unsigned site) { return (x >> (site - 1)) & 1U; };
        for (unsigned i = 1; i < n; ++i) {
            const std::uint32_t swapped = x ^ (3U << (i - 1));
            if (bit(i) == 1 && bit(i + 1) == 0) {
                move(swapped, params.u);
            } else if (bit(i) == 0 && bit(i + 1) == 1) {
                move(swapped, params.q);
            }
        }
        const std::uint32_t first = 1U;
        const std::uint32_t last = 1U << (n - 1);
        move(x ^ first, bit(1) == 0 ? params.alpha : params.gamma);
        move(x ^ last, bit(n) == 1 ? params.beta : params.delta);

        BigRational leaving = 0;
        for (const auto& [y, p] : out) {
            leaving += p;
        }
        BigRational stay = BigRational(1) - leaving;
        if (stay < 0) {
            throw DomainError("outgoing probabilities exceed 1");
        }
        if (stay != 0) {
            out[x] += stay;
        }
        auto& row = chain.rows_[x];
        for (auto& [y, p] : out) {
            p.canonicalize();
            row.emplace_back(y, p);
        }
    }
    return chain;
}

bool is_irreducible(const AsepChain& chain)
{
    const std::size_t states = chain.state_count();
    std::vector<std::vector<std::uint32_t>> forward(states);
    std::vector<std::vector<std::uint32_t>> backward(states);
    for (std::uint32_t x = 0; x < states; ++x) {
        for (const auto& [y, p] : chain.row(x)) {
            if (y != x) {
                forward[x].push_back(y);
                backward[y].push_back(x);
            }
        }
    }
    const auto f = reachable(states, 0, forward);
    const auto b = reachable(states, 0, backward);
    return std::all_of(f.begin(), f.end(), [](bool v) { return v; }) &&
           std::all_of(b.begin(), b.end(), [](bool v) { return v; });
}

StationaryDist stationary_exact(const AsepChain& chain)
{
    if (!is_irreducible(chain)) {
        throw DegeneracyError("chain is reducible; stationary distribution is not unique");
    }
    const std::size_t states = chain.state_count();
    // Rows of (P - I)^T, with the last equation replaced by sum(pi) = 1.
    std::vector<std::vector<BigRational>> a(states, std::vector<BigRational>(states + 1, BigRational(0)));
    for (std::uint32_t x = 0; x < states; ++x) {
        for (const auto& [y, p] : chain.row(x)) {
            a[y][x] += p;
        }
        a[x][x] -= 1;
    }
    for (std::size_t c = 0; c < states; ++c) {
        a[states - 1][c] = 1;
    }
    a[states - 1][states] = 1;

    for (std::size_t col = 0; col < states; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < states; ++r) {
            if (cmp(abs(a[r][col]), abs(a[pivot][col])) > 0) {
                pivot = r;
            }
        }
        if (a[pivot][col] == 0) {
            throw DegeneracyError("singular stationary system");
        }
        std::swap(a[pivot], a[col]);
        const BigRational inv = BigRational(1) / a[col][col];
        for (std::size_t c = col; c <= states; ++c) {
            a[col][c] *= inv;
        }
        for (std::size_t r = 0; r < states; ++r) {
            if (r == col || a[r][col] == 0) {
                continue;
            }
            const BigRational factor = a[r][col];
            for (std::size_t c = col; c <= states; ++c) {
                if (a[col][c] != 0) {
                    a[r][c] -= factor * a[col][c];
                }
            }
        }
    }
    StationaryDist dist;
    dist.n = chain.size();
    for (std::uint32_t x = 0; x < states; ++x) {
        BigRational p = a[x][states];
        p.canonicalize();
        dist.probabilities.emplace(StateWord(chain.size(), x), p);
    }
    return dist;
}

StationaryDist stationary_tableaux(const TypeGenerating& table, const AsepParams& params)
{
    const Point point = params.point();
    const BigRational z = evaluate(table.total, point);
    if (z == 0) {
        throw DegeneracyError("partition function vanishes at this parameter point");
    }
    StationaryDist dist;
    dist.n = table.n;
    for (const auto& [tau, gf] : table.by_type) {
        BigRational p = evaluate(gf, point) / z;
        p.canonicalize();
        dist.probabilities.emplace(tau, p);
    }
    return dist;
}

StationaryDist stationary_tableaux(unsigned n, const AsepParams& params)
{
    return stationary_tableaux(generating_functions(n), params);
}

CurrentForm current_symbolic(unsigned n)
{
    if (n < 1) {
        throw DomainError("current needs at least one site");
    }
    const GfPoly flow = GfPoly::var(Var::Alpha) * GfPoly::var(Var::Beta) * GfPoly::var(Var::U, n - 1) -
                        GfPoly::var(Var::Gamma) * GfPoly::var(Var::Delta) * GfPoly::var(Var::Q, n - 1);
    return {gf_total(n - 1) * flow, gf_total(n)};
}

BigRational current(unsigned n, const AsepParams& params)
{
    const CurrentForm form = current_symbolic(n);
    const Point point = params.point();
    const BigRational den = evaluate(form.denominator, point);
    if (den == 0) {
        throw DegeneracyError("partition function vanishes at this parameter point");
    }
    BigRational j = evaluate(form.numerator, point) / den;
    j.canonicalize();
    return j;
}

BigRational bond_current(const StationaryDist& dist, unsigned bond, const AsepParams& params)
{
    if (bond < 1 || bond >= dist.n) {
        throw DomainError("bond index must be in 1.." + std::to_string(dist.n - 1));
    }
    BigRational j = 0;
    for (const auto& [tau, p] : dist.probabilities) {
        const bool here = tau.occupied(bond);
        const bool next = tau.occupied(bond + 1);
        if (here && !next) {
            j += params.u * p;
        } else if (!here && next) {
            j -= params.q * p;
        }
    }
    j.canonicalize();
    return j;
}

BigRational left_boundary_current(const StationaryDist& dist, const AsepParams& params)
{
    BigRational j = 0;
    for (const auto& [tau, p] : dist.probabilities) {
        j += tau.occupied(1) ? BigRational(-params.gamma * p) : BigRational(params.alpha * p);
    }
    j.canonicalize();
    return j;
}

BigRational right_boundary_current(const StationaryDist& dist, const AsepParams& params)
{
    BigRational j = 0;
    for (const auto& [tau, p] : dist.probabilities) {
        j += tau.occupied(dist.n) ? BigRational(params.beta * p) : BigRational(-params.delta * p);
    }
    j.canonicalize();
    return j;
}

BigRational m_point(const TypeGenerating& table, const std::vector<unsigned>& positions, const AsepParams& params)
{
    const Point point = params.point();
    const BigRational z = evaluate(table.total, point);
    if (z == 0) {
        throw DegeneracyError("partition function vanishes at this parameter point");
    }
    BigRational v = evaluate(gf_occupied(table.n, positions, table), point) / z;
    v.canonicalize();
    return v;
}

BigRational m_point(unsigned n, const std::vector<unsigned>& positions, const AsepParams& params)
{
    return m_point(generating_functions(n), positions, params);
}

SymmetryReport check_symmetries(const TypeGenerating& table)
{
    using V = Var;
    struct Identity {
        const char* name;
        std::array<Var, kVarCount> image;
        StateWord (*map)(const StateWord&);
    };
    const std::array<Identity, 3> identities = {{
        {"left-right", {V::Delta, V::Gamma, V::Beta, V::Alpha, V::U, V::Q},
         [](const StateWord& t) { return t.reversed(); }},
        {"arrow-reversal", {V::Gamma, V::Delta, V::Alpha, V::Beta, V::U, V::Q},
         [](const StateWord& t) { return t.complemented(); }},
        {"particle-hole", {V::Beta, V::Alpha, V::Delta, V::Gamma, V::Q, V::U},
         [](const StateWord& t) { return t.reversed().complemented(); }},
    }};
    SymmetryReport report;
    report.n = table.n;
    for (const auto& id : identities) {
        for (const auto& [tau, gf] : table.by_type) {
            ++report.checks;
            if (gf != rename_vars(table.by_type.at(id.map(tau)), id.image)) {
                report.failed_identity = id.name;
                report.failing_type = tau;
                return report;
            }
        }
    }
    return report;
}

SymmetryReport check_symmetries(unsigned n)
{
    if (n > 5) {
        throw CapacityError("symmetry check supports n <= 5");
    }
    return check_symmetries(generating_functions(n));
}

} // namespace staircase
