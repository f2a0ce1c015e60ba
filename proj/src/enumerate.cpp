#include "staircase/enumerate.hpp"

#include "staircase/ansatz.hpp"
#include "staircase/errors.hpp"

#include <atomic>
#include <thread>
#include <unordered_map>

namespace staircase {

namespace detail {

void check_enumeration_size(unsigned n)
{
    if (n < 1 || n > kMaxEnumerationSize) {
        throw CapacityError("exhaustive enumeration supports sizes 1.." + std::to_string(kMaxEnumerationSize) +
                            ", got " + std::to_string(n));
    }
}

} // namespace detail

namespace {

constexpr unsigned kPackBits = 10;

std::uint64_t pack(const Monomial& m) noexcept
{
    std::uint64_t key = 0;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        key |= std::uint64_t(m[v]) << (kPackBits * v);
    }
    return key;
}

Monomial unpack(std::uint64_t key) noexcept
{
    Monomial::Exponents e{};
    for (std::size_t v = 0; v < kVarCount; ++v) {
        e[v] = static_cast<std::uint16_t>((key >> (kPackBits * v)) & ((1U << kPackBits) - 1));
    }
    return Monomial(e);
}

using Accumulator = std::unordered_map<std::uint64_t, std::uint64_t>;

void merge_into(GfPoly& poly, const Accumulator& acc)
{
    for (const auto& [key, count] : acc) {
        poly.add_term(unpack(key), BigInt(static_cast<unsigned long>(count)));
    }
}

std::vector<CellLabel> diagonal_of(unsigned n, std::uint64_t pattern)
{
    std::vector<CellLabel> diag(n);
    for (unsigned r = 0; r < n; ++r) {
        diag[r] = static_cast<CellLabel>(1 + ((pattern >> (2 * r)) & 3U));
    }
    return diag;
}

StateWord type_of(const std::vector<CellLabel>& diag)
{
    std::uint32_t bits = 0;
    for (std::size_t r = 0; r < diag.size(); ++r) {
        if (diag[r] == CellLabel::Alpha || diag[r] == CellLabel::Delta) {
            bits |= 1U << r;
        }
    }
    return StateWord(static_cast<unsigned>(diag.size()), bits);
}

unsigned resolve_threads(const EnumerationOptions& options, std::size_t jobs)
{
    unsigned t = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    if (t == 0) {
        t = 1;
    }
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

// Runs job(worker, index) for every index in [0, jobs) on a pool of workers
// pulling indices from a shared counter.
template <class Job>
void run_partitioned(std::size_t jobs, unsigned workers, Job job)
{
    std::atomic<std::size_t> next{0};
    auto loop = [&](unsigned worker) {
        for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
            job(worker, i);
        }
    };
    if (workers <= 1) {
        loop(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(loop, w);
    }
}

// Accumulates weights per type over the given diagonal patterns.
std::map<StateWord, GfPoly> accumulate(unsigned n, const std::vector<std::uint64_t>& patterns,
                                       const EnumerationOptions& options)
{
    const unsigned workers = resolve_threads(options, patterns.size());
    std::vector<std::map<StateWord, Accumulator>> local(workers);
    run_partitioned(patterns.size(), workers, [&](unsigned w, std::size_t i) {
        const auto diag = diagonal_of(n, patterns[i]);
        Accumulator& acc = local[w][type_of(diag)];
        for_each_tableau_with_diagonal(n, diag, [&](const StaircaseTableau& t) { ++acc[pack(weight(t))]; });
    });
    std::map<StateWord, GfPoly> out;
    for (const auto& per_worker : local) {
        for (const auto& [tau, acc] : per_worker) {
            merge_into(out[tau], acc);
        }
    }
    return out;
}

std::vector<std::uint64_t> all_patterns(unsigned n)
{
    std::vector<std::uint64_t> patterns(std::size_t(1) << (2 * n));
    for (std::size_t p = 0; p < patterns.size(); ++p) {
        patterns[p] = p;
    }
    return patterns;
}

} // namespace

BigInt tableau_count_formula(unsigned n)
{
    return pow(BigInt(4), n) * factorial(n);
}

std::uint64_t count_tableaux(unsigned n, const EnumerationOptions& options)
{
    detail::check_enumeration_size(n);
    const auto patterns = all_patterns(n);
    const unsigned workers = resolve_threads(options, patterns.size());
    std::vector<std::uint64_t> counts(workers, 0);
    run_partitioned(patterns.size(), workers, [&](unsigned w, std::size_t i) {
        for_each_tableau_with_diagonal(n, diagonal_of(n, patterns[i]), [&](const StaircaseTableau&) { ++counts[w]; });
    });
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    return total;
}

TypeGenerating generating_functions(unsigned n, const EnumerationOptions& options)
{
    detail::check_enumeration_size(n);
    TypeGenerating table;
    table.n = n;
    table.by_type = accumulate(n, all_patterns(n), options);
    for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
        table.by_type.try_emplace(StateWord(n, bits));
    }
    for (const auto& [tau, gf] : table.by_type) {
        table.total += gf;
    }
    return table;
}

GfPoly gf_total(unsigned n, bool keep_u, const EnumerationOptions& options)
{
    if (n == 0) {
        return GfPoly::one();
    }
    if (n > kMaxEnumerationSize) {
        GfPoly z = partition_function_transfer(n);
        return keep_u ? homogenize_u(z, n * (n + 1) / 2) : z;
    }
    GfPoly z = generating_functions(n, options).total;
    return keep_u ? z : set_u_one(z);
}

GfPoly gf_by_type(const StateWord& tau, const EnumerationOptions& options)
{
    const unsigned n = tau.size();
    detail::check_enumeration_size(n);
    std::vector<std::uint64_t> patterns;
    for (std::uint32_t choice = 0; choice < (1U << n); ++choice) {
        std::uint64_t pattern = 0;
        for (unsigned r = 0; r < n; ++r) {
            const bool second = (choice >> r) & 1U;
            CellLabel l;
            if (tau.occupied(r + 1)) {
                l = second ? CellLabel::Delta : CellLabel::Alpha;
            } else {
                l = second ? CellLabel::Gamma : CellLabel::Beta;
            }
            pattern |= std::uint64_t(static_cast<unsigned>(l) - 1) << (2 * r);
        }
        patterns.push_back(pattern);
    }
    auto by_type = accumulate(n, patterns, options);
    return by_type[tau];
}

GfPoly gf_occupied(unsigned n, const std::vector<unsigned>& positions, const TypeGenerating& table)
{
    for (unsigned p : positions) {
        if (p < 1 || p > n) {
            throw DomainError("diagonal position " + std::to_string(p) + " outside 1.." + std::to_string(n));
        }
    }
    GfPoly out;
    for (const auto& [tau, gf] : table.by_type) {
        bool all = true;
        for (unsigned p : positions) {
            all = all && tau.occupied(p);
        }
        if (all) {
            out += gf;
        }
    }
    return out;
}

} // namespace staircase
