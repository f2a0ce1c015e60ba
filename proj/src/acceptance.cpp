#include "staircase/acceptance.hpp"

#include "staircase/ansatz.hpp"
#include "staircase/asep.hpp"
#include "staircase/bijections.hpp"
#include "staircase/moments.hpp"

#include <chrono>
#include <cstdio>
#include <set>

namespace staircase {

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

BigRational r(long num, long den = 1) { return BigRational(num, den); }

// Six pairwise distinct rates in (0, 1] per point.
std::vector<AsepParams> asep_points()
{
    return {
        {r(1, 2), r(1, 3), r(1, 5), r(1, 7), r(1, 11), r(1)},
        {r(2, 3), r(1, 4), r(3, 7), r(1, 9), r(5, 6), r(2, 5)},
        {r(3, 4), r(5, 8), r(1, 6), r(2, 9), r(1, 3), r(7, 10)},
    };
}

std::vector<AwParams> aw_points()
{
    return {
        {r(1, 2), r(1, 3), r(-1, 5), r(-1, 7), r(1, 11)},
        {r(1, 3), r(-1, 4), r(1, 5), r(2, 7), r(-1, 2)},
        {r(2, 5), r(1, 7), r(-1, 3), r(1, 9), r(1, 3)},
    };
}

Outcome cardinality(const EnumerationOptions& opts)
{
    const std::uint64_t expected[] = {4, 32, 384, 6144, 122880, 2949120};
    for (unsigned n = 1; n <= 6; ++n) {
        const std::uint64_t got = count_tableaux(n, opts);
        if (got != expected[n - 1] || BigInt(static_cast<unsigned long>(got)) != tableau_count_formula(n)) {
            return {false, "n=" + std::to_string(n) + " enumerated " + std::to_string(got)};
        }
    }
    return {true, "4^n n! for n=1..6"};
}

Outcome worked_example(const EnumerationOptions& opts)
{
    const GfPoly got = gf_by_type(StateWord::parse("11"), opts);
    const GfPoly want = parse_poly("a^2 u + d^2 q + a d q + a d u + a^2 d + a b d + a g d + a d^2");
    if (got != want) {
        return {false, "got " + to_string(got)};
    }
    return {true, to_string(got)};
}

Outcome stationary_equivalence(const EnumerationOptions& opts)
{
    const auto points = asep_points();
    for (unsigned n = 1; n <= 5; ++n) {
        const TypeGenerating table = generating_functions(n, opts);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const StationaryDist via_tableaux = stationary_tableaux(table, points[i]);
            const StationaryDist via_chain = stationary_exact(build_chain(n, points[i]));
            if (via_tableaux != via_chain) {
                return {false, "n=" + std::to_string(n) + " point " + std::to_string(i + 1)};
            }
        }
    }
    return {true, "n=1..5 at 3 points, all states"};
}

Outcome transfer_equivalence(const EnumerationOptions& opts)
{
    auto& alg = transfer_algebra();
    std::size_t words = 0;
    for (unsigned n = 1; n <= 5; ++n) {
        const TypeGenerating table = generating_functions(n, opts);
        for (const auto& w : words_of_length(n)) {
            ++words;
            if (alg.wxv(w) != set_u_one(table.by_type.at(w.type()))) {
                return {false, "word " + w.to_string()};
            }
        }
    }
    return {true, std::to_string(words) + " words"};
}

Outcome matrix_ansatz()
{
    std::size_t checks = 0;
    std::vector<VerifyReport> reports = verify_gma(3);
    reports.push_back(verify_identity(1, 3));
    reports.push_back(verify_identity(2, 3));
    for (const auto& rep : reports) {
        checks += rep.checks;
        if (!rep.ok()) {
            const auto& c = *rep.failure;
            return {false, rep.family + " X=" + c.x + " Y=" + c.y + ": " + to_string(c.lhs) + " != " + to_string(c.rhs)};
        }
    }
    const GfPoly example = transfer_entry(Letter::E, 0, 2, 2, 0);
    if (example != parse_poly("b d^2")) {
        return {false, "E_{0,2,2,0} = " + to_string(example)};
    }
    return {true, std::to_string(checks) + " identities, E_{0,2,2,0} = " + to_string(example)};
}

Outcome index_decrease()
{
    const VerifyReport rep = verify_decrease(4, 6);
    if (!rep.ok()) {
        return {false, "Y=" + rep.failure->y};
    }
    return {true, std::to_string(rep.checks) + " index tuples"};
}

Outcome moments()
{
    for (const auto& aw : aw_points()) {
        const MomentComparison cmp = compare_moments(6, aw);
        if (!cmp.equal()) {
            return {false, cmp.first_mismatch ? "nu_" + std::to_string(*cmp.first_mismatch) + " differs"
                                              : "bridge fails at n=" + std::to_string(*cmp.bridge_mismatch)};
        }
    }
    return {true, "k<=6 at 3 points, bridge n<=6"};
}

Outcome symmetries(const EnumerationOptions& opts)
{
    std::size_t checks = 0;
    for (unsigned n = 1; n <= 4; ++n) {
        const SymmetryReport rep = check_symmetries(generating_functions(n, opts));
        checks += rep.checks;
        if (!rep.ok()) {
            return {false, *rep.failed_identity + " at type " + rep.failing_type->to_string()};
        }
    }
    return {true, std::to_string(checks) + " polynomial identities"};
}

Outcome physical(const EnumerationOptions& opts)
{
    auto points = asep_points();
    for (unsigned n = 1; n <= 5; ++n) {
        const GfPoly z_prev = gf_total(n - 1, false, opts);
        const GfPoly z_n = gf_total(n, false, opts);
        for (const auto& p : points) {
            const StationaryDist dist = stationary_exact(build_chain(n, p));
            const BigRational j = current(n, p);
            if (p.u == 1) {
                // the closed form as usually stated, u = 1
                const Point at = p.point();
                const BigRational closed = evaluate(z_prev, at) *
                                           (p.alpha * p.beta - p.gamma * p.delta * pow(p.q, static_cast<long>(n) - 1)) /
                                           evaluate(z_n, at);
                if (closed != j) {
                    return {false, "closed form differs at n=" + std::to_string(n)};
                }
            }
            if (left_boundary_current(dist, p) != j || right_boundary_current(dist, p) != j) {
                return {false, "boundary current differs at n=" + std::to_string(n)};
            }
            for (unsigned bond = 1; bond < n; ++bond) {
                if (bond_current(dist, bond, p) != j) {
                    return {false, "bond " + std::to_string(bond) + " at n=" + std::to_string(n)};
                }
            }
        }
    }
    return {true, "n=1..5, every bond, 3 points"};
}

Outcome bijections()
{
    for (unsigned n = 0; n <= 5; ++n) {
        const BigInt expected = factorial(n + 1);
        const auto perms = permutation_tableaux(n + 1);
        const auto alts = alternative_tableaux(n);
        const auto stairs = gamma_delta_free_tableaux(n);
        const std::string at = " at n=" + std::to_string(n);
        if (BigInt(static_cast<unsigned long>(perms.size())) != expected || alts.size() != perms.size() ||
            stairs.size() != perms.size()) {
            return {false, "cardinality" + at};
        }
        std::set<AlternativeTableau> from_perm;
        std::set<AlternativeTableau> from_stair;
        for (const auto& p : perms) {
            const AlternativeTableau a = perm_to_alt(p);
            if (violation(a) || alt_to_perm(a) != p) {
                return {false, "perm roundtrip" + at};
            }
            from_perm.insert(a);
        }
        for (const auto& s : stairs) {
            const AlternativeTableau a = staircase_to_alt(s);
            if (violation(a) || alt_to_staircase(a) != s) {
                return {false, "staircase roundtrip" + at};
            }
            from_stair.insert(a);
        }
        for (const auto& a : alts) {
            const PermutationTableau p = alt_to_perm(a);
            const StaircaseTableau s = alt_to_staircase(a);
            if (violation(p) || !validate(s) || perm_to_alt(p) != a || staircase_to_alt(s) != a) {
                return {false, "alternative roundtrip" + at};
            }
        }
        if (from_perm.size() != alts.size() || from_stair.size() != alts.size()) {
            return {false, "not surjective" + at};
        }
    }
    return {true, "(n+1)! each for n=0..5"};
}

Outcome homogeneity()
{
    for (unsigned n = 1; n <= 6; ++n) {
        const unsigned want = n * (n + 1) / 2;
        bool ok = true;
        for_each_tableau(n, [&](const StaircaseTableau& t) {
            if (weight(t).degree() != want) {
                ok = false;
            }
        });
        if (!ok) {
            return {false, "n=" + std::to_string(n)};
        }
    }
    return {true, "deg = n(n+1)/2 for n=1..6"};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const EnumerationOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result)
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
        {"cardinality", [&] { return cardinality(options); }},
        {"worked-example", [&] { return worked_example(options); }},
        {"stationary-equivalence", [&] { return stationary_equivalence(options); }},
        {"transfer-equivalence", [&] { return transfer_equivalence(options); }},
        {"matrix-ansatz", matrix_ansatz},
        {"index-decrease", index_decrease},
        {"moments", moments},
        {"symmetries", [&] { return symmetries(options); }},
        {"physical-quantities", [&] { return physical(options); }},
        {"bijections", bijections},
        {"homogeneity", homogeneity},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CriterionResult res;
        res.id = static_cast<unsigned>(i + 1);
        res.name = checks[i].first;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = checks[i].second();
            res.passed = o.passed;
            res.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            res.passed = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) {
            on_result(res);
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_result(const CriterionResult& r)
{
    char head[96];
    std::snprintf(head, sizeof head, "%s %2u %-24s (%.2fs) ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
    return head + r.detail;
}

} // namespace staircase
