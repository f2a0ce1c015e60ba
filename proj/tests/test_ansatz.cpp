#include "staircase/ansatz.hpp"
#include "staircase/enumerate.hpp"
#include "staircase/json_io.hpp"

#include <doctest.h>

#include <random>

using namespace staircase;

namespace {

GfPoly P(std::string_view text) { return parse_poly(text); }

// Plain recursion, no memo, transcribed straight from the definition.
GfPoly naive(Letter x, long i, long j, long k, long l)
{
    if (i < 0 || j < 0 || k < 0 || l < 0 || j < i || l > k + 1) return {};
    const GfPoly qi = GfPoly::var(Var::Q, static_cast<unsigned>(i));
    if (x == Letter::D) {
        if (i == j - 1 && k == 0 && l == 0) return GfPoly::var(Var::Delta) * qi;
        if (i == j && k == 0 && l == 1) return GfPoly::var(Var::Alpha) * qi;
        return GfPoly::var(Var::Delta) * (naive(Letter::D, i, j - 1, k - 1, l) + naive(Letter::E, i, j - 1, k - 1, l)) +
               naive(Letter::D, i, j, k - 1, l - 1);
    }
    if (i == j && k == 0 && l == 0) return GfPoly::var(Var::Beta) * qi;
    if (i == j && k == 0 && l == 1) return GfPoly::var(Var::Gamma) * qi;
    return GfPoly::var(Var::Beta) * (naive(Letter::D, i, j, k - 1, l) + naive(Letter::E, i, j, k - 1, l)) +
           GfPoly::var(Var::Q) * naive(Letter::E, i, j, k - 1, l - 1);
}

} // namespace

TEST_CASE("transfer entries")
{
    CHECK(transfer_entry(Letter::E, 0, 2, 2, 0) == P("b d^2"));
    CHECK(transfer_entry(Letter::D, 0, 1, 0, 0) == P("d"));
    CHECK(transfer_entry(Letter::D, 0, 0, 0, 1) == P("a"));
    CHECK(transfer_entry(Letter::D, 3, 1, 0, 0).is_zero());
    CHECK(transfer_entry(Letter::E, -1, 0, 0, 0).is_zero());
    CHECK(transfer_entry(Letter::D, 1, 2, 0, 0) == P("d q"));
    CHECK(transfer_entry(Letter::E, 1, 1, 0, 0) == P("b q"));

    for (Letter x : {Letter::D, Letter::E}) {
        for (long i = 0; i <= 2; ++i)
            for (long j = 0; j <= 4; ++j)
                for (long k = 0; k <= 3; ++k)
                    for (long l = 0; l <= 4; ++l) {
                        CHECK(transfer_entry(x, i, j, k, l) == naive(x, i, j, k, l));
                    }
    }
}

TEST_CASE("word tensors")
{
    const TransferTensor d = transfer_algebra().word_tensor(AnsatzWord::parse("D"), 2, 2);
    for (const auto& [idx, value] : d.entries) {
        CHECK(value == transfer_entry(Letter::D, idx[0], idx[1], idx[2], idx[3]));
    }

    // DE from (0,0) by explicit contraction
    const TransferTensor de = transfer_algebra().word_tensor(AnsatzWord::parse("DE"), 0, 0);
    for (long j = 0; j <= 3; ++j) {
        for (long l = 0; l <= 3; ++l) {
            GfPoly sum;
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; b <= 3; ++b)
                    sum += naive(Letter::D, 0, a, 0, b) * naive(Letter::E, a, j, b, l);
            CHECK(de.at(0, j, 0, l) == sum);
        }
    }
}

TEST_CASE("W X V against enumeration")
{
    auto& alg = transfer_algebra();
    CHECK(alg.wxv(AnsatzWord::parse("D")) == P("a + d"));
    CHECK(alg.wxv(AnsatzWord::parse("E")) == P("b + g"));
    CHECK(alg.wxv(AnsatzWord::parse("DD")) == set_u_one(gf_by_type(StateWord::parse("11"))));

    for (unsigned n = 1; n <= 5; ++n) {
        const TypeGenerating table = generating_functions(n);
        GfPoly z;
        for (const auto& w : words_of_length(n)) {
            const GfPoly v = alg.wxv(w);
            CHECK(v == set_u_one(table.by_type.at(w.type())));
            z += v;
        }
        CHECK(z == set_u_one(gf_total(n)));
        CHECK(z == partition_function_transfer(n));
    }
}

TEST_CASE("support bound")
{
    for (std::size_t r = 1; r <= 4; ++r) {
        for (const auto& w : words_of_length(r)) {
            for (const auto& [jl, value] : transfer_algebra().wx(w)) {
                CHECK(jl.first + jl.second <= r);
                CHECK_FALSE(value.is_zero());
            }
        }
    }
}

TEST_CASE("row-index interpretation")
{
    for (unsigned n = 1; n <= 4; ++n) {
        std::map<std::pair<StateWord, std::pair<unsigned, unsigned>>, GfPoly> brute;
        for_each_tableau(n, [&](const StaircaseTableau& t) {
            const RowIndexCounts c = row_index_counts(fill_qu(t));
            CHECK(c.beta + c.delta + c.alpha_gamma == n);
            brute[{tableau_type(t), {c.delta, c.alpha_gamma}}] += set_u_one(GfPoly(weight(t)));
        });
        for (const auto& w : words_of_length(n)) {
            for (unsigned j = 0; j <= n; ++j) {
                for (unsigned l = 0; j + l <= n; ++l) {
                    const auto it = brute.find({w.type(), {j, l}});
                    const GfPoly expected = it == brute.end() ? GfPoly{} : it->second;
                    CHECK_MESSAGE(transfer_algebra().wx(w, j, l) == expected, w.to_string(), " ", j, " ", l);
                }
            }
        }
    }
}

TEST_CASE("lambda")
{
    CHECK(lambda(0) == GfPoly::one());
    CHECK(lambda(1) == P("a b - g d"));
    CHECK(lambda(3) == P("a b - g d q^2"));
}

TEST_CASE("GMA base cases by hand")
{
    auto& alg = transfer_algebra();
    const GfPoly a = P("a"), b = P("b"), g = P("g"), d = P("d");
    const GfPoly wd = alg.wxv(AnsatzWord::parse("D"));
    const GfPoly we = alg.wxv(AnsatzWord::parse("E"));
    CHECK(a * we - g * wd == lambda(1));
    CHECK(b * wd - d * we == lambda(1));

    const GfPoly lhs = alg.wxv(AnsatzWord::parse("DE")) - P("q") * alg.wxv(AnsatzWord::parse("ED"));
    CHECK(lhs == lambda(2) * (wd + we));
}

TEST_CASE("GMA families")
{
    for (const auto& rep : verify_gma(4)) {
        CHECK_MESSAGE(rep.ok(), rep.family);
        CHECK(rep.checks > 0);
    }
    CHECK(verify_gma_family("II", 2).ok());
}

TEST_CASE("index decrease")
{
    CHECK(transfer_entry(Letter::D, 1, 2, 0, 0) == P("q") * transfer_entry(Letter::D, 0, 1, 0, 0));
    CHECK(transfer_entry(Letter::E, 1, 1, 0, 0) == P("q") * transfer_entry(Letter::E, 0, 0, 0, 0));

    std::mt19937 rng(7);
    const auto words = words_of_length(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& w = words[rng() % words.size()];
        const long i = 1 + rng() % 3, j = i + rng() % 3, k = rng() % 3, l = rng() % (k + 4);
        const TransferTensor t = transfer_algebra().word_tensor(w, static_cast<unsigned>(i), static_cast<unsigned>(k));
        CHECK(t.at(i, j, k, l) == P("q^3") * t.at(i - 1, j - 1, k, l));
    }

    const VerifyReport rep = verify_decrease(3, 4);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);
}

TEST_CASE("index identities")
{
    auto& alg = transfer_algebra();
    const AnsatzWord none;
    // beta (WD)_{0,1} = alpha beta W_{0,0}
    CHECK(P("b") * alg.wx(AnsatzWord::parse("D"), 0, 1) == P("a b"));
    // beta D_{0,1,0,0} = delta E_{0,0,0,0}
    CHECK(P("b") * transfer_entry(Letter::D, 0, 1, 0, 0) == P("d") * transfer_entry(Letter::E, 0, 0, 0, 0));
    CHECK(alg.wx(none, 0, 0) == GfPoly::one());

    for (unsigned which : {1U, 2U}) {
        const VerifyReport rep = verify_identity(which, 4);
        CHECK(rep.ok());
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("report json")
{
    const Json ok = report_to_json(verify_gma_family("I", 2));
    CHECK(ok["status"] == "ok");
    CHECK(ok["family"] == "I");

    VerifyReport bad;
    bad.family = "II";
    bad.max_len = 1;
    bad.failure = Counterexample{"D", "", std::array<long, 4>{0, 1, -1, -1}, P("a"), P("b")};
    const Json j = report_to_json(bad);
    CHECK(j["status"] == "fail");
    CHECK(j.dump().find("\"lhs\":\"a\"") != std::string::npos);
}
