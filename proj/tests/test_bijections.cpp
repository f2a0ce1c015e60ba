#include "staircase/bijections.hpp"
#include "staircase/errors.hpp"
#include "staircase/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace staircase;

namespace {

StaircaseTableau seven()
{
    return parse_tableau("7\n.b..a.a\n..a..a\n....b\n.b.a\n..b\n.b\na\n");
}

} // namespace

TEST_CASE("border shapes")
{
    const BorderShape s = BorderShape::parse("VVHVHHV");
    CHECK(s.length() == 7);
    CHECK(s.row_count() == 4);
    CHECK(s.column_count() == 3);
    CHECK(s.row_lengths() == std::vector<unsigned>{3, 3, 2, 0});
    CHECK(s.column_heights() == std::vector<unsigned>{3, 3, 2});
    CHECK(s.to_string() == "VVHVHHV");
    CHECK_THROWS_AS(BorderShape::parse("VX"), ParseError);
}

TEST_CASE("smallest cases")
{
    const PermutationTableau one = parse_permutation_tableau("VH\n1\n");
    const AlternativeTableau alt = perm_to_alt(one);
    CHECK(alt.length() == 1);
    CHECK_FALSE(violation(alt));
    CHECK(alt_to_perm(alt) == one);

    StaircaseTableau a = parse_tableau("1\na\n");
    const AlternativeTableau empty = staircase_to_alt(a);
    CHECK(empty.shape.to_string() == "V");
    CHECK(empty.rows.size() == 1);
    CHECK(empty.rows[0].empty());
    CHECK(alt_to_staircase(empty) == a);

    const AlternativeTableau ab = staircase_to_alt(parse_tableau("2\n.a\nb\n"));
    CHECK(ab.length() == 2);
    for (const auto& row : ab.rows)
        for (Arrow x : row) CHECK(x == Arrow::Empty);
}

TEST_CASE("a size-7 example, cell by cell")
{
    const StaircaseTableau t = seven();
    REQUIRE(validate(t));
    const AlternativeTableau alt = staircase_to_alt(t);
    CHECK(to_text(alt) == "VVHVHHV\n<.^\n.^.\n<.\n\n");
    const PermutationTableau perm = alt_to_perm(alt);
    CHECK(to_text(perm) == "VVVHVHHV\n100\n001\n111\n01\n\n");
    CHECK(perm.length() == 8);
    CHECK(perm_to_staircase(perm) == t);
    CHECK(staircase_to_perm(t) == perm);
}

TEST_CASE("families have (n+1)! members and the maps are inverse")
{
    unsigned long fact = 1;
    for (unsigned n = 0; n <= 5; ++n) {
        fact *= n + 1;
        const auto st = gamma_delta_free_tableaux(n);
        const auto alts = alternative_tableaux(n);
        const auto perms = permutation_tableaux(n + 1);
        CHECK(st.size() == fact);
        CHECK(alts.size() == fact);
        CHECK(perms.size() == fact);

        std::set<AlternativeTableau> images;
        for (const auto& t : st) {
            const AlternativeTableau a = staircase_to_alt(t);
            CHECK_FALSE(violation(a));
            CHECK(alt_to_staircase(a) == t);
            images.insert(a);
            CHECK(staircase_to_perm(t).length() == n + 1);
        }
        CHECK(images == std::set<AlternativeTableau>(alts.begin(), alts.end()));

        std::set<PermutationTableau> perm_images;
        for (const auto& a : alts) {
            const PermutationTableau p = alt_to_perm(a);
            CHECK_FALSE(violation(p));
            CHECK(perm_to_alt(p) == a);
            perm_images.insert(p);
        }
        CHECK(perm_images.size() == fact);
        for (const auto& p : perms) CHECK(alt_to_perm(perm_to_alt(p)) == p);
    }
}

TEST_CASE("validation")
{
    // column without a 1
    CHECK(violation(parse_permutation_tableau("VH\n0\n")));
    // a 0 with a 1 above and a 1 to its left
    CHECK(violation(parse_permutation_tableau("VVHH\n11\n10\n")));
    CHECK_THROWS_AS(require_valid(parse_permutation_tableau("VH\n0\n")), ValidationError);
    // border must start with a row for permutation tableaux
    CHECK(violation(parse_permutation_tableau("HV\n\n")));

    // arrows must see only empty boxes to their left / above
    CHECK(violation(parse_alternative_tableau("VVHH\n<.\n.^\n")) == std::nullopt);
    CHECK(violation(parse_alternative_tableau("VVHH\n<.\n^.\n")));
    CHECK(violation(parse_alternative_tableau("VHH\n^<\n")));
    CHECK_THROWS_AS(parse_alternative_tableau("VH\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_permutation_tableau("VH\n11\n"), ShapeError);

    CHECK_THROWS_AS(staircase_to_alt(parse_tableau("1\ng\n")), DomainError);
    CHECK_THROWS_AS(permutation_tableaux(kMaxBijectionLength + 1), CapacityError);
}

TEST_CASE("serialization")
{
    const AlternativeTableau alt = staircase_to_alt(seven());
    CHECK(parse_alternative_tableau(to_text(alt)) == alt);
    CHECK(alternative_tableau_from_json(tableau_to_json(alt)) == alt);
    const PermutationTableau perm = alt_to_perm(alt);
    CHECK(parse_permutation_tableau(to_text(perm)) == perm);
    CHECK(permutation_tableau_from_json(tableau_to_json(perm)) == perm);
    CHECK(tableau_to_json(perm)["border"] == "VVVHVHHV");
    CHECK(arrow_char(Arrow::Up) == '^');
}
