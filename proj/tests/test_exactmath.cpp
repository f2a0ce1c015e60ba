#include "staircase/enumerate.hpp"
#include "staircase/errors.hpp"
#include "staircase/json_io.hpp"
#include "staircase/poly.hpp"

#include <doctest.h>

#include <random>

using namespace staircase;

namespace {

GfPoly P(const char* text) { return parse_poly(text); }

GfPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> terms(0, 4), exp(0, 2), coeff(-5, 5);
    GfPoly p;
    for (int t = terms(rng); t > 0; --t) {
        Monomial::Exponents e{};
        for (auto& x : e) {
            x = static_cast<std::uint16_t>(exp(rng));
        }
        p.add_term(Monomial(e), coeff(rng));
    }
    return p;
}

Point random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    Point pt;
    for (auto& v : pt) {
        v = BigRational(num(rng), den(rng));
        v.canonicalize();
    }
    return pt;
}

// independent evaluation: repeated multiplication, no pow helper
BigRational naive_eval(const Monomial& m, const Point& pt)
{
    BigRational v = 1;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        for (unsigned k = 0; k < m[i]; ++k) {
            v *= pt[i];
        }
    }
    return v;
}

} // namespace

TEST_CASE("rationals parse strictly and print reduced")
{
    CHECK(parse_rational("1/2") == BigRational(1, 2));
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("0")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK(pow(BigRational(2, 3), -2) == BigRational(9, 4));
    CHECK_THROWS_AS(pow(BigRational(0), -1), DegeneracyError);
    CHECK(binomial(6, 2) == 15);
    CHECK(factorial(5) == 120);
}

TEST_CASE("poly_add")
{
    const GfPoly sum = GfPoly::var(Var::Alpha) + GfPoly::var(Var::Beta);
    CHECK(sum.size() == 2);
    CHECK(sum.coefficient(Monomial::of(Var::Alpha)) == 1);
    CHECK(sum.coefficient(Monomial::of(Var::Beta)) == 1);

    GfPoly zero = GfPoly::var(Var::Alpha) - GfPoly::var(Var::Alpha);
    CHECK(zero.is_zero());
    CHECK(to_string(zero) == "0");

    CHECK(gf_total(1) == P("a") + P("b") + P("g") + P("d"));
    CHECK(to_string(gf_total(1)) == "a + b + g + d");
}

TEST_CASE("poly_mul")
{
    CHECK(P("a") * P("b") == P("a b"));
    CHECK((P("a") + P("d")) * (P("a") + P("d")) == P("a^2 + 2*a d + d^2"));
    CHECK(to_string(P("d") * P("d") * P("q")) == "d^2 q");
    CHECK((P("a - b") * P("a + b")) == P("a^2 - b^2"));
    CHECK((P("3*a") * GfPoly()).is_zero());
}

TEST_CASE("poly_eval")
{
    Point pt{BigRational(1, 2), BigRational(1, 3), BigRational(1, 5), BigRational(1, 7), 0, 0};
    CHECK(evaluate(P("a + b + g + d"), pt) == BigRational(247, 210));

    Point origin{};
    CHECK(evaluate(P("7 + a^2 q - 3*u"), origin) == 7);
    CHECK(evaluate(P("a b"), origin) == 0);

    // Z_2 against the sum of the 32 weights, each evaluated independently
    Point at{BigRational(1, 2), BigRational(2, 3), BigRational(1, 5), BigRational(3, 7), BigRational(1, 11),
             BigRational(5, 6)};
    BigRational brute = 0;
    std::size_t count = 0;
    for_each_tableau(2, [&](const StaircaseTableau& t) {
        brute += naive_eval(weight(t), at);
        ++count;
    });
    CHECK(count == 32);
    CHECK(evaluate(gf_total(2), at) == brute);
}

TEST_CASE("text form is canonical")
{
    CHECK(to_string(P("u + a")) == "a + u");
    CHECK(to_string(P("b^2 + a^3 + a b")) == "a^3 + a b + b^2");
    CHECK(to_string(P("2*a^2 d - d^2 q")) == "2*a^2 d - d^2 q");
    CHECK(to_string(P("-a")) == "-a");
    CHECK(to_string(P("5")) == "5");
    CHECK(P("a^2 + a^2") == P("2*a^2"));
    CHECK_THROWS_AS(P("x"), ParseError);
    CHECK_THROWS_AS(P("a^"), ParseError);
    CHECK_THROWS_AS(P("a +"), ParseError);
}

TEST_CASE("graded-lex order is a strict total order")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> exp(0, 3);
    auto mono = [&] {
        Monomial::Exponents e{};
        for (auto& x : e) {
            x = static_cast<std::uint16_t>(exp(rng));
        }
        return Monomial(e);
    };
    const CanonicalOrder less;
    for (int i = 0; i < 2000; ++i) {
        const Monomial x = mono(), y = mono(), z = mono();
        CHECK_FALSE(less(x, x));
        if (x != y) {
            CHECK(less(x, y) != less(y, x));
        }
        if (less(x, y) && less(y, z)) {
            CHECK(less(x, z));
        }
        if (x.degree() > y.degree()) {
            CHECK(less(x, y));
        }
    }
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 1000; ++i) {
        const GfPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == GfPoly());
        REQUIRE(a * GfPoly::one() == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const GfPoly a = random_poly(rng), b = random_poly(rng);
        const Point pt = random_point(rng);
        REQUIRE(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
        REQUIRE(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    }
}

TEST_CASE("serialization roundtrips")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const GfPoly p = random_poly(rng) * random_poly(rng);
        REQUIRE(parse_poly(to_string(p)) == p);
        REQUIRE(poly_from_json(poly_to_json(p)) == p);
    }
    const Json j = poly_to_json(P("2*a^2 d - q"));
    CHECK(j.dump() == R"([{"exp":[2,0,0,1,0,0],"coeff":"2"},{"exp":[0,0,0,0,1,0],"coeff":"-1"}])");
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"exp":[1,2],"coeff":"1"}])")), ParseError);
}

TEST_CASE("u specialisation and homogenisation")
{
    const GfPoly z2 = gf_total(2);
    const GfPoly z2_u1 = set_u_one(z2);
    CHECK(z2_u1 == gf_total(2, false));
    CHECK(homogenize_u(z2_u1, 3) == z2);
    CHECK(set_u_one(P("a u^2 + a")) == P("2*a"));
    CHECK_THROWS_AS(homogenize_u(P("a^2"), 1), DomainError);
}

TEST_CASE("renaming variables")
{
    std::array<Var, kVarCount> swap{Var::Delta, Var::Gamma, Var::Beta, Var::Alpha, Var::U, Var::Q};
    CHECK(rename_vars(P("a^2 q + b"), swap) == P("d^2 u + g"));
}
