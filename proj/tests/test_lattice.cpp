#include <doctest.h>

#include <set>

#include "snakechar/lattice.hpp"

using namespace snakechar;

namespace {
YMonomial mono(std::vector<YFactor> fs) { return YMonomial(std::move(fs)); }
}  // namespace

TEST_CASE("YMonomial canonical form") {
    // unsorted input with a cancelling pair and a merge
    const YMonomial m = mono({{2, 3, 1}, {1, 0, 2}, {2, 3, -1}, {1, 4, -1}, {1, 0, 1}});
    CHECK(m.factors() == std::vector<YFactor>{{1, 0, 3}, {1, 4, -1}});
    CHECK(m.exp(1, 0) == 3);
    CHECK(m.exp(1, 4) == -1);
    CHECK(m.exp(2, 3) == 0);
    CHECK_FALSE(m.is_identity());
    CHECK((m * m.inverse()).is_identity());
    CHECK(m.str() == "Y[1,0]^3 Y[1,4]^-1");
    CHECK(m.json() == "[[1,0,3],[1,4,-1]]");
    CHECK(YMonomial().str() == "1");
    CHECK(YMonomial().json() == "[]");
    CHECK(YMonomial::var(2, 5) == mono({{2, 5, 1}}));
}

TEST_CASE("YMonomial product is commutative and cancels") {
    const YMonomial a = mono({{1, 2, 1}, {3, 0, -2}});
    const YMonomial b = mono({{3, 0, 2}, {2, 1, 1}});
    CHECK(a * b == b * a);
    CHECK((a * b).factors() == std::vector<YFactor>{{1, 2, 1}, {2, 1, 1}});
}

TEST_CASE("admissible grid X") {
    const auto a3 = cartan_data({Kind::A, 3});
    // type A: i - k odd
    CHECK(in_X(a3, 1, 0));
    CHECK(in_X(a3, 2, 1));
    CHECK_FALSE(in_X(a3, 1, 1));
    CHECK_FALSE(in_X(a3, 2, 0));

    const auto b4 = cartan_data({Kind::B, 4});
    // type B: short node odd, long nodes even
    CHECK(in_X(b4, 4, 1));
    CHECK_FALSE(in_X(b4, 4, 0));
    CHECK(in_X(b4, 2, 0));
    CHECK_FALSE(in_X(b4, 2, 1));
}

TEST_CASE("move grid W") {
    const auto a3 = cartan_data({Kind::A, 3});
    for (int i = 1; i <= 3; ++i)
        for (int k = -6; k <= 6; ++k)
            CHECK(in_W(a3, i, k) == in_X(a3, i, k - a3.ri(i)));

    const auto b4 = cartan_data({Kind::B, 4});
    // every node moves on even indices in type B
    for (int i = 1; i <= 4; ++i)
        for (int k = -6; k <= 6; ++k)
            CHECK(in_W(b4, i, k) == (k % 2 == 0));
}

TEST_CASE("subgrid X'") {
    const auto a3 = cartan_data({Kind::A, 3});
    for (int i = 1; i <= 3; ++i)
        for (int k = -8; k <= 8; ++k)
            CHECK(in_Xprime(a3, i, k) == in_X(a3, i, k));

    const auto b4 = cartan_data({Kind::B, 4});
    CHECK(in_Xprime(b4, 1, 0));       // 2*1-0 = 2 mod 4
    CHECK_FALSE(in_Xprime(b4, 1, 2));  // 2*1-2 = 0 mod 4
    CHECK(in_Xprime(b4, 2, 2));
    CHECK_FALSE(in_Xprime(b4, 2, 0));
    CHECK_FALSE(in_Xprime(b4, 4, 1));  // short node excluded entirely
    // X' is a subset of X
    for (int i = 1; i <= 4; ++i)
        for (int k = -8; k <= 8; ++k)
            if (in_Xprime(b4, i, k)) CHECK(in_X(b4, i, k));
}

TEST_CASE("iota type A is the identity") {
    const auto a3 = cartan_data({Kind::A, 3});
    CHECK(iota(a3, 2, 1) == std::pair{2, 1});
    CHECK(iota(a3, 3, 0) == std::pair{3, 0});
    CHECK_THROWS_AS(iota(a3, 1, 1), std::domain_error);
}

TEST_CASE("iota type B examples") {
    const auto b4 = cartan_data({Kind::B, 4});
    CHECK(iota(b4, 1, 0) == std::pair{2, 0});    // 2N+k-2i = 6 mod 4 != 2
    CHECK(iota(b4, 2, 0) == std::pair{10, 0});   // 2N+k-2i = 4 mod 4 != 2 -> 4N-2-2i
    CHECK(iota(b4, 3, 0) == std::pair{6, 0});    // 2N+k-2i = 2 mod 4 -> 2i
    CHECK(iota(b4, 4, 1) == std::pair{7, 1});    // short node -> 2N-1
    CHECK_THROWS_AS(iota(b4, 4, 0), std::domain_error);
}

TEST_CASE("iota is injective on X") {
    for (Kind kind : {Kind::A, Kind::B}) {
        for (int n = (kind == Kind::B ? 2 : 1); n <= 6; ++n) {
            const auto cd = cartan_data({kind, n});
            std::set<std::pair<int, int>> seen;
            for (int i = 1; i <= n; ++i)
                for (int k = -40; k <= 40; ++k)
                    if (in_X(cd, i, k)) CHECK(seen.insert(iota(cd, i, k)).second);
        }
    }
}

TEST_CASE("a_monomial examples") {
    const auto a3 = cartan_data({Kind::A, 3});
    CHECK(a_monomial(a3, 2, 0) ==
          mono({{1, 0, -1}, {2, -1, 1}, {2, 1, 1}, {3, 0, -1}}));

    const auto b4 = cartan_data({Kind::B, 4});
    // long node next to the short one picks up two short-node inverses
    CHECK(a_monomial(b4, 3, 2) ==
          mono({{2, 2, -1}, {3, 0, 1}, {3, 4, 1}, {4, 1, -1}, {4, 3, -1}}));
    // short node: r_4 = 1, single long neighbour
    CHECK(a_monomial(b4, 4, 2) == mono({{3, 2, -1}, {4, 1, 1}, {4, 3, 1}}));
    CHECK_THROWS_AS(a_monomial(b4, 3, 1), std::domain_error);  // off the move grid
}

TEST_CASE("a_monomial weight is alpha") {
    for (LieType t : {LieType{Kind::A, 4}, LieType{Kind::B, 4}}) {
        const auto cd = cartan_data(t);
        for (int j = 1; j <= cd.N(); ++j)
            for (int l = -5; l <= 5; ++l)
                if (in_W(cd, j, l)) CHECK(weight_of(cd, a_monomial(cd, j, l)) == cd.alpha(j));
    }
}

TEST_CASE("classification") {
    const auto cd = cartan_data({Kind::A, 3});
    const auto dom = classify(cd, mono({{1, 0, 2}, {2, 3, 1}}));
    CHECK(dom.dominant);
    CHECK_FALSE(dom.anti_dominant);
    for (int j = 1; j <= 3; ++j) CHECK(dom.j_dominant[j]);

    const auto anti = classify(cd, mono({{1, 0, -1}}));
    CHECK_FALSE(anti.dominant);
    CHECK(anti.anti_dominant);
    CHECK_FALSE(anti.j_dominant[1]);

    const auto mixed = classify(cd, mono({{1, 0, 1}, {2, 1, -1}}));
    CHECK_FALSE(mixed.dominant);
    CHECK_FALSE(mixed.anti_dominant);
    CHECK(mixed.j_dominant[1]);
    CHECK_FALSE(mixed.j_dominant[2]);
    CHECK(mixed.j_dominant[3]);

    const auto id = classify(cd, YMonomial());
    CHECK(id.dominant);
    CHECK(id.anti_dominant);
}

TEST_CASE("weight_of") {
    const auto cd = cartan_data({Kind::B, 3});
    CHECK(weight_of(cd, YMonomial::var(2, 0)) == cd.omega(2));
    CHECK(weight_of(cd, mono({{1, 0, 1}, {3, 1, -2}})) ==
          cd.omega(1) - cd.omega(3) - cd.omega(3));
    CHECK(weight_of(cd, YMonomial()).is_zero());
}

TEST_CASE("factor_as_A round trips") {
    for (LieType t : {LieType{Kind::A, 3}, LieType{Kind::B, 3}}) {
        const auto cd = cartan_data(t);
        // build a ratio from a known A-exponent and recover it
        AExponent ae;
        const int exps[] = {1, -2, 1};
        for (int i = 1; i <= 3; ++i) {
            int k = 2;
            while (!in_W(cd, i, k)) ++k;
            ae.terms.push_back({i, k, exps[i - 1]});
        }
        const YMonomial ratio = expand_a(cd, ae);
        const auto back = factor_as_A(cd, ratio);
        REQUIRE(back.has_value());
        CHECK(*back == ae);
        CHECK(expand_a(cd, *back) == ratio);
    }
}

TEST_CASE("factor_as_A rejects monomials outside the A-lattice") {
    const auto cd = cartan_data({Kind::A, 3});
    CHECK_FALSE(factor_as_A(cd, YMonomial::var(1, 0)).has_value());
    CHECK_FALSE(factor_as_A(cd, mono({{1, 0, 1}, {2, 1, -1}})).has_value());
    // the identity factors with the empty exponent
    const auto id = factor_as_A(cd, YMonomial());
    REQUIRE(id.has_value());
    CHECK(id->terms.empty());
}

TEST_CASE("beta projection") {
    const YMonomial m = mono({{1, 0, 1}, {2, 3, -2}, {2, 5, 1}, {3, 2, 1}});
    CHECK(beta_project(m, 2) ==
          Sl2Monomial({{3, -2}, {5, 1}}));
    CHECK(beta_project(m, 1) == Sl2Monomial({{0, 1}}));
    CHECK(beta_project(m, 4).is_identity());
}
