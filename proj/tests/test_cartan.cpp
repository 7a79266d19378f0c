#include <doctest.h>

#include <numeric>

#include "snakechar/cartan.hpp"

using namespace snakechar;

namespace {
Weight w(std::vector<int> c) { return Weight{std::move(c)}; }
}  // namespace

TEST_CASE("cartan matrix type A") {
    const auto cd = cartan_data({Kind::A, 3});
    CHECK(cd.cartan == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(cd.r == std::vector<int>{1, 1, 1});
    CHECK(cd.r_check == 1);
    CHECK(cd.symmetrized == cd.cartan);  // D = identity in type A
}

TEST_CASE("cartan matrix type B") {
    const auto cd = cartan_data({Kind::B, 2});
    CHECK(cd.cartan == std::vector<std::vector<int>>{{2, -1}, {-2, 2}});
    CHECK(cd.r == std::vector<int>{2, 1});
    CHECK(cd.r_check == 2);
    CHECK(cd.symmetrized == std::vector<std::vector<int>>{{4, -2}, {-2, 2}});
}

TEST_CASE("cartan matrix shape, all ranks") {
    for (Kind kind : {Kind::A, Kind::B}) {
        for (int n = (kind == Kind::B ? 2 : 1); n <= 8; ++n) {
            const auto cd = cartan_data({kind, n});
            REQUIRE(cd.N() == n);
            for (int i = 1; i <= n; ++i) {
                CHECK(cd.C(i, i) == 2);
                for (int j = 1; j <= n; ++j) {
                    if (std::abs(i - j) > 1) CHECK(cd.C(i, j) == 0);
                    // B = DC stays symmetric
                    CHECK(cd.symmetrized[i - 1][j - 1] == cd.symmetrized[j - 1][i - 1]);
                    CHECK(cd.symmetrized[i - 1][j - 1] == cd.ri(i) * cd.C(i, j));
                }
            }
            // the single short-root asymmetry sits at the last node in type B
            if (kind == Kind::B) {
                CHECK(cd.C(n, n - 1) == -2);
                CHECK(cd.C(n - 1, n) == -1);
                CHECK(cd.ri(n) == 1);
                for (int i = 1; i < n; ++i) CHECK(cd.ri(i) == 2);
            }
        }
    }
}

TEST_CASE("invalid lie types rejected") {
    CHECK_THROWS_AS(cartan_data({Kind::A, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cartan_data({Kind::B, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cartan_data({Kind::B, -2}), std::invalid_argument);
}

TEST_CASE("alpha in the omega basis") {
    const auto a3 = cartan_data({Kind::A, 3});
    CHECK(a3.alpha(1) == w({2, -1, 0}));
    CHECK(a3.alpha(2) == w({-1, 2, -1}));
    const auto b2 = cartan_data({Kind::B, 2});
    CHECK(b2.alpha(1) == w({2, -2}));
    CHECK(b2.alpha(2) == w({-1, 2}));
    CHECK(b2.omega(2) == w({0, 1}));
    CHECK(b2.zero_weight().is_zero());
}

TEST_CASE("simple reflections") {
    const auto a2 = cartan_data({Kind::A, 2});
    // s_1(omega_1) = -omega_1 + omega_2
    CHECK(simple_reflection(a2, 1, a2.omega(1)) == w({-1, 1}));
    CHECK(simple_reflection(a2, 1, a2.omega(2)) == a2.omega(2));

    const auto b2 = cartan_data({Kind::B, 2});
    // s_2(omega_2) = omega_1 - omega_2
    CHECK(simple_reflection(b2, 2, b2.omega(2)) == w({1, -1}));
    CHECK(simple_reflection(b2, 2, b2.omega(1)) == b2.omega(1));
}

TEST_CASE("simple reflections are involutions") {
    for (LieType t : {LieType{Kind::A, 4}, LieType{Kind::B, 4}}) {
        const auto cd = cartan_data(t);
        for (int i = 1; i <= cd.N(); ++i) {
            for (int j = 1; j <= cd.N(); ++j) {
                const Weight o = cd.omega(j);
                const Weight once = simple_reflection(cd, i, o);
                CHECK(simple_reflection(cd, i, once) == o);
                // s_i fixes omega_j for j != i
                if (i != j) CHECK(once == o);
            }
            // s_i(alpha_i) = -alpha_i
            const Weight a = cd.alpha(i);
            Weight neg = cd.zero_weight();
            neg -= a;
            CHECK(simple_reflection(cd, i, a) == neg);
        }
    }
}

TEST_CASE("weight arithmetic") {
    const auto cd = cartan_data({Kind::A, 2});
    Weight x = cd.omega(1) + cd.omega(2);
    CHECK(x == w({1, 1}));
    x -= cd.alpha(1);
    CHECK(x == w({-1, 2}));
    CHECK_FALSE(x.is_zero());
    CHECK((x - x).is_zero());
}

TEST_CASE("node range checking") {
    const auto cd = cartan_data({Kind::B, 3});
    CHECK_THROWS_AS(cd.check_node(0), std::domain_error);
    CHECK_THROWS_AS(cd.check_node(4), std::domain_error);
    CHECK_NOTHROW(cd.check_node(3));
}
