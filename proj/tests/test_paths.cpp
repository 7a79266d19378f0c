#include <doctest.h>

#include <algorithm>
#include <set>

#include "snakechar/paths.hpp"

using namespace snakechar;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

const PlanePoint* point_at(const Path& p, int x) {
    for (const auto& pt : p.pts)
        if (pt.x == x) return &pt;
    return nullptr;
}

}  // namespace

TEST_CASE("EpsRational order") {
    CHECK(EpsRational{1, -1} < EpsRational{1, 0});
    CHECK(EpsRational{1, 1} < EpsRational{2, -1});
    CHECK(EpsRational{3, 1} > EpsRational{3, 0});
}

TEST_CASE("path counts type A are binomials") {
    for (int n = 1; n <= 5; ++n) {
        const auto cd = cartan_data({Kind::A, n});
        for (int i = 1; i <= n; ++i) {
            const int k = (i + 1) % 2;  // parity making (i,k) admissible
            CHECK(gen_paths(cd, i, k).size() == std::size_t(binom(n + 1, i)));
        }
    }
}

// frozen from tools/oracles/path_oracle.py
TEST_CASE("path counts type B") {
    const auto b4 = cartan_data({Kind::B, 4});
    CHECK(gen_paths(b4, 1, 0).size() == 9);
    CHECK(gen_paths(b4, 2, 0).size() == 37);
    CHECK(gen_paths(b4, 2, 4).size() == 37);
    CHECK(gen_paths(b4, 4, 1).size() == 16);
    const auto b5 = cartan_data({Kind::B, 5});
    CHECK(gen_paths(b5, 4, 0).size() == 386);
    CHECK(gen_paths(b5, 5, 5).size() == 32);
    CHECK(gen_paths(b5, 4, 10).size() == 386);
}

TEST_CASE("gen_paths rejects off-grid starts") {
    const auto a4 = cartan_data({Kind::A, 4});
    CHECK_THROWS_AS(gen_paths(a4, 2, 2), std::domain_error);
    const auto b4 = cartan_data({Kind::B, 4});
    CHECK_THROWS_AS(gen_paths(b4, 4, 0), std::domain_error);
    CHECK_THROWS_AS(gen_paths(b4, 1, 1), std::domain_error);
}

TEST_CASE("path sets are sorted and duplicate-free, monomials injective") {
    const std::tuple<LieType, int, int> cases[] = {
        {{Kind::A, 4}, 2, 1}, {{Kind::B, 4}, 1, 0}, {{Kind::B, 4}, 2, 0}, {{Kind::B, 4}, 4, 1}};
    for (auto [t, i, k] : cases) {
        const auto cd = cartan_data(t);
        const auto ps = gen_paths(cd, i, k);
        CHECK(std::is_sorted(ps.begin(), ps.end()));
        CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
        std::set<YMonomial> monos;
        for (const auto& p : ps) monos.insert(path_monomial(p));
        CHECK(monos.size() == ps.size());
    }
}

TEST_CASE("type A path geometry") {
    const auto a4 = cartan_data({Kind::A, 4});
    for (const auto& p : gen_paths(a4, 2, 1)) {
        REQUIRE(p.pts.size() == 6);
        CHECK(p.arm_count() == 1);
        CHECK(p.arm_span(0) == std::pair{0, 6});
        CHECK(p.pts.front() == PlanePoint{0, {3, 0}});  // y_0 = i + k
        CHECK(p.pts.back() == PlanePoint{5, {4, 0}});   // y_{N+1} = N + 1 - i + k
        for (int x = 0; x < 6; ++x) CHECK(p.pts[x].x == x);
        for (int x = 1; x < 6; ++x)
            CHECK(std::abs(p.pts[x].y.m - p.pts[x - 1].y.m) == 1);
    }
}

TEST_CASE("type B spin path geometry") {
    const auto b4 = cartan_data({Kind::B, 4});
    for (const auto& p : gen_paths(b4, 4, 1)) {
        REQUIRE(p.pts.size() == 5);
        CHECK(p.arm_count() == 1);
        const auto& last = p.pts.back();
        CHECK(last.x == 7);             // arm ends on the wall x = 2N-1
        CHECK(std::abs(last.y.e) == 1); // endpoint carries the half-step marker
    }
    // two-arm paths meet the wall with the a-arm endpoint strictly below
    // (larger y than) the abar-arm endpoint
    for (const auto& p : gen_paths(b4, 2, 0)) {
        CHECK(p.arm_count() == 2);
        const auto [a0, a1] = p.arm_span(0);
        const auto [b0, b1] = p.arm_span(1);
        CHECK(a1 - a0 == 5);
        CHECK(b1 - b0 == 5);
        CHECK(p.pts[a1 - 1].x == 7);
        CHECK(p.pts[b1 - 1].x == 7);
        CHECK(p.pts[a1 - 1].y > p.pts[b1 - 1].y);
    }
}

TEST_CASE("highest and lowest path monomials") {
    const auto a4 = cartan_data({Kind::A, 4});
    CHECK(path_monomial(extremal_path(a4, 2, 1, Extremal::highest)) == YMonomial::var(2, 1));
    // lowest of P_{i,k} in type A_N carries Y_{N+1-i, k+N+1}^{-1}
    CHECK(path_monomial(extremal_path(a4, 2, 1, Extremal::lowest)) == YMonomial::var(3, 6, -1));

    const auto b4 = cartan_data({Kind::B, 4});
    for (auto [i, k] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{4, 1}}) {
        CHECK(path_monomial(extremal_path(b4, i, k, Extremal::highest)) == YMonomial::var(i, k));
        // lowest in type B_N carries Y_{i, k+4N-2}^{-1}
        CHECK(path_monomial(extremal_path(b4, i, k, Extremal::lowest)) ==
              YMonomial::var(i, k + 14, -1));
    }
}

TEST_CASE("extremal paths have one-sided corner sets") {
    const std::tuple<LieType, int, int> cases[] = {
        {{Kind::A, 4}, 2, 1}, {{Kind::B, 4}, 1, 0}, {{Kind::B, 4}, 4, 1}};
    for (auto [t, i, k] : cases) {
        const auto cd = cartan_data(t);
        const auto hi = corners(extremal_path(cd, i, k, Extremal::highest));
        CHECK(hi.lower.empty());
        CHECK(hi.upper == std::vector<std::pair<int, int>>{{i, k}});
        const auto lo = corners(extremal_path(cd, i, k, Extremal::lowest));
        CHECK(lo.upper.empty());
        CHECK(lo.lower.size() == 1);
    }
}

// the A4 path through (0,3),(1,4),(2,3),(3,4),(4,5),(5,4) carries
// Y_{1,4}^-1 Y_{2,3} Y_{4,5}^-1
TEST_CASE("corner monomial of a named A4 path") {
    const auto a4 = cartan_data({Kind::A, 4});
    Path p;
    p.lie_type = {Kind::A, 4};
    p.i = 2;
    p.k = 1;
    const int ys[] = {3, 4, 3, 4, 5, 4};
    for (int x = 0; x < 6; ++x) p.pts.push_back({x, {ys[x], 0}});
    const auto ps = gen_paths(a4, 2, 1);
    CHECK(std::find(ps.begin(), ps.end(), p) != ps.end());
    CHECK(path_monomial(p) ==
          YMonomial({{1, 4, -1}, {2, 3, 1}, {4, 5, -1}}));
    const auto cs = corners(p);
    CHECK(cs.upper == std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(cs.lower == std::vector<std::pair<int, int>>{{1, 4}, {4, 5}});
    CHECK(cs.has_upper(2, 3));
    CHECK_FALSE(cs.has_lower(2, 3));
}

// frozen from tools/oracles/path_oracle.py
TEST_CASE("corner sets of a named B4 spin path") {
    const auto b4 = cartan_data({Kind::B, 4});
    const YMonomial want({{1, 6, 1}, {2, 8, -1}, {3, 6, 1}, {4, 7, -1}});
    int hits = 0;
    for (const auto& p : gen_paths(b4, 4, 1)) {
        if (path_monomial(p) != want) continue;
        ++hits;
        const auto cs = corners(p);
        CHECK(cs.upper == std::vector<std::pair<int, int>>{{1, 6}, {3, 6}});
        CHECK(cs.lower == std::vector<std::pair<int, int>>{{2, 8}, {4, 7}});
    }
    CHECK(hits == 1);
}

// frozen from tools/oracles/path_oracle.py
TEST_CASE("each fundamental set has one dominant and one anti-dominant monomial") {
    const std::tuple<LieType, int, int> cases[] = {
        {{Kind::A, 4}, 2, 1}, {{Kind::B, 4}, 1, 0}, {{Kind::B, 4}, 4, 1}, {{Kind::B, 4}, 2, 0}};
    for (auto [t, i, k] : cases) {
        const auto cd = cartan_data(t);
        int doms = 0, antis = 0;
        for (const auto& p : gen_paths(cd, i, k)) {
            const auto cls = classify(cd, path_monomial(p));
            doms += cls.dominant;
            antis += cls.anti_dominant;
        }
        CHECK(doms == 1);
        CHECK(antis == 1);
    }
}

// lowering the highest path of P_{2,1} (A_4) at (2,2) multiplies the
// monomial by A_{2,2}^{-1} = Y_{2,3}^{-1} Y_{2,1}^{-1} Y_{1,2} Y_{3,2}
TEST_CASE("lowering move, worked example") {
    const auto a4 = cartan_data({Kind::A, 4});
    const Path hi = extremal_path(a4, 2, 1, Extremal::highest);
    const auto moved = try_move(hi, 2, 2, MoveDir::lower);
    REQUIRE(moved.has_value());
    const int ys[] = {3, 2, 3, 2, 3, 4};
    for (int x = 0; x < 6; ++x) CHECK(moved->pts[x] == PlanePoint{x, {ys[x], 0}});
    CHECK(path_monomial(*moved) == YMonomial({{1, 2, 1}, {2, 3, -1}, {3, 2, 1}}));
    CHECK(path_monomial(*moved) ==
          path_monomial(hi) * a_monomial(a4, 2, 2).inverse());
    // raising undoes it
    const auto back = try_move(*moved, 2, 2, MoveDir::raise);
    REQUIRE(back.has_value());
    CHECK(*back == hi);
}

TEST_CASE("moves that cannot apply") {
    const auto a4 = cartan_data({Kind::A, 4});
    const Path hi = extremal_path(a4, 2, 1, Extremal::highest);
    CHECK_FALSE(try_move(hi, 2, 3, MoveDir::lower).has_value());  // off the W grid
    CHECK_FALSE(try_move(hi, 1, 1, MoveDir::lower).has_value());  // no upper corner below
    CHECK_FALSE(try_move(hi, 2, 2, MoveDir::raise).has_value());  // nothing to raise
}

TEST_CASE("step lemma on small fundamentals") {
    // every applicable move multiplies the monomial by A_{j,l}^{-+1} and lands
    // inside the same path set; lower/raise at the same index are inverse
    const std::tuple<LieType, int, int> cases[] = {
        {{Kind::A, 3}, 2, 1}, {{Kind::B, 3}, 1, 0}, {{Kind::B, 3}, 3, 1}, {{Kind::B, 3}, 2, 2}};
    for (auto [t, i, k] : cases) {
        const auto cd = cartan_data(t);
        const auto ps = gen_paths(cd, i, k);
        int applied = 0;
        for (const auto& p : ps) {
            for (int j = 1; j <= cd.N(); ++j) {
                for (int l = k - 2; l <= k + 4 * cd.N(); ++l) {
                    if (!in_W(cd, j, l)) continue;
                    for (MoveDir dir : {MoveDir::lower, MoveDir::raise}) {
                        const auto q = try_move(p, j, l, dir);
                        if (!q) continue;
                        ++applied;
                        REQUIRE(std::binary_search(ps.begin(), ps.end(), *q));
                        const YMonomial a = a_monomial(cd, j, l);
                        CHECK(path_monomial(*q) ==
                              path_monomial(p) * (dir == MoveDir::lower ? a.inverse() : a));
                        const auto r = try_move(
                            *q, j, l, dir == MoveDir::lower ? MoveDir::raise : MoveDir::lower);
                        REQUIRE(r.has_value());
                        CHECK(*r == p);
                    }
                }
            }
        }
        CHECK(applied > 0);
    }
}

TEST_CASE("column extents cover exactly the visited columns") {
    const auto b4 = cartan_data({Kind::B, 4});
    const Path p = extremal_path(b4, 2, 0, Extremal::highest);
    const auto ext = column_extents(p);
    std::set<int> xs;
    for (const auto& pt : p.pts) xs.insert(pt.x);
    REQUIRE(ext.size() == xs.size());
    for (const auto& ce : ext) {
        CHECK(xs.count(ce.x) == 1);
        CHECK(ce.lo <= ce.hi);
    }
    // the wall column x=7 is the only one both arms visit, and they differ by 2e
    const auto wall = std::find_if(ext.begin(), ext.end(), [](auto& c) { return c.x == 7; });
    REQUIRE(wall != ext.end());
    CHECK(wall->lo == EpsRational{3, -1});
    CHECK(wall->hi == EpsRational{3, 1});
}

// frozen from tools/oracles/path_oracle.py (strictly-above pair examples)
TEST_CASE("strictly-above on B4 spin pairs") {
    const auto b4 = cartan_data({Kind::B, 4});
    const auto p1s = gen_paths(b4, 4, 1);
    const auto p2s = gen_paths(b4, 4, 3);
    const YMonomial want_in({{1, 8, 1}, {2, 12, -1}, {4, 9, 1}, {4, 11, 1}, {3, 12, -1}});
    const YMonomial want_out({{1, 8, 1}, {3, 12, -1}, {4, 11, 1}, {4, 15, -1}});
    int in_ok = 0, out_ok = 0;
    for (const auto& p : p1s) {
        for (const auto& q : p2s) {
            const YMonomial prod = path_monomial(p) * path_monomial(q);
            if (prod == want_in && strictly_above(p, q)) ++in_ok;
            if (prod == want_out && strictly_above(p, q)) ++out_ok;
        }
    }
    CHECK(in_ok == 1);   // the product survives the non-overlap filter
    CHECK(out_ok == 0);  // this one is killed by it
}

TEST_CASE("strictly-above basics") {
    const auto a4 = cartan_data({Kind::A, 4});
    const auto ps = gen_paths(a4, 2, 1);
    for (const auto& p : ps) CHECK_FALSE(strictly_above(p, p));
    const auto qs = gen_paths(a4, 2, 5);
    int above = 0;
    for (const auto& p : ps)
        for (const auto& q : qs) {
            if (strictly_above(p, q)) {
                ++above;
                CHECK_FALSE(strictly_above(q, p));
            }
        }
    CHECK(above > 0);
}

TEST_CASE("top_path is the pointwise minimum inside the same set") {
    const std::tuple<LieType, int, int> cases[] = {{{Kind::A, 4}, 2, 1}, {{Kind::B, 3}, 2, 0}};
    for (auto [t, i, k] : cases) {
        const auto cd = cartan_data(t);
        const auto ps = gen_paths(cd, i, k);
        for (std::size_t a = 0; a < ps.size(); a += 3) {
            for (std::size_t b = 0; b < ps.size(); b += 5) {
                const Path m = top_path(ps[a], ps[b]);
                CHECK(top_path(ps[b], ps[a]) == m);
                REQUIRE(std::binary_search(ps.begin(), ps.end(), m));
                REQUIRE(m.pts.size() == ps[a].pts.size());
                for (std::size_t t2 = 0; t2 < m.pts.size(); ++t2)
                    CHECK(m.pts[t2].y == std::min(ps[a].pts[t2].y, ps[b].pts[t2].y));
            }
        }
        // idempotent
        CHECK(top_path(ps[0], ps[0]) == ps[0]);
    }
}
