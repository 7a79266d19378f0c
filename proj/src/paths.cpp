#include "snakechar/paths.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace snakechar {

int Path::arm_count() const {
    if (lie_type.kind == Kind::A) return 1;
    return static_cast<int>(pts.size()) == lie_type.rank + 1 ? 1 : 2;
}

std::pair<int, int> Path::arm_span(int a) const {
    if (lie_type.kind == Kind::A) return {0, static_cast<int>(pts.size())};
    const int n = lie_type.rank;
    return a == 0 ? std::pair{0, n + 1} : std::pair{n + 1, 2 * n + 2};
}

bool CornerSet::has_upper(int i, int k) const {
    return std::binary_search(upper.begin(), upper.end(), std::pair{i, k});
}
bool CornerSet::has_lower(int i, int k) const {
    return std::binary_search(lower.begin(), lower.end(), std::pair{i, k});
}

namespace {

// All 2^n arms of the type-B spin set P_{n,l} (l odd): n-1 steps of +-2,
// then the +-(1+eps) endpoint step.  The residue of l mod 4 selects which
// half-plane the arm occupies.
std::vector<std::vector<PlanePoint>> spin_arms(int n, int l) {
    assert(l % 2 != 0);
    std::vector<int> xs(n + 1);
    if (((l % 4) + 4) % 4 == 3)
        for (int r = 0; r < n; ++r) xs[r] = 2 * r;
    else
        for (int r = 0; r < n; ++r) xs[r] = 4 * n - 2 - 2 * r;
    xs[n] = 2 * n - 1;

    std::vector<std::vector<PlanePoint>> arms;
    arms.reserve(std::size_t{1} << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<PlanePoint> pts(n + 1);
        int y = l + 2 * n - 1;
        pts[0] = {xs[0], {y, 0}};
        for (int r = 0; r + 1 < n; ++r) {
            y += (mask >> r) & 1 ? 2 : -2;
            pts[r + 1] = {xs[r + 1], {y, 0}};
        }
        const int s = (mask >> (n - 1)) & 1 ? 1 : -1;
        pts[n] = {xs[n], {y + s, s}};
        arms.push_back(std::move(pts));
    }
    return arms;
}

}  // namespace

std::vector<Path> gen_paths(const CartanData& cd, int i, int k) {
    if (!in_X(cd, i, k))
        throw std::domain_error("gen_paths: (" + std::to_string(i) + "," +
                                std::to_string(k) + ") not in X");
    const int n = cd.N();
    std::vector<Path> out;
    if (cd.lie_type.kind == Kind::A) {
        for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
            int y = i + k;
            std::vector<PlanePoint> pts(n + 2);
            pts[0] = {0, {y, 0}};
            for (int x = 1; x <= n + 1; ++x) {
                y += (mask >> (x - 1)) & 1 ? 1 : -1;
                pts[x] = {x, {y, 0}};
            }
            if (y == n + 1 - i + k) out.push_back({cd.lie_type, i, k, std::move(pts)});
        }
    } else if (i == n) {
        for (auto& arm : spin_arms(n, k)) out.push_back({cd.lie_type, i, k, std::move(arm)});
    } else {
        const int d = 2 * n - 2 * i - 1;
        const auto left = spin_arms(n, k - d);
        const auto right = spin_arms(n, k + d);
        for (const auto& a : left)
            for (const auto& b : right) {
                if (!(a[n].y > b[n].y)) continue;  // a_N - abar_N = (0, y), y > 0
                std::vector<PlanePoint> pts = a;
                pts.insert(pts.end(), b.begin(), b.end());
                out.push_back({cd.lie_type, i, k, std::move(pts)});
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CornerSet corners(const Path& p) {
    CornerSet cs;
    const int n = p.lie_type.rank;
    if (p.lie_type.kind == Kind::A) {
        for (int r = 1; r <= n; ++r) {
            const int y0 = p.pts[r - 1].y.m, y1 = p.pts[r].y.m, y2 = p.pts[r + 1].y.m;
            if (y0 == y1 + 1 && y2 == y1 + 1) cs.upper.emplace_back(r, y1);
            if (y0 == y1 - 1 && y2 == y1 - 1) cs.lower.emplace_back(r, y1);
        }
    } else {
        std::vector<EpsRational> ends;
        for (int a = 0; a < p.arm_count(); ++a) {
            const auto [lo, hi] = p.arm_span(a);
            for (int r = 1; r + 1 < hi - lo; ++r) {
                const EpsRational ya = p.pts[lo + r - 1].y, yb = p.pts[lo + r].y,
                                  yc = p.pts[lo + r + 1].y;
                if (yb < ya && yb < yc) cs.upper.emplace_back(r, yb.m);
                if (yb > ya && yb > yc) cs.lower.emplace_back(r, yb.m);
            }
            ends.push_back(p.pts[hi - 1].y);
        }
        const auto has_end = [&](int m, int e) {
            return std::find(ends.begin(), ends.end(), EpsRational{m, e}) != ends.end();
        };
        for (const auto& [m, e] : ends) {
            if (e == -1 && !has_end(m, 1)) cs.upper.emplace_back(n, m);
            if (e == 1 && !has_end(m, -1)) cs.lower.emplace_back(n, m);
        }
    }
    std::sort(cs.upper.begin(), cs.upper.end());
    std::sort(cs.lower.begin(), cs.lower.end());
    return cs;
}

YMonomial path_monomial(const Path& p) {
    const CornerSet cs = corners(p);
    std::vector<YFactor> f;
    f.reserve(cs.upper.size() + cs.lower.size());
    for (const auto& [i, k] : cs.upper) f.push_back({i, k, 1});
    for (const auto& [i, k] : cs.lower) f.push_back({i, k, -1});
    return YMonomial(std::move(f));
}

Path extremal_path(const CartanData& cd, int i, int k, Extremal which) {
    // small sets at desk scale: select by the defining corner property
    for (const auto& p : gen_paths(cd, i, k)) {
        const CornerSet cs = corners(p);
        if (which == Extremal::highest && cs.lower.empty()) return p;
        if (which == Extremal::lowest && cs.upper.empty()) return p;
    }
    throw std::logic_error("extremal_path: no extremal path found");  // unreachable
}

std::optional<Path> try_move(const Path& p, int j, int l, MoveDir dir) {
    const int n = p.lie_type.rank;
    const CornerSet cs = corners(p);
    const int rj = p.lie_type.kind == Kind::A ? 1 : (j == n ? 1 : 2);
    // lowering consumes an upper corner at (j, l-r_j) and needs (j, l+r_j)
    // free; raising is the mirror image on lower corners.
    const int src = dir == MoveDir::lower ? l - rj : l + rj;
    const int blk = dir == MoveDir::lower ? l + rj : l - rj;
    if (dir == MoveDir::lower) {
        if (!cs.has_upper(j, src) || cs.has_upper(j, blk)) return std::nullopt;
    } else {
        if (!cs.has_lower(j, src) || cs.has_lower(j, blk)) return std::nullopt;
    }

    Path q = p;
    const int sign = dir == MoveDir::lower ? 1 : -1;
    if (p.lie_type.kind == Kind::A) {
        q.pts[j].y.m += 2 * sign;
        return q;
    }
    if (j == n) {
        // endpoint flip on the arm whose end realizes the corner
        for (int a = 0; a < q.arm_count(); ++a) {
            auto& end = q.pts[q.arm_span(a).second - 1].y;
            if (end.m == src && end.e == -sign) {
                end.m += 2 * sign;
                end.e = -end.e;
                assert(q.arm_count() == 1 || q.pts[n].y > q.pts[2 * n + 1].y);
                return q;
            }
        }
        return std::nullopt;  // defensive; the corner located an end above
    }
    for (int a = 0; a < q.arm_count(); ++a) {
        const auto [lo, hi] = q.arm_span(a);
        const EpsRational ya = q.pts[lo + j - 1].y;
        EpsRational& yb = q.pts[lo + j].y;
        const EpsRational yc = q.pts[lo + j + 1].y;
        const bool is_src = dir == MoveDir::lower ? (yb < ya && yb < yc && yb.m == src)
                                                  : (yb > ya && yb > yc && yb.m == src);
        if (!is_src) continue;
        yb.m += 4 * sign;
        if (j == n - 1) {  // the +-(1+eps) endpoint rides along
            auto& end = q.pts[hi - 1].y;
            end.m += 2 * sign;
            end.e = -end.e;
        }
        assert(q.arm_count() == 1 || q.pts[n].y > q.pts[2 * n + 1].y);
        return q;
    }
    return std::nullopt;  // defensive
}

std::vector<ColumnExtent> column_extents(const Path& p) {
    std::vector<ColumnExtent> out;
    out.reserve(p.pts.size());
    for (const auto& pt : p.pts) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const ColumnExtent& c) { return c.x == pt.x; });
        if (it == out.end()) out.push_back({pt.x, pt.y, pt.y});
        else {
            it->lo = std::min(it->lo, pt.y);
            it->hi = std::max(it->hi, pt.y);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ColumnExtent& a, const ColumnExtent& b) { return a.x < b.x; });
    return out;
}

bool strictly_above(const Path& p, const Path& q) {
    const auto cp = column_extents(p), cq = column_extents(q);
    auto a = cp.begin();
    auto b = cq.begin();
    while (a != cp.end() && b != cq.end()) {
        if (a->x < b->x) ++a;
        else if (b->x < a->x) ++b;
        else {
            if (!(a->hi < b->lo)) return false;
            ++a, ++b;
        }
    }
    return true;
}

Path top_path(const Path& p, const Path& q) {
    if (p.lie_type != q.lie_type || p.i != q.i || p.k != q.k)
        throw std::domain_error("top_path: paths from different P_{i,k}");
    Path out = p;
    for (std::size_t t = 0; t < out.pts.size(); ++t)
        out.pts[t].y = std::min(out.pts[t].y, q.pts[t].y);
    return out;
}

}  // namespace snakechar
