#include "snakechar/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace snakechar {

std::vector<Letter> letter_alphabet(const CartanData& cd) {
    const int N = cd.N();
    std::vector<Letter> out;
    if (cd.lie_type.kind == Kind::A) {
        for (int a = 1; a <= N + 1; ++a) out.push_back(a);
    } else {
        for (int a = 1; a <= N; ++a) out.push_back(a);
        out.push_back(0);
        for (int a = N; a >= 1; --a) out.push_back(-a);
    }
    return out;
}

int letter_rank(const CartanData& cd, Letter a) {
    const int N = cd.N();
    if (cd.lie_type.kind == Kind::A) {
        if (a < 1 || a > N + 1)
            throw std::domain_error("letter " + std::to_string(a) + " not in alphabet");
        return a;
    }
    if (a >= 1 && a <= N) return a;
    if (a == 0) return N + 1;
    if (a <= -1 && a >= -N) return 2 * N + 2 + a;  // -N -> N+2, ..., -1 -> 2N+1
    throw std::domain_error("letter " + std::to_string(a) + " not in alphabet");
}

bool vertical_ok(const CartanData& cd, Letter a, Letter b) {
    if (cd.lie_type.kind == Kind::B && a == 0 && b == 0) return true;
    return letter_rank(cd, a) < letter_rank(cd, b);
}

bool horizontal_ok(const CartanData& cd, Letter a, Letter b) {
    if (cd.lie_type.kind == Kind::B && a == 0 && b == 0) return false;
    return letter_rank(cd, a) <= letter_rank(cd, b);
}

SkewDiagram make_diagram(const CartanData& cd, std::vector<DiagramColumn> cols) {
    std::sort(cols.begin(), cols.end(),
              [](const DiagramColumn& a, const DiagramColumn& b) { return a.col < b.col; });
    if (cols.empty()) throw std::domain_error("diagram has no columns");
    const int maxh = cd.lie_type.kind == Kind::A ? cd.N() : cd.N() - 1;
    for (std::size_t t = 0; t < cols.size(); ++t) {
        const auto& c = cols[t];
        if (c.col != int(t) + 1)
            throw std::domain_error("column indices must be contiguous from 1 (got " +
                                    std::to_string(c.col) + ")");
        if (c.height < 1)
            throw std::domain_error("column " + std::to_string(c.col) + ": empty column");
        if (c.height > maxh)
            throw std::domain_error("column " + std::to_string(c.col) + ": height " +
                                    std::to_string(c.height) + " exceeds " +
                                    std::to_string(maxh));
        if (t > 0 && c.top > cols[t - 1].top)
            throw std::domain_error("column " + std::to_string(c.col) +
                                    ": top row increases");
        if (t > 0 && c.bottom() > cols[t - 1].bottom())
            throw std::domain_error("column " + std::to_string(c.col) +
                                    ": bottom row increases");
    }
    return SkewDiagram{cd.lie_type, std::move(cols)};
}

SkewDiagram diagram_from_snake(const CartanData& cd, const Snake& s) {
    const int rv = cd.r_check;
    std::vector<DiagramColumn> cols;
    cols.reserve(s.points.size());
    for (std::size_t t = 0; t < s.points.size(); ++t) {
        const auto [i, k] = s.points[t];
        if (!in_Xprime(cd, i, k))
            throw std::domain_error("diagram_from_snake: (" + std::to_string(i) + "," +
                                    std::to_string(k) + ") not in X'");
        const int num = k + rv * (i - 1);
        assert(num % (2 * rv) == 0);
        cols.push_back({int(t) + 1, int(t) + 1 - num / (2 * rv), i});
    }
    return make_diagram(cd, std::move(cols));
}

Snake snake_from_diagram(const CartanData& cd, const SkewDiagram& d) {
    const int rv = cd.r_check;
    std::vector<std::pair<int, int>> pts;
    pts.reserve(d.cols.size());
    for (const auto& c : d.cols)
        pts.push_back({c.height, 2 * rv * (c.col - c.top) - rv * (c.height - 1)});
    const SnakeClass sc = classify_snake(cd, pts);
    assert(sc.is_snake);
    (void)sc;
    return Snake{cd.lie_type, std::move(pts)};
}

YMonomial box_monomial(const CartanData& cd, Letter a, int kk) {
    const int N = cd.N();
    (void)letter_rank(cd, a);  // validates the letter
    std::vector<YFactor> f;
    const auto add = [&](int i, int k, int e) {
        if (i >= 1 && i <= N) f.push_back({i, k, e});  // Y_0 and Y_{N+1} are 1
    };
    if (cd.lie_type.kind == Kind::A) {
        add(a - 1, a + kk, -1);
        add(a, a - 1 + kk, 1);
    } else if (a >= 1 && a <= N - 1) {
        add(a - 1, 2 * a + kk, -1);
        add(a, 2 * a - 2 + kk, 1);
    } else if (a == N) {
        add(N - 1, 2 * N + kk, -1);
        add(N, 2 * N - 3 + kk, 1);
        add(N, 2 * N - 1 + kk, 1);
    } else if (a == 0) {
        add(N, 2 * N + 1 + kk, -1);
        add(N, 2 * N - 3 + kk, 1);
    } else if (a == -N) {
        add(N, 2 * N - 1 + kk, -1);
        add(N, 2 * N + 1 + kk, -1);
        add(N - 1, 2 * N - 2 + kk, 1);
    } else {  // a = -i, 1 <= i <= N-1
        const int i = -a;
        add(i, 4 * N - 2 * i + kk, -1);
        add(i - 1, 4 * N - 2 - 2 * i + kk, 1);
    }
    return YMonomial(std::move(f));
}

YMonomial column_fill_monomial(const CartanData& cd, const DiagramColumn& dc,
                               const std::vector<Letter>& letters) {
    assert(int(letters.size()) == dc.height);
    YMonomial m;
    for (int t = 0; t < dc.height; ++t)
        m *= box_monomial(cd, letters[t], 2 * cd.r_check * (dc.col - (dc.top + t)));
    return m;
}

YMonomial tableau_monomial(const CartanData& cd, const SkewTableau& t) {
    YMonomial m;
    for (std::size_t c = 0; c < t.diagram.cols.size(); ++c)
        m *= column_fill_monomial(cd, t.diagram.cols[c], t.fill[c]);
    return m;
}

std::vector<std::vector<Letter>> column_fills(const CartanData& cd, const DiagramColumn& dc) {
    const std::vector<Letter> alpha = letter_alphabet(cd);
    std::vector<std::vector<Letter>> out;
    std::vector<Letter> cur;
    cur.reserve(dc.height);
    const std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (int(cur.size()) == dc.height) {
            out.push_back(cur);
            return;
        }
        for (std::size_t q = from; q < alpha.size(); ++q) {
            if (!cur.empty() && !vertical_ok(cd, cur.back(), alpha[q])) continue;
            cur.push_back(alpha[q]);
            // letters may repeat vertically only via the B-type (0,0) rule,
            // which vertical_ok already encodes; scan from the same rank on
            rec(q);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

// Horizontal compatibility of adjacent column fills on their shared rows.
bool fills_compatible(const CartanData& cd, const DiagramColumn& c1,
                      const std::vector<Letter>& f1, const DiagramColumn& c2,
                      const std::vector<Letter>& f2) {
    const int lo = std::max(c1.top, c2.top);
    const int hi = std::min(c1.bottom(), c2.bottom());
    for (int row = lo; row <= hi; ++row)
        if (!horizontal_ok(cd, f1[row - c1.top], f2[row - c2.top])) return false;
    return true;
}

}  // namespace

void for_each_tableau(const CartanData& cd, const SkewDiagram& d,
                      const std::function<void(const SkewTableau&)>& cb) {
    const int T = int(d.cols.size());
    std::vector<std::vector<std::vector<Letter>>> fills(T);
    for (int t = 0; t < T; ++t) fills[t] = column_fills(cd, d.cols[t]);
    SkewTableau tab{d, std::vector<std::vector<Letter>>(T)};
    const std::function<void(int)> rec = [&](int t) {
        if (t == T) {
            cb(tab);
            return;
        }
        for (const auto& f : fills[t]) {
            if (t > 0 && !fills_compatible(cd, d.cols[t - 1], tab.fill[t - 1], d.cols[t], f))
                continue;
            tab.fill[t] = f;
            rec(t + 1);
        }
    };
    rec(0);
}

std::uint64_t count_tableaux(const CartanData& cd, const SkewDiagram& d) {
    const int T = int(d.cols.size());
    std::vector<std::vector<std::vector<Letter>>> fills(T);
    for (int t = 0; t < T; ++t) fills[t] = column_fills(cd, d.cols[t]);
    std::vector<std::uint64_t> u(fills[0].size(), 1);
    for (int t = 1; t < T; ++t) {
        std::vector<std::uint64_t> v(fills[t].size(), 0);
        for (std::size_t g = 0; g < fills[t].size(); ++g)
            for (std::size_t f = 0; f < fills[t - 1].size(); ++f)
                if (u[f] &&
                    fills_compatible(cd, d.cols[t - 1], fills[t - 1][f], d.cols[t], fills[t][g]))
                    v[g] += u[f];
        u = std::move(v);
    }
    return std::accumulate(u.begin(), u.end(), std::uint64_t{0});
}

QCharacter tableaux_qchar(const CartanData& cd, const SkewDiagram& d) {
    const int T = int(d.cols.size());
    std::vector<std::vector<std::vector<Letter>>> fills(T);
    std::vector<std::vector<YMonomial>> fmono(T);
    for (int t = 0; t < T; ++t) {
        fills[t] = column_fills(cd, d.cols[t]);
        fmono[t].reserve(fills[t].size());
        for (const auto& f : fills[t])
            fmono[t].push_back(column_fill_monomial(cd, d.cols[t], f));
    }
    std::vector<YMonomial> monos;
    std::vector<int> choice(T);
    std::vector<YMonomial> prod(T + 1);
    const std::function<void(int)> rec = [&](int t) {
        if (t == T) {
            monos.push_back(prod[T]);
            return;
        }
        for (std::size_t q = 0; q < fills[t].size(); ++q) {
            if (t > 0 && !fills_compatible(cd, d.cols[t - 1], fills[t - 1][choice[t - 1]],
                                           d.cols[t], fills[t][q]))
                continue;
            choice[t] = int(q);
            prod[t + 1] = prod[t] * fmono[t][q];
            rec(t + 1);
        }
    };
    rec(0);
    return character_from_monomials(cd, std::move(monos), snake_from_diagram(cd, d).points);
}

std::string render_tableau(const CartanData& cd, const SkewTableau& t) {
    (void)cd;
    const auto& cols = t.diagram.cols;
    int rlo = cols[0].top, rhi = cols[0].bottom();
    for (const auto& c : cols) {
        rlo = std::min(rlo, c.top);
        rhi = std::max(rhi, c.bottom());
    }
    const auto cell = [&](int row, std::size_t c) -> std::string {
        if (row < cols[c].top || row > cols[c].bottom()) return ".";
        const Letter a = t.fill[c][row - cols[c].top];
        if (a < 0) return "b" + std::to_string(-a);
        return std::to_string(a);
    };
    std::size_t width = 1;
    for (int row = rlo; row <= rhi; ++row)
        for (std::size_t c = 0; c < cols.size(); ++c) width = std::max(width, cell(row, c).size());
    std::string out;
    for (int row = rlo; row <= rhi; ++row) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string s = cell(row, c);
            if (c) out += ' ';
            out += std::string(width - s.size(), ' ');
            out += s;
        }
        out += '\n';
    }
    return out;
}

KosReport kos_check(const CartanData& cd, const SkewDiagram& d, std::uint64_t direct_limit) {
    KosReport rep;
    const Snake s = snake_from_diagram(cd, d);
    const auto pages = snake_path_sets(cd, s);
    const int T = int(d.cols.size());

    std::vector<std::vector<std::vector<Letter>>> fills(T);
    std::vector<std::vector<YMonomial>> fmono(T), pmono(T);
    std::vector<std::vector<int>> f2p(T);  // bijection by matching monomials
    rep.per_column_bijection = true;
    for (int t = 0; t < T && rep.per_column_bijection; ++t) {
        fills[t] = column_fills(cd, d.cols[t]);
        for (const auto& f : fills[t]) fmono[t].push_back(column_fill_monomial(cd, d.cols[t], f));
        for (const auto& p : pages[t]) pmono[t].push_back(path_monomial(p));
        if (fmono[t].size() != pmono[t].size()) {
            rep.per_column_bijection = false;
            rep.detail = "column " + std::to_string(t + 1) + ": " +
                         std::to_string(fmono[t].size()) + " fills vs " +
                         std::to_string(pmono[t].size()) + " paths";
            break;
        }
        std::vector<int> fi(fmono[t].size()), pi(pmono[t].size());
        std::iota(fi.begin(), fi.end(), 0);
        std::iota(pi.begin(), pi.end(), 0);
        std::sort(fi.begin(), fi.end(),
                  [&](int a, int b) { return fmono[t][a] < fmono[t][b]; });
        std::sort(pi.begin(), pi.end(),
                  [&](int a, int b) { return pmono[t][a] < pmono[t][b]; });
        f2p[t].assign(fmono[t].size(), -1);
        for (std::size_t q = 0; q < fi.size(); ++q) {
            if (fmono[t][fi[q]] != pmono[t][pi[q]] ||
                (q + 1 < fi.size() && fmono[t][fi[q]] == fmono[t][fi[q + 1]])) {
                rep.per_column_bijection = false;
                rep.detail = "column " + std::to_string(t + 1) +
                             ": monomial multisets differ or repeat";
                break;
            }
            f2p[t][fi[q]] = pi[q];
        }
    }
    if (!rep.per_column_bijection) return rep;

    rep.adjacency_preserved = true;
    std::vector<std::vector<std::vector<char>>> compat(std::max(T - 1, 0));
    for (int t = 0; t + 1 < T && rep.adjacency_preserved; ++t) {
        compat[t].assign(fills[t].size(), std::vector<char>(fills[t + 1].size(), 0));
        for (std::size_t f = 0; f < fills[t].size(); ++f)
            for (std::size_t g = 0; g < fills[t + 1].size(); ++g) {
                const bool ct = fills_compatible(cd, d.cols[t], fills[t][f], d.cols[t + 1],
                                                 fills[t + 1][g]);
                const bool cp =
                    strictly_above(pages[t][f2p[t][f]], pages[t + 1][f2p[t + 1][g]]);
                if (ct != cp) {
                    rep.adjacency_preserved = false;
                    rep.detail = "columns " + std::to_string(t + 1) + "/" +
                                 std::to_string(t + 2) + ": compatibility mismatch at fills " +
                                 std::to_string(f) + "," + std::to_string(g);
                    break;
                }
                compat[t][f][g] = ct;
            }
    }
    if (!rep.adjacency_preserved) return rep;

    // chain counts, each side over its own relation
    const auto chain_count = [&](bool tableau_side) {
        std::vector<std::uint64_t> u(fills[0].size(), 1);
        for (int t = 1; t < T; ++t) {
            std::vector<std::uint64_t> v(fills[t].size(), 0);
            for (std::size_t g = 0; g < fills[t].size(); ++g)
                for (std::size_t f = 0; f < fills[t - 1].size(); ++f) {
                    const bool edge =
                        tableau_side
                            ? bool(compat[t - 1][f][g])
                            : strictly_above(pages[t - 1][f2p[t - 1][f]], pages[t][f2p[t][g]]);
                    if (edge) v[g] += u[f];
                }
            u = std::move(v);
        }
        return std::accumulate(u.begin(), u.end(), std::uint64_t{0});
    };
    rep.tableau_count = chain_count(true);
    rep.tuple_count = chain_count(false);
    rep.equal = rep.tableau_count == rep.tuple_count;

    if (rep.tableau_count <= direct_limit && rep.tuple_count <= direct_limit) {
        rep.direct = true;
        const QCharacter qa = snake_qchar(cd, s);        // all-pairs tuple DFS
        const QCharacter qb = tableaux_qchar(cd, d);
        rep.direct_equal = qa.terms == qb.terms;
        if (std::uint64_t(qa.total_terms()) != rep.tuple_count) {
            rep.direct_equal = false;
            rep.detail = "all-pairs tuple count disagrees with chain count";
        }
        rep.equal = rep.equal && rep.direct_equal;
        if (!rep.direct_equal && rep.detail.empty())
            rep.detail = "materialized characters differ";
    }
    return rep;
}

}  // namespace snakechar
