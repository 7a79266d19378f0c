#include "snakechar/qchar.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

namespace snakechar {

namespace {

bool term_less(const std::pair<YMonomial, int>& a, const YMonomial& b) { return a.first < b; }

// Deterministic per-variable hash coefficients make the monomial hash additive
// in the exponents: hash(a*b) = hash(a) + hash(b) (wrapping), so equal
// monomials always hash equal.  Collisions are resolved exactly downstream.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t var_coeff(int i, int k) {
    return splitmix64((std::uint64_t(std::uint32_t(i)) << 32) ^ std::uint64_t(std::uint32_t(k)));
}

std::uint64_t mono_hash(const YMonomial& m) {
    std::uint64_t h = 0;
    for (const auto& f : m.factors()) h += std::uint64_t(std::int64_t(f.e)) * var_coeff(f.i, f.k);
    return h;
}

}  // namespace

int QCharacter::multiplicity(const YMonomial& m) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), m, term_less);
    return it != terms.end() && it->first == m ? it->second : 0;
}

std::int64_t QCharacter::total_terms() const {
    std::int64_t n = 0;
    for (const auto& [m, c] : terms) n += c;
    return n;
}

QCharacter character_from_monomials(const CartanData& cd, std::vector<YMonomial> monomials,
                                    std::vector<std::pair<int, int>> snake) {
    QCharacter ch;
    ch.lie_type = cd.lie_type;
    ch.snake = std::move(snake);
    std::sort(monomials.begin(), monomials.end());
    for (std::size_t s = 0; s < monomials.size();) {
        std::size_t e = s;
        while (e < monomials.size() && monomials[e] == monomials[s]) ++e;
        ch.terms.emplace_back(std::move(monomials[s]), int(e - s));
        s = e;
    }
    std::optional<YMonomial> dom;
    int ndom = 0;
    for (const auto& [m, c] : ch.terms)
        if (classify(cd, m).dominant) {
            dom = m;
            ndom += c;
        }
    if (ndom == 1) ch.highest = *dom;
    return ch;
}

std::vector<std::vector<Path>> snake_path_sets(const CartanData& cd, const Snake& s) {
    std::vector<std::vector<Path>> pages;
    pages.reserve(s.points.size());
    for (auto [i, k] : s.points) pages.push_back(gen_paths(cd, i, k));
    return pages;
}

namespace {

struct PageData {
    std::vector<std::vector<ColumnExtent>> ext;  // per path
    std::vector<YMonomial> mono;                 // per path
};

// DFS over non-overlapping tuples with the first-page index restricted to
// [first_lo, first_hi).  colmax keeps, per plane column, the largest y of the
// chosen paths; a candidate is admitted iff every shared column stays strictly
// above ("above" = smaller y).  This running max is exactly the all-pairs
// condition because max(chosen) < candidate.lo implies it pairwise.
template <typename Leaf>
void tuple_dfs(const std::vector<PageData>& pages, int first_lo, int first_hi, Leaf&& leaf) {
    const int depth = int(pages.size());
    int xmax = 0;
    for (const auto& pg : pages)
        for (const auto& pe : pg.ext)
            for (const auto& c : pe) xmax = std::max(xmax, c.x);
    std::vector<char> has(xmax + 1, 0);
    std::vector<EpsRational> mx(xmax + 1);
    std::vector<int> idx(depth, 0);
    struct Saved {
        int x;
        char has;
        EpsRational mx;
    };
    std::vector<std::vector<Saved>> saved(depth);

    auto admit = [&](const std::vector<ColumnExtent>& ce) {
        for (const auto& c : ce)
            if (has[c.x] && !(mx[c.x] < c.lo)) return false;
        return true;
    };
    auto push = [&](int d, const std::vector<ColumnExtent>& ce) {
        auto& sv = saved[d];
        sv.clear();
        for (const auto& c : ce) {
            sv.push_back({c.x, has[c.x], mx[c.x]});
            has[c.x] = 1;
            mx[c.x] = c.hi;
        }
    };
    auto pop = [&](int d) {
        for (auto it = saved[d].rbegin(); it != saved[d].rend(); ++it) {
            has[it->x] = it->has;
            mx[it->x] = it->mx;
        }
    };

    // explicit stack recursion
    std::function<void(int)> rec = [&](int d) {
        if (d == depth) {
            leaf(idx);
            return;
        }
        const int lo = d == 0 ? first_lo : 0;
        const int hi = d == 0 ? first_hi : int(pages[d].ext.size());
        for (int p = lo; p < hi; ++p) {
            const auto& ce = pages[d].ext[p];
            if (!admit(ce)) continue;
            idx[d] = p;
            push(d, ce);
            rec(d + 1);
            pop(d);
        }
    };
    rec(0);
}

std::vector<PageData> prepare_pages(const std::vector<std::vector<Path>>& pages) {
    std::vector<PageData> pd(pages.size());
    for (std::size_t t = 0; t < pages.size(); ++t) {
        pd[t].ext.reserve(pages[t].size());
        pd[t].mono.reserve(pages[t].size());
        for (const auto& p : pages[t]) {
            pd[t].ext.push_back(column_extents(p));
            pd[t].mono.push_back(path_monomial(p));
        }
    }
    return pd;
}

int thread_count() {
    if (const char* env = std::getenv("SNAKE_QCHAR_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    return 1;
}

}  // namespace

void for_each_tuple(const std::vector<std::vector<Path>>& pages,
                    const std::function<void(const std::vector<int>&)>& cb) {
    if (pages.empty()) return;
    const auto pd = prepare_pages(pages);
    tuple_dfs(pd, 0, int(pages[0].size()), cb);
}

std::uint64_t count_tuples(const std::vector<std::vector<Path>>& pages) {
    std::uint64_t n = 0;
    for_each_tuple(pages, [&](const std::vector<int>&) { ++n; });
    return n;
}

QCharacter snake_qchar(const CartanData& cd, const Snake& s) {
    if (s.lie_type != cd.lie_type)
        throw std::invalid_argument("snake_qchar: snake/Cartan type mismatch");
    const SnakeClass sc = classify_snake(cd, s.points);
    if (!sc.is_snake) throw std::domain_error("snake_qchar: points do not form a snake");

    const auto pages = snake_path_sets(cd, s);
    const auto pd = prepare_pages(pages);
    const int first = int(pages[0].size());

    auto run = [&](int lo, int hi, std::vector<YMonomial>& out) {
        tuple_dfs(pd, lo, hi, [&](const std::vector<int>& idx) {
            // tuples are shallow; the product is cheap to form at the leaf
            YMonomial m = pd[0].mono[idx[0]];
            for (std::size_t t = 1; t < idx.size(); ++t) m *= pd[t].mono[idx[t]];
            out.push_back(std::move(m));
        });
    };

    const int nthreads = std::min(thread_count(), first > 0 ? first : 1);
    std::vector<YMonomial> all;
    if (nthreads <= 1) {
        run(0, first, all);
    } else {
        std::vector<std::vector<YMonomial>> parts(nthreads);
        std::vector<std::thread> workers;
        workers.reserve(nthreads);
        for (int w = 0; w < nthreads; ++w) {
            const int lo = int(std::int64_t(first) * w / nthreads);
            const int hi = int(std::int64_t(first) * (w + 1) / nthreads);
            workers.emplace_back([&, lo, hi, w] { run(lo, hi, parts[w]); });
        }
        for (auto& t : workers) t.join();
        std::size_t total = 0;
        for (const auto& p : parts) total += p.size();
        all.reserve(total);
        for (auto& p : parts)
            for (auto& m : p) all.push_back(std::move(m));
    }

    QCharacter ch = character_from_monomials(cd, std::move(all), s.points);
    YMonomial top;
    for (auto [i, k] : s.points) top *= YMonomial::var(i, k);
    ch.highest = top;
    assert(ch.contains(top));
    return ch;
}

CharacterShape character_shape(const CartanData& cd, const QCharacter& M) {
    CharacterShape sh;
    sh.thin = true;
    int ndom = 0, nanti = 0;
    for (const auto& [m, c] : M.terms) {
        if (c != 1) sh.thin = false;
        const Classification cl = classify(cd, m);
        if (cl.dominant) ndom += c;
        if (cl.anti_dominant) nanti += c;
    }
    sh.special = ndom == 1;
    sh.anti_special = nanti == 1;
    return sh;
}

TupleMoveResult tuple_move(const std::vector<Path>& tuple, int j, int l, MoveDir dir) {
    int found = -1;
    std::optional<Path> moved;
    for (std::size_t t = 0; t < tuple.size(); ++t) {
        if (auto q = try_move(tuple[t], j, l, dir)) {
            assert(found < 0 && "at most one component is movable at a given (j,l)");
            found = int(t);
            moved = std::move(q);
        }
    }
    if (found < 0) return {};
    TupleMoveResult res;
    res.tuple = tuple;
    res.tuple[std::size_t(found)] = *moved;
    res.component = found;
    res.status = TupleMoveStatus::Moved;
    for (int s = 0; s < int(tuple.size()); ++s) {
        if (s == found) continue;
        const bool ok = s < found ? strictly_above(res.tuple[s], res.tuple[found])
                                  : strictly_above(res.tuple[found], res.tuple[s]);
        if (!ok) {
            res.status = TupleMoveStatus::WouldOverlap;
            break;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Theorem-A verifier

namespace {

// Condition (ii): no monomial outside M may have two distinct A-lifts into M.
// Every potential violation hub is reachable as m * A_{i,a}^{-1} for some
// m in M, so all "down edges" are enumerated and duplicate targets detected
// via the additive hash (equal monomials hash equal, so no violation can be
// missed); hash groups are then confirmed exactly.  The candidate window
// [lo_i - r_i, hi_i + r_i] around the node support of M is exhaustive: for a
// further a, m * A_{i,a}^{-1} carries Y_{i,a+-r_i}^{-1} noise at least one
// index of which lies strictly outside the support and cannot be cancelled by
// any other single A-variable, so a second lift cannot land in M.
struct NodeCands {
    std::vector<int> a;
    std::vector<std::uint64_t> hash;
    std::vector<YMonomial> ainv;
};

struct Edge {
    std::uint64_t h;
    std::uint32_t m;
    std::uint8_t node;
    std::uint16_t aidx;
};

// a * b == x without materializing the product (factor lists sorted by (i,k))
bool product_equals(const YMonomial& a, const YMonomial& b, const YMonomial& x) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const auto& fx = x.factors();
    std::size_t ia = 0, ib = 0, ix = 0;
    while (ia < fa.size() || ib < fb.size()) {
        int ci, ck, ce;
        if (ia < fa.size() && ib < fb.size()) {
            const std::pair<int, int> ka{fa[ia].i, fa[ia].k}, kb{fb[ib].i, fb[ib].k};
            if (ka == kb) {
                ci = ka.first, ck = ka.second, ce = fa[ia].e + fb[ib].e;
                ++ia, ++ib;
            } else if (ka < kb) {
                ci = ka.first, ck = ka.second, ce = fa[ia].e;
                ++ia;
            } else {
                ci = kb.first, ck = kb.second, ce = fb[ib].e;
                ++ib;
            }
        } else if (ia < fa.size()) {
            ci = fa[ia].i, ck = fa[ia].k, ce = fa[ia].e;
            ++ia;
        } else {
            ci = fb[ib].i, ck = fb[ib].k, ce = fb[ib].e;
            ++ib;
        }
        if (ce == 0) continue;
        if (ix >= fx.size() || fx[ix].i != ci || fx[ix].k != ck || fx[ix].e != ce) return false;
        ++ix;
    }
    return ix == fx.size();
}

bool resolve_edges(const QCharacter& M, const std::vector<NodeCands>& cands,
                   std::vector<Edge>& ed, std::optional<CondIIWitness>& wit) {
    std::sort(ed.begin(), ed.end(), [](const Edge& a, const Edge& b) { return a.h < b.h; });
    for (std::size_t s = 0; s < ed.size();) {
        std::size_t e = s;
        while (e < ed.size() && ed[e].h == ed[s].h) ++e;
        if (e - s >= 2) {
            // exact confirmation of a hash group: bucket the edges by their
            // product monomial, materializing each distinct product only once
            std::vector<std::pair<YMonomial, std::vector<std::pair<int, int>>>> buckets;
            for (std::size_t t = s; t < e; ++t) {
                const Edge& E = ed[t];
                const YMonomial& m = M.terms[E.m].first;
                const YMonomial& ai = cands[E.node].ainv[E.aidx];
                const std::pair<int, int> lift{int(E.node), cands[E.node].a[E.aidx]};
                bool placed = false;
                for (auto& [bx, lifts] : buckets)
                    if (product_equals(m, ai, bx)) {
                        lifts.push_back(lift);
                        placed = true;
                        break;
                    }
                if (!placed) buckets.push_back({m * ai, {lift}});
            }
            for (auto& [bx, lifts] : buckets) {
                std::sort(lifts.begin(), lifts.end());
                lifts.erase(std::unique(lifts.begin(), lifts.end()), lifts.end());
                if (lifts.size() >= 2 && M.multiplicity(bx) == 0) {
                    wit = CondIIWitness{bx, lifts[0], lifts[1]};
                    return false;
                }
            }
        }
        s = e;
    }
    return true;
}

bool check_cond_ii(const CartanData& cd, const QCharacter& M,
                   std::optional<CondIIWitness>& wit) {
    const int N = cd.N();
    const std::size_t nm = M.terms.size();
    if (nm == 0) return true;

    std::vector<int> lo(N + 1, INT_MAX), hi(N + 1, INT_MIN);
    for (const auto& [m, c] : M.terms)
        for (const auto& f : m.factors()) {
            lo[f.i] = std::min(lo[f.i], f.k);
            hi[f.i] = std::max(hi[f.i], f.k);
        }

    std::vector<NodeCands> cands(N + 1);
    std::uint64_t cand_total = 0;
    for (int i = 1; i <= N; ++i) {
        if (lo[i] > hi[i]) continue;  // no node support: no second lift possible
        const int r = cd.ri(i);
        for (int a = lo[i] - r; a <= hi[i] + r; ++a) {
            if (!in_W(cd, i, a)) continue;
            const YMonomial am = a_monomial(cd, i, a);
            cands[i].a.push_back(a);
            cands[i].hash.push_back(mono_hash(am));
            cands[i].ainv.push_back(am.inverse());
        }
        cand_total += cands[i].a.size();
        assert(i <= 255 && cands[i].a.size() <= 65535);  // Edge field widths
    }

    std::vector<std::uint64_t> th(nm);
    for (std::size_t t = 0; t < nm; ++t) th[t] = mono_hash(M.terms[t].first);

    const std::uint64_t edge_total = nm * cand_total;
    if (edge_total <= 4'000'000) {
        std::vector<Edge> ed;
        ed.reserve(edge_total);
        for (std::size_t t = 0; t < nm; ++t)
            for (int i = 1; i <= N; ++i)
                for (std::size_t q = 0; q < cands[i].a.size(); ++q)
                    ed.push_back({th[t] - cands[i].hash[q], std::uint32_t(t), std::uint8_t(i),
                                  std::uint16_t(q)});
        return resolve_edges(M, cands, ed, wit);
    }

    // Large instance: four partitions by the top hash bits; per partition a
    // 2-bit saturating counting filter marks hash buckets seen twice, a second
    // sweep collects the survivors, and the survivor groups are confirmed
    // exactly.  The filter only ever over-approximates, so nothing is missed.
    constexpr int kFilterBits = 27;
    constexpr std::uint64_t kMask = (1ull << kFilterBits) - 1;
    std::vector<std::uint8_t> filt(std::size_t(1) << (kFilterBits - 2));
    for (int g = 0; g < 4; ++g) {
        std::fill(filt.begin(), filt.end(), 0);
        for (std::size_t t = 0; t < nm; ++t) {
            const std::uint64_t hm = th[t];
            for (int i = 1; i <= N; ++i)
                for (const std::uint64_t ha : cands[i].hash) {
                    const std::uint64_t h = hm - ha;
                    if (int(h >> 62) != g) continue;
                    const std::uint64_t b = h & kMask;
                    std::uint8_t& byte = filt[b >> 2];
                    const int sh = int(b & 3) * 2;
                    if (((byte >> sh) & 3u) < 3u) byte = std::uint8_t(byte + (1u << sh));
                }
        }
        std::vector<Edge> ed;
        for (std::size_t t = 0; t < nm; ++t) {
            const std::uint64_t hm = th[t];
            for (int i = 1; i <= N; ++i) {
                const auto& hashes = cands[i].hash;
                for (std::size_t q = 0; q < hashes.size(); ++q) {
                    const std::uint64_t h = hm - hashes[q];
                    if (int(h >> 62) != g) continue;
                    const std::uint64_t b = h & kMask;
                    if (((filt[b >> 2] >> (int(b & 3) * 2)) & 3u) >= 2u)
                        ed.push_back({h, std::uint32_t(t), std::uint8_t(i), std::uint16_t(q)});
                }
            }
        }
        if (!resolve_edges(M, cands, ed, wit)) return false;
    }
    return true;
}

}  // namespace

YMonomial coset_representative(const CartanData& cd, const YMonomial& m, int i) {
    const int r = cd.ri(i), two_r = 2 * r;
    std::map<int, int> u;
    for (const auto& f : m.factors())
        if (f.i == i) u[f.k] = f.e;
    if (u.empty()) return m;

    const auto mod = [](int x, int q) { return ((x % q) + q) % q; };
    std::map<int, std::vector<int>> classes;  // residue mod 2r -> sorted indices
    for (const auto& [k, e] : u) classes[mod(k, two_r)].push_back(k);

    YMonomial result = m;
    for (const auto& [c, ks] : classes) {
        if (!in_W(cd, i, c + r)) continue;  // off-grid class: inert under legal A's
        std::vector<std::pair<int, int>> peels;  // (l, count)
        int carry = 0;
        for (int k = ks.back(); k > c; k -= two_r) {
            const auto it = u.find(k);
            const int cur = (it != u.end() ? it->second : 0) - carry;
            if (cur != 0) peels.emplace_back(k - r, cur);
            carry = cur;
        }
        carry = 0;
        for (int k = ks.front(); k < c; k += two_r) {
            const auto it = u.find(k);
            const int cur = (it != u.end() ? it->second : 0) - carry;
            if (cur != 0) peels.emplace_back(k + r, cur);
            carry = cur;
        }
        for (const auto& [l, n] : peels) {
            const YMonomial am = a_monomial(cd, i, l);
            std::vector<YFactor> fs;
            for (const auto& f : am.factors()) fs.push_back({f.i, f.k, -n * f.e});
            result *= YMonomial(std::move(fs));
        }
    }
    return result;
}

namespace {

// Condition (iii): each A_{i,.}-coset of M must be exactly the simple sl2
// character of one of its i-dominant members.  Cosets are grouped hash-first:
// the additive monomial hash of a coset representative follows directly from
// the peel recurrence without building the representative, which is
// materialized only inside multi-member hash runs to confirm the grouping
// exactly.
bool check_cond_iii(const CartanData& cd, const QCharacter& M,
                    std::optional<CondIIIWitness>& wit) {
    const int N = cd.N();
    const std::size_t nm = M.terms.size();
    if (nm == 0) return true;

    std::vector<std::uint64_t> th(nm);
    for (std::size_t t = 0; t < nm; ++t) th[t] = mono_hash(M.terms[t].first);

    std::vector<int> lo(N + 1, INT_MAX), hi(N + 1, INT_MIN);
    for (const auto& [m, c] : M.terms)
        for (const auto& f : m.factors()) {
            lo[f.i] = std::min(lo[f.i], f.k);
            hi[f.i] = std::max(hi[f.i], f.k);
        }

    std::vector<std::pair<int, int>> u;  // node-i (k, e) factors of one term
    // sl2 expansions are invariant under a common index shift, so they are
    // cached keyed by the candidate normalized to smallest index 0 and
    // compared through the shift
    std::map<Sl2Monomial, std::vector<Sl2Monomial>> expansions;
    std::vector<Sl2Monomial> actual, candidates;
    for (int i = 1; i <= N; ++i) {
        const int r = cd.ri(i), two_r = 2 * r;
        if (lo[i] > hi[i]) {
            // no node-i support anywhere: every coset is a trivial singleton,
            // matching the trivial sl2 module exactly when its multiplicity is 1
            for (std::size_t t = 0; t < nm; ++t)
                if (M.terms[t].second != 1) {
                    const Sl2Monomial id{};
                    wit = CondIIIWitness{
                        i, M.terms[t].first, {id},
                        std::vector<Sl2Monomial>(std::size_t(M.terms[t].second), id)};
                    return false;
                }
            continue;
        }

        // lazily built A_{i,l} factor lists and hashes over the peel window;
        // peels walk from the support all the way to the residue-class base
        // next to 0, so the window must reach 0 even when the support does not
        const int base = std::min(lo[i], 0) - two_r;
        const std::size_t ncache = std::size_t(std::max(hi[i], 0) + two_r - base) + 1;
        std::vector<char> af_ok(ncache, 0);
        std::vector<std::uint64_t> ah(ncache, 0);
        std::vector<std::vector<YFactor>> af(ncache);
        auto ensure = [&](int l) -> std::size_t {
            const std::size_t q = std::size_t(l - base);
            assert(q < ncache);
            if (!af_ok[q]) {
                const YMonomial am = a_monomial(cd, i, l);
                af[q].assign(am.factors().begin(), am.factors().end());
                ah[q] = mono_hash(am);
                af_ok[q] = 1;
            }
            return q;
        };

        auto load_u = [&](const YMonomial& m) {
            u.clear();
            for (const auto& f : m.factors())
                if (f.i == i) u.emplace_back(f.k, f.e);
        };
        const auto mod = [](int x, int q) { return ((x % q) + q) % q; };
        // visit every peel (l, count) of the loaded node-i exponents
        auto for_each_peel = [&](auto&& fn) {
            int mods[4];
            int nmods = 0;
            for (const auto& [k, e] : u) {
                const int c = mod(k, two_r);
                bool seen = false;
                for (int t = 0; t < nmods; ++t) seen = seen || mods[t] == c;
                if (!seen) {
                    assert(nmods < 4);
                    mods[nmods++] = c;
                }
            }
            auto exp_at = [&](int k) {
                const auto it =
                    std::lower_bound(u.begin(), u.end(), std::pair<int, int>{k, INT_MIN});
                return it != u.end() && it->first == k ? it->second : 0;
            };
            for (int t = 0; t < nmods; ++t) {
                const int c = mods[t];
                if (!in_W(cd, i, c + r)) continue;  // off-grid class: inert
                int kmin = INT_MAX, kmax = INT_MIN;
                for (const auto& [k, e] : u)
                    if (mod(k, two_r) == c) {
                        kmin = std::min(kmin, k);
                        kmax = std::max(kmax, k);
                    }
                int carry = 0;
                for (int k = kmax; k > c; k -= two_r) {
                    const int cur = exp_at(k) - carry;
                    if (cur != 0) fn(k - r, cur);
                    carry = cur;
                }
                carry = 0;
                for (int k = kmin; k < c; k += two_r) {
                    const int cur = exp_at(k) - carry;
                    if (cur != 0) fn(k + r, cur);
                    carry = cur;
                }
            }
        };

        std::vector<char> bare(nm, 0);  // term has no node-i factors
        std::vector<std::pair<std::uint64_t, std::uint32_t>> order(nm);
        for (std::size_t t = 0; t < nm; ++t) {
            load_u(M.terms[t].first);
            std::uint64_t h = th[t];
            if (u.empty())
                bare[t] = 1;
            else
                for_each_peel(
                    [&](int l, int n) { h -= std::uint64_t(std::int64_t(n)) * ah[ensure(l)]; });
            order[t] = {h, std::uint32_t(t)};
        }
        std::sort(order.begin(), order.end());

        auto rep_exact = [&](std::uint32_t t) {
            const YMonomial& m = M.terms[t].first;
            load_u(m);
            if (u.empty()) return m;
            std::vector<YFactor> fs(m.factors().begin(), m.factors().end());
            for_each_peel([&](int l, int n) {
                for (const auto& f : af[ensure(l)]) fs.push_back({f.i, f.k, -n * f.e});
            });
            return YMonomial(std::move(fs));
        };

        auto beta_of = [&](std::uint32_t t) {
            load_u(M.terms[t].first);
            std::vector<std::pair<int, int>> sc;
            sc.reserve(u.size());
            for (const auto& [k, e] : u) {
                assert(k % r == 0);
                sc.emplace_back(k / r, e);
            }
            return Sl2Monomial(std::move(sc));
        };
        auto shifted = [](const Sl2Monomial& m, int d) {
            std::vector<std::pair<int, int>> f(m.factors());
            for (auto& [k, e] : f) k += d;
            return Sl2Monomial(std::move(f));
        };
        // b == shifted(a, d), checked without materializing the shift
        auto equals_shifted = [](const Sl2Monomial& a, const Sl2Monomial& b, int d) {
            const auto& fa = a.factors();
            const auto& fb = b.factors();
            if (fa.size() != fb.size()) return false;
            for (std::size_t j = 0; j < fa.size(); ++j)
                if (fa[j].first + d != fb[j].first || fa[j].second != fb[j].second) return false;
            return true;
        };
        auto slice_ok = [&](const std::vector<std::uint32_t>& group) {
            actual.clear();
            candidates.clear();
            for (std::uint32_t t : group) {
                const int mult = M.terms[t].second;
                Sl2Monomial beta = beta_of(t);
                for (int c = 1; c < mult; ++c) actual.push_back(beta);
                if (beta.dominant()) candidates.push_back(beta);
                actual.push_back(std::move(beta));
            }
            std::sort(actual.begin(), actual.end());
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            const std::vector<Sl2Monomial>* first_norm = nullptr;
            int first_d = 0;
            for (const auto& cand : candidates) {
                const int d = cand.factors().empty() ? 0 : cand.factors().front().first;
                const Sl2Monomial key = d == 0 ? cand : shifted(cand, -d);
                auto it = expansions.find(key);
                if (it == expansions.end()) {
                    auto ex = sl2_simple_qchar(key);
                    std::sort(ex.begin(), ex.end());
                    it = expansions.emplace(key, std::move(ex)).first;
                }
                const auto& norm = it->second;
                if (!first_norm) {
                    first_norm = &norm;
                    first_d = d;
                }
                if (norm.size() != actual.size()) continue;
                bool eq = true;
                for (std::size_t j = 0; eq && j < norm.size(); ++j)
                    eq = equals_shifted(norm[j], actual[j], d);
                if (eq) return true;
            }
            std::vector<Sl2Monomial> first_expected;
            if (first_norm)
                for (const auto& x : *first_norm) first_expected.push_back(shifted(x, first_d));
            wit = CondIIIWitness{i, M.terms[group[0]].first, first_expected, actual};
            return false;
        };

        for (std::size_t s = 0; s < nm;) {
            std::size_t e = s;
            while (e < nm && order[e].first == order[s].first) ++e;
            if (e - s == 1) {
                // a singleton coset passes exactly when it is trivial: a lone
                // nonempty beta can never equal a full sl2 string character
                const std::uint32_t t = order[s].second;
                if (!bare[t] || M.terms[t].second != 1)
                    if (!slice_ok({t})) return false;
            } else {
                // materialize representatives to confirm the hash run exactly
                std::vector<YMonomial> reps(e - s);
                for (std::size_t q = s; q < e; ++q) reps[q - s] = rep_exact(order[q].second);
                std::vector<char> used(e - s, 0);
                for (std::size_t a0 = s; a0 < e; ++a0) {
                    if (used[a0 - s]) continue;
                    std::vector<std::uint32_t> group;
                    for (std::size_t b0 = a0; b0 < e; ++b0) {
                        if (used[b0 - s]) continue;
                        if (reps[b0 - s] == reps[a0 - s]) {
                            group.push_back(order[b0].second);
                            used[b0 - s] = 1;
                        }
                    }
                    std::sort(group.begin(), group.end());
                    if (!slice_ok(group)) return false;
                }
            }
            s = e;
        }
    }
    return true;
}

}  // namespace

TheoremAReport verify_theorem_a(const CartanData& cd, const QCharacter& M) {
    TheoremAReport rep;
    for (const auto& [m, c] : M.terms)
        if (classify(cd, m).dominant)
            for (int t = 0; t < c; ++t) rep.dominants.push_back(m);
    rep.cond_i = rep.dominants.size() == 1;
    rep.cond_ii = check_cond_ii(cd, M, rep.ii_witness);
    rep.cond_iii = check_cond_iii(cd, M, rep.iii_witness);
    return rep;
}

RestrictedCharacter restricted_character(const CartanData& cd, const QCharacter& M) {
    RestrictedCharacter rc;
    std::vector<std::pair<Weight, int>> ws;
    ws.reserve(M.terms.size());
    for (const auto& [m, c] : M.terms) ws.emplace_back(weight_of(cd, m), c);
    std::sort(ws.begin(), ws.end());
    for (std::size_t s = 0; s < ws.size();) {
        std::size_t e = s;
        int total = 0;
        while (e < ws.size() && ws[e].first == ws[s].first) total += ws[e++].second;
        rc.weights.emplace_back(ws[s].first, total);
        s = e;
    }
    rc.weyl_invariant = true;
    for (int i = 1; i <= cd.N() && rc.weyl_invariant; ++i) {
        std::vector<std::pair<Weight, int>> refl;
        refl.reserve(rc.weights.size());
        for (const auto& [w, c] : rc.weights) refl.emplace_back(simple_reflection(cd, i, w), c);
        std::sort(refl.begin(), refl.end());
        // merge adjacent equal weights before comparing
        std::vector<std::pair<Weight, int>> merged;
        for (std::size_t s = 0; s < refl.size();) {
            std::size_t e = s;
            int total = 0;
            while (e < refl.size() && refl[e].first == refl[s].first) total += refl[e++].second;
            merged.emplace_back(refl[s].first, total);
            s = e;
        }
        if (merged != rc.weights) rc.weyl_invariant = false;
    }
    return rc;
}

}  // namespace snakechar
