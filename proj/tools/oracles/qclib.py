"""Brute-force reference implementations of the path / tableau combinatorics.

Used by the oracle scripts in this directory to generate the frozen expected
values asserted in the C++ unit tests.  Everything here is a direct, naive
transcription of the defining rules, written independently of the C++ library
so the two can cross-check each other.

Conventions:
  * node indices 1..N; in type B node N is the short node
  * a Y-monomial is a dict {(i, k): exponent} with no zero entries
  * a path is a tuple of (x, (m, e)) points where the y-value m + e*eps is a
    formal infinitesimal pair compared lexicographically, e in {-1, 0, +1}
"""

import itertools
from functools import reduce

# --------------------------------------------------------------- Cartan data


def cartan_matrix(t, n):
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = -1
            C[i + 1][i] = -1
    if t == 'B':
        C[n - 1][n - 2] = -2  # short node N: C_{N,N-1} = -2
    return C


def rvec(t, n):
    return [1] * n if t == 'A' else [2] * (n - 1) + [1]


def rvee(t):
    return 1 if t == 'A' else 2


def in_X(t, n, i, k):
    assert 1 <= i <= n
    if t == 'A':
        return (i - k) % 2 == 1
    return k % 2 == (1 if i == n else 0)


def in_W(t, n, i, k):
    return in_X(t, n, i, k - rvec(t, n)[i - 1])


def in_Xprime(t, n, i, k):
    if t == 'A':
        return in_X(t, n, i, k)
    return i < n and (2 * i - k) % 4 == 2


def iota(t, n, i, k):
    assert in_X(t, n, i, k)
    if t == 'A':
        return (i, k)
    if i == n:
        return (2 * n - 1, k)
    if (2 * n + k - 2 * i) % 4 == 2:
        return (2 * i, k)
    return (4 * n - 2 - 2 * i, k)


# ----------------------------------------------------------------- monomials


def mclean(d):
    return {key: e for key, e in d.items() if e != 0}


def mmul(*ms):
    out = {}
    for m in ms:
        for key, e in m.items():
            out[key] = out.get(key, 0) + e
    return mclean(out)


def minv(m):
    return {key: -e for key, e in m.items()}


def mkey(m):
    return tuple(sorted(m.items()))


def mstr(m):
    if not m:
        return "1"
    parts = []
    for (i, k), e in sorted(m.items()):
        parts.append(f"Y[{i},{k}]" + (f"^{e}" if e != 1 else ""))
    return " ".join(parts)


def a_monomial(t, n, j, l):
    assert in_W(t, n, j, l), (j, l)
    C = cartan_matrix(t, n)
    r = rvec(t, n)
    m = mmul({(j, l + r[j - 1]): 1}, {(j, l - r[j - 1]): 1})
    for i in range(1, n + 1):
        c = C[i - 1][j - 1]
        if c == -1:
            m = mmul(m, {(i, l): -1})
        elif c == -2:
            m = mmul(m, {(i, l + 1): -1, (i, l - 1): -1})
    return m


def weight_of(t, n, m):
    C = cartan_matrix(t, n)
    w = [0] * n
    for (i, _k), e in m.items():
        w[i - 1] += e
    return w


# --------------------------------------------------------------------- paths


def spin_arms(n, l):
    """All 2^n arms of the spin set P_{n,l} (l odd), points in arm order."""
    assert l % 2 == 1
    if l % 4 == 3:
        xs = [2 * r for r in range(n)] + [2 * n - 1]
    else:
        xs = [4 * n - 2 - 2 * r for r in range(n)] + [2 * n - 1]
    arms = []
    for signs in itertools.product((1, -1), repeat=n):
        y = l + 2 * n - 1
        pts = [(xs[0], (y, 0))]
        for r in range(n - 1):
            y += 2 * signs[r]
            pts.append((xs[r + 1], (y, 0)))
        s = signs[n - 1]
        pts.append((xs[n], (y + s, s)))
        arms.append(tuple(pts))
    return sorted(arms)


def gen_paths(t, n, i, k):
    assert in_X(t, n, i, k), (i, k)
    if t == 'A':
        out = []
        for signs in itertools.product((1, -1), repeat=n + 1):
            y = i + k
            pts = [(0, (y, 0))]
            for x in range(1, n + 2):
                y += signs[x - 1]
                pts.append((x, (y, 0)))
            if y == n + 1 - i + k:
                out.append(tuple(pts))
        return sorted(out)
    if i == n:
        return spin_arms(n, k)
    d = 2 * n - 2 * i - 1
    out = []
    for a in spin_arms(n, k - d):
        for b in spin_arms(n, k + d):
            if a[-1][1] > b[-1][1]:  # endpoint condition a_N - abar_N = (0, y>0)
                out.append(a + b)
    return sorted(out)


def arms_of(t, n, p):
    if t == 'A':
        return [p]
    if len(p) == n + 1:
        return [p]
    assert len(p) == 2 * n + 2
    return [p[:n + 1], p[n + 1:]]


def corners(t, n, p):
    upper, lower = set(), set()
    if t == 'A':
        for r in range(1, n + 1):
            y0, y1, y2 = p[r - 1][1][0], p[r][1][0], p[r + 1][1][0]
            if y0 == y1 + 1 and y2 == y1 + 1:
                upper.add((r, y1))
            if y0 == y1 - 1 and y2 == y1 - 1:
                lower.add((r, y1))
        return upper, lower
    ends = []
    for arm in arms_of(t, n, p):
        for r in range(1, n):
            ya, yb, yc = arm[r - 1][1], arm[r][1], arm[r + 1][1]
            if yb < ya and yb < yc:
                upper.add((r, yb[0]))
            if yb > ya and yb > yc:
                lower.add((r, yb[0]))
        ends.append(arm[n][1])
    for (m, e) in ends:
        if e == -1 and (m, 1) not in ends:
            upper.add((n, m))
        if e == 1 and (m, -1) not in ends:
            lower.add((n, m))
    return upper, lower


def path_monomial(t, n, p):
    up, lo = corners(t, n, p)
    return mmul(*([{c: 1} for c in up] + [{c: -1} for c in lo] + [{}]))


def col_extremes(p):
    mp = {}
    for (x, y) in p:
        if x in mp:
            lo, hi = mp[x]
            mp[x] = (min(lo, y), max(hi, y))
        else:
            mp[x] = (y, y)
    return mp


def strictly_above(p, q):
    cp, cq = col_extremes(p), col_extremes(q)
    return all(cp[x][1] < cq[x][0] for x in cp if x in cq)


def enumerate_tuples(t, n, snake):
    pathsets = [gen_paths(t, n, i, k) for (i, k) in snake]
    extremes = [[col_extremes(p) for p in ps] for ps in pathsets]
    out = []

    def rec(idx, chosen, colmax):
        if idx == len(pathsets):
            out.append(tuple(chosen))
            return
        for p, ce in zip(pathsets[idx], extremes[idx]):
            if all(colmax[x] < ce[x][0] for x in ce if x in colmax):
                nm = dict(colmax)
                for x, (_lo, hi) in ce.items():
                    nm[x] = max(nm[x], hi) if x in nm else hi
                rec(idx + 1, chosen + [p], nm)

    rec(0, [], {})
    return out


def snake_qchar(t, n, snake):
    """Returns the sorted list of monomial keys; asserts thin + injective."""
    keys = []
    for tup in enumerate_tuples(t, n, snake):
        keys.append(mkey(mmul(*[path_monomial(t, n, p) for p in tup])))
    assert len(set(keys)) == len(keys), "tuple->monomial map not injective"
    return sorted(keys)


# ---------------------------------------------------------------------- sl2
# Single-node monomials are dicts {k: exponent}; A_l = Y_{l-1} Y_{l+1}.


def sl2_strings(M):
    """Greedy q-string decomposition of a dominant monomial: (center, length)."""
    assert all(e > 0 for e in M.values())
    left = dict(M)
    strings = []
    while any(left.values()):
        top = max(k for k, e in left.items() if e > 0)
        k, length = top, 0
        while left.get(k, 0) > 0:
            left[k] -= 1
            length += 1
            k -= 2
        strings.append((top - length + 1, length))
    for (c1, r1), (c2, r2) in itertools.combinations(strings, 2):
        s1 = set(range(c1 - r1 + 1, c1 + r1, 2))
        s2 = set(range(c2 - r2 + 1, c2 + r2, 2))
        union_is_string = (min(s1 | s2), max(s1 | s2)) == (
            min(s1 | s2), min(s1 | s2) + 2 * (len(s1 | s2) - 1)) and \
            sorted(s1 | s2) == list(range(min(s1 | s2), max(s1 | s2) + 2, 2))
        contained = s1 <= s2 or s2 <= s1
        assert contained or not union_is_string, "strings not in general position"
    return sorted(strings)


def string_char(c, r):
    base = mmul(*[{c - r + 1 + 2 * s: 1} for s in range(r)])
    out = [base]
    m = base
    for tt in range(r):
        m = mmul(m, {c + r - 2 * tt - 1: -1, c + r - 2 * tt + 1: -1})
        out.append(m)
    return out


def sl2_simple(M):
    out = [{}]
    for (c, r) in sl2_strings(M):
        out = [mmul(x, y) for x in out for y in string_char(c, r)]
    return sorted(mkey(x) for x in out)


def sl2_weyl(M):
    out = [{}]
    for k in sorted(M):
        for _ in range(M[k]):
            out = [mmul(x, f) for x in out for f in ({k: 1}, {k + 2: -1})]
    return sorted(mkey(x) for x in out)


def ball_box_closure(M):
    """Close the highest monomial under the two ball moves:
    (a) black at k, empty at k+2  ->  white at k+2      (multiply A_{k+1}^-1)
    (b) white at k, empty at k-2  ->  black at k-2      (multiply A_{k-1})
    """
    seen = {mkey(M)}
    frontier = [dict(M)]
    while frontier:
        m = frontier.pop()
        for k in list(m):
            nm = None
            if m.get(k) == 1 and m.get(k + 2, 0) == 0:
                nm = mmul(m, {k: -1, k + 2: -1})
            if nm is not None and mkey(nm) not in seen:
                seen.add(mkey(nm))
                frontier.append(nm)
            nm = None
            if m.get(k) == -1 and m.get(k - 2, 0) == 0:
                nm = mmul(m, {k - 2: 1, k: 1})
            if nm is not None and mkey(nm) not in seen:
                seen.add(mkey(nm))
                frontier.append(nm)
    return sorted(seen)


def sl2str(m):
    if not m:
        return "1"
    return " ".join(f"Y[{k}]" + (f"^{e}" if e != 1 else "")
                    for k, e in sorted(m.items()))


# ----------------------------------------------------------------- tableaux
# Letters: positive j = plain j, 0 = zero, negative -j = barred j.


def alphabet(t, n):
    if t == 'A':
        return list(range(1, n + 2))
    return list(range(1, n + 1)) + [0] + [-j for j in range(n, 0, -1)]


def letter_rank(t, n, a):
    return alphabet(t, n).index(a)


def yvar(n, i, k, e):
    if i == 0 or i == n + 1:
        return {}
    return {(i, k): e}


def box_monomial(t, n, a, kk):
    if t == 'A':
        return mmul(yvar(n, a - 1, a + kk, -1), yvar(n, a, a - 1 + kk, 1))
    if a == 0:
        return mmul({(n, 2 * n + 1 + kk): -1}, {(n, 2 * n - 3 + kk): 1})
    if a == n:
        return mmul(yvar(n, n - 1, 2 * n + kk, -1),
                    {(n, 2 * n - 3 + kk): 1}, {(n, 2 * n - 1 + kk): 1})
    if a == -n:
        return mmul({(n, 2 * n - 1 + kk): -1}, {(n, 2 * n + 1 + kk): -1},
                    yvar(n, n - 1, 2 * n - 2 + kk, 1))
    if a > 0:
        return mmul(yvar(n, a - 1, 2 * a + kk, -1), {(a, 2 * a - 2 + kk): 1})
    i = -a
    return mmul({(i, 4 * n - 2 * i + kk): -1},
                yvar(n, i - 1, 4 * n - 2 - 2 * i + kk, 1))


def diagram_from_snake(t, n, snake):
    """Column list [(col, top_row, height)], col = 1..T."""
    rv = rvee(t)
    cols = []
    for idx, (i, k) in enumerate(snake, start=1):
        assert in_Xprime(t, n, i, k), (i, k)
        num = k + rv * (i - 1)
        assert num % (2 * rv) == 0
        cols.append((idx, idx - num // (2 * rv), i))
    return cols


def snake_from_diagram(t, n, cols):
    rv = rvee(t)
    return [(h, 2 * rv * (idx - top) - rv * (h - 1)) for (idx, top, h) in sorted(cols)]


def column_fills(t, n, h):
    A = alphabet(t, n)
    out = []

    def rec(prefix):
        if len(prefix) == h:
            out.append(tuple(prefix))
            return
        for a in A:
            if prefix:
                ok = letter_rank(t, n, a) > letter_rank(t, n, prefix[-1]) or \
                    (t == 'B' and prefix[-1] == 0 and a == 0)
                if not ok:
                    continue
            rec(prefix + [a])

    rec([])
    return out


def columns_compatible(t, n, cp, fp, c, f):
    """Row rule between adjacent filled columns (weak increase left-to-right,
    and in type B a 0 may not sit left of a 0)."""
    (_, topp, hp) = cp
    (_, topc, hc) = c
    for r in range(max(topp, topc), min(topp + hp, topc + hc)):
        a, b = fp[r - topp], f[r - topc]
        if letter_rank(t, n, a) > letter_rank(t, n, b):
            return False
        if t == 'B' and a == 0 and b == 0:
            return False
    return True


def enumerate_tableaux(t, n, cols):
    colinfo = sorted(cols)
    fills_per = [column_fills(t, n, h) for (_, _, h) in colinfo]
    out = []

    def rec(idx, chosen):
        if idx == len(colinfo):
            T = {}
            for (cidx, top, h), f in zip(colinfo, chosen):
                for r in range(h):
                    T[(top + r, cidx)] = f[r]
            out.append(T)
            return
        for f in fills_per[idx]:
            if idx == 0 or columns_compatible(t, n, colinfo[idx - 1],
                                              chosen[-1], colinfo[idx], f):
                rec(idx + 1, chosen + [f])

    rec(0, [])
    return out


def tableau_monomial(t, n, T):
    rv = rvee(t)
    return mmul(*([box_monomial(t, n, a, 2 * rv * (c - r))
                   for (r, c), a in T.items()] + [{}]))


def tableaux_qchar(t, n, cols):
    return sorted(mkey(tableau_monomial(t, n, T))
                  for T in enumerate_tableaux(t, n, cols))
