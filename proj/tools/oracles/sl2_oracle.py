#!/usr/bin/env python3
"""Oracle for the single-node (sl2) character layer.

Freezes: q-string decompositions, simple/Weyl character expansions, the
quotient (subset) property over a brute-force window, ball-and-box closure
equality for thin modules, and the five-case classification of lowering /
raising behaviour at a spectral index.
"""
import itertools
import sys

sys.path.insert(0, '.')
from qclib import (mmul, mkey, sl2_strings, string_char, sl2_simple,
                   sl2_weyl, ball_box_closure, sl2str)


def check(name, got, want):
    ok = got == want
    print(f"{'OK ' if ok else 'FAIL'} {name}: {got}")
    assert ok, (name, got, want)


def sl2_case(m, M, a):
    """Five-case classification of m in the simple character of thin M
    at spectral index a: which of m*A_{a+1}^-1 / m*A_{a-1} lives where."""
    simple = sl2_simple(M)
    weyl = sl2_weyl(M)
    assert mkey(m) in simple
    u_a = m.get(a, 0)
    assert abs(u_a) <= 1
    down = mkey(mmul(m, {a: -1, a + 2: -1}))      # m * A_{a+1}^{-1}
    up = mkey(mmul(m, {a - 2: 1, a: 1}))          # m * A_{a-1}
    if u_a == 1:
        if m.get(a + 2, 0) == 0:
            assert down in simple
            return 'I_lowerable'
        assert m.get(a + 2, 0) == 1
        assert down in weyl and down not in simple
        return 'II_weyl_only'
    if u_a == -1:
        if m.get(a - 2, 0) == 0:
            assert up in simple
            return 'raiseable'
        assert m.get(a - 2, 0) == -1
        assert up in weyl and up not in simple
        return 'raise_weyl_only'
    assert down not in weyl and up not in weyl
    return 'III_neither'


def main():
    # --- q-string decomposition -----------------------------------------
    check("strings Y0Y2", sl2_strings({0: 1, 2: 1}), [(1, 2)])
    check("strings Y0Y4", sl2_strings({0: 1, 4: 1}), [(0, 1), (4, 1)])
    check("strings Y0", sl2_strings({0: 1}), [(0, 1)])
    check("strings Y0^2Y2", sl2_strings({0: 2, 2: 1}), [(0, 1), (1, 2)])

    # --- simple characters ----------------------------------------------
    check("simple Y0", sl2_simple({0: 1}),
          sorted([mkey({0: 1}), mkey({2: -1})]))
    check("simple Y0Y2", sl2_simple({0: 1, 2: 1}),
          sorted([mkey({0: 1, 2: 1}), mkey({0: 1, 4: -1}),
                  mkey({2: -1, 4: -1})]))
    check("simple Y0Y4 size", len(sl2_simple({0: 1, 4: 1})), 4)
    check("weyl Y0Y2", sl2_weyl({0: 1, 2: 1}),
          sorted([mkey({0: 1, 2: 1}), mkey({0: 1, 4: -1}), mkey({}),
                  mkey({2: -1, 4: -1})]))
    check("weyl Y0 = simple Y0", sl2_weyl({0: 1}), sl2_simple({0: 1}))
    check("weyl Y0Y4 = simple Y0Y4",
          sl2_weyl({0: 1, 4: 1}), sl2_simple({0: 1, 4: 1}))

    # --- string-length product count, subset property, ball-and-box -----
    window = [0, 2, 4, 6, 8, 10]
    n_checked = n_thin = 0
    for exps in itertools.product(range(3), repeat=len(window)):
        M = {k: e for k, e in zip(window, exps) if e}
        if not M:
            continue
        simple = sl2_simple(M)
        weyl = sl2_weyl(M)
        strings = sl2_strings(M)
        assert len(simple) == eval('*'.join(str(r + 1) for _, r in strings))
        # quotient property: simple multiset contained in weyl multiset
        wl = list(weyl)
        for mk in simple:
            assert mk in wl, (M, mk)
            wl.remove(mk)
        thin = len(set(simple)) == len(simple)
        disjoint = all(
            set(range(c1 - r1 + 1, c1 + r1, 2)).isdisjoint(
                range(c2 - r2 + 1, c2 + r2, 2))
            for (c1, r1), (c2, r2) in itertools.combinations(strings, 2))
        assert thin == disjoint, M
        if thin:
            closure = ball_box_closure(M)
            assert closure == sorted(set(simple)), M
            n_thin += 1
        n_checked += 1
    print(f"OK  window sweep: {n_checked} dominant monomials "
          f"({n_thin} thin, ball-box closure matched on all)")

    # --- five-case classification ---------------------------------------
    check("case i", sl2_case({0: 1}, {0: 1}, 0), 'I_lowerable')
    check("case ii", sl2_case({0: 1, 2: 1}, {0: 1, 2: 1}, 0), 'II_weyl_only')
    check("case v", sl2_case({0: 1}, {0: 1}, 4), 'III_neither')
    check("case iii", sl2_case({2: -1, 4: -1}, {0: 1, 2: 1}, 2), 'raiseable')
    check("case iv", sl2_case({2: -1, 4: -1}, {0: 1, 2: 1}, 4),
          'raise_weyl_only')
    # exhaustive: every monomial of every thin module in a smaller window
    # falls into exactly one case at every index touching its support
    for exps in itertools.product(range(2), repeat=4):
        M = {k: e for k, e in zip([0, 2, 4, 6], exps) if e}
        if not M:
            continue
        simple = sl2_simple(M)
        if len(set(simple)) != len(simple):
            continue
        for mk in simple:
            m = dict(mk)
            for a in range(-2, 10, 2):
                sl2_case(m, M, a)     # internal asserts do the checking
    print("OK  five-case sweep over thin window modules")
    print("ALL SL2 ORACLE CHECKS PASSED")


if __name__ == '__main__':
    main()
