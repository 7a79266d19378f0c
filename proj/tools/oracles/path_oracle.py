#!/usr/bin/env python3
"""Path-model oracle: freezes path counts, corner sets, monomial lists and the
strictly-above examples used by tests/test_paths.cpp and tests/test_qchar.cpp.

Every block is cross-checked internally (path model vs. single-column tableaux
where both apply) before being printed.
"""

from qclib import (gen_paths, corners, path_monomial, mkey, mstr, mmul,
                   strictly_above, col_extremes, diagram_from_snake,
                   tableaux_qchar, spin_arms)


def pstr(p):
    return " ".join(f"({x},{m}{'+e' if e == 1 else '-e' if e == -1 else ''})"
                    for (x, (m, e)) in p)


def monomials(t, n, i, k):
    return sorted(mkey(path_monomial(t, n, p)) for p in gen_paths(t, n, i, k))


def show_set(label, t, n, i, k):
    ms = monomials(t, n, i, k)
    assert len(set(ms)) == len(ms)
    print(f"{label}: |P_{{{i},{k}}}| = {len(ms)}")
    for m in ms:
        print("   ", mstr(dict(m)))


def main():
    print("== counts ==")
    for (t, n, i, k) in [('A', 4, 2, 1), ('B', 4, 4, 1), ('B', 4, 1, 0),
                         ('B', 4, 2, 0), ('B', 4, 2, 4), ('B', 5, 4, 0),
                         ('B', 5, 5, 5), ('B', 5, 4, 10)]:
        print(f"  {t}{n} ({i},{k}): {len(gen_paths(t, n, i, k))}")

    print("\n== A4 (2,1) fundamental ==")
    show_set("A4", 'A', 4, 2, 1)
    # cross-check against the height-2 single-column tableaux
    tq = tableaux_qchar('A', 4, diagram_from_snake('A', 4, [(2, 1)]))
    assert tq == monomials('A', 4, 2, 1), "tableau/path cross-check failed"
    print("  cross-check vs single-column tableaux: OK")

    print("\n== B4 (1,0) vector ==")
    show_set("B4", 'B', 4, 1, 0)

    print("\n== B4 (4,1) spin ==")
    show_set("B4", 'B', 4, 4, 1)

    print("\n== corner examples ==")
    for (t, n, i, k, want) in [
            ('A', 4, 2, 1, {(2, 1): 1}),
            ('B', 4, 4, 1, {(4, 7): -1, (3, 6): 1, (2, 8): -1, (1, 6): 1}),
            ('B', 4, 1, 0, {(1, 14): -1})]:
        for p in gen_paths(t, n, i, k):
            if path_monomial(t, n, p) == want:
                up, lo = corners(t, n, p)
                print(f"  {t}{n} path with {mstr(want)}:")
                print(f"    points: {pstr(p)}")
                print(f"    upper = {sorted(up)}  lower = {sorted(lo)}")
                break
        else:
            raise AssertionError(f"no path with monomial {want}")

    print("\n== extremal paths ==")
    for (t, n, i, k) in [('A', 4, 2, 1), ('B', 4, 1, 0), ('B', 4, 4, 1)]:
        ps = gen_paths(t, n, i, k)
        highs = [p for p in ps if not corners(t, n, p)[1]]
        lows = [p for p in ps if not corners(t, n, p)[0]]
        assert len(highs) == 1 and len(lows) == 1
        print(f"  {t}{n} ({i},{k}) highest: {pstr(highs[0])}")
        print(f"      monomial {mstr(path_monomial(t, n, highs[0]))}")
        print(f"  {t}{n} ({i},{k}) lowest:  {pstr(lows[0])}")
        print(f"      monomial {mstr(path_monomial(t, n, lows[0]))}")

    print("\n== dominance census ==")
    for (t, n, i, k) in [('A', 4, 2, 1), ('B', 4, 1, 0), ('B', 4, 4, 1),
                         ('B', 4, 2, 0)]:
        doms = antis = 0
        for p in gen_paths(t, n, i, k):
            m = path_monomial(t, n, p)
            if all(e > 0 for e in m.values()):
                doms += 1
            if all(e < 0 for e in m.values()):
                antis += 1
        assert doms == 1 and antis == 1, (doms, antis)
    print("  exactly one dominant and one anti-dominant per set: OK")

    print("\n== strictly-above pair examples (B4, P_{4,1} x P_{4,3}) ==")
    want_in = mkey({(1, 8): 1, (3, 12): -1, (4, 11): 1, (4, 9): 1, (2, 12): -1})
    want_out = mkey({(1, 8): 1, (3, 12): -1, (4, 11): 1, (4, 15): -1})
    p1s = gen_paths('B', 4, 4, 1)
    p2s = gen_paths('B', 4, 4, 3)
    for label, want in (("in", want_in), ("out", want_out)):
        pairs = [(p, q) for p in p1s for q in p2s
                 if mkey(mmul(path_monomial('B', 4, p), path_monomial('B', 4, q))) == want]
        print(f"  product {mstr(dict(want))}: {len(pairs)} pair(s)")
        for (p, q) in pairs:
            print(f"    p = {pstr(p)}")
            print(f"    q = {pstr(q)}")
            print(f"    strictly_above(p,q) = {strictly_above(p, q)}")

    print("\n== spin endpoint sanity ==")
    hi = [p for p in gen_paths('B', 4, 4, 1) if not corners('B', 4, p)[1]][0]
    assert hi[-1] == (7, (1, -1)), hi[-1]
    print("  B4 (4,1) highest ends at (7, 1-e): OK")


if __name__ == "__main__":
    main()
