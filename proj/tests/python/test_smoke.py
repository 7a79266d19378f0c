import pytest

import snakechar


def monomials(terms):
    return {tuple(m) for m, _ in terms}


def test_fundamental_a4():
    terms = snakechar.qchar("A", 4, [(2, 1)])
    assert len(terms) == 10
    assert all(mult == 1 for _, mult in terms)
    assert ((2, 1, 1),) in monomials(terms)


def test_snake_b4_verifies():
    rep = snakechar.verify("B", 4, [(1, 0)])
    assert rep["ok"]
    assert rep["cond_i"] and rep["cond_ii"] and rep["cond_iii"]


def test_tableaux_match_paths():
    rep = snakechar.compare("A", 4, [(1, 0, 2), (2, 0, 2)])
    assert rep["equal"]
    assert rep["tableau_count"] == rep["tuple_count"]


def test_diagram_roundtrip():
    diagram = snakechar.diagram_of_snake("A", 4, [(2, 1)])
    assert diagram == [(1, 0, 2)]
    terms_t = snakechar.tableaux("A", 4, diagram)
    terms_q = snakechar.qchar("A", 4, [(2, 1)])
    assert terms_t == terms_q


def test_classify_minimal_affinization():
    rep = snakechar.classify("A", 4, [(2, 1), (3, 4)])
    assert rep["is_snake"] and rep["is_minimal"] and rep["is_minimal_affinization"]


def test_restrict_is_weyl_invariant():
    rep = snakechar.restrict("B", 4, [(4, 1)])
    assert rep["weyl_invariant"]
    assert sum(mult for _, mult in rep["weights"]) == 16


def test_off_grid_point_raises():
    with pytest.raises(ValueError):
        snakechar.qchar("A", 4, [(2, 2)])
