import numpy as np
import pytest

from conftest import FALSE_COMPLEMENTED_CLAIM
from zdgraph import Caps, SizeLimitExceeded, verify_paper
from zdgraph.paper_check import CHECK_NAMES, NEIGHBORHOOD_TABLES, counterexample, el


@pytest.fixture(scope="module")
def result():
    return verify_paper()


def test_ten_checks_in_order(result):
    assert [c.number for c in result.checks] == list(range(1, 11))
    assert tuple(c.name for c in result.checks) == CHECK_NAMES


@FALSE_COMPLEMENTED_CLAIM
def test_fresh_run_all_pass(result):
    assert result.score == "10/10"


def test_fresh_run_outcome(result):
    assert result.score == "9/10"
    assert [c.name for c in result.checks if not c.passed] == ["complemented"]


def test_complemented_failure_is_pinpointed(result):
    ev = "\n".join(result.check("complemented").evidence)
    assert "6 of 29 vertices have no orthogonal partner" in ev
    assert "Case III: ({1}, 2̅) ⊥ ({2,3}, 2̅) is false" in ev


def test_deterministic(result):
    assert verify_paper().to_json() == result.to_json()
    assert verify_paper().transcript() == result.transcript()


def test_tables_cover_every_vertex():
    centers = [el(X, r) for _, cs, _ in NEIGHBORHOOD_TABLES for X, r in cs]
    assert len(NEIGHBORHOOD_TABLES) == 22
    assert len(centers) == len(set(centers)) == 29


def test_corrupted_table_is_caught():
    t = np.array(counterexample().table)
    # make ({1,2,3}, 1̅) annihilate (∅, 1̅); symmetric, so it still commutes
    a, b = el((1, 2, 3), 1), el((), 1)
    t[a, b] = t[b, a] = 0
    res = verify_paper(table=t)
    assert not res.passed
    assert not res.check("construction").passed
    assert "not associative" in res.check("construction").evidence[0]


def test_valid_but_different_table_is_caught():
    # swap the roles of residues 1 and 3 in the labels only: the table stays
    # a semigroup, but the stated vertex set no longer matches
    s = counterexample()
    perm = np.arange(32)
    perm[[el((1, 2, 3), 1), el((1, 2, 3), 2)]] = perm[[el((1, 2, 3), 2), el((1, 2, 3), 1)]]
    t = perm[np.asarray(s.table)][np.ix_(perm, perm)]
    res = verify_paper(table=t)
    assert res.check("construction").passed
    assert not res.check("vertex_set").passed
    assert any("missing vertices" in e or "unexpected" in e for e in res.check("vertex_set").evidence)


def test_cap_too_small():
    with pytest.raises(SizeLimitExceeded):
        verify_paper(caps=Caps(order=16))


def test_each_check_under_five_seconds(result):
    assert all(c.seconds < 5 for c in result.checks)
