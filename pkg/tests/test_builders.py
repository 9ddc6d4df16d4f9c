import pytest

from chordspan.builders import build_greedy, build_shell, formula_params, max_tcl, min_tcl
from chordspan.graph_core import chord_length, count_ears, tcl, validate
from oracles import naive_greedy


def test_greedy_six():
    t = build_greedy(6)
    assert set(t.graph.chords) == {(0, 2), (2, 4), (0, 4)}
    assert tcl(t.graph) == 6


def test_greedy_eleven():
    assert tcl(build_greedy(11).graph) == 21


def test_greedy_twelve_shape():
    t = build_greedy(12)
    assert t.chord_order == [(0, 2), (2, 4), (4, 6), (6, 8), (8, 10), (0, 10), (0, 4), (4, 8), (0, 8)]
    assert sorted(chord_length(12, c) for c in t.graph.chords) == [2] * 6 + [4] * 3
    assert tcl(t.graph) == 24


@pytest.mark.parametrize("n", range(3, 90))
def test_greedy_matches_literal_algorithm(n):
    chords, restarts = naive_greedy(n)
    t = build_greedy(n)
    assert t.chord_order == chords
    assert restarts == [] == t.restarts
    assert validate(n, t.graph.chords) == t.graph


def test_greedy_trace_chains():
    t = build_greedy(40)
    assert len(t.chord_order) == 37
    assert len(t.anchors) == 38 and t.anchors[0] == 0
    for (anchor, end), c in zip(zip(t.anchors, t.anchors[1:]), t.chord_order):
        assert c == (min(anchor, end), max(anchor, end))


@pytest.mark.parametrize("n, want", [(6, [(0, 2), (0, 3), (0, 4)]), (5, [(0, 2), (0, 3)])])
def test_shell_chords(n, want):
    assert list(build_shell(n).chords) == want


@pytest.mark.parametrize("n, want", [(6, 7), (12, 34), (5, 4)])
def test_shell_tcl(n, want):
    assert tcl(build_shell(n)) == want


@pytest.mark.parametrize("n, want", [(11, 21), (12, 24), (4, 2), (3, 0), (40, 152), (100, 508)])
def test_min_tcl(n, want):
    assert min_tcl(n) == want


@pytest.mark.parametrize("n, want", [(6, 7), (11, 28), (4, 2), (40, 398)])
def test_max_tcl(n, want):
    assert max_tcl(n) == want


def test_boundary_overlap():
    for k in range(0, 20):
        n = 3 * 2 ** (k + 1)
        assert n * (k + 2) - 3 * 2 ** (k + 1) == n * (k + 3) - 3 * 2 ** (k + 2) == min_tcl(n)


def test_k_exact_at_powers():
    for k in range(0, 40):
        assert formula_params(3 * 2**k).k == k
        if k >= 1:
            assert formula_params(3 * 2**k - 1).k == k - 1
        assert formula_params(3 * 2 ** (k + 1) - 1).k == k


@pytest.mark.parametrize("n", range(3, 400))
def test_increment_laws(n):
    shell_step = tcl(build_shell(n + 1)) - tcl(build_shell(n))
    if n >= 5:
        assert shell_step == ((n + 1) // 2 if n % 2 else n // 2)
    if n >= 6:
        k = formula_params(n).k
        assert tcl(build_greedy(n + 1).graph) - tcl(build_greedy(n).graph) == k + 2


@pytest.mark.parametrize("n", range(5, 200))
def test_shell_has_two_ears(n):
    assert count_ears(build_shell(n)) == 2


def test_rejects_small_orders():
    for f in (build_greedy, build_shell, min_tcl, max_tcl):
        with pytest.raises(ValueError):
            f(2)
