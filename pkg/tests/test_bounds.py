import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import naive_domination, naive_edge_iso, naive_vertex_iso, subset_sums_in_window

from fastrobber.bounds import (
    alon_spencer_domination_bound,
    domination_number_exact,
    edge_isoperimetric_exact,
    escape_certificate,
    subset_pick,
    theorem34_bounds,
    theorem42_constants_check,
    vertex_isoperimetric_exact,
)
from fastrobber.errors import BudgetExceeded, InfeasibleInput
from fastrobber.generators import grid, named, petersen, torus
from fastrobber.graph import closed_neighborhood


# ------------------------------------------------------------ isoperimetry

def test_edge_iso_examples():
    r = edge_isoperimetric_exact(named("cycle", 6))
    assert r.value == Fraction(2, 3) and r.witness == (0, 1, 2)
    r = edge_isoperimetric_exact(named("complete", 6))
    assert r.value == 3 and len(r.witness) == 3
    assert edge_isoperimetric_exact(named("path", 2)).value == 1


def test_vertex_iso_examples():
    r = vertex_isoperimetric_exact(named("path", 4))
    assert r.value == Fraction(1, 2) and r.witness == (0, 1)
    assert vertex_isoperimetric_exact(named("complete", 6)).value == 1
    r = vertex_isoperimetric_exact(named("star", 6))
    assert r.value == Fraction(1, 3) and r.witness == (0, 1, 2)


def test_iso_product_formulas():
    assert edge_isoperimetric_exact(grid([4, 3])).value == Fraction(1, 2)
    assert edge_isoperimetric_exact(torus([4, 4])).value == 1


def test_iso_witness_revalidates():
    for g in (named("cycle", 6), petersen(), grid([3, 3])):
        r = edge_isoperimetric_exact(g)
        s = set(r.witness)
        cut = sum(1 for u, v in g.edges() if (u in s) != (v in s))
        assert Fraction(cut, len(s)) == r.value
        rv = vertex_isoperimetric_exact(g)
        sv = set(rv.witness)
        nbrs = closed_neighborhood(g, sv) - sv
        assert Fraction(len(nbrs), len(sv)) == rv.value


def test_iso_budget():
    with pytest.raises(BudgetExceeded):
        edge_isoperimetric_exact(named("cycle", 8), max_n=6)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=7, connected_only=True))
def test_iso_matches_naive_and_bounds(g):
    re = edge_isoperimetric_exact(g)
    rv = vertex_isoperimetric_exact(g)
    assert re.value == naive_edge_iso(g)[0]
    assert rv.value == naive_vertex_iso(g)[0]
    assert re.value <= g.max_degree
    # the n/2-subset argument gives iota_v <= 1 only when n is even; for odd
    # n the floor in |S| <= n/2 weakens it (K_3 has iota_v = 2)
    if g.n % 2 == 0:
        assert rv.value <= 1
    else:
        assert rv.value <= Fraction(g.n // 2 + 1, g.n // 2)
    assert len(re.witness) <= g.n // 2 and len(rv.witness) <= g.n // 2


# ------------------------------------------------------------- domination

def test_domination_examples():
    assert domination_number_exact(named("complete", 9))[0] == 1
    assert domination_number_exact(named("cycle", 6))[0] == 2
    assert domination_number_exact(petersen())[0] == 3


def test_domination_witness_dominates():
    for g in (petersen(), grid([4, 3]), named("cycle", 7)):
        size, wit = domination_number_exact(g)
        assert len(wit) == size
        assert closed_neighborhood(g, wit) == set(range(g.n))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=7, connected_only=True))
def test_domination_matches_naive(g):
    assert domination_number_exact(g)[0] == naive_domination(g)


# ------------------------------------------------------------ bound report

def test_theorem34_petersen_sharp_bound_is_one():
    pet = petersen()
    ie = edge_isoperimetric_exact(pet).value
    iv = vertex_isoperimetric_exact(pet).value
    rep = theorem34_bounds(pet, ie, iv)
    assert ie == 1
    assert rep.lower_edge_sharp == Fraction(10, 9 - 3 + 4) == 1
    assert rep.upper_domination == 3


def test_theorem34_relaxed_below_sharp():
    # holds whenever iota_e <= max degree, which is always
    for g in (named("cycle", 6), petersen(), grid([3, 3]), named("complete", 5)):
        ie = edge_isoperimetric_exact(g).value
        iv = vertex_isoperimetric_exact(g).value
        rep = theorem34_bounds(g, ie, iv)
        assert rep.lower_edge_relaxed <= rep.lower_edge_sharp


def test_theorem34_c6_vertex_bound():
    c6 = named("cycle", 6)
    iv = vertex_isoperimetric_exact(c6).value
    assert iv == Fraction(2, 3)
    rep = theorem34_bounds(c6, edge_isoperimetric_exact(c6).value, iv)
    assert rep.lower_vertex_c == iv * 6 / (4 * 2)
    assert rep.lower_vertex_c <= 2  # exact cop number of C6


# ------------------------------------------------------- escape certificate

def test_escape_examples():
    assert escape_certificate(named("cycle", 8), 1) is True
    assert escape_certificate(named("complete", 4), 1) is False
    assert escape_certificate(named("cycle", 6), 1) is False


def test_escape_budget():
    with pytest.raises(BudgetExceeded):
        escape_certificate(named("cycle", 12), 3, max_subsets=10)


# ------------------------------------------------------------- subset pick

def test_subset_pick_examples():
    assert subset_pick([3, 3, 3], 9, "A") == {0}
    assert subset_pick([1, 1, 1, 1], 8, "B") == {0, 1}
    assert subset_pick([4, 4], 8, "B") == {0}


def test_subset_pick_infeasible_inputs():
    with pytest.raises(InfeasibleInput):
        subset_pick([5], 8, "A")  # size above n/2
    with pytest.raises(InfeasibleInput):
        subset_pick([2, 2], 3, "A")  # total above n
    with pytest.raises(InfeasibleInput):
        subset_pick([1], 8, "B")  # total below n/4
    with pytest.raises(InfeasibleInput):
        subset_pick([], 4, "A")


@settings(max_examples=200)
@given(st.data())
def test_subset_pick_in_window(data):
    m = data.draw(st.integers(1, 8))
    sizes = data.draw(st.lists(st.integers(1, 6), min_size=m, max_size=m))
    t = sum(sizes)
    n = data.draw(st.integers(max(t, 2 * max(sizes)), 4 * t))
    mode = data.draw(st.sampled_from(["A", "B"]))
    if mode == "B" and 4 * t < n:
        n = 4 * t
    got = subset_pick(sizes, n, mode)
    s = sum(sizes[i] for i in got)
    if mode == "A":
        assert 3 * s >= t and 2 * s <= n
        hits = subset_sums_in_window(sizes, t, 3, n, 2)
    else:
        assert 4 * s >= n and 2 * s <= n
        hits = subset_sums_in_window(sizes, n, 4, n, 2)
    assert set(got) in hits


# ------------------------------------------------- transcendental formulas

def test_alon_spencer_examples():
    k10 = named("complete", 10)
    assert alon_spencer_domination_bound(k10) == pytest.approx(1 + math.log(10), abs=1e-9)
    c6 = named("cycle", 6)
    assert alon_spencer_domination_bound(c6) == pytest.approx(6 * (1 + math.log(3)) / 3, abs=1e-9)
    p2 = named("path", 2)
    assert alon_spencer_domination_bound(p2) == pytest.approx(1 + math.log(2), abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7, connected_only=True))
def test_alon_spencer_dominates_gamma(g):
    assert alon_spencer_domination_bound(g) >= domination_number_exact(g)[0] - 1e-9


def test_theorem42_constants():
    assert theorem42_constants_check(0.001, 1.7, 4.2) is True
    assert theorem42_constants_check(0.001, 1.6, 4.2) is False
    assert theorem42_constants_check(0.5, 10, 100) is True
    with pytest.raises(ValueError):
        theorem42_constants_check(1.5, 1, 1)


# ------------------------------------------------- product expansion bound

_CT_FACTORS = {
    "P2": named("path", 2),
    "P3": named("path", 3),
    "P4": named("path", 4),
    "C3": named("cycle", 3),
    "C4": named("cycle", 4),
    "C5": named("cycle", 5),
}


def _chung_tetali_holds(a, b) -> bool:
    from fastrobber.graph import cartesian_product

    prod = cartesian_product([_CT_FACTORS[a], _CT_FACTORS[b]])
    lhs = edge_isoperimetric_exact(prod, max_n=25).value
    rhs = min(edge_isoperimetric_exact(_CT_FACTORS[a]).value,
              edge_isoperimetric_exact(_CT_FACTORS[b]).value) / 2
    return lhs >= rhs


@pytest.mark.parametrize("a,b", [("P2", "P3"), ("P3", "C4"), ("C3", "C3"), ("P4", "P4")])
def test_chung_tetali_small_pairs(a, b):
    assert _chung_tetali_holds(a, b)


@pytest.mark.slow
def test_chung_tetali_all_pairs():
    from itertools import combinations_with_replacement

    for a, b in combinations_with_replacement(sorted(_CT_FACTORS), 2):
        assert _chung_tetali_holds(a, b), (a, b)
