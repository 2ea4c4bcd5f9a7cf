"""Corpus sweeps that check the toolkit's headline facts on every connected
labeled graph up to a size cap, plus the product and subset-selection
suites.  Each suite returns a serializable report; a suite passes iff its
failure list is empty.

Exact cop numbers for corpus graphs are cached process-wide so that suites
sharing a graph do not re-solve it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product as iproduct

from .bounds import domination_number_exact, escape_certificate, subset_pick
from .copwin import decide_one_cop
from .errors import BudgetExceeded
from .generators import SplitMix64, enumerate_connected, grid, torus
from .graph import INFINITE, Graph, power_graph, to_edge_list
from .solver import cop_number

SUITES = ("characterization", "sandwich", "powergraph", "products", "subsetpick", "escape")

DEFAULT_MAX_N = 6


@dataclass
class SuiteFailure:
    instance: str
    detail: str
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "detail": self.detail,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass
class SuiteReport:
    suite: str
    checked: int
    failures: list[SuiteFailure]
    elapsed_ms: int
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "checked": self.checked,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms if include_timing else 0,
            "notes": self.notes,
        }


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int((time.perf_counter() - self.t0) * 1000)


@lru_cache(maxsize=None)
def gamma_exact(g: Graph) -> int:
    return domination_number_exact(g)[0]


@lru_cache(maxsize=None)
def cinf_exact(g: Graph) -> int:
    """Exact unbounded-speed cop number; the domination number caps the search."""
    c = cop_number(g, INFINITE, 1, gamma_exact(g))
    assert c is not None, "cop number must not exceed the domination number"
    return c


@lru_cache(maxsize=None)
def c1_exact(g: Graph) -> int:
    c = cop_number(g, 1, 1, gamma_exact(g))
    assert c is not None, "cop number must not exceed the domination number"
    return c


def corpus(max_n: int = DEFAULT_MAX_N):
    for n in range(2, max_n + 1):
        yield from enumerate_connected(n)


def characterization_suite(max_n: int = DEFAULT_MAX_N) -> SuiteReport:
    """Structural one-cop test against the exact solver, full corpus."""
    failures = []
    checked = 0
    with _Timer() as t:
        for g in corpus(max_n):
            checked += 1
            structural = decide_one_cop(g).is_copwin
            exact = cop_number(g, INFINITE, 1, 1) == 1
            if structural != exact:
                failures.append(
                    SuiteFailure(
                        to_edge_list(g),
                        "one-cop test disagrees with the solver",
                        f"solver says {exact}",
                        f"structural test says {structural}",
                    )
                )
    return SuiteReport("characterization", checked, failures, t.ms)


def sandwich_suite(max_n: int = DEFAULT_MAX_N) -> SuiteReport:
    """c_1 <= c_inf <= domination number, full corpus."""
    failures = []
    checked = 0
    with _Timer() as t:
        for g in corpus(max_n):
            checked += 1
            c1, cinf, gam = c1_exact(g), cinf_exact(g), gamma_exact(g)
            if not c1 <= cinf <= gam:
                failures.append(
                    SuiteFailure(
                        to_edge_list(g),
                        "sandwich violated",
                        "c1 <= c_inf <= gamma",
                        f"c1={c1} c_inf={cinf} gamma={gam}",
                    )
                )
    return SuiteReport("sandwich", checked, failures, t.ms)


def powergraph_suite(max_n: int = DEFAULT_MAX_N, ts: tuple[int, ...] = (2, 3)) -> SuiteReport:
    """Equal speeds t for everyone == classic game on the t-th power graph."""
    failures = []
    checked = 0
    with _Timer() as t_:
        for g in corpus(max_n):
            for t in ts:
                checked += 1
                gt = power_graph(g, t)
                cap = gamma_exact(gt)
                same_speed = cop_number(g, t, t, cap)
                classic = cop_number(gt, 1, 1, cap)
                if same_speed != classic or same_speed is None:
                    failures.append(
                        SuiteFailure(
                            to_edge_list(g),
                            f"speed-{t} game differs from the power-graph game",
                            f"power graph gives {classic}",
                            f"same-speed game gives {same_speed}",
                        )
                    )
    return SuiteReport("powergraph", checked, failures, t_.ms)


def _bounded_cop_number(g: Graph, k_cap: int, max_states: int) -> tuple[int | None, bool]:
    """(value, exact): exact c_inf up to k_cap if the state space fits the
    budget at every k, else (gamma, False) as the safe upper number."""
    try:
        c = cop_number(g, INFINITE, 1, k_cap, max_states)
        if c is not None:
            return c, True
    except BudgetExceeded:
        pass
    return gamma_exact(g), False


def products_suite(
    dims_range: tuple[int, ...] = (2, 3, 4), max_states: int = 2_000_000
) -> SuiteReport:
    """Grid and torus cop-number brackets for all two-factor size choices.

    Grids: n/(4*n1*m^2) <= c_inf <= n/n1.  Tori (largest factor even):
    n/(2*n1*m^2) <= c_inf <= 2n/n1.  Exact cop numbers where the solver
    budget allows, otherwise the domination number stands in for the upper
    side and the instance is noted.
    """
    failures = []
    notes = []
    checked = 0
    with _Timer() as t:
        for dims in iproduct(dims_range, repeat=2):
            checked += 1
            g = grid(list(dims))
            n1 = max(dims)
            m = len(dims)
            lower = Fraction(g.n, 4 * n1 * m * m)
            upper = Fraction(g.n, n1)
            c, exact = _bounded_cop_number(g, int(upper), max_states)
            if not exact:
                notes.append(f"grid{dims}: budget hit, using gamma={c}")
            if c is None or not lower <= c <= upper:
                failures.append(
                    SuiteFailure(
                        f"grid{dims}",
                        "path-product bracket violated",
                        f"{lower} <= c <= {upper}",
                        f"c={c} (exact={exact})",
                    )
                )
        for dims in iproduct(dims_range, repeat=2):
            if min(dims) < 3 or max(dims) % 2 != 0:
                continue  # cycles need >= 3 vertices; bracket needs even n1
            checked += 1
            g = torus(list(dims))
            n1 = max(dims)
            m = len(dims)
            lower = Fraction(g.n, 2 * n1 * m * m)
            upper = Fraction(2 * g.n, n1)
            c, exact = _bounded_cop_number(g, min(int(upper), gamma_exact(g)), max_states)
            if not exact:
                notes.append(f"torus{dims}: budget hit, using gamma={c}")
            if c is None or not lower <= c <= upper:
                failures.append(
                    SuiteFailure(
                        f"torus{dims}",
                        "cycle-product bracket violated",
                        f"{lower} <= c <= {upper}",
                        f"c={c} (exact={exact})",
                    )
                )
    return SuiteReport("products", checked, failures, t.ms, notes)


def subsetpick_suite(
    exhaustive_max_items: int = 6,
    exhaustive_max_size: int = 6,
    random_cases: int = 1000,
    seed: int = 0,
) -> SuiteReport:
    """Window membership of subset_pick, against an exhaustive subset-sum
    oracle: every multiset of up to exhaustive_max_items sizes (each at most
    exhaustive_max_size) over a sweep of valid n, plus seeded random larger
    instances."""
    failures = []
    checked = 0

    def run_case(sizes: list[int], n: int, mode: str) -> None:
        nonlocal checked
        checked += 1
        t = sum(sizes)
        try:
            picked = subset_pick(sizes, n, mode)
        except Exception as exc:  # noqa: BLE001 - report, do not crash the sweep
            failures.append(
                SuiteFailure(f"sizes={sizes} n={n} mode={mode}", "raised", "a subset", repr(exc))
            )
            return
        s = sum(sizes[i] for i in picked)
        ok = (3 * s >= t and 2 * s <= n) if mode == "A" else (4 * s >= n and 2 * s <= n)
        if not ok:
            failures.append(
                SuiteFailure(
                    f"sizes={sizes} n={n} mode={mode}",
                    "picked subset misses the window",
                    "sum within the window",
                    f"indices={sorted(picked)} sum={s}",
                )
            )

    with _Timer() as timer:
        for m in range(1, exhaustive_max_items + 1):
            for sizes in combinations_with_replacement(range(1, exhaustive_max_size + 1), m):
                t = sum(sizes)
                lo = max(t, 2 * max(sizes))
                for n in range(lo, 4 * t + 1):
                    run_case(list(sizes), n, "A")
                    if 4 * t >= n:
                        run_case(list(sizes), n, "B")
        rng = SplitMix64(seed)
        for _ in range(random_cases):
            m = 7 + rng.randrange(6)  # 7..12 items
            n = 20 + rng.randrange(81)  # 20..100
            sizes = [1 + rng.randrange(max(1, n // 2)) for _ in range(m)]
            # rescale until the preconditions hold
            while sum(sizes) > n:
                sizes[rng.randrange(m)] = 1 + rng.randrange(max(1, n // 4))
                sizes = [min(s, n // 2) for s in sizes]
            run_case(sizes, n, "A")
            if 4 * sum(sizes) >= n:
                run_case(sizes, n, "B")
    return SuiteReport("subsetpick", checked, failures, timer.ms)


def escape_suite(max_n: int = DEFAULT_MAX_N, ms: tuple[int, ...] = (1, 2)) -> SuiteReport:
    """A true certificate at m must force the exact cop number above m."""
    failures = []
    checked = 0
    with _Timer() as t:
        for g in corpus(max_n):
            for m in ms:
                checked += 1
                if escape_certificate(g, m) and cinf_exact(g) <= m:
                    failures.append(
                        SuiteFailure(
                            to_edge_list(g),
                            f"certificate at m={m} but the cops win with {cinf_exact(g)}",
                            f"c_inf > {m}",
                            f"c_inf = {cinf_exact(g)}",
                        )
                    )
    return SuiteReport("escape", checked, failures, t.ms)


def run_suite(name: str, **kwargs) -> SuiteReport:
    fns = {
        "characterization": characterization_suite,
        "sandwich": sandwich_suite,
        "powergraph": powergraph_suite,
        "products": products_suite,
        "subsetpick": subsetpick_suite,
        "escape": escape_suite,
    }
    if name not in fns:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return fns[name](**kwargs)
