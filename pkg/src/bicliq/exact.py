"""Exact biclique partition numbers for small graphs, and the bound report.

The oracle is a memoised branch-and-bound over sets of uncovered edges.
It never consults the heuristics or the bound rules, so it can be used to
check them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import NamedTuple

from .cliques import is_clique_vertex_irreducible, is_split, max_independent_set_chordal, mc
from .graph import Graph, complement, induced_subgraph
from .ordering import is_chordal
from .partition import Biclique, BicliquePartition

DEFAULT_MAX_EDGES = 18
DEFAULT_BUDGET = 2_000_000
BRUTE_OMEGA_MAX_N = 12


class OracleTooLarge(ValueError):
    pass


class OracleBudgetExceeded(RuntimeError):
    pass


class ExactResult(NamedTuple):
    count: int
    partition: BicliquePartition
    complete: bool


def default_budget() -> int:
    """Node-expansion budget, overridable with ``BICLIQ_BUDGET``."""
    return int(os.environ.get("BICLIQ_BUDGET", DEFAULT_BUDGET))


def _subsets(items: list[int]):
    for bits in range(1 << len(items)):
        yield [x for i, x in enumerate(items) if bits >> i & 1]


def _enumerate_bicliques(g: Graph, edges: list[tuple[int, int]]):
    """All bicliques of ``g`` as edge bitmasks, grouped by their lowest edge."""
    index = {e: i for i, e in enumerate(edges)}
    groups: list[list[int]] = [[] for _ in edges]
    sides: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for i, (u, v) in enumerate(edges):
        # u on the left, v on the right; every left vertex must see v.
        for extra_left in _subsets([x for x in g.neighbors(v) if x != u]):
            left = [u, *extra_left]
            common = set(g.adj(u))
            for x in extra_left:
                common &= g.adj(x)
            for extra_right in _subsets(sorted(common - {v})):
                right = [v, *extra_right]
                mask = 0
                for a in left:
                    for b in right:
                        mask |= 1 << index[(a, b) if a < b else (b, a)]
                if mask & -mask == 1 << i:
                    groups[i].append(mask)
                    sides[mask] = (tuple(left), tuple(right))
    for grp in groups:
        grp.sort(key=lambda c: (-c.bit_count(), c))
    return groups, sides


def exact_bp(
    g: Graph, budget: int | None = None, max_edges: int = DEFAULT_MAX_EDGES
) -> ExactResult:
    """Minimum biclique partition of a small graph.

    Branches on the lowest uncovered edge over every biclique that contains
    it and avoids covered edges, largest first. Solved edge sets are
    memoised; a set proven to need at least ``k`` parts keeps that bound.

    If more than ``budget`` search nodes are expanded the greedy starting
    solution is returned with ``complete=False``.
    """
    edges = list(g.edges())
    m = len(edges)
    if m > max_edges:
        raise OracleTooLarge(f"{m} edges exceeds the oracle cap of {max_edges}")
    if m == 0:
        return ExactResult(0, BicliquePartition(), True)
    budget = default_budget() if budget is None else budget

    groups, sides = _enumerate_bicliques(g, edges)
    biggest = max(c.bit_count() for grp in groups for c in grp)
    full = (1 << m) - 1

    greedy: list[int] = []
    mask = full
    while mask:
        low = (mask & -mask).bit_length() - 1
        c = next(c for c in groups[low] if c & mask == c)
        greedy.append(c)
        mask ^= c

    solved: dict[int, int] = {}
    choice: dict[int, int] = {}
    at_least: dict[int, int] = {}
    expansions = 0

    def solve(mask: int, ub: int) -> int:
        # Returns f(mask) when f(mask) < ub, otherwise a proven lower bound >= ub.
        nonlocal expansions
        if mask == 0:
            return 0
        if mask in solved:
            return solved[mask]
        lb = max(at_least.get(mask, 1), -(-mask.bit_count() // biggest))
        if lb >= ub:
            return lb
        expansions += 1
        if expansions > budget:
            raise OracleBudgetExceeded
        best, best_c = ub, None
        low = (mask & -mask).bit_length() - 1
        for c in groups[low]:
            if c & mask != c:
                continue
            r = 1 + solve(mask ^ c, best - 1)
            if r < best:
                best, best_c = r, c
                if best <= lb:
                    break
        if best_c is None:
            at_least[mask] = ub
            return ub
        solved[mask] = best
        choice[mask] = best_c
        return best

    try:
        found = solve(full, len(greedy))
    except OracleBudgetExceeded:
        return ExactResult(len(greedy), _to_partition(greedy, sides), False)
    if found >= len(greedy):
        return ExactResult(len(greedy), _to_partition(greedy, sides), True)
    picks = []
    mask = full
    while mask:
        picks.append(choice[mask])
        mask ^= choice[mask]
    return ExactResult(found, _to_partition(picks, sides), True)


def _to_partition(masks: list[int], sides) -> BicliquePartition:
    return BicliquePartition(tuple(Biclique(*sides[c]) for c in masks))


def _clique_number_brute(g: Graph) -> int:
    best = 0

    def grow(size: int, candidates: list[int]) -> None:
        nonlocal best
        best = max(best, size)
        for i, v in enumerate(candidates):
            if size + len(candidates) - i <= best:
                return
            grow(size + 1, [u for u in candidates[i + 1:] if u in g.adj(v)])

    grow(0, list(range(g.n)))
    return best


def clique_number(g: Graph) -> int:
    """omega(g): via a complement PEO when co-chordal, else brute force for n <= 12."""
    if g.n == 0:
        return 0
    gc = complement(g)
    ok, sigma = is_chordal(gc)
    if ok:
        return len(max_independent_set_chordal(gc, sigma))
    if g.n <= BRUTE_OMEGA_MAX_N:
        return _clique_number_brute(g)
    raise ValueError(f"clique number unavailable: not co-chordal and n={g.n} > {BRUTE_OMEGA_MAX_N}")


def lower_bound_omega(g: Graph) -> int:
    """The clique-number lower bound ``omega - 1`` on bp, clamped at 0."""
    return max(clique_number(g) - 1, 0)


OMEGA_RULE = "omega-1"
SPLIT_RULE = "split:mc(Gc)-2"
IRREDUCIBLE_RULE = "irreducible:mc(Gc)-1"
UPPER_RULE = "mc(Gc)-1"
TRIVIAL_RULE = "trivial"


@dataclass
class BoundsReport:
    """Lower and upper bounds on bp with the rule behind each.

    ``rules`` lists the value of every rule that applied. ``exact_by_theorem``
    is set when the complement is chordal and clique vertex irreducible,
    in which case ``lower == upper``.
    """

    n: int
    m: int
    lower: int
    lower_rule: str
    upper: int | None = None
    upper_rule: str | None = None
    co_chordal: bool = False
    split: bool = False
    complement_irreducible: bool = False
    exact_by_theorem: bool = False
    mc_complement: int | None = None
    omega: int | None = None
    exact_bp: int | None = None
    exact_complete: bool | None = None
    rules: dict[str, int] = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [f"n={self.n} m={self.m}", f"lower={self.lower} ({self.lower_rule})"]
        if self.upper is None:
            out.append("upper=none")
        else:
            out.append(f"upper={self.upper} ({self.upper_rule})")
        for rule, value in self.rules.items():
            out.append(f"rule {rule} = {value}")
        flags = [f"co_chordal={str(self.co_chordal).lower()}",
                 f"split={str(self.split).lower()}",
                 f"complement_irreducible={str(self.complement_irreducible).lower()}"]
        out.append("flags " + " ".join(flags))
        if self.mc_complement is not None:
            out.append(f"mc={self.mc_complement}")
        if self.exact_by_theorem:
            out.append("bp determined: lower == upper")
        if self.exact_complete is not None:
            if self.exact_complete:
                out.append(f"exact={self.exact_bp}")
            else:
                out.append(f"exact=incomplete (best={self.exact_bp})")
        return out


def bounds_report(
    g: Graph,
    run_oracle: bool = False,
    budget: int | None = None,
    max_edges: int = DEFAULT_MAX_EDGES,
) -> BoundsReport:
    if g.n == 0:
        report = BoundsReport(0, 0, 0, TRIVIAL_RULE, 0, TRIVIAL_RULE)
        if run_oracle:
            report.exact_bp, report.exact_complete = 0, True
        return report

    gc = complement(g)
    co_chordal, _ = is_chordal(gc)
    split, _ = is_split(g)
    rules: dict[str, int] = {}
    try:
        omega = clique_number(g)
        rules[OMEGA_RULE] = max(omega - 1, 0)
    except ValueError:
        omega = None

    mc_c = irreducible = None
    if co_chordal:
        mc_c = mc(gc)
        irreducible = is_clique_vertex_irreducible(gc)
        if split:
            rules[SPLIT_RULE] = mc_c - 2
        if irreducible:
            rules[IRREDUCIBLE_RULE] = mc_c - 1

    # Ties keep the earliest rule; the listing order above is the priority.
    lower, lower_rule = 0, TRIVIAL_RULE
    for rule, value in rules.items():
        if value > lower or (lower_rule == TRIVIAL_RULE and value == lower):
            lower, lower_rule = value, rule

    report = BoundsReport(
        n=g.n,
        m=g.m,
        lower=lower,
        lower_rule=lower_rule,
        co_chordal=co_chordal,
        split=split,
        complement_irreducible=bool(irreducible),
        exact_by_theorem=bool(irreducible),
        mc_complement=mc_c,
        omega=omega,
    )
    if co_chordal:
        report.upper, report.upper_rule = mc_c - 1, UPPER_RULE
        rules[UPPER_RULE] = mc_c - 1
    report.rules = rules
    if run_oracle:
        res = exact_bp(g, budget=budget, max_edges=max_edges)
        report.exact_bp, report.exact_complete = res.count, res.complete
    return report


def bp_monotonicity_check(g: Graph, s, budget: int | None = None) -> bool:
    """Whether bp of the subgraph induced by ``s`` is at most bp of ``g``."""
    sub, _ = induced_subgraph(g, s)
    whole = exact_bp(g, budget=budget)
    part = exact_bp(sub, budget=budget)
    if not (whole.complete and part.complete):
        raise OracleBudgetExceeded("oracle budget exceeded")
    return part.count <= whole.count
