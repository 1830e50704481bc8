"""Exact solvers for connected degree balance editing of digraphs.

The optimum follows the closed formulas in |F|, p, q, t; the witness comes
from the constructive replacement procedure: extract the edit sets from a
minimum directed f-join, rewire the join to sweep up stray components at
constant size, then splice a directed chain of additions through whatever
components remain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cdpe import Verdict
from .fjoin import DirectedFJoin, _decompose, build_gs_directed, min_f_join
from .graphs import (
    BalanceInstance,
    Digraph,
    GraphError,
    OperationSet,
    StructuralCounts,
    balance_counts,
    bridges,
    components,
)
from .verify import verify_balance


@dataclass(frozen=True)
class DirectedEditSolution:
    """An edit set: additions are missing arcs of G, deletions present arcs."""

    additions: frozenset[tuple[int, int]]
    deletions: frozenset[tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.additions) + len(self.deletions)


@dataclass(frozen=True)
class DirectedSolveOutcome:
    verdict: Verdict
    counts: StructuralCounts
    opt: int | None = None
    solution: DirectedEditSolution | None = None
    join_size: int | None = None
    feasible_within_budget: bool | None = None


def extract_af_df(f: DirectedFJoin, g: Digraph) -> DirectedEditSolution:
    """The canonical edit sets (A_F, D_F) of a directed f-join.

    A single copy of (u,v) adds the missing arc (u,v), or deletes (v,u)
    when (u,v) is already present; a double copy does both.
    """
    additions: set[tuple[int, int]] = set()
    deletions: set[tuple[int, int]] = set()
    for (u, v), mult in f.arcs.items():
        present = (u, v) in g.arcs
        reverse = (v, u) in g.arcs
        if mult == 2:
            if present or not reverse:
                raise GraphError(f"doubled arc ({u}, {v}) not in the operation graph")
            additions.add((u, v))
            deletions.add((v, u))
        elif not present:
            additions.add((u, v))
        elif reverse:
            deletions.add((v, u))
        else:
            raise GraphError(f"arc ({u}, {v}) not in the operation graph")
    return DirectedEditSolution(frozenset(additions), frozenset(deletions))


def _no_instance(counts: StructuralCounts, budget: int | None) -> DirectedSolveOutcome:
    feasible = None if budget is None else False
    return DirectedSolveOutcome(
        Verdict.NO_INSTANCE, counts, feasible_within_budget=feasible
    )


def _solved(
    inst: BalanceInstance,
    counts: StructuralCounts,
    opt: int,
    additions: set[tuple[int, int]],
    deletions: set[tuple[int, int]],
    join_size: int | None,
    require_connected: bool = True,
) -> DirectedSolveOutcome:
    solution = DirectedEditSolution(frozenset(additions), frozenset(deletions))
    assert solution.size == opt
    report = verify_balance(
        inst, additions, deletions, claimed_opt=opt, require_connected=require_connected
    )
    assert report.valid, report.failures
    feasible = None if inst.budget is None else opt <= inst.budget
    return DirectedSolveOutcome(
        Verdict.SOLVED,
        counts,
        opt=opt,
        solution=solution,
        join_size=join_size,
        feasible_within_budget=feasible,
    )


def _apply_join(g: Digraph, arcs: dict[tuple[int, int], int]) -> Digraph:
    sol = extract_af_df(DirectedFJoin(dict(arcs), ()), g)
    return g.apply(sol.additions, sol.deletions)


def _arc_is_bridge(h: Digraph, arc: tuple[int, int]) -> bool:
    # An arc of a digraph is a bridge iff its reverse is absent and the
    # underlying edge is a bridge of the underlying graph.
    u, v = arc
    if (v, u) in h.arcs:
        return False
    return (min(u, v), max(u, v)) in bridges(h.underlying)


def rewire_fjoin_for_connectivity(g: Digraph, f: DirectedFJoin) -> DirectedFJoin:
    """Rewire a minimum directed f-join without changing its size so that
    the edited digraph has as few (weak) components as possible.

    Two component-merging swaps are applied exhaustively: replace arcs
    (u,v), (u',v') of different components by the cross pair (u,v'),
    (u',v) when (u,v) is a deletion or a non-bridge addition; and replace
    a two-arc path (u,v), (v,w) whose removal keeps u and v together by a
    detour (u,x), (x,w) through a vertex x of another component.
    """
    arcs = dict(f.arcs)
    while True:
        h = _apply_join(g, arcs)
        comps = components(h)
        if len(comps) == 1:
            break
        comp_of = {v: i for i, c in enumerate(comps) for v in c}
        if cross := _cross_swap(g, h, arcs, comp_of):
            arcs = cross
            continue
        if detour := _detour_swap(h, arcs, comps, comp_of):
            arcs = detour
            continue
        break
    balance: dict[int, int] = {}
    for (u, v), mult in arcs.items():
        balance[u] = balance.get(u, 0) + mult
        balance[v] = balance.get(v, 0) - mult
    return DirectedFJoin(arcs, _decompose(arcs, balance))


def _bump(arcs: dict, arc: tuple[int, int], by: int) -> None:
    count = arcs.get(arc, 0) + by
    if count:
        arcs[arc] = count
    else:
        arcs.pop(arc, None)


def _cross_swap(g: Digraph, h: Digraph, arcs: dict, comp_of: dict):
    for uv in sorted(arcs):
        u, v = uv
        deletion = (u, v) in g.arcs or arcs[uv] == 2
        addition_non_bridge = (u, v) not in g.arcs and not _arc_is_bridge(h, uv)
        if not (deletion or addition_non_bridge):
            continue
        for xy in sorted(arcs):
            x, y = xy
            if comp_of[x] == comp_of[u]:
                continue
            swapped = dict(arcs)
            _bump(swapped, uv, -1)
            _bump(swapped, xy, -1)
            _bump(swapped, (u, y), 1)
            _bump(swapped, (x, v), 1)
            return swapped
    return None


def _detour_swap(h: Digraph, arcs: dict, comps, comp_of: dict):
    heads: dict[int, list[tuple[int, int]]] = {}
    for a in sorted(arcs):
        heads.setdefault(a[1], []).append(a)
    for mid in sorted(heads):
        for uv in heads[mid]:
            u = uv[0]
            for vw in sorted(arcs):
                if vw[0] != mid or vw == uv:
                    continue
                w = vw[1]
                if w == u:
                    continue
                h2 = Digraph(h.n, h.arcs - {uv, vw})
                comp2 = {x: i for i, c in enumerate(components(h2)) for x in c}
                if comp2[u] != comp2[mid]:
                    continue
                x = min(
                    min(c) for c in comps if comp_of[next(iter(c))] != comp_of[mid]
                )
                swapped = dict(arcs)
                _bump(swapped, uv, -1)
                _bump(swapped, vw, -1)
                _bump(swapped, (u, x), 1)
                _bump(swapped, (x, w), 1)
                return swapped
    return None


def _splice_chain(g: Digraph, arcs: dict) -> dict:
    """Replace one join arc by a directed chain through every other component."""
    h = _apply_join(g, arcs)
    comps = components(h)
    if len(comps) == 1:
        return arcs
    u, v = uv = min(arcs)
    stops = [min(c) for c in comps if u not in c]
    route = [u, *stops, v]
    spliced = dict(arcs)
    _bump(spliced, uv, -1)
    for a, b in zip(route, route[1:]):
        _bump(spliced, (a, b), 1)
    return spliced


def solve_cdbe(inst: BalanceInstance, s: OperationSet) -> DirectedSolveOutcome:
    """Optimum and witness for CDBE under the given operation set."""
    g = inst.digraph
    if g.n == 0:
        raise GraphError("instances must have at least one vertex")
    counts = balance_counts(inst)
    p, q = counts.plain_components, counts.deficient_components
    gs = build_gs_directed(g, s)
    f = min_f_join(gs, counts.imbalance or {})
    if f is None:
        return _no_instance(counts, inst.budget)

    if q == 0:
        if p <= 1:
            return _solved(inst, counts, 0, set(), set(), f.size)
        reps = [min(c) for c in components(g)]
        cycle = {(a, b) for a, b in zip(reps, reps[1:] + reps[:1])}
        return _solved(inst, counts, p, cycle, set(), f.size)

    opt = max(f.size, p + q - 1, p + counts.total_imbalance // 2)
    rewired = rewire_fjoin_for_connectivity(g, f)
    arcs = _splice_chain(g, dict(rewired.arcs))
    solution = extract_af_df(DirectedFJoin(arcs, ()), g)
    return _solved(
        inst, counts, opt, set(solution.additions), set(solution.deletions), f.size
    )


def solve_dbe(inst: BalanceInstance, s: OperationSet) -> DirectedSolveOutcome:
    """Degree balance editing without the connectivity requirement."""
    g = inst.digraph
    if g.n == 0:
        raise GraphError("instances must have at least one vertex")
    counts = balance_counts(inst)
    f = min_f_join(build_gs_directed(g, s), counts.imbalance or {})
    if f is None:
        return _no_instance(counts, inst.budget)
    solution = extract_af_df(f, g)
    return _solved(
        inst,
        counts,
        f.size,
        set(solution.additions),
        set(solution.deletions),
        f.size,
        require_connected=False,
    )
