"""Independent solution checking.

Validates a claimed (A, D) edit set straight from the problem definition;
deliberately imports nothing from the solver or join modules so it can act
as an unbiased witness in tests and the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    BalanceInstance,
    Digraph,
    Graph,
    ParityInstance,
    is_connected,
)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a check; ``failures`` lists every violated clause."""

    failures: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.failures


def verify_parity(
    inst: ParityInstance,
    additions: frozenset[tuple[int, int]] | set[tuple[int, int]],
    deletions: frozenset[tuple[int, int]] | set[tuple[int, int]],
    claimed_opt: int | None = None,
    require_connected: bool = True,
) -> VerifyReport:
    g = inst.graph
    additions = {tuple(sorted(e)) for e in additions}
    deletions = {tuple(sorted(e)) for e in deletions}
    failures: list[str] = []
    if additions & deletions:
        failures.append("not-disjoint")
    if any(e in g.edges for e in additions):
        failures.append("addition-is-edge")
    if any(e not in g.edges for e in deletions):
        failures.append("deletion-not-edge")
    if failures:
        return VerifyReport(tuple(failures))

    h = Graph(g.n, (g.edges | additions) - deletions)
    if require_connected and not is_connected(h):
        failures.append("disconnected")
    for v in range(g.n):
        if h.degree(v) % 2 != inst.delta[v]:
            failures.append(f"parity-violation({v})")
    if claimed_opt is not None and len(additions) + len(deletions) != claimed_opt:
        failures.append("size-mismatch")
    return VerifyReport(tuple(failures))


def verify_balance(
    inst: BalanceInstance,
    additions: frozenset[tuple[int, int]] | set[tuple[int, int]],
    deletions: frozenset[tuple[int, int]] | set[tuple[int, int]],
    claimed_opt: int | None = None,
    require_connected: bool = True,
) -> VerifyReport:
    g = inst.digraph
    additions = set(additions)
    deletions = set(deletions)
    failures: list[str] = []
    if additions & deletions:
        failures.append("not-disjoint")
    if any(a in g.arcs for a in additions):
        failures.append("addition-is-edge")
    if any(a not in g.arcs for a in deletions):
        failures.append("deletion-not-edge")
    if failures:
        return VerifyReport(tuple(failures))

    h = Digraph(g.n, (g.arcs | additions) - deletions)
    if require_connected and not is_connected(h):
        failures.append("disconnected")
    bal = h.balances
    for v in range(g.n):
        if bal[v] != inst.delta[v]:
            failures.append(f"balance-violation({v})")
    if claimed_opt is not None and len(additions) + len(deletions) != claimed_opt:
        failures.append("size-mismatch")
    return VerifyReport(tuple(failures))
