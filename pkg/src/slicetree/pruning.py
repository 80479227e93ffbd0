"""Stable reduction as tree pruning.

Repeatedly remove a leaf of weight <= 0; with t := wt(leaf) + 1 the removed
leaf becomes an lc-marking on its neighbor (t = 1), nothing (t = 0), or a
klt-marking with value t.  Every step is logged so the run can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import (
    InvalidOrder,
    InvalidTree,
    MarkingOutsideTable,
    NonPositiveTotalWeight,
)
from .fracs import Frac12, is_klt_marking
from .trees import (
    PrunedTree,
    SlicedTree,
    canonical_key,
    is_pruned_stable,
    sum_weights,
    validate_pruned,
    weight,
)


@dataclass(frozen=True)
class PruneEvent:
    removed: str
    neighbor: str
    leaf_weight: Frac12
    t: Frac12
    action: str  # "lc-mark" | "drop" | "klt-mark"
    round: int
    snapshot_key: str


@dataclass
class PruneTrace:
    initial: PrunedTree
    events: tuple[PruneEvent, ...]
    final: PrunedTree

    @property
    def rounds(self) -> int:
        return max((e.round for e in self.events), default=0)


class _Working:
    """Mutable copy of a pruned tree used while pruning."""

    def __init__(self, p: PrunedTree):
        self.jdeg = {v: j.twelfths for v, j in p.tree.jdeg.items()}
        self.klt = {v: list(m.twelfths for m in marks) for v, marks in p.klt.items()}
        self.lc = dict(p.lc)
        self.adj: dict[str, dict[str, tuple[int, int] | None]] = {
            v: {} for v in self.jdeg
        }
        for e in p.tree.edges:
            s = None
            if e.slicing is not None:
                s = (e.slicing[0].twelfths, e.slicing[1].twelfths)
            self.adj[e.u][e.v] = s
            self.adj[e.v][e.u] = None if s is None else (s[1], s[0])

    def weight_twelfths(self, v: str) -> int:
        return (
            12 * (len(self.adj[v]) - 2)
            + self.jdeg[v]
            + sum(self.klt[v])
            + 12 * self.lc[v]
        )

    def leaves_due(self) -> list[str]:
        return sorted(
            v
            for v in self.jdeg
            if len(self.adj[v]) == 1 and self.weight_twelfths(v) <= 0
        )

    def remove_leaf(self, v: str) -> tuple[str, int, int, str]:
        """Remove leaf v, mark its neighbor; returns (neighbor, wt, t, action)."""
        (w,) = self.adj[v].keys()
        wt = self.weight_twelfths(v)
        t = wt + 12
        if t == 12:
            self.lc[w] += 1
            action = "lc-mark"
        elif t == 0:
            action = "drop"
        elif is_klt_marking(Frac12.from_twelfths(t)):
            self.klt[w].append(t)
            action = "klt-mark"
        else:
            raise MarkingOutsideTable(
                f"pruning leaf {v} produced t = {Frac12.from_twelfths(t)}, "
                "outside {0, 1} and the klt table"
            )
        del self.adj[w][v]
        del self.adj[v], self.jdeg[v], self.klt[v], self.lc[v]
        return w, wt, t, action

    def snapshot(self) -> PrunedTree:
        from .trees import Edge

        jdeg = {v: Frac12.from_twelfths(j) for v, j in self.jdeg.items()}
        edges = []
        for u in sorted(self.adj):
            for v, s in self.adj[u].items():
                if u < v:
                    slicing = None
                    if s is not None:
                        slicing = (
                            Frac12.from_twelfths(s[0]),
                            Frac12.from_twelfths(s[1]),
                        )
                    edges.append(Edge(u, v, slicing))
        return PrunedTree(
            SlicedTree(jdeg, edges),
            klt={v: [Frac12.from_twelfths(m) for m in ms] for v, ms in self.klt.items()},
            lc=dict(self.lc),
        )


def _as_pruned(g: SlicedTree | PrunedTree) -> PrunedTree:
    p = g if isinstance(g, PrunedTree) else PrunedTree.bare(g)
    report = validate_pruned(p)
    if not report.ok:
        raise InvalidTree(
            "; ".join(f"{v.clause}@{v.where}" for v in report.violations)
        )
    return p


def _run(
    p: PrunedTree,
    pick_rounds: Callable[[_Working], list[list[str]]],
    with_snapshots: bool = True,
) -> PruneTrace:
    if sum_weights(p).twelfths <= 0:
        raise NonPositiveTotalWeight(
            f"total weight {sum_weights(p)} <= 0; no stable pruned tree exists"
        )
    work = _Working(p)
    events: list[PruneEvent] = []
    rnd = 0
    while True:
        rounds = pick_rounds(work)
        if not rounds:
            break
        for batch in rounds:
            rnd += 1
            for v in batch:
                w, wt, t, action = work.remove_leaf(v)
                events.append(
                    PruneEvent(
                        removed=v,
                        neighbor=w,
                        leaf_weight=Frac12.from_twelfths(wt),
                        t=Frac12.from_twelfths(t),
                        action=action,
                        round=rnd,
                        snapshot_key=(
                            canonical_key(work.snapshot()) if with_snapshots else ""
                        ),
                    )
                )
    final = work.snapshot()
    return PruneTrace(initial=p, events=tuple(events), final=final)


def prune(g: SlicedTree | PrunedTree, with_snapshots: bool = True) -> PruneTrace:
    """Prune with the default policy: lowest-id weight-<=-0 leaf first."""
    return prune_with_order(g, "id", with_snapshots=with_snapshots)


def prune_with_order(
    g: SlicedTree | PrunedTree,
    order: str | Sequence[str] = "id",
    with_snapshots: bool = True,
) -> PruneTrace:
    """Prune under a leaf-selection policy.

    order = "id": repeatedly take the lowest-id leaf of weight <= 0.
    order = "rounds": per round, remove all current weight-<=-0 leaves
    (the outermost-leaves-at-once reading of the worked examples).
    order = explicit sequence of vertex ids: consume it, then finish with
    the "id" policy; InvalidOrder if an entry is not a prunable leaf.
    """
    p = _as_pruned(g)

    if order == "id":

        def pick(work: _Working) -> list[list[str]]:
            due = work.leaves_due()
            return [[due[0]]] if due else []

        return _run(p, pick, with_snapshots)

    if order == "rounds":

        def pick(work: _Working) -> list[list[str]]:
            due = work.leaves_due()
            return [due] if due else []

        return _run(p, pick, with_snapshots)

    if isinstance(order, str):
        raise InvalidOrder(f"unknown policy {order!r}")

    sequence = list(order)

    def pick(work: _Working, _state={"i": 0}) -> list[list[str]]:
        if _state["i"] < len(sequence):
            v = sequence[_state["i"]]
            _state["i"] += 1
            if v not in work.adj:
                raise InvalidOrder(f"{v!r} is not a vertex of the current tree")
            if len(work.adj[v]) != 1:
                raise InvalidOrder(f"{v!r} is not a leaf")
            if work.weight_twelfths(v) > 0:
                raise InvalidOrder(f"leaf {v!r} has positive weight")
            return [[v]]
        due = work.leaves_due()
        return [[due[0]]] if due else []

    return _run(p, pick, with_snapshots)


def assert_stable_result(trace: PruneTrace) -> None:
    """Sanity check used by tests: a finished trace must be stable."""
    if not is_pruned_stable(trace.final):
        raise InvalidTree("pruning terminated on an unstable tree")
