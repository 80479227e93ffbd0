"""Sliced and pruned decorated trees: validation, weights, canonical forms.

A sliced tree is a tree whose vertices carry a jdeg in (1/12)Z>=0 and whose
sliced edges carry an oriented pair of slicing fractions summing to 1.  A
pruned tree additionally carries, per vertex, a multiset of klt-marking
values and a count of lc-markings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidTree, UnknownVertex
from .fracs import Frac12, SLICING_VALUES_TWELFTHS, is_klt_marking


@dataclass(frozen=True)
class Edge:
    """Undirected edge; endpoints stored with u < v.  For a sliced edge,
    slicing = (value at u, value at v)."""

    u: str
    v: str
    slicing: tuple[Frac12, Frac12] | None = None

    @staticmethod
    def make(a: str, b: str, slicing: tuple[Frac12, Frac12] | None = None) -> Edge:
        if a > b:
            a, b = b, a
            if slicing is not None:
                slicing = (slicing[1], slicing[0])
        return Edge(a, b, slicing)

    def value_at(self, vertex: str) -> Frac12 | None:
        if self.slicing is None:
            return None
        if vertex == self.u:
            return self.slicing[0]
        if vertex == self.v:
            return self.slicing[1]
        raise UnknownVertex(f"{vertex} is not an endpoint of {self.u}-{self.v}")

    def other(self, vertex: str) -> str:
        return self.v if vertex == self.u else self.u


class SlicedTree:
    """Decorated tree: per-vertex jdeg plus sliced edges with slicing pairs."""

    def __init__(self, jdeg: Mapping[str, Frac12], edges: Iterable[Edge]):
        self.jdeg = dict(jdeg)
        self.edges = tuple(edges)
        self._adj: dict[str, list[Edge]] = {v: [] for v in self.jdeg}
        for e in self.edges:
            if e.u in self._adj:
                self._adj[e.u].append(e)
            if e.v in self._adj:
                self._adj[e.v].append(e)

    @property
    def vertices(self) -> list[str]:
        return sorted(self.jdeg)

    def degree(self, v: str) -> int:
        if v not in self._adj:
            raise UnknownVertex(v)
        return len(self._adj[v])

    def incident(self, v: str) -> list[Edge]:
        if v not in self._adj:
            raise UnknownVertex(v)
        return list(self._adj[v])

    def neighbors(self, v: str) -> list[str]:
        return [e.other(v) for e in self.incident(v)]

    def total_jdeg(self) -> Frac12:
        return Frac12.from_twelfths(sum(j.twelfths for j in self.jdeg.values()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SlicedTree)
            and self.jdeg == other.jdeg
            and sorted(self.edges, key=lambda e: (e.u, e.v)) ==
            sorted(other.edges, key=lambda e: (e.u, e.v))
        )

    def __repr__(self) -> str:
        return f"SlicedTree({len(self.jdeg)} vertices, {len(self.edges)} edges)"


class PrunedTree:
    """Sliced tree plus per-vertex klt-marking multisets and lc-marking counts."""

    def __init__(
        self,
        tree: SlicedTree,
        klt: Mapping[str, Iterable[Frac12]] | None = None,
        lc: Mapping[str, int] | None = None,
    ):
        self.tree = tree
        self.klt: dict[str, tuple[Frac12, ...]] = {v: () for v in tree.jdeg}
        self.lc: dict[str, int] = {v: 0 for v in tree.jdeg}
        for v, marks in (klt or {}).items():
            if v not in self.klt:
                raise UnknownVertex(v)
            self.klt[v] = tuple(sorted(marks, key=lambda m: m.twelfths))
        for v, n in (lc or {}).items():
            if v not in self.lc:
                raise UnknownVertex(v)
            self.lc[v] = int(n)

    @classmethod
    def bare(cls, tree: SlicedTree) -> PrunedTree:
        return cls(tree)

    @property
    def vertices(self) -> list[str]:
        return self.tree.vertices

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrunedTree)
            and self.tree == other.tree
            and self.klt == other.klt
            and self.lc == other.lc
        )

    def __repr__(self) -> str:
        return f"PrunedTree({len(self.tree.jdeg)} vertices)"


@dataclass
class Violation:
    clause: str
    where: str
    detail: str


@dataclass
class ValidationReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)


def validate_sliced(t: SlicedTree) -> ValidationReport:
    """Check every sliced-tree invariant; violations are reported, not raised."""
    out: list[Violation] = []
    n = len(t.jdeg)
    if n == 0:
        out.append(Violation("nonempty", "-", "tree has no vertices"))
        return ValidationReport(False, out)

    seen: set[tuple[str, str]] = set()
    for e in t.edges:
        eid = f"{e.u}-{e.v}"
        if e.u not in t.jdeg or e.v not in t.jdeg:
            out.append(Violation("edge-endpoints", eid, "endpoint not a vertex"))
            continue
        if e.u == e.v:
            out.append(Violation("no-loops", eid, "loop edge"))
        if (e.u, e.v) in seen:
            out.append(Violation("no-multiedges", eid, "duplicate edge"))
        seen.add((e.u, e.v))
        if e.slicing is not None:
            a, b = e.slicing
            if (
                a.twelfths not in SLICING_VALUES_TWELFTHS
                or a.twelfths + b.twelfths != 12
            ):
                out.append(
                    Violation("slicing-pair", eid, f"({a}, {b}) not a legal pair")
                )

    if len(t.edges) != n - 1:
        out.append(
            Violation("tree-shape", "-", f"{n} vertices but {len(t.edges)} edges")
        )
    else:
        # connectivity: |E| = |V| - 1 plus connected <=> tree
        stack = [next(iter(t.jdeg))]
        reached = set(stack)
        while stack:
            v = stack.pop()
            for e in t._adj.get(v, ()):
                w = e.other(v)
                if w in t.jdeg and w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != n:
            out.append(Violation("connected", "-", "graph is disconnected"))

    for v, j in t.jdeg.items():
        if j.twelfths < 0:
            out.append(Violation("jdeg-nonnegative", v, f"jdeg = {j}"))
        s = j.twelfths
        for e in t._adj.get(v, ()):
            val = e.value_at(v)
            if val is not None:
                s += val.twelfths
        if s % 12 != 0:
            out.append(
                Violation(
                    "integrality",
                    v,
                    f"jdeg + slicings = {Frac12.from_twelfths(s)} is not an integer",
                )
            )

    return ValidationReport(not out, out)


def is_tsm_stable(t: SlicedTree) -> bool:
    """Every jdeg-0 vertex must have degree >= 3 (jdeg >= 0 is part of validity)."""
    report = validate_sliced(t)
    if not report.ok:
        raise InvalidTree(
            "; ".join(f"{v.clause}@{v.where}" for v in report.violations)
        )
    return all(j.twelfths > 0 or t.degree(v) >= 3 for v, j in t.jdeg.items())


def _contribution_twelfths(p: PrunedTree, v: str) -> int:
    """12 * (jdeg(v) + sum of klt markings + lc count)."""
    return (
        p.tree.jdeg[v].twelfths
        + sum(m.twelfths for m in p.klt[v])
        + 12 * p.lc[v]
    )


def weight(p: PrunedTree, v: str) -> Frac12:
    """wt(v) = deg(v) - 2 + jdeg(v) + sum of klt markings + number of lc markings."""
    if v not in p.tree.jdeg:
        raise UnknownVertex(v)
    return Frac12.from_twelfths(
        12 * (p.tree.degree(v) - 2) + _contribution_twelfths(p, v)
    )


def is_pruned_stable(p: PrunedTree) -> bool:
    """Stable iff every vertex has strictly positive weight."""
    return all(weight(p, v).twelfths > 0 for v in p.tree.jdeg)


def height(p: PrunedTree) -> Frac12:
    """Sum over vertices of jdeg + klt markings + lc count."""
    return Frac12.from_twelfths(
        sum(_contribution_twelfths(p, v) for v in p.tree.jdeg)
    )


def sum_weights(p: PrunedTree) -> Frac12:
    """Sum of all vertex weights; equals height - 2 on any tree."""
    return Frac12.from_twelfths(
        sum(weight(p, v).twelfths for v in p.tree.jdeg)
    )


def validate_pruned(p: PrunedTree) -> ValidationReport:
    """Sliced-tree invariants plus klt values drawn from the legal table."""
    report = validate_sliced(p.tree)
    for v, marks in p.klt.items():
        for m in marks:
            if not is_klt_marking(m):
                report.violations.append(
                    Violation("klt-value", v, f"{m} is not a legal klt marking")
                )
    for v, n in p.lc.items():
        if n < 0:
            report.violations.append(
                Violation("lc-count", v, f"negative lc count {n}")
            )
    report.ok = not report.violations
    return report


def canonical_key(p: PrunedTree | SlicedTree) -> str:
    """Canonical encoding; equal iff decorated-tree isomorphic.

    AHU encoding rooted at the centroid; for a bicentroid, the lexicographic
    minimum over the two rootings.  Decorations (jdeg, sorted klt multiset,
    lc count, oriented edge slicings) are folded into the labels.
    """
    if isinstance(p, SlicedTree):
        p = PrunedTree.bare(p)
    t = p.tree
    verts = t.vertices
    if len(verts) == 1:
        v = verts[0]
        return _vertex_label(p, v) + "[]"

    centroids = _centroids(t)
    keys = []
    for root in centroids:
        keys.append(_encode(p, root, None))
    return min(keys)


def _vertex_label(p: PrunedTree, v: str) -> str:
    klt = ",".join(str(m.twelfths) for m in p.klt[v])
    return f"{p.tree.jdeg[v].twelfths};{klt};{p.lc[v]}"


def _encode(p: PrunedTree, v: str, parent_edge: Edge | None) -> str:
    t = p.tree
    parts = []
    for e in t.incident(v):
        if e is parent_edge:
            continue
        w = e.other(v)
        if e.slicing is None:
            elab = "-"
        else:
            elab = f"{e.value_at(v).twelfths}:{e.value_at(w).twelfths}"
        parts.append(f"{elab}({_encode(p, w, e)})")
    parts.sort()
    return _vertex_label(p, v) + "[" + "".join(parts) + "]"


def _centroids(t: SlicedTree) -> list[str]:
    """Centroid(s) of the underlying tree (1 or 2 vertices)."""
    n = len(t.jdeg)
    size = {}
    best: list[str] = []
    best_val = n + 1

    order: list[tuple[str, str | None]] = []
    stack: list[tuple[str, str | None]] = [(next(iter(sorted(t.jdeg))), None)]
    seen = set()
    while stack:
        v, parent = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        order.append((v, parent))
        for w in t.neighbors(v):
            if w != parent:
                stack.append((w, v))
    for v, parent in reversed(order):
        size[v] = 1 + sum(size[w] for w in t.neighbors(v) if w != parent)
    for v, parent in order:
        heaviest = max(
            [n - size[v]] + [size[w] for w in t.neighbors(v) if w != parent],
            default=0,
        )
        if heaviest < best_val:
            best_val = heaviest
            best = [v]
        elif heaviest == best_val:
            best.append(v)
    return best
