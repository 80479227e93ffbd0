"""Exhaustive enumeration of decorated trees at a fixed height.

Trees are generated as rooted decorated subtrees combined bottom-up, with
all costs tracked in twelfths of the height budget, then assembled at every
possible root and deduplicated by canonical key.  Decorations are pinned
down by the per-vertex integrality constraint (jdeg + adjacent slicings is
an integer), which is what keeps the search finite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CapExceeded
from .fracs import Frac12, SLICING_VALUES_TWELFTHS
from .pruning import prune
from .trees import (
    Edge,
    PrunedTree,
    SlicedTree,
    canonical_key,
)

_SLICES = tuple(sorted(SLICING_VALUES_TWELFTHS))  # (2, 3, 4, 6, 8, 9, 10)
_KLT = _SLICES


@dataclass
class EnumerationParams:
    height: int
    target: str  # "sliced" | "pruned"
    max_vertices: int = 40
    max_entries: int = 10_000

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be >= 1")
        if self.target not in ("sliced", "pruned"):
            raise ValueError("target must be 'sliced' or 'pruned'")


@dataclass
class CensusEntry:
    key: str
    tree: PrunedTree
    vertex_count: int
    leaf_count: int
    marking_profile: str


@dataclass
class Census:
    height: int
    target: str
    entries: list[CensusEntry]
    complete: bool = True
    by_vertex_count: dict[int, int] = field(default_factory=dict)
    by_leaf_count: dict[int, int] = field(default_factory=dict)
    by_marking_profile: dict[str, int] = field(default_factory=dict)

    def finalize(self) -> Census:
        self.entries.sort(key=lambda e: e.key)
        self.by_vertex_count = _tally(e.vertex_count for e in self.entries)
        self.by_leaf_count = _tally(e.leaf_count for e in self.entries)
        self.by_marking_profile = _tally(e.marking_profile for e in self.entries)
        return self


def _tally(items) -> dict:
    out: dict = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


# A rooted subtree is a nested tuple
#   node = (jdeg, klt_tuple, lc, children)
#   children = tuple of (s_child, node), sorted
# where s_child is the slicing value at the child end of its parent edge
# (0 = unsliced).  All values in twelfths.


@lru_cache(maxsize=None)
def _klt_multisets(total: int) -> tuple[tuple[int, ...], ...]:
    """Sorted multisets of klt values (twelfths) summing exactly to total."""
    out = []

    def rec(remaining: int, minimum: int, acc: tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        for v in _KLT:
            if v < minimum or v > remaining:
                continue
            rec(remaining - v, v, acc + (v,))

    rec(total, 0, ())
    return tuple(out)


def _decorations(residue: int, max_cost: int, pruned: bool):
    """All (jdeg, klt, lc, cost) with jdeg = residue mod 12, cost <= max_cost."""
    if not pruned:
        j = residue % 12
        while j <= max_cost:
            yield (j, (), 0, j)
            j += 12
        return
    for marks_cost in range(0, max_cost + 1):
        for marks in _klt_multisets(marks_cost):
            for lc in range(0, (max_cost - marks_cost) // 12 + 1):
                j = residue % 12
                while j + marks_cost + 12 * lc <= max_cost:
                    yield (j, marks, lc, j + marks_cost + 12 * lc)
                    j += 12


class _Generator:
    def __init__(self, params: EnumerationParams):
        self.budget = 12 * params.height
        self.pruned = params.target == "pruned"
        self.max_vertices = params.max_vertices
        self.params = params
        # pool[k] = list of (cost, s, node, min_unused) subtrees with k vertices
        self.pool: list[list[tuple[int, int, tuple]]] = [[]]

    def _root_ok(self, n_children: int, has_parent: bool, cost_v: int, jdeg: int) -> bool:
        deg = n_children + (1 if has_parent else 0)
        if self.pruned:
            # stability: deg - 2 + contribution > 0
            return 12 * (deg - 2) + cost_v > 0
        # tsm-stability for sliced targets
        return jdeg > 0 or deg >= 3

    def _min_completion(self) -> int:
        """Least cost of the rest of the tree above a parent-attached subtree.

        Pruned: the remaining part contains a vertex whose weight must be
        positive even at degree 1, so it costs > 12 twelfths.  Sliced: the
        parent needs jdeg on the lattice, at least 1/12 unless forced to 0.
        """
        return 13 if self.pruned else 1

    def _vertex_bound(self) -> int:
        """Provable cap on vertex counts at this height.

        Leaves cost >= 2 twelfths (sliced; integrality forces jdeg >= 1/6)
        or > 12 (pruned; leaf weight > 0), degree-2 vertices cost >= 1, and
        cost-0 branch vertices number fewer than the leaves.
        """
        if self.pruned:
            return max(1, self.budget - 24)
        return max(1, self.budget - 2)

    def _child_combos(self, flat_pool, start: int, budget: int, size_needed: int):
        """Multisets of children (non-decreasing pool index) of exact total size."""
        if size_needed == 0:
            yield ()
            return
        for i in range(start, len(flat_pool)):
            cost, _s, _node, sz = flat_pool[i]
            if cost > budget:
                break
            if sz > size_needed:
                continue
            for rest in self._child_combos(
                flat_pool, i, budget - cost, size_needed - sz
            ):
                yield (i,) + rest

    def run(self) -> Census:
        census = Census(self.params.height, self.params.target, [], complete=True)
        seen: set[str] = set()
        flat: list[tuple[int, int, tuple, int]] = []
        k_max = min(self.max_vertices, self._vertex_bound())
        hit_cap = False

        for k in range(1, k_max + 1):
            new_level: list[tuple[int, int, tuple, int]] = []
            flat.sort(key=lambda t: t[0])
            for combo in self._child_combos(flat, 0, self.budget, k - 1):
                child_cost = sum(flat[i][0] for i in combo)
                children = tuple(sorted((flat[i][1], flat[i][2]) for i in combo))
                sliced_sum = sum(12 - s for s, _ in children if s > 0)

                # as a rooted subtree hanging off a future parent edge;
                # the rest of the tree still needs _min_completion cost
                sub_budget = self.budget - self._min_completion() - child_cost
                if k < k_max and sub_budget >= 0:
                    for s in (0,) + _SLICES:
                        residue = (-(s + sliced_sum)) % 12
                        for j, marks, lc, cost_v in _decorations(
                            residue, sub_budget, self.pruned
                        ):
                            if not self._root_ok(len(combo), True, cost_v, j):
                                continue
                            node = (j, marks, lc, children)
                            new_level.append((child_cost + cost_v, s, node, k))

                # as the global root, consuming the budget exactly
                residue = (-sliced_sum) % 12
                cost_v = self.budget - child_cost
                if cost_v >= 0 and cost_v % 12 == residue % 12:
                    for j, marks, lc, cv in _decorations(
                        residue, cost_v, self.pruned
                    ):
                        if cv != cost_v:
                            continue
                        if not self._root_ok(len(combo), False, cv, j):
                            continue
                        node = (j, marks, lc, children)
                        tree = _node_to_tree(node, self.pruned)
                        key = canonical_key(tree)
                        if key in seen:
                            continue
                        if len(seen) >= self.params.max_entries:
                            hit_cap = True
                            break
                        seen.add(key)
                        census.entries.append(_entry(key, tree))
                if hit_cap:
                    break
            if hit_cap:
                break
            flat.extend(new_level)

        if hit_cap or self.max_vertices < self._vertex_bound():
            if hit_cap:
                census.complete = False
                raise CapExceeded(
                    f"census exceeded {self.params.max_entries} entries",
                    partial=census.finalize(),
                )
            if any(t[3] == self.max_vertices for t in flat) or any(
                e.vertex_count == self.max_vertices for e in census.entries
            ):
                census.complete = False
                raise CapExceeded(
                    f"vertex cap {self.max_vertices} reached before the "
                    f"structural bound {self._vertex_bound()}",
                    partial=census.finalize(),
                )

        return census.finalize()


def _node_to_tree(node: tuple, pruned: bool) -> PrunedTree:
    jdeg: dict[str, Frac12] = {}
    klt: dict[str, list[Frac12]] = {}
    lc: dict[str, int] = {}
    edges: list[Edge] = []
    counter = [0]

    def visit(nd) -> str:
        j, marks, lcn, children = nd
        vid = f"v{counter[0]:02d}"
        counter[0] += 1
        jdeg[vid] = Frac12.from_twelfths(j)
        klt[vid] = [Frac12.from_twelfths(m) for m in marks]
        lc[vid] = lcn
        for s, child in children:
            cid = visit(child)
            slicing = None
            if s > 0:
                slicing = (Frac12.from_twelfths(12 - s), Frac12.from_twelfths(s))
            edges.append(Edge.make(vid, cid, slicing))
        return vid

    visit(node)
    return PrunedTree(SlicedTree(jdeg, edges), klt=klt, lc=lc)


def _entry(key: str, tree: PrunedTree) -> CensusEntry:
    t = tree.tree
    n = len(t.jdeg)
    leaves = sum(1 for v in t.jdeg if t.degree(v) == 1)
    n_klt = sum(len(m) for m in tree.klt.values())
    n_lc = sum(tree.lc.values())
    profile = f"klt={n_klt},lc={n_lc}"
    return CensusEntry(
        key=key,
        tree=tree,
        vertex_count=n,
        leaf_count=leaves,
        marking_profile=profile,
    )


def enumerate_sliced(params: EnumerationParams) -> Census:
    """All tsm-stable sliced trees of the given height, up to isomorphism."""
    if params.target != "sliced":
        raise ValueError("params.target must be 'sliced'")
    return _Generator(params).run()


def enumerate_pruned(params: EnumerationParams) -> Census:
    """All stable pruned trees of the given height, up to isomorphism."""
    if params.target != "pruned":
        raise ValueError("params.target must be 'pruned'")
    return _Generator(params).run()


def prune_census(census: Census) -> dict[str, str]:
    """Map each sliced census key to the canonical key of its pruning image.

    Per-entry pruning failures are recorded as "error:<name>" values instead
    of aborting the whole census.
    """
    out: dict[str, str] = {}
    for entry in census.entries:
        try:
            trace = prune(entry.tree, with_snapshots=False)
            out[entry.key] = canonical_key(trace.final)
        except Exception as exc:  # noqa: BLE001 - census must not abort
            out[entry.key] = f"error:{type(exc).__name__}"
    return out


def random_sliced_tree(height: int, rng: random.Random, max_vertices: int = 9) -> SlicedTree:
    """Random valid tsm-stable sliced tree of the given integer height.

    Shape and slicings are sampled first; jdeg values are then forced onto
    the integrality lattice and topped up to hit the height exactly.
    """
    while True:
        n = rng.randint(1, max_vertices)
        ids = [f"v{i:02d}" for i in range(n)]
        edges: list[Edge] = []
        for i in range(1, n):
            parent = ids[rng.randrange(i)]
            slicing = None
            if rng.random() < 0.5:
                s = rng.choice(_SLICES)
                slicing = (Frac12.from_twelfths(12 - s), Frac12.from_twelfths(s))
            edges.append(Edge.make(parent, ids[i], slicing))

        tree = SlicedTree({v: Frac12(0) for v in ids}, edges)
        mins = {}
        for v in ids:
            r = (-sum(
                e.value_at(v).twelfths
                for e in tree.incident(v)
                if e.slicing is not None
            )) % 12
            if r == 0 and tree.degree(v) < 3:
                r = 12
            mins[v] = r
        total = sum(mins.values())
        if total > 12 * height or total % 12 != 12 * height % 12:
            continue
        extra = (12 * height - total) // 12
        for _ in range(extra):
            mins[rng.choice(ids)] += 12
        return SlicedTree(
            {v: Frac12.from_twelfths(mins[v]) for v in ids}, edges
        )
