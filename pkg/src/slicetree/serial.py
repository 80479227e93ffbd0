"""JSON interchange and DOT export.

JSON is the one canonical format; all fractions travel as "p/q" strings in
lowest terms and every collection is emitted in a deterministic sorted
order, so identical inputs serialize byte-identically.  DOT is export-only
and mirrors the figure conventions: sliced edges carry their pair label,
klt-markings become "(p/q)" stubs and lc-markings starred stubs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .enumeration import Census, CensusEntry
from .errors import InvalidTree
from .fracs import Frac12
from .pruning import PruneEvent, PruneTrace
from .trees import Edge, PrunedTree, SlicedTree, canonical_key
from .weierstrass import PointData, WeierstrassProfile


def frac_str(x) -> str:
    """Lowest-terms "p/q" (plain "p" for integers)."""
    if isinstance(x, Frac12):
        x = x.as_fraction()
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_frac12(s: str) -> Frac12:
    return Frac12.parse(s)


# ---------------------------------------------------------------- trees


def tree_to_obj(p: PrunedTree | SlicedTree) -> dict:
    if isinstance(p, SlicedTree):
        p = PrunedTree.bare(p)
    t = p.tree
    vertices = [
        {
            "id": v,
            "jdeg": frac_str(t.jdeg[v]),
            "klt": [frac_str(m) for m in p.klt[v]],
            "lc": p.lc[v],
        }
        for v in sorted(t.jdeg)
    ]
    edges = [
        {
            "u": e.u,
            "v": e.v,
            "slicing": None
            if e.slicing is None
            else [frac_str(e.slicing[0]), frac_str(e.slicing[1])],
        }
        for e in sorted(t.edges, key=lambda e: (e.u, e.v))
    ]
    return {"vertices": vertices, "edges": edges}


def tree_from_obj(obj: dict) -> PrunedTree:
    try:
        jdeg = {}
        klt = {}
        lc = {}
        for rec in obj["vertices"]:
            vid = rec["id"]
            if not isinstance(vid, str):
                raise InvalidTree(f"vertex id {vid!r} must be a string")
            if vid in jdeg:
                raise InvalidTree(f"duplicate vertex id {vid!r}")
            jdeg[vid] = Frac12.parse(rec["jdeg"])
            klt[vid] = [Frac12.parse(m) for m in rec.get("klt", [])]
            lc[vid] = int(rec.get("lc", 0))
        edges = []
        for rec in obj["edges"]:
            slicing = None
            if rec.get("slicing") is not None:
                a, b = rec["slicing"]
                slicing = (Frac12.parse(a), Frac12.parse(b))
            edges.append(Edge.make(rec["u"], rec["v"], slicing))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidTree(f"malformed tree record: {exc}") from exc
    return PrunedTree(SlicedTree(jdeg, edges), klt=klt, lc=lc)


def tree_to_json(p: PrunedTree | SlicedTree) -> str:
    return json.dumps(tree_to_obj(p), indent=2, sort_keys=False) + "\n"


def tree_from_json(text: str) -> PrunedTree:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidTree(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise InvalidTree("tree JSON must be an object with vertices and edges")
    return tree_from_obj(obj)


# ---------------------------------------------------------------- traces


def event_to_obj(e: PruneEvent) -> dict:
    return {
        "removed": e.removed,
        "neighbor": e.neighbor,
        "leaf_weight": frac_str(e.leaf_weight),
        "t": frac_str(e.t),
        "action": e.action,
        "round": e.round,
        "snapshot_key": e.snapshot_key,
    }


def trace_to_obj(tr: PruneTrace) -> dict:
    return {
        "input": tree_to_obj(tr.initial),
        "events": [event_to_obj(e) for e in tr.events],
        "final": tree_to_obj(tr.final),
    }


def trace_to_json(tr: PruneTrace) -> str:
    return json.dumps(trace_to_obj(tr), indent=2) + "\n"


# ---------------------------------------------------------------- census


def census_entry_to_obj(e: CensusEntry) -> dict:
    return {
        "key": e.key,
        "vertex_count": e.vertex_count,
        "leaf_count": e.leaf_count,
        "marking_profile": e.marking_profile,
        "tree": tree_to_obj(e.tree),
    }


def census_to_obj(c: Census) -> dict:
    return {
        "height": c.height,
        "target": c.target,
        "complete": c.complete,
        "count": len(c.entries),
        "by_vertex_count": {str(k): v for k, v in sorted(c.by_vertex_count.items())},
        "by_leaf_count": {str(k): v for k, v in sorted(c.by_leaf_count.items())},
        "by_marking_profile": dict(sorted(c.by_marking_profile.items())),
        "entries": [census_entry_to_obj(e) for e in c.entries],
    }


def census_to_json(c: Census) -> str:
    return json.dumps(census_to_obj(c), indent=2) + "\n"


# ---------------------------------------------------------------- profiles


def profile_from_obj(obj: dict) -> WeierstrassProfile:
    try:
        points = [
            PointData(
                label=p["label"],
                ord_a=int(p["ordA"]),
                ord_b=int(p["ordB"]),
                ord_delta=None if p.get("ordDelta") is None else int(p["ordDelta"]),
            )
            for p in obj["points"]
        ]
        return WeierstrassProfile(int(obj["n"]), points)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed profile record: {exc}") from exc


def profile_to_obj(p: WeierstrassProfile) -> dict:
    return {
        "n": p.n,
        "points": [
            {
                "label": pt.label,
                "ordA": pt.ord_a,
                "ordB": pt.ord_b,
                "ordDelta": pt.ord_delta,
            }
            for pt in p.points
        ],
    }


# ---------------------------------------------------------------- DOT


def _dot_quote(s: str) -> str:
    # escape quotes only: backslash sequences like \n are meaningful in DOT
    return '"' + s.replace('"', '\\"') + '"'


def tree_to_dot(p: PrunedTree | SlicedTree, name: str = "tree") -> str:
    """DOT rendering; vertex label "id\\njdeg", marking stubs as extra nodes."""
    if isinstance(p, SlicedTree):
        p = PrunedTree.bare(p)
    t = p.tree
    lines = [f"graph {_dot_quote(name)} {{", "  node [shape=circle];"]
    for v in sorted(t.jdeg):
        label = f"{v}\\n{frac_str(t.jdeg[v])}"
        lines.append(f"  {_dot_quote(v)} [label={_dot_quote(label)}];")
    for e in sorted(t.edges, key=lambda e: (e.u, e.v)):
        if e.slicing is None:
            lines.append(f"  {_dot_quote(e.u)} -- {_dot_quote(e.v)};")
        else:
            lab = f"({frac_str(e.slicing[0])},{frac_str(e.slicing[1])})"
            lines.append(
                f"  {_dot_quote(e.u)} -- {_dot_quote(e.v)} "
                f"[label={_dot_quote(lab)}];"
            )
    stub = 0
    for v in sorted(t.jdeg):
        for m in p.klt[v]:
            sid = f"__klt{stub}"
            stub += 1
            lines.append(
                f"  {_dot_quote(sid)} [shape=none, "
                f"label={_dot_quote('(' + frac_str(m) + ')')}];"
            )
            lines.append(f"  {_dot_quote(v)} -- {_dot_quote(sid)} [style=dashed];")
        for _ in range(p.lc[v]):
            sid = f"__lc{stub}"
            stub += 1
            lines.append(f"  {_dot_quote(sid)} [shape=none, label={_dot_quote('*')}];")
            lines.append(f"  {_dot_quote(v)} -- {_dot_quote(sid)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_dot_frames(tr: PruneTrace, per_round: bool = True) -> list[str]:
    """One DOT frame per round (or per event): initial plus each snapshot.

    Frames are reconstructed by replaying the events, so traces recorded
    without snapshots still export.
    """
    frames = [tree_to_dot(tr.initial, name="frame0")]
    work_events = list(tr.events)
    if not work_events:
        return frames

    # replay on a mutable copy
    from .pruning import _Working

    w = _Working(tr.initial)
    boundaries = []
    for i, e in enumerate(work_events):
        w.remove_leaf(e.removed)
        nxt = work_events[i + 1] if i + 1 < len(work_events) else None
        if not per_round or nxt is None or nxt.round != e.round:
            boundaries.append(w.snapshot())
    for i, snap in enumerate(boundaries, start=1):
        frames.append(tree_to_dot(snap, name=f"frame{i}"))
    return frames
