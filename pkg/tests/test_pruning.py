import random

import pytest

from slicetree import (
    PrunedTree,
    SlicedTree,
    canonical_key,
    height,
    is_pruned_stable,
    prune,
    prune_with_order,
    sum_weights,
    weight,
)
from slicetree.errors import (
    InvalidOrder,
    InvalidTree,
    MarkingOutsideTable,
    NonPositiveTotalWeight,
)
from slicetree.fracs import frac as F
from slicetree.pruning import _Working, _as_pruned
from slicetree.trees import Edge


def random_order(g, rng) -> list:
    """A complete random valid pruning order, built on a scratch copy."""
    w = _Working(_as_pruned(g))
    order = []
    while True:
        due = w.leaves_due()
        if not due:
            return order
        v = rng.choice(due)
        w.remove_leaf(v)
        order.append(v)


def test_example7_golden(example7):
    trace = prune(example7)
    assert sorted(trace.final.tree.jdeg) == ["b", "d", "f", "h"]
    assert [(e.removed, e.action, str(e.t)) for e in trace.events] == [
        ("a", "lc-mark", "1"),
        ("c", "klt-mark", "1/6"),
    ]
    final = trace.final
    assert [str(m) for m in final.klt["b"]] == ["1/6"]
    assert final.lc["b"] == 1
    expected = {"b": "3/2", "d": "1", "f": "1", "h": "1/2"}
    for v, w in expected.items():
        assert str(weight(final, v)) == w
    assert is_pruned_stable(final)
    assert str(height(final)) == "6"


def test_chain4_rounds_golden(chain4):
    trace = prune_with_order(chain4, "rounds")
    assert trace.rounds == 3
    assert [(e.removed, e.neighbor, e.action, str(e.t), e.round) for e in trace.events] == [
        ("v1", "v2", "klt-mark", "1/2", 1),
        ("v7", "v6", "klt-mark", "1/6", 1),
        ("v2", "v3", "lc-mark", "1", 2),
        ("v6", "v5", "klt-mark", "1/3", 2),
        ("v5", "v4", "klt-mark", "1/2", 3),
    ]
    final = trace.final
    assert sorted(final.tree.jdeg) == ["v3", "v4"]
    assert str(final.tree.jdeg["v3"]) == "1"
    assert final.lc["v3"] == 1
    assert [str(m) for m in final.klt["v4"]] == ["1/2"]
    assert str(weight(final, "v3")) == "1"
    assert str(weight(final, "v4")) == "1"


def test_stable_input_empty_trace(chain6):
    trace = prune(chain6)
    assert trace.events == ()
    assert canonical_key(trace.final) == canonical_key(chain6)


def test_chain7_fixed_point(chain7):
    trace = prune(chain7)
    assert trace.events == ()
    assert len(trace.final.tree.jdeg) == 7


def test_conservation_along_prefixes(example7, chain4):
    for g in (example7, chain4):
        p = PrunedTree.bare(g)
        total = sum_weights(p)
        h = height(p)
        trace = prune_with_order(g, "rounds")
        w = _Working(p)
        for e in trace.events:
            w.remove_leaf(e.removed)
            snap = w.snapshot()
            assert sum_weights(snap) == total
            assert height(snap) == h
        assert sum_weights(trace.final) == total
        assert height(trace.final) == h


def test_confluence_on_examples(example7, chain4):
    rng = random.Random(99)
    for g in (example7, chain4):
        keys = {
            canonical_key(prune(g).final),
            canonical_key(prune_with_order(g, "rounds").final),
        }
        for _ in range(10):
            keys.add(canonical_key(prune_with_order(g, random_order(g, rng)).final))
        assert len(keys) == 1


def test_explicit_order_example7(example7):
    t1 = prune_with_order(example7, ["a", "c"])
    t2 = prune_with_order(example7, ["c", "a"])
    assert canonical_key(t1.final) == canonical_key(t2.final)


def test_invalid_order(example7):
    with pytest.raises(InvalidOrder):
        prune_with_order(example7, ["b"])  # not a leaf
    with pytest.raises(InvalidOrder):
        prune_with_order(example7, ["h"])  # leaf with positive weight
    with pytest.raises(InvalidOrder):
        prune_with_order(example7, ["zz"])  # unknown vertex
    with pytest.raises(InvalidOrder):
        prune_with_order(example7, "bogus-policy")


def test_nonpositive_total_weight():
    # height 2 => sum of weights 0: no stable result can exist
    t = SlicedTree({"a": F(1), "b": F(1)}, [Edge.make("a", "b")])
    with pytest.raises(NonPositiveTotalWeight):
        prune(t)


def test_invalid_tree_rejected():
    t = SlicedTree({"a": F("1/2")}, [])
    with pytest.raises(InvalidTree):
        prune(t)


def test_marking_outside_table():
    # leaf whose t = wt + 1 = 5/12 is not 0, not 1 and not a klt value
    p = PrunedTree(
        SlicedTree(
            {"a": F("1/6"), "b": F("17/6")},
            [Edge.make("a", "b", (F("5/6"), F("1/6")))],
        ),
        klt={"a": [F("1/4")]},
    )
    with pytest.raises(MarkingOutsideTable):
        prune(p)


def test_drop_event():
    # leaf with weight -1 (t = 0) is logged as a drop
    p = PrunedTree(
        SlicedTree({"a": F(0), "b": F(3)}, [Edge.make("a", "b")]),
    )
    trace = prune(p)
    assert [(e.removed, e.action) for e in trace.events] == [("a", "drop")]
    assert sorted(trace.final.tree.jdeg) == ["b"]


def test_snapshot_keys_replay(chain4):
    trace = prune_with_order(chain4, "rounds")
    # each snapshot key matches an independent replay of the prefix
    for i, e in enumerate(trace.events):
        prefix = [ev.removed for ev in trace.events[: i + 1]]
        w = _Working(_as_pruned(chain4))
        for v in prefix:
            w.remove_leaf(v)
        assert canonical_key(w.snapshot()) == e.snapshot_key


def test_termination_bound(example7):
    trace = prune(example7)
    assert len(trace.events) <= len(example7.jdeg) - 1
