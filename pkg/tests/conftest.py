import pytest

from slicetree import Edge, PrunedTree, SlicedTree
from slicetree.fracs import frac as F

# per-criterion result lines from the acceptance suite; echoed in the
# terminal summary so they are visible even under output capture
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def example7():
    """Six-vertex worked example: prunes to {b, d, f, h}."""
    jdeg = {
        "a": F("1"),
        "b": F("4/3"),
        "c": F("1/6"),
        "d": F("0"),
        "f": F("2"),
        "h": F("3/2"),
    }
    edges = [
        Edge.make("a", "b"),
        Edge.make("b", "c", (F("1/6"), F("5/6"))),
        Edge.make("b", "d", (F("1/2"), F("1/2"))),
        Edge.make("d", "f"),
        Edge.make("d", "h", (F("1/2"), F("1/2"))),
    ]
    return SlicedTree(jdeg, edges)


@pytest.fixture
def chain4():
    """Height-4 chain pruned in three rounds under the per-round policy."""
    jdeg = {
        f"v{i}": j
        for i, j in zip(
            range(1, 8),
            [F("1/2"), F("1/2"), F("1"), F("3/2"), F("1/6"), F("1/6"), F("1/6")],
        )
    }
    edges = [
        Edge.make("v1", "v2", (F("1/2"), F("1/2"))),
        Edge.make("v2", "v3"),
        Edge.make("v3", "v4"),
        Edge.make("v4", "v5", (F("1/2"), F("1/2"))),
        Edge.make("v5", "v6", (F("1/3"), F("2/3"))),
        Edge.make("v6", "v7", (F("1/6"), F("5/6"))),
    ]
    return SlicedTree(jdeg, edges)


@pytest.fixture
def chain6():
    """Already-stable 6-vertex chain of height 3 (pruning fixed point)."""
    jdeg = {
        f"u{i}": j
        for i, j in zip(
            range(1, 7),
            [F("7/6"), F("1/6"), F("1/6"), F("1/6"), F("1/6"), F("7/6")],
        )
    }
    pairs = [
        ("5/6", "1/6"),
        ("2/3", "1/3"),
        ("1/2", "1/2"),
        ("1/3", "2/3"),
        ("1/6", "5/6"),
    ]
    edges = [
        Edge.make(f"u{i}", f"u{i+1}", (F(a), F(b)))
        for i, (a, b) in zip(range(1, 6), pairs)
    ]
    return SlicedTree(jdeg, edges)


@pytest.fixture
def chain7():
    """Stable 7-vertex chain of height 3: a fixed point of pruning that
    exceeds the six-vertex bound claimed for geometric KSB limits."""
    jdeg = {
        f"w{i}": j
        for i, j in zip(
            range(1, 8),
            [F("7/6"), F("1/12"), F("1/12"), F("1/3"), F("1/12"), F("1/12"), F("7/6")],
        )
    }
    pairs = [
        ("5/6", "1/6"),
        ("3/4", "1/4"),
        ("2/3", "1/3"),
        ("1/3", "2/3"),
        ("1/4", "3/4"),
        ("1/6", "5/6"),
    ]
    edges = [
        Edge.make(f"w{i}", f"w{i+1}", (F(a), F(b)))
        for i, (a, b) in zip(range(1, 7), pairs)
    ]
    return SlicedTree(jdeg, edges)


@pytest.fixture
def example7_pruned(example7):
    return PrunedTree.bare(example7)
