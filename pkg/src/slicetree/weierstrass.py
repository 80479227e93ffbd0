"""Vanishing-order calculus for Weierstrass data (A, B) on the line.

Only the orders of vanishing matter for minimality, lc-ness, the
strictly-lc factorization and fiber-type classification, so a fibration is
abstracted to a finite list of points with orders.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InconsistentOrders, NotLC
from .fracs import Frac12, KodairaType

# Kodaira-Tate lookup for a minimal point, keyed on m = min(3 ordA, 2 ordB).
# Standard table (Tate's algorithm over a 1-dim base, cf. Miranda's tables);
# the tag ignores the I_k / I_0* sub-index, which is read off ord(Delta).
# Conveniently m/12 is exactly the slicing of the resulting type.
_TYPE_OF_MIN = {
    0: KodairaType.I,
    2: KodairaType.II,
    3: KodairaType.III,
    4: KodairaType.IV,
    6: KodairaType.I_STAR,
    8: KodairaType.IV_STAR,
    9: KodairaType.III_STAR,
    10: KodairaType.II_STAR,
}


@dataclass(frozen=True)
class PointData:
    label: str
    ord_a: int
    ord_b: int
    ord_delta: int | None = None

    def __post_init__(self):
        if self.ord_a < 0 or self.ord_b < 0:
            raise ValueError("vanishing orders must be >= 0")
        if self.ord_delta is not None and self.ord_delta < 0:
            raise ValueError("ord(Delta) must be >= 0")


@dataclass(frozen=True)
class PointClass:
    kind: str  # generic | nodal-or-smooth-degenerate | additive-minimal
    #          # | strictly-lc | non-lc
    kodaira: KodairaType | None = None


class WeierstrassProfile:
    """Height-n fibration datum: marked points with vanishing orders."""

    def __init__(self, n: int, points: list[PointData]):
        if n < 0:
            raise ValueError("height must be >= 0")
        labels = [p.label for p in points]
        if len(labels) != len(set(labels)):
            raise ValueError("point labels must be distinct")
        if sum(p.ord_a for p in points) > 4 * n:
            raise ValueError(f"total ord(A) exceeds deg A = {4 * n}")
        if sum(p.ord_b for p in points) > 6 * n:
            raise ValueError(f"total ord(B) exceeds deg B = {6 * n}")
        self.n = n
        self.points = list(points)

    def point(self, label: str) -> PointData:
        for p in self.points:
            if p.label == label:
                return p
        raise KeyError(label)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeierstrassProfile)
            and self.n == other.n
            and self.points == other.points
        )


def classify_point(ord_a: int, ord_b: int) -> PointClass:
    """Minimal / strictly-lc / non-lc from m = min(3 ordA, 2 ordB) vs 12."""
    m = min(3 * ord_a, 2 * ord_b)
    if m > 12:
        return PointClass("non-lc")
    if m == 12:
        return PointClass("strictly-lc")
    if ord_a == 0 and ord_b == 0:
        return PointClass("generic")
    if m == 0:
        return PointClass("nodal-or-smooth-degenerate")
    return PointClass("additive-minimal", _TYPE_OF_MIN[m])


def lc_factorize(p: WeierstrassProfile) -> tuple[WeierstrassProfile, int]:
    """Strip the (4, 6) factor at every strictly-lc point.

    Returns the minimal profile of height n - m and the count m of
    strictly-lc points.  The factorization is unique, so this is a proper
    inverse of adding (4, 6) at chosen points.
    """
    out = []
    m = 0
    for pt in p.points:
        kind = classify_point(pt.ord_a, pt.ord_b).kind
        if kind == "non-lc":
            raise NotLC(f"point {pt.label} has non-lc orders ({pt.ord_a}, {pt.ord_b})")
        if kind == "strictly-lc":
            m += 1
            out.append(
                replace(
                    pt,
                    ord_a=pt.ord_a - 4,
                    ord_b=pt.ord_b - 6,
                    ord_delta=None if pt.ord_delta is None else pt.ord_delta - 12,
                )
            )
        else:
            out.append(pt)
    return WeierstrassProfile(p.n - m, out), m


def cusp_condition(p: WeierstrassProfile, label: str) -> bool:
    """True iff A and B both vanish at the point (the fiber is cuspidal)."""
    pt = p.point(label)
    return pt.ord_a >= 1 and pt.ord_b >= 1


def kodaira_from_orders(
    ord_a: int, ord_b: int, ord_delta: int | None = None
) -> KodairaType:
    """Kodaira-Tate type of a minimal point from its vanishing orders."""
    if ord_a < 0 or ord_b < 0:
        raise InconsistentOrders("orders must be >= 0")
    m = min(3 * ord_a, 2 * ord_b)
    if m >= 12:
        raise InconsistentOrders(
            f"({ord_a}, {ord_b}) is not minimal (min(3a, 2b) = {m} >= 12)"
        )
    if ord_delta is None:
        if m == 0:
            raise InconsistentOrders(
                "multiplicative region (min(3a, 2b) = 0) needs ord(Delta) to "
                "distinguish smooth from I_k fibers"
            )
        return _TYPE_OF_MIN[m]
    if m == 0:
        # ord(Delta) free: I_k for k = ord_delta (I_0 = smooth fiber).
        if ord_a > 0 or ord_b > 0:
            # one of A, B does not vanish, so Delta cannot vanish either
            if ord_delta != 0:
                raise InconsistentOrders(
                    f"({ord_a}, {ord_b}) forces ord(Delta) = 0, got {ord_delta}"
                )
        return KodairaType.I
    if 3 * ord_a == 2 * ord_b:
        # (a, b) = (2, 3): Delta can vanish to any order >= 6 (I_k*)
        if ord_delta < m:
            raise InconsistentOrders(
                f"({ord_a}, {ord_b}) needs ord(Delta) >= {m}, got {ord_delta}"
            )
    elif ord_delta != m:
        raise InconsistentOrders(
            f"({ord_a}, {ord_b}) forces ord(Delta) = {m}, got {ord_delta}"
        )
    return _TYPE_OF_MIN[m]


def classify_profile(p: WeierstrassProfile) -> list[dict]:
    """Per-point report: class, Kodaira type where determined, slicing."""
    from .fracs import slicing_of_kodaira

    out = []
    for pt in p.points:
        cls = classify_point(pt.ord_a, pt.ord_b)
        kod = cls.kodaira
        if kod is None and cls.kind in ("generic", "nodal-or-smooth-degenerate"):
            if pt.ord_delta is not None:
                try:
                    kod = kodaira_from_orders(pt.ord_a, pt.ord_b, pt.ord_delta)
                except InconsistentOrders:
                    kod = None
        entry = {
            "label": pt.label,
            "class": cls.kind,
            "kodaira": None if kod is None else str(kod),
            "slicing": None if kod is None else str(slicing_of_kodaira(kod)),
            "cuspidal": pt.ord_a >= 1 and pt.ord_b >= 1,
        }
        out.append(entry)
    return out
