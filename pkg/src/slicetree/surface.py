"""Closed-form surface numerics: intersection numbers, flips, volumes.

These formulas live at the level of a single fibered component (genus of the
base, degree of the j-map, node count, cusp data) and double as an
independent oracle for tree weights: for a genus-0 component the log
intersection number equals the weight of the corresponding vertex.

Volumes and flip reciprocals need denominators outside the 1/12 lattice, so
this module returns plain Fractions where that happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCurve, EpsilonOutOfRange, HeightTooSmall
from .fracs import Frac12, is_klt_marking


@dataclass
class ComponentData:
    """Numerical data of one fibered component.

    klt_cusps holds the (1 - lct) values of the klt cusps; lc cusps each
    carry (1 - lct) = 1 and are tracked by count.
    """

    genus: int
    jdeg: Frac12
    nodes: int
    klt_cusps: tuple[Frac12, ...] = ()
    lc_cusps: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.nodes < 0 or self.lc_cusps < 0:
            raise ValueError("genus, node count and lc cusp count must be >= 0")
        for m in self.klt_cusps:
            if not is_klt_marking(m):
                raise ValueError(f"{m} is not a legal klt cusp value")


@dataclass
class FlipRecord:
    """Self-intersection bookkeeping of one flip step.

    Conservation (s_minus_sq + s_p_sq = s_plus_sq) is the proof-level
    relation; one_minus_lct = |1/A^2| lies in (0, 1] for A^2 <= -1.
    """

    s_plus_sq: Fraction
    a_sq: Fraction
    s_minus_sq: Fraction
    s_p_sq: Fraction
    one_minus_lct: Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Frac12):
        return x.as_fraction()
    return Fraction(x)


def section_self_intersection(c: ComponentData) -> Frac12:
    """S^2 = -jdeg - sum over replaced cusps of (1 - lct)."""
    t = -c.jdeg.twelfths - sum(m.twelfths for m in c.klt_cusps) - 12 * c.lc_cusps
    return Frac12.from_twelfths(t)


def log_intersection(c: ComponentData) -> Frac12:
    """(K + sum of fibers) . S = 2g - 2 + k + jdeg + klt cusp values + lc count.

    For genus 0 with k = vertex degree this is exactly the tree weight.
    """
    t = (
        12 * (2 * c.genus - 2 + c.nodes)
        + c.jdeg.twelfths
        + sum(m.twelfths for m in c.klt_cusps)
        + 12 * c.lc_cusps
    )
    return Frac12.from_twelfths(t)


def flip_update(s_plus_sq, a_sq) -> FlipRecord:
    """Self-intersections after a flip that flips out a curve of square a_sq.

    (S-)^2 = (S+)^2 - 1/A^2, with S_P^2 chosen so the conserved sum
    (S-)^2 + S_P^2 = (S+)^2 holds, and 1 - lct = |1/A^2|.
    """
    sp = _as_fraction(s_plus_sq)
    a2 = _as_fraction(a_sq)
    if a2 == 0:
        raise DegenerateCurve("A^2 = 0 has no reciprocal")
    if a2 > 0:
        raise DegenerateCurve(f"A^2 = {a2} must be negative")
    recip = Fraction(1) / a2
    return FlipRecord(
        s_plus_sq=sp,
        a_sq=a2,
        s_minus_sq=sp - recip,
        s_p_sq=recip,
        one_minus_lct=-recip,
    )


def ksba_window(n: int) -> tuple[Fraction, Fraction]:
    """Open interval of section coefficients c making the pair stable."""
    if n < 3:
        raise HeightTooSmall(f"stability window is empty for n = {n}")
    return (Fraction(0), Fraction(n - 2, n))


def pair_volume(n: int, c) -> Fraction:
    """vol(X, cS) = 2c(n-2) - nc^2."""
    if n < 0:
        raise HeightTooSmall(f"height {n} < 0")
    cf = _as_fraction(c)
    return 2 * cf * (n - 2) - n * cf * cf


def ksb_volume(n: int) -> Fraction:
    """vol of the pseudo-elliptic canonical model: (n-2)^2 / n."""
    if n < 3:
        raise HeightTooSmall(f"ksb volume needs n >= 3, got {n}")
    return Fraction((n - 2) ** 2, n)


def epsilon_data(n: int, eps) -> tuple[Fraction, Fraction]:
    """(c(eps), v(eps)) with c = (n-2)/n - eps and v = ((n-2)^2 - (n eps)^2)/n."""
    if n < 3:
        raise HeightTooSmall(f"epsilon data needs n >= 3, got {n}")
    e = _as_fraction(eps)
    if not (0 < e < Fraction(n - 2, n)):
        raise EpsilonOutOfRange(f"eps = {e} outside (0, {n - 2}/{n})")
    c = Fraction(n - 2, n) - e
    v = Fraction((n - 2) ** 2 - (n * e) ** 2, n)
    return c, v


def moduli_dimension(n: int) -> int:
    """Dimension of the component of the KSB moduli space: 10n - 2."""
    if n < 3:
        raise HeightTooSmall(f"dimension formula needs n >= 3, got {n}")
    return 10 * n - 2


def component_of_vertex(p, v: str) -> ComponentData:
    """Genus-0 component data matching vertex v of a pruned tree."""
    return ComponentData(
        genus=0,
        jdeg=p.tree.jdeg[v],
        nodes=p.tree.degree(v),
        klt_cusps=tuple(p.klt[v]),
        lc_cusps=p.lc[v],
    )
