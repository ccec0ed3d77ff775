"""
Arithmetic on the rank-2 lattice Z[H] + Z[L] with Gram matrix
[[2g-2, d], [d, 2r-2]], and a decision procedure for decomposition rigidity.

A splitting H = A + B is parametrised by integers (x, y) with A = xH - yL and
B = (1-x)H + yL. We always take A^2 >= 0 and B^2 >= -2; the splitting
H = L + (H - L) shows up twice, as (1, 1) and as (0, -1).

Candidates are found by scanning a bounded box and filtering with exact
integer inequalities. The box bound comes from a floating-point estimate
padded by a safety margin, which is sound because every membership test
afterwards is exact.
"""
from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field
from typing import Callable

from .bn_core import check_range, discriminant

ENUMERATION_MARGIN = 2
CANONICAL = frozenset({(1, 1), (0, -1)})


class DegenerateLattice(ValueError):
    """The lattice is not hyperbolic (discriminant >= 0)."""


@dataclass(frozen=True)
class PicardLatticeParams:
    g: int
    r: int
    d: int

    def __post_init__(self):
        check_range(self.g, self.r, self.d)
        if not (self.g >= 3 and self.r >= 1 and 2 <= self.d <= self.g - 1):
            raise ValueError(
                f"lattice ({self.g},{self.r},{self.d}) violates g>=3, r>=1, 2<=d<=g-1"
            )
        if self.discriminant >= 0:
            raise DegenerateLattice(
                f"discriminant {self.discriminant} >= 0 for ({self.g},{self.r},{self.d})"
            )

    @property
    def discriminant(self) -> int:
        return discriminant(self.g, self.r, self.d)

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * self.g - 2, self.d), (self.d, 2 * self.r - 2))


@dataclass(frozen=True)
class DivisorClass:
    """The class aH + bL."""

    a: int
    b: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __rmul__(self, n: int) -> DivisorClass:
        return DivisorClass(n * self.a, n * self.b)


H = DivisorClass(1, 0)
L = DivisorClass(0, 1)


def pairing(p: PicardLatticeParams, u: DivisorClass, v: DivisorClass) -> int:
    return (
        u.a * v.a * (2 * p.g - 2)
        + (u.a * v.b + u.b * v.a) * p.d
        + u.b * v.b * (2 * p.r - 2)
    )


def class_genus(p: PicardLatticeParams, u: DivisorClass) -> int:
    """Arithmetic genus u^2/2 + 1 of a curve in the class u."""
    return pairing(p, u, u) // 2 + 1


@dataclass(frozen=True)
class DecompositionCandidate:
    x: int
    y: int
    A_self: int
    B_self: int
    A_dot_H: int
    B_dot_H: int

    @property
    def A(self) -> DivisorClass:
        return DivisorClass(self.x, -self.y)

    @property
    def B(self) -> DivisorClass:
        return DivisorClass(1 - self.x, self.y)

    @property
    def xy(self) -> tuple[int, int]:
        return (self.x, self.y)


def make_candidate(p: PicardLatticeParams, x: int, y: int) -> DecompositionCandidate:
    A = DivisorClass(x, -y)
    B = DivisorClass(1 - x, y)
    return DecompositionCandidate(
        x, y, pairing(p, A, A), pairing(p, B, B), pairing(p, A, H), pairing(p, B, H)
    )


def passes_filters(c: DecompositionCandidate) -> bool:
    return c.A_self >= 0 and c.B_self >= -2 and c.A_dot_H > 0 and c.B_dot_H > 0


def enumeration_bound(p: PicardLatticeParams) -> int:
    """Padded bound m' on |x| for candidates on a lattice with r >= 2."""
    if p.r < 2:
        raise ValueError("enumeration_bound is only used for r >= 2")
    g, r, d = p.g, p.r, p.d
    s = math.sqrt(-p.discriminant)
    m = math.floor(max(1 + d / (s * math.sqrt(g - 1)), 2 * (r - 1) * g / ((d - s) * s)))
    return m + ENUMERATION_MARGIN


def _y_window(p: PicardLatticeParams, x: int) -> range:
    # open interval 2(g-1)(x-1)/d < y < 2(g-1)x/d
    lo = (2 * (p.g - 1) * (x - 1)) // p.d + 1
    hi = -((-2 * (p.g - 1) * x) // p.d) - 1
    return range(lo, hi + 1)


def decomposition_candidates(p: PicardLatticeParams) -> list[DecompositionCandidate]:
    """All (x, y) meeting the necessary inequalities for a flexible splitting."""
    xs = range(0, 2) if p.r == 1 else range(-enumeration_bound(p), enumeration_bound(p) + 1)
    out = []
    for x in xs:
        for y in _y_window(p, x):
            c = make_candidate(p, x, y)
            if passes_filters(c):
                out.append(c)
    return out


@dataclass(frozen=True)
class RegionVertices:
    Q_plus: tuple[float, float]
    Q_minus: tuple[float, float]
    P1: tuple[float, float]
    P2: tuple[float, float]
    P3: tuple[float, float]
    P4: tuple[float, float]

    def items(self):
        return [
            ("Q+", self.Q_plus),
            ("Q-", self.Q_minus),
            ("P1", self.P1),
            ("P2", self.P2),
            ("P3", self.P3),
            ("P4", self.P4),
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["label", "x", "y"])
        for label, (x, y) in self.items():
            w.writerow([label, repr(x), repr(y)])
        return buf.getvalue()


def region_vertices(p: PicardLatticeParams) -> RegionVertices:
    """Corners of the region in the (x, y)-plane that bounds the candidates.

    The lines are y = a_-x, y = a_+x with a_pm = (d pm sqrt|D|)/(2(r-1)) and
    y = 2(g-1)(x-1)/d; the conic is B^2 = -2.
    """
    if p.r < 2:
        raise ValueError("region_vertices requires r >= 2")
    g, r, d = p.g, p.r, p.d
    s = math.sqrt(-p.discriminant)
    t = math.sqrt(g - 1)
    return RegionVertices(
        Q_plus=(1 + d / s, 2 * (g - 1) / s),
        Q_minus=(1 - d / s, -2 * (g - 1) / s),
        P1=(2 * (r - 1) * g / ((d - s) * s), g / s),
        P2=(1 + d / (t * s), 2 * t / s),
        P3=(1 - d / (t * s), -2 * t / s),
        P4=(-2 * (r - 1) * g / ((d + s) * s), -g / s),
    )


def cliff_holds(g: int, r: int, d: int) -> bool:
    if r >= 2:
        return 2 * d >= g - 3 + 4 * r
    return 2 * d >= g


def caz_holds(g: int, r: int, d: int) -> bool:
    return (r - 1) * (3 * g - 4) ** 2 < 2 * d * d * (g - 2)


def rigidity_fast_path(p: PicardLatticeParams) -> bool:
    return cliff_holds(p.g, p.r, p.d) and caz_holds(p.g, p.r, p.d)


def simplified_caz(g: int, r: int) -> bool:
    return g >= min(r * (r + 1), 10 * (r - 1))


class RigidityStatus(enum.Enum):
    CERTIFIED_FAST_PATH = "CertifiedFastPath"
    CERTIFIED_BY_ENUMERATION = "CertifiedByEnumeration"
    UNKNOWN = "Unknown"

    @property
    def certified(self) -> bool:
        return self is not RigidityStatus.UNKNOWN


@dataclass(frozen=True)
class ExclusionRule:
    """A named argument that removes lattice candidates the inequalities keep."""

    name: str
    justification: str
    applies: Callable[[PicardLatticeParams], bool]
    removes: frozenset[tuple[int, int]]


R1 = ExclusionRule(
    name="R1",
    justification=(
        "r=1, g=2d: H-2L is the only class of square -2 on the lattice, so it is "
        "irreducible with h0 = 1 and cannot be a part of a flexible splitting"
    ),
    applies=lambda p: p.r == 1 and p.g == 2 * p.d,
    removes=frozenset({(0, -2), (1, 2)}),
)

EXCLUSION_RULES = (R1,)


@dataclass(frozen=True)
class RigidityVerdict:
    status: RigidityStatus
    candidates: tuple[DecompositionCandidate, ...] = ()
    exclusions_applied: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "candidates": [[c.x, c.y] for c in self.candidates],
            "exclusions_applied": list(self.exclusions_applied),
        }


def enumerate_rigidity(p: PicardLatticeParams) -> RigidityVerdict:
    """Rigidity decided by candidate enumeration alone (no fast path)."""
    cands = decomposition_candidates(p)
    applied = []
    for rule in EXCLUSION_RULES:
        if rule.applies(p):
            before = len(cands)
            cands = [c for c in cands if c.xy not in rule.removes]
            if len(cands) != before:
                applied.append(rule.name)
    extra = tuple(c for c in cands if c.xy not in CANONICAL)
    if extra:
        return RigidityVerdict(RigidityStatus.UNKNOWN, extra, tuple(applied))
    return RigidityVerdict(RigidityStatus.CERTIFIED_BY_ENUMERATION, (), tuple(applied))


def check_rigidity(p: PicardLatticeParams) -> RigidityVerdict:
    if rigidity_fast_path(p):
        return RigidityVerdict(RigidityStatus.CERTIFIED_FAST_PATH)
    return enumerate_rigidity(p)
