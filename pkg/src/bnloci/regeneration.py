"""
Numerical criterion for a curve in |H| to carry a g^{r'}_{d'}.

On a rigid lattice a special series on the curve degenerates to series
g^{r1}_{d1} on a genus-r curve in |L| and g^{r2}_{d2} on a genus
(g+r-d-1) curve in |H-L|, both Brill-Noether general. Conversely such
data regenerates. So existence reduces to a search for a quadruple
(r1, r2, d1, d2) of non-negative integers with

    r1 + r2 = r' - 1
    d1 + d2 <= d' - d + 2r - 2
    0 <= rho(r, r1, d1) < r
    0 <= rho(g+r-d-1, r2, d2) < g+r-d-1
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .bn_core import rho
from .picard_lattice import RigidityVerdict


@dataclass(frozen=True, order=True)
class RegenerationWitness:
    r1: int
    r2: int
    d1: int
    d2: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r1, self.r2, self.d1, self.d2)


def witness_conditions(
    g: int, r: int, d: int, rp: int, dp: int, w: RegenerationWitness
) -> dict[str, bool]:
    """Evaluate the four defining conditions directly from their raw form."""
    h = g + r - d - 1
    return {
        "nonnegative": min(w.r1, w.r2, w.d1, w.d2) >= 0,
        "rank_sum": w.r1 + w.r2 == rp - 1,
        "degree_sum": w.d1 + w.d2 <= dp - d + 2 * r - 2,
        "first_component": 0 <= rho(r, w.r1, w.d1) < r,
        "second_component": 0 <= rho(h, w.r2, w.d2) < h,
    }


def is_valid_witness(g: int, r: int, d: int, rp: int, dp: int, w: RegenerationWitness) -> bool:
    return all(witness_conditions(g, r, d, rp, dp, w).values())


def general_degree_range(genus: int, rank: int) -> range:
    """Degrees e with 0 <= rho(genus, rank, e) < genus.

    Equivalently rank + ceil(rank*genus/(rank+1)) <= e <= rank + genus - 1.
    """
    lo = rank + -((-rank * genus) // (rank + 1))
    return range(max(lo, 0), rank + genus)


def find_witness(g: int, r: int, d: int, rp: int, dp: int) -> Optional[RegenerationWitness]:
    """First witness in lexicographic (r1, d1, d2) order, or None."""
    if rp < 1:
        raise ValueError(f"r' must be >= 1, got {rp}")
    h = g + r - d - 1
    budget = dp - d + 2 * r - 2
    for r1 in range(rp):
        r2 = rp - 1 - r1
        d2s = general_degree_range(h, r2)
        if not d2s:
            continue
        for d1 in general_degree_range(r, r1):
            if d1 + d2s.start > budget:
                break
            w = RegenerationWitness(r1, r2, d1, d2s.start)
            if not is_valid_witness(g, r, d, rp, dp, w):
                raise AssertionError(f"search produced invalid witness {w}")
            return w
    return None


def nc30_terms(g: int, r: int, d: int, rp: int, dp: int) -> tuple[str, int, int]:
    """Cross-multiplied sides of the obstruction inequality ``lhs > rhs``.

    Returns (branch, lhs, rhs) where branch is ``"upper"`` for r' <= r and
    ``"lower"`` for r' > r.
    """
    if rp <= r:
        return "upper", rp * (d - r + rp - dp), r - rp
    return "lower", (rp - r + 1) * (g + rp - 1 - dp), g + r - d - 1


def nc30_holds(g: int, r: int, d: int, rp: int, dp: int) -> bool:
    if rp < 1:
        raise ValueError(f"r' must be >= 1, got {rp}")
    _, lhs, rhs = nc30_terms(g, r, d, rp, dp)
    return lhs > rhs


class RegenerationStatus(enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    PRECONDITIONS_NOT_MET = "PreconditionsNotMet"


@dataclass(frozen=True)
class RegenerationOutcome:
    status: RegenerationStatus
    query: tuple[int, int, int, int, int]
    witness: Optional[RegenerationWitness] = None
    reasons: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        g, r, d, rp, dp = self.query
        return {
            "query": {"g": g, "r": r, "d": d, "rp": rp, "dp": dp},
            "status": self.status.value,
            "witness": list(self.witness.as_tuple()) if self.witness else None,
            "reasons": list(self.reasons),
        }


def basiccond_holds(g: int, r: int, d: int) -> bool:
    return g >= 3 and r >= 1 and 2 <= d <= g - 1


def special_grd_exists(
    g: int, r: int, d: int, rp: int, dp: int, rigidity: Optional[RigidityVerdict]
) -> RegenerationOutcome:
    """Decide whether some smooth curve in |H| on a very general K3 with this
    lattice carries a g^{r'}_{d'}.

    ``rigidity`` must be the verdict for the lattice (g, r, d); pass None when
    the lattice itself is invalid.
    """
    query = (g, r, d, rp, dp)
    reasons = []
    if not basiccond_holds(g, r, d):
        reasons.append("basiccond: need g>=3, r>=1, 2<=d<=g-1")
    if rp < 1:
        reasons.append("r' must be >= 1")
    if rigidity is None or not rigidity.status.certified:
        reasons.append("decomposition rigidity not certified")
    if r > 1 and g + 4 * r - 2 * d == 4:
        reasons.append("g+4r-2d = 4 with r > 1")
    if rp >= 1 and rho(g, rp, dp) >= 0:
        reasons.append("rho(g,r',d') >= 0: the criterion only covers special series")
    if reasons:
        return RegenerationOutcome(RegenerationStatus.PRECONDITIONS_NOT_MET, query, reasons=tuple(reasons))
    w = find_witness(g, r, d, rp, dp)
    if w is None:
        return RegenerationOutcome(RegenerationStatus.NOT_EXISTS, query)
    return RegenerationOutcome(RegenerationStatus.EXISTS, query, witness=w)
