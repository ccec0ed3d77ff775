"""
Closed-form Brill-Noether numerics.

All quantities are exact Python integers. Inputs are range-checked against
an upper bound on the genus (``BNLOCI_MAX_G``, default ``10**6``) so that
every value handed to a fixed-width consumer (JSON readers, CSV tools)
stays comfortably inside signed 64-bit range.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

DEFAULT_MAX_G = 10**6


class InputOutOfRange(ValueError):
    """An integer argument exceeds the documented magnitude bound."""


def max_input() -> int:
    raw = os.environ.get("BNLOCI_MAX_G")
    if raw is None:
        return DEFAULT_MAX_G
    try:
        bound = int(raw)
    except ValueError:
        raise InputOutOfRange(f"BNLOCI_MAX_G must be an integer, got {raw!r}") from None
    if bound < 1:
        raise InputOutOfRange(f"BNLOCI_MAX_G must be positive, got {bound}")
    return bound


def check_range(*values: int) -> None:
    bound = max_input()
    for v in values:
        if abs(v) > bound:
            raise InputOutOfRange(f"|{v}| exceeds input bound {bound}")


@dataclass(frozen=True, order=True)
class BNTriple:
    """Labels the Brill-Noether locus of genus-``g`` curves carrying a g^r_d."""

    g: int
    r: int
    d: int

    def __post_init__(self):
        if self.g < 2 or self.r < 0 or self.d < 0:
            raise ValueError(f"invalid triple (g,r,d)=({self.g},{self.r},{self.d})")
        check_range(self.g, self.r, self.d)

    def __iter__(self):
        return iter((self.g, self.r, self.d))

    def __str__(self):
        return f"({self.g},{self.r},{self.d})"


@dataclass(frozen=True)
class ExpectedMaximalLocus:
    triple: BNTriple
    rho: int


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``.

    >>> rho(7, 2, 6)
    -2
    """
    check_range(g, r, d)
    return g - (r + 1) * (g - d + r)


def rho_pflueger(g: int, r: int, d: int, k: int) -> int:
    """Gonality-refined Brill-Noether number for a general k-gonal curve.

    The correction term is maximised by scanning integer ``l`` over
    ``[0, min(r, g-d+r+1)]``. The ``l = 0`` term is always included, so the
    result never drops below ``rho(g, r, d)``.
    """
    if k < 2:
        raise ValueError(f"gonality must be >= 2, got {k}")
    check_range(g, r, d, k)
    slope = g - k - d + 2 * r + 1
    top = max(0, min(r, g - d + r + 1))
    best = max(slope * l - l * l for l in range(top + 1))
    return rho(g, r, d) + best


def discriminant(g: int, r: int, d: int) -> int:
    """``4(g-1)(r-1) - d^2``; negative exactly when the rank-2 lattice is hyperbolic."""
    check_range(g, r, d)
    return 4 * (g - 1) * (r - 1) - d * d


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def d_max(g: int, r: int) -> int:
    """Largest degree with ``rho(g, r, d) < 0``, i.e. ``r + ceil(gr/(r+1)) - 1``."""
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")
    check_range(g, r)
    d = r + _ceil_div(g * r, r + 1) - 1
    if not rho(g, r, d) < 0 <= rho(g, r, d + 1):
        raise AssertionError(f"d_max postcondition failed at (g,r)=({g},{r})")
    return d


def serre_dual(g: int, r: int, d: int) -> BNTriple:
    """Residual series: a g^r_d corresponds to a g^{g-d+r-1}_{2g-2-d}."""
    rr = g - d + r - 1
    if rr < 0:
        raise ValueError(f"Serre dual of ({g},{r},{d}) has negative rank {rr}")
    return BNTriple(g, rr, 2 * g - 2 - d)


def is_expected_maximal(g: int, r: int, d: int) -> bool:
    if not 2 <= d <= g - 1:
        return False
    if not (rho(g, r, d) < 0 <= rho(g, r, d + 1)):
        return False
    return r < 2 or rho(g, r - 1, d - 1) >= 0


def max_rank(g: int) -> int:
    """Largest rank of an expected maximal locus in genus ``g``."""
    if g < 3:
        raise ValueError(f"genus must be >= 3, got {g}")
    check_range(g)
    s = math.isqrt(g)
    return s if g >= s * s + s else s - 1


def expected_maximal_loci(g: int) -> list[ExpectedMaximalLocus]:
    """All expected maximal loci of genus ``g``, ordered by rank."""
    out = []
    for r in range(1, max_rank(g) + 1):
        d = d_max(g, r)
        if not is_expected_maximal(g, r, d):
            raise AssertionError(f"({g},{r},{d}) from d_max is not expected maximal")
        out.append(ExpectedMaximalLocus(BNTriple(g, r, d), rho(g, r, d)))
    return out
