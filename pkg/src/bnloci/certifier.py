"""
Non-containment certificates.

A certificate is a ledger of integer inequalities evaluated from the five
inputs (g, r, d, r', d'). When every entry holds, a smooth curve in |H| on a
very general K3 surface with Picard lattice Z[H] + Z[L] (H^2 = 2g-2,
H.L = d, L^2 = 2r-2) carries a g^r_d and no g^{r'}_{d'}. So the locus for
(g, r, d) is not contained in the locus for (g, r', d').

Certificates carry no proof state; checking one means re-running
:func:`evaluate_condition` on each record.
"""
from __future__ import annotations

import json
import operator
from dataclasses import dataclass, field
from typing import Optional

from .bn_core import BNTriple, expected_maximal_loci, is_expected_maximal, rho
from .regeneration import nc30_terms

RELATIONS = {
    "<": operator.lt,
    ">": operator.gt,
    "<=": operator.le,
    ">=": operator.ge,
}

CONDITION_NAMES = ("basiccond", "cliff", "caz", "rho_negative", "nc30_upper", "nc30_lower")
SOURCE_CONDITIONS = frozenset({"cliff", "caz"})

EXTERNALLY_SETTLED_NOTE = (
    "(6,2,5): the lattice criteria do not apply; the plane-quintic argument "
    "(a genus 6 plane quintic has no g^1_3) settles this locus outside this tool"
)


@dataclass(frozen=True)
class ConditionRecord:
    name: str
    lhs: int
    rhs: int
    relation: str
    holds: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "holds": self.holds,
        }


def _record(name: str, lhs: int, relation: str, rhs: int) -> ConditionRecord:
    return ConditionRecord(name, lhs, rhs, relation, RELATIONS[relation](lhs, rhs))


def evaluate_condition(rec: ConditionRecord) -> bool:
    return RELATIONS[rec.relation](rec.lhs, rec.rhs)


def condition_records(g: int, r: int, d: int, rp: int, dp: int) -> list[ConditionRecord]:
    recs = [
        _record("basiccond", g, ">=", 3),
        _record("basiccond", r, ">=", 1),
        _record("basiccond", rp, ">=", 1),
        _record("basiccond", d, ">=", 2),
        _record("basiccond", d, "<=", g - 1),
        _record("basiccond", dp, ">=", 2),
        _record("basiccond", dp, "<=", g - 1),
    ]
    if r >= 2:
        recs.append(_record("cliff", 2 * d, ">=", g - 3 + 4 * r))
    else:
        recs.append(_record("cliff", 2 * d, ">=", g))
    recs.append(_record("caz", (r - 1) * (3 * g - 4) ** 2, "<", 2 * d * d * (g - 2)))
    recs.append(_record("rho_negative", rho(g, rp, dp), "<", 0))
    # the cross-multiplied form is only meaningful for r' >= 1; basiccond flags the rest
    branch, lhs, rhs = nc30_terms(g, r, d, rp, dp)
    recs.append(_record(f"nc30_{branch}", lhs, ">", rhs))
    return recs


@dataclass(frozen=True)
class NonContainmentCertificate:
    source: tuple[int, int, int]
    target: tuple[int, int]
    conditions: tuple[ConditionRecord, ...]

    @property
    def certified(self) -> bool:
        return all(c.holds for c in self.conditions)

    @property
    def failing(self) -> list[str]:
        out = []
        for c in self.conditions:
            if not c.holds and c.name not in out:
                out.append(c.name)
        return out

    @property
    def verdict(self) -> str:
        return "Certified" if self.certified else "Failed"

    @property
    def query(self) -> tuple[int, int, int, int, int]:
        return (*self.source, *self.target)

    def to_dict(self) -> dict:
        g, r, d = self.source
        rp, dp = self.target
        return {
            "query": {"g": g, "r": r, "d": d, "rp": rp, "dp": dp},
            "conditions": [c.to_dict() for c in self.conditions],
            "verdict": self.verdict if self.certified else {"Failed": self.failing},
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> NonContainmentCertificate:
        q = data["query"]
        conds = tuple(
            ConditionRecord(c["name"], c["lhs"], c["rhs"], c["relation"], c["holds"])
            for c in data["conditions"]
        )
        return cls((q["g"], q["r"], q["d"]), (q["rp"], q["dp"]), conds)


def certify_no_grd(g: int, r: int, d: int, rp: int, dp: int) -> NonContainmentCertificate:
    return NonContainmentCertificate(
        (g, r, d), (rp, dp), tuple(condition_records(g, r, d, rp, dp))
    )


def recheck_certificate(cert: NonContainmentCertificate) -> bool:
    """Recompute every record from the query alone and compare field by field."""
    fresh = certify_no_grd(*cert.query)
    return fresh.conditions == cert.conditions and all(
        evaluate_condition(c) == c.holds for c in cert.conditions
    )


def grd_general_targets(g: int, r: int, d: int) -> list[tuple[int, int]]:
    """Targets whose exclusion makes a curve in the (g, r, d) locus g^r_d-general.

    Every other special series reaches one of these through the trivial
    containments and Serre duality.
    """
    out = [
        (m.triple.r, m.triple.d)
        for m in expected_maximal_loci(g)
        if (m.triple.r, m.triple.d) != (r, d)
    ]
    if d - 1 >= 2 and rho(g, r, d - 1) < 0:
        out.append((r, d - 1))
    if d + 1 <= g - 1 and rho(g, r + 1, d + 1) < 0:
        out.append((r + 1, d + 1))
    seen = []
    for t in out:
        if t not in seen:
            seen.append(t)
    return seen


@dataclass(frozen=True)
class GeneralityReport:
    locus: BNTriple
    certificates: tuple[NonContainmentCertificate, ...]
    note: Optional[str] = None

    @property
    def targets(self) -> list[tuple[int, int]]:
        return [c.target for c in self.certificates]

    @property
    def failing_targets(self) -> list[tuple[int, int]]:
        return [c.target for c in self.certificates if not c.certified]

    @property
    def certified(self) -> bool:
        return not self.failing_targets

    @property
    def source_hypotheses_hold(self) -> bool:
        """True when the lattice-side conditions (cliff, caz) hold for the locus."""
        return not any(
            c.name in SOURCE_CONDITIONS and not c.holds
            for cert in self.certificates
            for c in cert.conditions
        )

    @property
    def verdict(self) -> str:
        return "GrdGeneralCertified" if self.certified else "FailsAt"

    def to_dict(self) -> dict:
        g, r, d = self.locus
        return {
            "locus": {"g": g, "r": r, "d": d},
            "targets": [cert.to_dict() for cert in self.certificates],
            "verdict": (
                self.verdict
                if self.certified
                else {"FailsAt": [list(t) for t in self.failing_targets]}
            ),
            "note": self.note,
        }


def grd_general_certificate(g: int, r: int, d: int) -> GeneralityReport:
    if not is_expected_maximal(g, r, d):
        raise ValueError(f"({g},{r},{d}) is not expected maximal")
    certs = tuple(certify_no_grd(g, r, d, rp, dp) for rp, dp in grd_general_targets(g, r, d))
    note = EXTERNALLY_SETTLED_NOTE if (g, r, d) == (6, 2, 5) else None
    return GeneralityReport(BNTriple(g, r, d), certs, note)


def exceptional_tuples() -> list[tuple[int, int, int, int, int]]:
    """The four pairs (source, target) of expected maximal loci where the
    obstruction inequality is an equality."""
    return [(6, 2, 5, 1, 3), (7, 2, 6, 1, 4), (8, 1, 4, 2, 7), (9, 2, 7, 1, 5)]


@dataclass(frozen=True)
class KnownContainment:
    source: BNTriple
    target: BNTriple
    note: str = "strict containment, geometric proof out of scope"


def known_unexpected_containments() -> list[KnownContainment]:
    return [
        KnownContainment(BNTriple(7, 2, 6), BNTriple(7, 1, 4)),
        KnownContainment(BNTriple(8, 1, 4), BNTriple(8, 2, 7)),
        KnownContainment(BNTriple(9, 2, 7), BNTriple(9, 1, 5)),
    ]
