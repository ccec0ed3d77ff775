"""Command-line front end.

Exit codes: 0 success or a positive verdict, 1 a negative verdict
(Failed, Unknown, NotExists, PreconditionsNotMet, FailsAt), 2 invalid input
or internal error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bn_core
from .bn_core import InputOutOfRange
from .certifier import certify_no_grd, grd_general_certificate
from .picard_lattice import (
    DegenerateLattice,
    PicardLatticeParams,
    check_rigidity,
    enumerate_rigidity,
    region_vertices,
)
from .regeneration import RegenerationStatus, special_grd_exists
from .sweeps import gonality_scan, nonmax_sweep, theorem_a_sweep

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

MODES = {"max": "max_gonality", "submax": "submax_gonality",
         "max_gonality": "max_gonality", "submax_gonality": "submax_gonality"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _global_opts(suppress: bool) -> argparse.ArgumentParser:
    default = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="emit JSON instead of text")
    p.add_argument("--out", metavar="PATH", default=default,
                   help="write output to PATH instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bnloci", description=__doc__.splitlines()[0],
                     parents=[_global_opts(False)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = [_global_opts(True)]

    def triple(p, *, prime=False):
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        if prime:
            p.add_argument("--rp", type=int, required=True)
            p.add_argument("--dp", type=int, required=True)

    p = sub.add_parser("rho", parents=common, help="Brill-Noether numbers")
    triple(p)
    p.add_argument("--k", type=int, help="gonality, for the refined number")

    p = sub.add_parser("maximal", parents=common, help="expected maximal loci of a genus")
    p.add_argument("--g", type=int, required=True)

    p = sub.add_parser("rigidity", parents=common, help="decomposition rigidity of the lattice")
    triple(p)
    p.add_argument("--enumerate", action="store_true",
                   help="always run the candidate enumeration")
    p.add_argument("--vertices", action="store_true",
                   help="also report the bounding-region vertices (r >= 2)")

    p = sub.add_parser("regenerate", parents=common, help="witness search for a g^r'_d'")
    triple(p, prime=True)

    p = sub.add_parser("certify", parents=common, help="non-containment certificate")
    triple(p, prime=True)

    p = sub.add_parser("general", parents=common, help="g^r_d-generality of an expected maximal locus")
    triple(p)

    p = sub.add_parser("sweep", parents=common, help="batch reproduction runs")
    p.add_argument("kind", choices=["theorem-a", "nonmax", "gonality"])
    p.add_argument("--min-g", type=int, default=3)
    p.add_argument("--max-g", type=int, default=None)
    p.add_argument("--mode", choices=sorted(MODES), default="submax")
    p.add_argument("--csv", action="store_true", help="emit CSV rows instead of text")
    return parser


def _rho(a):
    out = {"g": a.g, "r": a.r, "d": a.d, "rho": bn_core.rho(a.g, a.r, a.d)}
    if a.k is not None:
        out["k"] = a.k
        out["rho_k"] = bn_core.rho_pflueger(a.g, a.r, a.d, a.k)
    text = str(out["rho"]) if a.k is None else f"rho={out['rho']} rho_k={out['rho_k']}"
    return EXIT_OK, out, text


def _maximal(a):
    loci = bn_core.expected_maximal_loci(a.g)
    out = {"g": a.g, "loci": [{"r": m.triple.r, "d": m.triple.d, "rho": m.rho} for m in loci]}
    text = "\n".join(f"{m.triple} rho={m.rho}" for m in loci)
    return EXIT_OK, out, text


def _rigidity(a):
    p = PicardLatticeParams(a.g, a.r, a.d)
    verdict = check_rigidity(p)
    out = {"lattice": {"g": a.g, "r": a.r, "d": a.d, "discriminant": p.discriminant}}
    out.update(verdict.to_dict())
    lines = [f"{verdict.status.value}"]
    if a.enumerate:
        enum_verdict = enumerate_rigidity(p)
        out["enumeration"] = enum_verdict.to_dict()
        lines.append(f"enumeration: {enum_verdict.status.value}")
        for c in enum_verdict.candidates:
            lines.append(f"  candidate (x,y)=({c.x},{c.y}) A^2={c.A_self} B^2={c.B_self}")
        lines.extend(f"  exclusion applied: {n}" for n in enum_verdict.exclusions_applied)
    else:
        for c in verdict.candidates:
            lines.append(f"  candidate (x,y)=({c.x},{c.y}) A^2={c.A_self} B^2={c.B_self}")
    if a.vertices:
        v = region_vertices(p)
        out["vertices"] = {label: list(xy) for label, xy in v.items()}
        lines.append(v.to_csv().rstrip())
    code = EXIT_OK if verdict.status.certified else EXIT_NEGATIVE
    return code, out, "\n".join(lines)


def _regenerate(a):
    try:
        rigidity = check_rigidity(PicardLatticeParams(a.g, a.r, a.d))
    except ValueError:
        rigidity = None
    res = special_grd_exists(a.g, a.r, a.d, a.rp, a.dp, rigidity)
    out = res.to_dict()
    if res.status is RegenerationStatus.EXISTS:
        text = f"Exists witness (r1,r2,d1,d2)={res.witness.as_tuple()}"
    elif res.status is RegenerationStatus.NOT_EXISTS:
        text = "NotExists"
    else:
        text = "PreconditionsNotMet: " + "; ".join(res.reasons)
    code = EXIT_OK if res.status is RegenerationStatus.EXISTS else EXIT_NEGATIVE
    return code, out, text


def _certify(a):
    cert = certify_no_grd(a.g, a.r, a.d, a.rp, a.dp)
    lines = [f"{c.name}: {c.lhs} {c.relation} {c.rhs} -> {c.holds}" for c in cert.conditions]
    lines.append(cert.verdict if cert.certified else f"Failed({','.join(cert.failing)})")
    return (EXIT_OK if cert.certified else EXIT_NEGATIVE), cert.to_dict(), "\n".join(lines)


def _general(a):
    rep = grd_general_certificate(a.g, a.r, a.d)
    lines = [f"target {c.target}: {c.verdict}" + ("" if c.certified else f" ({','.join(c.failing)})")
             for c in rep.certificates]
    lines.append(rep.verdict if rep.certified else f"FailsAt({rep.failing_targets})")
    if rep.note:
        lines.append(f"note: {rep.note}")
    return (EXIT_OK if rep.certified else EXIT_NEGATIVE), rep.to_dict(), "\n".join(lines)


def _sweep(a):
    if a.kind == "theorem-a":
        rep = theorem_a_sweep(a.min_g, a.max_g if a.max_g is not None else 100)
        ok = rep.summary["verdict"] == "matches_known_exceptions"
    elif a.kind == "nonmax":
        rep = nonmax_sweep(a.max_g if a.max_g is not None else 200, g_min=a.min_g)
        ok = rep.summary["verdict"] == "all_certified"
    else:
        rep = gonality_scan(a.max_g if a.max_g is not None else 200, MODES[a.mode], g_min=a.min_g)
        ok = True
    s = rep.summary
    if a.csv:
        text = rep.to_csv().rstrip("\n")
    else:
        lines = [f"{rep.kind} {rep.params}", f"rows: {s['rows']} {s['verdict_counts']}"]
        for key in ("pair_exceptions", "source_hypothesis_failures", "failures", "exceptional_genera"):
            if key in s:
                lines.append(f"{key}: {json.dumps(s[key])}")
        lines.append(f"verdict: {s['verdict']}")
        text = "\n".join(lines)
    return (EXIT_OK if ok else EXIT_NEGATIVE), rep.to_dict(), text


HANDLERS = {
    "rho": _rho,
    "maximal": _maximal,
    "rigidity": _rigidity,
    "regenerate": _regenerate,
    "certify": _certify,
    "general": _general,
    "sweep": _sweep,
}


def dispatch(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR
    try:
        code, payload, text = HANDLERS[args.command](args)
    except (ValueError, DegenerateLattice, InputOutOfRange) as exc:
        print(f"bnloci: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001
        print(f"bnloci: internal error: {exc!r}", file=sys.stderr)
        return EXIT_ERROR
    body = json.dumps(payload, indent=2) if args.json else text
    if args.out:
        Path(args.out).write_text(body + "\n")
    else:
        print(body)
    return code


def main() -> None:
    logging.basicConfig(level=logging.WARNING)
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
