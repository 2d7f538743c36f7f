"""Command-line front end.

Schemes travel as JSON documents {"n": int, "entries": [...]} with entries
in column order m_12; m_13, m_23; m_14, m_24, m_34; ...  Results are JSON
on stdout; rational values serialize as "a/b" strings, never floats.

Exit codes: 0 success (and realizable, for `check`), 1 not realizable
(`check` only), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .conditions import (
    FailedPluecker,
    FailedToz,
    FailedTriangle,
    TozReport,
    UnresolvableZero,
    Verdict,
    decide_torus,
    toz_report,
)
from .errors import TorusCurvesError
from .farey import max_packing
from .intarith import ResidueClass, crt
from .genus import (
    AlreadyTorus,
    bounded_decomposition_search,
    decompose_3scheme,
    endemic_family,
)
from .oracle import oracle_realizable
from .render import render_svg
from .scheme import Scheme, Unresolvable, new_scheme, reduce_zeros
from .solver import construct_witness, enumerate_orbits


class CliError(Exception):
    pass


def _load_scheme(path: str) -> Scheme:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "entries" not in doc:
        raise CliError('scheme document needs fields "n" and "entries"')
    n, entries = doc["n"], doc["entries"]

    def is_int(v):
        return isinstance(v, int) and not isinstance(v, bool)

    if not is_int(n) or not isinstance(entries, list) or not all(
        is_int(e) for e in entries
    ):
        raise CliError('"n" must be an integer and "entries" a list of integers')
    try:
        return new_scheme(n, entries)
    except TorusCurvesError as exc:
        raise CliError(str(exc)) from exc


def _frac(x: Fraction) -> str:
    return str(x)


def _witness_doc(system):
    return ["empty" if v.is_empty else [v.p, v.q] for v in system]


def _reason_doc(reason):
    if isinstance(reason, FailedTriangle):
        return {
            "kind": "triangle",
            "indices": [reason.i, reason.j, reason.k],
            "detail": "pairwise gcds differ on this triple",
        }
    if isinstance(reason, FailedPluecker):
        return {
            "kind": "pluecker",
            "indices": [reason.i, reason.j, reason.k, reason.l],
            "detail": "m_ij*m_kl - m_ik*m_jl + m_il*m_jk != 0",
        }
    if isinstance(reason, FailedToz):
        return {
            "kind": "toz",
            "prime": reason.prime,
            "detail": f"toz total {_frac(reason.total)} reaches the prime",
        }
    if isinstance(reason, UnresolvableZero):
        return {
            "kind": "zero",
            "indices": [reason.i, reason.j],
            "detail": "zero entry admits no duplicate or empty resolution",
        }
    raise AssertionError(f"unknown reason {reason!r}")


def _toz_doc(report: TozReport):
    return {
        "g_123": report.base_gcd,
        "per_prime": [
            {
                "prime": e.prime,
                "nu": e.nu,
                "valuations": {
                    f"{i},{j}": v for (i, j), v in sorted(e.valuations.items())
                },
                "contributions": [_frac(c) for c in e.contributions],
                "total": _frac(e.total),
            }
            for e in report.per_prime
        ],
        "checked_primes": [
            {"prime": p, "total": _frac(t)} for p, t in report.checked_primes
        ],
    }


def _verdict_doc(v: Verdict):
    doc = {
        "status": "torus" if v.realizable else "not_torus",
        "reasons": [_reason_doc(r) for r in v.reasons],
    }
    if v.witness is not None:
        doc["witness"] = _witness_doc(v.witness)
        doc["used_empty"] = v.used_empty
    if v.kappa is not None:
        doc["kappa"] = v.kappa
    if v.constraints is not None and not v.constraints.unconstrained:
        modulus = 1
        combined = [0]
        for pc in v.constraints.per_prime:
            combined = [
                crt([ResidueClass(modulus, k % modulus),
                     ResidueClass(pc.modulus, r)]).residue
                for k in combined
                for r in pc.allowed
            ]
            modulus *= pc.modulus
        doc["orbits"] = {
            "modulus": modulus,
            "allowed_kappa": sorted(combined),
            "per_prime": [
                {
                    "prime": pc.prime,
                    "modulus": pc.modulus,
                    "allowed_kappa": list(pc.allowed),
                }
                for pc in v.constraints.per_prime
            ],
        }
    if v.toz is not None:
        doc["toz"] = _toz_doc(v.toz)
    return doc


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _scheme_doc(s: Scheme):
    return {"n": s.n, "entries": list(s.entries)}


def _cmd_check(args) -> int:
    verdict = decide_torus(_load_scheme(args.file))
    _emit(_verdict_doc(verdict))
    return 0 if verdict.realizable else 1


def _cmd_solve(args) -> int:
    s = _load_scheme(args.file)
    verdict = decide_torus(s)
    if not verdict.realizable:
        _emit(_verdict_doc(verdict))
        return 0
    red = verdict.reduction.reduced
    doc = _verdict_doc(verdict)
    if args.kappa is not None:
        if red.n < 3:
            raise CliError("--kappa applies to schemes with >= 3 curves left"
                           " after zero reduction")
        try:
            w = construct_witness(red, args.kappa)
        except TorusCurvesError as exc:
            raise CliError(str(exc)) from exc
        doc["requested"] = {
            "kappa": args.kappa,
            "witness": _witness_doc(w.system),
        }
    if args.orbits:
        reps = enumerate_orbits(red, limit=args.orbits)
        doc["orbit_witnesses"] = [
            {"kappa": w.kappa, "witness": _witness_doc(w.system)} for w in reps
        ]
    _emit(doc)
    return 0


def _cmd_toz(args) -> int:
    s = _load_scheme(args.file)
    red = reduce_zeros(s)
    if isinstance(red, Unresolvable):
        raise CliError(
            f"zero entry m_{red.i}{red.j} cannot be reduced; toz is undefined"
        )
    try:
        report = toz_report(red.reduced)
    except TorusCurvesError as exc:
        raise CliError(str(exc)) from exc
    _emit(_toz_doc(report))
    return 0


def _cmd_oracle(args) -> int:
    s = _load_scheme(args.file)
    try:
        result = oracle_realizable(s)
    except TorusCurvesError as exc:
        raise CliError(str(exc)) from exc
    _emit(
        {
            "realizable": result.realizable,
            "orbit_count": result.orbit_count,
            "witnesses": [
                {"r2": w.kappa, "witness": _witness_doc(w.system)}
                for w in result.witnesses
            ],
        }
    )
    return 0


def _cmd_decompose(args) -> int:
    s = _load_scheme(args.file)
    try:
        out = decompose_3scheme(s)
    except TorusCurvesError as exc:
        raise CliError(str(exc)) from exc
    if isinstance(out, AlreadyTorus):
        _emit({"already_torus": True, "verdict": _verdict_doc(out.verdict)})
    else:
        _emit(
            {
                "already_torus": False,
                "left": _scheme_doc(out.left),
                "right": _scheme_doc(out.right),
            }
        )
    return 0


def _cmd_endemic(args) -> int:
    try:
        s = endemic_family(args.p, args.q)
    except TorusCurvesError as exc:
        raise CliError(str(exc)) from exc
    doc = {
        "scheme": _scheme_doc(s),
        "verdict": _verdict_doc(decide_torus(s)),
    }
    if args.search_bound is not None:
        hit = bounded_decomposition_search(s, args.search_bound)
        if hit is None:
            doc["search"] = {"bound": args.search_bound, "found": False}
        else:
            doc["search"] = {
                "bound": args.search_bound,
                "found": True,
                "left": _scheme_doc(hit.left),
                "right": _scheme_doc(hit.right),
            }
    _emit(doc)
    return 0


def _cmd_farey(args) -> int:
    result = max_packing(args.d, jobs=args.jobs)
    _emit(
        {
            "d": result.d,
            "size": result.size,
            "witness": [list(v) for v in result.witness],
        }
    )
    return 0


def _cmd_render(args) -> int:
    s = _load_scheme(args.file)
    verdict = decide_torus(s)
    if not verdict.realizable:
        raise CliError("scheme is not torus-realizable; nothing to render")
    try:
        render_svg(verdict.witness, args.out)
    except OSError as exc:
        raise CliError(str(exc)) from exc
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="toruscurves",
        description="Decide and construct curve systems on the torus with "
        "prescribed pairwise algebraic intersection numbers.",
        epilog='Scheme JSON: {"n": N, "entries": [m_12, m_13, m_23, m_14, '
        "m_24, m_34, ...]} (column order).",
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide torus realizability")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("solve", help="witnesses and kappa classes")
    p.add_argument("file")
    p.add_argument("--kappa", type=int, default=None,
                   help="also construct the witness for this parameter value")
    p.add_argument("--orbits", type=int, default=None, metavar="LIMIT",
                   help="list up to LIMIT orbit representatives")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("toz", help="valuation invariant report")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_toz)

    p = sub.add_parser("oracle", help="brute-force witness scan")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("decompose", help="genus-2 split of a 3-scheme")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("endemic", help="generate an endemic 4-scheme")
    p.add_argument("--p", type=int, required=True, help="odd prime, p != q")
    p.add_argument("--q", type=int, required=True, help="odd prime, q != p")
    p.add_argument("--search-bound", type=int, default=None, metavar="B",
                   help="also search torus+torus splits with entries in [-B, B]")
    p.set_defaults(fn=_cmd_endemic)

    p = sub.add_parser("farey", help="maximal packing with bounded crossings")
    p.add_argument("--d", type=int, required=True,
                   help="pairwise geometric intersection bound")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for independent anchor subproblems")
    p.set_defaults(fn=_cmd_farey)

    p = sub.add_parser("render", help="SVG of the canonical witness")
    p.add_argument("file")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(fn=_cmd_render)

    return ap


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TorusCurvesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
