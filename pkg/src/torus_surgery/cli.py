"""Command-line front end: ``invariants``, ``verify`` and ``repvar``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import closed_form as cf
from . import engine, verification
from .repvar import (
    TorusKnot,
    alexander_polynomial,
    arc_lift,
    bifurcation_points,
    jumping_points,
)

ROW_FIELDS = ("q", "k", "ell", "i", "a", "b", "c", "sf", "sfZ", "integral", "cs", "rho")
CASSON_FIELDS = ("lambdaPrime", "lambdaDoublePrime", "lambda")


def rational(x) -> str:
    """Exact "num/den" rendering; Fraction already keeps lowest terms and den > 0."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def record_row(r: engine.InvariantRecord) -> dict[str, Any]:
    return {
        "q": r.q, "k": r.k, "ell": r.ell, "i": r.i,
        "a": r.a, "b": r.b, "c": r.c,
        "sf": r.sf, "sfZ": r.sf_knot_complement,
        "integral": rational(r.integral), "cs": rational(r.cs), "rho": rational(r.rho),
    }


def casson_block(q: int, k: int) -> dict[str, Any]:
    ldp = cf.lambda_double_prime(q, k)
    if q in cf.SUPPORTED_Q:
        rec = cf.lambda_su3(q, k)
        lp, total = rec.lambda_prime, rational(rec.total)
    elif k == 0:
        lp, total = 0, rational(0)
    else:
        lp = total = None
    return {"lambdaPrime": lp, "lambdaDoublePrime": rational(ldp), "lambda": total}


def invariants_document(q: int, k: int) -> dict[str, Any]:
    records = sorted(engine.all_invariants(q, k), key=lambda r: (r.ell, r.i)) if k else []
    return {
        "q": q,
        "k": k,
        "rows": [record_row(r) for r in records],
        "casson": casson_block(q, k),
    }


def to_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _cell(v) -> str:
    return "" if v is None else str(v)


def invariants_csv(doc: dict[str, Any]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ROW_FIELDS)
    for row in doc["rows"]:
        w.writerow([_cell(row[f]) for f in ROW_FIELDS])
    buf.write("\n# casson\n")
    w.writerow(CASSON_FIELDS)
    w.writerow([_cell(doc["casson"][f]) for f in CASSON_FIELDS])
    return buf.getvalue()


def _table(header: Sequence[str], rows: list[Sequence[Any]]) -> str:
    cells = [list(header)] + [[_cell(v) if v is not None else "-" for v in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def invariants_pretty(doc: dict[str, Any]) -> str:
    q, k = doc["q"], doc["k"]
    coeff = f"1/{k}" if k >= 0 else f"-1/{-k}"
    out = [f"{coeff} surgery on the (2, {q}) torus knot: {len(doc['rows'])} flat connections\n"]
    if doc["rows"]:
        out.append(_table(ROW_FIELDS, [[row[f] for f in ROW_FIELDS] for row in doc["rows"]]))
    cas = doc["casson"]
    out.append("\n" + _table(CASSON_FIELDS, [[cas[f] for f in CASSON_FIELDS]]))
    return "".join(out)


def repvar_document(p: int, q: int) -> dict[str, Any]:
    knot = TorusKnot(p, q)
    delta = alexander_polynomial(knot)
    doc: dict[str, Any] = {
        "p": p,
        "q": q,
        "alexander": str(delta),
        "alexanderCoefficients": list(delta.coefficients),
        "jumpingPoints": [rational(s) for s in jumping_points(knot)],
    }
    if p == 2:
        doc["bifurcationPoints"] = [rational(s) for s in bifurcation_points(knot)]
        arcs = []
        for ell in range(1, (q - 1) // 2 + 1):
            s = Fraction(2 * ell - 1, 4 * q)
            plus, minus = arc_lift(q, 1, ell), arc_lift(q, -1, ell)
            arcs.append({
                "ell": ell,
                "sStart": rational(s),
                "sEnd": rational(Fraction(1, 2) - s),
                "liftStart": [rational(plus.start.x), rational(plus.start.y)],
                "liftEndK1": [rational(plus.end.x), rational(plus.end.y)],
                "liftEndKm1": [rational(minus.end.x), rational(minus.end.y)],
            })
        doc["arcs"] = arcs
    return doc


def repvar_csv(doc: dict[str, Any]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("p", "q", "alexander"))
    w.writerow((doc["p"], doc["q"], doc["alexander"]))
    buf.write("\n# jumping\n")
    w.writerow(("s",))
    w.writerows([s] for s in doc["jumpingPoints"])
    if "bifurcationPoints" in doc:
        buf.write("\n# bifurcation\n")
        w.writerow(("s",))
        w.writerows([s] for s in doc["bifurcationPoints"])
        buf.write("\n# arcs\n")
        w.writerow(("ell", "sStart", "sEnd", "liftStart", "liftEndK1", "liftEndKm1"))
        for arc in doc["arcs"]:
            w.writerow((arc["ell"], arc["sStart"], arc["sEnd"],
                        *(" ".join(arc[key]) for key in ("liftStart", "liftEndK1", "liftEndKm1"))))
    return buf.getvalue()


def repvar_pretty(doc: dict[str, Any]) -> str:
    lines = [
        f"({doc['p']}, {doc['q']}) torus knot",
        f"Alexander polynomial: {doc['alexander']}",
        f"jumping points: {{{', '.join(doc['jumpingPoints'])}}}",
    ]
    text = "\n".join(lines) + "\n"
    if "bifurcationPoints" in doc:
        text += f"bifurcation points: {{{', '.join(doc['bifurcationPoints'])}}}\n\n"
        rows = [[a["ell"], a["sStart"], a["sEnd"], "(" + ", ".join(a["liftStart"]) + ")",
                 "(" + ", ".join(a["liftEndK1"]) + ")", "(" + ", ".join(a["liftEndKm1"]) + ")"]
                for a in doc["arcs"]]
        text += _table(("ell", "sStart", "sEnd", "liftStart", "liftEnd k=1", "liftEnd k=-1"), rows)
    return text


_RENDER = {
    "invariants": {"json": to_json, "csv": invariants_csv, "pretty": invariants_pretty},
    "repvar": {"json": to_json, "csv": repvar_csv, "pretty": repvar_pretty},
}


def _odd_q(parser: argparse.ArgumentParser, q: int) -> None:
    if q < 3 or q % 2 == 0:
        parser.error(f"--q must be an odd integer >= 3, got {q}")


def _q_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _cmd_invariants(args, parser) -> int:
    _odd_q(parser, args.q)
    doc = invariants_document(args.q, args.k)
    sys.stdout.write(_RENDER["invariants"][args.format](doc))
    return 0


def _cmd_verify(args, parser) -> int:
    if args.q is not None:
        q_set = [args.q]
    elif args.q_set:
        q_set = args.q_set
    else:
        q_set = list(cf.SUPPORTED_Q)
    for q in q_set:
        _odd_q(parser, q)
    if args.k_max < 1:
        parser.error(f"--k-max must be >= 1, got {args.k_max}")
    print(f"verifying q in {{{', '.join(map(str, q_set))}}}, 1 <= |k| <= {args.k_max}")
    for result in verification.run_all(q_set, args.k_max):
        if not result.passed:
            print(f"FAIL {result.name} after {result.checks} checks")
            print(f"counterexample: {result.counterexample}")
            return 1
        if result.skipped and result.checks == 0:
            print(f"SKIP {result.name}: {result.skipped}")
            continue
        print(f"PASS {result.name} ({result.checks} checks)")
        if result.skipped:
            print(f"  note: {result.skipped}")
    return 0


def _cmd_repvar(args, parser) -> int:
    if args.p < 2 or args.q < 2:
        parser.error(f"--p and --q must be >= 2, got ({args.p}, {args.q})")
    if math.gcd(args.p, args.q) != 1:
        parser.error(f"--p and --q must be coprime, got ({args.p}, {args.q})")
    doc = repvar_document(args.p, args.q)
    sys.stdout.write(_RENDER["repvar"][args.format](doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torus-surgery",
        description="Exact gauge-theoretic invariants of 1/k surgery on (2, q) torus knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="spectral flow, Chern-Simons and rho invariants")
    inv.add_argument("--q", type=int, required=True, help="odd q >= 3")
    inv.add_argument("--k", type=int, required=True, help="signed surgery coefficient 1/k")
    inv.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    inv.set_defaults(handler=_cmd_invariants, subparser=inv)

    ver = sub.add_parser("verify", help="cross-check the engine against the closed forms")
    group = ver.add_mutually_exclusive_group()
    group.add_argument("--q", type=int, help="a single q")
    group.add_argument("--q-set", type=_q_list, help="comma-separated q values (default 3,5,7,9)")
    ver.add_argument("--k-max", type=int, default=4, help="check 1 <= |k| <= K (default 4)")
    ver.set_defaults(handler=_cmd_verify, subparser=ver)

    rep = sub.add_parser("repvar", help="SU(2) representation variety data of a torus knot")
    rep.add_argument("--p", type=int, required=True)
    rep.add_argument("--q", type=int, required=True)
    rep.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")
    rep.set_defaults(handler=_cmd_repvar, subparser=rep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, args.subparser)


if __name__ == "__main__":
    sys.exit(main())
