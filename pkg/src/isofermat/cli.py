"""Command-line front end.

Every subcommand builds an instance record (the same shape as one line of
``batch`` input) and hands it to :func:`run_op`, so batch and single-shot
runs share one code path.

Exit codes: 0 success, 2 malformed input, 3 rejected instance.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from typing import Any, Optional

from . import fermat, isogonal, pedal
from .errors import GeometryError
from .geometry import LABELS, AngleTriple, Point2, Triangle, dist
from .svg import render_svg

EXIT_OK, EXIT_INPUT, EXIT_REJECTED = 0, 2, 3


class InputError(ValueError):
    pass


class Rejected(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", "rejected"))
        self.payload = payload


def _pt(p: Optional[Point2]):
    return None if p is None else [p.x, p.y]


def _point(raw) -> Point2:
    try:
        x, y = (float(v) for v in raw)
        return Point2(x, y)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad point {raw!r}") from exc


def _triangle(rec: dict) -> Triangle:
    raw = rec.get("triangle")
    if not isinstance(raw, list) or len(raw) != 3:
        raise InputError("'triangle' must be a list of three [x, y] pairs")
    return Triangle(*(_point(p) for p in raw))


def _weights(rec: dict) -> fermat.Weights:
    raw = rec.get("weights")
    if not isinstance(raw, list) or len(raw) != 3:
        raise InputError("'weights' must be a list of three numbers")
    return fermat.Weights(*(float(v) for v in raw))


def _points(rec: dict, n: int) -> list[Point2]:
    raw = rec.get("points") or []
    if len(raw) < n:
        raise InputError(f"expected at least {n} point(s) in 'points'")
    return [_point(p) for p in raw]


def _label(value, field: str) -> str:
    if value not in LABELS:
        raise InputError(f"'{field}' must be one of A, B, C")
    return value


def solution_dict(sol: fermat.FermatSolution) -> dict:
    rep = sol.report
    out: dict[str, Any] = {
        "kind": sol.kind,
        "case": rep.case_taken,
        "value": sol.value,
        "point": _pt(sol.point),
        "witness": _pt(sol.witness),
        "R1": sol.R1,
        "vertices": list(sol.vertices),
        "weight_angles": None if rep.weight_angles is None else list(rep.weight_angles),
        "kappa": rep.kappa,
        "notes": list(rep.notes),
    }
    if sol.circle is not None:
        out["circle"] = {"center": _pt(sol.circle.center), "radius": sol.circle.radius}
    if sol.reason is not None:
        out["reason"] = sol.reason
    return out


def op_conjugate(rec: dict) -> dict:
    t = _triangle(rec)
    images, notes = [], []
    for x in _points(rec, 1):
        y = isogonal.isogonal_conjugate(t, x)
        images.append(_pt(y))
        region = isogonal.classify_region(t, x)
        if region.kind == "side_line":
            lab = min(zip(LABELS, t.vertices), key=lambda lv: dist(lv[1], y))[0]
            notes.append(f"on {region.detail}: conjugate is vertex {lab}")
        else:
            notes.append(str(region))
    return {"images": images, "notes": notes}


def op_classify(rec: dict) -> dict:
    t = _triangle(rec)
    pts = _points(rec, 1)
    x = pts[0]
    y = pts[1] if len(pts) > 1 else isogonal.isogonal_conjugate(t, x)
    terms = isogonal.cross_terms(t, x, y)
    return {
        "x": _pt(x),
        "y": _pt(y),
        "region_x": str(isogonal.classify_region(t, x)),
        "region_y": str(isogonal.classify_region(t, y)),
        "conjugacy": str(isogonal.classify_conjugacy(t, x, y)),
        "cross_terms": [[z.real, z.imag] for z in terms],
    }


def op_pedal(rec: dict) -> dict:
    t = _triangle(rec)
    m = _points(rec, 1)[0]
    pd = pedal.pedal_of(t, m)
    return {
        "feet": [_pt(p) for p in pd.feet],
        "angles": list(pd.angles),
        "R1": pd.R1,
        "orientation": pd.orientation,
        "same_orientation": pd.orientation == t.orientation,
    }


def _target(rec: dict) -> AngleTriple:
    if rec.get("angles") is not None:
        vals = [float(v) for v in rec["angles"]]
        if rec.get("degrees"):
            vals = [math.radians(v) for v in vals]
        if len(vals) == 2:
            vals.append(math.pi - sum(vals))
        if len(vals) != 3:
            raise InputError("'angles' needs two or three values")
        return AngleTriple(*vals)
    if rec.get("weights") is not None:
        return fermat.weight_angles(_weights(rec))
    raise InputError("locate needs 'angles' or 'weights'")


def op_locate(rec: dict) -> dict:
    t = _triangle(rec)
    target = _target(rec)
    m = pedal.locate_interior(t, target)
    out = {"target": list(target), "interior": _pt(m), "exterior": None}
    try:
        n = pedal.locate_exterior(t, target)
    except GeometryError as exc:
        out["note"] = str(exc)
    else:
        k = t.circumcircle
        out["exterior"] = _pt(n)
        out["inversion_product_ratio"] = dist(k.center, m) * dist(k.center, n) / k.radius**2
    return out


def _solve(rec: dict, t: Triangle):
    w = _weights(rec)
    neg = rec.get("negative")
    if neg is None:
        return fermat.solve_positive(t, w), None
    neg = _label(neg, "negative")
    return fermat.solve_mixed(t, w, neg), neg


def op_fermat(rec: dict) -> dict:
    t = _triangle(rec)
    sol, neg = _solve(rec, t)
    out = solution_dict(sol)
    out["negative"] = neg
    if sol.kind == "rejected":
        raise Rejected(out)
    return out


def op_verify(rec: dict) -> dict:
    t = _triangle(rec)
    kind = rec.get("type", "I")
    if kind not in ("I", "II", "III"):
        raise InputError("'type' must be I, II or III")
    vertex = _label(rec.get("vertex", "A"), "vertex")
    tol = float(rec.get("tol", 1e-9))
    abc = math.prod(t.sides)

    if rec.get("n"):
        if kind == "III":
            raise InputError("type III has no inequality to sample")
        rng = random.Random(rec.get("seed", 0))
        k = t.circumcircle
        box = 3.0 * k.radius

        def sample():
            return k.center + Point2(rng.uniform(-box, box), rng.uniform(-box, box))

        worst = math.inf
        for _ in range(int(rec["n"])):
            chk = isogonal.characterization_check(t, sample(), sample(), kind, vertex)
            worst = min(worst, chk.slack / abc)
        return {
            "type": kind,
            "vertex": vertex,
            "samples": int(rec["n"]),
            "seed": rec.get("seed", 0),
            "min_relative_slack": worst,
            "verdict": "inequality holds" if worst >= -tol else "inequality violated",
        }

    x, y = _points(rec, 2)[:2]
    chk = isogonal.characterization_check(t, x, y, kind, vertex)
    equal = abs(chk.slack) <= tol * abc
    return {
        "type": kind,
        "vertex": vertex,
        "lhs": chk.lhs,
        "rhs": chk.rhs,
        "slack": chk.slack,
        "equality": equal,
        "conjugacy": str(isogonal.classify_conjugacy(t, x, y)),
        "verdict": "equality" if equal else ("strict inequality" if chk.slack > 0 else "below bound"),
    }


OPS = {
    "conjugate": op_conjugate,
    "classify": op_classify,
    "pedal": op_pedal,
    "locate": op_locate,
    "fermat": op_fermat,
    "verify": op_verify,
}


def run_op(rec: dict) -> dict:
    """Evaluate one instance record; never raises. The result carries 'status'."""
    op = rec.get("op")
    if op not in OPS:
        return {"op": op, "status": "error", "error": f"unknown op {op!r}"}
    try:
        out = OPS[op](rec)
    except Rejected as rej:
        return {"op": op, "status": "rejected", **rej.payload}
    except (InputError, GeometryError, TypeError, ValueError) as exc:
        return {"op": op, "status": "error", "error": f"{type(exc).__name__}: {exc}"}
    return {"op": op, "status": "ok", **out}


def dumps(obj) -> str:
    # repr() of a float is the shortest string that round-trips exactly.
    return json.dumps(obj, allow_nan=False)


# ---- argument parsing -------------------------------------------------------


def _pair(s: str) -> list[float]:
    try:
        x, y = s.split(",")
        return [float(x), float(y)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected x,y but got {s!r}")


def _triple(s: str) -> list[float]:
    try:
        vals = [float(v) for v in s.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {s!r}")
    return vals


def _triangle_arg(tokens: list[str]) -> list[list[float]]:
    parts = [p for tok in tokens for p in tok.replace(";", " ").split()]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("triangle needs three x,y points")
    return [_pair(p) for p in parts]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for sampling modes")
    common.add_argument("--tol", type=float, default=1e-9, help="report tolerance (relative)")

    tri = argparse.ArgumentParser(add_help=False)
    tri.add_argument(
        "--triangle", nargs="+", required=True, metavar="X,Y",
        help='three vertices "x,y"; use --triangle="-1,0;1,0;0,2" for negative coordinates',
    )

    p = argparse.ArgumentParser(prog="isofermat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("conjugate", parents=[common, tri], help="isogonal conjugate of points")
    s.add_argument("--point", type=_pair, action="append", required=True)

    s = sub.add_parser("classify", parents=[common, tri], help="region and conjugacy type")
    s.add_argument("--x", type=_pair, required=True)
    s.add_argument("--y", type=_pair, help="defaults to the conjugate of x")

    s = sub.add_parser("pedal", parents=[common, tri], help="pedal triangle of a point")
    s.add_argument("--point", type=_pair, required=True)

    s = sub.add_parser("locate", parents=[common, tri], help="points with prescribed pedal angles")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--angles", type=_triple, help="a1,b1[,g1] in radians")
    g.add_argument("--weights", type=_triple, help="use the angles of the weight triangle")
    s.add_argument("--degrees", action="store_true")

    s = sub.add_parser("fermat", parents=[common, tri], help="weighted Fermat point")
    s.add_argument("--weights", type=_triple, required=True)
    s.add_argument("--negative", choices=LABELS, help="negate the weight at this vertex")

    s = sub.add_parser("verify", parents=[common, tri], help="evaluate a characterizing form")
    s.add_argument("--type", choices=("I", "II", "III"), default="I")
    s.add_argument("--vertex", choices=LABELS, default="A")
    s.add_argument("--x", type=_pair)
    s.add_argument("--y", type=_pair)
    s.add_argument("--random", type=int, metavar="N", help="sample N random pairs instead")

    s = sub.add_parser("render", parents=[common, tri], help="write an SVG figure")
    s.add_argument("--weights", type=_triple, required=True)
    s.add_argument("--negative", choices=LABELS)
    s.add_argument("-o", "--output", default="-")

    s = sub.add_parser("batch", parents=[common], help="JSONL in, JSONL out")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("-o", "--output", default="-")
    return p


def _record(args) -> dict:
    rec: dict[str, Any] = {"op": args.cmd, "triangle": _triangle_arg(args.triangle)}
    if args.cmd == "conjugate":
        rec["points"] = args.point
    elif args.cmd == "classify":
        rec["points"] = [args.x] + ([args.y] if args.y else [])
    elif args.cmd == "pedal":
        rec["points"] = [args.point]
    elif args.cmd == "locate":
        rec.update(angles=args.angles, weights=args.weights, degrees=args.degrees)
    elif args.cmd in ("fermat", "render"):
        rec.update(weights=args.weights, negative=args.negative)
    elif args.cmd == "verify":
        rec.update(type=args.type, vertex=args.vertex, tol=args.tol, seed=args.seed)
        if args.random:
            rec["n"] = args.random
        else:
            if args.x is None or args.y is None:
                raise argparse.ArgumentTypeError("verify needs --x and --y, or --random N")
            rec["points"] = [args.x, args.y]
    return rec


def _text(res: dict) -> str:
    lines = []
    for key, val in res.items():
        if key == "op":
            continue
        lines.append(f"{key}: {val}")
    return "\n".join(lines)


def _open_out(path: str):
    return sys.stdout if path == "-" else open(path, "w", encoding="utf-8")


def _batch(args) -> int:
    src = sys.stdin if args.input == "-" else open(args.input, encoding="utf-8")
    out = _open_out(args.output)
    status = EXIT_OK
    try:
        for lineno, line in enumerate(src, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                res = {"op": None, "status": "error", "error": f"line {lineno}: {exc}"}
            else:
                res = run_op(rec) if isinstance(rec, dict) else {
                    "op": None, "status": "error", "error": f"line {lineno}: not an object"}
            if res["status"] == "error":
                status = EXIT_INPUT
            out.write(dumps(res) + "\n")
    finally:
        if src is not sys.stdin:
            src.close()
        if out is not sys.stdout:
            out.close()
    return status


def _render(rec: dict, output: str) -> int:
    t = _triangle(rec)
    sol, neg = _solve(rec, t)
    doc = render_svg(t, None if sol.kind == "rejected" else sol, neg)
    fh = _open_out(output)
    fh.write(doc + "\n")
    if fh is not sys.stdout:
        fh.close()
    return EXIT_REJECTED if sol.kind == "rejected" else EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "batch":
            return _batch(args)
        rec = _record(args)
        if args.cmd == "render":
            return _render(rec, args.output)
    except (argparse.ArgumentTypeError, InputError, GeometryError, OSError) as exc:
        print(f"isofermat: error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    res = run_op(rec)
    if res["status"] == "error":
        print(f"isofermat: error: {res['error']}", file=sys.stderr)
        return EXIT_INPUT
    print(dumps(res) if args.json else _text(res))
    return EXIT_REJECTED if res["status"] == "rejected" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
