"""Command line front end.

Exit status is 0 when the check passes, 1 when it fails and 2 for usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List

from .algebra.matrix import Matrix
from .algebra.poly import Poly
from .algebra.ratfunc import T, X
from .algebra.tower import ETA, S, tower
from .chebyshev import chebyshev_A, chebyshev_B, chebyshev_system, diagonalizer, eigenvalues
from .dependence import (
    Dependent,
    Independent,
    NonSimpleFixture,
    SimpleRing,
    decide_dependence,
)
from .errors import ExprError, ParseError, ShapeError, SpecializationError, UsageError
from .expr import parse_expr, parse_rational, parse_ratfunc
from .galois import (
    check_product_equal,
    full_group,
    root_of_unity_order,
    stab_delta,
    stab_sigma,
    verify_pv_relations,
    verify_sigma_stability,
)
from .sequences import (
    chebyshev_witness,
    fundamental_sequence,
    verify_delta_solution,
    verify_sigma_solution,
)
from .systems import (
    NONRATIONAL,
    SigmaDeltaSystem,
    check_integrability,
    conjugation_check,
    specialize_t,
    specialize_x,
)


# -- system files ------------------------------------------------------------------

def shipped_file(name: str) -> Path:
    return Path(str(resources.files("sigmadelta.data").joinpath(name)))


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    shipped = shipped_file(p.name)
    if shipped.exists():
        return shipped
    raise ParseError(f"no such file: {path}")


def _matrix_cell(rows, n: int, name: str, sv: str, dv: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(r, list) or len(r) != n for r in rows
    ):
        raise ShapeError(f"{name} must be a {n}x{n} array of expression strings")
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, src in enumerate(r):
            cell = f"{name}[{i}][{j}]"
            if not isinstance(src, str):
                raise ExprError("expected an expression string", cell)
            row.append(parse_ratfunc(src, sv, dv, cell))
        out.append(row)
    return Matrix(out)


def parse_system_text(text: str) -> SigmaDeltaSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("a system file must hold a JSON object", 1, 1)
    for key in ("n", "A", "B"):
        if key not in doc:
            raise ParseError(f"missing member {key!r}")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ShapeError(f"n must be a positive integer, got {n!r}")
    sv = doc.get("shift_var", "x")
    dv = doc.get("diff_var", "t")
    if sv == dv:
        raise ParseError("shift_var and diff_var must differ")
    A = _matrix_cell(doc["A"], n, "A", sv, dv)
    B = _matrix_cell(doc["B"], n, "B", sv, dv)
    h = parse_ratfunc(str(doc.get("h", "1")), sv, dv, "h")
    if not h.is_polynomial():
        raise ExprError("the denominator witness must be a polynomial", "h")
    try:
        return SigmaDeltaSystem(A, B, h)
    except ShapeError:
        raise
    except ValueError as e:
        raise ParseError(f"invalid system: {e}") from None


def parse_system_file(path) -> SigmaDeltaSystem:
    p = _resolve(str(path))
    return parse_system_text(p.read_text(encoding="utf-8"))


def system_to_dict(S: SigmaDeltaSystem) -> Dict[str, Any]:
    def cells(M: Matrix):
        return [[v.format() for v in r] for r in M.rows]

    return {
        "n": S.n,
        "A": cells(S.A),
        "B": cells(S.B),
        "h": S.h.format(),
        "shift_var": "x",
        "diff_var": "t",
    }


def serialize_system(S: SigmaDeltaSystem) -> str:
    return json.dumps(system_to_dict(S), indent=2) + "\n"


# -- reports ---------------------------------------------------------------------

@dataclass
class Report:
    command: str
    ok: bool
    verdict: str
    payload: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Matrix):
        return [[str(x) for x in r] for r in v.rows]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def render_report(r: Report, fmt: str = "text", timing: bool = False) -> str:
    if fmt == "json":
        doc = {"command": r.command, "verdict": r.verdict, **_jsonable(r.payload)}
        if timing:
            doc["elapsed_s"] = round(r.elapsed, 6)
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    lines = [r.verdict.upper()]
    for key in sorted(r.payload):
        lines.extend(_text_block(key, r.payload[key]))
    if timing:
        lines.append(f"elapsed: {r.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def _text_block(key, value) -> List[str]:
    value = _jsonable(value)
    if isinstance(value, list) and value and all(isinstance(x, dict) for x in value):
        out = [f"{key}:"]
        for row in value:
            out.append("  " + ", ".join(f"{k}={row[k]}" for k in sorted(row)))
        return out
    if isinstance(value, list):
        return [f"{key}:"] + [f"  {x}" for x in value]
    if isinstance(value, dict):
        return [f"{key}:"] + [f"  {k}: {value[k]}" for k in sorted(value)]
    return [f"{key}: {value}"]


def _check_report(command: str, check, extra=None) -> Report:
    payload = dict(extra or {})
    payload["detail"] = check.detail
    if not check.passed:
        if check.residual is not None:
            payload["residual"] = check.residual
        if check.index is not None:
            payload["index"] = check.index
        if check.which is not None:
            payload["which"] = check.which
    return Report(command, check.passed, check.verdict, payload)


# -- argument parsing ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def _rational(src: str) -> Fraction:
    try:
        return parse_rational(src)
    except (ExprError, TypeError, ValueError) as e:
        raise argparse.ArgumentTypeError(f"expected p/q, got {src!r} ({e})")


def _rational_or_marker(src: str):
    if src.strip().lower() == "nonrational":
        return NONRATIONAL
    return _rational(src)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    # nested subparsers would otherwise reset flags given before the action
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="append the elapsed time")

    p = _Parser(prog="sigmadelta", description="exact checks for mixed shift/derivative systems")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    c = sub.add_parser("check-integrability", parents=[common], help="sigma(B)A = delta(A) + AB")
    c.add_argument("file")

    c = sub.add_parser("specialize", parents=[common], help="fix t or x")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--t", type=_rational, help="value for the differential variable")
    g.add_argument("--x", type=_rational_or_marker, help="value for the shift variable")

    c = sub.add_parser("dependence", parents=[common], help="linear dependence over the constants")
    c.add_argument("elements", nargs="*", help="expressions, e.g. t 't^2'")
    c.add_argument("--ring", choices=("ratfunc", "tower"), default="ratfunc")
    c.add_argument("--fixture", help="JSON fixture ring with scaling shifts")
    c.add_argument("--theta-bound", type=int, default=None)

    c = sub.add_parser("sequence", parents=[common], help="fundamental sequence of the Chebyshev system")
    c.add_argument("--window", type=int, default=10)
    c.add_argument("--c", type=_rational, default=Fraction(0))

    c = sub.add_parser("galois", parents=[common], help="Galois groups of the Chebyshev system")
    gsub = c.add_subparsers(dest="action", parser_class=_Parser)
    gsub.add_parser("full", parents=[common])
    a = gsub.add_parser("stab-sigma", parents=[common])
    a.add_argument("--c1", type=_rational, required=True)
    a = gsub.add_parser("stab-delta", parents=[common])
    a.add_argument("--c2", type=_rational_or_marker, required=True)
    a = gsub.add_parser("product", parents=[common])
    a.add_argument("--c1", type=_rational, required=True)
    a.add_argument("--c2", type=_rational_or_marker, required=True)

    sub.add_parser("demo-chebyshev", parents=[common], help="run the whole Chebyshev pipeline")
    return p


# -- subcommands -------------------------------------------------------------------

def _group_payload(G) -> Dict[str, Any]:
    return {"group": G.name, "tag": G.tag, "equations": G.equation_strings()}


def _cmd_check(args) -> Report:
    S = parse_system_file(args.file)
    return _check_report("check-integrability", check_integrability(S))


def _cmd_specialize(args) -> Report:
    S = parse_system_file(args.file)
    try:
        if args.t is not None:
            M = specialize_t(S, args.t).A
            what = {"t": str(args.t), "A": M}
        else:
            M = specialize_x(S, args.x).B
            what = {"x": str(args.x), "B": M}
    except SpecializationError as e:
        return Report("specialize", False, "fail", {"error": type(e).__name__, "detail": str(e)})
    return Report("specialize", True, "pass", what)


def _load_fixture(path):
    doc = json.loads(_resolve(path).read_text(encoding="utf-8"))
    gens = tuple(doc["gens"])
    ring = NonSimpleFixture(gens, tuple(parse_rational(doc["sigma"][g]) for g in gens))
    ns = {g: Poly.var(gens, g) for g in gens}
    elems = [ring.element(Poly.constant(gens, 0) + parse_expr(e, ns)) for e in doc["elements"]]
    return ring, elems


def _cmd_dependence(args) -> Report:
    if args.fixture:
        mode, elems = _load_fixture(args.fixture)
    else:
        if not args.elements:
            raise UsageError("give at least one element or --fixture")
        mode = SimpleRing()
        if args.ring == "tower":
            ns = {"x": tower(X), "t": tower(T), "s": tower(S), "eta": ETA}
            elems = [parse_expr(e, ns, f"element {i}") for i, e in enumerate(args.elements)]
        else:
            elems = [parse_ratfunc(e, cell=f"element {i}") for i, e in enumerate(args.elements)]
    v = decide_dependence(elems, mode, args.theta_bound)
    payload = {"elements": [str(e) for e in elems]}
    if isinstance(v, Independent):
        payload["thetas"] = [str(w) for w in v.thetas]
        payload["det"] = str(v.det)
        return Report("dependence", True, v.verdict, payload)
    if isinstance(v, Dependent):
        payload["constants"] = [str(c) for c in v.constants]
        return Report("dependence", True, v.verdict, payload)
    payload["bound"] = v.bound
    payload["determinants_checked"] = v.determinants_checked
    return Report("dependence", False, v.verdict, payload)


def _cmd_sequence(args) -> Report:
    N, c = args.window, args.c
    A, B, U, d = chebyshev_A(), chebyshev_B(), diagonalizer(), eigenvalues()
    seq = fundamental_sequence(A, c, U, N)
    sig = verify_sigma_solution(seq, A, c, N)
    dlt = verify_delta_solution(seq, B, c, N)
    table = []
    for s in range(N + 1):
        table.append({
            "s": s,
            "diagonal_identity": seq[s] == U * d ** s,
            "sigma_ok": sig.passed or (sig.index is not None and s < sig.index),
            "delta_ok": dlt.passed or (dlt.index is not None and s < dlt.index),
        })
    ok = sig.passed and dlt.passed and all(r["diagonal_identity"] for r in table)
    return Report("sequence", ok, "pass" if ok else "fail", {"c": str(c), "N": N, "table": table})


def _cmd_galois(args) -> Report:
    action = args.action
    if action is None:
        raise UsageError("galois needs one of: full, stab-sigma, stab-delta, product")
    try:
        if action == "full":
            return Report("galois full", True, "pass", _group_payload(full_group()))
        if action == "stab-sigma":
            G = stab_sigma(args.c1)
            payload = _group_payload(G)
            payload["root_order"] = str(root_of_unity_order(args.c1))
            return Report("galois stab-sigma", True, "pass", payload)
        if action == "stab-delta":
            return Report("galois stab-delta", True, "pass", _group_payload(stab_delta(args.c2)))
        H, Hp = stab_sigma(args.c1), stab_delta(args.c2)
    except SpecializationError as e:
        return Report(f"galois {action}", False, "fail", {"error": type(e).__name__, "detail": str(e)})
    res = check_product_equal(H, Hp)
    payload = {"H": H.name, "Hp": Hp.name, "detail": res.detail}
    if res.passed:
        payload["factorizations"] = [
            {"g": str(g), "h": str(h), "hp": str(hp)} for g, h, hp in res.witness
        ]
    else:
        payload["witness"] = res.witness
    return Report("galois product", res.passed, res.verdict, payload)


def demo_steps():
    """(name, passed) for each stage of the Chebyshev pipeline."""
    S = chebyshev_system()
    steps = [("integrability", check_integrability(S).passed)]
    steps.append(("chebyshev witness", all(r.ok for r in chebyshev_witness(10))))
    steps.append(("pv relations", verify_pv_relations().passed))
    A, B, U, d = chebyshev_A(), chebyshev_B(), diagonalizer(), eigenvalues()
    seq = fundamental_sequence(A, 0, U, 10)
    steps.append((
        "fundamental sequence",
        verify_sigma_solution(seq, A, 0, 10).passed
        and verify_delta_solution(seq, B, 0, 10).passed
        and all(seq[s] == U * d ** s for s in range(11)),
    ))
    steps.append(("conjugation", conjugation_check(S, 0, 5).passed))
    steps.append(("sigma stability", all(verify_sigma_stability(c).passed for c in (2, 0, 3))))
    steps.append(("stab groups", stab_sigma(2).tag == "DiagTorus" and stab_delta(Fraction(1, 3)).name == "DihedralMuQ(3)"))
    steps.append(("product", check_product_equal(stab_sigma(2), stab_delta(Fraction(1, 3))).passed))
    return steps


def _cmd_demo(args) -> Report:
    steps = demo_steps()
    ok = all(p for _, p in steps)
    return Report("demo-chebyshev", ok, "pass" if ok else "fail",
                  {"steps": [{"step": n, "passed": p} for n, p in steps]})


_COMMANDS = {
    "check-integrability": _cmd_check,
    "specialize": _cmd_specialize,
    "dependence": _cmd_dependence,
    "sequence": _cmd_sequence,
    "galois": _cmd_galois,
    "demo-chebyshev": _cmd_demo,
}


def run_subcommand(argv) -> "tuple[Report, argparse.Namespace]":
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.timing = getattr(args, "timing", False)
    if args.command is None:
        raise UsageError(build_parser().format_help())
    start = time.perf_counter()
    report = _COMMANDS[args.command](args)
    report.elapsed = time.perf_counter() - start
    return report, args


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, args = run_subcommand(argv)
    except (UsageError, ParseError, ExprError, ShapeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(render_report(report, args.format, args.timing))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
