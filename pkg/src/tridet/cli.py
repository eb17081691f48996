"""Command-line interface.

    tridet count "x^3-x"
    tridet detrep "x^3+x" --seed 0 --json
    tridet verify "x^3-x" "x^2-1/3"

Exit status: 0 on success, 1 on a mathematical failure (breakdown, zero
pivot, multiple root, failed identity), 2 on a usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from .detrep import RetryExhausted, detrep_build, isolate_real_roots
from .exact_core import (
    DenseMat,
    NotMonicError,
    Poly,
    ZeroPivot,
    cauchy_bound,
    format_poly,
    poly_gcd,
    poly_invmod,
    poly_divrem,
    rat_to_str,
    symmetric_signature,
)
from .hankel import (
    NotCoprime,
    barnett_check,
    dual_q_tilde,
    duality_check,
    hankel_ldlt,
    intertwinning_check,
    newton_sums,
    series_expand,
    wdr_check,
)
from .srems import (
    DegreeBreakdown,
    NotSquarefree,
    classical_sturm_query,
    pmv,
    srems_compute,
    sturm_count,
    tarski_query,
)
from .tridiag import SurdTridiag, surd_view, tridiag_from_srems

MATH_ERRORS = (
    ZeroPivot,
    DegreeBreakdown,
    NotSquarefree,
    NotMonicError,
    NotCoprime,
    RetryExhausted,
    ZeroDivisionError,
)


class PolySyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|([-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        kind = "int" if m.group(1) else "x" if m.group(2) else "op"
        tokens.append((kind, m.group(m.lastindex), m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str) -> Poly:
    """Parse ``term (('+'|'-') term)*`` with ``term := [coef '*'] 'x' ['^' exp] | coef``.

    Coefficients are integers or ``int/int``.  Errors carry the byte offset.
    """
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind: str, value: str | None = None):
        nonlocal i
        k, v, off = toks[i]
        if k != kind or (value is not None and v != value):
            want = value or kind
            raise PolySyntaxError(f"expected {want!r}", off)
        i += 1
        return v, off

    def coef() -> Fraction:
        num, _ = take("int")
        if peek()[:2] == ("op", "/"):
            take("op", "/")
            den, off = take("int")
            if int(den) == 0:
                raise PolySyntaxError("zero denominator", off)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def power() -> int:
        take("x")
        if peek()[:2] == ("op", "^"):
            take("op", "^")
            return int(take("int")[0])
        return 1

    def term() -> dict[int, Fraction]:
        if peek()[0] == "x":
            return {power(): Fraction(1)}
        c = coef()
        if peek()[:2] == ("op", "*"):
            take("op", "*")
            return {power(): c}
        return {0: c}

    acc: dict[int, Fraction] = {}
    sgn = 1
    if peek()[:2] in (("op", "-"), ("op", "+")):
        sgn = -1 if take("op")[0] == "-" else 1
    while True:
        for k, v in term().items():
            acc[k] = acc.get(k, Fraction(0)) + sgn * v
        kind, val, off = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take("op")
            sgn = -1 if val == "-" else 1
            continue
        raise PolySyntaxError(f"unexpected {val!r}", off)
    deg = max(acc)
    return Poly([acc.get(k, 0) for k in range(deg + 1)])


# --------------------------------------------------------------------------
# text rendering


def _grid(rows: Sequence[Sequence[str]]) -> str:
    if not rows:
        return "(empty)"
    widths = [max(len(r[j]) for r in rows) for j in range(len(rows[0]))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def _mat_text(m: DenseMat) -> str:
    return _grid([[rat_to_str(v) for v in m.row(i)] for i in range(m.rows)])


def _surd_text(diag, offdiag, J) -> str:
    n = len(diag)
    cells = [["0"] * n for _ in range(n)]
    for i in range(n):
        cells[i][i] = rat_to_str(diag[i])
    for k, (s, r) in enumerate(offdiag, start=1):
        i = n - 1 - k
        txt = "0" if r == 0 else ("-" if s < 0 else "") + f"sqrt({rat_to_str(r)})"
        cells[i][i + 1] = cells[i + 1][i] = txt
    return _grid(cells) + "\nJ = diag(" + ", ".join(f"{j:+d}" for j in J) + ")"


def _approx(rows) -> list[list[float]]:
    return [[float(f"{v:.12g}") for v in r] for r in rows]


# --------------------------------------------------------------------------
# subcommands; each returns (payload, text)


def cmd_count(args):
    p = args.p.monic()
    if poly_gcd(p, p.derivative()).degree > 0:
        raise NotSquarefree("p has a multiple root")
    try:
        sturm, method = sturm_count(p), "srems"
    except DegreeBreakdown:
        b = cauchy_bound(p)
        sturm, method = classical_sturm_query(p, -b, b), "classical"
    sylvester = symmetric_signature(newton_sums(p).matrix())
    if sturm != sylvester:  # pragma: no cover - a disagreement is a defect
        raise AssertionError(f"Sturm count {sturm} != Sylvester signature {sylvester}")
    payload = {"sturm": sturm, "sylvester": sylvester}
    if method != "srems":
        payload["sturm_method"] = method
    return payload, f"sturm     {sturm}\nsylvester {sylvester}"


def cmd_srems(args):
    s = srems_compute(args.p, args.q)
    lines = [f"p_{k} = {format_poly(pk)}" for k, pk in enumerate(s.polys)]
    lines.append("alphas   " + " ".join(rat_to_str(a) for a in s.alphas))
    lines.append("epsilons " + " ".join(f"{e:+d}" for e in s.epsilons))
    lines.append("beta^2   " + " ".join(rat_to_str(b) for b in s.beta_sqs))
    lines.append("nu       " + " ".join(f"{v:+d}" for v in s.nu))
    lines.append(f"breakdown {s.breakdown}")
    return s.to_json(), "\n".join(lines)


def _tridiag(p, q):
    s = srems_compute(p, q)
    if s.breakdown is not None:
        raise DegreeBreakdown(s.breakdown)
    return tridiag_from_srems(s)


def cmd_tridiag(args):
    t = _tridiag(args.p, args.q)
    sv = surd_view(t)
    payload = t.to_json()
    payload["surd"] = sv.to_json(approx=args.approx)
    text = "alphas (bottom-up) " + " ".join(rat_to_str(a) for a in t.alphas)
    text += "\n" + _surd_text(sv.diag, sv.offdiag, sv.J)
    if args.approx:
        text += "\napproximate:\n" + _grid([[f"{v:.12g}" for v in r] for r in sv.float_rows()])
    return payload, text


def cmd_hankel(args):
    h = series_expand(args.p, args.q)
    ldl = hankel_ldlt(args.p, args.q)
    payload = {
        "hankel": h.to_json(),
        "L": ldl.L.to_json(),
        "D": [rat_to_str(d) for d in ldl.D],
        "signature": ldl.signature(),
    }
    text = "H =\n" + _mat_text(h.matrix()) + "\nL =\n" + _mat_text(ldl.L)
    text += "\nD = " + " ".join(rat_to_str(d) for d in ldl.D)
    text += f"\nsignature {ldl.signature()}"
    return payload, text


def cmd_taq(args):
    p = args.p.monic()
    v = tarski_query(args.r, p)
    return {"taq": v}, f"TaQ {v}"


def cmd_detrep(args):
    rep = detrep_build(args.p, args.seed)
    payload = rep.to_json()
    if args.approx:
        sv = SurdTridiag(rep.diag, rep.offdiag, rep.J)
        payload["approx_matrix"] = _approx(sv.float_rows())
    text = _surd_text(rep.diag, rep.offdiag, rep.J) + f"\nsgn(J) = {rep.sgnJ}"
    return payload, text


def cmd_dual(args):
    qt = dual_q_tilde(args.p, args.q)
    ok = duality_check(args.p, args.q)
    return {"q_tilde": qt.to_json(), "duality": ok}, f"q~ = {format_poly(qt)}\nduality {ok}"


def _prop32_chain(p: Poly, q: Poly) -> bool:
    s = srems_compute(p, q)
    if s.breakdown is not None:
        return False
    dp = p.derivative()
    r = poly_divrem(q * poly_invmod(dp, p), p)[1]
    sig = hankel_ldlt(p, q).signature()
    return pmv(s.nu) == sig == tarski_query(r, p)


def cmd_verify(args):
    p, q = args.p, args.q
    checks = {
        "intertwinning": lambda: intertwinning_check(series_expand(p, q), p),
        "barnett": lambda: barnett_check(p, q),
        "wdr": lambda: wdr_check(p, q),
        "duality": lambda: duality_check(p, q),
        "pmv_signature_taq": lambda: _prop32_chain(p, q),
    }
    results = {}
    for name, fn in checks.items():
        try:
            results[name] = bool(fn())
        except MATH_ERRORS + (ValueError,) as exc:
            results[name] = False
            print(f"{name}: {type(exc).__name__}: {exc}", file=sys.stderr)
    text = "\n".join(f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results.items())
    return {"identities": results, "all_pass": all(results.values())}, text


# --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage errors at exit status 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _poly_arg(text: str) -> Poly:
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--approx", action="store_true",
                        help="add floating renderings (12 significant digits, approximate)")
    ap = _Parser(prog="tridet", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *polys, help=None):
        sp = sub.add_parser(name, parents=[common], help=help)
        for pname in polys:
            sp.add_argument(pname, type=_poly_arg)
        sp.set_defaults(func=fn)
        return sp

    add("count", cmd_count, "p", help="Sturm count and Sylvester signature")
    add("srems", cmd_srems, "p", "q", help="signed remainder sequence")
    add("tridiag", cmd_tridiag, "p", "q", help="tridiagonal representation and surd view")
    add("hankel", cmd_hankel, "p", "q", help="Hankel sequence, LDL^T and signature")
    add("taq", cmd_taq, "r", "p", help="Tarski query TaQ(r, p)")
    add("detrep", cmd_detrep, "p", help="determinantal representation").add_argument(
        "--seed", type=int, default=0)
    add("dual", cmd_dual, "p", "q", help="dual polynomial q~ and duality check")
    add("verify", cmd_verify, "p", "q", help="run the identity checks")
    return ap


def run_command(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, text = args.func(args)
    except MATH_ERRORS as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if hasattr(exc, "index"):
            err["index"] = exc.index
        if args.json:
            print(json.dumps(err))
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)
    if args.command == "verify" and not payload["all_pass"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run_command())
