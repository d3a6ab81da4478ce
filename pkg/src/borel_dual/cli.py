"""Command-line front end.

Ideals are written as comma-separated monomials, e.g. ``x1^2, x1*x2``;
grid monomials use the row_column form ``x1_2``.  ``0`` is the zero
ideal and ``1`` the unit ideal.  Exit codes: 1 = input error,
2 = precondition violation, 3 = internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import core, decompose, duality, homology, polarize, verify
from .core import DegenerateIdealError, Monomial, MonomialIdeal, NotStronglyStableError
from .homology import NotCohenMacaulayError
from .polarize import GridIdeal, GridMonomial


class ParseError(ValueError):
    pass


class CrossCheckError(RuntimeError):
    pass


_TOKEN = re.compile(r"\s*([a-z])(\d+)(?:(\^)(\d+)|(_)(\d+))?\s*")


def _parse_monomial(text: str, offset: int):
    """Returns ({var or cell: exponent}, is_grid)."""
    text = "".join(text.split())
    pos = 0
    powers: dict = {}
    is_grid = None
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"syntax error at column {offset + pos + 1}: {text[pos:]!r}")
        idx = int(m.group(2))
        if idx == 0:
            raise ParseError(f"variable index 0 at column {offset + m.start(2) + 1}")
        if m.group(5):  # grid form xI_J
            col = int(m.group(6))
            if col == 0:
                raise ParseError(f"column index 0 at column {offset + m.start(6) + 1}")
            grid = True
            key = (idx, col)
            exp = 1
        else:
            grid = False
            key = idx
            exp = int(m.group(4)) if m.group(3) else 1
            if exp == 0:
                raise ParseError(f"zero exponent at column {offset + m.start(4) + 1}")
        if is_grid is None:
            is_grid = grid
        elif is_grid != grid:
            raise ParseError("cannot mix plain and grid variables in one monomial")
        powers[key] = powers.get(key, 0) + exp
        pos = m.end()
        if pos < len(text):
            if text[pos] != "*":
                raise ParseError(f"expected '*' at column {offset + pos + 1}")
            pos += 1
    if not powers:
        raise ParseError(f"empty monomial at column {offset + 1}")
    return powers, is_grid


def parse_ideal(text: str, n: int | None = None, d: int | None = None):
    """Parse the ideal grammar into a MonomialIdeal or GridIdeal."""
    stripped = text.strip()
    if stripped == "0":
        return MonomialIdeal(n or 1, ())
    if stripped == "1":
        nn = n or 1
        return MonomialIdeal(nn, (Monomial((0,) * nn),))
    monos = []
    grid_any = None
    offset = 0
    for chunk in text.split(","):
        powers, is_grid = _parse_monomial(chunk, offset)
        offset += len(chunk) + 1
        monos.append(powers)
        if grid_any is None:
            grid_any = is_grid
        elif grid_any != is_grid:
            raise ParseError("cannot mix plain and grid monomials")
    if grid_any:
        rows = max(i for p in monos for (i, _) in p)
        cols = max(j for p in monos for (_, j) in p)
        rows = max(rows, n or 0)
        cols = max(cols, d or 0)
        gens = [GridMonomial(rows, cols, frozenset(p)) for p in monos]
        reduced = polarize.grid_minimalize(gens, rows, cols)
        if len(reduced.gens) < len(gens):
            print("warning: generators were not minimal; reduced", file=sys.stderr)
        return reduced
    nn = max(max(p) for p in monos)
    if n is not None:
        if n < nn:
            raise ParseError(f"--vars {n} is smaller than the largest index {nn}")
        nn = n
    gens = [Monomial(tuple(p.get(i, 0) for i in range(1, nn + 1))) for p in monos]
    reduced = core.minimalize(gens, nn)
    if len(reduced.gens) < len(gens):
        print("warning: generators were not minimal; reduced", file=sys.stderr)
    return reduced


def parse_components(text: str):
    comps = []
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("()")
        if not chunk:
            continue
        try:
            a = tuple(int(x) for x in chunk.split(","))
        except ValueError as exc:
            raise ParseError(f"bad component {chunk!r}") from exc
        if any(x < 1 for x in a):
            raise ParseError(f"component entries must be positive: {a}")
        comps.append(a)
    if not comps:
        raise ParseError("empty component list")
    return comps


def _fmt_mono(m: Monomial, letter: str) -> str:
    return str(m).replace("x", letter)


def _fmt_ideal(I: MonomialIdeal, letter: str = "x") -> str:
    if I.is_zero:
        return "0"
    return ", ".join(_fmt_mono(g, letter) for g in I.gens)


def _fmt_general_component(c: dict) -> str:
    parts = []
    for v, e in sorted(c.items()):
        parts.append(f"x{v}" if e == 1 else f"x{v}^{e}")
    return "(" + ", ".join(parts) + ")"


def _ideal_json(I) -> dict:
    if isinstance(I, GridIdeal):
        return {
            "n": I.rows,
            "d": I.cols,
            "generators": [sorted(g.cells) for g in I.gens],
        }
    return {"n": I.n, "generators": [list(g.exponents) for g in I.gens]}


def _series_json(s: core.RationalSeries) -> dict:
    return {"num": {str(e): c for e, c in s.numerator}, "denpow": s.denom_power}


def _read_ideal_arg(args) -> str:
    if args.ideal == "-":
        return sys.stdin.read()
    return args.ideal


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_check(args):
    if args.from_components:
        comps = parse_components(_read_ideal_arg(args))
        n = args.vars or max(len(a) for a in comps)
        ok = decompose.right_shift_check(comps, n)
        _emit(args, [f"right-shift check: {str(ok).lower()}"], {"right_shift": ok})
    else:
        I = parse_ideal(_read_ideal_arg(args), args.vars)
        ok = core.is_strongly_stable(I)
        _emit(args, [f"strongly stable: {str(ok).lower()}"], {"strongly_stable": ok})
    return 0 if ok else 2


def cmd_polarize(args, standard: bool):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    J = polarize.stdpol_ideal(I, args.cols) if standard else polarize.bpol_ideal(I, args.cols)
    _emit(args, [J.to_str()], _ideal_json(J))
    return 0


def cmd_depolarize(args):
    J = parse_ideal(_read_ideal_arg(args), args.vars, args.cols)
    if not isinstance(J, GridIdeal):
        raise ParseError("depolarize expects a grid ideal (x1_2 form)")
    I = polarize.depolarize(J)
    _emit(args, [str(I)], _ideal_json(I))
    return 0


def cmd_transpose(args):
    J = parse_ideal(_read_ideal_arg(args), args.vars, args.cols)
    if not isinstance(J, GridIdeal):
        raise ParseError("transpose expects a grid ideal (x1_2 form)")
    T = polarize.transpose(J)
    _emit(args, [T.to_str("y")], _ideal_json(T))
    return 0


def cmd_dual(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    d = args.cols or max(I.max_degree, 1)
    star = duality.star_dual(I, d)
    lines = [_fmt_ideal(star, "y")]
    payload = _ideal_json(star)
    if args.witness:
        grid = polarize.bpol_ideal(I, d)
        dual_grid = duality.alexander_dual(grid)
        transposed = polarize.transpose(dual_grid)
        expected = polarize.bpol_ideal(star, I.n)
        lines += [
            f"b-pol(I)        = {grid.to_str()}",
            f"b-pol(I)^dual   = {dual_grid.to_str()}",
            f"transpose       = {transposed.to_str('y')}",
        ]
        payload["witness"] = {
            "bpol": _ideal_json(grid),
            "bpol_dual": _ideal_json(dual_grid),
            "transpose": _ideal_json(transposed),
        }
        if transposed != expected:
            raise CrossCheckError("grid-level duality identity failed")
    _emit(args, lines, payload)
    return 0


def cmd_decompose(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    if args.method == "oracle":
        comps = decompose.decompose_oracle(I)
        lines = ["; ".join(_fmt_general_component(c) for c in comps)]
        payload = {"n": I.n, "components": [sorted(c.items()) for c in comps]}
    elif args.method == "psi":
        E = decompose.decompose_strongly_stable(I)
        comps = decompose.bpol_decomposition(E)
        lines = ["; ".join(str(tuple(b)) for b in comps)]
        payload = {"n": I.n, "components": [list(b) for b in comps]}
    else:
        comps = decompose.decompose_strongly_stable(I)
        lines = ["; ".join(f"({','.join(str(x) for x in a)})" for a in comps)]
        payload = {"n": I.n, "components": [list(a) for a in comps]}
    _emit(args, lines, payload)
    return 0


def cmd_sigma(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    sig = duality.sigma_ideal(I, args.cols)
    lines = [str(sig)]
    payload = _ideal_json(sig)
    if args.decompose:
        E = decompose.decompose_strongly_stable(I)
        comps = duality.sigma_decomposition(E)
        lines.append("; ".join(_fmt_general_component(c) for c in comps))
        payload["components"] = [sorted(c.items()) for c in comps]
    _emit(args, lines, payload)
    return 0


def cmd_betti(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars, args.cols)
    if args.method == "oracle":
        table = homology.betti_oracle(I)
    else:
        if isinstance(I, GridIdeal):
            raise ParseError("the closed-form method needs a plain ideal")
        table = homology.ek_betti(I)
    lines = [str(table)]
    payload = {"betti": {f"{i},{j}": v for (i, j), v in table.entries}}
    _emit(args, lines, payload)
    return 0


def cmd_lc(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    d = args.cols or max(I.max_degree, 1)
    series = {}
    if args.method in ("dual", "all"):
        series["dual"] = homology.lc_series_via_dual(I, d)
    if args.method in ("components", "all"):
        E = decompose.decompose_strongly_stable(I)
        series["components"] = homology.lc_series_via_components(E, I.n)
    if args.method in ("gamma", "all"):
        E = decompose.decompose_strongly_stable(I)
        series["gamma"] = homology.lc_series_via_gamma(
            decompose.bpol_decomposition(E), I.n
        )
    values = list(series.values())
    if args.method == "all" and any(v != values[0] for v in values):
        raise CrossCheckError("local cohomology series disagree between methods")
    lc = values[0]
    lines = [f"i={i}: {s}" for i, s in lc.entries]
    payload = {"lc": {str(i): _series_json(s) for i, s in lc.entries}}
    _emit(args, lines, payload)
    return 0


def cmd_adeg(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    E = decompose.decompose_strongly_stable(I)
    ad = homology.adeg(E, I.n)
    shortcut = homology.adeg_top_from_generators(I)
    if ad.as_dict().get(I.n - I.nu(), 0) != shortcut:
        raise CrossCheckError("arithmetic degree shortcut disagrees")
    lines = [f"adeg_{i} = {v}" for i, v in ad.strata]
    lines += [f"adeg = {ad.total}", f"deg = {ad.deg}"]
    payload = {"adeg": {str(i): v for i, v in ad.strata}, "total": ad.total, "deg": ad.deg}
    _emit(args, lines, payload)
    return 0


def cmd_canonical(args):
    I = parse_ideal(_read_ideal_arg(args), args.vars)
    gens = homology.canonical_generators(I, args.cols)
    ordered = sorted(gens, key=GridMonomial.sort_key)
    _emit(
        args,
        [", ".join(g.to_str() for g in ordered)],
        {"generators": [sorted(g.cells) for g in ordered]},
    )
    return 0


def cmd_verify(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("BOREL_DUAL_SEED", "0"))
    spec = verify.CorpusSpec(
        seed=seed,
        trials=args.trials,
        n_range=(1, args.vars or 3),
        d_range=(1, args.cols or 3),
        gens_range=(1, args.gens),
    )
    report = verify.run_suite(spec)
    text = report.to_json()
    print(text)
    if args.report:
        _write_report_files(report, args.report)
    return 0 if report.total_failures == 0 else 3


def _write_report_files(report, outdir: str):
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "report.json"), "w") as fh:
        fh.write(report.to_json() + "\n")
    names = sorted(report.results)
    with open(os.path.join(outdir, "properties.csv"), "w") as fh:
        fh.write("property,passed,failed,skipped\n")
        for name in names:
            r = report.results[name]
            fh.write(f"{name},{r.passed},{r.failed},{r.skipped}\n")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(9, 0.35 * len(names) + 1.5))
    ys = range(len(names))
    passed = [report.results[n].passed for n in names]
    failed = [report.results[n].failed for n in names]
    skipped = [report.results[n].skipped for n in names]
    ax.barh(ys, passed, color="tab:green", label="passed")
    ax.barh(ys, failed, left=passed, color="tab:red", label="failed")
    ax.barh(
        ys,
        skipped,
        left=[p + f for p, f in zip(passed, failed)],
        color="tab:gray",
        label="skipped",
    )
    ax.set_yticks(list(ys))
    ax.set_yticklabels(names, fontsize=8)
    ax.set_xlabel("trials")
    ax.set_title("cross-check suite")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    fig.savefig(os.path.join(outdir, "summary.png"), dpi=150)
    plt.close(fig)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borel-dual",
        description="Alexander duality toolkit for strongly stable monomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--vars", type=int, default=None, help="ambient variable count")
        p.set_defaults(fn=fn)
        return p

    p = add("check", cmd_check, help="strong stability / right-shift check")
    p.add_argument("ideal")
    p.add_argument("--from-components", action="store_true",
                   help="treat input as components '(a1,..);(b1,..)' and run the right-shift check")

    p = add("bpol", lambda a: cmd_polarize(a, standard=False), help="column-placing polarization")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)

    p = add("pol", lambda a: cmd_polarize(a, standard=True), help="standard polarization")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)

    p = add("depolarize", cmd_depolarize, help="collapse a grid ideal back")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)

    p = add("transpose", cmd_transpose, help="transpose a grid ideal")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)

    p = add("dual", cmd_dual, help="strongly stable dual ideal")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--witness", action="store_true", help="show the grid-level identity")

    p = add("decompose", cmd_decompose, help="irreducible decomposition")
    p.add_argument("ideal")
    p.add_argument("--method", choices=["borel", "oracle", "psi"], default="borel")

    p = add("sigma", cmd_sigma, help="squarefree staircase shift")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--decompose", action="store_true")

    p = add("betti", cmd_betti, help="Betti table of the ideal")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--method", choices=["ek", "oracle"], default="ek")

    p = add("lc", cmd_lc, help="local cohomology Hilbert series")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--method", choices=["dual", "components", "gamma", "all"], default="all")

    p = add("adeg", cmd_adeg, help="arithmetic degree strata")
    p.add_argument("ideal")

    p = add("canonical", cmd_canonical, help="canonical module generators (CM only)")
    p.add_argument("ideal")
    p.add_argument("--cols", type=int, default=None)

    p = add("verify", cmd_verify, help="randomized cross-check suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--cols", type=int, default=None)
    p.add_argument("--gens", type=int, default=4, help="max seed monomials per ideal")
    p.add_argument("--report", default=None, metavar="DIR",
                   help="write report.json, properties.csv and summary.png here")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, ValueError) as exc:
        if isinstance(
            exc,
            (
                NotStronglyStableError,
                DegenerateIdealError,
                NotCohenMacaulayError,
                decompose.GridConditionError,
            ),
        ):
            print(f"error: precondition violated: {exc}", file=sys.stderr)
            return 2
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"error: cross-check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
