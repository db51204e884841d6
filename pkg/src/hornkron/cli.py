"""Command line entry point: ``hornkron <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails (violations found, a
certificate or rank target missed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cone, inequalities, kron, lr, reduction
from .characters import CACHE_ENV, character_table
from .errors import HornKronError
from .partitions import parse_index_set, parse_partition, tau

FAMILIES = ("murnaghan", "weyl_kron", "horn_kron", "final", "comparison")


def _partition(text: str):
    try:
        return parse_partition(text)
    except (ValueError, HornKronError) as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _index_set(text: str):
    try:
        return parse_index_set(text)
    except (ValueError, HornKronError) as exc:
        raise argparse.ArgumentTypeError(f"bad index set {text!r}: {exc}") from None


def _triple_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_partition, required=True)
    p.add_argument("--beta", type=_partition, required=True)
    p.add_argument("--gamma", type=_partition, required=True)


def _ef(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--e", type=int, required=required)
    p.add_argument("--f", type=int, required=required)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", metavar="DIR", help=f"character table cache directory (default: ${CACHE_ENV})")

    parser = argparse.ArgumentParser(prog="hornkron", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    _triple_args(p)
    p.add_argument("--oracle", action="store_true", help="use the character formula instead of tableaux")

    p = sub.add_parser("kron", parents=[common], help="Kronecker coefficient, or enumerate a semigroup")
    p.add_argument("--alpha", type=_partition)
    p.add_argument("--beta", type=_partition)
    p.add_argument("--gamma", type=_partition)
    p.add_argument("--enumerate", nargs=3, type=int, metavar=("E", "F", "G"), help="list Kron(E, F, G)")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--csv", action="store_true", help="CSV output for --enumerate")

    p = sub.add_parser("char", parents=[common], help="character values of S_n")
    p.add_argument("--n", type=int)
    p.add_argument("--lam", type=_partition)
    p.add_argument("--rho", type=_partition)

    p = sub.add_parser("horn-triples", parents=[common], help="index triples with LR coefficient 1")
    _ef(p)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)

    p = sub.add_parser("membership", parents=[common], help="decide c != 0 by the inequalities of LR(e, f, e+f)")
    _triple_args(p)
    _ef(p)

    p = sub.add_parser("ineq", parents=[common], help="inequality families")
    isub = p.add_subparsers(dest="action", required=True)
    q = isub.add_parser("list", parents=[common])
    _ef(q)
    q.add_argument("--flipped", action="store_true", help="variants of the Weyl-type and final forms with one block negated")
    q = isub.add_parser("verify", parents=[common])
    _ef(q)
    q.add_argument("--nmax", type=int, required=True)
    q.add_argument("--flipped", action="store_true")
    q = isub.add_parser("certificate", parents=[common], help="redundancy of the comparison form")
    _ef(q)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--row", choices=("j", "e+j"), default="j")
    q.add_argument("--partner", choices=("final", "weyl_kron"), default="final")
    q.add_argument("--flipped", action="store_true")

    p = sub.add_parser("reduce", parents=[common], help="evaluate a reduction formula")
    p.add_argument("kind", choices=("murnaghan", "weyl", "final", "horn"))
    _triple_args(p)
    _ef(p, required=False)
    p.add_argument("--j", type=int)
    p.add_argument("--I", dest="I", type=_index_set, help='index set like "{1}/2"')
    p.add_argument("--J", dest="J", type=_index_set)
    p.add_argument("--K", dest="K", type=_index_set)
    p.add_argument("--reading", help="weyl: six_fold (default), two_factor, two_factor_gamma_j; horn: default, swapped")
    p.add_argument("--verbose", action="store_true", help="list every nonzero term")

    p = sub.add_parser("face-dim", parents=[common], help="rank of the saturated points of one form")
    _ef(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--side", choices=("beta", "alpha"), default="beta")
    p.add_argument("--I", dest="I", type=_index_set)
    p.add_argument("--J", dest="J", type=_index_set)
    p.add_argument("--K", dest="K", type=_index_set)
    p.add_argument("--flipped", action="store_true")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--expected", type=int)

    p = sub.add_parser("cone-dim", parents=[common], help="dimension of the Kronecker cone")
    _ef(p)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("minimality", parents=[common], help="facet check for every inequality of LR(e, f, e+f)")
    _ef(p)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("stretch", parents=[common], help="stretched LR coefficients and fitted degree")
    _triple_args(p)
    p.add_argument("--N", type=int, default=6)
    _ef(p, required=False)
    return parser


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"missing --{missing[0]}")


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _triple(args):
    return args.alpha, args.beta, args.gamma


def _horn_triple(args) -> lr.HornTriple:
    _need(args, "I", "J", "K")
    e, f = args.e, args.f
    if args.I.ambient != e or args.J.ambient != f or args.K.ambient != e + f:
        raise UsageError(f"--I, --J, --K must live in {{1..{e}}}, {{1..{f}}}, {{1..{e + f}}}")
    c = lr.lr_coefficient(tau(args.I), tau(args.J), tau(args.K))
    return lr.HornTriple(args.I, args.J, args.K, e, f, c)


def _form(args):
    e, f = args.e, args.f
    fam = args.family
    if fam == "murnaghan":
        return inequalities.murnaghan_form(e, f)
    if fam == "horn_kron":
        return inequalities.horn_kron_form(_horn_triple(args))
    _need(args, "j")
    if fam == "weyl_kron":
        return inequalities.weyl_kron_form(e, f, args.j, args.flipped)
    if fam == "final":
        return inequalities.final_form(e, f, args.j, args.side, args.flipped)
    return inequalities.comparison_form(e, f, args.j)


def _run(args) -> int:
    cmd = args.command
    if cmd == "lr":
        fn = lr.lr_oracle if args.oracle else lr.lr_coefficient
        value = fn(*_triple(args))
        _emit(args, {"value": value}, str(value))
        return 0

    if cmd == "kron":
        if args.enumerate:
            records = kron.enumerate_kron(*args.enumerate, args.nmax, args.nmin)
            if args.json:
                print(kron.records_to_json(records))
            elif args.csv:
                sys.stdout.write(kron.records_to_csv(records))
            else:
                for rec in records:
                    print(f"{rec.alpha.text()}  {rec.beta.text()}  {rec.gamma.text()}  n={rec.n}  g={rec.g}")
            return 0
        _need(args, "alpha", "beta", "gamma")
        value = kron.kron_coefficient(*_triple(args))
        _emit(args, {"value": value}, str(value))
        return 0

    if cmd == "char":
        if args.lam is not None and args.rho is not None:
            from .characters import mn_character

            value = mn_character(args.lam, args.rho)
            _emit(args, {"value": value}, str(value))
            return 0
        _need(args, "n")
        table = character_table(args.n)
        data = {
            "n": table.n,
            "partitions": [list(p) for p in table.partitions],
            "values": [list(r) for r in table.values],
        }
        width = max(len(p.text()) for p in table.partitions)
        lines = [" " * width + "  " + " ".join(p.text() for p in table.partitions)]
        lines += [f"{p.text():>{width}}  " + " ".join(map(str, row)) for p, row in zip(table.partitions, table.values)]
        _emit(args, data, "\n".join(lines))
        return 0

    if cmd == "horn-triples":
        if args.r is None and args.s is None:
            triples = lr.all_horn_triples(args.e, args.f)
        else:
            _need(args, "r", "s")
            triples = lr.horn_triples(args.e, args.f, args.r, args.s)
        _emit(args, [t.to_json() for t in triples], "\n".join(t.text() for t in triples))
        return 0

    if cmd == "membership":
        member = lr.lr_member(*_triple(args), args.e, args.f)
        _emit(args, {"member": member}, str(member).lower())
        return 0

    if cmd == "ineq":
        return _run_ineq(args)

    if cmd == "reduce":
        return _run_reduce(args)

    if cmd == "face-dim":
        report = cone.face_dimension(_form(args), args.e, args.f, args.nmax, args.expected)
        _emit(args, report.to_json(), _report_line(report))
        return 0 if report.passed else 1

    if cmd == "cone-dim":
        res = cone.cone_dimension(args.e, args.f, args.nmax)
        text = f"rank {res.rank} (expected {res.expected}, nmax={res.nmax}, {'stable' if res.stable else 'still growing'})"
        _emit(args, res.to_json(), text)
        return 0 if res.rank == res.expected else 1

    if cmd == "minimality":
        reports = cone.lr_minimality_report(args.e, args.f, args.nmax)
        _emit(args, [r.to_json() for r in reports], "\n".join(_report_line(r) for r in reports))
        return 0 if all(r.passed for r in reports) else 1

    if cmd == "stretch":
        values = lr.stretched_lr(*_triple(args), args.N)
        degree, stable = lr.fitted_degree(values)
        data = {"values": values, "degree": degree, "stable": stable}
        text = f"values {' '.join(map(str, values))}\ndegree {degree}{'' if stable else ' (not enough points)'}"
        if args.e is not None and args.f is not None:
            data["bound"] = lr.degree_bound(args.e, args.f)
            text += f"\nbound {data['bound']}"
        _emit(args, data, text)
        return 0
    raise UsageError(f"unknown command {cmd}")


def _report_line(r: cone.FaceReport) -> str:
    mark = "ok" if r.passed else "FAIL"
    return f"{mark:4}  {r.form_label}: rank {r.rank}/{r.expected} from {r.saturated_count} points (nmax={r.nmax})"


def _run_ineq(args) -> int:
    if args.action == "list":
        forms = inequalities.family_forms(args.e, args.f, args.flipped)
        text = "\n".join(f"{f.label}: {' '.join(map(str, f.vector()))}" for f in forms)
        _emit(args, [f.to_json() for f in forms], text)
        return 0
    if args.action == "verify":
        report = inequalities.verify_family(args.e, args.f, args.nmax, args.flipped)
        lines = [f"{report.checked_forms} forms, {report.checked_records} records, {len(report.violations)} violations"]
        for v in report.violations:
            lines.append(f"{v.form_label}: ({' | '.join(p.text() for p in v.triple)}) slack {v.slack}")
        _emit(args, report.to_json(), "\n".join(lines))
        return 0 if report.empty else 1
    res = inequalities.redundancy_certificate(args.e, args.f, args.j, args.row, args.partner, args.flipped)
    text = f"{'holds' if res.holds else 'fails'}: {res.form.label} vs {res.summands[0].label} + {res.summands[1].label}"
    if not res.holds:
        text += f" (coordinates {res.mismatches} differ)"
    _emit(args, res.to_json(), text)
    return 0 if res.holds else 1


def _run_reduce(args) -> int:
    a, b, c = _triple(args)
    if args.kind == "murnaghan":
        value = reduction.murnaghan_reduce(a, b, c)
        result = reduction.ReductionResult(value)
    elif args.kind == "horn":
        _need(args, "e", "f")
        result = reduction.horn_reduce(a, b, c, _horn_triple(args), reading=args.reading or "default")
    else:
        _need(args, "e", "f", "j")
        if args.kind == "weyl":
            result = reduction.weyl_reduce(a, b, c, args.e, args.f, args.j, reading=args.reading or "six_fold")
        else:
            result = reduction.final_reduce(a, b, c, args.e, args.f, args.j)
    text = str(result.value)
    if args.verbose:
        for t in result.terms:
            idx = " ".join(f"{k}={v.text()}" for k, v in t.indices.items())
            text += f"\n  {idx}  factors {t.factors}  -> {t.product}"
    _emit(args, result.to_json(args.verbose), text)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache:
        os.environ[CACHE_ENV] = args.cache
    try:
        return _run(args)
    except UsageError as exc:
        print(f"hornkron {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (HornKronError, ValueError) as exc:
        print(f"hornkron {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
