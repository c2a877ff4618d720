"""``luroth`` command-line front end.

Exit codes: 0 when everything is certified or matched, 1 when anything is
inconclusive or mismatched, 2 on usage or domain errors. Fractions are
printed as ``p/q`` strings.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import construction as C
from . import criteria as K
from . import dimension as Dm
from .exact import DigitSet, LurothDomainError, LurothWord, eval_word, expand, fraction_str
from .figures import write_figure
from .lemmas import lemma_sweep
from .report import SECTIONS, build_suite
from .sumset import CoverOverflowError, certify_gap

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a fraction: {text!r}") from exc


def cmd_expand(args) -> int:
    x = _parse_fraction(args.x)
    word = expand(x)
    back = eval_word(word)
    _dump({**word.to_json(), "word": str(word), "value": fraction_str(back)})
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        word = LurothWord.from_json(json.loads(args.word))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"bad word JSON: {exc}") from exc
    _dump({**word.to_json(), "value": fraction_str(eval_word(word))})
    return EXIT_OK


def cmd_thickness(args) -> int:
    if not 2 <= args.n1 < args.n2:
        raise UsageError("need 2 <= N1 < N2")
    q = C.quantities(C.scc(args.n1, args.n2))
    lo, hi = C.band_interval(args.n1, args.n2)
    _dump({
        "N1": args.n1, "N2": args.n2,
        "interval": [fraction_str(lo), fraction_str(hi)],
        "g": fraction_str(q.g), "h": fraction_str(q.h),
        "tau": fraction_str(q.tau), "gamma": fraction_str(q.gamma),
        "tau_closed_form": fraction_str(C.thickness_closed_form(args.n1, args.n2)),
        "tau_polynomial_form": fraction_str(C.thickness_polynomial_form(args.n1, args.n2)),
        "max_gap": fraction_str(C.max_gap(args.n1, args.n2)),
        "ordered": C.verify_ordered(args.n1, args.n2).ordered,
    })
    return EXIT_OK


def _report_exit(reports) -> int:
    payload = [r.to_json() for r in reports]
    _dump(payload[0] if len(payload) == 1 else payload)
    return EXIT_OK if all(r.certified for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    t = args.theorem
    if t == "theorem1":
        claims = [args.pair] if args.pair else [[3, 5], [4, 4], [3, 3, 3], [3, 3]]
        return _report_exit([K.theorem1_driver(c, args.depths) for c in claims])
    if t == "theorem2":
        if not args.ks:
            raise UsageError("theorem2 needs --ks")
        return _report_exit([K.theorem2_driver(args.ks)])
    if t == "corollary3":
        ks = [args.k] if args.k else range(2, 21)
        return _report_exit([K.corollary3_driver(k, args.N, args.route) for k in ks])
    if t == "theorem4":
        ks = [args.k] if args.k else range(2, 21)
        return _report_exit([K.theorem4_driver(k) for k in ks])
    if t == "optimality":
        ks = [args.k] if args.k else range(3, 21)
        return _report_exit([K.optimality_check(k) for k in ks])
    if t == "lemmas":
        rep = lemma_sweep(range(2, args.n1_max + 1), args.n2_max)
        _dump(rep.to_json())
        return EXIT_OK if rep.passed else EXIT_FAIL
    if t == "dims":
        suite = build_suite().run("dimension")
        _dump(suite.to_json())
        return EXIT_OK if suite.ok else EXIT_FAIL
    raise UsageError(f"unknown theorem id {t!r}")


def cmd_gap(args) -> int:
    a, b = DigitSet.band(args.n1a, args.n2a), DigitSet.band(args.n1b, args.n2b)
    cert = certify_gap(a, b, tuple(args.depths))
    _dump(cert.to_json())
    return EXIT_OK if cert.certified else EXIT_FAIL


def cmd_dim(args) -> int:
    ds = DigitSet.parse(args.alphabet)
    if ds.is_finite:
        res = Dm.moran_solve(ds, args.tol)
        _dump(res.to_json())
    else:
        res, n = Dm.ray_sup_search(ds.lo, args.tol)
        _dump({**res.to_json(), "N": n})
    return EXIT_OK


def cmd_suite(args) -> int:
    suite = build_suite().run(args.section, workers=args.workers)
    print(suite.summary())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(suite.to_json(), fh, indent=2, ensure_ascii=False)
            fh.write("\n")
    return EXIT_OK if suite.ok else EXIT_FAIL


def cmd_figure(args) -> int:
    if args.kind == "scc":
        if args.n1 is None or args.n2 is None:
            raise UsageError("scc needs --n1 and --n2")
        params = {"n1": args.n1, "n2": args.n2, "depth": args.depth}
    else:
        params = {"a": tuple(args.a), "la": args.levels[0], "b": tuple(args.b), "lb": args.levels[1]}
    try:
        path = write_figure(args.kind, args.output, **params)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from exc
    print(path)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="luroth", description="Exact verification of Lüroth-set sumsets.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("expand", help="Lüroth expansion of a rational p/q in (0, 1]")
    s.add_argument("x")
    s.set_defaults(func=cmd_expand)

    s = sub.add_parser("eval", help='value of a word given as {"preperiod":[..],"period":[..]}')
    s.add_argument("word")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("thickness", help="exact g, h, tau, gamma of the SCC of L_{N1,N2}")
    s.add_argument("n1", type=int)
    s.add_argument("n2", type=int)
    s.set_defaults(func=cmd_thickness)

    s = sub.add_parser("verify", help="run a congruence driver and print its report")
    s.add_argument("theorem", choices=["theorem1", "theorem2", "corollary3", "theorem4",
                                       "optimality", "lemmas", "dims"])
    s.add_argument("--pair", "--sets", dest="pair", type=int, nargs="+",
                   help="upper digits k of the bounded sets L<=k")
    s.add_argument("--depths", type=int, nargs="+", help="gap-search depths for theorem1")
    s.add_argument("--ks", type=int, nargs="+", help="ray thresholds for theorem2")
    s.add_argument("--k", type=int)
    s.add_argument("--N", type=int)
    s.add_argument("--route", choices=["astels", "hlavka"], default="astels")
    s.add_argument("--n1-max", type=int, default=20)
    s.add_argument("--n2-max", type=int, default=40)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gap", help="mod-1 gap certificate for a sum of two band covers")
    for name in ("n1a", "n2a", "n1b", "n2b"):
        s.add_argument(name, type=int)
    s.add_argument("--depths", type=int, nargs=2, required=True, metavar=("DA", "DB"))
    s.set_defaults(func=cmd_gap)

    s = sub.add_parser("dim", help="Hausdorff dimension of L_A (e.g. '2,3', '2..5', '3..')")
    s.add_argument("alphabet")
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("suite", help="reproduce every numeric claim")
    s.add_argument("--section", choices=SECTIONS)
    s.add_argument("--json", metavar="OUT")
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_suite)

    s = sub.add_parser("figure", help="write a deterministic SVG")
    s.add_argument("kind", choices=["scc", "product_square", "sum_cover"])
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--n1", type=int)
    s.add_argument("--n2", type=int)
    s.add_argument("--depth", type=int, default=2)
    s.add_argument("--a", type=int, nargs=2, default=[2, 3], metavar=("N1", "N2"))
    s.add_argument("--b", type=int, nargs=2, default=[2, 3], metavar=("N1", "N2"))
    s.add_argument("--levels", type=int, nargs=2, default=[2, 2], metavar=("LA", "LB"))
    s.set_defaults(func=cmd_figure)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, LurothDomainError, CoverOverflowError, ValueError) as exc:
        print(f"luroth: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
