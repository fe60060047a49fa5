"""Command line interface: ``srhk <command> FILE ...``.

Exit codes: 0 success, 2 usage, 3 invalid input, 4 mode, threshold or
capacity error, 5 oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import errors
from .documents import ComplexDocument, read_document, write_document
from .hkrees import determine_mode, eto_yoshida_check, hk_rees_at, hk_rees_polynomial
from .homology import cm_report
from .lengths import (conca_hk, hilbert_samuel, hilbert_series, postulation_number, sr_colength)
from .oracle import oracle_conca, oracle_hilbert_samuel, oracle_hk_rees, oracle_sr_colength
from .polynomial import format_terms
from .simplicial import (complete_bipartite_complex, cycle_complex, cycle_graph,
                         independence_complex, path_complex, rp2, simplex)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_MODE, EXIT_ORACLE = 0, 2, 3, 4, 5


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _mode(args, K):
    return determine_mode(K, args.char, args.delta, args.ad_sign)


def cmd_fvector(args, K):
    _emit(args, {"f": list(K.f_vector)}, " ".join(map(str, K.f_vector)))


def cmd_hvector(args, K):
    _emit(args, {"h": list(K.h_vector)}, " ".join(map(str, K.h_vector)))


def cmd_hseries(args, K):
    h, d = hilbert_series(K)
    num = format_terms([(c, "" if i == 0 else "t" if i == 1 else f"t^{i}") for i, c in enumerate(h)])
    _emit(args, {"numerator": list(h), "denominator_exponent": d}, f"({num}) / (1 - t)^{d}")


def cmd_cm(args, K):
    rep = cm_report(K, args.char)
    verdict = "Cohen-Macaulay" if rep["cohen_macaulay"] else "not Cohen-Macaulay"
    primes = ", ".join(map(str, rep["torsion_primes"])) or "none"
    _emit(args, rep, f"{verdict} in characteristic {args.char}\ntorsion primes in links: {primes}")


def cmd_postulation(args, K):
    n = postulation_number(K, args.char)
    _emit(args, {"postulation": n}, str(n))


def cmd_hs(args, K):
    v = hilbert_samuel(K, args.n)
    _emit(args, {"n": args.n, "hilbert_samuel": v}, str(v))


def cmd_conca(args, K):
    v = conca_hk(K, args.s)
    _emit(args, {"s": args.s, "conca": v}, str(v))


def cmd_hk_at(args, K):
    mode = _mode(args, K)
    v = hk_rees_at(K, args.s, mode, experimental=args.experimental)
    if mode.is_experimental(args.s):
        print(f"note: s = {args.s} is below the range where the closed form is proved polynomial",
              file=sys.stderr)
    _emit(args, {"s": args.s, "hk": v, "mode": mode.to_dict()}, str(v))


def cmd_hk_poly(args, K):
    report = hk_rees_polynomial(K, _mode(args, K), oracle_points=args.oracle)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
        return
    verdict = eto_yoshida_check(report)
    mode = report.mode
    lines = [
        f"vertices r = {report.r}, d = {report.d}",
        f"f = {report.f}, h = {report.h}",
        "mode: " + (f"Cohen-Macaulay, postulation number {mode.postulation}" if mode.cohen_macaulay
                    else f"non-Cohen-Macaulay, delta = {mode.delta}, a_d {mode.ad_sign}"),
        f"valid for s >= {mode.s_min}",
        "samples: " + ", ".join(f"HK({s}) = {v}" for s, v in report.samples.items()),
        f"HK(s) = {report.polynomial}",
        f"      = {report.binomial}",
        f"multiplicity = {report.multiplicity}",
        f"c(d) e(n) = {verdict.bound} ({'equal' if verdict.equal else 'not equal'})",
    ]
    if report.oracle is not None:
        lines.append("oracle: " + ("agrees" if all(report.oracle.values()) else "DISAGREES"))
    print("\n".join(lines))


def _verify(args, K):
    rows = []
    for s in range(1, args.s_max + 1):
        for n in range(0, args.n_max + 1):
            rows.append((f"colength s={s} n={n}", sr_colength(K, s, n), oracle_sr_colength(K, s, n)))
        rows.append((f"conca s={s}", conca_hk(K, s), oracle_conca(K, s)))
    for n in range(0, args.n_max + 1):
        rows.append((f"hilbert-samuel n={n}", hilbert_samuel(K, n), oracle_hilbert_samuel(K, n)))
    try:
        mode = _mode(args, K)
    except errors.MissingAInvariantData as exc:
        mode = None
        print(f"skipping HK(s): {exc}", file=sys.stderr)
    if mode is not None:
        for s in range(mode.s_min, args.s_max + 1):
            rows.append((f"hk s={s}", hk_rees_at(K, s, mode), oracle_hk_rees(K, s)))
    return rows


def cmd_verify(args, K):
    rows = _verify(args, K)
    bad = [r for r in rows if r[1] != r[2]]
    if args.json:
        print(json.dumps({"checks": [{"name": n, "closed_form": a, "oracle": b, "pass": a == b}
                                     for n, a, b in rows], "failures": len(bad)}, indent=2))
    else:
        for name, a, b in rows:
            print(f"{'PASS' if a == b else 'FAIL'} {name}: closed form {a}, oracle {b}")
        print(f"{len(rows) - len(bad)}/{len(rows)} checks passed")
    return EXIT_ORACLE if bad else EXIT_OK


def cmd_gen(args):
    kind = args.kind
    if kind in ("path", "cycle", "circle", "simplex") and args.r is None:
        raise errors.ValidationError(f"gen {kind} needs --r")
    if kind == "path":
        K, name = path_complex(args.r), f"path on {args.r} vertices"
    elif kind == "cycle":
        K, name = independence_complex(cycle_graph(args.r)), f"independence complex of the {args.r}-cycle"
    elif kind == "circle":
        K, name = cycle_complex(args.r), f"boundary of the {args.r}-gon"
    elif kind == "simplex":
        K, name = simplex(args.r), f"simplex on {args.r} vertices"
    elif kind == "bipartite":
        if args.alpha is None or args.beta is None:
            raise errors.ValidationError("gen bipartite needs --alpha and --beta")
        K = complete_bipartite_complex(args.alpha, args.beta)
        name = f"independence complex of K_{args.alpha},{args.beta}"
    else:
        K, name = rp2(), "6-vertex real projective plane"
    doc = ComplexDocument(K, args.format, name)
    if args.output == "-":
        sys.stdout.write(doc.dumps())
    else:
        write_document(doc, args.output)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srhk", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    def with_mode(sp):
        sp.add_argument("--delta", type=int, help="max |a_i(R)| over finite a-invariants")
        sp.add_argument("--ad-sign", choices=["neg", "negative", "zero"], help="sign of a_d(R)")

    with_file("fvector", cmd_fvector, "f-vector")
    with_file("hvector", cmd_hvector, "h-vector")
    with_file("hseries", cmd_hseries, "Hilbert series of the face ring")
    with_file("cm", cmd_cm, "Reisner's Cohen-Macaulay test")
    with_file("postulation", cmd_postulation, "postulation number (Cohen-Macaulay only)")
    with_file("hs", cmd_hs, "Hilbert-Samuel length l(R/n^N)").add_argument("--n", type=int, required=True)
    with_file("conca", cmd_conca, "generalized HK length l(R/n^[S])").add_argument("--s", type=int, required=True)
    sp = with_file("hk-at", cmd_hk_at, "HK(s) of the Rees algebra at one point")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--experimental", action="store_true", help="allow s below the validity threshold")
    with_mode(sp)
    sp = with_file("hk-poly", cmd_hk_poly, "fitted HK polynomial of the Rees algebra")
    sp.add_argument("--oracle", type=int, default=0, metavar="K",
                    help="recount the first K samples by brute force")
    with_mode(sp)
    sp = with_file("verify", cmd_verify, "closed forms against brute-force counts")
    sp.add_argument("--s-max", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    with_mode(sp)

    g = sub.add_parser("gen", help="write a generated complex")
    g.add_argument("kind", choices=["path", "cycle", "circle", "bipartite", "rp2", "simplex"])
    g.add_argument("--r", type=int)
    g.add_argument("--alpha", type=int)
    g.add_argument("--beta", type=int)
    g.add_argument("--format", choices=["facet-text", "structured"], default="facet-text")
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=None)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            cmd_gen(args)
            return EXIT_OK
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            doc = read_document(args.file)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return args.func(args, doc.complex) or EXIT_OK
    except (errors.ParseError, errors.ValidationError, errors.ComplexError, errors.InvalidQuery,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (errors.BelowValidityThreshold, errors.MissingAInvariantData, errors.NotCohenMacaulay,
            errors.FitMismatch, errors.SubsetBlowup, errors.BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODE


if __name__ == "__main__":
    sys.exit(main())
