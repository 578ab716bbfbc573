"""Command-line front end.

Subcommands::

    xfam construct NAME [--n ..] [-o FILE]     write a family or coloring
    xfam eval FORMULA [--s ..]                 exact value as JSON
    xfam check PROPERTY FILE... [--q/--s]      verdict on family files
    xfam search PROBLEM [--n ..] [--mode ..]   oracle report as JSON
    xfam table NAME [--max-n ..]               oracle-versus-formula sweep

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from math import floor

from . import constructions as C
from . import formulas as F
from .core import matchings as M
from .core import operators as O
from .core.textio import format_coloring, format_family, read_coloring, read_family
from .errors import XfamError
from .oracles import (
    max_almost_matching_free,
    max_cross_dependent_sum,
    max_no_s_matching,
    max_no_s_matching_with_tau,
    max_q_dependent_sum,
    max_rainbow_free_colors,
    verify_lemma61,
    verify_prop2,
    verify_shadow_lemma,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


INT_PARAMS = ("n", "k", "s", "m", "l", "i", "q", "e", "center")


def _add_params(p: argparse.ArgumentParser) -> None:
    for name in INT_PARAMS:
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--u", type=Fraction, help="rational parameter, e.g. 4 or 7/2")


def _need(args, names):
    vals = {}
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"missing required option --{name}")
        vals[name] = v
    return vals


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# construct --------------------------------------------------------------

CONSTRUCTIONS = {
    "threshold": (("n", "m"), lambda a: C.threshold_family(a["n"], a["m"])),
    "tilde": (("s", "m", "l", "n", "i"), lambda a: C.tilde_family(a["s"], a["m"], a["l"], a["n"], a["i"])),
    "frankl": (("n", "k", "s", "i"), lambda a: C.frankl_family(a["n"], a["k"], a["s"], a["i"])),
    "hm": (("n", "k", "s"), lambda a: C.hm_family(a["n"], a["k"], a["s"])),
    "kleitman": (("s", "m"), lambda a: C.kleitman_family(a["s"], a["m"])),
    "star": (("n", "k"), lambda a: C.star_family(a["n"], a["k"])),
}


def cmd_construct(args) -> int:
    if args.name == "ar-lower":
        a = _need(args, ("n", "k", "s"))
        if args.base:
            base = read_family(args.base)
        else:
            # the largest family with no (s-1)-matching, from the oracle
            base = max_no_s_matching(a["n"], a["k"], a["s"] - 1).witness
        _emit(format_coloring(C.ar_lower_coloring(a["n"], a["k"], a["s"], base)), args.output)
        return EXIT_OK
    if args.name not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.name!r}; choose from {sorted(CONSTRUCTIONS) + ['ar-lower']}")
    names, build = CONSTRUCTIONS[args.name]
    _emit(format_family(build(_need(args, names))), args.output)
    return EXIT_OK


# eval -------------------------------------------------------------------

FORMULAS = {
    "binomial": (("n", "k"), lambda a: F.binomial(a["n"], a["k"])),
    "theorem2-rhs": (("s", "m", "l"), lambda a: F.theorem2_rhs(a["s"], a["m"], a["l"])),
    "theorem7-rhs": (("n", "s", "m", "l"), lambda a: F.theorem7_rhs(a["n"], a["s"], a["m"], a["l"])),
    "q-dependent-bound": (("n", "s", "q"), lambda a: F.q_dependent_bound(a["n"], a["s"], a["q"])),
    "kleitman-rhs": (("n", "s"), lambda a: F.kleitman_rhs(a["n"], a["s"])),
    "ekr": (("n", "k"), lambda a: F.ekr_value(a["n"], a["k"])),
    "emc-candidate": (("n", "k", "s"), lambda a: F.emc_candidate(a["n"], a["k"], a["s"])),
    "frankl-range": (("n", "k", "s"), lambda a: F.frankl_range_ok(a["n"], a["k"], a["s"])),
    "thm4-range": (("n", "k", "s"), lambda a: F.thm4_range_ok(a["n"], a["k"], a["s"])),
    "hm-value": (("n", "k", "s"), lambda a: F.hm_value(a["n"], a["k"], a["s"])),
    "almost-matching": (("s", "m"), lambda a: F.almost_matching_value(a["s"], a["m"])),
    "ar-upper-simple": (("n", "k", "s", "e"), lambda a: F.ar_upper_simple(a["n"], a["k"], a["s"], a["e"])),
    "ar-upper-refined": (("n", "k", "s", "e"), lambda a: F.ar_upper_refined(a["n"], a["k"], a["s"], a["e"])),
    "lemma61-rhs": (("n", "k", "s", "u"), lambda a: F.lemma61_rhs(a["n"], a["k"], a["s"], a["u"])),
}


def cmd_eval(args) -> int:
    if args.name not in FORMULAS:
        raise UsageError(f"unknown formula {args.name!r}; choose from {sorted(FORMULAS)}")
    names, fn = FORMULAS[args.name]
    a = _need(args, names)
    value = fn(a)
    out = {"formula": args.name, "params": {k: str(v) if isinstance(v, Fraction) else v for k, v in a.items()}}
    if isinstance(value, bool):
        out["value"] = value
    else:
        out["exact"] = str(Fraction(value))
        out["floor"] = floor(Fraction(value))
    print(json.dumps(out))
    return EXIT_OK


# check ------------------------------------------------------------------

def _witness_json(w):
    if w is None:
        return None
    d = {"sets": w.to_lists()}
    if w.class_labels is not None:
        d["class_labels"] = list(w.class_labels)
    return d


def cmd_check(args) -> int:
    prop = args.property
    files = args.files
    out = {"property": prop}
    if prop in ("cross-dependent", "q-dependent"):
        fams = [read_family(p) for p in files]
        q = None
        if prop == "q-dependent":
            q = _need(args, ("q",))["q"]
        w = M.find_disjoint_representatives(fams, q)
        out.update(value=w is None, witness=_witness_json(w))
    elif prop in ("rainbow", "star-like"):
        if len(files) != 1:
            raise UsageError(f"{prop} takes exactly one coloring file")
        col = read_coloring(files[0])
        s = _need(args, ("s",))["s"]
        if prop == "rainbow":
            w = M.find_rainbow_matching(col, s)
            out.update(value=w is not None, witness=_witness_json(w))
        else:
            r = M.is_star_like(col, s)
            out.update(value=r is not None, Y=None if r is None else list(r[0].elements), cls=None if r is None else r[1])
    else:
        if len(files) != 1:
            raise UsageError(f"{prop} takes exactly one family file")
        f = read_family(files[0])
        if prop == "shifted":
            out["value"] = O.is_shifted(f)
        elif prop == "up-set":
            out["value"] = O.is_up_set(f)
        elif prop == "nu":
            out["value"] = M.matching_number(f)
        elif prop == "tau":
            t = M.minimum_cover(f)
            out.update(value=len(t), cover=list(t.elements))
        elif prop == "almost-matching":
            w = M.find_almost_matching(f, _need(args, ("s",))["s"])
            out.update(value=w is not None, witness=_witness_json(w))
        else:
            raise UsageError(f"unknown property {prop!r}")
    print(json.dumps(out))
    return EXIT_OK


# search -----------------------------------------------------------------

def _dep_mode(args):
    return args.mode or "full"


SEARCHES = {
    "cross-dependent": (("n", "s"), lambda a, o: max_cross_dependent_sum(a["n"], a["s"], mode=_dep_mode(o), threads=o.threads, max_witnesses=o.max_witnesses)),
    "q-dependent": (("n", "s", "q"), lambda a, o: max_q_dependent_sum(a["n"], a["s"], a["q"], mode=_dep_mode(o), threads=o.threads, max_witnesses=o.max_witnesses)),
    "no-matching": (("n", "k", "s"), lambda a, o: max_no_s_matching(a["n"], a["k"], a["s"], mode=o.mode or "auto", max_witnesses=o.max_witnesses)),
    "no-matching-tau": (("n", "k", "s"), lambda a, o: max_no_s_matching_with_tau(a["n"], a["k"], a["s"], max_witnesses=o.max_witnesses)),
    "almost-free": (("n", "s"), lambda a, o: max_almost_matching_free(a["n"], a["s"], mode=o.mode or "full", max_witnesses=o.max_witnesses)),
    "rainbow-free": (("n", "k", "s"), lambda a, o: max_rainbow_free_colors(a["n"], a["k"], a["s"])),
    "lemma61": (("n", "k", "s", "u"), lambda a, o: verify_lemma61(a["n"], a["k"], a["s"], a["u"])),
    "prop2": (("s", "l"), lambda a, o: verify_prop2(a["s"], a["l"])),
    "shadow-lemma": (("n",), lambda a, o: verify_shadow_lemma(a["n"])),
}


def cmd_search(args) -> int:
    if args.name not in SEARCHES:
        raise UsageError(f"unknown search {args.name!r}; choose from {sorted(SEARCHES)}")
    names, fn = SEARCHES[args.name]
    report = fn(_need(args, names), args)
    print(report.to_json())
    if getattr(report, "passed", True) is False:
        return EXIT_FAILED
    return EXIT_OK


# table ------------------------------------------------------------------

def _rows_theorem2(o):
    max_n = o.max_n if o.max_n is not None else 4
    mode = o.mode or "full"
    max_s = o.max_s if o.max_s is not None else (5 if mode == "full" else 3)
    for n in range(1, max_n + 1):
        for s in range(2, max_s + 1):
            m, l = F.split_size(n, s)
            yield {"n": n, "s": s, "m": m, "l": l}, F.theorem2_rhs(s, m, l), max_cross_dependent_sum(n, s, mode=mode, threads=o.threads).optimum


def _rows_theorem7(o):
    max_n = o.max_n if o.max_n is not None else 4
    mode = o.mode or "full"
    max_s = o.max_s if o.max_s is not None else (5 if mode == "full" else 3)
    for n in range(1, max_n + 1):
        for s in range(2, max_s + 1):
            for q in range(1, n + 1):
                m, l = F.split_size(q, s)
                yield ({"n": n, "s": s, "q": q, "m": m, "l": l}, F.theorem7_rhs(n, s, m, l),
                       max_q_dependent_sum(n, s, q, mode=mode, threads=o.threads).optimum)


def _rows_ekr(o):
    k = o.k if o.k is not None else 2
    max_n = o.max_n if o.max_n is not None else 8
    for n in range(2 * k, max_n + 1):
        yield {"n": n, "k": k}, F.ekr_value(n, k), max_no_s_matching(n, k, 2).optimum


def _rows_emc(o):
    max_n = o.max_n if o.max_n is not None else 9
    for n in range(6, max_n + 1):
        yield {"n": n, "k": 2, "s": 3}, F.emc_candidate(n, 2, 2), max_no_s_matching(n, 2, 3).optimum


def _rows_almost(o):
    max_n = o.max_n if o.max_n is not None else 4
    for n in range(1, max_n + 1):
        for s in range(2, n + 3):
            if (n + 2) % s:
                continue
            m = (n + 2) // s
            if m < 2:
                # with the empty set allowed, 2^[s-2] itself has no almost matching of size s
                continue
            mode = "full" if n <= 4 else "upsets"
            yield {"n": n, "s": s, "m": m, "mode": mode}, F.almost_matching_value(s, m), max_almost_matching_free(n, s, mode).optimum


def _rows_shadow(o):
    ns = [o.n] if o.n is not None else list(range(1, (o.max_n or 4) + 1))
    for n in ns:
        yield {"n": n}, "holds", "holds" if verify_shadow_lemma(n).passed else "fails"


def _rows_ar(o):
    k = o.k if o.k is not None else 2
    max_n = o.max_n if o.max_n is not None else 6
    for n in range(k + 1, max_n + 1):
        if F.binomial(n, k) > 15:
            break
        for s in range(2, n // k + 1):
            if n <= s * k:
                continue
            e = max_no_s_matching(n, k, s - 1).optimum
            yield {"n": n, "k": k, "s": s, "e": e}, e + 2, max_rainbow_free_colors(n, k, s).optimum + 1


TABLES = {
    "theorem2": _rows_theorem2,
    "theorem7": _rows_theorem7,
    "ekr": _rows_ekr,
    "emc-k2": _rows_emc,
    "almost": _rows_almost,
    "shadow-lemma": _rows_shadow,
    "ar-small": _rows_ar,
}


def cmd_table(args) -> int:
    if args.name not in TABLES:
        raise UsageError(f"unknown table {args.name!r}; choose from {sorted(TABLES)}")
    rows = [
        {"params": params, "formula": formula, "oracle": oracle, "equal": formula == oracle}
        for params, formula, oracle in TABLES[args.name](args)
    ]
    if args.format == "json":
        print(json.dumps({"table": args.name, "rows": rows}))
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["params", "formula", "oracle", "equal"])
        for r in rows:
            w.writerow([";".join(f"{k}={v}" for k, v in r["params"].items()), r["formula"], r["oracle"], r["equal"]])
        sys.stdout.write(buf.getvalue())
    return EXIT_OK if all(r["equal"] for r in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="xfam", description="Exact computations on set families.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="write a named family or coloring")
    c.add_argument("name")
    _add_params(c)
    c.add_argument("--base", help="family file used as the base of ar-lower")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    e = sub.add_parser("eval", help="evaluate a closed-form expression")
    e.add_argument("name")
    _add_params(e)
    e.set_defaults(func=cmd_eval)

    k = sub.add_parser("check", help="evaluate a predicate on family or coloring files")
    k.add_argument("property")
    k.add_argument("files", nargs="+")
    _add_params(k)
    k.set_defaults(func=cmd_check)

    for name, func, helptext in (("search", cmd_search, "run an oracle"), ("table", cmd_table, "oracle-versus-formula sweep")):
        t = sub.add_parser(name, help=helptext)
        t.add_argument("name")
        _add_params(t)
        t.add_argument("--mode")
        t.add_argument("--threads", type=int, default=1)
        t.add_argument("--max-witnesses", type=int, default=10)
        if name == "table":
            t.add_argument("--max-n", type=int)
            t.add_argument("--max-s", type=int)
            t.add_argument("--format", choices=("csv", "json"), default="csv")
        t.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"xfam: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except XfamError as exc:
        print(f"xfam: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"xfam: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
