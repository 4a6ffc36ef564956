"""Command line front end: ``psmonoid <command> ...``.

Exit status is 0 on success, 1 when the input is rejected (bad word, symbol
outside the rank, failed precondition) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import automatic, bench
from .leftinsert import from_word_left
from .monoid import (
    IdentityTerm,
    MonoidSpec,
    check_identity,
    equiv,
    growth,
    search_identities,
)
from .presentation import enumerate_rules_lps, enumerate_rules_rps, normal_form, rules_text
from .subsequences import minimal_subsequences
from .tableau import Tableau, Variant, from_word_right
from .words import WordError, check_rank, format_word, parse_word


def _use_color(stream) -> bool:
    if "NO_COLOR" in os.environ:
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _variant_arg(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--variant", choices=["left", "right"], required=required, help="lPS (left) or rPS (right)")
    p.add_argument("--rank", type=int, default=None, help="alphabet size n; omit for unbounded rank")


def _monoid_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--monoid", required=True, help="lps or rps, optionally with the rank appended (rps2)")
    p.add_argument("--rank", type=int, default=None)


def _monoid(args) -> MonoidSpec:
    m = MonoidSpec.parse(args.monoid)
    if args.rank is not None:
        m = MonoidSpec(m.variant, args.rank)
    return m


def _sub_text(sub: dict) -> str:
    return ", ".join(f"{k}={format_word(v)}" for k, v in sub.items())


def cmd_tableau(args) -> int:
    word = parse_word(args.word)
    check_rank(word, args.rank)
    if args.algorithm == "left":
        t = from_word_left(word, args.variant)
    elif args.algorithm == "subseq":
        t = Tableau.from_columns(args.variant, minimal_subsequences(word, args.variant))
    else:
        t = from_word_right(word, args.variant)
    if args.format == "json":
        data = t.to_json()
        data["shape"] = list(t.shape())
        data["config"] = t.config_text()
        print(json.dumps(data))
        return 0
    print(t.render(color=_use_color(sys.stdout)))
    print(f"shape:  {' '.join(map(str, t.shape())) or '()'}")
    print(f"config: {t.config_text()}")
    return 0


def cmd_equiv(args) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    m = MonoidSpec(Variant.parse(args.variant), args.rank)
    print("equivalent" if equiv(u, v, m) else "not equivalent")
    return 0


def cmd_nf(args) -> int:
    word = parse_word(args.word)
    check_rank(word, args.rank)
    nf, trace = normal_form(word, args.variant, args.rank)
    if args.trace:
        for line in trace.lines():
            print(line)
    print(format_word(nf))
    return 0


def cmd_rules(args) -> int:
    if args.variant == "left":
        rules = enumerate_rules_lps(args.rank)
    else:
        rules = enumerate_rules_rps(args.rank, args.max_length)
    print(rules_text(rules))
    return 0


def cmd_growth(args) -> int:
    table = growth(_monoid(args), args.max_len)
    out = {"table": table.to_table, "json": table.to_json, "csv": table.to_csv}[args.format]()
    print(out)
    return 0


def cmd_identity_check(args) -> int:
    identity = IdentityTerm(args.lhs, args.rhs)
    m = _monoid(args)
    sub = check_identity(identity, m, args.max_sub_len)
    if args.format == "json":
        print(json.dumps({
            "identity": str(identity),
            "monoid": m.name,
            "holds": sub is None,
            "counterexample": None if sub is None else {k: list(v) for k, v in sub.items()},
        }))
    elif sub is None:
        print(f"{identity}: no counterexample with substitutions up to length {args.max_sub_len}")
    else:
        print(f"{identity}: fails at {_sub_text(sub)}")
    return 0


def cmd_identity_search(args) -> int:
    m = _monoid(args)
    results = search_identities(m, args.max_id_len, args.max_sub_len, args.variables)
    survivors = [r for r in results if r.counterexample is None]
    if args.format == "json":
        print(json.dumps({
            "monoid": m.name,
            "candidates": len(results),
            "surviving": [str(r.identity) for r in survivors],
        }))
        return 0
    for r in results:
        if r.counterexample is None:
            print(f"{r.identity}: survives")
        elif args.verbose:
            print(f"{r.identity}: fails at {_sub_text(r.counterexample)}")
    print(f"{len(results)} candidates, {len(survivors)} without counterexample")
    return 0


def _generator(text: str) -> int | None:
    return None if text in ("e", "eps", "") else int(text)


def _build_object(args):
    kind, _, arg = args.object.partition(":")
    m = _monoid(args)
    n = m.require_rank()
    if kind == "J":
        if m.variant is not Variant.RIGHT or n != 2:
            raise ValueError("J is defined for rps2 only")
        return automatic.build_rep_language_j()
    if kind in ("J-multiplier", "J-left-multiplier"):
        if m.variant is not Variant.RIGHT or n != 2:
            raise ValueError("J multipliers are defined for rps2 only")
        side = "left" if kind.startswith("J-left") else "right"
        return automatic.build_biautomatic_rps2().multiplier(side, _generator(arg), args.coding)
    if kind == "rep":
        if m.variant is Variant.RIGHT:
            return automatic.build_rep_language_rps(n)
        return automatic.build_rep_language_lps(n)
    if kind in ("multiplier", "left-multiplier"):
        side = "left" if kind.startswith("left") else "right"
        a = _generator(arg)
        if m.variant is Variant.RIGHT:
            if side == "left":
                raise ValueError("left multipliers over L are not regular for rps with n >= 2")
            return automatic.build_multiplier_rps(n, a, args.coding)
        return automatic.build_multiplier_lps(n, a, side, args.coding)
    raise ValueError(f"unknown object {args.object!r}")


def cmd_automaton(args) -> int:
    nfa = _build_object(args)
    if args.format == "json":
        print(nfa.to_json())
    else:
        print(nfa.to_dot(args.object))
    return 0


def cmd_bench(args) -> int:
    lengths = [int(x) for x in args.lengths.split(",")]
    rows = []
    for alg in args.algorithm:
        rows += bench.run_bench(alg, lengths, args.rank, args.seed, args.variant, args.adversarial)
    sys.stdout.write(bench.rows_to_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="psmonoid", description="Patience sorting monoids: tableaux, rewriting, growth, identities, automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tableau", help="insertion tableau of a word")
    _variant_arg(p)
    p.add_argument("--word", required=True, help='digits ("2542"), comma separated, or "e" for empty')
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.add_argument("--algorithm", choices=["right", "left", "subseq"], default="right", help="construction path; all three agree")
    p.set_defaults(func=cmd_tableau)

    p = sub.add_parser("equiv", help="decide whether two words are congruent")
    _variant_arg(p)
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("nf", help="rewrite a word to normal form")
    _variant_arg(p)
    p.add_argument("--word", required=True)
    p.add_argument("--trace", action="store_true", help="print each rewriting step")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("rules", help="list rewriting rules")
    p.add_argument("--variant", choices=["left", "right"], required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-length", type=int, default=4, help="rPS only: longest rule side")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("growth", help="growth function table")
    _monoid_arg(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("identity", help="check or search for identities")
    isub = p.add_subparsers(dest="identity_command", required=True)
    c = isub.add_parser("check")
    _monoid_arg(c)
    c.add_argument("--lhs", required=True)
    c.add_argument("--rhs", required=True)
    c.add_argument("--max-sub-len", type=int, default=2)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.set_defaults(func=cmd_identity_check)
    s = isub.add_parser("search")
    _monoid_arg(s)
    s.add_argument("--max-id-len", type=int, required=True)
    s.add_argument("--max-sub-len", type=int, default=2)
    s.add_argument("--variables", default="xy")
    s.add_argument("--verbose", action="store_true", help="also list refuted candidates")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_identity_search)

    p = sub.add_parser("automaton", help="export representative languages and multiplier automata")
    _monoid_arg(p)
    p.add_argument("--object", default="rep", help="rep, multiplier:<a>, left-multiplier:<a>, J, J-multiplier:<a>, J-left-multiplier:<a>; <a> may be e")
    p.add_argument("--coding", choices=["dr", "dl"], default="dr")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_automaton)

    p = sub.add_parser("bench", help="comparison counts and timings as CSV")
    p.add_argument("--algorithm", choices=bench.ALGORITHMS, action="append", required=True)
    p.add_argument("--lengths", default="128,256,512,1024")
    p.add_argument("--rank", type=int, default=None, help="symbols drawn from A_rank; default A_length")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--variant", choices=["left", "right"], default="left")
    p.add_argument("--adversarial", action="store_true", help="use increasing words instead of random ones")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordError, ValueError) as exc:
        print(f"psmonoid: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
