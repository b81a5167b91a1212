"""Command-line interface.

Exit status: 0 for match / ok, 1 for no-match / disagreement, 2 for errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import automata, oracle
from .comparison import format_ext, word_compare
from .derivation import DerivationSession
from .errors import AreError
from .expr import EMPTY, Are, all_words, word_order
from .syntax import CostRegistry, parse_are

ENGINES = ("brz", "ant", "dfa", "nfa", "oracle")


class Context:
    """Alphabet, cost registry and derivation session for one invocation."""

    def __init__(self, args, extra_symbols: str = ""):
        costs = [spec.partition("=") for spec in args.cost]
        for name, sep, path in costs:
            if not sep or not name or not path:
                raise AreError(f"--cost expects name=path, got {name + sep + path!r}")
        loaded = []
        for name, _, path in costs:
            # load once with a throwaway registry to learn the alphabet
            loaded.append((name, path, CostRegistry(()).load(name, path)))
        if args.alphabet is not None:
            alphabet = set(args.alphabet)
        elif loaded:
            alphabet = set().union(*(c.alphabet for _, _, c in loaded))
        elif extra_symbols:
            alphabet = set(extra_symbols)
        else:
            raise AreError("no alphabet: pass --alphabet or a --cost file")
        if not alphabet:
            raise AreError("the alphabet must not be empty")
        self.alphabet = tuple(sorted(alphabet))
        self.registry = CostRegistry(self.alphabet)
        for name, _, cost in loaded:
            self.registry.add(cost, name)
        self.session = DerivationSession(self.alphabet)

    def parse(self, text: str) -> Are:
        e = parse_are(text, self.registry)
        self.session.check_expression(e)
        return e

    def check_word(self, w: str):
        bad = sorted(set(w) - set(self.alphabet))
        if bad:
            raise AreError(f"word {w!r} uses symbols outside the alphabet: {''.join(bad)}")


def member(ctx: Context, e: Are, w: str, engine: str, cache: dict) -> bool:
    if engine == "brz":
        return ctx.session.match_brz(e, w)
    if engine == "ant":
        return ctx.session.match_ant(e, w)
    if engine in ("dfa", "nfa"):
        if engine not in cache:
            build = automata.build_dfa if engine == "dfa" else automata.build_nfa
            cache[engine] = build(e, ctx.session)
        return automata.run(cache[engine], w)
    if engine == "oracle":
        return oracle.oracle_member(e, w, ctx.alphabet)
    raise AreError(f"unknown engine {engine!r}")


def show_word(w: str) -> str:
    return w if w else "eps"


def cmd_match(args) -> int:
    ctx = Context(args)
    e = ctx.parse(args.expr)
    ctx.check_word(args.word)
    if member(ctx, e, args.word, args.engine, {}):
        print("match")
        return 0
    print("no-match")
    return 1


def cmd_dist(args) -> int:
    ctx = Context(args, extra_symbols=args.u + args.v)
    if args.cost_name not in ctx.registry:
        raise AreError(f"unknown cost function {args.cost_name!r}")
    ctx.check_word(args.u)
    ctx.check_word(args.v)
    print(format_ext(word_compare(ctx.registry[args.cost_name], args.u, args.v)))
    return 0


def cmd_automaton(args) -> int:
    ctx = Context(args)
    e = ctx.parse(args.expr)
    if args.kind == "dfa":
        m = automata.build_dfa(e, ctx.session, sink=args.complete)
    else:
        m = automata.build_nfa(e, ctx.session)
    if args.stats:
        for key, value in automata.stats(m).items():
            print(f"{key}: {value}")
    elif args.format == "table":
        sys.stdout.write(automata.to_table(m))
    else:
        sys.stdout.write(automata.to_dot(m))
    return 0


def enumerate_words(ctx: Context, e: Are, maxlen: int, engine: str) -> List[str]:
    if engine == "oracle":
        return oracle.enumerate_members(e, maxlen, ctx.alphabet)
    if engine == "brz":
        # walk derivatives, pruning dead prefixes
        found = []
        frontier = [("", e)]
        for _ in range(maxlen + 1):
            following = []
            for w, d in frontier:
                if ctx.session.nullable(d):
                    found.append(w)
                following += [(w + a, ctx.session.brz_derive_symbol(d, a)) for a in ctx.alphabet]
            frontier = [(w, d) for w, d in following if d != EMPTY]
        return sorted(found, key=word_order)
    cache = {}
    return [w for w in all_words(ctx.alphabet, maxlen) if member(ctx, e, w, engine, cache)]


def cmd_enum(args) -> int:
    ctx = Context(args)
    e = ctx.parse(args.expr)
    for w in enumerate_words(ctx, e, args.maxlen, args.engine):
        print(show_word(w))
    return 0


def cmd_check(args) -> int:
    ctx = Context(args)
    e = ctx.parse(args.expr)
    oracle.check_bounded_search(e)
    cache = {}
    count = 0
    for w in all_words(ctx.alphabet, args.maxlen):
        verdicts = {engine: member(ctx, e, w, engine, cache) for engine in ENGINES}
        count += 1
        if len(set(verdicts.values())) > 1:
            detail = " ".join(f"{k}={int(v)}" for k, v in verdicts.items())
            print(f"disagreement on {show_word(w)}: {detail}")
            return 1
    print(f"ok ({count} words, {len(ENGINES)} engines)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="symbols of the alphabet, e.g. abc")
    common.add_argument("--cost", action="append", default=[], metavar="NAME=PATH",
                        help="register a cost-function file under NAME (repeatable)")
    common.add_argument("--engine", choices=ENGINES, default="brz")
    common.add_argument("--format", choices=("dot", "table"), default="dot")
    common.add_argument("--stats", action="store_true", help="print state/transition/final counts")
    sink = common.add_mutually_exclusive_group()
    sink.add_argument("--trim", dest="complete", action="store_false",
                      help="omit the dead nil state of a DFA (default)")
    sink.add_argument("--complete", dest="complete", action="store_true",
                      help="materialise the dead nil state of a DFA")
    common.set_defaults(complete=False)

    parser = argparse.ArgumentParser(prog="approxre",
                                     description="Approximate regular expressions via derivatives.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("match", parents=[common], help="test membership of a word")
    p.add_argument("expr")
    p.add_argument("word")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("dist", parents=[common], help="word comparison value of two words")
    p.add_argument("cost_name")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_dist)

    for kind in ("dfa", "nfa"):
        p = sub.add_parser(kind, parents=[common], help=f"build the {kind.upper()} of an expression")
        p.add_argument("expr")
        p.set_defaults(func=cmd_automaton, kind=kind)

    p = sub.add_parser("enum", parents=[common], help="list members up to a length")
    p.add_argument("expr")
    p.add_argument("maxlen", type=int)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("check", parents=[common], help="cross-validate all engines")
    p.add_argument("expr")
    p.add_argument("maxlen", type=int)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AreError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
