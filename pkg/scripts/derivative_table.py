"""Print the derivative tables of H{1}(b*(a+b)c*) and write both automata as DOT.

    python scripts/derivative_table.py --out out/
"""

import argparse
from pathlib import Path

from approxre import CostRegistry, DerivationSession, build_dfa, build_nfa, parse_are, to_dot, to_str
from approxre.expr import set_str


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--expr", default="H{1}(b*(a+b)c*)")
    parser.add_argument("--alphabet", default="abc")
    parser.add_argument("--out", type=Path, help="directory for dfa.dot and nfa.dot")
    args = parser.parse_args()

    session = DerivationSession(args.alphabet)
    e = parse_are(args.expr, CostRegistry(args.alphabet))
    dfa, nfa = build_dfa(e, session), build_nfa(e, session)

    print(f"dissimilar derivatives ({dfa.num_states} states)")
    for i, term in enumerate(dfa.terms):
        mark = "*" if i in dfa.finals else " "
        for a in session.alphabet:
            print(f" {mark} E{i} --{a}--> {to_str(session.brz_derive_symbol(term, a))}")
    print(f"\npartial derivatives ({nfa.num_states} derivated terms)")
    for i, term in enumerate(nfa.terms):
        mark = "*" if i in nfa.finals else " "
        for a in session.alphabet:
            print(f" {mark} {to_str(term)} --{a}--> {set_str(session.ant_derive_symbol(term, a))}")

    if args.out:
        args.out.mkdir(parents=True, exist_ok=True)
        (args.out / "dfa.dot").write_text(to_dot(dfa, "DFA"))
        (args.out / "nfa.dot").write_text(to_dot(nfa, "NFA"))
        print(f"\nwrote {args.out / 'dfa.dot'} and {args.out / 'nfa.dot'}")


if __name__ == "__main__":
    main()
