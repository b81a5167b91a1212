"""Cross-validate every engine against the oracle on a random population.

    python scripts/cross_validate.py --size 2000 --maxlen 5 --seed 3
"""

import argparse
import collections
import dataclasses
import time

from approxre.automata import build_dfa, build_nfa, run
from approxre.comparison import CostFunction, cost_symmetrize, hamming, levenshtein
from approxre.derivation import DerivationSession
from approxre.expr import all_words, to_str
from approxre.generate import PopulationConfig, population
from approxre.oracle import oracle_member


def default_costs(alphabet):
    asym = CostFunction("C", "abc", {("a", "c"): 4, ("c", "a"): 3, ("a", "b"): 1, ("c", "b"): 1})
    costs = [hamming(alphabet), levenshtein(alphabet)]
    if set(alphabet) <= set("abc"):
        costs.append(cost_symmetrize(asym))
    return costs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alphabet", default="ab")
    parser.add_argument("--size", type=int, default=500)
    parser.add_argument("--depth", type=int, default=3)
    parser.add_argument("--budget", type=int, default=2)
    parser.add_argument("--maxlen", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    config = PopulationConfig(alphabet=args.alphabet, costs=default_costs(args.alphabet),
                              max_depth=args.depth, max_budget=args.budget,
                              size=args.size, seed=args.seed)
    print(dataclasses.asdict(dataclasses.replace(config, costs=[c.name for c in config.costs])))
    t0 = time.perf_counter()
    pop = population(config)
    words = list(all_words(args.alphabet, args.maxlen))
    sizes = collections.Counter()
    accepted = 0
    bad = 0
    for e in pop:
        s = DerivationSession(args.alphabet)
        dfa, nfa = build_dfa(e, s), build_nfa(e, s)
        sizes["dfa"] += dfa.num_states
        sizes["nfa"] += nfa.num_states
        for w in words:
            verdicts = {
                "brz": s.match_brz(e, w),
                "ant": s.match_ant(e, w),
                "dfa": run(dfa, w),
                "nfa": run(nfa, w),
                "oracle": oracle_member(e, w, args.alphabet),
            }
            accepted += verdicts["oracle"]
            if len(set(verdicts.values())) > 1:
                bad += 1
                print(f"disagreement: {to_str(e)} on {w or 'eps'}: {verdicts}")
    elapsed = time.perf_counter() - t0
    checks = len(pop) * len(words)
    print(f"{len(pop)} expressions x {len(words)} words = {checks} checks in {elapsed:.2f}s")
    print(f"accepted fraction {accepted / checks:.3f}")
    print(f"mean states: dfa {sizes['dfa'] / len(pop):.2f}, nfa {sizes['nfa'] / len(pop):.2f}")
    print(f"disagreements: {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
