"""Derivative automata: construction, simulation, comparison and export.

``build_dfa`` explores Brzozowski derivatives breadth-first (symbols in
alphabetical order), ``build_nfa`` explores Antimirov derivated terms the
same way. State 0 is always the input expression.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .derivation import DerivationSession
from .errors import AlphabetError, ParseError, ResourceError
from .expr import EMPTY, Are, to_str

Transition = Tuple[int, str, int]


@dataclass(frozen=True)
class Automaton:
    alphabet: Tuple[str, ...]
    labels: Tuple[str, ...]
    initial: FrozenSet[int]
    finals: FrozenSet[int]
    transitions: Tuple[Transition, ...]
    deterministic: bool
    # defining expression of each state; empty for automata read from a table
    terms: Tuple[Are, ...] = ()
    _delta: Dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        delta = defaultdict(set)
        for p, a, q in self.transitions:
            if a not in self.alphabet:
                raise AlphabetError(f"transition symbol {a!r} not in alphabet")
            delta[p, a].add(q)
        object.__setattr__(self, "_delta", {k: frozenset(v) for k, v in delta.items()})

    @property
    def kind(self) -> str:
        return "dfa" if self.deterministic else "nfa"

    @property
    def num_states(self) -> int:
        return len(self.labels)

    def successors(self, state: int, symbol: str) -> FrozenSet[int]:
        return self._delta.get((state, symbol), frozenset())

    def step(self, states: Iterable[int], symbol: str) -> FrozenSet[int]:
        return frozenset().union(*(self.successors(p, symbol) for p in states))

    def is_structurally_deterministic(self) -> bool:
        return len(self.initial) == 1 and all(len(v) <= 1 for v in self._delta.values())


def build_dfa(e: Are, session: DerivationSession, *, sink: bool = False) -> Automaton:
    """Dissimilar-derivative automaton of ``e``.

    The ``nil`` state is only materialised when ``sink`` is set (or when ``e``
    itself is ``nil``); otherwise transitions into it are left out.
    """
    session.check_expression(e)
    return _explore(e, session, lambda q, a: [session.brz_derive_symbol(q, a)],
                    session.nullable, keep_empty=sink, deterministic=True)


def build_nfa(e: Are, session: DerivationSession) -> Automaton:
    """Derivated-term automaton of ``e``."""
    session.check_expression(e)
    automaton = _explore(e, session, session.ant_derive_symbol, session.nullable_ant,
                         keep_empty=False, deterministic=False)
    if automaton.is_structurally_deterministic():
        return _replace_kind(automaton, True)
    return automaton


def _replace_kind(m: Automaton, deterministic: bool) -> Automaton:
    return Automaton(m.alphabet, m.labels, m.initial, m.finals, m.transitions,
                     deterministic, m.terms)


def _explore(e, session, step, is_final, keep_empty, deterministic) -> Automaton:
    index = {e: 0}
    terms = [e]
    transitions = []
    queue = deque([e])
    while queue:
        q = queue.popleft()
        p = index[q]
        for a in session.alphabet:
            for r in sorted(step(q, a)):
                if r == EMPTY and not keep_empty:
                    continue
                if r not in index:
                    if len(terms) >= session.ceiling:
                        raise ResourceError(f"automaton exceeded {session.ceiling} states")
                    index[r] = len(terms)
                    terms.append(r)
                    queue.append(r)
                transitions.append((p, a, index[r]))
    finals = frozenset(i for i, t in enumerate(terms) if is_final(t))
    return Automaton(
        alphabet=session.alphabet,
        labels=tuple(to_str(t) for t in terms),
        initial=frozenset([0]),
        finals=finals,
        transitions=tuple(transitions),
        deterministic=deterministic,
        terms=tuple(terms),
    )


def run(m: Automaton, w: str) -> bool:
    current = m.initial
    for a in w:
        if a not in m.alphabet:
            raise AlphabetError(f"symbol {a!r} not in alphabet {''.join(m.alphabet)}")
        current = m.step(current, a)
        if not current:
            return False
    return bool(current & m.finals)


def bounded_equiv(m1: Automaton, m2: Automaton, maxlen: int) -> bool:
    """Whether both automata agree on every word of length at most ``maxlen``."""
    if set(m1.alphabet) != set(m2.alphabet):
        raise AlphabetError("automata over different alphabets")
    start = (m1.initial, m2.initial)
    level = {start}
    seen = {start}
    for depth in range(maxlen + 1):
        for s1, s2 in level:
            if bool(s1 & m1.finals) != bool(s2 & m2.finals):
                return False
        if depth == maxlen:
            break
        following = set()
        for s1, s2 in level:
            for a in m1.alphabet:
                pair = (m1.step(s1, a), m2.step(s2, a))
                # a pair already checked has all its continuations covered
                if pair not in seen:
                    seen.add(pair)
                    following.add(pair)
        if not following:
            break
        level = following
    return True


def witness_difference(m1: Automaton, m2: Automaton, maxlen: int) -> Optional[str]:
    """Shortest word up to ``maxlen`` accepted by exactly one automaton, if any."""
    start = (m1.initial, m2.initial)
    queue = deque([(start, "")])
    seen = {start}
    while queue:
        (s1, s2), w = queue.popleft()
        if bool(s1 & m1.finals) != bool(s2 & m2.finals):
            return w
        if len(w) == maxlen:
            continue
        for a in m1.alphabet:
            pair = (m1.step(s1, a), m2.step(s2, a))
            if pair not in seen:
                seen.add(pair)
                queue.append((pair, w + a))
    return None


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def merged_edges(m: Automaton):
    """Transitions grouped by (source, target), symbols in alphabetical order."""
    edges = defaultdict(list)
    for p, a, q in m.transitions:
        edges[p, q].append(a)
    return {pq: sorted(symbols) for pq, symbols in sorted(edges.items())}


def to_dot(m: Automaton, name: str = "A") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for i in sorted(m.initial):
        lines.append(f'  __start{i} [shape=point, style=invis, label=""];')
    for i, label in enumerate(m.labels):
        shape = "doublecircle" if i in m.finals else "circle"
        lines.append(f"  q{i} [shape={shape}, label={_quote(label)}];")
    for i in sorted(m.initial):
        lines.append(f"  __start{i} -> q{i};")
    for (p, q), symbols in merged_edges(m).items():
        lines.append(f"  q{p} -> q{q} [label={_quote(','.join(symbols))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(m: Automaton) -> str:
    lines = [f"{m.kind} {m.num_states} {''.join(m.alphabet)}"]
    lines += [f"{p} {a} {q}" for p, a, q in m.transitions]
    lines.append("initial: " + " ".join(str(i) for i in sorted(m.initial)))
    lines.append("final: " + " ".join(str(i) for i in sorted(m.finals)))
    return "\n".join(lines) + "\n"


def from_table(text: str) -> Automaton:
    """Read back the output of :func:`to_table`; labels become state indices."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("empty automaton table")
    header = lines[0].split()
    if len(header) != 3 or header[0] not in ("dfa", "nfa") or not header[1].isdigit():
        raise ParseError("expected header 'dfa|nfa <nstates> <alphabet>'")
    kind, count, alphabet = header[0], int(header[1]), tuple(header[2])
    transitions, initial, finals = [], None, None

    def indices(rest):
        values = [int(x) for x in rest.split()]
        if any(not 0 <= v < count for v in values):
            raise ParseError(f"state index out of range in {rest!r}")
        return frozenset(values)

    for line in lines[1:]:
        if line.startswith("initial:"):
            initial = indices(line[len("initial:"):])
        elif line.startswith("final:"):
            finals = indices(line[len("final:"):])
        else:
            fields = line.split()
            if len(fields) != 3:
                raise ParseError(f"bad transition line {line!r}")
            p, a, q = fields
            transitions.append((int(p), a, int(q)))
    if initial is None or finals is None:
        raise ParseError("missing 'initial:' or 'final:' line")
    return Automaton(alphabet, tuple(str(i) for i in range(count)), initial, finals,
                     tuple(transitions), kind == "dfa")


def stats(m: Automaton) -> dict:
    return {
        "states": m.num_states,
        "transitions": len(m.transitions),
        "finals": len(m.finals),
        "initial": len(m.initial),
    }
