"""Extended naturals, cost functions and the word comparison they induce.

Costs live in N u {bot}. ``BOT`` (``None``) is the undefined value: it is
absorbing for addition and subtraction, and ``x - y`` is ``BOT`` whenever
``y > x``. The empty symbol is written ``EPS`` (the empty string) inside cost
tables and sequences.
"""

from __future__ import annotations

import functools
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import AlphabetError, CostFileError

EPS = ""
BOT = None

ExtNat = Optional[int]


def ext_add(x: ExtNat, y: ExtNat) -> ExtNat:
    if x is BOT or y is BOT:
        return BOT
    return x + y


def ext_sub(x: ExtNat, y: ExtNat) -> ExtNat:
    if x is BOT or y is BOT or y > x:
        return BOT
    return x - y


def ext_min(values: Iterable[ExtNat]) -> ExtNat:
    """Minimum of the defined values; ``BOT`` if there are none."""
    defined = [v for v in values if v is not BOT]
    return min(defined) if defined else BOT


def within(value: ExtNat, budget: ExtNat) -> bool:
    """Budget test ``value in [0, budget]``; false as soon as either is ``BOT``."""
    return value is not BOT and budget is not BOT and value <= budget


def format_ext(value: ExtNat) -> str:
    return "bot" if value is BOT else str(value)


class CostFunction:
    """A cost table over ``(alphabet u {EPS})^2``.

    Pairs missing from ``entries`` are ``BOT``; diagonal pairs are always 0.
    Symmetry is not required. Instances are immutable and hashable, so they
    can key memo tables and sit inside expressions.
    """

    __slots__ = ("name", "alphabet", "_table", "_key", "_hash")

    def __init__(self, name: str, alphabet: Iterable[str], entries: Mapping[Tuple[str, str], ExtNat]):
        alphabet = tuple(sorted(set(alphabet)))
        for symbol in alphabet:
            if len(symbol) != 1:
                raise CostFileError(f"symbols must be single characters, got {symbol!r}")
        known = set(alphabet) | {EPS}
        table = {}
        for (alpha, beta), cost in entries.items():
            if alpha not in known or beta not in known:
                raise AlphabetError(f"cost entry ({alpha!r}, {beta!r}) uses a symbol outside {alphabet}")
            if cost is BOT:
                continue
            if not isinstance(cost, int) or cost < 0:
                raise CostFileError(f"cost of ({alpha!r}, {beta!r}) must be a natural, got {cost!r}")
            if alpha == beta:
                if cost != 0:
                    raise CostFileError(f"diagonal cost ({alpha!r}, {alpha!r}) must be 0, got {cost}")
                continue
            table[alpha, beta] = cost
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "_table", table)
        key = (name, alphabet, tuple(sorted(table.items())))
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("CostFunction is immutable")

    @property
    def key(self):
        return self._key

    @property
    def entries(self) -> dict:
        return dict(self._table)

    def __eq__(self, other):
        return isinstance(other, CostFunction) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"CostFunction({self.name!r}, {''.join(self.alphabet)!r})"

    def __call__(self, alpha: str, beta: str) -> ExtNat:
        return cost_lookup(self, alpha, beta)

    def symbols(self) -> Tuple[str, ...]:
        """The alphabet followed by ``EPS``."""
        return self.alphabet + (EPS,)

    def renamed(self, name: str) -> "CostFunction":
        return CostFunction(name, self.alphabet, self._table)


def cost_lookup(c: CostFunction, alpha: str, beta: str) -> ExtNat:
    for symbol in (alpha, beta):
        if symbol != EPS and symbol not in c.alphabet:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet of cost function {c.name!r}")
    if alpha == beta:
        return 0
    return c._table.get((alpha, beta), BOT)


def cost_reverse(c: CostFunction) -> CostFunction:
    entries = {(beta, alpha): cost for (alpha, beta), cost in c.entries.items()}
    return CostFunction(f"{c.name}.rev", c.alphabet, entries)


def cost_symmetrize(c: CostFunction) -> CostFunction:
    entries = {}
    for alpha in c.symbols():
        for beta in c.symbols():
            entries[alpha, beta] = ext_min([c(alpha, beta), c(beta, alpha)])
    return CostFunction(f"{c.name}.sym", c.alphabet, entries)


def cost_common_target(c: CostFunction) -> CostFunction:
    """Cost of rewriting both symbols into a shared target ``x``."""
    entries = {}
    for alpha in c.symbols():
        for beta in c.symbols():
            entries[alpha, beta] = ext_min(ext_add(c(alpha, x), c(beta, x)) for x in c.symbols())
    return CostFunction(f"{c.name}.ct", c.alphabet, entries)


def zero_insertion_symbols(c: CostFunction) -> frozenset:
    """Symbols ``b`` with ``c(EPS, b) == 0``; they generate the free-insertion words."""
    return frozenset(b for b in c.alphabet if c(EPS, b) == 0)


def seq_compare(c: CostFunction, s: Sequence[str], t: Sequence[str]) -> ExtNat:
    """Position-wise sum of costs over two sequences of equal size."""
    if len(s) != len(t):
        raise ValueError(f"sequences differ in size: {len(s)} != {len(t)}")
    total: ExtNat = 0
    for alpha, beta in zip(s, t):
        total = ext_add(total, c(alpha, beta))
        if total is BOT:
            return BOT
    return total


@functools.lru_cache(maxsize=1 << 18)
def word_compare(c: CostFunction, u: str, v: str) -> ExtNat:
    """Cheapest alignment cost of ``u`` against ``v``, or ``BOT`` if none is defined.

    Alignment DP: each step pairs a symbol of ``u`` with a symbol of ``v``,
    a symbol of ``u`` with ``EPS``, or ``EPS`` with a symbol of ``v``.
    """
    for symbol in u + v:
        if symbol not in c.alphabet:
            raise AlphabetError(f"symbol {symbol!r} not in alphabet of cost function {c.name!r}")
    prev = [BOT] * (len(v) + 1)
    prev[0] = 0
    for j, b in enumerate(v, 1):
        prev[j] = ext_add(prev[j - 1], c(EPS, b))
    for a in u:
        row = [ext_add(prev[0], c(a, EPS))]
        for j, b in enumerate(v, 1):
            row.append(ext_min([
                ext_add(prev[j - 1], c(a, b)),
                ext_add(prev[j], c(a, EPS)),
                ext_add(row[j - 1], c(EPS, b)),
            ]))
        prev = row
    return prev[-1]


# Built-in cost functions.

def hamming(alphabet: Iterable[str]) -> CostFunction:
    alphabet = sorted(set(alphabet))
    entries = {(a, b): 1 for a in alphabet for b in alphabet if a != b}
    return CostFunction("H", alphabet, entries)


def levenshtein(alphabet: Iterable[str]) -> CostFunction:
    alphabet = sorted(set(alphabet))
    symbols = alphabet + [EPS]
    entries = {(a, b): 1 for a in symbols for b in symbols if a != b}
    return CostFunction("L", alphabet, entries)


def subword(alphabet: Iterable[str], name: str = "D") -> CostFunction:
    """``word_compare(D, w, w2)`` is ``|w2| - |w|`` when ``w`` is a subword of ``w2``."""
    alphabet = sorted(set(alphabet))
    return CostFunction(name, alphabet, {(EPS, b): 1 for b in alphabet})


def uniform(alphabet: Iterable[str], cost: int, name: str) -> CostFunction:
    """Every distinct pair over ``alphabet u {EPS}`` costs ``cost``."""
    alphabet = sorted(set(alphabet))
    symbols = alphabet + [EPS]
    return CostFunction(name, alphabet, {(a, b): cost for a in symbols for b in symbols if a != b})


def is_hamming(c: CostFunction) -> bool:
    return c == hamming(c.alphabet)


def is_levenshtein(c: CostFunction) -> bool:
    return c == levenshtein(c.alphabet)


# Cost-function files:
#   alphabet: a b c
#   a c 4
#   eps b 1

def parse_cost_text(text: str, name: str) -> CostFunction:
    alphabet = None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alphabet is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "alphabet":
                raise CostFileError(f"line {lineno}: expected 'alphabet: ...' declaration")
            alphabet = rest.split()
            if not alphabet:
                raise CostFileError(f"line {lineno}: empty alphabet")
            bad = [s for s in alphabet if len(s) != 1]
            if bad:
                raise CostFileError(f"line {lineno}: symbols must be single characters: {bad}")
            continue
        fields = line.split()
        if len(fields) != 3:
            raise CostFileError(f"line {lineno}: expected '<alpha> <beta> <cost>'")
        alpha, beta, cost = fields
        alpha = EPS if alpha == "eps" else alpha
        beta = EPS if beta == "eps" else beta
        for symbol in (alpha, beta):
            if symbol != EPS and symbol not in alphabet:
                raise CostFileError(f"line {lineno}: symbol {symbol!r} not in alphabet")
        if not cost.isdigit():
            raise CostFileError(f"line {lineno}: cost must be a decimal natural, got {cost!r}")
        if (alpha, beta) in entries:
            raise CostFileError(f"line {lineno}: duplicate entry for ({fields[0]}, {fields[1]})")
        entries[alpha, beta] = int(cost)
    if alphabet is None:
        raise CostFileError("missing 'alphabet:' declaration")
    try:
        return CostFunction(name, alphabet, entries)
    except (AlphabetError, CostFileError) as exc:
        raise CostFileError(str(exc)) from exc


def load_cost_file(path, name: str) -> CostFunction:
    return parse_cost_text(Path(path).read_text(encoding="utf-8"), name)


def format_cost_text(c: CostFunction) -> str:
    lines = ["alphabet: " + " ".join(c.alphabet)]
    for (alpha, beta), cost in sorted(c.entries.items()):
        lines.append(f"{alpha or 'eps'} {beta or 'eps'} {cost}")
    return "\n".join(lines) + "\n"
