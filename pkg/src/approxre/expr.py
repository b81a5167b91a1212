"""Approximate regular expressions: syntax tree, canonical forms, printing.

Node classes are plain immutable values and accept any children, so raw
(non-canonical) trees can be built directly. The lower-case constructors
``union``, ``concat``, ``star`` and ``approx`` build canonical forms:

* sums are flattened, sorted by :func:`compare_are` and deduplicated;
* ``E+nil``, ``E.nil``, ``nil.E``, ``E.eps``, ``eps.E`` are reduced;
* ``F_bot(E)`` and ``F_k(nil)`` collapse to ``nil``;
* concatenation is kept binary and right-nested.

``nil*`` and ``eps*`` are left alone.
"""

from __future__ import annotations

import functools
import itertools
from typing import FrozenSet, Iterable, Tuple

from .comparison import BOT, CostFunction, ExtNat, format_ext
from .errors import UnsupportedError

# Rank of each node kind in the total order.
_EMPTY, _EPSILON, _SYMBOL, _STAR, _CONCAT, _SUM, _APPROX = range(7)


class Are:
    """Base class of expression nodes. Equality and hashing go through ``key``."""

    __slots__ = ("key", "_hash")

    def _init_key(self, key):
        object.__setattr__(self, "key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        return isinstance(other, Are) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return to_str(self)

    def __repr__(self):
        return f"<{type(self).__name__} {to_str(self)}>"


class _Empty(Are):
    __slots__ = ()

    def __init__(self):
        self._init_key((_EMPTY,))


class _Epsilon(Are):
    __slots__ = ()

    def __init__(self):
        self._init_key((_EPSILON,))


EMPTY = _Empty()
EPSILON = _Epsilon()


class Symbol(Are):
    __slots__ = ("char",)

    def __init__(self, char: str):
        if len(char) != 1:
            raise ValueError(f"a symbol is a single character, got {char!r}")
        object.__setattr__(self, "char", char)
        self._init_key((_SYMBOL, char))


class Star(Are):
    __slots__ = ("inner",)

    def __init__(self, inner: Are):
        object.__setattr__(self, "inner", inner)
        self._init_key((_STAR, inner.key))


class Concat(Are):
    __slots__ = ("left", "right")

    def __init__(self, left: Are, right: Are):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        self._init_key((_CONCAT, left.key, right.key))


class Sum(Are):
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Are]):
        terms = tuple(terms)
        if len(terms) < 2:
            raise ValueError("a Sum needs at least two terms")
        object.__setattr__(self, "terms", terms)
        self._init_key((_SUM, tuple(t.key for t in terms)))


class Approx(Are):
    """Similarity operator ``cost_budget(inner)``."""

    __slots__ = ("cost", "budget", "inner")

    def __init__(self, cost: CostFunction, budget: ExtNat, inner: Are):
        object.__setattr__(self, "cost", cost)
        object.__setattr__(self, "budget", budget)
        object.__setattr__(self, "inner", inner)
        # bot sorts before every natural budget
        budget_key = -1 if budget is BOT else budget
        self._init_key((_APPROX, cost.name, budget_key, inner.key, cost.key))


AreSet = FrozenSet[Are]


# Canonical constructors.

def sym(char: str) -> Symbol:
    return Symbol(char)


def union(*terms: Are) -> Are:
    flat = set()
    for term in terms:
        if isinstance(term, Sum):
            flat.update(term.terms)
        elif term is not EMPTY and term != EMPTY:
            flat.add(term)
    if not flat:
        return EMPTY
    if len(flat) == 1:
        return flat.pop()
    return Sum(sorted(flat))


def concat(*factors: Are) -> Are:
    """Right-nested product of the factors, with nil and eps reductions."""
    result = EPSILON
    for factor in reversed(factors):
        result = _concat2(factor, result)
    return result


def _concat2(left: Are, right: Are) -> Are:
    if left == EMPTY or right == EMPTY:
        return EMPTY
    if left == EPSILON:
        return right
    if right == EPSILON:
        return left
    if isinstance(left, Concat):
        return _concat2(left.left, _concat2(left.right, right))
    return Concat(left, right)


def star(inner: Are) -> Star:
    return Star(inner)


def approx(cost: CostFunction, budget: ExtNat, inner: Are) -> Are:
    if budget is BOT or inner == EMPTY:
        return EMPTY
    if budget < 0:
        raise ValueError(f"budget must be a natural or bot, got {budget}")
    return Approx(cost, budget, inner)


def approx_distributed(cost: CostFunction, budget: ExtNat, inner: Are) -> Are:
    """Like :func:`approx`, but pushed through a top-level sum.

    ``F_k(A + B)`` and ``F_k(A) + F_k(B)`` denote the same language; the
    distributed form is what dissimilar derivatives are printed in.
    """
    if isinstance(inner, Sum):
        return union(*(approx(cost, budget, t) for t in inner.terms))
    return approx(cost, budget, inner)


def canonicalize(e: Are) -> Are:
    return _canonicalize(e)


@functools.lru_cache(maxsize=1 << 16)
def _canonicalize(e: Are) -> Are:
    if isinstance(e, Sum):
        return union(*(_canonicalize(t) for t in e.terms))
    if isinstance(e, Concat):
        return concat(_canonicalize(e.left), _canonicalize(e.right))
    if isinstance(e, Star):
        return star(_canonicalize(e.inner))
    if isinstance(e, Approx):
        return approx(e.cost, e.budget, _canonicalize(e.inner))
    return e


def compare_are(e: Are, f: Are) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return (e.key > f.key) - (e.key < f.key)


def is_canonical(e: Are) -> bool:
    return canonicalize(e) == e


def has_approx(e: Are) -> bool:
    return any(isinstance(n, Approx) for n in subterms(e))


def subterms(e: Are):
    """Pre-order walk over every node of ``e``."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Sum):
            stack.extend(reversed(node.terms))
        elif isinstance(node, Concat):
            stack.extend((node.right, node.left))
        elif isinstance(node, (Star, Approx)):
            stack.append(node.inner)


def costs_of(e: Are) -> set:
    return {n.cost for n in subterms(e) if isinstance(n, Approx)}


def symbols_of(e: Are) -> set:
    return {n.char for n in subterms(e) if isinstance(n, Symbol)}


def depth(e: Are) -> int:
    if isinstance(e, Sum):
        return 1 + max(depth(t) for t in e.terms)
    if isinstance(e, Concat):
        return 1 + max(depth(e.left), depth(e.right))
    if isinstance(e, (Star, Approx)):
        return 1 + depth(e.inner)
    return 0


# Regular semantics for approx-free expressions.

def base_nullable(e: Are) -> bool:
    if e == EPSILON or isinstance(e, Star):
        return True
    if e == EMPTY or isinstance(e, Symbol):
        return False
    if isinstance(e, Sum):
        return any(base_nullable(t) for t in e.terms)
    if isinstance(e, Concat):
        return base_nullable(e.left) and base_nullable(e.right)
    raise UnsupportedError("base_nullable does not handle similarity operators")


def enumerate_plain(e: Are, maxlen: int) -> FrozenSet[str]:
    """Every word of ``L(e)`` of length at most ``maxlen``."""
    if has_approx(e):
        raise UnsupportedError("enumerate_plain does not handle similarity operators")
    return _plain_words(e, maxlen)


@functools.lru_cache(maxsize=1 << 14)
def _plain_words(e: Are, n: int) -> FrozenSet[str]:
    if e == EMPTY:
        return frozenset()
    if e == EPSILON:
        return frozenset([""])
    if isinstance(e, Symbol):
        return frozenset([e.char]) if n >= 1 else frozenset()
    if isinstance(e, Sum):
        return frozenset().union(*(_plain_words(t, n) for t in e.terms))
    if isinstance(e, Concat):
        return concat_words(_plain_words(e.left, n), _plain_words(e.right, n), n)
    if isinstance(e, Star):
        return star_words(_plain_words(e.inner, n), n)
    raise UnsupportedError(f"unexpected node {e!r}")


def concat_words(left, right, n: int) -> FrozenSet[str]:
    return frozenset(x + y for x in left for y in right if len(x) + len(y) <= n)


def star_words(base, n: int) -> FrozenSet[str]:
    pieces = [w for w in base if w]
    result = {""}
    frontier = {""}
    while frontier:
        frontier = {x + y for x in frontier for y in pieces if len(x) + len(y) <= n} - result
        result |= frontier
    return frozenset(result)


def all_words(alphabet: Iterable[str], maxlen: int):
    """Words over ``alphabet`` up to ``maxlen``, by length then lexicographically."""
    alphabet = sorted(alphabet)
    for n in range(maxlen + 1):
        for letters in itertools.product(alphabet, repeat=n):
            yield "".join(letters)


def word_order(w: str) -> Tuple[int, str]:
    return (len(w), w)


# Printing. The output is valid input for approxre.syntax.parse_are.

def to_str(e: Are) -> str:
    if e == EMPTY:
        return "nil"
    if e == EPSILON:
        return "eps"
    if isinstance(e, Symbol):
        return e.char
    if isinstance(e, Sum):
        return "+".join(to_str(t) for t in e.terms)
    if isinstance(e, Concat):
        return _factor_str(e.left) + _factor_str(e.right)
    if isinstance(e, Star):
        inner = to_str(e.inner)
        if isinstance(e.inner, (Sum, Concat)):
            inner = f"({inner})"
        return inner + "*"
    if isinstance(e, Approx):
        return f"{e.cost.name}{{{format_ext(e.budget)}}}({to_str(e.inner)})"
    raise TypeError(f"not an expression: {e!r}")


def _factor_str(e: Are) -> str:
    text = to_str(e)
    return f"({text})" if isinstance(e, Sum) else text


def set_str(terms: Iterable[Are]) -> str:
    return "{" + ", ".join(to_str(t) for t in sorted(terms)) + "}"
