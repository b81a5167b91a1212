"""Brute-force semantics used as ground truth by the tests and ``check``.

Nothing here touches derivatives. Word comparison is done either by
enumerating split-up pairs (:func:`naive_word_compare`) or by the alignment
DP, and similarity operators are evaluated straight from their definition:
``w`` is in ``F_k(L)`` iff some ``v`` in ``L`` has ``F(w, v) <= k``.

The search for ``v`` is bounded by ``|v| <= |w| + k``, which is only sound
when every insertion ``c(eps, b)`` costs at least 1 (or is undefined).
"""

from __future__ import annotations

import functools
import itertools
from math import comb
from typing import FrozenSet, Iterable, List, Set, Tuple

from .comparison import BOT, EPS, CostFunction, ExtNat, ext_min, seq_compare, within, word_compare
from .errors import ResourceError, UnsupportedError
from .expr import (
    EMPTY,
    EPSILON,
    Approx,
    Are,
    Concat,
    Star,
    Sum,
    Symbol,
    all_words,
    concat_words,
    star_words,
    subterms,
    word_order,
)

NAIVE_LIMIT = 8


def split_ups(w: str, n: int) -> Set[Tuple[str, ...]]:
    """All size-``n`` sequences over symbols and ``EPS`` that spell ``w``."""
    if n < 1:
        raise ValueError("split-up size must be at least 1")
    result = set()
    for slots in itertools.combinations(range(n), len(w)):
        seq = [EPS] * n
        for slot, symbol in zip(slots, w):
            seq[slot] = symbol
        result.add(tuple(seq))
    return result


def split_up_count(w: str, n: int) -> int:
    return comb(n, n - len(w)) if n >= len(w) else 0


def naive_word_compare(c: CostFunction, u: str, v: str) -> ExtNat:
    """Word comparison by enumerating every split-up pair of equal size."""
    if len(u) + len(v) > NAIVE_LIMIT:
        raise ResourceError(f"naive comparison limited to |u|+|v| <= {NAIVE_LIMIT}")
    if not u and not v:
        return 0
    candidates: List[ExtNat] = []
    for n in range(1, len(u) + len(v) + 1):
        for s in split_ups(u, n):
            for t in split_ups(v, n):
                candidates.append(seq_compare(c, s, t))
    return ext_min(candidates)


def check_bounded_search(e: Are):
    """Raise unless every similarity operator has only costly insertions."""
    for node in subterms(e):
        if isinstance(node, Approx):
            free = [b for b in node.cost.alphabet if node.cost(EPS, b) == 0]
            if free:
                raise UnsupportedError(
                    f"cost function {node.cost.name!r} has zero-cost insertions of "
                    f"{''.join(free)}; the oracle cannot bound its search"
                )


def oracle_member(e: Are, w: str, alphabet: Iterable[str]) -> bool:
    check_bounded_search(e)
    return w in language(e, len(w), tuple(sorted(set(alphabet))))


def enumerate_members(e: Are, maxlen: int, alphabet: Iterable[str]) -> List[str]:
    """Members of ``L(e)`` up to ``maxlen``, sorted by length then lexicographically."""
    check_bounded_search(e)
    return sorted(language(e, maxlen, tuple(sorted(set(alphabet)))), key=word_order)


@functools.lru_cache(maxsize=1 << 14)
def language(e: Are, n: int, alphabet: Tuple[str, ...]) -> FrozenSet[str]:
    """Words of ``L(e)`` of length at most ``n``, over ``alphabet``."""
    if e == EMPTY:
        return frozenset()
    if e == EPSILON:
        return frozenset([""])
    if isinstance(e, Symbol):
        return frozenset([e.char]) if n >= 1 else frozenset()
    if isinstance(e, Sum):
        return frozenset().union(*(language(t, n, alphabet) for t in e.terms))
    if isinstance(e, Concat):
        return concat_words(language(e.left, n, alphabet), language(e.right, n, alphabet), n)
    if isinstance(e, Star):
        return star_words(language(e.inner, n, alphabet), n)
    if isinstance(e, Approx):
        return _approx_language(e, n, alphabet)
    raise TypeError(f"not an expression: {e!r}")


def _approx_language(e: Approx, n: int, alphabet) -> FrozenSet[str]:
    if e.budget is BOT:
        return frozenset()
    k = e.budget
    witnesses = sorted(language(e.inner, n + k, alphabet), key=len)
    if not witnesses:
        return frozenset()
    result = set()
    for w in all_words(alphabet, n):
        for v in witnesses:
            if len(v) > len(w) + k:
                break
            if within(word_compare(e.cost, w, v), k):
                result.add(w)
                break
    return frozenset(result)
