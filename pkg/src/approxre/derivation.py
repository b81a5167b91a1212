"""Brzozowski and Antimirov derivatives of approximate regular expressions.

For ``E = F_k(E')`` over cost ``c``, with ``X(E')`` the closure of ``E'``
under derivatives by zero-cost-insertion symbols, the derivative by ``a`` is
the union of three parts:

1. ``F_{k - c(a,b)}(d_b(F))``            for ``F`` in ``X(E')``, ``b`` in the alphabet
2. ``F_{k - c(a,eps)}(F)``               for ``F`` in ``X(E')``
3. ``d_a( F_{k - c(eps,b)}(d_b(F)) )``   for the same ranges, when ``c(eps,b) != 0``

Part 3 recurses on strictly smaller budgets, so it terminates. Terms whose
budget becomes ``bot`` vanish. The Brzozowski flavour builds one canonical
expression, the Antimirov flavour a set of them.

The ``hl_*`` methods implement the closed formulas specialised to the
Hamming and Levenshtein costs. They exist to cross-check the general ones.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Dict, FrozenSet, Iterable, Tuple

from .comparison import BOT, EPS, CostFunction, ext_sub, is_hamming, is_levenshtein
from .errors import AlphabetError, ResourceError, UnsupportedError
from .expr import (
    EMPTY,
    EPSILON,
    Approx,
    Are,
    Concat,
    Star,
    Sum,
    Symbol,
    approx,
    approx_distributed,
    concat,
    costs_of,
    union,
)

STATE_CEILING = 10_000

AreSet = FrozenSet[Are]
_NONE: AreSet = frozenset()


def _without_empty(terms: Iterable[Are]) -> AreSet:
    return frozenset(t for t in terms if t != EMPTY)


class DerivationSession:
    """Memo tables for derivatives over a fixed alphabet.

    A session is single-writer. Every key and value in the memo tables is a
    canonical expression, and entries never change once written.
    """

    def __init__(self, alphabet: Iterable[str], ceiling: int = STATE_CEILING):
        self.alphabet: Tuple[str, ...] = tuple(sorted(set(alphabet)))
        if not self.alphabet:
            raise AlphabetError("the alphabet must not be empty")
        self.ceiling = ceiling
        self.brz_memo: Dict[Tuple[Are, str], Are] = {}
        self.ant_memo: Dict[Tuple[Are, str], AreSet] = {}
        self.xclosure_memo: Dict[Tuple[str, Are, CostFunction], AreSet] = {}
        self.null_memo: Dict[Are, bool] = {}
        self.null_ant_memo: Dict[Are, bool] = {}
        self.hl_brz_memo: Dict[Tuple[Are, str], Are] = {}
        self.hl_ant_memo: Dict[Tuple[Are, str], AreSet] = {}
        self.hl_null_memo: Dict[Are, bool] = {}
        self._checked_costs = set()

    def _check_symbol(self, a: str):
        if a not in self.alphabet:
            raise AlphabetError(f"symbol {a!r} not in alphabet {''.join(self.alphabet)}")

    def _check_cost(self, c: CostFunction):
        if c in self._checked_costs:
            return
        missing = set(self.alphabet) - set(c.alphabet)
        if missing:
            raise AlphabetError(
                f"cost function {c.name!r} does not cover symbols {''.join(sorted(missing))}"
            )
        self._checked_costs.add(c)

    def check_expression(self, e: Are):
        """Raise unless every cost in ``e`` covers the session alphabet."""
        for c in costs_of(e):
            self._check_cost(c)

    # X-closures

    def x_closure_brz(self, e: Are, c: CostFunction) -> AreSet:
        return self._x_closure("brz", e, c, lambda f, b: [self.brz_derive_symbol(f, b)])

    def x_closure_ant(self, e: Are, c: CostFunction) -> AreSet:
        return self._x_closure("ant", e, c, self.ant_derive_symbol)

    def _x_closure(self, flavour, e, c, step: Callable[[Are, str], Iterable[Are]]) -> AreSet:
        key = (flavour, e, c)
        if key in self.xclosure_memo:
            return self.xclosure_memo[key]
        self._check_cost(c)
        free = sorted(b for b in self.alphabet if c(EPS, b) == 0)
        seen = {e}
        queue = deque([e])
        while queue:
            f = queue.popleft()
            for b in free:
                for g in step(f, b):
                    if g not in seen:
                        seen.add(g)
                        queue.append(g)
                        if len(seen) > self.ceiling:
                            raise ResourceError(f"X-closure exceeded {self.ceiling} expressions")
        result = _without_empty(seen)
        self.xclosure_memo[key] = result
        return result

    # Brzozowski (dissimilar) derivatives

    def brz_derive_symbol(self, e: Are, a: str) -> Are:
        self._check_symbol(a)
        key = (e, a)
        found = self.brz_memo.get(key)
        if found is None:
            found = self._brz(e, a)
            self.brz_memo[key] = found
        return found

    def _brz(self, e: Are, a: str) -> Are:
        if isinstance(e, Symbol):
            return EPSILON if e.char == a else EMPTY
        if isinstance(e, Sum):
            return union(*(self.brz_derive_symbol(t, a) for t in e.terms))
        if isinstance(e, Concat):
            head = concat(self.brz_derive_symbol(e.left, a), e.right)
            if self.nullable(e.left):
                return union(head, self.brz_derive_symbol(e.right, a))
            return head
        if isinstance(e, Star):
            return concat(self.brz_derive_symbol(e.inner, a), e)
        if isinstance(e, Approx):
            return self._brz_approx(e, a)
        return EMPTY

    def _brz_approx(self, e: Approx, a: str) -> Are:
        c, k = e.cost, e.budget
        if k is BOT:
            return EMPTY
        closure = sorted(self.x_closure_brz(e.inner, c))
        terms = []
        for f in closure:
            for b in self.alphabet:
                terms.append(approx_distributed(c, ext_sub(k, c(a, b)), self.brz_derive_symbol(f, b)))
        for f in closure:
            terms.append(approx_distributed(c, ext_sub(k, c(a, EPS)), f))
        terms.append(self.brz_derive_symbol(self._insertion_sum(e, closure), a))
        return union(*terms)

    def _insertion_sum(self, e: Approx, closure) -> Are:
        """Sum of ``F_{k - c(eps,b)}(d_b(F))`` over costly insertions ``b``."""
        c, k = e.cost, e.budget
        terms = []
        for f in closure:
            for b in self.alphabet:
                insert = c(EPS, b)
                if insert != 0:
                    terms.append(approx_distributed(c, ext_sub(k, insert), self.brz_derive_symbol(f, b)))
        return union(*terms)

    def brz_derive_word(self, e: Are, w: str) -> Are:
        for a in w:
            e = self.brz_derive_symbol(e, a)
        return e

    # Antimirov (partial) derivatives

    def ant_derive_symbol(self, e: Are, a: str) -> AreSet:
        self._check_symbol(a)
        key = (e, a)
        found = self.ant_memo.get(key)
        if found is None:
            found = _without_empty(self._ant(e, a))
            self.ant_memo[key] = found
        return found

    def _ant(self, e: Are, a: str) -> Iterable[Are]:
        if isinstance(e, Symbol):
            return [EPSILON] if e.char == a else []
        if isinstance(e, Sum):
            return _NONE.union(*(self.ant_derive_symbol(t, a) for t in e.terms))
        if isinstance(e, Concat):
            result = {concat(g, e.right) for g in self.ant_derive_symbol(e.left, a)}
            if self.nullable_ant(e.left):
                result |= self.ant_derive_symbol(e.right, a)
            return result
        if isinstance(e, Star):
            return {concat(g, e) for g in self.ant_derive_symbol(e.inner, a)}
        if isinstance(e, Approx):
            return self._ant_approx(e, a)
        return []

    def _ant_approx(self, e: Approx, a: str) -> Iterable[Are]:
        c, k = e.cost, e.budget
        if k is BOT:
            return []
        closure = sorted(self.x_closure_ant(e.inner, c))
        result = set()
        for f in closure:
            for b in self.alphabet:
                budget = ext_sub(k, c(a, b))
                result.update(approx(c, budget, g) for g in self.ant_derive_symbol(f, b))
        for f in closure:
            result.add(approx(c, ext_sub(k, c(a, EPS)), f))
        for term in self._insertion_set(e, closure):
            result |= self.ant_derive_symbol(term, a)
        return result

    def _insertion_set(self, e: Approx, closure) -> AreSet:
        c, k = e.cost, e.budget
        terms = set()
        for f in closure:
            for b in self.alphabet:
                insert = c(EPS, b)
                if insert != 0:
                    budget = ext_sub(k, insert)
                    terms.update(approx(c, budget, g) for g in self.ant_derive_symbol(f, b))
        return _without_empty(terms)

    def ant_derive_word(self, e: Are, w: str) -> AreSet:
        current = _without_empty([e])
        for a in w:
            current = _NONE.union(*(self.ant_derive_symbol(t, a) for t in current))
        return current

    # Nullability

    def nullable(self, e: Are) -> bool:
        """Whether the empty word is in ``L(e)``, via Brzozowski-flavour closures."""
        found = self.null_memo.get(e)
        if found is None:
            found = self._nullable(e)
            self.null_memo[e] = found
        return found

    def _nullable(self, e: Are) -> bool:
        if e == EPSILON or isinstance(e, Star):
            return True
        if isinstance(e, Sum):
            return any(self.nullable(t) for t in e.terms)
        if isinstance(e, Concat):
            return self.nullable(e.left) and self.nullable(e.right)
        if isinstance(e, Approx):
            if e.budget is BOT:
                return False
            closure = sorted(self.x_closure_brz(e.inner, e.cost))
            if any(self.nullable(f) for f in closure):
                return True
            return self.nullable(self._insertion_sum(e, closure))
        return False

    def nullable_ant(self, e: Are) -> bool:
        """Same answer as :meth:`nullable`, computed with partial derivatives."""
        found = self.null_ant_memo.get(e)
        if found is None:
            found = self._nullable_ant(e)
            self.null_ant_memo[e] = found
        return found

    def _nullable_ant(self, e: Are) -> bool:
        if e == EPSILON or isinstance(e, Star):
            return True
        if isinstance(e, Sum):
            return any(self.nullable_ant(t) for t in e.terms)
        if isinstance(e, Concat):
            return self.nullable_ant(e.left) and self.nullable_ant(e.right)
        if isinstance(e, Approx):
            if e.budget is BOT:
                return False
            closure = sorted(self.x_closure_ant(e.inner, e.cost))
            if any(self.nullable_ant(f) for f in closure):
                return True
            return any(self.nullable_ant(t) for t in self._insertion_set(e, closure))
        return False

    # Membership

    def match_brz(self, e: Are, w: str) -> bool:
        self.check_expression(e)
        return self.nullable(self.brz_derive_word(e, w))

    def match_ant(self, e: Are, w: str) -> bool:
        self.check_expression(e)
        return any(self.nullable_ant(t) for t in self.ant_derive_word(e, w))

    # Closed formulas for Hamming and Levenshtein

    def _hl_kind(self, c: CostFunction) -> str:
        if is_hamming(c):
            return "H"
        if is_levenshtein(c):
            return "L"
        raise UnsupportedError(f"cost function {c.name!r} is neither Hamming nor Levenshtein")

    def hl_nullable(self, e: Are) -> bool:
        found = self.hl_null_memo.get(e)
        if found is None:
            found = self._hl_nullable(e)
            self.hl_null_memo[e] = found
        return found

    def _hl_nullable(self, e: Are) -> bool:
        if e == EPSILON or isinstance(e, Star):
            return True
        if isinstance(e, Sum):
            return any(self.hl_nullable(t) for t in e.terms)
        if isinstance(e, Concat):
            return self.hl_nullable(e.left) and self.hl_nullable(e.right)
        if isinstance(e, Approx):
            kind = self._hl_kind(e.cost)
            if e.budget is BOT:
                return False
            if self.hl_nullable(e.inner):
                return True
            if kind == "H":
                return False
            lower = ext_sub(e.budget, 1)
            return any(
                self.hl_nullable(approx_distributed(e.cost, lower, self.hl_brz_derive_symbol(e.inner, b)))
                for b in self.alphabet
            )
        return False

    def hl_brz_derive_symbol(self, e: Are, a: str) -> Are:
        self._check_symbol(a)
        key = (e, a)
        found = self.hl_brz_memo.get(key)
        if found is None:
            found = self._hl_brz(e, a)
            self.hl_brz_memo[key] = found
        return found

    def _hl_brz(self, e: Are, a: str) -> Are:
        d = self.hl_brz_derive_symbol
        if isinstance(e, Symbol):
            return EPSILON if e.char == a else EMPTY
        if isinstance(e, Sum):
            return union(*(d(t, a) for t in e.terms))
        if isinstance(e, Concat):
            head = concat(d(e.left, a), e.right)
            return union(head, d(e.right, a)) if self.hl_nullable(e.left) else head
        if isinstance(e, Star):
            return concat(d(e.inner, a), e)
        if isinstance(e, Approx):
            kind = self._hl_kind(e.cost)
            c, k, inner = e.cost, e.budget, e.inner
            if k is BOT:
                return EMPTY
            lower = ext_sub(k, 1)
            terms = [approx_distributed(c, k, d(inner, a))]
            terms += [approx_distributed(c, lower, d(inner, b)) for b in self.alphabet if b != a]
            if kind == "L":
                terms.append(approx_distributed(c, lower, inner))
                shifted = union(*(approx_distributed(c, lower, d(inner, b)) for b in self.alphabet))
                terms.append(d(shifted, a))
            return union(*terms)
        return EMPTY

    def hl_ant_derive_symbol(self, e: Are, a: str) -> AreSet:
        self._check_symbol(a)
        key = (e, a)
        found = self.hl_ant_memo.get(key)
        if found is None:
            found = _without_empty(self._hl_ant(e, a))
            self.hl_ant_memo[key] = found
        return found

    def _hl_ant(self, e: Are, a: str) -> Iterable[Are]:
        d = self.hl_ant_derive_symbol
        if isinstance(e, Symbol):
            return [EPSILON] if e.char == a else []
        if isinstance(e, Sum):
            return _NONE.union(*(d(t, a) for t in e.terms))
        if isinstance(e, Concat):
            result = {concat(g, e.right) for g in d(e.left, a)}
            if self.hl_nullable(e.left):
                result |= d(e.right, a)
            return result
        if isinstance(e, Star):
            return {concat(g, e) for g in d(e.inner, a)}
        if isinstance(e, Approx):
            kind = self._hl_kind(e.cost)
            c, k, inner = e.cost, e.budget, e.inner
            if k is BOT:
                return []
            lower = ext_sub(k, 1)
            result = {approx(c, k, g) for g in d(inner, a)}
            for b in self.alphabet:
                if b != a:
                    result.update(approx(c, lower, g) for g in d(inner, b))
            if kind == "L":
                result.add(approx(c, lower, inner))
                shifted = {approx(c, lower, g) for b in self.alphabet for g in d(inner, b)}
                for term in _without_empty(shifted):
                    result |= d(term, a)
            return result
        return []
