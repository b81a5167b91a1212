"""Concrete syntax for expressions and the registry of named cost functions.

Grammar (whitespace is insignificant)::

    expr   := cat ('+' cat)*
    cat    := factor+
    factor := atom '*'*
    atom   := SYMBOL | 'eps' | 'nil' | '(' expr ')' | NAME '{' NAT '}' '(' expr ')'

``SYMBOL`` is one character of the declared alphabet. The keywords ``eps``
and ``nil`` take precedence over symbols spelling them.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Optional

from .comparison import CostFunction, hamming, levenshtein, load_cost_file
from .errors import AlphabetError, CostFileError, ParseError
from .expr import EMPTY, EPSILON, Are, approx, concat, star, sym, union

RESERVED = ("H", "L")
_SPECIAL = set("()+*{}")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*(?=\s*\{)")
_NAT = re.compile(r"\d+")


class CostRegistry:
    """Named cost functions; ``H`` and ``L`` are built over the alphabet."""

    def __init__(self, alphabet: Iterable[str]):
        self.alphabet = tuple(sorted(set(alphabet)))
        self._costs: Dict[str, CostFunction] = {
            "H": hamming(self.alphabet),
            "L": levenshtein(self.alphabet),
        }

    def __contains__(self, name):
        return name in self._costs

    def __getitem__(self, name) -> CostFunction:
        return self._costs[name]

    def names(self):
        return sorted(self._costs)

    def add(self, cost: CostFunction, name: Optional[str] = None) -> CostFunction:
        name = name or cost.name
        if name in RESERVED:
            raise CostFileError(f"cost-function name {name!r} is reserved")
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.]*", name):
            raise CostFileError(f"invalid cost-function name {name!r}")
        missing = set(self.alphabet) - set(cost.alphabet)
        if missing:
            raise AlphabetError(
                f"cost function {name!r} does not cover symbols {''.join(sorted(missing))}"
            )
        if cost.name != name:
            cost = cost.renamed(name)
        self._costs[name] = cost
        return cost

    def load(self, name: str, path) -> CostFunction:
        if name in RESERVED:
            raise CostFileError(f"cost-function name {name!r} is reserved")
        return self.add(load_cost_file(path, name), name)


def parse_are(text: str, registry: CostRegistry, alphabet: Optional[Iterable[str]] = None) -> Are:
    """Parse ``text`` into a canonical expression."""
    alphabet = frozenset(registry.alphabet if alphabet is None else alphabet)
    return _Parser(text, registry, alphabet).parse()


class _Parser:
    def __init__(self, text, registry, alphabet):
        self.text = text
        self.pos = 0
        self.registry = registry
        self.alphabet = alphabet

    def parse(self) -> Are:
        e = self.expr()
        self.skip()
        if self.pos < len(self.text):
            raise ParseError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return e

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, char):
        if self.peek() != char:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {char!r}, found {found}", self.pos)
        self.pos += 1

    def expr(self) -> Are:
        terms = [self.cat()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.cat())
        return union(*terms)

    def cat(self) -> Are:
        factors = [self.factor()]
        while self.peek() and self.peek() not in "+)":
            factors.append(self.factor())
        return concat(*factors)

    def factor(self) -> Are:
        e = self.atom()
        while self.peek() == "*":
            self.pos += 1
            e = star(e)
        return e

    def atom(self) -> Are:
        char = self.peek()
        start = self.pos
        if not char:
            raise ParseError("unexpected end of input", start)
        if char == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        # longest registered name wins, so "aH{1}(b)" is a followed by H{1}(b)
        names = [n for n in self.registry.names()
                 if re.compile(re.escape(n) + r"\s*\{").match(self.text, self.pos)]
        if names:
            return self.approx(max(names, key=len))
        match = _NAME.match(self.text, self.pos)
        if match and char not in self.alphabet:
            return self.approx(match.group(0))
        for keyword, value in (("eps", EPSILON), ("nil", EMPTY)):
            if self.text.startswith(keyword, self.pos):
                self.pos += len(keyword)
                return value
        if char in _SPECIAL:
            raise ParseError(f"unexpected {char!r}", start)
        if char not in self.alphabet:
            raise AlphabetError(f"symbol {char!r} at position {start} is not in the alphabet")
        self.pos += 1
        return sym(char)

    def approx(self, name) -> Are:
        start = self.pos
        if name not in self.registry:
            raise ParseError(f"unknown cost function {name!r}", start)
        self.pos += len(name)
        self.expect("{")
        self.skip()
        match = _NAT.match(self.text, self.pos)
        if not match:
            raise ParseError("expected a natural budget", self.pos)
        self.pos = match.end()
        self.expect("}")
        self.expect("(")
        inner = self.expr()
        self.expect(")")
        return approx(self.registry[name], int(match.group(0)), inner)
