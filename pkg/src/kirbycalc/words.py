"""Freely reduced words in a free group, with a plain-text token syntax.

A word is a sequence of signed generator symbols.  The text form is
space-separated tokens: a lowercase token names a generator, the same token
with its first letter uppercased names the inverse ("x" vs "X", "g2" vs "G2").
"""

from __future__ import annotations

from typing import Iterable, Iterator, Tuple

Letter = Tuple[str, int]


class WordSyntaxError(ValueError):
    """Malformed word text."""


class UnknownGeneratorError(ValueError):
    """A word uses a symbol outside the allowed generator set."""

    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(f"unknown generator symbol {symbol!r}")


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    stack: list[Letter] = []
    for sym, sign in letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((sym, sign))
    return tuple(stack)


class Word:
    """An immutable, freely reduced word.

    >>> Word.from_text("x y Y x")
    Word('x x')
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", free_reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_text(cls, text: str) -> "Word":
        letters = []
        for token in text.split():
            if token[0].isupper():
                sym = token[0].lower() + token[1:]
                sign = -1
            else:
                sym = token
                sign = 1
            if not (sym[0].isalpha() and sym[0].islower()):
                raise WordSyntaxError(f"bad token {token!r}: generator names start "
                                      "with a lowercase letter")
            letters.append((sym, sign))
        return cls(letters)

    def to_text(self) -> str:
        return " ".join(sym if sign > 0 else sym[0].upper() + sym[1:]
                        for sym, sign in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((sym, -sign) for sym, sign in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.to_text()!r})"

    def __bool__(self) -> bool:
        return bool(self.letters)

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(sym for sym, _ in self.letters)

    def exponent_sum(self, symbol: str) -> int:
        return sum(sign for sym, sign in self.letters if sym == symbol)

    def count(self, symbol: str) -> int:
        """Occurrences of the generator, counting both signs."""
        return sum(1 for sym, _ in self.letters if sym == symbol)


IDENTITY = Word()


def reduce(letters, generators=None) -> Word:
    """Freely reduce a raw letter sequence (or word text) to a Word.

    With ``generators`` given, symbols outside that set are rejected.
    """
    if isinstance(letters, str):
        word = Word.from_text(letters)
    elif isinstance(letters, Word):
        word = letters
    else:
        word = Word(letters)
    if generators is not None:
        allowed = set(generators)
        for sym in word.symbols:
            if sym not in allowed:
                raise UnknownGeneratorError(sym)
    return word


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w`` as conjugator * core * conjugator^-1 with the core
    cyclically reduced.  Returns (core, conjugator)."""
    letters = w.letters
    i, j = 0, len(letters) - 1
    conj = []
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        conj.append(letters[i])
        i += 1
        j -= 1
    return Word(letters[i:j + 1]), Word(conj)


def is_cyclically_reduced(w: Word) -> bool:
    if len(w) < 2:
        return True
    first, last = w.letters[0], w.letters[-1]
    return not (first[0] == last[0] and first[1] == -last[1])
