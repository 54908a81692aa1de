"""Free-group words over the generators ``a`` and ``b``.

A word is stored as a tuple of ``(generator, exponent)`` factors with
nonzero exponents and no two adjacent factors on the same generator.
The text syntax is whitespace-separated tokens ``a``, ``b``, ``a^K``,
``b^K`` with ``K`` a signed decimal integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

GENERATORS = ("a", "b")

_TOKEN = re.compile(r"([ab])(?:\^([+-]?\d+))?")


class WordSyntaxError(SyntaxError):
    """Raised when word text does not follow the token grammar."""


def _reduce(factors: Iterable[Tuple[str, int]]) -> Tuple[Tuple[str, int], ...]:
    out: list = []
    for gen, exp in factors:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + exp
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    factors: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        prev = None
        for gen, exp in self.factors:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if not isinstance(exp, int) or exp == 0:
                raise ValueError(f"bad exponent {exp!r} on {gen}")
            if gen == prev:
                raise ValueError("adjacent factors share a generator; use Word.reduced")
            prev = gen

    @classmethod
    def reduced(cls, factors: Iterable[Tuple[str, int]]) -> "Word":
        return cls(_reduce(factors))

    def __mul__(self, other: "Word") -> "Word":
        return concat_words(self, other)

    def __invert__(self) -> "Word":
        return invert_word(self)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        return render_word(self)

    def is_identity(self) -> bool:
        return not self.factors

    def swap_generators(self) -> "Word":
        """Apply the relabelling a <-> b."""
        return Word(tuple(("b" if g == "a" else "a", e) for g, e in self.factors))


IDENTITY = Word()


def parse_word(text: str) -> Word:
    factors = []
    for token in text.split():
        match = _TOKEN.fullmatch(token)
        if match is None:
            raise WordSyntaxError(f"bad token {token!r}")
        gen, exp = match.groups()
        factors.append((gen, 1 if exp is None else int(exp)))
    return Word.reduced(factors)


def render_word(w: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in w.factors)


def invert_word(w: Word) -> Word:
    return Word(tuple((g, -e) for g, e in reversed(w.factors)))


def concat_words(u: Word, v: Word) -> Word:
    return Word(_reduce(u.factors + v.factors))
