"""Independent checks: brute-force conjugator search, exhaustive H(t) scans,
abelianization and seeded random words.

Nothing here calls into the conjugacy decision procedure; only the word
normalizer and group multiplication are shared.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple, Union

from .errors import BadParameter, PreconditionViolated
from .groups import GNormal, GroupContext, HElem, word_to_normal
from .words import Word


@dataclass(frozen=True)
class SearchBound:
    max_syllables: int = 4
    max_exponent: int = 3

    def __post_init__(self):
        if self.max_syllables < 0 or self.max_exponent < 0:
            raise BadParameter("search bounds must be non-negative")


def enumerate_words(bound: SearchBound) -> Iterator[Word]:
    """All freely reduced words within ``bound``, shortest first, no repeats."""
    exps = [e for k in range(1, bound.max_exponent + 1) for e in (k, -k)]
    yield Word()
    for length in range(1, bound.max_syllables + 1):
        for first in ("a", "b"):
            gens = [first if i % 2 == 0 else ("b" if first == "a" else "a") for i in range(length)]
            for combo in itertools.product(exps, repeat=length):
                yield Word(tuple(zip(gens, combo)))


@functools.lru_cache(maxsize=32)
def candidate_elements(ctx: GroupContext, bound: SearchBound) -> Tuple[Tuple[Word, GNormal], ...]:
    """Distinct group elements spelled by words within ``bound`` (first spelling kept)."""
    seen = {}
    for w in enumerate_words(bound):
        g = word_to_normal(ctx, w)
        if g not in seen:
            seen[g] = w
    return tuple((w, g) for g, w in seen.items())


def brute_force_conjugator(
    ctx: GroupContext, f: GNormal, g: GNormal, bound: SearchBound = SearchBound()
) -> Optional[Word]:
    """A word ``z`` within ``bound`` with ``z^-1 f z = g``, or ``None`` (inconclusive)."""
    for w, z in candidate_elements(ctx, bound):
        if (~z) * f * z == g:
            return w
    return None


def conjugates_within(ctx: GroupContext, f: GNormal, bound: SearchBound = SearchBound()) -> dict:
    """Map each conjugate ``z^-1 f z`` (``z`` within ``bound``) to a word ``z`` reaching it."""
    out = {}
    for w, z in candidate_elements(ctx, bound):
        out.setdefault((~z) * f * z, w)
    return out


def exhaustive_h_conjugator(ctx: GroupContext, f: GNormal, g: GNormal) -> Set[HElem]:
    """Every ``h`` in the finite group ``H(t)`` with ``h^-1 g h = f``."""
    if ctx.t is None:
        raise PreconditionViolated("exhaustive search needs a finite modulus")
    if f.length != g.length or f.length < 2:
        raise PreconditionViolated("need l(f) = l(g) > 1")
    found = set()
    for h in ctx.H.elements():
        z = ctx.h(*h)
        if (~z) * g * z == f:
            found.add(h)
    return found


def abelianization(w: Word) -> Tuple[int, int]:
    sa = sum(e for g, e in w.factors if g == "a")
    sb = sum(e for g, e in w.factors if g == "b")
    return sa, sb


def random_word(
    seed: Union[int, random.Random, None],
    length: Tuple[int, int] = (0, 6),
    exponent: int = 3,
    m: Optional[int] = None,
    n: Optional[int] = None,
    t: Optional[int] = None,
    bias: float = 0.2,
) -> Word:
    """A random freely reduced word with a factor count in ``length``.

    With probability ``bias`` an exponent is drawn as a multiple of ``m``
    (for ``a``) or ``n`` (for ``b``), sometimes also of ``t``, so that the
    collapse paths of the normal form get exercised.
    """
    lo, hi = length
    if lo < 0 or hi < lo or exponent < 1:
        raise BadParameter("empty length or exponent range")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    count = rng.randint(lo, hi)
    gen = rng.choice("ab")
    factors = []
    for _ in range(count):
        step = m if gen == "a" else n
        if step and rng.random() < bias:
            e = step * rng.choice([k for k in range(-exponent, exponent + 1) if k])
            if t and rng.random() < 0.5:
                e *= t
        else:
            e = rng.choice([k for k in range(-exponent, exponent + 1) if k])
        factors.append((gen, e))
        gen = "b" if gen == "a" else "a"
    return Word(tuple(factors))


def random_element(ctx: GroupContext, rng: random.Random, length=(0, 6), exponent: int = 3) -> GNormal:
    w = random_word(rng, length, exponent, m=ctx.m, n=ctx.n, t=ctx.t)
    return word_to_normal(ctx, w)


def random_h(ctx: GroupContext, rng: random.Random, bound: int = 4) -> HElem:
    return ctx.H.reduce((rng.randint(-bound, bound), rng.randint(-bound, bound)))


def random_of_length(ctx: GroupContext, rng: random.Random, r: int, exponent: int = 3, tries: int = 10000) -> GNormal:
    """Rejection-sample an element of length exactly ``r``."""
    for _ in range(tries):
        g = random_element(ctx, rng, (r, 2 * r + 1), exponent)
        if g.length == r:
            return g
    raise RuntimeError(f"no element of length {r} sampled")


def grid_words(max_syllables: int, max_exponent: int) -> List[Word]:
    return list(enumerate_words(SearchBound(max_syllables, max_exponent)))
