"""The groups G_mn = <a, b; [a^m, b^n] = 1> and their quotients G_mn(t).

Both are handled as a free product of ``A`` and ``B`` amalgamating
``H = <c, d>`` (``c = a^m``, ``d = b^n``), where ``A`` is itself the
amalgam of the cycle ``<a>`` with ``H`` over ``<c>`` and ``B`` is the
amalgam of ``<b>`` with ``H`` over ``<d>``.  In the quotient by
``a^(mt) = b^(nt) = 1`` the same decomposition holds with all exponents
of ``c`` and ``d`` read mod ``t`` and the cycles of order ``mt``, ``nt``.

Inside ``A`` (resp. ``B``) side 0 is the cycle and side 1 is ``H``; inside
``G`` side 0 is ``A`` and side 1 is ``B``.  Coset representatives:

* ``a^k`` with ``0 <= k < m`` for ``<c>`` in ``<a>``, ``d^l`` for ``<c>`` in ``H``;
* an element of ``A`` modulo ``H`` is represented by its ``A``-normal form
  with the trailing ``d``-atom and the ``c``-tail removed (mirror for ``B``).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .amalgam import AmalgamEngine, AmalgamNormal
from .errors import BadParameter, MixedContexts
from .words import Word

A_SIDE, B_SIDE = 0, 1
CYCLE, HSIDE = 0, 1


class HElem(NamedTuple):
    """``c^mu d^nu``."""

    mu: int
    nu: int

    def swapped(self) -> "HElem":
        return HElem(self.nu, self.mu)


class _Mod:
    """The integers, or the integers mod ``t``, written additively."""

    identity = 0

    def __init__(self, t: Optional[int]):
        self.t = t

    def reduce(self, x: int) -> int:
        return x if self.t is None else x % self.t

    def multiply(self, x, y):
        return self.reduce(x + y)

    def invert(self, x):
        return self.reduce(-x)


class HGroup:
    identity = HElem(0, 0)

    def __init__(self, t: Optional[int]):
        self.t = t

    def reduce(self, h) -> HElem:
        if self.t is None:
            return HElem(*h)
        return HElem(h[0] % self.t, h[1] % self.t)

    def multiply(self, x: HElem, y: HElem) -> HElem:
        return self.reduce((x[0] + y[0], x[1] + y[1]))

    def invert(self, x: HElem) -> HElem:
        return self.reduce((-x[0], -x[1]))

    def elements(self):
        if self.t is None:
            raise ValueError("H is infinite")
        return [HElem(i, j) for i in range(self.t) for j in range(self.t)]


class _CycleFactor:
    """``<x>`` (order ``step * t`` if ``t`` is finite) amalgamating ``<x^step>``."""

    identity = 0

    def __init__(self, step: int, t: Optional[int]):
        self.step = step
        self.amalgam = _Mod(t)
        self.order = None if t is None else step * t

    def _reduce(self, x):
        return x if self.order is None else x % self.order

    def multiply(self, x, y):
        return self._reduce(x + y)

    def invert(self, x):
        return self._reduce(-x)

    def split(self, x):
        k = x % self.step
        return (k or None), self.amalgam.reduce(x // self.step)

    def embed(self, k):
        return self._reduce(self.step * k)


class _HFactor:
    """``H`` as a factor of ``A`` (amalgam ``<c>``, axis 0) or ``B`` (``<d>``, axis 1)."""

    identity = HElem(0, 0)

    def __init__(self, axis: int, t: Optional[int]):
        self.axis = axis
        self.group = HGroup(t)
        self.multiply = self.group.multiply
        self.invert = self.group.invert

    def split(self, h: HElem):
        if self.axis == 0:
            return (HElem(0, h.nu) if h.nu else None), h.mu
        return (HElem(h.mu, 0) if h.mu else None), h.nu

    def embed(self, k) -> HElem:
        return HElem(k, 0) if self.axis == 0 else HElem(0, k)


class _EngineFactor:
    """``A`` or ``B`` (given by its own engine) as a factor of ``G`` over ``H``."""

    def __init__(self, engine: AmalgamEngine, group: HGroup):
        self.engine = engine
        self.group = group
        self.identity = engine.identity
        self.multiply = engine.multiply
        self.invert = engine.invert
        self._h = engine.factors[HSIDE]

    def split(self, x: AmalgamNormal):
        syllables = x.syllables
        h = self._h.embed(x.tail)
        if syllables and syllables[-1][0] == HSIDE:
            h = self.group.multiply(syllables[-1][1], h)
            syllables = syllables[:-1]
        if not syllables:
            return None, h
        return AmalgamNormal(syllables, self.engine.amalgam.identity), h

    def embed(self, h: HElem) -> AmalgamNormal:
        return self.engine.from_factor(HSIDE, h)


class _Engines:
    def __init__(self, m: int, n: int, t: Optional[int]):
        self.H = HGroup(t)
        self.A = AmalgamEngine(_CycleFactor(m, t), _HFactor(0, t), _Mod(t))
        self.B = AmalgamEngine(_CycleFactor(n, t), _HFactor(1, t), _Mod(t))
        self.G = AmalgamEngine(_EngineFactor(self.A, self.H), _EngineFactor(self.B, self.H), self.H)
        self.factor_engines = (self.A, self.B)


@functools.lru_cache(maxsize=None)
def _engines(m, n, t) -> _Engines:
    return _Engines(m, n, t)


@dataclass(frozen=True)
class GroupContext:
    m: int
    n: int
    t: Optional[int] = None

    def __post_init__(self):
        for name, value in (("m", self.m), ("n", self.n)):
            if not isinstance(value, int) or value < 2:
                raise BadParameter(f"{name} must be an integer >= 2, got {value!r}")
        if self.t is not None and (not isinstance(self.t, int) or self.t < 2):
            raise BadParameter(f"modulus must be an integer >= 2, got {self.t!r}")

    @property
    def engines(self) -> _Engines:
        return _engines(self.m, self.n, self.t)

    @property
    def G(self) -> AmalgamEngine:
        return self.engines.G

    @property
    def H(self) -> HGroup:
        return self.engines.H

    def factor_engine(self, side: int) -> AmalgamEngine:
        return self.engines.factor_engines[side]

    @property
    def finite(self) -> bool:
        return self.t is not None

    def with_modulus(self, t: Optional[int]) -> "GroupContext":
        return GroupContext(self.m, self.n, t)

    def mirror(self) -> "GroupContext":
        return GroupContext(self.n, self.m, self.t)

    # element constructors

    def identity(self) -> "GNormal":
        return GNormal(self, self.G.identity)

    def element(self, text_or_word) -> "GNormal":
        from .words import parse_word

        w = parse_word(text_or_word) if isinstance(text_or_word, str) else text_or_word
        return word_to_normal(self, w)

    def h(self, mu: int, nu: int) -> "GNormal":
        return GNormal(self, self.G.from_amalgam(self.H.reduce((mu, nu))))

    def from_factor(self, side: int, x) -> "GNormal":
        return GNormal(self, self.G.from_factor(side, x))

    def __str__(self):
        base = f"G_{{{self.m},{self.n}}}"
        return base if self.t is None else f"{base}({self.t})"


def build_context(m: int, n: int, modulus: Optional[int] = None) -> GroupContext:
    return GroupContext(m, n, modulus)


@dataclass(frozen=True)
class GNormal:
    """Canonical form of an element of G_mn or G_mn(t)."""

    ctx: GroupContext
    form: AmalgamNormal

    def _check(self, other: "GNormal"):
        if self.ctx != other.ctx:
            raise MixedContexts(f"{self.ctx} vs {other.ctx}")

    def __mul__(self, other: "GNormal") -> "GNormal":
        self._check(other)
        return GNormal(self.ctx, self.ctx.G.multiply(self.form, other.form))

    def __invert__(self) -> "GNormal":
        return GNormal(self.ctx, self.ctx.G.invert(self.form))

    def conjugate(self, z: "GNormal") -> "GNormal":
        """``z^-1 self z``."""
        self._check(z)
        return GNormal(self.ctx, self.ctx.G.conjugate(self.form, z.form))

    @property
    def syllables(self):
        return self.form.syllables

    @property
    def tail(self) -> HElem:
        return self.form.tail

    @property
    def length(self) -> int:
        return self.ctx.G.length(self.form)

    def is_identity(self) -> bool:
        return self.form == self.ctx.G.identity

    def in_h(self) -> bool:
        return not self.form.syllables

    def in_factor(self, side: int) -> bool:
        return self.ctx.G.in_factor(self.form, side)

    def components(self):
        return self.ctx.G.components(self.form)

    def to_word(self) -> Word:
        return normal_to_word(self)

    def __str__(self) -> str:
        return str(normal_to_word(self))


def word_to_normal(ctx: GroupContext, w: Word) -> GNormal:
    eng = ctx.engines
    u = eng.G.identity
    for gen, exp in w.factors:
        side = A_SIDE if gen == "a" else B_SIDE
        u = eng.G.push(u, side, eng.factor_engines[side].from_factor(CYCLE, exp))
    return GNormal(ctx, u)


def _h_factors(ctx: GroupContext, h: HElem):
    return [("a", ctx.m * h.mu), ("b", ctx.n * h.nu)]


def factor_form_factors(ctx: GroupContext, side: int, x: AmalgamNormal):
    """Word factors spelling a normal form of ``A`` (side 0) or ``B`` (side 1)."""
    gen, step = ("a", ctx.m) if side == A_SIDE else ("b", ctx.n)
    out = []
    for s, atom in x.syllables:
        out.extend([(gen, atom)] if s == CYCLE else _h_factors(ctx, atom))
    out.append((gen, step * x.tail))
    return out


def normal_to_word(g: GNormal) -> Word:
    factors = []
    for side, rep in g.form.syllables:
        factors.extend(factor_form_factors(g.ctx, side, rep))
    factors.extend(_h_factors(g.ctx, g.form.tail))
    return Word.reduced(factors)


def project_mod_t(g: GNormal, t: int) -> GNormal:
    """Image of ``g`` under the natural map G_mn -> G_mn(t)."""
    if g.ctx.t is not None:
        raise BadParameter("projection starts from G_mn, not a quotient")
    ctx_t = GroupContext(g.ctx.m, g.ctx.n, t)
    return word_to_normal(ctx_t, normal_to_word(g))


def mirror_factor_form(x: AmalgamNormal) -> AmalgamNormal:
    """Relabel an ``A``-form as a ``B``-form under a <-> b (and back)."""
    return AmalgamNormal(
        tuple((s, atom if s == CYCLE else atom.swapped()) for s, atom in x.syllables),
        x.tail,
    )


def mirror(g: GNormal) -> GNormal:
    """Image under the isomorphism G_mn -> G_nm swapping a and b."""
    syllables = tuple((1 - side, mirror_factor_form(rep)) for side, rep in g.form.syllables)
    return GNormal(g.ctx.mirror(), AmalgamNormal(syllables, g.form.tail.swapped()))
