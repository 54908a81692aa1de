"""Normal forms in a free product of two groups with an amalgamated subgroup.

An element is stored as ``u_1 ... u_r . h``: each ``u_i`` is a canonical
right-coset representative (modulo the amalgam) from one of the two
factors, consecutive representatives come from different factors, and the
tail ``h`` lies in the amalgam.  The engine only talks to the factors
through a small interface:

``identity``, ``multiply(x, y)``, ``invert(x)``
    group operations on factor elements (hashable values);
``split(x) -> (rep, h)``
    ``x = rep . h`` with ``h`` in the amalgam; ``rep`` depends only on the
    coset ``x H`` and is ``None`` exactly when ``x`` lies in the amalgam;
``embed(h)``
    the factor element representing amalgam element ``h``.

The amalgam itself needs ``identity``, ``multiply`` and ``invert``.
Sides are the integers 0 (left factor) and 1 (right factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Tuple


class NotCyclicallyReduced(ValueError):
    pass


@dataclass(frozen=True)
class AmalgamNormal:
    syllables: Tuple[Tuple[int, Any], ...]
    tail: Any

    def __len__(self):
        return len(self.syllables)


class AmalgamEngine:
    def __init__(self, left, right, amalgam):
        self.factors = (left, right)
        self.amalgam = amalgam
        self.identity = AmalgamNormal((), amalgam.identity)

    # -- construction ----------------------------------------------------

    def push(self, u: AmalgamNormal, side: int, x) -> AmalgamNormal:
        """Right-multiply the normal form ``u`` by the factor element ``x``."""
        factor = self.factors[side]
        x = factor.multiply(factor.embed(u.tail), x)
        syllables = u.syllables
        if syllables and syllables[-1][0] == side:
            x = factor.multiply(syllables[-1][1], x)
            syllables = syllables[:-1]
        rep, h = factor.split(x)
        if rep is not None:
            syllables = syllables + ((side, rep),)
        return AmalgamNormal(syllables, h)

    def from_factor(self, side: int, x) -> AmalgamNormal:
        return self.push(self.identity, side, x)

    def from_amalgam(self, h) -> AmalgamNormal:
        return AmalgamNormal((), h)

    def normalize(self, seq: Iterable[Tuple[int, Any]]) -> AmalgamNormal:
        u = self.identity
        for side, x in seq:
            u = self.push(u, side, x)
        return u

    # -- group law -------------------------------------------------------

    def multiply(self, u: AmalgamNormal, v: AmalgamNormal) -> AmalgamNormal:
        for side, rep in v.syllables:
            u = self.push(u, side, rep)
        return AmalgamNormal(u.syllables, self.amalgam.multiply(u.tail, v.tail))

    def invert(self, u: AmalgamNormal) -> AmalgamNormal:
        out = self.from_amalgam(self.amalgam.invert(u.tail))
        for side, rep in reversed(u.syllables):
            out = self.push(out, side, self.factors[side].invert(rep))
        return out

    def conjugate(self, u: AmalgamNormal, z: AmalgamNormal) -> AmalgamNormal:
        """Return ``z^-1 u z``."""
        return self.multiply(self.multiply(self.invert(z), u), z)

    def equal(self, u: AmalgamNormal, v: AmalgamNormal) -> bool:
        return u == v

    # -- structure -------------------------------------------------------

    def length(self, u: AmalgamNormal) -> int:
        # amalgam elements are length-1 elements of either factor
        return max(1, len(u.syllables))

    def in_amalgam(self, u: AmalgamNormal) -> bool:
        return not u.syllables

    def in_factor(self, u: AmalgamNormal, side: int) -> bool:
        return not u.syllables or (len(u.syllables) == 1 and u.syllables[0][0] == side)

    def side_of(self, u: AmalgamNormal) -> int:
        """Factor holding an element of length 1 (amalgam elements report 0)."""
        if len(u.syllables) > 1:
            raise ValueError("element does not lie in a single factor")
        return u.syllables[0][0] if u.syllables else 0

    def to_factor(self, u: AmalgamNormal, side: int | None = None):
        """Return ``(side, x)`` with ``x`` the factor element equal to ``u``."""
        if side is None:
            side = self.side_of(u)
        elif not self.in_factor(u, side):
            raise ValueError("element is not in the requested factor")
        factor = self.factors[side]
        x = factor.embed(u.tail)
        if u.syllables:
            x = factor.multiply(u.syllables[0][1], x)
        return side, x

    def components(self, u: AmalgamNormal) -> List[Tuple[int, Any]]:
        """Reduced-form components, the tail folded into the last one."""
        if not u.syllables:
            return [self.to_factor(u, 0)]
        comps = list(u.syllables)
        side, rep = comps[-1]
        factor = self.factors[side]
        comps[-1] = (side, factor.multiply(rep, factor.embed(u.tail)))
        return comps

    def is_cyclically_reduced(self, u: AmalgamNormal) -> bool:
        s = u.syllables
        return len(s) <= 1 or s[0][0] != s[-1][0]

    def cyclically_reduce(self, u: AmalgamNormal) -> Tuple[AmalgamNormal, AmalgamNormal]:
        """Return ``(core, conj)`` with ``core = conj^-1 u conj`` cyclically reduced.

        The outermost syllable is conjugated away until the first and last
        syllables lie in different factors.
        """
        conj = self.identity
        while not self.is_cyclically_reduced(u):
            x = AmalgamNormal((u.syllables[0],), self.amalgam.identity)
            u = self.conjugate(u, x)
            conj = self.multiply(conj, x)
        return u, conj

    def rotations(self, u: AmalgamNormal) -> List[Tuple[AmalgamNormal, AmalgamNormal]]:
        """Pairs ``(rotation_i, prefix_i)`` with ``rotation_i = prefix_i^-1 u prefix_i``.

        ``prefix_i`` is the product of the first ``i`` components, so rotation
        ``i`` is ``x_{i+1} ... x_r x_1 ... x_i``.
        """
        if not self.is_cyclically_reduced(u):
            raise NotCyclicallyReduced("cyclic permutations need a cyclically reduced element")
        out = [(u, self.identity)]
        prefix = self.identity
        for side, rep in u.syllables[:-1]:
            prefix = self.push(prefix, side, rep)
            out.append((self.conjugate(u, prefix), prefix))
        return out

    def cyclic_permutations(self, u: AmalgamNormal) -> List[AmalgamNormal]:
        return [rot for rot, _ in self.rotations(u)]
