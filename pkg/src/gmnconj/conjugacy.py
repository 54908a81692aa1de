"""Conjugacy decision in G_mn and G_mn(t).

The decision follows the amalgam structure ``G = (A * B; H)``:

* both elements are cyclically reduced; different lengths are never conjugate;
* elements of length 1 are compared through their conjugacy cores inside
  ``A`` or ``B`` (the factor amalgams have central ``<c>``, ``<d>``, so
  conjugacy there is "equal up to rotation");
* longer elements are conjugate iff some cyclic permutation of one is
  ``H``-conjugate to the other.  ``H``-conjugacy reduces to the linear
  system on the double-coset exponents solved in closed form below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .amalgam import AmalgamNormal
from .errors import MixedContexts, PreconditionViolated, VerificationFailure
from .groups import (
    A_SIDE,
    B_SIDE,
    HSIDE,
    GNormal,
    GroupContext,
    HElem,
    mirror_factor_form,
)
from .words import Word

SIDE_NAMES = ("A", "B")


@dataclass(frozen=True)
class DoubleCosetWitness:
    """Exponents with ``x = c^alpha d^beta . y . c^gamma d^delta``.

    In ``A`` the central ``c`` is collected on the left (``gamma == 0``); in
    ``B`` the central ``d`` is (``delta == 0``).  Values are reduced mod
    ``t`` in a quotient.
    """

    side: str
    alpha: int
    beta: int
    gamma: int
    delta: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.alpha, self.beta, self.gamma, self.delta

    def mirrored(self) -> "DoubleCosetWitness":
        return DoubleCosetWitness(
            "B" if self.side == "A" else "A", self.beta, self.alpha, self.delta, self.gamma
        )


@dataclass(frozen=True)
class HSequence:
    """``h_0, ..., h_r`` with ``x_i = h_{i-1}^-1 y_i h_i`` for every component."""

    hs: Tuple[HElem, ...]
    witnesses: Tuple[DoubleCosetWitness, ...]

    @property
    def closed(self) -> bool:
        return self.hs[0] == self.hs[-1]


@dataclass(frozen=True)
class Obstruction:
    """Why a pair of reduced forms is not H-conjugate.

    ``kind`` is one of ``factor_mismatch`` (components in different
    factors), ``double_coset`` (component outside the double coset),
    ``condition`` (a compatibility sum is nonzero, ``value`` holds it) or
    ``closure`` (the unique sequence has ``h_r != h_0``; ``delta`` holds
    ``h_r h_0^-1``).  ``index`` is 1-based.
    """

    kind: str
    index: Optional[int] = None
    value: Optional[int] = None
    delta: Optional[HElem] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.index is not None:
            out["index"] = self.index
        if self.value is not None:
            out["sum"] = self.value
        if self.delta is not None:
            out["delta"] = list(self.delta)
        return out


@dataclass(frozen=True)
class HAnalysis:
    sequence: Optional[HSequence]
    obstruction: Optional[Obstruction]


@dataclass(frozen=True)
class Certificate:
    """Reason for a non-conjugacy verdict.

    Kinds produced by the decision procedure: ``length_mismatch``,
    ``factor_core_mismatch``, ``h_core_mismatch``, ``factor_nonconjugate``
    and ``no_h_conjugate_rotation``.  The witness module adds ``modulus``.
    """

    kind: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.details}


@dataclass(frozen=True)
class Verdict:
    conjugate: bool
    conjugator: Optional[GNormal] = None
    certificate: Optional[Certificate] = None

    @property
    def conjugator_word(self) -> Optional[Word]:
        return None if self.conjugator is None else self.conjugator.to_word()

    def to_json(self) -> dict:
        if self.conjugate:
            return {"verdict": "conjugate", "conjugator": str(self.conjugator_word)}
        return {"verdict": "non_conjugate", "certificate": self.certificate.to_json()}


# -- double cosets ---------------------------------------------------------


def _strip_d(x: AmalgamNormal):
    """Split an ``A``-form outside ``H`` into (leading d, core, trailing d, c-tail)."""
    syl = x.syllables
    lead = syl[0][1].nu if syl[0][0] == HSIDE else 0
    trail = syl[-1][1].nu if syl[-1][0] == HSIDE else 0
    core = syl[(1 if lead else 0) : len(syl) - (1 if trail else 0)]
    return lead, core, trail, x.tail


def _coset_exponents_a(ctx: GroupContext, x: AmalgamNormal, y: AmalgamNormal):
    lx, cx, tx, kx = _strip_d(x)
    ly, cy, ty, ky = _strip_d(y)
    if cx != cy:
        return None
    red = ctx.factor_engine(A_SIDE).amalgam.reduce
    return red(kx - ky), red(lx - ly), 0, red(tx - ty)


def _double_coset(ctx: GroupContext, side: int, x: AmalgamNormal, y: AmalgamNormal):
    if side == A_SIDE:
        exps = _coset_exponents_a(ctx, x, y)
        back = _coset_exponents_a(ctx, y, x)
        w = None if exps is None else DoubleCosetWitness("A", *exps)
    else:
        exps = _coset_exponents_a(ctx.mirror(), mirror_factor_form(x), mirror_factor_form(y))
        back = _coset_exponents_a(ctx.mirror(), mirror_factor_form(y), mirror_factor_form(x))
        w = None if exps is None else DoubleCosetWitness("A", *exps).mirrored()
    if (exps is None) != (back is None):
        raise VerificationFailure("double coset membership is not symmetric")
    if w is None:
        return None
    red = ctx.factor_engine(A_SIDE).amalgam.reduce
    if tuple(red(-e) for e in exps) != back:
        raise VerificationFailure("double coset exponents are not unique")
    factor = ctx.G.factors[side]
    eng = factor.engine
    rebuilt = eng.multiply(
        eng.multiply(factor.embed(ctx.H.reduce((w.alpha, w.beta))), y),
        factor.embed(ctx.H.reduce((w.gamma, w.delta))),
    )
    if rebuilt != x:
        raise VerificationFailure("double coset witness does not reproduce x")
    return w


def _factor_element(ctx: GroupContext, g: GNormal) -> Tuple[int, AmalgamNormal]:
    if g.ctx != ctx:
        raise MixedContexts(f"{g.ctx} vs {ctx}")
    if len(g.syllables) != 1:
        raise PreconditionViolated("element must lie in A or B and not in H")
    return ctx.G.to_factor(g.form)


def double_coset_decompose(ctx: GroupContext, x: GNormal, y: GNormal) -> Optional[DoubleCosetWitness]:
    """Exponents placing ``x`` in the double coset ``H y H``, or ``None``.

    Both elements must lie in the same factor (``A`` or ``B``) and outside ``H``.
    """
    sx, fx = _factor_element(ctx, x)
    sy, fy = _factor_element(ctx, y)
    if sx != sy:
        raise PreconditionViolated("x and y lie in different factors")
    return _double_coset(ctx, sx, fx, fy)


# -- H-conjugacy -----------------------------------------------------------


def _check_components(xs, ys):
    r = len(xs)
    if r < 2 or len(ys) != r:
        raise PreconditionViolated("need two component lists of equal length r > 1")
    for comps in (xs, ys):
        for (s0, _), (s1, _) in zip(comps, comps[1:]):
            if s0 == s1:
                raise PreconditionViolated("components must alternate between A and B")


def _analyze(ctx: GroupContext, xs, ys) -> HAnalysis:
    _check_components(xs, ys)
    for i, ((sx, _), (sy, _)) in enumerate(zip(xs, ys), start=1):
        if sx != sy:
            return HAnalysis(None, Obstruction("factor_mismatch", i))
    if xs[0][0] == B_SIDE:
        # relabel a <-> b so that the first component lies in A
        mctx = ctx.mirror()
        flip = lambda comps: [(1 - s, mirror_factor_form(x)) for s, x in comps]
        res = _analyze(mctx, flip(xs), flip(ys))
        if res.sequence is None:
            return res
        seq = HSequence(
            tuple(h.swapped() for h in res.sequence.hs),
            tuple(w.mirrored() for w in res.sequence.witnesses),
        )
        return HAnalysis(seq, None)

    ws = []
    for i, ((side, x), (_, y)) in enumerate(zip(xs, ys), start=1):
        w = _double_coset(ctx, side, x, y)
        if w is None:
            return HAnalysis(None, Obstruction("double_coset", i))
        ws.append(w)

    r = len(xs)
    red = ctx.factor_engine(A_SIDE).amalgam.reduce
    # 1-based exponent lists with a dummy at index 0
    al = [0] + [w.alpha for w in ws]
    be = [0] + [w.beta for w in ws]
    ga = [0] + [w.gamma for w in ws]
    de = [0] + [w.delta for w in ws]
    for i in range(2, r):
        if i % 2:
            s = al[i] + al[i + 1] + ga[i - 1] + ga[i]
        else:
            s = be[i] + be[i + 1] + de[i - 1] + de[i]
        if red(s):
            return HAnalysis(None, Obstruction("condition", i, value=s))

    hs = [ctx.H.reduce((-(al[1] + al[2] + ga[1]), -be[1]))]
    for i in range(1, r):
        if i % 2:
            hs.append(ctx.H.reduce((-al[i + 1], de[i])))
        else:
            hs.append(ctx.H.reduce((ga[i], -be[i + 1])))
    if r % 2:
        hs.append(ctx.H.reduce((al[r] + ga[r - 1] + ga[r], de[r])))
    else:
        hs.append(ctx.H.reduce((ga[r], be[r] + de[r - 1] + de[r])))

    for i in range(1, r + 1):
        side, x = xs[i - 1]
        y = ys[i - 1][1]
        factor = ctx.G.factors[side]
        eng = factor.engine
        got = eng.multiply(
            eng.multiply(factor.embed(ctx.H.invert(hs[i - 1])), y), factor.embed(hs[i])
        )
        if got != x:
            raise VerificationFailure(f"h-sequence fails at component {i}")
    return HAnalysis(HSequence(tuple(hs), tuple(ws)), None)


def solve_h_sequence(ctx: GroupContext, xs: Sequence, ys: Sequence) -> Optional[HSequence]:
    """The unique ``h_0, ..., h_r`` with ``x_i = h_{i-1}^-1 y_i h_i``, if any.

    ``xs`` and ``ys`` are component lists ``(side, factor_form)`` as returned
    by ``GNormal.components()``.
    """
    return _analyze(ctx, list(xs), list(ys)).sequence


def _check_pair(ctx: GroupContext, f: GNormal, g: GNormal):
    if f.ctx != ctx or g.ctx != ctx:
        raise MixedContexts("elements do not belong to the given context")


def h_analysis(ctx: GroupContext, f: GNormal, g: GNormal) -> HAnalysis:
    """Solve ``h^-1 g h = f`` over ``H``; report the obstruction when unsolvable."""
    _check_pair(ctx, f, g)
    if f.length != g.length or f.length < 2:
        raise PreconditionViolated("H-conjugacy needs l(f) = l(g) > 1")
    res = _analyze(ctx, f.components(), g.components())
    if res.sequence is not None and not res.sequence.closed:
        hs = res.sequence.hs
        delta = ctx.H.multiply(hs[-1], ctx.H.invert(hs[0]))
        return HAnalysis(res.sequence, Obstruction("closure", delta=delta))
    return res


def h_conjugate(ctx: GroupContext, f: GNormal, g: GNormal) -> Optional[HElem]:
    """``h`` in ``H`` with ``h^-1 g h = f``, or ``None``."""
    res = h_analysis(ctx, f, g)
    if res.obstruction is not None:
        return None
    h = res.sequence.hs[0]
    if g.conjugate(ctx.h(*h)) != f:
        raise VerificationFailure("H-conjugator does not conjugate g to f")
    return h


# -- conjugacy inside a factor ---------------------------------------------


def _core_in_factor(ctx: GroupContext, side: int, x: AmalgamNormal):
    """Cyclic core of ``x`` inside its factor and the factor conjugator to it."""
    return ctx.factor_engine(side).cyclically_reduce(x)


def _h_part(ctx: GroupContext, side: int, core: AmalgamNormal) -> Optional[HElem]:
    rep, h = ctx.G.factors[side].split(core)
    return h if rep is None else None


def _cores_conjugator(ctx: GroupContext, side: int, x: AmalgamNormal, y: AmalgamNormal):
    """``w`` with ``w^-1 x w = y`` for cyclically reduced ``x``, ``y`` in one factor."""
    eng = ctx.factor_engine(side)
    if eng.length(x) != eng.length(y):
        return None
    if eng.length(x) == 1:
        return eng.identity if x == y else None
    # the amalgam is central, so amalgam-conjugacy is equality
    for rot, prefix in eng.rotations(x):
        if rot == y:
            return prefix
    return None


def _factor_conjugator(ctx: GroupContext, side: int, x: AmalgamNormal, y: AmalgamNormal):
    eng = ctx.factor_engine(side)
    xc, kx = _core_in_factor(ctx, side, x)
    yc, ky = _core_in_factor(ctx, side, y)
    hx, hy = _h_part(ctx, side, xc), _h_part(ctx, side, yc)
    if hx is not None or hy is not None:
        w = eng.identity if hx == hy else None
    else:
        w = _cores_conjugator(ctx, side, xc, yc)
    if w is None:
        return None
    return eng.multiply(eng.multiply(kx, w), eng.invert(ky))


def factor_conjugacy(ctx: GroupContext, x: GNormal, y: GNormal) -> Optional[GNormal]:
    """Conjugator ``z`` inside the common factor with ``z^-1 x z = y``, or ``None``."""
    _check_pair(ctx, x, y)
    sides = []
    for g in (x, y):
        if len(g.syllables) > 1:
            raise PreconditionViolated("element does not lie in A or B")
        if g.syllables:
            sides.append(g.syllables[0][0])
    if len(set(sides)) > 1:
        raise PreconditionViolated("x and y lie in different factors")
    side = sides[0] if sides else A_SIDE
    _, fx = ctx.G.to_factor(x.form, side)
    _, fy = ctx.G.to_factor(y.form, side)
    w = _factor_conjugator(ctx, side, fx, fy)
    if w is None:
        return None
    z = ctx.from_factor(side, w)
    if x.conjugate(z) != y:
        raise VerificationFailure("factor conjugator does not conjugate x to y")
    return z


# -- full decision ---------------------------------------------------------


@dataclass(frozen=True)
class CyclicCore:
    core: GNormal
    conjugator: GNormal


def cyclic_core(g: GNormal) -> CyclicCore:
    core, conj = g.ctx.G.cyclically_reduce(g.form)
    return CyclicCore(GNormal(g.ctx, core), GNormal(g.ctx, conj))


def _decide_short(ctx: GroupContext, f: GNormal, g: GNormal):
    """Length-1 cores; returns ``(conjugator or None, certificate or None)``."""
    sf, xf = ctx.G.to_factor(f.form)
    sg, xg = ctx.G.to_factor(g.form)
    cf, kf = _core_in_factor(ctx, sf, xf)
    cg, kg = _core_in_factor(ctx, sg, xg)
    hf, hg = _h_part(ctx, sf, cf), _h_part(ctx, sg, cg)
    if hf is not None and hg is not None:
        if hf != hg:
            return None, Certificate("h_core_mismatch", {"h_f": list(hf), "h_g": list(hg)})
        w = None
    elif hf is not None or hg is not None or sf != sg:
        details = {
            "f_factor": "H" if hf is not None else SIDE_NAMES[sf],
            "g_factor": "H" if hg is not None else SIDE_NAMES[sg],
        }
        return None, Certificate("factor_core_mismatch", details)
    else:
        w = _cores_conjugator(ctx, sf, cf, cg)
        if w is None:
            return None, Certificate("factor_nonconjugate", {"factor": SIDE_NAMES[sf]})
    z = ctx.from_factor(sf, kf)
    if w is not None:
        z = z * ctx.from_factor(sf, w)
    return z * ~ctx.from_factor(sg, kg), None


def decide_conjugacy(ctx: GroupContext, f: GNormal, g: GNormal) -> Verdict:
    """Decide whether ``f`` and ``g`` are conjugate in ``ctx``.

    A positive verdict carries ``z`` with ``z^-1 f z = g``, checked by
    multiplication before it is returned.
    """
    _check_pair(ctx, f, g)
    fc, gc = cyclic_core(f), cyclic_core(g)
    lf, lg = fc.core.length, gc.core.length
    if lf != lg:
        return Verdict(False, certificate=Certificate("length_mismatch", {"l_f": lf, "l_g": lg}))

    if lf == 1:
        z, cert = _decide_short(ctx, fc.core, gc.core)
        if z is None:
            return Verdict(False, certificate=cert)
    else:
        z = None
        reasons: List[dict] = []
        for i, (rot, prefix) in enumerate(ctx.G.rotations(fc.core.form)):
            rot = GNormal(ctx, rot)
            res = h_analysis(ctx, gc.core, rot)
            if res.obstruction is None:
                h = ctx.h(*res.sequence.hs[0])
                z = GNormal(ctx, prefix) * h
                break
            reasons.append({"rotation": i, **res.obstruction.to_json()})
        if z is None:
            return Verdict(
                False, certificate=Certificate("no_h_conjugate_rotation", {"rotations": reasons})
            )
    z = fc.conjugator * z * ~gc.conjugator
    if f.conjugate(z) != g:
        raise VerificationFailure("assembled conjugator does not conjugate f to g")
    return Verdict(True, conjugator=z)
