"""Separability certificates: a modulus ``t`` under which non-conjugacy survives.

For non-conjugate ``f``, ``g`` in G_mn the generator builds ``t`` so that
the images in G_mn(t) stay non-conjugate, following the case split of the
decision procedure:

* different lengths: keep both lengths (``length_preserving_modulus``);
* length 1 in different factors: keep both cores outside ``H``;
* length 1 in ``H``: separate the two ``H``-elements mod ``t``;
* length 1 in one factor: search ``t = 2, 3, ...``;
* longer elements: per cyclic permutation keep the reason it fails to be
  ``H``-conjugate, and multiply the per-rotation moduli together.

Every returned modulus is re-checked with the decision procedure in G_mn(t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .conjugacy import (
    _core_in_factor,
    _double_coset,
    _h_part,
    cyclic_core,
    decide_conjugacy,
    h_analysis,
)
from .errors import BadParameter, CapExhausted, InputsConjugate, VerificationFailure
from .groups import A_SIDE, HSIDE, GNormal, GroupContext, project_mod_t

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class WitnessCertificate:
    t: int
    case: str
    moduli: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"t": self.t, "case": self.case, "moduli": self.moduli, "trace": self.trace}


def _form_obstructions(side: int, form) -> list:
    # H-atoms inside an A-form are d-powers, inside a B-form c-powers
    return [atom.nu if side == A_SIDE else atom.mu for s, atom in form.syllables if s == HSIDE]


def obstruction_exponents(g: GNormal) -> list:
    """Exponents of the ``H``-atoms sitting inside the syllables of ``g``."""
    out = []
    for side, rep in g.syllables:
        out.extend(_form_obstructions(side, rep))
    return out


def _modulus_from(exps) -> int:
    return max([2] + [abs(e) + 1 for e in exps])


def length_preserving_modulus(ctx: GroupContext, g: GNormal) -> int:
    """``t0`` such that every multiple ``t`` of ``t0`` keeps the length of ``g``.

    No nonzero ``H``-atom exponent of ``g`` is divisible by a number larger
    than its absolute value, so each syllable stays outside ``H`` mod ``t``.
    """
    return _modulus_from(obstruction_exponents(g))


def verify_witness(ctx: GroupContext, f: GNormal, g: GNormal, t: int) -> bool:
    """True iff the images of ``f`` and ``g`` in G_mn(t) are not conjugate."""
    if t < 2:
        raise BadParameter(f"modulus must be >= 2, got {t}")
    ft, gt = project_mod_t(f, t), project_mod_t(g, t)
    return not decide_conjugacy(ft.ctx, ft, gt).conjugate


def _project_component(ctx: GroupContext, side: int, x, t: int):
    gt = project_mod_t(ctx.from_factor(side, x), t)
    return gt.ctx.G.to_factor(gt.form, side)[1]


def _search(predicate, candidates, cap: int, what: str) -> int:
    for count, t in enumerate(candidates, start=1):
        if count > cap:
            break
        if predicate(t):
            return t
    raise CapExhausted(f"no modulus found for {what} within {cap} candidates")


def _multiples(base: int, start: int = 1):
    k = start
    while True:
        yield base * k
        k += 1


def _short_case(ctx, f, g, cap):
    """Both cyclic cores have length 1."""
    sf, xf = ctx.G.to_factor(f.form)
    sg, xg = ctx.G.to_factor(g.form)
    cf, _ = _core_in_factor(ctx, sf, xf)
    cg, _ = _core_in_factor(ctx, sg, xg)
    hf, hg = _h_part(ctx, sf, cf), _h_part(ctx, sg, cg)
    if hf is not None and hg is not None:
        t = max(2, abs(hf.mu - hg.mu) + 1, abs(hf.nu - hg.nu) + 1)
        trace = [{"reason": "h_core_mismatch", "h_f": list(hf), "h_g": list(hg)}]
        return "h_core", t, {"t_h": t}, trace
    if hf is not None or hg is not None or sf != sg:
        t_f = 2 if hf is not None else _modulus_from(_form_obstructions(sf, cf))
        t_g = 2 if hg is not None else _modulus_from(_form_obstructions(sg, cg))
        t = math.lcm(t_f, t_g)
        return "factor_core", t, {"t0_f": t_f, "t0_g": t_g}, [{"reason": "factor_core_mismatch"}]
    t = _search(lambda t: verify_witness(ctx, f, g, t), _multiples(1, start=2), cap, "same-factor cores")
    trace = [{"reason": "factor_search", "factor": "AB"[sf]}]
    return "factor_search", t, {"searched_up_to": t}, trace


def _rotation_modulus(ctx, obstruction, xs, ys, base, cap) -> int:
    kind = obstruction.kind
    if kind == "factor_mismatch":
        return 1
    if kind == "condition":
        return abs(obstruction.value) + 1
    if kind == "closure":
        return max(abs(obstruction.delta.mu), abs(obstruction.delta.nu)) + 1
    j = obstruction.index - 1
    side, x = xs[j]
    y = ys[j][1]

    def separates(t):
        ctx_t = ctx.with_modulus(t)
        xt = _project_component(ctx, side, x, t)
        yt = _project_component(ctx, side, y, t)
        return _double_coset(ctx_t, side, xt, yt) is None

    return _search(separates, _multiples(base), cap, "double coset")


def _long_case(ctx, f, g, cap):
    t_f = length_preserving_modulus(ctx, f)
    t_g = length_preserving_modulus(ctx, g)
    base = math.lcm(t_f, t_g)
    trace, mods = [], []
    for i, (rot, _) in enumerate(ctx.G.rotations(f.form)):
        rot = GNormal(ctx, rot)
        res = h_analysis(ctx, g, rot)
        t_i = _rotation_modulus(ctx, res.obstruction, g.components(), rot.components(), base, cap)
        mods.append(t_i)
        trace.append({"rotation": i, **res.obstruction.to_json(), "modulus": t_i})
    t = t_f * t_g * math.prod(mods)
    return "rotations", t, {"t0_f": t_f, "t0_g": t_g, "rotations": mods}, trace


def find_witness_modulus(
    ctx: GroupContext,
    f: GNormal,
    g: GNormal,
    cap: int = DEFAULT_CAP,
    minimize: bool = False,
) -> WitnessCertificate:
    """Build a verified modulus separating the conjugacy classes of ``f`` and ``g``.

    Raises ``InputsConjugate`` when there is nothing to separate and
    ``CapExhausted`` when a search exceeds ``cap`` candidates.
    """
    if ctx.t is not None:
        raise BadParameter("witnesses are built in G_mn, not in a quotient")
    if cap < 1:
        raise BadParameter("cap must be >= 1")
    verdict = decide_conjugacy(ctx, f, g)
    if verdict.conjugate:
        raise InputsConjugate(verdict.conjugator_word)

    fc, gc = cyclic_core(f).core, cyclic_core(g).core
    if fc.length != gc.length:
        t_f = length_preserving_modulus(ctx, fc)
        t_g = length_preserving_modulus(ctx, gc)
        case, t = "length", math.lcm(t_f, t_g)
        moduli = {"t0_f": t_f, "t0_g": t_g}
        trace = [{"reason": "length_mismatch", "l_f": fc.length, "l_g": gc.length}]
    elif fc.length == 1:
        case, t, moduli, trace = _short_case(ctx, fc, gc, cap)
    else:
        case, t, moduli, trace = _long_case(ctx, fc, gc, cap)

    if not verify_witness(ctx, f, g, t):
        raise VerificationFailure(f"constructed modulus {t} does not separate the pair")
    if minimize:
        # the constructed t is the fallback when the scan hits the cap
        bound = t
        for s in range(2, min(bound, cap + 2)):
            if verify_witness(ctx, f, g, s):
                t = s
                break
        moduli = {**moduli, "constructed": bound}
    return WitnessCertificate(t, case, moduli, trace)
