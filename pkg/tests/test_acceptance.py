"""Acceptance criteria 1-8, one test per criterion.

Each test records a single PASS/FAIL line (shown in the pytest terminal
summary, or on stdout with ``python3 -m tests.test_acceptance``).
"""

import contextlib
import io
import json
import random
import time
from pathlib import Path

import pytest

from gmnconj import (
    GroupContext,
    HElem,
    SearchBound,
    decide_conjugacy,
    exhaustive_h_conjugator,
    find_witness_modulus,
    h_conjugate,
    normal_to_word,
    verify_witness,
    word_to_normal,
)
from gmnconj.cli import run
from gmnconj.groups import A_SIDE, B_SIDE, CYCLE
from gmnconj.oracle import (
    candidate_elements,
    conjugates_within,
    grid_words,
    random_element,
    random_h,
    random_of_length,
    random_word,
)
from tests.acceptance_log import record

PARAMS = [(2, 2), (2, 3), (3, 4)]
GOLDEN = Path(__file__).parent / "golden" / "cli_cases.json"


def _timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, f"{detail} ({time.perf_counter() - start:.1f}s)"


# -- criterion bodies --------------------------------------------------------


def normalization_laws():
    failures = 0
    for m, n in PARAMS:
        ctx = GroupContext(m, n)
        rng = random.Random(1000 + 10 * m + n)
        for _ in range(1000):
            u = random_word(rng, (0, 8), 4, m=m, n=n)
            v = random_word(rng, (0, 8), 4, m=m, n=n)
            gu, gv = word_to_normal(ctx, u), word_to_normal(ctx, v)
            w = normal_to_word(gu)
            checks = (
                word_to_normal(ctx, u * v) == gu * gv,
                ~~gu == gu,
                word_to_normal(ctx, ~u) == ~gu,
                word_to_normal(ctx, w) == gu,
                normal_to_word(word_to_normal(ctx, w)) == w,
            )
            failures += not all(checks)
    return failures == 0, f"normalization laws, 3000 pairs, {failures} failures"


def completeness():
    failures = 0
    for m, n in PARAMS:
        ctx = GroupContext(m, n)
        rng = random.Random(2000 + 10 * m + n)
        for _ in range(500):
            f = random_element(ctx, rng, (0, 7))
            w = random_element(ctx, rng, (0, 5))
            g = f.conjugate(w)
            v = decide_conjugacy(ctx, f, g)
            failures += not (v.conjugate and f.conjugate(v.conjugator) == g)
    return failures == 0, f"completeness, 1500 conjugate pairs, {failures} failures"


def oracle_agreement():
    ctx = GroupContext(2, 2)
    bound = SearchBound(4, 3)
    candidate_elements(ctx, bound)
    elements = list(dict.fromkeys(word_to_normal(ctx, w) for w in grid_words(3, 2)))
    missed = unsound = 0
    pairs = found = 0
    for f in elements:
        reach = conjugates_within(ctx, f, bound)
        for g in elements:
            pairs += 1
            v = decide_conjugacy(ctx, f, g)
            if g in reach:
                found += 1
                missed += not v.conjugate
            elif v.conjugate and f.conjugate(v.conjugator) != g:
                unsound += 1
    ok = missed == 0 and unsound == 0
    detail = (
        f"oracle grid, {len(elements)} elements, {pairs} pairs, "
        f"{found} brute-force conjugate, {missed} missed, {unsound} unsound"
    )
    return ok, detail


def h_exhaustive():
    bad = biggest = 0
    for t in (2, 3):
        ctx = GroupContext(2, 2, t)
        rng = random.Random(4000 + t)
        for i in range(200):
            r = rng.randint(2, 4)
            g = random_of_length(ctx, rng, r)
            if i % 2:
                f = g.conjugate(ctx.h(*random_h(ctx, rng)))
            else:
                f = random_of_length(ctx, rng, r)
            found = exhaustive_h_conjugator(ctx, f, g)
            h = h_conjugate(ctx, f, g)
            biggest = max(biggest, len(found))
            bad += (h is None) != (not found) or (h is not None and h not in found)
    ok = bad == 0 and biggest <= 1
    return ok, f"H(t) exhaustive, 400 pairs, {bad} disagreements, max solution set {biggest}"


def recovered_h():
    bad = 0
    rng = random.Random(5000)
    for i in range(200):
        ctx = GroupContext(*PARAMS[i % 3])
        g = random_of_length(ctx, rng, rng.randint(2, 6))
        h = HElem(*random_h(ctx, rng, 6))
        f = g.conjugate(ctx.h(*h))
        bad += h_conjugate(ctx, f, g) != h
    return bad == 0, f"h_0 = h on 200 constructed pairs, {bad} mismatches"


def _witness_pairs(rng):
    """Non-conjugate pairs: mostly near misses of conjugate pairs."""
    ctx = GroupContext(*PARAMS[rng.randrange(3)])
    f = random_element(ctx, rng, (1, 6))
    style = rng.randrange(4)
    if style == 0:
        g = random_element(ctx, rng, (1, 6))
    elif style == 1:
        g = f.conjugate(random_element(ctx, rng, (0, 3))) * ctx.h(*random_h(ctx, rng, 2))
    elif style == 2:
        g = f.conjugate(random_element(ctx, rng, (0, 3))) * word_to_normal(ctx, random_word(rng, (1, 1), 2))
    else:
        g = ~f
    return ctx, f, g


def witness_soundness():
    rng = random.Random(6000)
    done = bad = multiples = 0
    cases = {}
    while done < 100:
        ctx, f, g = _witness_pairs(rng)
        if decide_conjugacy(ctx, f, g).conjugate:
            continue
        done += 1
        cert = find_witness_modulus(ctx, f, g)
        cases[cert.case] = cases.get(cert.case, 0) + 1
        ok = verify_witness(ctx, f, g, cert.t)
        if cert.case in ("length", "factor_core", "h_core"):
            multiples += 1
            ok = ok and verify_witness(ctx, f, g, 2 * cert.t) and verify_witness(ctx, f, g, 3 * cert.t)
        bad += not ok
    mix = ", ".join(f"{k}={v}" for k, v in sorted(cases.items()))
    return bad == 0, f"witness soundness, 100 pairs ({mix}), {multiples} multiple checks, {bad} failures"


def _sample_factor(ctx, rng, side):
    # words in the cycle generator and powers of the other generator's n-th power
    gen, other, step = ("a", "b", ctx.n) if side == A_SIDE else ("b", "a", ctx.m)
    factors = []
    for i in range(rng.randint(1, 5)):
        if i % 2 == 0:
            factors.append((gen, rng.choice([-3, -2, -1, 1, 2, 3])))
        else:
            factors.append((other, step * rng.choice([-2, -1, 1, 2])))
    return ctx.element(" ".join(f"{x}^{e}" for x, e in factors))


def invariant_suites():
    bad21 = bad14 = 0
    rng = random.Random(7000)
    contexts = [GroupContext(m, n, t) for (m, n) in PARAMS for t in (None, 3)]
    n21 = n14 = 0
    while n21 < 500:
        ctx = rng.choice(contexts)
        side = rng.choice((A_SIDE, B_SIDE))
        g = _sample_factor(ctx, rng, side)
        if g.in_h():
            continue
        n21 += 1
        mu, nu = random_h(ctx, rng, 3)
        h = ctx.h(mu, nu)
        # random_h is already reduced mod t, so zero means trivial
        central = (nu if side == A_SIDE else mu) == 0
        bad21 += h.conjugate(g).in_h() != central
    while n14 < 500:
        ctx = rng.choice(contexts)
        side = rng.choice((A_SIDE, B_SIDE))
        eng = ctx.factor_engine(side)
        f = ctx.G.to_factor(_sample_factor(ctx, rng, side).form, side)[1]
        k = rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])
        x = eng.from_factor(CYCLE, k)
        n14 += 1
        step = ctx.m if side == A_SIDE else ctx.n
        expected = eng.in_factor(f, CYCLE) or k % step == 0
        bad14 += eng.in_factor(eng.conjugate(x, f), CYCLE) != expected
    ok = bad21 == 0 and bad14 == 0
    return ok, f"invariant suites, 500 + 500 samples, {bad21} + {bad14} violations"


def cli_contract():
    cases = json.loads(GOLDEN.read_text())
    bad = []
    for case in cases:
        got = _run_cli(case["args"])
        if got != (case["exit"], case["stdout"]):
            bad.append(" ".join(case["args"]))
    return not bad, f"CLI golden cases, {len(cases)} cases, {len(bad)} mismatches {bad[:3]}"


def _run_cli(args):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = run(list(args))
    return code, out.getvalue()


CRITERIA = {
    1: normalization_laws,
    2: completeness,
    3: oracle_agreement,
    4: h_exhaustive,
    5: recovered_h,
    6: witness_soundness,
    7: invariant_suites,
    8: cli_contract,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = _timed(CRITERIA[number])
    record(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    for number, fn in sorted(CRITERIA.items()):
        record(number, *_timed(fn))
