"""Command-line interface.

Exit codes: 0 success / conjugate / verified, 1 non-conjugate / not equal /
not verified, 2 word syntax error, 3 bad parameters, 4 witness requested
for a conjugate pair, 5 search cap exhausted.
"""

from __future__ import annotations

import json
import sys

import click

from .conjugacy import decide_conjugacy
from .errors import BadParameter, CapExhausted, InputsConjugate
from .groups import GroupContext, word_to_normal
from .oracle import random_word
from .witness import DEFAULT_CAP, find_witness_modulus, verify_witness
from .words import WordSyntaxError, parse_word, render_word

SCHEMA = 1

EXIT_OK, EXIT_NO, EXIT_SYNTAX, EXIT_PARAM, EXIT_CONJUGATE, EXIT_CAP = range(6)


class Config:
    def __init__(self, m, n, t, as_json, seed, cap, minimize):
        self.ctx = GroupContext(m, n, t)
        self.as_json = as_json
        self.seed = seed
        self.cap = cap
        self.minimize = minimize
        if cap < 1:
            raise BadParameter("--cap must be >= 1")

    def group(self) -> dict:
        return {"m": self.ctx.m, "n": self.ctx.n, "t": self.ctx.t}

    def emit(self, payload: dict, text: str):
        if self.as_json:
            click.echo(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
        else:
            click.echo(text)

    def element(self, text: str):
        return word_to_normal(self.ctx, parse_word(text))


def _show(word) -> str:
    return render_word(word) or "1"


@click.group()
@click.option("--m", "m", type=int, required=True, help="exponent of a in the relator (>= 2)")
@click.option("--n", "n", type=int, required=True, help="exponent of b in the relator (>= 2)")
@click.option("--t", "t", type=int, default=None, help="work in the quotient G_mn(t)")
@click.option("--json", "as_json", is_flag=True, help="machine-readable output")
@click.option("--seed", type=int, default=None, help="seed for the random subcommand")
@click.option("--cap", type=int, default=DEFAULT_CAP, show_default=True, help="search iteration cap")
@click.option("--minimize", is_flag=True, help="report the least separating modulus")
@click.pass_context
def main(ctx, m, n, t, as_json, seed, cap, minimize):
    """Conjugacy in G_mn = <a, b; [a^m, b^n] = 1> and its quotients G_mn(t)."""
    ctx.obj = Config(m, n, t, as_json, seed, cap, minimize)


@main.command()
@click.argument("word")
@click.pass_obj
def normalize(cfg: Config, word):
    """Print the normal form of WORD and its length."""
    g = cfg.element(word)
    payload = {
        "group": cfg.group(),
        "normal": render_word(g.to_word()),
        "length": g.length,
        "syllables": [render_word(cfg.ctx.from_factor(s, x).to_word()) for s, x in g.syllables],
        "tail": list(g.tail),
    }
    cfg.emit(payload, f"normal: {_show(g.to_word())}\nlength: {g.length}")
    return EXIT_OK


@main.command()
@click.argument("word1")
@click.argument("word2")
@click.pass_obj
def eq(cfg: Config, word1, word2):
    """Test whether two words spell the same element."""
    same = cfg.element(word1) == cfg.element(word2)
    cfg.emit({"group": cfg.group(), "equal": same}, "equal" if same else "not equal")
    return EXIT_OK if same else EXIT_NO


@main.command()
@click.argument("word1")
@click.argument("word2")
@click.pass_obj
def conj(cfg: Config, word1, word2):
    """Decide whether WORD1 and WORD2 are conjugate."""
    f, g = cfg.element(word1), cfg.element(word2)
    verdict = decide_conjugacy(cfg.ctx, f, g)
    payload = verdict.to_json()
    if verdict.conjugate:
        text = f"conjugate\nconjugator: {_show(verdict.conjugator_word)}"
    else:
        text = "non_conjugate\ncertificate: " + json.dumps(payload["certificate"], sort_keys=True)
    cfg.emit(payload, text)
    return EXIT_OK if verdict.conjugate else EXIT_NO


@main.command()
@click.argument("word1")
@click.argument("word2")
@click.pass_obj
def witness(cfg: Config, word1, word2):
    """Find a modulus t separating the conjugacy classes of WORD1 and WORD2."""
    if cfg.ctx.t is not None:
        raise BadParameter("witness works in G_mn; drop --t")
    f, g = cfg.element(word1), cfg.element(word2)
    try:
        cert = find_witness_modulus(cfg.ctx, f, g, cap=cfg.cap, minimize=cfg.minimize)
    except InputsConjugate as exc:
        word = render_word(exc.conjugator)
        cfg.emit({"verdict": "conjugate", "conjugator": word}, f"conjugate\nconjugator: {word or '1'}")
        return EXIT_CONJUGATE
    payload = {"verdict": "non_conjugate", "certificate": cert.to_json()}
    cfg.emit(payload, f"non_conjugate\nt: {cert.t}\ncase: {cert.case}")
    return EXIT_OK


@main.command()
@click.argument("word1")
@click.argument("word2")
@click.argument("t", type=int)
@click.pass_obj
def verify(cfg: Config, word1, word2, t):
    """Check that WORD1 and WORD2 are not conjugate in G_mn(T)."""
    if cfg.ctx.t is not None:
        raise BadParameter("verify works from G_mn; pass the modulus as T")
    f, g = cfg.element(word1), cfg.element(word2)
    ok = verify_witness(cfg.ctx, f, g, t)
    cfg.emit({"t": t, "verified": ok}, "verified" if ok else "not verified")
    return EXIT_OK if ok else EXIT_NO


@main.command()
@click.option("--count", type=int, default=1, show_default=True)
@click.option("--length", type=(int, int), default=(0, 6), show_default=True)
@click.option("--exponent", type=int, default=3, show_default=True)
@click.pass_obj
def random(cfg: Config, count, length, exponent):
    """Print seeded random words (with their normal forms in JSON mode)."""
    import random as _random

    rng = _random.Random(cfg.seed)
    ctx = cfg.ctx
    words = [random_word(rng, length, exponent, m=ctx.m, n=ctx.n, t=ctx.t) for _ in range(count)]
    normals = [render_word(word_to_normal(ctx, w).to_word()) for w in words]
    payload = {"seed": cfg.seed, "words": [render_word(w) for w in words], "normals": normals}
    cfg.emit(payload, "\n".join(_show(w) for w in words))
    return EXIT_OK


def run(argv=None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        code = main.main(args=argv, prog_name="gmnconj", standalone_mode=False)
    except WordSyntaxError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_SYNTAX
    except (BadParameter, click.UsageError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_PARAM
    except CapExhausted as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_CAP
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return EXIT_PARAM
    return EXIT_OK if code is None else code


def entry():
    sys.exit(run())
