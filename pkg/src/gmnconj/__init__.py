"""Conjugacy decision and separability certificates for <a, b; [a^m, b^n] = 1>."""

from .amalgam import AmalgamEngine, AmalgamNormal, NotCyclicallyReduced
from .conjugacy import (
    Certificate,
    DoubleCosetWitness,
    HSequence,
    Verdict,
    cyclic_core,
    decide_conjugacy,
    double_coset_decompose,
    factor_conjugacy,
    h_conjugate,
    solve_h_sequence,
)
from .errors import (
    BadParameter,
    CapExhausted,
    InputsConjugate,
    MixedContexts,
    PreconditionViolated,
    VerificationFailure,
)
from .groups import (
    GNormal,
    GroupContext,
    HElem,
    build_context,
    mirror,
    normal_to_word,
    project_mod_t,
    word_to_normal,
)
from .oracle import (
    SearchBound,
    abelianization,
    brute_force_conjugator,
    exhaustive_h_conjugator,
    random_word,
)
from .witness import (
    WitnessCertificate,
    find_witness_modulus,
    length_preserving_modulus,
    verify_witness,
)
from .words import Word, WordSyntaxError, concat_words, invert_word, parse_word, render_word
