"""Braid-only normal form of orientable 3-belts.

An orientable twist vector ``T`` is written as ``C⁻¹ P`` where ``C`` is a
fixed coset representative that makes ``C T`` a pure belt and ``P`` is the
product ``(σ₁²)^α (σ₂²)^β (σ₃²)^γ`` of the pure generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .belt import (
    S1,
    S1_INV,
    S2,
    S2_INV,
    S3,
    S3_INV,
    BraidWord,
    TwistVector,
    ZERO,
    evaluate_word,
    is_pure_belt,
)
from .errors import NonOrientable, NotPure

__all__ = [
    "PureExponents",
    "CosetRep",
    "INTEGER_COSET_REPS",
    "HALF_ODD_COSET_REPS",
    "coset_candidates",
    "coset_rep",
    "pure_exponents",
    "pure_word",
    "braid_only_word",
    "canonical_pretty",
    "verify_round_trip",
]

INTEGER_COSET_REPS = (
    BraidWord(),
    BraidWord((S1_INV, S2_INV)),
    BraidWord((S2_INV, S3_INV)),
    BraidWord((S3_INV, S1_INV)),
)
HALF_ODD_COSET_REPS = (
    BraidWord((S1_INV,)),
    BraidWord((S2_INV,)),
    BraidWord((S3_INV,)),
    BraidWord((S1_INV, S2_INV, S1_INV)),
)


@dataclass(frozen=True)
class PureExponents:
    """Powers of σ₁², σ₂², σ₃² in the standard form of a pure belt."""

    alpha: int
    beta: int
    gamma: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class CosetRep:
    word: BraidWord


def coset_candidates(t: TwistVector) -> tuple[BraidWord, ...]:
    """The four representatives that apply to ``t``'s parity class."""
    pc = t.parity_class
    if pc == "integer":
        return INTEGER_COSET_REPS
    if pc == "half-odd":
        return HALF_ODD_COSET_REPS
    raise NonOrientable(f"twist vector [{t}] mixes integers and half-integers")


def coset_rep(t: TwistVector) -> CosetRep:
    for c in coset_candidates(t):
        if is_pure_belt(evaluate_word(c, t)):
            return CosetRep(c)
    # unreachable: every orientable vector has exactly one matching candidate
    raise AssertionError(f"no coset representative found for [{t}]")


def pure_exponents(t: TwistVector) -> PureExponents:
    if not is_pure_belt(t):
        raise NotPure(f"[{t}] is not a pure belt")
    a, b, c = (d // 2 for d in t.doubled)
    return PureExponents((a + b) // 2, (b + c) // 2, (c + a) // 2)


def _square_power(g, g_inv, k: int) -> tuple:
    return (g,) * (2 * k) if k >= 0 else (g_inv,) * (-2 * k)


def pure_word(e: PureExponents) -> BraidWord:
    """``(σ₁²)^α (σ₂²)^β (σ₃²)^γ``; negative powers use the inverse letters."""
    return BraidWord(
        _square_power(S1, S1_INV, e.alpha)
        + _square_power(S2, S2_INV, e.beta)
        + _square_power(S3, S3_INV, e.gamma)
    )


def braid_only_word(t: TwistVector) -> BraidWord:
    """Canonical word ``W`` with ``evaluate_word(W, [0,0,0]) == t``.

    Raises NonOrientable when ``t`` mixes integer and half-odd entries, since
    no braid-only form exists then.
    """
    c = coset_rep(t).word
    pure = evaluate_word(c, t)
    return c.inverse() + pure_word(pure_exponents(pure))


def canonical_pretty(t: TwistVector) -> str:
    """Run-length text of ``braid_only_word(t)``.

    Runs are merged across the coset prefix and the pure part, except that
    the half twist ``σ₁σ₂σ₁`` is kept as its own block.
    """
    c = coset_rep(t).word
    word = braid_only_word(t)
    if len(c) == 3:
        head = c.inverse()
        rest = BraidWord(word.letters[len(head):])
        return head.pretty() + (rest.pretty() if len(rest) else "")
    return word.pretty()


def verify_round_trip(t: TwistVector) -> bool:
    return evaluate_word(braid_only_word(t), ZERO) == t
