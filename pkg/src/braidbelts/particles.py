"""Particle quantum numbers from belts and trefoils.

Two maps live here.  The Helon charge rule counts full ribbon twists, each
worth ±e/3.  The SU_q(2) trefoil labels take a classical oriented knot
``(N, w, r)`` (crossings, writhe, rotation) to ``(j, m, m') = (N, w, ±r+1)/2``
with charge ``Q = -(m + m')/3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .belt import HalfInt, TwistVector
from .errors import NonIntegerTwists

__all__ = [
    "HelonAssignment",
    "QuantumKnotLabel",
    "TrefoilFamily",
    "TREFOIL_FAMILIES",
    "helon_charge",
    "finkelstein_label",
    "family_hint",
    "check_trefoil_families",
]


@dataclass(frozen=True)
class HelonAssignment:
    twists: TwistVector
    charge_thirds: int
    kind: str
    no_charge_mixing: bool

    @property
    def charge(self) -> Fraction:
        return Fraction(self.charge_thirds, 3)


def helon_charge(t: TwistVector) -> HelonAssignment:
    """Charge of a belt whose ribbons carry whole 2π twists."""
    if any(d % 2 for d in t.doubled):
        raise NonIntegerTwists(f"[{t}] has half twists; helon charges need whole twists")
    a, b, c = (d // 2 for d in t.doubled)
    if a == b == c == 0:
        kind = "neutral"
    elif a == b == c:
        kind = "lepton"
    else:
        kind = "quark"
    mixing = min(a, b, c) < 0 < max(a, b, c)
    return HelonAssignment(t, a + b + c, kind, not mixing)


_FAMILY_BY_CHARGE = {
    Fraction(0): "neutrinos (nu_e, nu_mu, nu_tau)",
    Fraction(-1): "charged leptons (e, mu, tau)",
    Fraction(-1, 3): "down-type quarks (d, s, b)",
    Fraction(2, 3): "up-type quarks (u, c, t)",
}


def family_hint(q: Fraction) -> Optional[str]:
    return _FAMILY_BY_CHARGE.get(Fraction(q))


@dataclass(frozen=True)
class QuantumKnotLabel:
    N: int
    w: int
    r: int
    j: HalfInt
    m: HalfInt
    m_prime: HalfInt
    charge: Fraction

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "w": self.w,
            "r": self.r,
            "j": str(self.j),
            "m": str(self.m),
            "m_prime": str(self.m_prime),
            "Q": str(self.charge),
            "family_hint": family_hint(self.charge),
        }


def finkelstein_label(N: int, w: int, r: int, sign: int = 1) -> QuantumKnotLabel:
    """SU_q(2) label of the classical knot ``(N, w, r)``.

    ``sign`` picks the branch of ``m' = (±r + 1)/2``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    j = HalfInt(N)
    m = HalfInt(w)
    m_prime = HalfInt(sign * r + 1)
    q = -(m.as_fraction() + m_prime.as_fraction()) / 3
    return QuantumKnotLabel(N, w, r, j, m, m_prime, q)


@dataclass(frozen=True)
class TrefoilFamily:
    """One row of the published j = 3/2 trefoil assignment, as listed."""

    w: int
    r: int
    m: Fraction
    m_prime: Fraction
    charge: Fraction
    family: str


TREFOIL_FAMILIES = (
    TrefoilFamily(-3, 2, Fraction(-3, 2), Fraction(3, 2), Fraction(0), "nu"),
    TrefoilFamily(3, 2, Fraction(3, 2), Fraction(3, 2), Fraction(-1), "e"),
    TrefoilFamily(3, -2, Fraction(3, 2), Fraction(-1, 2), Fraction(-1, 3), "d"),
    # listed m' = 1/2 is not (r+1)/2 = -1/2; the listed charge 2/3 follows from -1/2
    TrefoilFamily(-3, -2, Fraction(-3, 2), Fraction(1, 2), Fraction(2, 3), "u"),
)


def check_trefoil_families(sign: int = 1) -> list[dict]:
    """Recompute every listed row and report where it disagrees with itself.

    ``r_consistent`` is False when the listed ``m'`` is not ``(±r+1)/2``;
    ``listed_pair_charge`` is ``-(m+m')/3`` taken from the listed pair.
    """
    out = []
    for row in TREFOIL_FAMILIES:
        label = finkelstein_label(3, row.w, row.r, sign)
        listed_q = -(row.m + row.m_prime) / 3
        out.append(
            {
                "w": row.w,
                "r": row.r,
                "computed": label,
                "listed_charge": row.charge,
                "charge_matches": label.charge == row.charge,
                "r_consistent": label.m_prime.as_fraction() == row.m_prime,
                "listed_pair_charge": listed_q,
            }
        )
    return out

