"""Framed circular 3-braids and braided 3-belts.

Twists are measured in full turns, so a single half twist is ``1/2``.  All
arithmetic is carried out on doubled integers and is exact.

A braid word acts on a twist vector operator-style: in ``σ₂σ₁[0,0,0]`` the
rightmost letter ``σ₁`` is applied first.  One generator maps ``T`` to
``P_g(T) + v_g`` where ``P_g`` swaps two ribbons and ``v_g`` is the
generator's own twist vector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

__all__ = [
    "HalfInt",
    "TwistVector",
    "Generator",
    "Permutation",
    "BraidWord",
    "Belt",
    "ZERO",
    "IDENTITY",
    "S1",
    "S2",
    "S3",
    "S1_INV",
    "S2_INV",
    "S3_INV",
    "GENERATORS",
    "apply_generator",
    "evaluate_word",
    "word_permutation",
    "compose_belts",
    "is_orientable",
    "is_pure_belt",
    "isotopic",
    "parse_word",
    "parse_twist",
]


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact multiple of 1/2, stored as twice its value."""

    doubled: int

    @classmethod
    def of(cls, value) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = _parse_fraction(value)
        frac = Fraction(value)
        doubled = frac * 2
        if doubled.denominator != 1:
            raise ValueError(f"{value!r} is not a multiple of 1/2")
        return cls(int(doubled))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    @property
    def is_half_odd(self) -> bool:
        return self.doubled % 2 != 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __add__(self, other):
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled + other.doubled)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = HalfInt(2 * other)
        if not isinstance(other, HalfInt):
            return NotImplemented
        return HalfInt(self.doubled - other.doubled)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.doubled * k)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


def _parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text)
    if not m:
        raise ValueError(f"cannot read {text!r} as an integer or fraction")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


@dataclass(frozen=True)
class TwistVector:
    """Twist carried by ribbons 1, 2, 3, as doubled integers."""

    doubled: tuple[int, int, int]

    def __post_init__(self):
        if len(self.doubled) != 3:
            raise ValueError("a twist vector has exactly three entries")

    @classmethod
    def of(cls, a, b, c) -> "TwistVector":
        return cls(tuple(HalfInt.of(x).doubled for x in (a, b, c)))

    @property
    def entries(self) -> tuple[HalfInt, HalfInt, HalfInt]:
        return tuple(HalfInt(d) for d in self.doubled)

    def __iter__(self) -> Iterator[HalfInt]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> HalfInt:
        return HalfInt(self.doubled[i])

    def __add__(self, other: "TwistVector") -> "TwistVector":
        if not isinstance(other, TwistVector):
            return NotImplemented
        return TwistVector(tuple(x + y for x, y in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "TwistVector":
        return TwistVector(tuple(-x for x in self.doubled))

    def total(self) -> HalfInt:
        return HalfInt(sum(self.doubled))

    @property
    def parity_class(self) -> str:
        """``"integer"``, ``"half-odd"`` or ``"mixed"``."""
        odd = sum(d % 2 for d in self.doubled)
        if odd == 0:
            return "integer"
        if odd == 3:
            return "half-odd"
        return "mixed"

    def sorted(self, reverse: bool = True) -> "TwistVector":
        return TwistVector(tuple(sorted(self.doubled, reverse=reverse)))

    def __str__(self) -> str:
        return " ".join(str(h) for h in self.entries)

    def __repr__(self) -> str:
        return f"TwistVector[{', '.join(str(h) for h in self.entries)}]"


ZERO = TwistVector((0, 0, 0))


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of the three ribbons.

    ``image[i-1]`` is π(i).  Acting on a vector gives
    ``[T[π(1)], T[π(2)], T[π(3)]]``.
    """

    image: tuple[int, int, int] = (1, 2, 3)

    def __post_init__(self):
        if sorted(self.image) != [1, 2, 3]:
            raise ValueError(f"not a bijection on {{1,2,3}}: {self.image}")

    def act(self, t: TwistVector) -> TwistVector:
        d = t.doubled
        return TwistVector(tuple(d[j - 1] for j in self.image))

    def compose(self, other: "Permutation") -> "Permutation":
        """Permutation acting as ``self.act(other.act(T))``."""
        return Permutation(tuple(other.image[i - 1] for i in self.image))

    def inverse(self) -> "Permutation":
        inv = [0, 0, 0]
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.image == (1, 2, 3)

    @property
    def is_even(self) -> bool:
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if self.image[i] > self.image[j]
        )
        return inversions % 2 == 0

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in (1, 2, 3):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.image[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.image[j - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


IDENTITY = Permutation()

_GEN_TWIST = {1: (1, 1, -1), 2: (-1, 1, 1), 3: (1, -1, 1)}
_GEN_PERM = {1: Permutation((2, 1, 3)), 2: Permutation((1, 3, 2)), 3: Permutation((3, 2, 1))}


@dataclass(frozen=True, order=True)
class Generator:
    index: int
    inverted: bool = False

    def __post_init__(self):
        if self.index not in (1, 2, 3):
            raise ValueError(f"generator index must be 1, 2 or 3, got {self.index}")

    @property
    def twist_vector(self) -> TwistVector:
        v = _GEN_TWIST[self.index]
        if self.inverted:
            v = tuple(-x for x in v)
        return TwistVector(v)

    @property
    def perm(self) -> Permutation:
        return _GEN_PERM[self.index]

    def inverse(self) -> "Generator":
        return Generator(self.index, not self.inverted)

    @property
    def token(self) -> str:
        return f"-{self.index}" if self.inverted else str(self.index)

    def __str__(self) -> str:
        return "σ" + "₁₂₃"[self.index - 1] + ("⁻¹" if self.inverted else "")


S1, S2, S3 = Generator(1), Generator(2), Generator(3)
S1_INV, S2_INV, S3_INV = S1.inverse(), S2.inverse(), S3.inverse()
GENERATORS = (S1, S2, S3, S1_INV, S2_INV, S3_INV)

_SUPERSCRIPT = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class BraidWord:
    """A word over σ₁, σ₂, σ₃ and their inverses, leftmost letter first."""

    letters: tuple[Generator, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Generator]) -> "BraidWord":
        return cls(tuple(letters))

    @classmethod
    def from_ints(cls, codes: Iterable[int]) -> "BraidWord":
        """``[1, -2]`` is σ₁σ₂⁻¹."""
        return cls(tuple(Generator(abs(c), c < 0) for c in codes))

    def to_ints(self) -> list[int]:
        return [-g.index if g.inverted else g.index for g in self.letters]

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(g.inverse() for g in reversed(self.letters)))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        return BraidWord(self.letters + other.letters)

    def __mul__(self, k: int) -> "BraidWord":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() * (-k)
        return BraidWord(self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __str__(self) -> str:
        return " ".join(g.token for g in self.letters)

    def pretty(self) -> str:
        """Run-length form in the usual notation, e.g. ``σ₂σ₁⁵σ₂⁶σ₃⁶``."""
        if not self.letters:
            return "1"
        out = []
        i = 0
        n = len(self.letters)
        while i < n:
            g = self.letters[i]
            j = i
            while j < n and self.letters[j] == g:
                j += 1
            run = j - i
            base = "σ" + "₁₂₃"[g.index - 1]
            power = -run if g.inverted else run
            out.append(base if power == 1 else base + str(power).translate(_SUPERSCRIPT))
            i = j
        return "".join(out)


def parse_word(text: str) -> BraidWord:
    """Read a word from whitespace-separated tokens such as ``"1 -2 3"``."""
    letters = []
    for pos, tok in enumerate(text.split()):
        inverted = tok.startswith("-")
        body = tok[1:] if inverted else tok
        if body not in ("1", "2", "3"):
            raise ParseError(f"bad braid token {tok!r}", position=pos)
        letters.append(Generator(int(body), inverted))
    return BraidWord(tuple(letters))


def parse_twist(items: str | Sequence[str]) -> TwistVector:
    """Read a twist vector from text like ``"3/2 1/2 -1/2"``."""
    tokens = items.split() if isinstance(items, str) else list(items)
    if len(tokens) != 3:
        raise ParseError(f"expected three twist entries, got {len(tokens)}")
    doubled = []
    for pos, tok in enumerate(tokens):
        try:
            doubled.append(HalfInt.of(tok).doubled)
        except ValueError as exc:
            raise ParseError(str(exc), position=pos) from None
    return TwistVector(tuple(doubled))


def apply_generator(g: Generator, t: TwistVector) -> TwistVector:
    """Act with one generator: permute the ribbons, then add the generator twist."""
    p = g.perm.act(t).doubled
    v = _GEN_TWIST[g.index]
    if g.inverted:
        return TwistVector((p[0] - v[0], p[1] - v[1], p[2] - v[2]))
    return TwistVector((p[0] + v[0], p[1] + v[1], p[2] + v[2]))


def evaluate_word(w: BraidWord, t0: TwistVector = ZERO) -> TwistVector:
    """Pure twist word of the belt ``(w, t0)``; the rightmost letter acts first."""
    t = t0
    for g in reversed(w.letters):
        t = apply_generator(g, t)
    return t


def word_permutation(w: BraidWord) -> Permutation:
    p = IDENTITY
    for g in w.letters:
        p = p.compose(g.perm)
    return p


@dataclass(frozen=True)
class Belt:
    word: BraidWord = BraidWord()
    twists: TwistVector = ZERO

    def pure_twist(self) -> TwistVector:
        return evaluate_word(self.word, self.twists)


def compose_belts(b1: Belt, b2: Belt) -> Belt:
    """Stack ``b1`` on top of ``b2``; the twists of ``b1`` are carried through the braiding of ``b2``."""
    twists = word_permutation(b2.word).act(b1.twists) + b2.twists
    return Belt(b1.word + b2.word, twists)


def is_orientable(t: TwistVector) -> bool:
    return t.parity_class != "mixed"


def is_pure_belt(t: TwistVector) -> bool:
    """True for integer twists that are all even or all odd."""
    if any(d % 2 for d in t.doubled):
        return False
    return len({(d // 2) % 2 for d in t.doubled}) == 1


def isotopic(b1: Belt, b2: Belt) -> bool:
    return b1.pure_twist() == b2.pure_twist()
