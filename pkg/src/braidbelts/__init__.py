"""Exact algebra of braided 3-belts: twist invariants, braid-only normal
forms, Jones polynomials of knotted boundaries and particle labels."""

from .belt import (
    GENERATORS,
    IDENTITY,
    S1,
    S1_INV,
    S2,
    S2_INV,
    S3,
    S3_INV,
    ZERO,
    Belt,
    BraidWord,
    Generator,
    HalfInt,
    Permutation,
    TwistVector,
    apply_generator,
    compose_belts,
    evaluate_word,
    is_orientable,
    is_pure_belt,
    isotopic,
    parse_twist,
    parse_word,
    word_permutation,
)
from .canonical import braid_only_word, canonical_pretty, coset_rep, pure_exponents
from .errors import (
    BeltError,
    ConflictingName,
    EvenLength,
    InexactDivision,
    NonIntegerTwists,
    NonOrientable,
    NonUnitNegativePower,
    NotHalfOdd,
    NotPure,
    ParseError,
    Unsupported,
)
from .jones import (
    boundary_components,
    boundary_report,
    is_knot_boundary_word,
    jones_closed,
    jones_skein_oracle,
    jones_two_ribbon,
)
from .knots import KnotRecord, KnotTable, identify, load_table_csv, seed_table
from .laurent import LaurentPoly
from .particles import finkelstein_label, helon_charge

__version__ = "0.1.0"
