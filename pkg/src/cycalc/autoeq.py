"""Word algebra of autoequivalences and its canonical normal form.

The autoequivalences tracked here all live in one abelian group

    Z x Z x Z/2 x Z/2

generated by the homological shift ``[1]``, the twist by the polarizing line
bundle ``L``, an order-2 involution ``tau`` (covering involution) and an
order-2 character ``chi`` (stacky character).  Commutativity holds because a
Serre functor commutes with every autoequivalence, the spherical twist
commutes with ``L``, and the involution fixes ``L``; all composites resolved
by this module are generated by Serre functors, twists by ``L``, ``tau`` and
``chi``, so no ordering information needs to be kept.

Two layers are provided:

* :class:`NormalForm` - an element of the resolved group, with exact integer
  components (Python ints never overflow, so parameter sweeps are safe).
* :class:`Word` - a formal product of symbolic generators with integer
  exponents.  Spherical twists, Serre functors and the two standard
  composites stay symbolic until a geometric construction supplies a
  substitution table; :func:`resolve` then collapses a word to a normal form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping


class Generator(enum.Enum):
    """Symbols that may occur in a word.

    The first four resolve intrinsically; the last four are placeholders
    whose meaning depends on the spherical construction:

    * ``SPHERICAL_TWIST`` - twist T induced on the source by the spherical
      pushforward,
    * ``SERRE`` - Serre functor S of the source,
    * ``COMP_TWIST`` - T composed with the degree-d line twist; its powers
      become pure shifts (times parity factors) once resolved,
    * ``SERRE_TWIST`` - S composed with T and the length-m line twist.
    """

    SHIFT = "shift"
    LINE_TWIST = "line_twist"
    INVOLUTION = "involution"
    CHARACTER = "character"
    SPHERICAL_TWIST = "spherical_twist"
    SERRE = "serre"
    COMP_TWIST = "comp_twist"
    SERRE_TWIST = "serre_twist"


#: Generators that resolve without a substitution table.
BASE_GENERATORS = frozenset(
    {Generator.SHIFT, Generator.LINE_TWIST, Generator.INVOLUTION, Generator.CHARACTER}
)


@dataclass(frozen=True)
class NormalForm:
    """Element (shift, L-twist, tau parity, chi parity) of the resolved group.

    ``tau`` and ``chi`` are stored reduced mod 2; composition is componentwise
    addition.  Instances are immutable and safe to share across threads.
    """

    shift: int = 0
    ltwist: int = 0
    tau: int = 0
    chi: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "tau", self.tau % 2)
        object.__setattr__(self, "chi", self.chi % 2)

    @classmethod
    def identity(cls) -> "NormalForm":
        return cls(0, 0, 0, 0)

    def compose(self, other: "NormalForm") -> "NormalForm":
        return NormalForm(
            self.shift + other.shift,
            self.ltwist + other.ltwist,
            self.tau + other.tau,
            self.chi + other.chi,
        )

    def power(self, k: int) -> "NormalForm":
        """k-fold composition; k may be negative or zero."""
        return NormalForm(k * self.shift, k * self.ltwist, k * self.tau, k * self.chi)

    def inverse(self) -> "NormalForm":
        return self.power(-1)

    @property
    def is_identity(self) -> bool:
        return self == NormalForm.identity()

    @property
    def is_pure_shift(self) -> bool:
        """True when the form is ``[shift]`` with no twist and no parity."""
        return self.ltwist == 0 and self.tau == 0 and self.chi == 0

    def __str__(self) -> str:
        parts = []
        if self.ltwist:
            parts.append(f"L^{self.ltwist}")
        parts.append(f"τ^{self.tau} χ^{self.chi} [{self.shift}]")
        return " ".join(parts)


IDENTITY = NormalForm.identity()

#: Normal forms of the intrinsically resolvable generators.
_BASE_FORMS: Mapping[Generator, NormalForm] = {
    Generator.SHIFT: NormalForm(shift=1),
    Generator.LINE_TWIST: NormalForm(ltwist=1),
    Generator.INVOLUTION: NormalForm(tau=1),
    Generator.CHARACTER: NormalForm(chi=1),
}


@dataclass(frozen=True)
class Word:
    """Formal product of generator powers; the empty word is the identity.

    Exponents may be any integer.  Because every generator resolves into the
    same abelian group, the factor order carries no information, and
    :func:`resolve` is invariant under permutations of ``factors``.
    """

    factors: tuple[tuple[Generator, int], ...] = ()

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.factors + other.factors)


def resolve(word: Word, table: Mapping[Generator, NormalForm] | None = None) -> NormalForm:
    """Collapse a word to its normal form.

    ``table`` supplies normal forms for the symbolic generators (spherical
    twist, Serre functor and their composites); base generators need no
    entry.  Raises :class:`~cycalc.errors.UnresolvedGenerator` when a
    symbolic factor has no substitution.
    """
    from .errors import UnresolvedGenerator

    result = IDENTITY
    for gen, exponent in word.factors:
        form = _BASE_FORMS.get(gen)
        if form is None:
            if table is None or gen not in table:
                raise UnresolvedGenerator(
                    f"generator {gen.value!r} has no substitution entry"
                )
            form = table[gen]
        result = result.compose(form.power(exponent))
    return result
