"""Serre-functor engine: power evaluation, witnesses, sweeps, cross-check.

For a component cut out by blocks of a length-m rectangular decomposition via
a degree-d spherical construction, the central identity evaluated here is

    S^(d/c)  =  comp_twist^(-m/c) . serre_twist^(d/c),      c = gcd(d, m),

where S is the Serre functor of the component.  Both sides live in the
abelian group Z x Z x Z/2 x Z/2 of :mod:`cycalc.autoeq`, so the evaluation is
exact integer arithmetic.  Two independent code paths compute it:

* :func:`serre_power` builds the symbolic word and resolves it through the
  construction's substitution table;
* :func:`closed_form` evaluates the per-construction closed expression
  directly (shift and parity arithmetic, no word algebra).

:func:`verify_cross_check` runs both over the whole catalog and counts
mismatches; agreement is this package's main internal consistency guarantee.

A witness (p, q) with S^q = [p] is extracted from the resolved power: if the
parity components vanish the power itself is a pure shift; otherwise its
square is, because the involution and the character both have order two.  The
component is an integer Calabi-Yau category precisely when q = 1, i.e. when S
itself is a pure shift.  The ratio p/q may reduce to an integer without q
being 1 (for a quartic fourfold S^2 = [6]); such cases are fractional, not
integer, and the two notions are kept distinct throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .autoeq import Generator, NormalForm, Word, resolve
from .catalog import LefschetzBase, builtin
from .constructions import ALL_KINDS, ConstructionKind, substitution_table
from .errors import CycalcError, NotPureShiftable

KIND_ORDER = {kind: index for index, kind in enumerate(ALL_KINDS)}


@dataclass(frozen=True)
class FractionalCYWitness:
    """Integers p, q with S^q = [p] for the component's Serre functor S.

    The witness is produced by the power reduction and is not claimed to be
    minimal; q is d/c when the resolved power is already a pure shift and
    2d/c otherwise.
    """

    p: int
    q: int


@dataclass(frozen=True)
class CaseResult:
    """Full analysis of one (base, construction, degree) case."""

    base: LefschetzBase
    kind: ConstructionKind
    d: int
    c: int
    serre_power_nf: NormalForm | None
    witness: FractionalCYWitness | None
    cy_dimension: Fraction | None
    is_integer_cy: bool
    component_is_whole: bool
    dim_x: int | None
    error: str | None = None

    @property
    def power(self) -> int:
        """Exponent q0 = d/c of the Serre functor the normal form describes."""
        return self.d // self.c

    def sort_key(self) -> tuple:
        return (self.base.id, self.base.param_key(), KIND_ORDER[self.kind], self.d)


def serre_power(base: LefschetzBase, kind: ConstructionKind, d: int) -> NormalForm:
    """Resolve the (d/c)-th Serre power through word algebra."""
    m = base.length_m
    c = gcd(d, m)
    table = substitution_table(kind, d, base)
    word = Word(
        (
            (Generator.COMP_TWIST, -(m // c)),
            (Generator.SERRE_TWIST, d // c),
        )
    )
    return resolve(word, table.entries)


def closed_form(base: LefschetzBase, kind: ConstructionKind, d: int) -> NormalForm:
    """Evaluate the (d/c)-th Serre power by direct arithmetic.

    divisor:       [ (dim M + 1) d/c - 2m/c ]
    double cover:  tau^((m-d)/c) [ (dim M + 1) d/c - m/c ]
    root stack:    chi^(m/c)     [ (dim M + 1) d/c - m/c ]
    """
    # run the same validation as the word path
    substitution_table(kind, d, base)
    m = base.length_m
    n = base.dim_m
    c = gcd(d, m)
    if kind is ConstructionKind.DIVISOR:
        return NormalForm(shift=((n + 1) * d - 2 * m) // c)
    if kind is ConstructionKind.DOUBLE_COVER:
        return NormalForm(shift=((n + 1) * d - m) // c, tau=(m - d) // c)
    return NormalForm(shift=((n + 1) * d - m) // c, chi=m // c)


def extract_witness(nf: NormalForm, q0: int) -> FractionalCYWitness:
    """Turn the normal form of S^q0 into a witness (p, q) with S^q = [p].

    Parity factors square away, so a form with nonzero tau or chi witnesses
    the property at exponent 2*q0.  A nonzero line twist cannot be removed by
    taking powers and is rejected.
    """
    if q0 < 1:
        raise ValueError(f"q0 must be positive, got {q0}")
    if nf.ltwist != 0:
        raise NotPureShiftable(
            f"normal form {nf} has a line-twist component; no power is a shift"
        )
    if nf.tau == 0 and nf.chi == 0:
        return FractionalCYWitness(p=nf.shift, q=q0)
    return FractionalCYWitness(p=2 * nf.shift, q=2 * q0)


def _integrality_expected(kind: ConstructionKind, d: int, m: int) -> bool:
    """Divisibility form of the integer-CY condition, per construction.

    divisor: d | m;  double cover: d | m and m/d odd;  root: d | m, m/d even.
    """
    if m % d != 0:
        return False
    if kind is ConstructionKind.DIVISOR:
        return True
    if kind is ConstructionKind.DOUBLE_COVER:
        return (m // d) % 2 == 1
    return (m // d) % 2 == 0


def analyze(base: LefschetzBase, kind: ConstructionKind, d: int) -> CaseResult:
    """Run the full pipeline for one case."""
    m = base.length_m
    c = gcd(d, m)
    nf = serre_power(base, kind, d)
    table = substitution_table(kind, d, base)
    witness = extract_witness(nf, d // c)
    cy_dimension = Fraction(witness.p, witness.q)
    is_integer = witness.q == 1
    if is_integer != _integrality_expected(kind, d, m):
        raise AssertionError(
            f"integrality witness disagrees with the divisibility criterion "
            f"for {base.id} {kind.value} d={d}"
        )
    return CaseResult(
        base=base,
        kind=kind,
        d=d,
        c=c,
        serre_power_nf=nf,
        witness=witness,
        cy_dimension=cy_dimension,
        is_integer_cy=is_integer,
        component_is_whole=(d == m),
        dim_x=table.dim_x,
    )


def _error_case(base: LefschetzBase, kind: ConstructionKind, d: int, message: str) -> CaseResult:
    return CaseResult(
        base=base,
        kind=kind,
        d=d,
        c=gcd(d, base.length_m),
        serre_power_nf=None,
        witness=None,
        cy_dimension=None,
        is_integer_cy=False,
        component_is_whole=(d == base.length_m),
        dim_x=None,
        error=message,
    )


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

#: Sweep floor for the hyperplane-section family.  Quadric sections of
#: IGr(2,5) are the fourfold members of the same double-cover-of-Gr(2,5)
#: series already represented in the catalog sweeps; starting at n = 3 keeps
#: the builtin enumeration to one representative per family.  igr2 with n = 2
#: remains available through explicit analysis and custom bounds.
IGR2_SWEEP_MIN_N = 3


@dataclass(frozen=True)
class SweepBounds:
    """Finite enumeration window for catalog sweeps.

    ``kinds`` defaults to the two honest-variety constructions; root-stack
    cases duplicate double-cover numerics with a character in place of the
    involution and are opt-in.  Weighted projective bases are likewise opt-in
    (all-ones weights duplicate ``pn`` and the weighted family is infinite in
    spirit); when enabled, weight multisets are enumerated in sorted order up
    to ``max_weight_sum``.
    """

    max_n: int = 30
    max_s: int = 5
    max_weight_sum: int = 30
    include_weighted: bool = False
    kinds: tuple[ConstructionKind, ...] = (
        ConstructionKind.DIVISOR,
        ConstructionKind.DOUBLE_COVER,
    )
    families: tuple[str, ...] | None = None
    igr2_min_n: int = IGR2_SWEEP_MIN_N
    extra_bases: tuple[LefschetzBase, ...] = ()

    def wants(self, family_id: str) -> bool:
        return self.families is None or family_id in self.families


def _weight_multisets(total_max: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing weight tuples (w0 <= w1 <= ...) with sum <= total_max."""

    def extend(prefix: tuple[int, ...], remaining: int, minimum: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) >= 2:
            yield prefix
        for w in range(minimum, remaining + 1):
            yield from extend(prefix + (w,), remaining - w, w)

    yield from extend((), total_max, 1)


def iter_sweep_bases(bounds: SweepBounds) -> Iterator[LefschetzBase]:
    """Deterministic enumeration of catalog bases within the bounds.

    Grassmannians are canonicalized to 2 <= k <= n-k: Gr(1,n) has the same
    numerics as P^(n-1) and Gr(n-k,n) the same as Gr(k,n), so wider ranges
    would only duplicate rows.
    """
    if bounds.wants("pn"):
        for n in range(1, bounds.max_n + 1):
            yield builtin("pn", {"n": n})
    if bounds.wants("wpn") and bounds.include_weighted:
        for weights in sorted(_weight_multisets(bounds.max_weight_sum)):
            yield builtin("wpn", {f"w{i}": w for i, w in enumerate(weights)})
    if bounds.wants("quadric4s2"):
        for s in range(1, bounds.max_s + 1):
            yield builtin("quadric4s2", {"s": s})
    if bounds.wants("gr"):
        for n in range(4, bounds.max_n + 1):
            for k in range(2, n // 2 + 1):
                if gcd(k, n) == 1:
                    yield builtin("gr", {"k": k, "n": n})
    if bounds.wants("ogr2"):
        for n in range(2, bounds.max_n + 1):
            yield builtin("ogr2", {"n": n})
    if bounds.wants("igr2"):
        for n in range(bounds.igr2_min_n, bounds.max_n + 1):
            yield builtin("igr2", {"n": n})
    for fixed_id in ("sgr36", "ogr510", "g2gr", "gr26_L2", "p3xp3"):
        if bounds.wants(fixed_id):
            yield builtin(fixed_id)
    for base in bounds.extra_bases:
        if bounds.families is None or base.id in bounds.families:
            yield base


def iter_cases(bounds: SweepBounds) -> Iterator[CaseResult]:
    """All (base, kind, d) analyses in the window; errors recorded inline."""
    for base in iter_sweep_bases(bounds):
        for kind in bounds.kinds:
            for d in range(1, base.length_m + 1):
                try:
                    yield analyze(base, kind, d)
                except CycalcError as exc:
                    yield _error_case(base, kind, d, str(exc))


def sweep(
    bounds: SweepBounds | None = None,
    cy_dim: Fraction | int | None = None,
    integer_only: bool = False,
) -> list[CaseResult]:
    """Enumerate cases, optionally filtered by Calabi-Yau dimension.

    An integral ``cy_dim`` selects integer Calabi-Yau components of that
    dimension (q = 1 witnesses only); a non-integral one selects fractional
    components with that exact reduced dimension.  Dimension filters and
    ``integer_only`` look at proper components only, so d = m rows (where the
    component is the whole derived category) are excluded.  The result is
    sorted by (base id, parameters, construction, degree).
    """
    bounds = bounds or SweepBounds()
    if cy_dim is not None:
        cy_dim = Fraction(cy_dim)
    results = []
    for case in iter_cases(bounds):
        if cy_dim is not None or integer_only:
            if case.error is not None or case.component_is_whole:
                continue
            if integer_only and not case.is_integer_cy:
                continue
            if cy_dim is not None:
                if cy_dim.denominator == 1:
                    if not (case.is_integer_cy and case.cy_dimension == cy_dim):
                        continue
                elif case.cy_dimension != cy_dim:
                    continue
        results.append(case)
    results.sort(key=CaseResult.sort_key)
    return results


# ---------------------------------------------------------------------------
# Cross-check and sweep-level reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    cases: int
    mismatches: tuple[tuple[str, tuple, str, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_cross_check(bounds: SweepBounds | None = None) -> VerifyReport:
    """Compare the word-algebra path against the closed forms everywhere."""
    if bounds is None:
        bounds = SweepBounds(kinds=ALL_KINDS)
    total = 0
    mismatches = []
    for base in iter_sweep_bases(bounds):
        for kind in bounds.kinds:
            for d in range(1, base.length_m + 1):
                total += 1
                try:
                    via_word = serre_power(base, kind, d)
                    via_formula = closed_form(base, kind, d)
                except CycalcError:
                    continue
                if via_word != via_formula:
                    mismatches.append((base.id, base.param_key(), kind.value, d))
    return VerifyReport(cases=total, mismatches=tuple(mismatches))


def negative_dimension_cases(cases: Iterable[CaseResult]) -> list[CaseResult]:
    """Integer-CY rows with negative dimension.

    If the nonnegativity expectation for Calabi-Yau components holds, every
    such component must vanish; within the builtin catalog these rows are
    exactly the hyperplane-type cases (divisor, d = 1) whose induced blocks
    already exhaust the derived category.
    """
    return [
        case
        for case in cases
        if case.error is None
        and case.is_integer_cy
        and not case.component_is_whole
        and case.witness is not None
        and case.witness.p < 0
    ]
