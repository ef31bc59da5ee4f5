"""Hodge diamonds via graded quotient rings, and Hochschild homology.

For a smooth degree-D hypersurface X in a (weighted) projective space
P(w_0, ..., w_n) admitting a Fermat-type member (w_i | D for all i), the
primitive middle Hodge numbers are graded pieces of the quotient of the
coordinate ring by the partial derivatives of the defining equation.  For
the Fermat member that quotient is a tensor product of truncated polynomial
rings, so its Poincare series is the exact polynomial

    prod_i (1 - t^(D - w_i)) / (1 - t^(w_i)),

and the primitive part of h^{dim - q, q} is its coefficient in degree
(q+1) D - sum(w).  Off the middle row the diamond agrees with the ambient
space (h^{p,p} = 1, all else 0), and when the dimension is even the middle
(p, p) spot gains one non-primitive class from the ambient hyperplane
section.  Hodge numbers are constant in smooth families, so the Fermat
member's numbers are reported for the whole family; smoothness of the chosen
member itself is assumed, never checked.

Double covers of P^n branched in degree 2d are handled as degree-2d
hypersurfaces in P(1, ..., 1, d).

Hochschild homology of the derived category is read off the diamond,

    HH_k = sum over q - p = k of h^{p,q},

and semiorthogonal components subtract their exceptional blocks: each of the
m - d induced blocks of rank r contributes r to degree 0 and nothing
elsewhere.  A nonzero component of an n-Calabi-Yau flavor must have nonzero
homology in degree -n (that group equals its zeroth Hochschild cohomology),
which is the check :func:`cy_hh_check` performs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Mapping, Sequence

from .catalog import LefschetzBase
from .constructions import ConstructionKind
from .engine import CaseResult
from .errors import (
    HodgeUnsupported,
    InvalidParams,
    InvalidWeights,
    NegativeDimension,
    NotIntegerCY,
)


@dataclass(frozen=True)
class PoincareSeries:
    """Finitely supported series with nonnegative integer coefficients."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def total(self) -> int:
        return sum(self.coefficients)


def _validate_weights(weights: Sequence[int], degree: int) -> None:
    if not weights:
        raise InvalidWeights("weight list must be nonempty")
    for w in weights:
        if w < 1:
            raise InvalidWeights(f"weights must be positive, got {w}")
        if degree % w != 0:
            raise InvalidWeights(
                f"weight {w} does not divide the degree {degree}; "
                "no Fermat-type member exists"
            )
        if degree <= w:
            raise InvalidWeights(f"degree {degree} must exceed every weight, got weight {w}")


def jacobian_poincare(weights: Sequence[int], degree: int) -> PoincareSeries:
    """Poincare series of the Fermat member's partial-derivative quotient.

    Each variable of weight w contributes the truncated geometric factor
    1 + t^w + ... + t^(D - 2w); the product is computed by exact integer
    convolution.  Top degree is sum(D - 2 w_i).
    """
    _validate_weights(weights, degree)
    series = [1]
    for w in weights:
        steps = degree // w - 1  # number of monomials 1, t^w, ..., t^((steps-1) w)
        product = [0] * (len(series) + (steps - 1) * w)
        for exponent in range(steps):
            offset = exponent * w
            for i, coeff in enumerate(series):
                product[offset + i] += coeff
        series = product
    return PoincareSeries(tuple(series))


def brute_force_jacobian_dim(weights: Sequence[int], degree: int, target: int) -> int:
    """Independent oracle: count monomials of weighted degree ``target``.

    Counts exponent vectors (e_0, ..., e_n) with e_i <= D/w_i - 2 and
    sum(w_i e_i) = target by a memoized depth-first enumeration over suffixes.
    Deliberately avoids polynomial arithmetic so that it checks
    :func:`jacobian_poincare` from the outside.
    """
    _validate_weights(weights, degree)
    if target < 0:
        return 0

    @cache
    def count(index: int, remaining: int) -> int:
        if index == len(weights):
            return 1 if remaining == 0 else 0
        w = weights[index]
        cap = degree // w - 2
        total = 0
        for e in range(min(cap, remaining // w) + 1):
            total += count(index + 1, remaining - e * w)
        return total

    return count(0, target)


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers h^{p,q} of a smooth projective variety or V-variety.

    Construction enforces conjugation symmetry h^{p,q} = h^{q,p}, duality
    h^{p,q} = h^{dim-p, dim-q}, and h^{0,0} = 1.
    """

    dim_x: int
    hodge: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.dim_x
        if len(self.hodge) != n + 1 or any(len(row) != n + 1 for row in self.hodge):
            raise AssertionError("hodge table must be a (dim+1) x (dim+1) grid")
        if self.hodge[0][0] != 1:
            raise AssertionError("h^{0,0} must be 1")
        for p in range(n + 1):
            for q in range(n + 1):
                if self.hodge[p][q] != self.hodge[q][p]:
                    raise AssertionError(f"h^{{{p},{q}}} != h^{{{q},{p}}}")
                if self.hodge[p][q] != self.hodge[n - p][n - q]:
                    raise AssertionError(f"h^{{{p},{q}}} breaks duality")

    def h(self, p: int, q: int) -> int:
        if 0 <= p <= self.dim_x and 0 <= q <= self.dim_x:
            return self.hodge[p][q]
        return 0

    def middle_row(self) -> tuple[int, ...]:
        """h^{dim-q, q} for q = 0, ..., dim."""
        return tuple(self.hodge[self.dim_x - q][q] for q in range(self.dim_x + 1))

    def total(self) -> int:
        return sum(sum(row) for row in self.hodge)


def _diamond_from_middle(dim_x: int, primitive: Sequence[int]) -> HodgeDiamond:
    """Assemble a hypersurface-type diamond from its primitive middle row."""
    n = dim_x
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        if 2 * p != n:
            table[p][p] = 1
    for q in range(n + 1):
        table[n - q][q] += primitive[q]
    if n % 2 == 0:
        table[n // 2][n // 2] += 1
    return HodgeDiamond(dim_x=n, hodge=tuple(tuple(row) for row in table))


def weighted_hypersurface_diamond(weights: Sequence[int], degree: int) -> HodgeDiamond:
    """Diamond of a quasi-smooth degree-D hypersurface in P(weights)."""
    if len(weights) < 3:
        raise InvalidParams("need an ambient space of dimension at least 2")
    dim_x = len(weights) - 2
    series = jacobian_poincare(weights, degree)
    shift = sum(weights)
    primitive = [series.coefficient((q + 1) * degree - shift) for q in range(dim_x + 1)]
    return _diamond_from_middle(dim_x, primitive)


def hodge_hypersurface(n: int, d: int) -> HodgeDiamond:
    """Diamond of a smooth degree-d hypersurface in P^n (dimension n-1)."""
    if n < 2:
        raise InvalidParams(f"ambient projective space must have n >= 2, got {n}")
    if d < 1:
        raise InvalidParams(f"degree must be positive, got {d}")
    if d == 1:
        # a hyperplane is P^(n-1); the derivative quotient ring vanishes
        return _diamond_from_middle(n - 1, [0] * n)
    return weighted_hypersurface_diamond((1,) * (n + 1), d)


def hodge_double_cover(n: int, d: int) -> HodgeDiamond:
    """Diamond of a double cover of P^n branched in degree 2d (dimension n).

    Realized as the degree-2d hypersurface in P(1, ..., 1, d) with n+1 unit
    weights.
    """
    if n < 2:
        raise InvalidParams(f"base projective space must have n >= 2, got {n}")
    if d < 1:
        raise InvalidParams(f"degree must be positive, got {d}")
    return weighted_hypersurface_diamond((1,) * (n + 1) + (d,), 2 * d)


@dataclass(frozen=True)
class HHProfile:
    """Hochschild homology dimensions by degree; zero entries are dropped."""

    dims: Mapping[int, int]

    def __post_init__(self) -> None:
        cleaned = {k: v for k, v in self.dims.items() if v != 0}
        if any(v < 0 for v in cleaned.values()):
            raise NegativeDimension(f"negative homology dimension in {cleaned}")
        object.__setattr__(self, "dims", dict(sorted(cleaned.items())))

    def dim(self, k: int) -> int:
        return self.dims.get(k, 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def __str__(self) -> str:
        if not self.dims:
            return "0"
        return " ".join(f"{k}:{v}" for k, v in self.dims.items())


def hkr(diamond: HodgeDiamond) -> HHProfile:
    """Hochschild homology of the derived category: HH_k = sum h^{p, p+k}."""
    dims: dict[int, int] = {}
    n = diamond.dim_x
    for p in range(n + 1):
        for q in range(n + 1):
            value = diamond.hodge[p][q]
            if value:
                dims[q - p] = dims.get(q - p, 0) + value
    return HHProfile(dims)


def hh_component(hh_x: HHProfile, base: LefschetzBase, d: int) -> HHProfile:
    """Homology of the orthogonal component, by block subtraction.

    Homology is additive over semiorthogonal decompositions and each of the
    m - d exceptional blocks contributes rank_b in degree 0.
    """
    blocks = (base.length_m - d) * base.rank_b
    if blocks < 0:
        raise NegativeDimension(f"degree {d} exceeds the decomposition length")
    if hh_x.dim(0) < blocks:
        raise NegativeDimension(
            f"cannot subtract {blocks} exceptional classes from HH_0 = {hh_x.dim(0)}"
        )
    dims = dict(hh_x.dims)
    dims[0] = dims.get(0, 0) - blocks
    return HHProfile(dims)


@dataclass(frozen=True)
class HHCheckReport:
    """Outcome of the degree -n nonvanishing check for an integer CY case.

    ``passed`` is the nonvanishing requirement.  For hypersurfaces in
    projective space the report additionally records whether the value is
    one-dimensional; that observation holds whenever the dimension is
    nonzero (a single middle Hodge group, one-dimensional by the residue
    description), while degree-2 sections land in degree 0 where the two
    spinor classes of an even quadric contribute as well.
    """

    n_cy: int
    value: int
    nonvanishing: bool
    expect_one: bool
    is_one: bool | None

    @property
    def passed(self) -> bool:
        return self.nonvanishing


def cy_hh_check(case: CaseResult, hh_a: HHProfile) -> HHCheckReport:
    """Check HH_{-n}(component) != 0 for an integer n-Calabi-Yau case.

    The reported value equals the component's zeroth Hochschild cohomology.
    """
    if not case.is_integer_cy or case.witness is None:
        raise NotIntegerCY(
            f"case {case.base.id} {case.kind.value} d={case.d} has no integer witness"
        )
    n_cy = case.witness.p
    value = hh_a.dim(-n_cy)
    expect_one = (
        case.base.id == "pn" and case.kind is ConstructionKind.DIVISOR and n_cy != 0
    )
    return HHCheckReport(
        n_cy=n_cy,
        value=value,
        nonvanishing=value > 0,
        expect_one=expect_one,
        is_one=(value == 1) if expect_one else None,
    )


def diamond_for_case(case: CaseResult) -> HodgeDiamond:
    """Diamond of the total space X for a supported case.

    Supported: divisors and double covers over ``pn``, and divisors over
    ``wpn`` whose degree is divisible by every weight.  Root-stack cases are
    rejected: the stack's homology includes twisted sectors that this module
    does not model.
    """
    base = case.base
    if case.kind is ConstructionKind.ROOT_STACK:
        raise HodgeUnsupported("root-stack cases carry twisted sectors; not computed")
    if base.id == "pn":
        n = base.parameters["n"]
        if case.kind is ConstructionKind.DIVISOR:
            return hodge_hypersurface(n, case.d)
        return hodge_double_cover(n, case.d)
    if base.id == "wpn" and case.kind is ConstructionKind.DIVISOR:
        weights = tuple(
            base.parameters[k] for k in sorted(base.parameters, key=lambda s: int(s[1:]))
        )
        return weighted_hypersurface_diamond(weights, case.d)
    raise HodgeUnsupported(
        f"no Hodge machinery for base {base.id!r} with construction {case.kind.value!r}"
    )


@dataclass(frozen=True)
class HHPipelineResult:
    diamond: HodgeDiamond
    hh_total: HHProfile
    hh_component: HHProfile
    check: HHCheckReport | None


def hh_pipeline(case: CaseResult) -> HHPipelineResult:
    """Diamond -> HH(D(X)) -> HH(component) -> nonvanishing check."""
    diamond = diamond_for_case(case)
    hh_x = hkr(diamond)
    hh_a = hh_component(hh_x, case.base, case.d)
    check = cy_hh_check(case, hh_a) if case.is_integer_cy else None
    return HHPipelineResult(diamond=diamond, hh_total=hh_x, hh_component=hh_a, check=check)
