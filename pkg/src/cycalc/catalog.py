"""Builtin catalog of rectangular Lefschetz bases, plus a JSON file format.

A base records the numerical data of a rectangular Lefschetz decomposition

    D(M) = < B, B(1), ..., B(m-1) >      (twists by a line bundle L)

namely dim M, the length m, and rk B (the number of exceptional objects
generating one block).  The actual objects are never represented; every
computation downstream only needs these counts together with the standing
hypothesis that the canonical bundle of M is L^-m.

Builtin families
----------------

========== ============================================= ========= ====== =====
id         variety                                       dim M     m      rk B
========== ============================================= ========= ====== =====
pn         projective space P^n                          n         n+1    1
wpn        weighted projective stack P(w_0,...,w_n)      n         sum w  1
quadric4s2 smooth quadric of dimension 4s+2, L = O(2s+1) 4s+2      2      2s+2
gr         Grassmannian Gr(k,n), gcd(k,n) = 1            k(n-k)    n      C(n,k)/n
ogr2       orthogonal Grassmannian OGr(2,2n+1)           4n-5      2n-2   n
sgr36      symplectic Grassmannian SGr(3,6)              6         4      2
ogr510     spinor tenfold OGr_+(5,10)                    10        8      2
g2gr       adjoint Grassmannian of type G2               5         3      2
igr2       hyperplane section of Gr(2,2n+1)              4n-3      2n     n
gr26_L2    Gr(2,6) with L = O(2)                         8         3      5
p3xp3      P^3 x P^3 with L = O(1,1)                     6         4      4
========== ============================================= ========= ====== =====

Dimension counts for the two infinite isotropic families are the standard
ones: OGr(2,2n+1) has dimension 2(2n+1) - 3 - (2+1) + 1 - 1 = 4n - 5 (lines on
a quadric of dimension 2n-1), and a hyperplane section of the (4n-2)-fold
Gr(2,2n+1) has dimension 4n-3.  The ``p3xp3`` entry is a companion of the
other fixed entries (its quadric sections behave exactly like those of the
homogeneous fixed entries) rather than a member of an infinite family here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Callable, Iterable, Mapping

from .errors import InvalidParams, ParseError, UnknownBase, ValidationError


@dataclass(frozen=True)
class LefschetzBase:
    """Numerical data of one rectangular Lefschetz decomposition."""

    id: str
    display_name: str
    dim_m: int
    length_m: int
    rank_b: int
    line_bundle_note: str
    omega_is_l_minus_m: bool = True
    parameters: Mapping[str, int] = field(default_factory=dict)
    chi_stable: bool = True

    def __post_init__(self) -> None:
        if self.length_m < 1:
            raise ValidationError(f"length_m must be >= 1, got {self.length_m}")
        if self.rank_b < 1:
            raise ValidationError(f"rank_b must be >= 1, got {self.rank_b}")
        if self.dim_m < 0:
            raise ValidationError(f"dim_m must be >= 0, got {self.dim_m}")

    @property
    def hodge_supported(self) -> bool:
        """Hodge machinery exists only for (weighted) projective spaces."""
        return self.id in ("pn", "wpn")

    def param_key(self) -> tuple[int, ...]:
        """Canonical parameter tuple used as a deterministic sort key."""
        family = FAMILIES.get(self.id)
        if family is not None and family.param_names:
            if self.id == "wpn":
                return tuple(
                    self.parameters[k]
                    for k in sorted(self.parameters, key=lambda s: int(s[1:]))
                )
            return tuple(self.parameters[name] for name in family.param_names)
        return tuple(v for _, v in sorted(self.parameters.items()))


def fonarev_rank(k: int, n: int) -> int:
    """Number of exceptional objects in one block for Gr(k,n), coprime k, n.

    Counts weakly decreasing diagrams (a_1 >= ... >= a_{k-1} >= 0) with
    a_p < (n-k)(k-p)/k.  Coprimality makes every bound non-integral, so the
    strict inequality is a_p <= floor((n-k)(k-p)/k).  Counting is done by a
    prefix-sum dynamic program over rows, which stays cheap for n in the
    thousands; the binomial identity  fonarev_rank(k,n) * n = C(n,k)  serves
    as an independent cross-check in the test suite.
    """
    if not (1 <= k < n):
        raise InvalidParams(f"need 1 <= k < n, got k={k}, n={n}")
    if gcd(k, n) != 1:
        raise InvalidParams(f"(k, n) must be coprime, got k={k}, n={n}")
    if k == 1:
        return 1
    bounds = [((n - k) * (k - p)) // k for p in range(1, k)]
    # ways[v] = number of valid suffixes whose current row equals v
    ways = [1] * (bounds[-1] + 1)
    for p in range(k - 3, -1, -1):
        prefix = [0] * (bounds[p] + 1)
        running = 0
        for v in range(bounds[p] + 1):
            if v < len(ways):
                running += ways[v]
            prefix[v] = running
        ways = prefix
    return sum(ways)


@dataclass(frozen=True)
class Family:
    """One builtin family: metadata plus an instantiation rule."""

    id: str
    display_name: str
    param_names: tuple[str, ...]
    dim_formula: str
    length_formula: str
    rank_formula: str
    line_bundle_note: str
    make: Callable[[Mapping[str, int]], LefschetzBase]


def _require_params(family_id: str, params: Mapping[str, int], names: tuple[str, ...]) -> None:
    missing = [name for name in names if name not in params]
    if missing:
        raise InvalidParams(f"{family_id} requires parameters {', '.join(missing)}")
    extra = sorted(set(params) - set(names))
    if extra:
        raise InvalidParams(f"{family_id} got unexpected parameters {', '.join(extra)}")


def _make_pn(params: Mapping[str, int]) -> LefschetzBase:
    _require_params("pn", params, ("n",))
    n = params["n"]
    if n < 1:
        raise InvalidParams(f"pn requires n >= 1, got n={n}")
    return LefschetzBase(
        id="pn",
        display_name=f"P^{n}",
        dim_m=n,
        length_m=n + 1,
        rank_b=1,
        line_bundle_note="O(1)",
        parameters={"n": n},
    )


def _normalize_weights(params: Mapping[str, int]) -> tuple[int, ...]:
    if not params:
        raise InvalidParams("wpn requires at least one weight")
    try:
        indexed = sorted(params.items(), key=lambda kv: int(kv[0][1:]))
    except (ValueError, IndexError):
        raise InvalidParams("wpn weight parameters must be named w0, w1, ...")
    if any(not key.startswith("w") for key, _ in indexed):
        raise InvalidParams("wpn weight parameters must be named w0, w1, ...")
    weights = tuple(sorted(value for _, value in indexed))
    if len(weights) < 2:
        raise InvalidParams("wpn requires at least two weights")
    if any(w < 1 for w in weights):
        raise InvalidParams(f"weights must be positive, got {weights}")
    return weights


def _make_wpn(params: Mapping[str, int]) -> LefschetzBase:
    weights = _normalize_weights(params)
    n = len(weights) - 1
    return LefschetzBase(
        id="wpn",
        display_name="P(" + ",".join(str(w) for w in weights) + ")",
        dim_m=n,
        length_m=sum(weights),
        rank_b=1,
        line_bundle_note="O(1) on the smooth toric stack",
        parameters={f"w{i}": w for i, w in enumerate(weights)},
    )


def _make_quadric(params: Mapping[str, int]) -> LefschetzBase:
    _require_params("quadric4s2", params, ("s",))
    s = params["s"]
    if s < 1:
        raise InvalidParams(f"quadric4s2 requires s >= 1, got s={s}")
    return LefschetzBase(
        id="quadric4s2",
        display_name=f"Q^{4 * s + 2}",
        dim_m=4 * s + 2,
        length_m=2,
        rank_b=2 * s + 2,
        line_bundle_note=f"O({2 * s + 1}); block = O,...,O(2s) plus one spinor bundle",
        parameters={"s": s},
    )


def _make_gr(params: Mapping[str, int]) -> LefschetzBase:
    _require_params("gr", params, ("k", "n"))
    k, n = params["k"], params["n"]
    rank = fonarev_rank(k, n)  # validates 1 <= k < n and coprimality
    return LefschetzBase(
        id="gr",
        display_name=f"Gr({k},{n})",
        dim_m=k * (n - k),
        length_m=n,
        rank_b=rank,
        line_bundle_note="Pluecker O(1)",
        parameters={"k": k, "n": n},
    )


def _make_ogr2(params: Mapping[str, int]) -> LefschetzBase:
    _require_params("ogr2", params, ("n",))
    n = params["n"]
    if n < 2:
        raise InvalidParams(f"ogr2 requires n >= 2, got n={n}")
    return LefschetzBase(
        id="ogr2",
        display_name=f"OGr(2,{2 * n + 1})",
        dim_m=4 * n - 5,
        length_m=2 * n - 2,
        rank_b=n,
        line_bundle_note="O(1); block = symmetric powers of U^v plus the spinor bundle",
        parameters={"n": n},
    )


def _make_igr2(params: Mapping[str, int]) -> LefschetzBase:
    _require_params("igr2", params, ("n",))
    n = params["n"]
    if n < 2:
        raise InvalidParams(f"igr2 requires n >= 2, got n={n}")
    return LefschetzBase(
        id="igr2",
        display_name=f"IGr(2,{2 * n + 1})",
        dim_m=4 * n - 3,
        length_m=2 * n,
        rank_b=n,
        line_bundle_note="O(1); block = O, U^v, ..., S^(n-1) U^v",
        parameters={"n": n},
    )


def _fixed(base_id: str, display: str, dim_m: int, m: int, rank: int, note: str) -> Callable[[Mapping[str, int]], LefschetzBase]:
    def make(params: Mapping[str, int]) -> LefschetzBase:
        _require_params(base_id, params, ())
        return LefschetzBase(
            id=base_id,
            display_name=display,
            dim_m=dim_m,
            length_m=m,
            rank_b=rank,
            line_bundle_note=note,
            parameters={},
        )

    return make


FAMILIES: dict[str, Family] = {
    f.id: f
    for f in (
        Family("pn", "projective space P^n", ("n",), "n", "n+1", "1", "O(1)", _make_pn),
        Family(
            "wpn",
            "weighted projective stack P(w0,...,wn)",
            ("w0...",),
            "n",
            "w0+...+wn",
            "1",
            "O(1) on the smooth toric stack",
            _make_wpn,
        ),
        Family(
            "quadric4s2",
            "smooth quadric of dimension 4s+2",
            ("s",),
            "4s+2",
            "2",
            "2s+2",
            "O(2s+1)",
            _make_quadric,
        ),
        Family(
            "gr",
            "Grassmannian Gr(k,n), k and n coprime",
            ("k", "n"),
            "k(n-k)",
            "n",
            "C(n,k)/n",
            "Pluecker O(1)",
            _make_gr,
        ),
        Family(
            "ogr2",
            "orthogonal Grassmannian OGr(2,2n+1)",
            ("n",),
            "4n-5",
            "2n-2",
            "n",
            "O(1)",
            _make_ogr2,
        ),
        Family(
            "sgr36",
            "symplectic Grassmannian SGr(3,6)",
            (),
            "6",
            "4",
            "2",
            "O(1); block = O, U^v",
            _fixed("sgr36", "SGr(3,6)", 6, 4, 2, "O(1); block = O, U^v"),
        ),
        Family(
            "ogr510",
            "spinor tenfold OGr+(5,10)",
            (),
            "10",
            "8",
            "2",
            "spinor O(1); block = O, U^v",
            _fixed("ogr510", "OGr+(5,10)", 10, 8, 2, "spinor O(1); block = O, U^v"),
        ),
        Family(
            "g2gr",
            "adjoint Grassmannian of type G2",
            (),
            "5",
            "3",
            "2",
            "O(1); block = O, U^v",
            _fixed("g2gr", "G2-Gr(2,7)", 5, 3, 2, "O(1); block = O, U^v"),
        ),
        Family(
            "igr2",
            "hyperplane section of Gr(2,2n+1)",
            ("n",),
            "4n-3",
            "2n",
            "n",
            "O(1)",
            _make_igr2,
        ),
        Family(
            "gr26_L2",
            "Gr(2,6) with the square polarization",
            (),
            "8",
            "3",
            "5",
            "Pluecker O(2); block = O, U^v, S^2 U^v, O(1), U^v(1)",
            _fixed(
                "gr26_L2",
                "Gr(2,6), L=O(2)",
                8,
                3,
                5,
                "Pluecker O(2); block = O, U^v, S^2 U^v, O(1), U^v(1)",
            ),
        ),
        Family(
            "p3xp3",
            "product P^3 x P^3",
            (),
            "6",
            "4",
            "4",
            "O(1,1) (companion entry)",
            _fixed("p3xp3", "P^3 x P^3", 6, 4, 4, "O(1,1) (companion entry)"),
        ),
    )
}

BUILTIN_IDS: tuple[str, ...] = tuple(FAMILIES)


def builtin(base_id: str, params: Mapping[str, int] | None = None) -> LefschetzBase:
    """Instantiate a builtin family; raises UnknownBase / InvalidParams."""
    family = FAMILIES.get(base_id)
    if family is None:
        raise UnknownBase(f"unknown base id {base_id!r}; builtins: {', '.join(BUILTIN_IDS)}")
    return family.make(dict(params or {}))


# ---------------------------------------------------------------------------
# Catalog files: a JSON array of concrete base records.  Keys outside the
# schema are rejected so that typos fail loudly instead of silently.
# ---------------------------------------------------------------------------

_REQUIRED_KEYS = (
    "id",
    "display_name",
    "dim_m",
    "length_m",
    "rank_b",
    "line_bundle_note",
    "omega_is_l_minus_m",
    "parameters",
)
_OPTIONAL_KEYS = ("chi_stable",)


def _check_int(entry_id: str, key: str, value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"entry {entry_id!r}: field {key!r} must be an integer")
    return value


def base_to_record(base: LefschetzBase) -> dict:
    return {
        "id": base.id,
        "display_name": base.display_name,
        "dim_m": base.dim_m,
        "length_m": base.length_m,
        "rank_b": base.rank_b,
        "line_bundle_note": base.line_bundle_note,
        "omega_is_l_minus_m": base.omega_is_l_minus_m,
        "parameters": dict(base.parameters),
        "chi_stable": base.chi_stable,
    }


def base_from_record(record: object) -> LefschetzBase:
    if not isinstance(record, dict):
        raise ValidationError("catalog entry must be a JSON object")
    entry_id = record.get("id", "<missing id>")
    unknown = sorted(set(record) - set(_REQUIRED_KEYS) - set(_OPTIONAL_KEYS))
    if unknown:
        raise ValidationError(f"entry {entry_id!r}: unknown key {unknown[0]!r}")
    for key in _REQUIRED_KEYS:
        if key not in record:
            raise ValidationError(f"entry {entry_id!r}: missing field {key!r}")
    if not isinstance(record["id"], str) or not record["id"]:
        raise ValidationError("field 'id' must be a nonempty string")
    if not isinstance(record["display_name"], str):
        raise ValidationError(f"entry {entry_id!r}: field 'display_name' must be a string")
    if not isinstance(record["line_bundle_note"], str):
        raise ValidationError(f"entry {entry_id!r}: field 'line_bundle_note' must be a string")
    if not isinstance(record["omega_is_l_minus_m"], bool):
        raise ValidationError(f"entry {entry_id!r}: field 'omega_is_l_minus_m' must be a boolean")
    chi_stable = record.get("chi_stable", True)
    if not isinstance(chi_stable, bool):
        raise ValidationError(f"entry {entry_id!r}: field 'chi_stable' must be a boolean")
    params = record["parameters"]
    if not isinstance(params, dict):
        raise ValidationError(f"entry {entry_id!r}: field 'parameters' must be an object")
    for key, value in params.items():
        _check_int(entry_id, f"parameters.{key}", value)
    return LefschetzBase(
        id=record["id"],
        display_name=record["display_name"],
        dim_m=_check_int(entry_id, "dim_m", record["dim_m"]),
        length_m=_check_int(entry_id, "length_m", record["length_m"]),
        rank_b=_check_int(entry_id, "rank_b", record["rank_b"]),
        line_bundle_note=record["line_bundle_note"],
        omega_is_l_minus_m=record["omega_is_l_minus_m"],
        parameters=dict(params),
        chi_stable=chi_stable,
    )


def load_catalog_file(path: str | Path) -> list[LefschetzBase]:
    """Load and validate a user catalog; duplicate ids are rejected."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(data, list):
        raise ParseError(f"{path}: top-level value must be a JSON array")
    bases = []
    seen: set[str] = set()
    for record in data:
        base = base_from_record(record)
        if base.id in seen:
            raise ValidationError(f"duplicate catalog id {base.id!r}")
        seen.add(base.id)
        bases.append(base)
    return bases


def dump_catalog(bases: Iterable[LefschetzBase]) -> str:
    """Serialize concrete bases in the catalog file format."""
    return json.dumps([base_to_record(b) for b in bases], indent=2) + "\n"


def merge_user_catalog(user_bases: Iterable[LefschetzBase]) -> list[LefschetzBase]:
    """Validate user bases against builtin ids; collisions are errors."""
    merged = []
    for base in user_bases:
        if base.id in FAMILIES:
            raise ValidationError(
                f"catalog id {base.id!r} collides with a builtin family"
            )
        merged.append(base)
    return merged


def _startup_check() -> None:
    """Every builtin entry must satisfy the canonical-bundle hypothesis."""
    representatives = {
        "pn": {"n": 1},
        "wpn": {"w0": 1, "w1": 1},
        "quadric4s2": {"s": 1},
        "gr": {"k": 2, "n": 5},
        "ogr2": {"n": 2},
        "igr2": {"n": 2},
    }
    for family_id in FAMILIES:
        base = builtin(family_id, representatives.get(family_id))
        if not base.omega_is_l_minus_m or not base.chi_stable:
            raise AssertionError(f"builtin base {family_id!r} violates a standing hypothesis")


_startup_check()
