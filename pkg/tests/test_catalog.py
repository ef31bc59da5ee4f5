"""Builtin catalog, block-rank combinatorics, and the catalog file format."""

import json
from math import comb, gcd

import pytest

from cycalc.catalog import (
    BUILTIN_IDS,
    FAMILIES,
    LefschetzBase,
    base_to_record,
    builtin,
    dump_catalog,
    fonarev_rank,
    load_catalog_file,
    merge_user_catalog,
)
from cycalc.errors import InvalidParams, ParseError, UnknownBase, ValidationError


def enumerate_diagrams(k, n):
    """Independent oracle: direct enumeration of the bounded diagrams."""
    if k == 1:
        return 1
    bounds = [((n - k) * (k - p)) // k for p in range(1, k)]

    def extend(row, prev):
        if row == k - 1:
            return 1
        total = 0
        for value in range(min(bounds[row], prev) + 1):
            total += extend(row + 1, value)
        return total

    return extend(0, bounds[0])


def test_builtin_id_count():
    assert len(BUILTIN_IDS) == 11


def test_pn_example():
    base = builtin("pn", {"n": 5})
    assert (base.dim_m, base.length_m, base.rank_b) == (5, 6, 1)


def test_quadric_example():
    base = builtin("quadric4s2", {"s": 1})
    assert (base.dim_m, base.length_m, base.rank_b) == (6, 2, 4)


def test_gr26_example():
    base = builtin("gr26_L2")
    assert (base.dim_m, base.length_m, base.rank_b) == (8, 3, 5)


def test_p3xp3_entry():
    base = builtin("p3xp3")
    assert (base.dim_m, base.length_m, base.rank_b) == (6, 4, 4)
    assert base.rank_b * base.length_m == 16


def test_ogr2_and_igr2_dimensions():
    assert builtin("ogr2", {"n": 3}).dim_m == 7
    assert builtin("ogr2", {"n": 3}).length_m == 4
    assert builtin("igr2", {"n": 2}).dim_m == 5
    assert builtin("igr2", {"n": 2}).length_m == 4


def test_wpn_weights_canonicalized():
    base = builtin("wpn", {"w0": 3, "w1": 1, "w2": 1, "w3": 1})
    assert base.parameters == {"w0": 1, "w1": 1, "w2": 1, "w3": 3}
    assert base.dim_m == 3
    assert base.length_m == 6
    assert base.display_name == "P(1,1,1,3)"


def test_unknown_base_rejected():
    with pytest.raises(UnknownBase):
        builtin("nope")


@pytest.mark.parametrize(
    "family,params",
    [
        ("gr", {"k": 2, "n": 6}),   # not coprime
        ("gr", {"k": 0, "n": 5}),
        ("gr", {"k": 5, "n": 5}),
        ("quadric4s2", {"s": 0}),
        ("pn", {"n": 0}),
        ("wpn", {}),
        ("wpn", {"w0": 0, "w1": 1}),
        ("ogr2", {"n": 1}),
        ("pn", {"n": 5, "k": 2}),   # stray parameter
    ],
)
def test_invalid_params(family, params):
    with pytest.raises(InvalidParams):
        builtin(family, params)


def test_fonarev_rank_examples():
    assert fonarev_rank(2, 5) == enumerate_diagrams(2, 5) == 2
    assert fonarev_rank(2, 5) == comb(5, 2) // 5
    assert fonarev_rank(3, 10) == enumerate_diagrams(3, 10) == 12
    assert fonarev_rank(3, 10) == comb(10, 3) // 10
    for n in (2, 5, 9, 17):
        assert fonarev_rank(1, n) == 1


def test_fonarev_rank_rejects_non_coprime():
    with pytest.raises(InvalidParams):
        fonarev_rank(2, 6)


def test_fonarev_rank_binomial_identity_up_to_20():
    for n in range(2, 21):
        for k in range(1, n):
            if gcd(k, n) != 1:
                continue
            rank = fonarev_rank(k, n)
            assert rank * n == comb(n, k), (k, n)
            if comb(n, k) <= 20000:
                assert rank == enumerate_diagrams(k, n), (k, n)


def test_rank_times_length_matches_known_k_theory():
    assert builtin("pn", {"n": 7}).rank_b * 8 == 8
    q = builtin("quadric4s2", {"s": 2})
    assert q.rank_b * q.length_m == 4 * 2 + 4
    g = builtin("gr", {"k": 3, "n": 10})
    assert g.rank_b * g.length_m == comb(10, 3)


def test_all_builtins_satisfy_canonical_hypothesis():
    reps = {
        "pn": {"n": 4},
        "wpn": {"w0": 1, "w1": 2, "w2": 3},
        "quadric4s2": {"s": 1},
        "gr": {"k": 2, "n": 7},
        "ogr2": {"n": 4},
        "igr2": {"n": 3},
    }
    for family_id in BUILTIN_IDS:
        base = builtin(family_id, reps.get(family_id))
        assert base.omega_is_l_minus_m
        assert base.chi_stable


def test_hodge_supported_flag():
    assert builtin("pn", {"n": 3}).hodge_supported
    assert builtin("wpn", {"w0": 1, "w1": 1, "w2": 2}).hodge_supported
    assert not builtin("gr", {"k": 2, "n": 5}).hodge_supported
    assert not builtin("sgr36").hodge_supported


# ---------------------------------------------------------------------------
# Catalog files
# ---------------------------------------------------------------------------


def representative_bases():
    return [
        builtin("pn", {"n": 5}),
        builtin("wpn", {"w0": 1, "w1": 1, "w2": 1, "w3": 3}),
        builtin("quadric4s2", {"s": 1}),
        builtin("gr", {"k": 2, "n": 5}),
        builtin("ogr2", {"n": 3}),
        builtin("sgr36"),
        builtin("ogr510"),
        builtin("g2gr"),
        builtin("igr2", {"n": 2}),
        builtin("gr26_L2"),
        builtin("p3xp3"),
    ]


def test_round_trip_single_entry(tmp_path):
    base = builtin("pn", {"n": 5})
    path = tmp_path / "catalog.json"
    path.write_text(dump_catalog([base]), encoding="utf-8")
    loaded = load_catalog_file(path)
    assert loaded == [base]


def test_round_trip_all_builtin_representatives(tmp_path):
    bases = representative_bases()
    assert len(bases) == 11
    path = tmp_path / "catalog.json"
    path.write_text(dump_catalog(bases), encoding="utf-8")
    assert load_catalog_file(path) == bases


def test_zero_length_rejected(tmp_path):
    record = base_to_record(builtin("pn", {"n": 2}))
    record["length_m"] = 0
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([record]), encoding="utf-8")
    with pytest.raises(ValidationError) as err:
        load_catalog_file(path)
    assert "length_m" in str(err.value)


def test_unknown_key_rejected(tmp_path):
    record = base_to_record(builtin("pn", {"n": 2}))
    record["surprise"] = 1
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([record]), encoding="utf-8")
    with pytest.raises(ValidationError) as err:
        load_catalog_file(path)
    assert "surprise" in str(err.value)


def test_missing_field_rejected(tmp_path):
    record = base_to_record(builtin("pn", {"n": 2}))
    del record["rank_b"]
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([record]), encoding="utf-8")
    with pytest.raises(ValidationError) as err:
        load_catalog_file(path)
    assert "rank_b" in str(err.value)


def test_duplicate_ids_rejected(tmp_path):
    record = base_to_record(builtin("pn", {"n": 2}))
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([record, record]), encoding="utf-8")
    with pytest.raises(ValidationError):
        load_catalog_file(path)


def test_malformed_json_is_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_catalog_file(path)


def test_non_array_is_parse_error(tmp_path):
    path = tmp_path / "scalar.json"
    path.write_text('{"id": "x"}', encoding="utf-8")
    with pytest.raises(ParseError):
        load_catalog_file(path)


def test_merge_rejects_builtin_collision():
    clone = LefschetzBase(
        id="pn",
        display_name="fake",
        dim_m=1,
        length_m=1,
        rank_b=1,
        line_bundle_note="",
    )
    with pytest.raises(ValidationError):
        merge_user_catalog([clone])


def test_chi_stable_defaults_true_and_round_trips(tmp_path):
    record = base_to_record(builtin("pn", {"n": 2}))
    record["chi_stable"] = False
    record["id"] = "custom"
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([record]), encoding="utf-8")
    (loaded,) = load_catalog_file(path)
    assert loaded.chi_stable is False


def test_family_metadata_is_complete():
    for family in FAMILIES.values():
        assert family.dim_formula
        assert family.length_formula
        assert family.rank_formula
