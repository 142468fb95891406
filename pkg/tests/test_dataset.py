"""Dataset loading, schema enforcement, and integrity validation."""

import json

import pytest

from sporadic_verify.dataset import (SPORADIC_NAMES, DatasetError,
                                     default_dataset, load_dataset,
                                     schur_claim_discrepancies)

from conftest import doc_of

MONSTER_ORDER = 808017424794512875886459904961710757005754368000000000


@pytest.fixture(scope="module")
def ds():
    return default_dataset()


def test_all_26_groups_present(ds):
    assert tuple(ds.records) == SPORADIC_NAMES
    assert len(ds.records) == 26


def test_known_orders(ds):
    assert ds.record("M11").order == 7920
    assert ds.record("M").order == MONSTER_ORDER
    assert ds.record("B").order == 4154781481226426191177580544000000
    assert ds.record("Suz").order == 448345497600
    assert ds.record("Fi23").order == 4089470473293004800


def test_sum_of_squares_identity_all_records(ds):
    for rec in ds.records.values():
        assert sum(d * d for d in rec.degrees) == rec.order, rec.name


def test_thresholds_and_exceptional_pairs(ds):
    assert ds.thresholds.generic_min_codegrees == 3
    assert ds.thresholds.exceptional_min_codegrees == 20
    assert ds.exceptional_pairs == (("Suz", "O8+(2)"), ("Fi23", "O8+(3)"))


def test_cover_witnesses_present_for_nontrivial_multipliers(ds):
    for rec in ds.records.values():
        primes = {p for p, _ in rec.schur_multiplier.factors}
        witnessed = {w.divisor for w in rec.cover_witnesses}
        assert primes == witnessed, rec.name


def test_specific_cover_witnesses(ds):
    co1 = {(w.divisor, w.degree) for w in ds.record("Co1").cover_witnesses}
    assert (2, 24) in co1
    fi22 = {(w.divisor, w.degree) for w in ds.record("Fi22").cover_witnesses}
    assert (2, 352) in fi22 and (3, 351) in fi22


def test_min_faithful_degrees(ds):
    assert ds.record("Co1").min_faithful_degree == {2: 24}
    assert ds.record("Fi22").min_faithful_degree == {2: 78, 3: 77}
    assert ds.record("B").min_faithful_degree == {2: 4370}
    assert ds.record("M11").min_faithful_degree == {}


def test_schur_claim_discrepancy_is_exactly_fi22(ds):
    notes = schur_claim_discrepancies(ds)
    assert notes == ["Fi22: claimed trivial Schur multiplier, but data gives "
                     "order 6"]


def test_record_lookup_error(ds):
    with pytest.raises(DatasetError, match="valid names"):
        ds.record("M13")


def test_roundtrip_reserialization(ds):
    again = load_dataset(json.dumps(doc_of(ds)))
    assert tuple(again.records) == tuple(ds.records)
    assert again.record("M").order == ds.record("M").order


def test_rejects_unknown_top_level_field(ds):
    doc = doc_of(ds)
    doc["extra"] = 1
    with pytest.raises(DatasetError, match="unknown fields"):
        load_dataset(json.dumps(doc))


def test_rejects_unknown_record_field(ds):
    doc = doc_of(ds)
    doc["groups"][0]["surprise"] = True
    with pytest.raises(DatasetError, match="unknown fields"):
        load_dataset(json.dumps(doc))


def test_rejects_missing_field(ds):
    doc = doc_of(ds)
    del doc["groups"][0]["degrees"]
    with pytest.raises(DatasetError, match="missing fields"):
        load_dataset(json.dumps(doc))


def test_rejects_broken_sum_of_squares(ds):
    doc = doc_of(ds)
    doc["groups"][0]["degrees"][1] += 1
    with pytest.raises(DatasetError, match="sum of squared degrees|divide"):
        load_dataset(json.dumps(doc))


def test_rejects_duplicate_group(ds):
    doc = doc_of(ds)
    doc["groups"].append(doc["groups"][0])
    with pytest.raises(DatasetError, match="duplicate"):
        load_dataset(json.dumps(doc))


def test_rejects_incomplete_dataset(ds):
    doc = doc_of(ds)
    doc["groups"] = doc["groups"][:-1]
    with pytest.raises(DatasetError, match="incomplete"):
        load_dataset(json.dumps(doc))


def test_rejects_invalid_json():
    with pytest.raises(DatasetError, match="not valid JSON"):
        load_dataset("{nope")
    with pytest.raises(DatasetError, match="top level"):
        load_dataset("[]")


def test_rejects_bad_witness(ds):
    doc = doc_of(ds)
    for g in doc["groups"]:
        if g["name"] == "Co1":
            g["cover_witnesses"][0]["degree"] = 121  # 11^2 does not divide 2|Co1|
    with pytest.raises(DatasetError, match="witness degree"):
        load_dataset(json.dumps(doc))
