"""Static data for the 26 sporadic groups, with load-time validation.

The shipped JSON document carries, per group: the factored order, the full
character degree multiset, the Schur multiplier, one codegree witness per
prime dividing the multiplier (a faithful character degree of the cover),
and the minimal faithful representation degrees per characteristic that the
GL-embedding stage consults.  Integrity is enforced at load, most notably
the column-orthogonality identity sum(d^2) = |G|.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from typing import Mapping, Optional, Union

from .arith import FactoredNat
from .codegrees import CodegreeSet, codegree_set_simple

SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL",
    "He", "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M",
)

# Sporadic groups asserted in the source analysis to have trivial Schur
# multiplier.  The ATLAS disagrees on Fi22 (multiplier of order 6); the
# cross-check below reports that instead of silently resolving it.
CLAIMED_TRIVIAL_MULTIPLIERS = (
    "M11", "M23", "M24", "J1", "J4", "Co2", "Co3", "Fi22", "Fi23",
    "He", "HN", "Ly", "Th", "M",
)


class DatasetError(ValueError):
    """A malformed or inconsistent dataset document."""


@dataclass(frozen=True)
class CoverWitness:
    divisor: int   # order of the center of the cover (a prime here)
    degree: int    # faithful character degree of the cover


@dataclass(frozen=True)
class SporadicRecord:
    name: str
    order_factored: FactoredNat
    degrees: tuple[int, ...]
    schur_multiplier: FactoredNat
    cover_witnesses: tuple[CoverWitness, ...]
    min_faithful_degree: Mapping[int, int]

    @cached_property
    def order(self) -> int:
        return self.order_factored.value

    @cached_property
    def codegrees(self) -> CodegreeSet:
        return codegree_set_simple(self.order, self.degrees)

    def validate(self):
        if self.name not in SPORADIC_NAMES:
            raise DatasetError(f"{self.name}: not a sporadic group name")
        if self.degrees.count(1) != 1:
            raise DatasetError(
                f"{self.name}: expected exactly one trivial character degree")
        if sum(d * d for d in self.degrees) != self.order:
            raise DatasetError(
                f"{self.name}: sum of squared degrees does not equal the order")
        for d in self.degrees:
            if d < 1 or self.order % d:
                raise DatasetError(f"{self.name}: degree {d} does not divide the order")
        for w in self.cover_witnesses:
            if w.divisor < 2:
                raise DatasetError(f"{self.name}: cover divisor {w.divisor} below 2")
            if self.schur_multiplier.value % w.divisor:
                raise DatasetError(
                    f"{self.name}: cover divisor {w.divisor} does not divide "
                    f"the Schur multiplier")
            if (w.divisor * self.order) % w.degree:
                raise DatasetError(
                    f"{self.name}: witness degree {w.degree} does not divide "
                    f"the cover order {w.divisor}*|G|")
        for p, d in self.min_faithful_degree.items():
            if d < 1:
                raise DatasetError(f"{self.name}: bad minimal degree {d} at p={p}")


@dataclass(frozen=True)
class Thresholds:
    generic_min_codegrees: int
    exceptional_min_codegrees: int


@dataclass(frozen=True)
class Dataset:
    records: Mapping[str, SporadicRecord]
    thresholds: Thresholds
    exceptional_pairs: tuple[tuple[str, str], ...]

    def record(self, name: str) -> SporadicRecord:
        if name not in self.records:
            raise DatasetError(
                f"unknown group {name!r}; valid names: {', '.join(SPORADIC_NAMES)}")
        return self.records[name]

    @property
    def orders(self) -> dict[str, int]:
        return {name: rec.order for name, rec in self.records.items()}


def _require_fields(obj: dict, fields: set[str], where: str):
    missing = fields - obj.keys()
    extra = obj.keys() - fields
    if missing:
        raise DatasetError(f"{where}: missing fields {sorted(missing)}")
    if extra:
        raise DatasetError(f"{where}: unknown fields {sorted(extra)}")


def _parse_record(obj: dict) -> SporadicRecord:
    name = obj.get("name", "<unnamed>")
    _require_fields(obj, {"name", "order_factored", "degrees",
                          "schur_multiplier_factored", "cover_witnesses",
                          "min_faithful_degree"}, f"record {name}")
    try:
        order = FactoredNat.from_pairs(obj["order_factored"])
        mult = FactoredNat.from_pairs(obj["schur_multiplier_factored"])
    except ValueError as exc:
        raise DatasetError(f"{name}: bad factorization: {exc}") from exc
    witnesses = []
    for w in obj["cover_witnesses"]:
        _require_fields(w, {"divisor", "degree"}, f"{name} cover witness")
        witnesses.append(CoverWitness(int(w["divisor"]), int(w["degree"])))
    rec = SporadicRecord(
        name=obj["name"],
        order_factored=order,
        degrees=tuple(int(d) for d in obj["degrees"]),
        schur_multiplier=mult,
        cover_witnesses=tuple(witnesses),
        min_faithful_degree={int(p): int(d)
                             for p, d in obj["min_faithful_degree"].items()},
    )
    rec.validate()
    return rec


def load_dataset(source: Union[bytes, str]) -> Dataset:
    """Parse and fully validate a dataset document."""
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DatasetError("top level must be an object")
    _require_fields(doc, {"version", "groups", "thresholds", "exceptional_pairs"},
                    "top level")
    records: dict[str, SporadicRecord] = {}
    for obj in doc["groups"]:
        rec = _parse_record(obj)
        if rec.name in records:
            raise DatasetError(f"duplicate record for {rec.name}")
        records[rec.name] = rec
    missing = set(SPORADIC_NAMES) - records.keys()
    if missing:
        raise DatasetError(f"dataset incomplete; missing {sorted(missing)}")
    th = doc["thresholds"]
    _require_fields(th, {"generic_min_codegrees", "exceptional_min_codegrees"},
                    "thresholds")
    thresholds = Thresholds(int(th["generic_min_codegrees"]),
                            int(th["exceptional_min_codegrees"]))
    if thresholds.generic_min_codegrees < 1 or thresholds.exceptional_min_codegrees < 1:
        raise DatasetError("thresholds must be positive")
    pairs = tuple((str(a), str(b)) for a, b in doc["exceptional_pairs"])
    for sporadic_name, _candidate in pairs:
        if sporadic_name not in records:
            raise DatasetError(f"exceptional pair references unknown group "
                               f"{sporadic_name!r}")
    ordered = {name: records[name] for name in SPORADIC_NAMES}
    return Dataset(records=ordered, thresholds=thresholds, exceptional_pairs=pairs)


def load_dataset_file(path) -> Dataset:
    with open(path, "rb") as fh:
        return load_dataset(fh.read())


def default_dataset() -> Dataset:
    """The dataset shipped with the package."""
    data = resources.files(__package__).joinpath("data/sporadic.json").read_bytes()
    return load_dataset(data)


def schur_claim_discrepancies(ds: Dataset) -> list[str]:
    """Cross-check multipliers against the claimed trivial-multiplier list.

    Report-only: a note is produced for every group whose ATLAS multiplier
    disagrees with the claim, in either direction.
    """
    notes = []
    claimed = set(CLAIMED_TRIVIAL_MULTIPLIERS)
    for name, rec in ds.records.items():
        trivial = rec.schur_multiplier.value == 1
        if name in claimed and not trivial:
            notes.append(
                f"{name}: claimed trivial Schur multiplier, but data gives "
                f"order {rec.schur_multiplier.value}")
        elif name not in claimed and trivial:
            notes.append(
                f"{name}: data gives trivial Schur multiplier, but the claim "
                f"omits it from the trivial list")
    return notes
