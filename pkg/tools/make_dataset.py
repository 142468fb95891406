#!/usr/bin/env python3
"""Assemble src/sporadic_verify/data/sporadic.json from ctbllib raw output.

Offline step.  Inputs: raw_ctbllib.txt, produced by running
extract_ctbllib.g under GAP with the ctbllib character table library (see
README).  This script picks, for every prime p dividing a group's Schur
multiplier, the smallest faithful character degree of the cover p.G whose
codegree p*|G|/degree lies outside cod(G), and emits the validated dataset
document the package ships.
"""

import json
import sys
from pathlib import Path

HERE = Path(__file__).resolve().parent
OUT = HERE.parent / "src" / "sporadic_verify" / "data" / "sporadic.json"

# ATLAS Schur multiplier orders, as [prime, exponent] pairs (empty = trivial).
SCHUR_MULTIPLIERS = {
    "M11": [], "M23": [], "M24": [], "J1": [], "J4": [],
    "Co2": [], "Co3": [], "Fi23": [], "He": [], "HN": [],
    "Ly": [], "Th": [], "M": [],
    "M12": [[2, 1]], "M22": [[2, 2], [3, 1]], "J2": [[2, 1]], "J3": [[3, 1]],
    "HS": [[2, 1]], "McL": [[3, 1]], "Ru": [[2, 1]],
    "Suz": [[2, 1], [3, 1]], "ON": [[3, 1]], "Co1": [[2, 1]],
    "Fi22": [[2, 1], [3, 1]], "Fi24'": [[3, 1]], "B": [[2, 1]],
}

# Minimal faithful representation degrees over fields of characteristic p
# (modular atlas data), for the (group, p) pairs the GL stage can reach.
MIN_FAITHFUL_DEGREES = {
    "He": {2: 51},
    "Suz": {2: 110},
    "Fi22": {2: 78, 3: 77},
    "Fi23": {2: 782},
    "Co2": {2: 22},
    "Co1": {2: 24},
    "B": {2: 4370},
}

THRESHOLDS = {"generic_min_codegrees": 3, "exceptional_min_codegrees": 20}
EXCEPTIONAL_PAIRS = [["Suz", "O8+(2)"], ["Fi23", "O8+(3)"]]


def parse_raw(path):
    groups = {}
    current = None
    for line in Path(path).read_text().splitlines():
        tag, _, rest = line.partition("|")
        if tag == "GROUP":
            current = {"name": rest, "covers": {}}
            groups[rest] = current
        elif tag == "ORDER":
            current["order"] = int(rest)
        elif tag == "FAC":
            current["fac"] = [[int(p), int(e)] for p, _, e in
                              (t.partition("^") for t in rest.split(","))]
        elif tag == "DEGS":
            current["degrees"] = [int(d) for d in rest.split(",")]
        elif tag == "COVER":
            p, _, degs = rest.partition("|")
            current["covers"][int(p)] = [int(d) for d in degs.split(",")]
        elif tag == "MISSING":
            sys.exit(f"character table missing for {rest}")
    return groups


def pick_witness(order, codegrees, p, faithful_degrees):
    cover_order = p * order
    for d in sorted(faithful_degrees):
        if cover_order % d == 0 and cover_order // d not in codegrees:
            return d
    sys.exit(f"no usable witness among faithful degrees {faithful_degrees}")


def main():
    raw = parse_raw(HERE / "raw_ctbllib.txt")
    out_groups = []
    for name, g in raw.items():
        order, degrees = g["order"], g["degrees"]
        assert sum(d * d for d in degrees) == order, name
        cod = {1} | {order // d for d in degrees[1:]}
        mult = SCHUR_MULTIPLIERS[name]
        mult_primes = sorted(p for p, _ in mult)
        assert mult_primes == sorted(g["covers"]), (name, mult_primes, g["covers"])
        witnesses = [{"divisor": p, "degree": pick_witness(order, cod, p,
                                                           g["covers"][p])}
                     for p in mult_primes]
        out_groups.append({
            "name": name,
            "order_factored": g["fac"],
            "degrees": degrees,
            "schur_multiplier_factored": mult,
            "cover_witnesses": witnesses,
            "min_faithful_degree": {str(p): d for p, d in
                                    MIN_FAITHFUL_DEGREES.get(name, {}).items()},
        })
    doc = {
        "version": "1",
        "groups": out_groups,
        "thresholds": THRESHOLDS,
        "exceptional_pairs": EXCEPTIONAL_PAIRS,
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(doc, indent=1))
    # Spot-check the witnesses the verification stages rely on.
    by_name = {g["name"]: g for g in out_groups}
    assert {"divisor": 2, "degree": 24} in by_name["Co1"]["cover_witnesses"]
    assert {"divisor": 2, "degree": 352} in by_name["Fi22"]["cover_witnesses"]
    assert {"divisor": 3, "degree": 351} in by_name["Fi22"]["cover_witnesses"]
    print(f"wrote {OUT} ({len(out_groups)} groups)")


if __name__ == "__main__":
    main()
