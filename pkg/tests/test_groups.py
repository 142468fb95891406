"""Group identifiers, order formulas, and candidate enumeration.

Order oracles are frozen from standard tables of simple group orders; the
enumeration is cross-checked against an independent brute-force scan.
"""

import pytest

from sporadic_verify.arith import divides
from sporadic_verify.groups import (Family, SimpleGroupId, TITS_ORDER,
                                    alternating, coincidence_classes,
                                    enumerate_candidates, gl_order,
                                    is_valid_simple, lie, lie_order, order_of,
                                    parse_group_spec, sporadic)

# (spec, order) from standard order tables.
KNOWN_ORDERS = [
    ("A5", 60), ("A6", 360), ("A7", 2520), ("A8", 20160),
    ("L2(4)", 60), ("L2(5)", 60), ("L2(7)", 168), ("L2(9)", 360),
    ("L3(2)", 168), ("L3(4)", 20160), ("L4(2)", 20160),
    ("L2(8)", 504), ("L2(11)", 660), ("L2(32)", 32736),
    ("U3(3)", 6048), ("U4(2)", 25920), ("U6(2)", 9196830720),
    ("S4(3)", 25920), ("S6(2)", 1451520), ("S4(4)", 979200),
    ("O5(3)", 25920), ("O7(3)", 4585351680), ("O8+(2)", 174182400),
    ("O8-(2)", 197406720), ("O8+(3)", 4952179814400),
    ("G2(3)", 4245696), ("G2(4)", 251596800),
    ("F4(2)", 3311126603366400),
    ("Sz(8)", 29120), ("Sz(32)", 32537600),
    ("2G2(27)", 10073444472), ("3D4(2)", 211341312),
    ("2E6(2)", 76532479683774853939200),
    ("2F4(2)'", 17971200),
]


@pytest.mark.parametrize("spec,order", KNOWN_ORDERS)
def test_order_formulas_against_known_tables(spec, order):
    assert order_of(parse_group_spec(spec)) == order


def test_tits_order_constant():
    assert TITS_ORDER == 17971200


def test_order_coincidences():
    for specs, order in [ (("A5", "L2(4)", "L2(5)"), 60),
                          (("L2(7)", "L3(2)"), 168),
                          (("A6", "L2(9)"), 360),
                          (("A8", "L4(2)"), 20160),
                          (("U4(2)", "S4(3)"), 25920) ]:
        for s in specs:
            assert order_of(parse_group_spec(s)) == order


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_bn_cn_order_equality(n, q):
    assert lie_order(Family.B, n, q) == lie_order(Family.C, n, q)


def test_sporadic_order_requires_data():
    assert order_of(sporadic("M11"), {"M11": 7920}) == 7920
    with pytest.raises(ValueError):
        order_of(sporadic("M11"))


def test_gl_order_small_and_brute():
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert gl_order(4, 2) == 20160
    assert gl_order(2, 3) == 48
    # brute force: count invertible 2x2 matrices over F_p by row choices
    for p in (2, 3, 5):
        assert gl_order(2, p) == (p**2 - 1) * (p**2 - p)
    with pytest.raises(ValueError):
        gl_order(0, 2)


def test_gl_order_tower_divisibility():
    # |GL(n,p)| divides |GL(n+1,p)|: the embedding stage relies on this.
    for p in (2, 3, 5):
        for n in range(1, 8):
            assert divides(gl_order(n, p), gl_order(n + 1, p))


VALIDITY_CASES = [
    ("A4", False), ("A5", True),
    ("L2(2)", False), ("L2(3)", False), ("L2(4)", True),
    ("U3(2)", False), ("U3(3)", True),
    ("O5(2)", False), ("S4(2)", False), ("O5(3)", True),
    ("Sz(2)", False), ("Sz(4)", False), ("Sz(8)", True), ("Sz(32)", True),
    ("2G2(3)", False), ("2G2(9)", False), ("2G2(27)", True),
    ("2F4(2)", False), ("2F4(8)", True),
    ("G2(2)", False), ("G2(3)", True),
]


@pytest.mark.parametrize("spec,valid", VALIDITY_CASES)
def test_simplicity_validity_rules(spec, valid):
    try:
        gid = parse_group_spec(spec)
    except ValueError:
        gid = None
    if gid is None:
        assert not valid, spec
    else:
        assert is_valid_simple(gid) == valid


def brute_candidates(bound):
    """Independent scan: try every family over a generous (n, q) window."""
    names = set()
    n = 5
    from math import factorial
    while factorial(n) // 2 <= bound:
        if bound % (factorial(n) // 2) == 0:
            names.add(f"A{n}")
        n += 1
    ranked = [Family.A, Family.B, Family.C, Family.D, Family.TWO_A, Family.TWO_D]
    for fam in ranked:
        for n in range(1, 20):
            for q in [pp for pp in range(2, 200)]:
                try:
                    gid = lie(fam, q, n=n)
                except ValueError:
                    continue
                if not is_valid_simple(gid):
                    continue
                o = lie_order(fam, n, q)
                if o <= bound and bound % o == 0:
                    names.add(gid.atlas_name())
    for fam in (Family.G2, Family.F4, Family.E6, Family.E7, Family.E8,
                Family.TWO_E6, Family.THREE_D4, Family.TWO_B2, Family.TWO_G2,
                Family.TWO_F4):
        for q in range(2, 200):
            try:
                gid = lie(fam, q)
            except ValueError:
                continue
            if not is_valid_simple(gid):
                continue
            o = lie_order(fam, None, q)
            if o <= bound and bound % o == 0:
                names.add(gid.atlas_name())
    if bound % TITS_ORDER == 0:
        names.add("2F4(2)'")
    return names


@pytest.mark.parametrize("bound", [60, 20160, 9196830720, 145926144000])
def test_enumerate_candidates_matches_brute_force(bound):
    got = {g.atlas_name() for g in enumerate_candidates(bound)}
    assert got == brute_candidates(bound)


def test_enumerate_candidates_smallest_bound():
    assert [str(g) for g in enumerate_candidates(60)] == ["A5", "L2(4)", "L2(5)"]
    with pytest.raises(ValueError):
        enumerate_candidates(59)


def test_enumerate_candidates_orders_divide_bound():
    bound = 4030387200  # |He|
    for gid in enumerate_candidates(bound):
        assert divides(order_of(gid), bound)


def test_enumeration_is_deterministic():
    bound = 448345497600  # |Suz|
    assert enumerate_candidates(bound) == enumerate_candidates(bound)


def test_coincidence_classes_on_enumeration():
    ids = enumerate_candidates(20160)
    classes = {frozenset(str(g) for g in c) for c in coincidence_classes(ids)}
    assert frozenset({"A5", "L2(4)", "L2(5)"}) in classes
    assert frozenset({"L2(7)", "L3(2)"}) in classes
    assert frozenset({"A8", "L4(2)"}) in classes


def test_parse_group_spec_roundtrip():
    for gid in enumerate_candidates(174182400):
        assert parse_group_spec(gid.atlas_name()) == gid
    assert parse_group_spec("M11") == sporadic("M11")
    assert parse_group_spec("A12") == alternating(12)
    assert parse_group_spec("2F4(2)'") == SimpleGroupId(Family.TITS)
    for bad in ("Q8", "L1(2)", "Sz", "O8(2)", "nonsense"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)
