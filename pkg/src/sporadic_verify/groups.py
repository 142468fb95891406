"""Finite simple groups: identifiers, exact orders, and candidate enumeration.

Covers the alternating groups, the sixteen infinite families of Lie type
(untwisted and twisted, including Suzuki and Ree groups), the Tits group,
and GL(n,p).  Sporadic orders are data, supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial, gcd
from typing import Iterator, Mapping, Optional

from .arith import FactoredNat, PrimePower, divides, factorize_smooth


class Family(Enum):
    ALTERNATING = "An"
    A = "A(q)"  # linear, L_{n+1}(q)
    B = "B(q)"  # odd orthogonal, O_{2n+1}(q)
    C = "C(q)"  # symplectic, S_{2n}(q)
    D = "D(q)"  # plus orthogonal, O_{2n}+(q)
    TWO_A = "2A(q)"  # unitary, U_{n+1}(q)
    TWO_D = "2D(q)"  # minus orthogonal, O_{2n}-(q)
    G2 = "G2(q)"
    F4 = "F4(q)"
    E6 = "E6(q)"
    E7 = "E7(q)"
    E8 = "E8(q)"
    TWO_E6 = "2E6(q)"
    THREE_D4 = "3D4(q)"
    TWO_B2 = "Sz(q)"
    TWO_G2 = "2G2(q)"
    TWO_F4 = "2F4(q)"
    TITS = "2F4(2)'"
    SPORADIC = "sporadic"


# Families parameterized by a rank n (besides q).
_RANKED = {Family.A, Family.B, Family.C, Family.D, Family.TWO_A, Family.TWO_D}
# Exceptional families parameterized by q only.
_EXCEPTIONAL = {
    Family.G2, Family.F4, Family.E6, Family.E7, Family.E8,
    Family.TWO_E6, Family.THREE_D4, Family.TWO_B2, Family.TWO_G2, Family.TWO_F4,
}

_SPORADIC_NAMES = (
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4",
    "Co1", "Co2", "Co3", "Fi22", "Fi23", "Fi24'", "HS", "McL",
    "He", "Ru", "Suz", "ON", "HN", "Ly", "Th", "B", "M",
)


@dataclass(frozen=True)
class SimpleGroupId:
    """Tagged name of a finite simple group."""

    family: Family
    n: Optional[int] = None
    q: Optional[PrimePower] = None
    sporadic_name: Optional[str] = None

    def __post_init__(self):
        if self.family is Family.SPORADIC:
            if self.sporadic_name not in _SPORADIC_NAMES:
                raise ValueError(f"unknown sporadic name {self.sporadic_name!r}")
            if self.n is not None or self.q is not None:
                raise ValueError("sporadic ids carry no (n, q)")
        elif self.family is Family.ALTERNATING:
            if self.n is None or self.q is not None or self.sporadic_name:
                raise ValueError("alternating ids carry n only")
        elif self.family is Family.TITS:
            if self.n is not None or self.q is not None or self.sporadic_name:
                raise ValueError("the Tits group carries no parameters")
        else:
            if self.q is None or self.sporadic_name:
                raise ValueError(f"{self.family} requires q")
            if (self.n is None) == (self.family in _RANKED):
                raise ValueError(f"rank mismatch for {self.family}")

    def atlas_name(self) -> str:
        f, n, q = self.family, self.n, self.q.q if self.q else None
        if f is Family.SPORADIC:
            return self.sporadic_name
        if f is Family.ALTERNATING:
            return f"A{n}"
        if f is Family.TITS:
            return "2F4(2)'"
        if f is Family.A:
            return f"L{n + 1}({q})"
        if f is Family.TWO_A:
            return f"U{n + 1}({q})"
        if f is Family.B:
            return f"O{2 * n + 1}({q})"
        if f is Family.C:
            return f"S{2 * n}({q})"
        if f is Family.D:
            return f"O{2 * n}+({q})"
        if f is Family.TWO_D:
            return f"O{2 * n}-({q})"
        if f is Family.TWO_B2:
            return f"Sz({q})"
        return f"{f.value[:-3]}({q})"  # strip the "(q)" suffix of the tag

    def sort_key(self):
        order = list(Family)
        return (order.index(self.family), self.n or 0,
                self.q.q if self.q else 0, self.sporadic_name or "")

    def __str__(self):
        return self.atlas_name()


def alternating(n: int) -> SimpleGroupId:
    return SimpleGroupId(Family.ALTERNATING, n=n)


def sporadic(name: str) -> SimpleGroupId:
    return SimpleGroupId(Family.SPORADIC, sporadic_name=name)


def lie(family: Family, q: int, n: Optional[int] = None) -> SimpleGroupId:
    return SimpleGroupId(family, n=n, q=PrimePower.of(q))


def is_valid_simple(gid: SimpleGroupId) -> bool:
    """True iff the parameters name a finite simple group.

    The standard small exclusions apply: A_n needs n >= 5, L2(q) needs
    q >= 4, U3(2) / S4(2) / G2(2) / 2G2(3) / 2F4(2) are not simple (their
    derived subgroups are either covered elsewhere or, for 2F4(2)', carry
    the separate Tits tag).  S4(q) is identified with O5(q) and O6±(q)
    with L4/U4(q), so family C starts at rank 3 and D, 2D at rank 4.
    """
    f, n = gid.family, gid.n
    q = gid.q
    if f in (Family.SPORADIC, Family.TITS):
        return True
    if f is Family.ALTERNATING:
        return n >= 5
    qv, p, k = q.q, q.p, q.k
    if f is Family.A:
        return n >= 1 and (n > 1 or qv >= 4)
    if f is Family.TWO_A:
        return n >= 2 and (n > 2 or qv >= 3)
    if f is Family.B:
        return n >= 2 and (n > 2 or qv > 2)
    if f is Family.C:
        return n >= 3
    if f in (Family.D, Family.TWO_D):
        return n >= 4
    if f is Family.G2:
        return qv >= 3
    if f is Family.TWO_B2:
        return p == 2 and k % 2 == 1 and qv >= 8
    if f is Family.TWO_G2:
        return p == 3 and k % 2 == 1 and qv >= 27
    if f is Family.TWO_F4:
        return p == 2 and k % 2 == 1 and qv >= 8
    return True  # F4, E6, E7, E8, 2E6, 3D4: any prime power


def _prod(terms) -> int:
    n = 1
    for t in terms:
        n *= t
    return n


def lie_order(family: Family, n: Optional[int], q: int) -> int:
    """Order of the (possibly non-simple) group of Lie type, by formula."""
    if family is Family.A:
        return (q ** (n * (n + 1) // 2)
                * _prod(q**i - 1 for i in range(2, n + 2))
                // gcd(n + 1, q - 1))
    if family is Family.TWO_A:
        return (q ** (n * (n + 1) // 2)
                * _prod(q**i - (-1) ** i for i in range(2, n + 2))
                // gcd(n + 1, q + 1))
    if family in (Family.B, Family.C):
        return (q ** (n * n)
                * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
                // gcd(2, q - 1))
    if family is Family.D:
        return (q ** (n * (n - 1)) * (q**n - 1)
                * _prod(q ** (2 * i) - 1 for i in range(1, n))
                // gcd(4, q**n - 1))
    if family is Family.TWO_D:
        return (q ** (n * (n - 1)) * (q**n + 1)
                * _prod(q ** (2 * i) - 1 for i in range(1, n))
                // gcd(4, q**n + 1))
    if family is Family.G2:
        return q**6 * (q**6 - 1) * (q**2 - 1)
    if family is Family.F4:
        return q**24 * (q**12 - 1) * (q**8 - 1) * (q**6 - 1) * (q**2 - 1)
    if family is Family.E6:
        return (q**36 * (q**12 - 1) * (q**9 - 1) * (q**8 - 1)
                * (q**6 - 1) * (q**5 - 1) * (q**2 - 1) // gcd(3, q - 1))
    if family is Family.E7:
        return (q**63 * (q**18 - 1) * (q**14 - 1) * (q**12 - 1) * (q**10 - 1)
                * (q**8 - 1) * (q**6 - 1) * (q**2 - 1) // gcd(2, q - 1))
    if family is Family.E8:
        return (q**120 * (q**30 - 1) * (q**24 - 1) * (q**20 - 1) * (q**18 - 1)
                * (q**14 - 1) * (q**12 - 1) * (q**8 - 1) * (q**2 - 1))
    if family is Family.TWO_E6:
        return (q**36 * (q**12 - 1) * (q**9 + 1) * (q**8 - 1)
                * (q**6 - 1) * (q**5 + 1) * (q**2 - 1) // gcd(3, q + 1))
    if family is Family.THREE_D4:
        return q**12 * (q**8 + q**4 + 1) * (q**6 - 1) * (q**2 - 1)
    if family is Family.TWO_B2:
        return q**2 * (q**2 + 1) * (q - 1)
    if family is Family.TWO_G2:
        return q**3 * (q**3 + 1) * (q - 1)
    if family is Family.TWO_F4:
        return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)
    raise ValueError(f"no Lie order formula for {family}")


TITS_ORDER = lie_order(Family.TWO_F4, None, 2) // 2  # 17971200


def order_of(gid: SimpleGroupId,
             sporadic_orders: Optional[Mapping[str, int]] = None) -> int:
    """Exact order of the simple group named by gid."""
    if not is_valid_simple(gid):
        raise ValueError(f"{gid} does not name a simple group")
    if gid.family is Family.SPORADIC:
        if sporadic_orders is None or gid.sporadic_name not in sporadic_orders:
            raise ValueError(f"no order data for sporadic group {gid}")
        return sporadic_orders[gid.sporadic_name]
    if gid.family is Family.ALTERNATING:
        return factorial(gid.n) // 2
    if gid.family is Family.TITS:
        return TITS_ORDER
    return lie_order(gid.family, gid.n, gid.q.q)


def gl_order(n: int, p: int) -> int:
    """|GL(n,p)| = prod_{i=0}^{n-1} (p^n - p^i)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    pn = p**n
    return _prod(pn - p**i for i in range(n))


# Exponent of q in each order formula; bounds the admissible q = p^k given
# the prime factorization of the divisibility bound.
def _q_weight(family: Family, n: Optional[int]) -> int:
    if family in (Family.A, Family.TWO_A):
        return n * (n + 1) // 2
    if family in (Family.B, Family.C):
        return n * n
    if family in (Family.D, Family.TWO_D):
        return n * (n - 1)
    return {
        Family.G2: 6, Family.F4: 24, Family.E6: 36, Family.E7: 63,
        Family.E8: 120, Family.TWO_E6: 36, Family.THREE_D4: 12,
        Family.TWO_B2: 2, Family.TWO_G2: 3, Family.TWO_F4: 12,
    }[family]


def _candidate_qs(bound_fac: FactoredNat, weight: int) -> list[PrimePower]:
    """Prime powers q with q^weight dividing the bound."""
    out = []
    for p, e in bound_fac.factors:
        for k in range(1, e // weight + 1):
            out.append(PrimePower(p**k, p, k))
    out.sort()
    return out


def enumerate_candidates(bound: int) -> list[SimpleGroupId]:
    """All non-sporadic simple groups whose order divides the bound.

    Isomorphic duplicates across parameterizations (A5 = L2(4) = L2(5),
    B_n(2^k) = C_n(2^k), ...) are each emitted under their own id; see
    coincidence_classes for the grouping.  Deterministic order: family,
    rank, q.
    """
    if bound < 60:
        raise ValueError("bound must be at least 60 (the smallest simple order)")
    bound_fac = factorize_smooth(bound)
    found: list[SimpleGroupId] = []

    n = 5
    while factorial(n) // 2 <= bound:
        if divides(factorial(n) // 2, bound):
            found.append(alternating(n))
        n += 1

    rank_start = {Family.A: 1, Family.TWO_A: 2, Family.B: 2,
                  Family.C: 3, Family.D: 4, Family.TWO_D: 4}
    lie_families = [f for f in Family if f in _RANKED or f in _EXCEPTIONAL]
    for family in lie_families:
        ranks: Iterator[Optional[int]]
        if family in _RANKED:
            ranks = iter(range(rank_start[family], 10**6))
        else:
            ranks = iter([None])
        for n in ranks:
            qs = _candidate_qs(bound_fac, _q_weight(family, n))
            if not qs:
                break
            hit = False
            for q in qs:
                gid = SimpleGroupId(family, n=n, q=q)
                if not is_valid_simple(gid):
                    continue
                if divides(lie_order(family, n, q.q), bound):
                    found.append(gid)
                    hit = True
            # Ranks are unbounded only for the six classical families; stop
            # once even the smallest valid q gives an order past the bound.
            if family in _RANKED:
                small = next((q for q in qs
                              if is_valid_simple(SimpleGroupId(family, n=n, q=q))),
                             None)
                if small is None and not hit:
                    # No admissible q at all for this rank; weights only grow.
                    break
                if small is not None and lie_order(family, n, small.q) > bound:
                    break

    if divides(TITS_ORDER, bound):
        found.append(SimpleGroupId(Family.TITS))

    found.sort(key=SimpleGroupId.sort_key)
    return found


def coincidence_classes(ids: list[SimpleGroupId]) -> list[list[SimpleGroupId]]:
    """Group ids that name abstractly isomorphic groups.

    Only the classical coincidences are recognized: equal order plus
    membership in the known isomorphism list (A5=L2(4)=L2(5), L2(7)=L3(2),
    A6=L2(9), A8=L4(2), U4(2)=S4(3), and B_n(q)=C_n(q) throughout).
    """
    named = {
        frozenset({"A5", "L2(4)", "L2(5)"}),
        frozenset({"L2(7)", "L3(2)"}),
        frozenset({"A6", "L2(9)"}),
        frozenset({"A8", "L4(2)"}),
        frozenset({"U4(2)", "S4(3)"}),
    }
    classes: dict[object, list[SimpleGroupId]] = {}
    for gid in ids:
        key: object = gid.atlas_name()
        if gid.family in (Family.B, Family.C) and gid.n >= 3:
            key = ("BnCn", gid.n, gid.q.q)
        else:
            for cls in named:
                if gid.atlas_name() in cls:
                    key = cls
                    break
        classes.setdefault(key, []).append(gid)
    return [v for v in classes.values() if len(v) > 1]


def parse_group_spec(spec: str) -> SimpleGroupId:
    """Parse an ATLAS-style group name, e.g. A7, L3(4), O8+(2), Sz(8), M11."""
    import re

    s = spec.strip()
    if s in _SPORADIC_NAMES:
        return sporadic(s)
    if s == "2F4(2)'":
        return SimpleGroupId(Family.TITS)
    m = re.fullmatch(r"A(\d+)", s)
    if m:
        return alternating(int(m.group(1)))
    m = re.fullmatch(r"(2G2|2F4|3D4|2E6|G2|F4|E6|E7|E8|Sz)\((\d+)\)", s)
    if m:
        fam = {"Sz": Family.TWO_B2, "2G2": Family.TWO_G2, "2F4": Family.TWO_F4,
               "3D4": Family.THREE_D4, "2E6": Family.TWO_E6, "G2": Family.G2,
               "F4": Family.F4, "E6": Family.E6, "E7": Family.E7,
               "E8": Family.E8}[m.group(1)]
        return lie(fam, int(m.group(2)))
    m = re.fullmatch(r"([LUSO])(\d+)([+-]?)\((\d+)\)", s)
    if m:
        kind, dim, sign, q = m.group(1), int(m.group(2)), m.group(3), int(m.group(4))
        if kind == "L" and not sign and dim >= 2:
            return lie(Family.A, q, n=dim - 1)
        if kind == "U" and not sign and dim >= 3:
            return lie(Family.TWO_A, q, n=dim - 1)
        if kind == "S" and not sign and dim % 2 == 0:
            # S4(q) = O5(q); family C is carried from rank 3 up.
            if dim == 4:
                return lie(Family.B, q, n=2)
            return lie(Family.C, q, n=dim // 2)
        if kind == "O" and dim % 2 == 1 and not sign:
            return lie(Family.B, q, n=(dim - 1) // 2)
        if kind == "O" and dim % 2 == 0 and sign == "+":
            return lie(Family.D, q, n=dim // 2)
        if kind == "O" and dim % 2 == 0 and sign == "-":
            return lie(Family.TWO_D, q, n=dim // 2)
    raise ValueError(f"cannot parse group name {spec!r}")
