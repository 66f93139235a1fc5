"""Exchange polynomials and their irreducible factors, held symbolically.

An exchange polynomial is a sum of two coprime monomials g^d + h^d with
d the column gcd.  Writing d = 2^l c with c odd, the complete
factorization over the integers is the product over odd e | c of the
evaluated cyclotomic polynomials Phi_{2^{l+1} e}(g, h), each
irreducible; over a field every such factor splits further into
nu_K(2^{l+1} e) conjugate irreducible factors.  Factors are therefore
represented by labels (normalized base pair, cyclotomic index), never as
expanded polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from clusterclass.errors import IsolatedIndexOverField
from clusterclass.rings import (
    BaseRing,
    nu,
    odd_divisors,
    odd_part,
    two_valuation,
)
from clusterclass.seeds import SeedMatrix

__all__ = [
    "BaseRing",
    "nu",
    "ExchangePoly",
    "ZFactorLabel",
    "KFactor",
    "column_gcd",
    "exchange_polynomial",
    "z_factors",
    "k_factors",
    "common_factors",
]


def column_gcd(s: SeedMatrix, i: int) -> int:
    """gcd of the absolute entries of column i; 0 iff the index is isolated."""
    return gcd(*(abs(x) for x in s.column(i)))


@dataclass(frozen=True)
class ExchangePoly:
    """f_i as an exponent-vector pair: f_i = x^u + x^v.

    u_k = max(b_ki, 0) and v_k = max(-b_ki, 0), so the supports are
    disjoint.  A zero column over the integers gives the constant
    polynomial 2 (both monomials empty), flagged is_constant_two.
    """

    owner: int
    u: tuple[int, ...]
    v: tuple[int, ...]
    is_constant_two: bool = False


def exchange_polynomial(s: SeedMatrix, i: int, k: BaseRing) -> ExchangePoly:
    col = s.column(i)
    if all(x == 0 for x in col):
        if k.is_field:
            raise IsolatedIndexOverField(
                f"index {i} is isolated; normalize the seed before working over a field",
                index=i,
            )
        return ExchangePoly(i, tuple(0 for _ in col), tuple(0 for _ in col), True)
    u = tuple(max(x, 0) for x in col)
    v = tuple(max(-x, 0) for x in col)
    return ExchangePoly(i, u, v)


@dataclass(frozen=True)
class ZFactorLabel:
    """One irreducible integer factor, up to associates.

    base_u/base_v is the column divided by its gcd, with the two
    exponent vectors stored in lexicographic order: f_i and f_j can only
    match with the roles of the monomials swapped or negated, and
    Phi_d(g, h) = Phi_d(h, g) for the even cyclotomic indices d that
    occur here, so sorting loses nothing.  cyc is the cyclotomic index
    2^{l+1} e.  The constant factor 2 of an isolated column gets the
    special label (zero base, cyc 0, special_two).
    """

    base_u: tuple[int, ...]
    base_v: tuple[int, ...]
    cyc: int
    special_two: bool = False

    def to_dict(self, split: int | None = None) -> dict:
        out = {
            "base_u": list(self.base_u),
            "base_v": list(self.base_v),
            "cyc": self.cyc,
            "special_two": self.special_two,
        }
        if split is not None:
            out["split"] = split
        return out


def _normalized_base(u: tuple[int, ...], v: tuple[int, ...], delta: int):
    bu = tuple(x // delta for x in u)
    bv = tuple(x // delta for x in v)
    return (bu, bv) if bu <= bv else (bv, bu)


def z_factors(p: ExchangePoly) -> list[ZFactorLabel]:
    """All irreducible factors over the integers, ordered by cyclotomic index."""
    if p.is_constant_two:
        zero = tuple(0 for _ in p.u)
        return [ZFactorLabel(zero, zero, 0, True)]
    delta = gcd(*(p.u + p.v))
    base_u, base_v = _normalized_base(p.u, p.v, delta)
    l = two_valuation(delta)
    labels = [
        ZFactorLabel(base_u, base_v, (1 << (l + 1)) * e)
        for e in odd_divisors(odd_part(delta))
    ]
    return labels


@dataclass(frozen=True)
class KFactor:
    """One irreducible factor over the base ring.

    A ZFactorLabel with cyclotomic index d splits into nu_K(d) conjugate
    irreducible factors; split_index in 1..nu_K(d) tags them formally
    (no root-of-unity arithmetic is ever performed).
    """

    z_label: ZFactorLabel
    split_index: int

    def to_dict(self) -> dict:
        return self.z_label.to_dict(split=self.split_index)


def k_factors(p: ExchangePoly, k: BaseRing) -> list[KFactor]:
    out = []
    for label in z_factors(p):
        count = 1 if label.special_two else nu(k, label.cyc)
        out.extend(KFactor(label, s) for s in range(1, count + 1))
    return out


def common_factors(p: ExchangePoly, q: ExchangePoly) -> list[ZFactorLabel]:
    """Shared integer factors of two exchange polynomials.

    Labels are collision-free across columns, so a plain intersection of
    the two label lists is the polynomial gcd's factor set.
    """
    mine = z_factors(p)
    theirs = set(z_factors(q))
    return [label for label in mine if label in theirs]
