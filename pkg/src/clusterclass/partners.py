"""Partner partition and the symbolic ledger of height-1 prime ideals.

Two exchangeable indices are partners when their exchange polynomials
share a non-trivial factor; concretely, when their columns agree up to
sign after dividing by the column gcds and the gcds have equal
2-valuation.  Over the integers all isolated indices (constant
polynomial 2) are mutual partners as well.

For an acyclic seed, every height-1 prime ideal meeting an initial
cluster variable is determined by an irreducible factor p of some
exchange polynomial together with a nonempty subset I of the indices
whose polynomial p divides.  The ledger enumerates these pairs as the
columns of the 0/1 relation matrix presenting the class group.
"""

from __future__ import annotations

from dataclasses import dataclass

from clusterclass.errors import (
    IsolatedIndexOverField,
    NotAcyclic,
    PartnerSetTooLarge,
    UnknownLabel,
)
from clusterclass.factors import (
    KFactor,
    ZFactorLabel,
    column_gcd,
    exchange_polynomial,
    k_factors,
    z_factors,
)
from clusterclass.rings import BaseRing, nu, two_valuation
from clusterclass.seeds import SeedMatrix, is_acyclic, isolated_indices

PTNS_GUARD = 20


def _sign_normalized(col: tuple[int, ...], delta: int) -> tuple[int, ...]:
    scaled = tuple(x // delta for x in col)
    for x in scaled:
        if x > 0:
            return scaled
        if x < 0:
            return tuple(-y for y in scaled)
    return scaled


def partner_predicate(s: SeedMatrix, i: int, j: int) -> bool:
    """Whether f_i and f_j share a factor, decided from the columns alone."""
    col_i, col_j = s.column(i), s.column(j)
    zero_i = all(x == 0 for x in col_i)
    zero_j = all(x == 0 for x in col_j)
    if zero_i or zero_j:
        return zero_i and zero_j
    gi = column_gcd(s, i)
    gj = column_gcd(s, j)
    if two_valuation(gi) != two_valuation(gj):
        return False
    return _sign_normalized(col_i, gi) == _sign_normalized(col_j, gj)


@dataclass(frozen=True)
class PartnerBlock:
    """One equivalence class of partners.

    e is the common 2-valuation of the member gcds (None for the
    isolated block, whose gcds are 0).
    """

    members: tuple[int, ...]
    gcds: tuple[int, ...]
    e: int | None
    isolated: bool = False

    def to_dict(self) -> dict:
        return {
            "members": list(self.members),
            "gcds": list(self.gcds),
            "e": self.e,
            "isolated": self.isolated,
        }


@dataclass(frozen=True)
class PartnerPartition:
    blocks: tuple[PartnerBlock, ...]

    @property
    def isolated_block(self) -> PartnerBlock | None:
        for block in self.blocks:
            if block.isolated:
                return block
        return None

    def block_of(self, i: int) -> PartnerBlock:
        for block in self.blocks:
            if i in block.members:
                return block
        raise KeyError(i)

    def to_dict(self) -> dict:
        return {"blocks": [block.to_dict() for block in self.blocks]}


def partner_partition(s: SeedMatrix, k: BaseRing) -> PartnerPartition:
    """Equivalence classes of the partner relation, ordered by least member.

    Grouping is by the key (2-valuation, sign-normalized column), which
    makes transitivity structural rather than something to verify.
    """
    iso = isolated_indices(s)
    if iso and k.is_field:
        raise IsolatedIndexOverField(
            "seed has isolated indices; normalize before working over a field",
            indices=list(iso),
        )
    groups: dict[object, list[int]] = {}
    for i in range(1, s.n + 1):
        if i in iso:
            key: object = "isolated"
        else:
            g = column_gcd(s, i)
            key = (two_valuation(g), _sign_normalized(s.column(i), g))
        groups.setdefault(key, []).append(i)
    blocks = []
    for key, members in groups.items():
        isolated = key == "isolated"
        gcds = tuple(column_gcd(s, i) for i in members)
        e = None if isolated else two_valuation(gcds[0])
        blocks.append(PartnerBlock(tuple(members), gcds, e, isolated))
    blocks.sort(key=lambda block: block.members[0])
    return PartnerPartition(tuple(blocks))


def g_partners(s: SeedMatrix, label: ZFactorLabel, k: BaseRing) -> tuple[int, ...]:
    """Indices whose exchange polynomial the labelled factor divides."""
    matches = []
    for i in range(1, s.n + 1):
        poly = exchange_polynomial(s, i, k)
        if label in z_factors(poly):
            matches.append(i)
    if not matches:
        raise UnknownLabel(
            "label does not occur in any exchange polynomial of this seed",
            label=label.to_dict(),
        )
    return tuple(matches)


@dataclass(frozen=True)
class SymbolicPrime:
    """The height-1 prime determined by an irreducible factor and a
    nonempty subset of its g-partner set."""

    factor: KFactor
    subset: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"factor": self.factor.to_dict(), "subset": list(self.subset)}


@dataclass(frozen=True)
class PrimeLedger:
    """Columns: all symbolic primes; rows: exchangeable indices.

    relations[i-1][c] = 1 exactly when i lies in the subset of prime c
    (all exponents in the divisor decomposition of x_i are 1).  The
    partition and per-block column counts are retained for reporting.
    """

    n: int
    primes: tuple[SymbolicPrime, ...]
    relations: tuple[tuple[int, ...], ...]
    partition: PartnerPartition
    block_columns: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.primes)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "primes": [prime.to_dict() for prime in self.primes],
            "relations": [list(row) for row in self.relations],
        }


def _block_labels(s: SeedMatrix, block: PartnerBlock, k: BaseRing):
    """Distinct factor labels of a block with their g-partner sets,
    ordered by cyclotomic index."""
    if block.isolated:
        zero = tuple(0 for _ in range(s.n + s.m))
        return [(ZFactorLabel(zero, zero, 0, True), block.members)]
    ptns: dict[ZFactorLabel, list[int]] = {}
    for i in block.members:
        for label in z_factors(exchange_polynomial(s, i, k)):
            ptns.setdefault(label, []).append(i)
    return [(label, tuple(ptns[label])) for label in sorted(ptns, key=lambda lb: lb.cyc)]


def prime_ledger(s: SeedMatrix, k: BaseRing) -> PrimeLedger:
    """Deterministic enumeration of all height-1 primes over the initial
    cluster variables, with the 0/1 relation matrix.

    Order: blocks by least member, labels by cyclotomic index, splits
    ascending, subsets in binary counting order over the sorted
    g-partner set.
    """
    if not is_acyclic(s):
        raise NotAcyclic(
            "the prime ideal enumeration is only available for acyclic seeds"
        )
    partition = partner_partition(s, k)
    primes: list[SymbolicPrime] = []
    block_columns = []
    for block in partition.blocks:
        start = len(primes)
        for label, ptns in _block_labels(s, block, k):
            if len(ptns) > PTNS_GUARD:
                raise PartnerSetTooLarge(
                    f"factor has {len(ptns)} g-partners; subset enumeration "
                    f"is guarded at {PTNS_GUARD}",
                    size=len(ptns),
                    guard=PTNS_GUARD,
                )
            split_count = 1 if label.special_two else nu(k, label.cyc)
            for split in range(1, split_count + 1):
                factor = KFactor(label, split)
                for mask in range(1, 1 << len(ptns)):
                    subset = tuple(
                        ptns[b] for b in range(len(ptns)) if mask >> b & 1
                    )
                    primes.append(SymbolicPrime(factor, subset))
        block_columns.append(len(primes) - start)
    relations = tuple(
        tuple(1 if i in prime.subset else 0 for prime in primes)
        for i in range(1, s.n + 1)
    )
    return PrimeLedger(s.n, tuple(primes), relations, partition, tuple(block_columns))
