"""Class-group rank, two independent ways, plus factoriality decisions.

The class group of an acyclic Krull cluster algebra is presented as
Z^t modulo the rows of the 0/1 relation matrix of the prime ledger, one
row per initial cluster variable.  The rank is computed once by the
closed block formula over the partner partition and once by an exact
Smith normal form of the relation matrix; the two routes never share
intermediate results, so their agreement is a real check.
"""

from __future__ import annotations

from dataclasses import dataclass

from clusterclass.errors import (
    IndexNotFrozen,
    IsolatedIndexOverField,
    NotAcyclic,
    TorsionDetected,
)
from clusterclass.factors import exchange_polynomial, k_factors
from clusterclass.partners import partner_partition, prime_ledger
from clusterclass.rings import BaseRing, nu, odd_divisors, odd_part
from clusterclass.seeds import SeedMatrix, is_acyclic, isolated_indices


def smith_normal_form(mat) -> tuple[tuple[int, ...], int]:
    """Invariant factors d_1 | d_2 | ... and the rank of an integer matrix.

    Exact row/column reduction choosing the nonzero entry of least
    absolute value as pivot to limit coefficient growth.  The returned
    cokernel reads as Z^(cols - rank) plus Z/d_i for each factor > 1.
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    factors: list[int] = []
    t = 0
    while t < rows and t < cols:
        pr = pc = -1
        best = None
        for r in range(t, rows):
            for c in range(t, cols):
                x = a[r][c]
                if x != 0 and (best is None or abs(x) < best):
                    best, pr, pc = abs(x), r, c
        if best is None:
            break
        a[t], a[pr] = a[pr], a[t]
        for row in a:
            row[t], row[pc] = row[pc], row[t]
        while True:
            # Clear column t; nonzero remainders become smaller pivots.
            for r in range(t + 1, rows):
                if a[r][t]:
                    q = a[r][t] // a[t][t]
                    if q:
                        a[r] = [x - q * y for x, y in zip(a[r], a[t])]
            stray = next((r for r in range(t + 1, rows) if a[r][t]), None)
            if stray is not None:
                a[t], a[stray] = a[stray], a[t]
                continue
            for c in range(t + 1, cols):
                if a[t][c]:
                    q = a[t][c] // a[t][t]
                    if q:
                        for row in a:
                            row[c] -= q * row[t]
            stray = next((c for c in range(t + 1, cols) if a[t][c]), None)
            if stray is not None:
                for row in a:
                    row[t], row[stray] = row[stray], row[t]
                continue
            # Divisibility of the remaining block; a violation re-enters
            # the elimination with the offending row mixed in.
            pivot = a[t][t]
            culprit = next(
                (
                    r
                    for r in range(t + 1, rows)
                    if any(a[r][c] % pivot for c in range(t + 1, cols))
                ),
                None,
            )
            if culprit is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[culprit])]
        factors.append(abs(a[t][t]))
        t += 1
    return tuple(factors), len(factors)


@dataclass(frozen=True)
class ClassGroupReport:
    """Rank with per-block breakdown; SNF fields absent on the formula path."""

    rank: int
    t: int
    n: int
    per_block: tuple[tuple[tuple[int, ...], int], ...]
    invariant_factors: tuple[int, ...] | None = None
    free_certificate: bool | None = None

    def to_dict(self) -> dict:
        out = {
            "rank": self.rank,
            "t": self.t,
            "n": self.n,
            "blocks": [
                {"members": list(members), "r": r} for members, r in self.per_block
            ],
        }
        if self.invariant_factors is not None:
            out["invariant_factors"] = list(self.invariant_factors)
        if self.free_certificate is not None:
            out["free"] = self.free_certificate
        return out


def _require_acyclic_normalized(s: SeedMatrix, k: BaseRing) -> None:
    if not is_acyclic(s):
        raise NotAcyclic("class group machinery requires an acyclic seed")
    iso = isolated_indices(s)
    if iso and k.is_field:
        raise IsolatedIndexOverField(
            "seed has isolated indices; normalize before working over a field",
            indices=list(iso),
        )


def _block_rank(block, k: BaseRing) -> int:
    if block.isolated:
        size = len(block.members)
        return (1 << size) - 1 - size
    # Only odd d dividing some member gcd contribute: all other terms
    # have c(V, d) = 0 and vanish.
    odd_parts = [odd_part(g) for g in block.gcds]
    candidates = sorted(set().union(*(odd_divisors(o) for o in odd_parts)))
    total = 0
    for d in candidates:
        c = sum(1 for o in odd_parts if o % d == 0)
        total += ((1 << c) - 1) * nu(k, (1 << (block.e + 1)) * d)
    return total - len(block.members)


def rank_by_formula(s: SeedMatrix, k: BaseRing) -> ClassGroupReport:
    """Closed-form rank: sum over partner blocks of the block term."""
    _require_acyclic_normalized(s, k)
    partition = partner_partition(s, k)
    per_block = tuple(
        (block.members, _block_rank(block, k)) for block in partition.blocks
    )
    rank = sum(r for _, r in per_block)
    return ClassGroupReport(rank, rank + s.n, s.n, per_block)


def rank_by_snf(s: SeedMatrix, k: BaseRing) -> ClassGroupReport:
    """Rank from the prime ledger's relation matrix via Smith normal form.

    The quotient presented by the relation matrix is always free: the
    invariant factors must be exactly n ones.  Anything else is an
    implementation bug and raises TorsionDetected.
    """
    _require_acyclic_normalized(s, k)
    ledger = prime_ledger(s, k)
    invariant_factors, mat_rank = smith_normal_form(ledger.relations)
    if mat_rank != s.n or any(d != 1 for d in invariant_factors):
        raise TorsionDetected(
            "relation matrix is not a free presentation; this is a bug",
            invariant_factors=list(invariant_factors),
            n=s.n,
        )
    per_block = tuple(
        (block.members, columns - len(block.members))
        for block, columns in zip(ledger.partition.blocks, ledger.block_columns)
    )
    return ClassGroupReport(
        rank=ledger.t - s.n,
        t=ledger.t,
        n=s.n,
        per_block=per_block,
        invariant_factors=invariant_factors,
        free_certificate=True,
    )


@dataclass(frozen=True)
class FactorialityReport:
    factorial: bool
    witness: str
    detail: dict | None = None

    def to_dict(self) -> dict:
        out = {"factorial": self.factorial, "witness": self.witness}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def is_factorial(s: SeedMatrix, k: BaseRing) -> FactorialityReport:
    """Factorial iff all exchange polynomials are prime and pairwise distinct.

    Decided on the polynomial level (single irreducible factor each, no
    non-trivial partners) and cross-checked against rank 0; the two
    criteria are equivalent for acyclic seeds and both are evaluated.
    """
    _require_acyclic_normalized(s, k)
    partition = partner_partition(s, k)
    verdict = True
    witness = "all exchange polynomials prime and pairwise distinct"
    detail = None
    offending_block = next(
        (block for block in partition.blocks if len(block.members) > 1), None
    )
    if offending_block is not None:
        verdict = False
        i, j = offending_block.members[:2]
        witness = (
            f"exchange polynomials of indices {i} and {j} share a factor"
        )
        detail = {"partners": [i, j]}
    else:
        for i in range(1, s.n + 1):
            count = len(k_factors(exchange_polynomial(s, i, k), k))
            if count > 1:
                verdict = False
                witness = (
                    f"exchange polynomial of index {i} splits into {count} "
                    "irreducible factors"
                )
                detail = {"column": i, "factors": count}
                break
    assert verdict == (rank_by_formula(s, k).rank == 0)
    return FactorialityReport(verdict, witness, detail)


def has_principal_coefficients(s: SeedMatrix) -> bool:
    """True iff m = n and the frozen rows form the identity matrix."""
    if s.m != s.n:
        return False
    return all(
        s.b[s.n + r][c] == (1 if r == c else 0)
        for r in range(s.n)
        for c in range(s.n)
    )


def principal_extension(s: SeedMatrix) -> SeedMatrix:
    """The seed's principal part with fresh identity frozen rows appended."""
    b = list(s.principal()) + [
        tuple(1 if c == r else 0 for c in range(s.n)) for r in range(s.n)
    ]
    return SeedMatrix(s.n, s.n, tuple(b), s.symmetrizer)


@dataclass(frozen=True)
class FreezeReport:
    """Outcome of the source-freezing reduction for non-invertible frozen
    variables."""

    applies: bool
    noninvertible: tuple[int, ...]
    statement: str
    class_group: ClassGroupReport | None = None
    offending: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "applies": self.applies,
            "noninvertible": list(self.noninvertible),
            "statement": self.statement,
        }
        out["class_group"] = (
            self.class_group.to_dict() if self.class_group is not None else None
        )
        out["offending"] = self.offending
        return out


APPLIES_STATEMENT = (
    "every non-invertible frozen row is entrywise non-positive: the cluster "
    "algebra equals its upper cluster algebra and its class group is "
    "isomorphic to the one with all frozen variables invertible, reported here"
)

UNAVAILABLE_STATEMENT = (
    "a non-invertible frozen row has a positive entry; no reduction to the "
    "invertible case is known, and whether non-invertible frozen variables "
    "are always prime is open"
)


def source_freezing_reduction(
    s: SeedMatrix, noninvertible, k: BaseRing
) -> FreezeReport:
    """Reduce to the all-invertible case when every non-invertible frozen
    row is non-positive; otherwise report that no reduction is known."""
    chosen = tuple(sorted(set(int(i) for i in noninvertible)))
    for i in chosen:
        if not s.n < i <= s.n + s.m:
            raise IndexNotFrozen(
                f"index {i} is not frozen (frozen range: {s.n + 1}..{s.n + s.m})",
                index=i,
            )
    if not is_acyclic(s):
        raise NotAcyclic("class group machinery requires an acyclic seed")
    for i in chosen:
        row = s.b[i - 1]
        for c, x in enumerate(row):
            if x > 0:
                return FreezeReport(
                    False,
                    chosen,
                    UNAVAILABLE_STATEMENT,
                    offending={"row": i, "column": c + 1, "entry": x},
                )
    report = rank_by_snf(s, k)
    return FreezeReport(True, chosen, APPLIES_STATEMENT, class_group=report)
