"""Exchange matrices, ice quivers, mutation, acyclicity, canonical forms.

Indices are 1-based throughout the public API: exchangeable indices run
over 1..n, frozen indices over n+1..n+m.  The exchange matrix has n+m
rows and n columns; entries are arbitrary-precision integers (mutation
iterates can grow without bound, so fixed-width storage is ruled out).
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from clusterclass.errors import (
    IndexOutOfRange,
    NotSignSkewSymmetric,
    NotSkewSymmetrizable,
    ShapeMismatch,
    TooLargeForCanonicalization,
)
from clusterclass.rings import BaseRing

CANON_GUARD_ENV = "CLUSTERCLASS_CANON_GUARD"
DEFAULT_CANON_GUARD = 10


@dataclass(frozen=True)
class SeedMatrix:
    """A validated (n+m) x n exchange matrix.

    The symmetrizer is a witness of skew-symmetrizability (minimal
    positive integers per connected component of the principal graph);
    it is carried for reporting and excluded from equality.
    """

    n: int
    m: int
    b: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...] = field(compare=False, repr=False, default=())

    def column(self, i: int) -> tuple[int, ...]:
        """Column i (1-based exchangeable index) as a length n+m tuple."""
        self.check_exchangeable(i)
        c = i - 1
        return tuple(self.b[k][c] for k in range(self.n + self.m))

    def principal(self) -> tuple[tuple[int, ...], ...]:
        return self.b[: self.n]

    def check_exchangeable(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(
                f"index {i} is not an exchangeable index (valid: 1..{self.n})",
                index=i,
                n=self.n,
                m=self.m,
            )

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "b": [list(row) for row in self.b]}


def validate(b, n: int | None = None, m: int | None = None) -> SeedMatrix:
    """Check shape, sign-skew-symmetry, and skew-symmetrizability.

    When n is omitted it defaults to the column count and m to the rest.
    Returns the validated seed together with a positive integer
    symmetrizer d with d_i b_ij = -d_j b_ji.
    """
    rows = [list(row) for row in b]
    if n is None:
        n = len(rows[0]) if rows else 0
    if m is None:
        m = len(rows) - n
    if n < 0 or m < 0:
        raise ShapeMismatch(f"negative dimensions n={n}, m={m}", n=n, m=m)
    if len(rows) != n + m:
        raise ShapeMismatch(
            f"expected {n + m} rows, got {len(rows)}", n=n, m=m, rows=len(rows)
        )
    for k, row in enumerate(rows):
        if len(row) != n:
            raise ShapeMismatch(
                f"row {k + 1} has {len(row)} entries, expected {n}",
                n=n,
                m=m,
                row=k + 1,
            )
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise ShapeMismatch(
                    f"entry {x!r} in row {k + 1} is not an integer", row=k + 1
                )

    for i in range(n):
        for j in range(i, n):
            bij, bji = rows[i][j], rows[j][i]
            if (bij == 0) != (bji == 0) or bij * bji > 0:
                raise NotSignSkewSymmetric(
                    f"entries b_{i + 1},{j + 1}={bij} and b_{j + 1},{i + 1}={bji} "
                    "are neither both zero nor of opposite signs",
                    pair=(i + 1, j + 1),
                )

    mat = tuple(tuple(row) for row in rows)
    d = _symmetrizer(mat, n)
    return SeedMatrix(n, m, mat, d)


def _symmetrizer(b: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    # Propagate the ratio d_j/d_i = b_ij / (-b_ji) along a BFS forest of the
    # principal graph; a non-tree edge with an inconsistent ratio exhibits a
    # cycle witnessing non-symmetrizability.
    ratio: list[Fraction | None] = [None] * n
    parent: list[int | None] = [None] * n
    components: list[list[int]] = []
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        comp = [root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if b[i][j] == 0 or j == i:
                    continue
                r = ratio[i] * Fraction(b[i][j], -b[j][i])
                if ratio[j] is None:
                    ratio[j] = r
                    parent[j] = i
                    comp.append(j)
                    queue.append(j)
                elif ratio[j] != r:
                    raise NotSkewSymmetrizable(
                        "no positive symmetrizer exists; the ratio d_j/d_i is "
                        "inconsistent around a cycle",
                        cycle=_bfs_cycle(parent, i, j),
                    )
        components.append(comp)

    d = [0] * n
    for comp in components:
        scale = lcm(*(ratio[i].denominator for i in comp))
        values = [int(ratio[i] * scale) for i in comp]
        shrink = gcd(*values)
        for i, v in zip(comp, values):
            d[i] = v // shrink
    return tuple(d)


def _bfs_cycle(parent: list[int | None], i: int, j: int) -> tuple[int, ...]:
    # The edge (i, j) closes a cycle with the two tree paths to the root.
    def ancestry(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    up_i, up_j = ancestry(i), ancestry(j)
    common = set(up_i) & set(up_j)
    trim_i = list(itertools.takewhile(lambda v: v not in common, up_i))
    trim_j = list(itertools.takewhile(lambda v: v not in common, up_j))
    meet = up_i[len(trim_i)]
    cycle = trim_i + [meet] + trim_j[::-1]
    return tuple(v + 1 for v in cycle)


def mutate(s: SeedMatrix, i: int) -> SeedMatrix:
    """Mutation in direction i: flip row/column i, adjust the rest.

    b'_kl = -b_kl if k = i or l = i, else b_kl + (|b_ki| b_il + b_ki |b_il|)/2;
    the halved sum is always an even integer, so the result is exact.
    """
    s.check_exchangeable(i)
    p = i - 1
    b = s.b
    new_rows = []
    for k in range(s.n + s.m):
        if k == p:
            new_rows.append(tuple(-x for x in b[k]))
            continue
        bkp = b[k][p]
        row = []
        for l in range(s.n):
            if l == p:
                row.append(-b[k][l])
            elif bkp == 0 or b[p][l] == 0:
                row.append(b[k][l])
            else:
                row.append(b[k][l] + (abs(bkp) * b[p][l] + bkp * abs(b[p][l])) // 2)
        new_rows.append(tuple(row))
    return SeedMatrix(s.n, s.m, tuple(new_rows), s.symmetrizer)


@dataclass(frozen=True)
class IceQuiver:
    """Directed multigraph of a seed: arc (src, dst, multiplicity).

    Arrows between exchangeable i, j come from b_ij > 0; a frozen row k
    with b_kj < 0 contributes -b_kj arrows j -> k (the matrix has no
    column for k, so both signs of the frozen row are used).  No arc ever
    joins two frozen vertices.
    """

    n: int
    m: int
    arcs: tuple[tuple[int, int, int], ...]

    def multiplicity(self, src: int, dst: int) -> int:
        for a, b_, w in self.arcs:
            if a == src and b_ == dst:
                return w
        return 0

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(d for srcv, d, _ in self.arcs if srcv == v))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(srcv for srcv, d, _ in self.arcs if d == v))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(set(self.out_neighbors(v)) | set(self.in_neighbors(v))))

    def is_frozen(self, v: int) -> bool:
        return v > self.n

    def to_seed(self) -> SeedMatrix:
        """Rebuild the exchange matrix; faithful when the principal part is
        skew-symmetric (arc multiplicities then determine every entry)."""
        b = [[0] * self.n for _ in range(self.n + self.m)]
        for src, dst, w in self.arcs:
            if dst <= self.n:
                b[src - 1][dst - 1] = w
                if src <= self.n:
                    b[dst - 1][src - 1] = -w
            else:
                b[dst - 1][src - 1] = -w
        return validate(b, self.n, self.m)


def build_quiver(s: SeedMatrix) -> IceQuiver:
    arcs: dict[tuple[int, int], int] = {}
    for j in range(s.n):
        for k in range(s.n + s.m):
            e = s.b[k][j]
            if e > 0:
                arcs[(k + 1, j + 1)] = arcs.get((k + 1, j + 1), 0) + e
            elif e < 0 and k >= s.n:
                arcs[(j + 1, k + 1)] = arcs.get((j + 1, k + 1), 0) - e
    ordered = tuple((a, b_, w) for (a, b_), w in sorted(arcs.items()))
    return IceQuiver(s.n, s.m, ordered)


def is_acyclic(s: SeedMatrix) -> bool:
    """Whether the exchangeable subquiver has no directed cycle."""
    n = s.n
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if s.b[i][j] > 0:
                out[i].append(j)
                indeg[j] += 1
    queue = deque(i for i in range(n) if indeg[i] == 0)
    seen = 0
    while queue:
        i = queue.popleft()
        seen += 1
        for j in out[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    return seen == n


@dataclass(frozen=True)
class CanonicalSeed:
    """Lexicographically minimal matrix over simultaneous relabelings.

    Exchangeable indices are permuted in rows and columns together;
    frozen rows are permuted independently.  Two seeds get equal
    canonical forms iff they differ by such a relabeling pair.
    """

    n: int
    m: int
    b: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "b": [list(row) for row in self.b]}


def _resolve_guard(guard: int | None) -> int:
    if guard is not None:
        return guard
    env = os.environ.get(CANON_GUARD_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_CANON_GUARD


def canonical_form(s: SeedMatrix, guard: int | None = None) -> CanonicalSeed:
    """Exhaustive minimum over relabelings, guarded by total size.

    Only permutations of the exchangeable indices are enumerated; for
    each one the frozen rows are sorted, which realizes the independent
    frozen permutation without enumerating it.
    """
    limit = _resolve_guard(guard)
    if s.n + s.m > limit:
        raise TooLargeForCanonicalization(
            f"seed has n+m={s.n + s.m} > guard {limit}; raise the guard to force",
            size=s.n + s.m,
            guard=limit,
        )
    n, m, b = s.n, s.m, s.b
    best: tuple | None = None
    cols = range(n)
    for perm in itertools.permutations(range(n)):
        principal = tuple(tuple(b[perm[r]][perm[c]] for c in cols) for r in range(n))
        if best is not None and principal > best[:n]:
            continue
        frozen = tuple(sorted(tuple(b[k][perm[c]] for c in cols) for k in range(n, n + m)))
        cand = principal + frozen
        if best is None or cand < best:
            best = cand
    assert best is not None
    return CanonicalSeed(n, m, best)


@dataclass(frozen=True)
class MutationClass:
    seeds: frozenset[CanonicalSeed]
    complete: bool

    def sorted_seeds(self) -> list[CanonicalSeed]:
        return sorted(self.seeds, key=lambda c: c.b)


def mutation_class(s: SeedMatrix, cap: int = 1000, guard: int | None = None) -> MutationClass:
    """BFS over mutations, deduplicated by canonical form.

    Stops with complete=False as soon as a seed beyond the cap would be
    recorded; a class of exactly cap seeds that closes is complete.
    """
    start = canonical_form(s, guard)
    seen: set[CanonicalSeed] = {start}
    queue: deque[SeedMatrix] = deque([s])
    while queue:
        current = queue.popleft()
        for i in range(1, s.n + 1):
            neighbor = mutate(current, i)
            canon = canonical_form(neighbor, guard)
            if canon in seen:
                continue
            if len(seen) >= cap:
                return MutationClass(frozenset(seen), False)
            seen.add(canon)
            queue.append(neighbor)
    return MutationClass(frozenset(seen), True)


@dataclass(frozen=True)
class NormalizationResult:
    seed: SeedMatrix
    removed: tuple[int, ...]


def isolated_indices(s: SeedMatrix) -> tuple[int, ...]:
    """Exchangeable indices whose column is zero (no neighbors at all)."""
    return tuple(
        i for i in range(1, s.n + 1) if all(x == 0 for x in s.column(i))
    )


def normalize_isolated(s: SeedMatrix, k: BaseRing) -> NormalizationResult:
    """Drop isolated exchangeable indices when the base ring is a field.

    Over a field an isolated cluster variable satisfies x x' = 2, hence is
    a unit, and freezing it leaves an all-zero inert row; removing the
    index altogether yields the same algebra.  Over the integers the
    constant exchange polynomial 2 is not invertible and the seed is
    returned unchanged.
    """
    removed = isolated_indices(s)
    if not k.is_field or not removed:
        return NormalizationResult(s, ())
    gone = {i - 1 for i in removed}
    keep_cols = [c for c in range(s.n) if c not in gone]
    keep_rows = keep_cols + list(range(s.n, s.n + s.m))
    new_b = tuple(tuple(s.b[r][c] for c in keep_cols) for r in keep_rows)
    new_d = tuple(s.symmetrizer[c] for c in keep_cols)
    return NormalizationResult(SeedMatrix(len(keep_cols), s.m, new_b, new_d), removed)


def seed_from_dict(obj) -> SeedMatrix:
    """Parse the interchange JSON object {"n": int, "m": int, "b": [[...]]}."""
    if not isinstance(obj, dict):
        raise ShapeMismatch("seed JSON must be an object with keys n, m, b")
    missing = [key for key in ("n", "m", "b") if key not in obj]
    if missing:
        raise ShapeMismatch(f"seed JSON lacks keys: {', '.join(missing)}")
    n, m, b = obj["n"], obj["m"], obj["b"]
    if not isinstance(n, int) or not isinstance(m, int) or isinstance(n, bool) or isinstance(m, bool):
        raise ShapeMismatch("seed JSON n and m must be integers")
    if not isinstance(b, list) or not all(isinstance(row, list) for row in b):
        raise ShapeMismatch("seed JSON b must be a list of rows")
    return validate(b, n, m)
