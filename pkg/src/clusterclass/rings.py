"""Base rings, specified only through the data the theory consumes.

A base ring enters every computation through two questions: is it a
field, and does it contain a primitive d-th root of unity.  The latter
drives nu(d), the number of irreducible factors of the d-th cyclotomic
polynomial: 1 when the primitive roots are absent, phi(d) when present.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from clusterclass.errors import ClusterError

_KINDS = ("Z", "Q", "algclosed", "custom")


def totient(d: int) -> int:
    """Euler phi by trial-division factorization (exact, small inputs).

    Kept local so the test suite can check it against an independent
    library implementation.
    """
    if d < 1:
        raise ValueError(f"totient undefined for {d}")
    result = d
    p = 2
    rest = d
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if rest > 1:
        result -= result // rest
    return result


def divisors(d: int) -> list[int]:
    """All positive divisors of d >= 1 in ascending order."""
    if d < 1:
        raise ValueError(f"divisors undefined for {d}")
    small, large = [], []
    k = 1
    while k * k <= d:
        if d % k == 0:
            small.append(k)
            if k * k != d:
                large.append(d // k)
        k += 1
    return small + large[::-1]


def odd_divisors(d: int) -> list[int]:
    return [e for e in divisors(d) if e % 2 == 1]


def odd_part(d: int) -> int:
    while d % 2 == 0:
        d //= 2
    return d


def two_valuation(d: int) -> int:
    if d == 0:
        raise ValueError("2-valuation of 0 is undefined")
    v = 0
    while d % 2 == 0:
        d //= 2
        v += 1
    return v


def _divisor_closure(orders: frozenset[int]) -> frozenset[int]:
    closed: set[int] = set()
    for d in orders:
        closed.update(divisors(d))
    return frozenset(closed)


@dataclass(frozen=True)
class BaseRing:
    """Either the integers or a characteristic-zero field.

    kind: "Z" | "Q" | "algclosed" | "custom".  For "custom" the field is
    described by its divisor-closed set of root orders: d is in `roots`
    iff the field contains a primitive d-th root of unity.  1 and 2 are
    always present (1 and -1 exist in characteristic zero).
    """

    kind: str
    roots: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "custom":
            closed = _divisor_closure(self.roots | {1, 2})
            object.__setattr__(self, "roots", closed)
        elif self.roots:
            raise ValueError("root orders are only meaningful for custom fields")

    @classmethod
    def integers(cls) -> "BaseRing":
        return cls("Z")

    @classmethod
    def rationals(cls) -> "BaseRing":
        return cls("Q")

    @classmethod
    def algebraically_closed(cls) -> "BaseRing":
        return cls("algclosed")

    @classmethod
    def custom(cls, orders) -> "BaseRing":
        return cls("custom", frozenset(int(d) for d in orders))

    @classmethod
    def parse(cls, text: str) -> "BaseRing":
        """Parse the CLI encoding: Z | Q | algclosed | custom:4,8."""
        if text == "Z":
            return cls.integers()
        if text == "Q":
            return cls.rationals()
        if text == "algclosed":
            return cls.algebraically_closed()
        if text.startswith("custom:"):
            body = text[len("custom:"):]
            try:
                orders = [int(part) for part in body.split(",") if part]
            except ValueError:
                raise ClusterError(f"bad root order list in ring {text!r}") from None
            if not orders or any(d < 1 for d in orders):
                raise ClusterError(f"bad root order list in ring {text!r}")
            return cls.custom(orders)
        raise ClusterError(f"unknown ring encoding {text!r}")

    def encode(self) -> str:
        if self.kind != "custom":
            return self.kind
        # minimal generators: orders maximal under divisibility
        tops = sorted(
            d for d in self.roots
            if not any(e != d and e % d == 0 for e in self.roots)
        )
        return "custom:" + ",".join(str(d) for d in tops)

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def has_primitive_root(self, d: int) -> bool:
        """Whether mu*_d(K) is nonempty."""
        if d < 1:
            raise ValueError(f"root order must be positive, got {d}")
        if self.kind in ("Z", "Q"):
            return d <= 2
        if self.kind == "algclosed":
            return True
        return d in self.roots


def nu(k: BaseRing, d: int) -> int:
    """Number of irreducible factors of the d-th cyclotomic polynomial over k."""
    if d < 1:
        raise ValueError(f"cyclotomic index must be positive, got {d}")
    return totient(d) if k.has_primitive_root(d) else 1
