"""Finite partial orders as boolean relation matrices, plus isomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import NotAnOrderIso, NotAPoset, SizeMismatch

LeqRows = tuple[tuple[bool, ...], ...]


def order_violation(leq: Sequence[Sequence[bool]]):
    """First broken order law in ``leq``, as ``(law, witness)``, or None.

    Laws are checked in the order reflexivity, antisymmetry, transitivity;
    within each law the lexicographically least witness is returned.
    """
    k = len(leq)
    for x in range(k):
        if not leq[x][x]:
            return ("reflexivity", (x,))
    for x in range(k):
        for y in range(k):
            if x != y and leq[x][y] and leq[y][x]:
                return ("antisymmetry", (x, y))
    for x in range(k):
        for y in range(k):
            if not leq[x][y]:
                continue
            for z in range(k):
                if leq[y][z] and not leq[x][z]:
                    return ("transitivity", (x, y, z))
    return None


@dataclass(frozen=True)
class Poset:
    """A reflexive, antisymmetric, transitive relation on ``{0, .., k-1}``."""

    leq: LeqRows

    def __post_init__(self):
        rows = tuple(tuple(bool(v) for v in row) for row in self.leq)
        object.__setattr__(self, "leq", rows)
        k = len(rows)
        if any(len(row) != k for row in rows):
            raise NotAPoset("shape", ())
        bad = order_violation(rows)
        if bad is not None:
            raise NotAPoset(*bad)

    @property
    def k(self) -> int:
        return len(self.leq)

    def up_set(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.k) if self.leq[x][y])

    def down_set(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.k) if self.leq[y][x])

    @property
    def bottom(self) -> Optional[int]:
        for x in range(self.k):
            if all(self.leq[x][y] for y in range(self.k)):
                return x
        return None

    @property
    def top(self) -> Optional[int]:
        for x in range(self.k):
            if all(self.leq[y][x] for y in range(self.k)):
                return x
        return None

    def is_total(self) -> bool:
        return all(
            self.leq[x][y] or self.leq[y][x]
            for x in range(self.k)
            for y in range(self.k)
        )

    def strict_pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (x, y)
            for x in range(self.k)
            for y in range(self.k)
            if x != y and self.leq[x][y]
        )


@dataclass(frozen=True)
class OrderIso:
    """A carrier relabelling; ``forward[x]`` is the image of element ``x``."""

    forward: tuple[int, ...]

    def __post_init__(self):
        fwd = tuple(self.forward)
        object.__setattr__(self, "forward", fwd)
        if sorted(fwd) != list(range(len(fwd))):
            raise NotAnOrderIso(f"not a permutation: {fwd}")

    @property
    def k(self) -> int:
        return len(self.forward)

    @property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * self.k
        for x, y in enumerate(self.forward):
            inv[y] = x
        return tuple(inv)

    def __call__(self, x: int) -> int:
        return self.forward[x]


def _signatures(p: Poset) -> list[tuple[int, int]]:
    return [(len(p.down_set(x)), len(p.up_set(x))) for x in range(p.k)]


def poset_isomorphisms(source: Poset, target: Poset) -> Iterator[OrderIso]:
    """All order isomorphisms from ``source`` onto ``target``.

    Backtracks over carrier elements in index order trying candidate images in
    ascending order, so isomorphisms come out in lexicographic order of their
    forward maps. Candidates are pruned by (down-set, up-set) size signatures.
    """
    if source.k != target.k:
        raise SizeMismatch(f"poset sizes differ: {source.k} vs {target.k}")
    k = source.k
    sig_s = _signatures(source)
    sig_t = _signatures(target)
    if sorted(sig_s) != sorted(sig_t):
        return
    candidates = [[j for j in range(k) if sig_t[j] == sig_s[i]] for i in range(k)]
    p, q = source.leq, target.leq
    forward = [-1] * k
    used = [False] * k

    def backtrack(i: int) -> Iterator[OrderIso]:
        if i == k:
            yield OrderIso(tuple(forward))
            return
        for j in candidates[i]:
            if used[j]:
                continue
            if all(
                p[i][a] == q[j][forward[a]] and p[a][i] == q[forward[a]][j]
                for a in range(i)
            ):
                forward[i] = j
                used[j] = True
                yield from backtrack(i + 1)
                used[j] = False
                forward[i] = -1

    yield from backtrack(0)


def poset_isomorphism(source: Poset, target: Poset) -> Optional[OrderIso]:
    """First order isomorphism under lexicographic backtracking, or None."""
    return next(poset_isomorphisms(source, target), None)
