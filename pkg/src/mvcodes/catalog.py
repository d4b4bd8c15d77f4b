"""Chains, direct products, and the catalog of all finite Wajsberg algebras.

Every finite Wajsberg algebra is order-isomorphic to a direct product of
totally ordered ones, so the algebras of order n fall into one class per
unordered factorization of n into factors >= 2, plus the chain itself.
``enumerate_wajsberg`` materialises one canonical representative per class;
``transport_structure`` relabels a representative onto any order-isomorphic
carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .algebras import CayleyTable, WajsbergAlgebra, natural_order
from .errors import InvalidSize, NotAnOrderIso, SizeMismatch
from .order import OrderIso, poset_isomorphisms


def chain_wajsberg(k: int) -> WajsbergAlgebra:
    """The unique Wajsberg structure on a k-element total order.

    With elements 0 < 1 < .. < k-1: x->y is the top when x <= y and element
    (k-1) - x + y otherwise; negation reverses the chain.
    """
    if k < 1:
        raise InvalidSize(f"chain needs at least one element, got {k}")
    top = k - 1
    rows = tuple(
        tuple(top if i <= j else top - i + j for j in range(k)) for i in range(k)
    )
    negation = tuple(top - i for i in range(k))
    return WajsbergAlgebra(CayleyTable(rows), negation, top)


def product_wajsberg(w1: WajsbergAlgebra, w2: WajsbergAlgebra) -> WajsbergAlgebra:
    """Componentwise product on the mixed-radix carrier (a, b) -> a*|w2| + b."""
    k1, k2 = w1.k, w2.k
    t1, t2 = w1.circ.rows, w2.circ.rows
    rows = tuple(
        tuple(
            t1[a][c] * k2 + t2[b][d] for c in range(k1) for d in range(k2)
        )
        for a in range(k1)
        for b in range(k2)
    )
    negation = tuple(
        w1.negation[a] * k2 + w2.negation[b] for a in range(k1) for b in range(k2)
    )
    return WajsbergAlgebra(CayleyTable(rows), negation, w1.one * k2 + w2.one)


def factorizations(n: int) -> list[tuple[int, ...]]:
    """All multisets of factors in [2, n-1] with product n, size >= 2.

    Each multiset appears once, factors ascending, and the list is in
    ascending lexicographic order. The count is empty exactly when n is prime
    (or n < 4).
    """
    if n < 2:
        raise InvalidSize(f"factorizations need n >= 2, got {n}")
    out: list[tuple[int, ...]] = []

    def descend(rest: int, lo: int, acc: list[int]) -> None:
        d = lo
        while d * d <= rest:
            if rest % d == 0:
                acc.append(d)
                descend(rest // d, d, acc)
                acc.pop()
            d += 1
        if acc and rest >= lo:
            out.append(tuple(acc) + (rest,))

    descend(n, 2, [])
    return out


@dataclass(frozen=True)
class ChainProduct:
    """A catalog entry: the chain sizes and the algebra they generate."""

    factors: tuple[int, ...]
    algebra: WajsbergAlgebra

    @property
    def order(self) -> int:
        return self.algebra.k

    def factor_label(self) -> str:
        return "x".join(str(f) for f in self.factors)


def _fold_product(factors: tuple[int, ...]) -> WajsbergAlgebra:
    algebra = chain_wajsberg(factors[0])
    for f in factors[1:]:
        algebra = product_wajsberg(algebra, chain_wajsberg(f))
    return algebra


def enumerate_wajsberg(n: int) -> list[ChainProduct]:
    """One algebra per order type of size n: the chain, then one per
    factorization, pairwise non-isomorphic as ordered sets."""
    if n < 1:
        raise InvalidSize(f"enumeration needs n >= 1, got {n}")
    entries = [ChainProduct((n,), chain_wajsberg(n))]
    if n >= 2:
        for factors in factorizations(n):
            entries.append(ChainProduct(factors, _fold_product(factors)))
    return entries


def pi_count(n: int) -> int:
    """Number of proper factorizations of n (order types beyond the chain)."""
    return len(factorizations(n))


def transport_structure(w: WajsbergAlgebra, iso: OrderIso) -> WajsbergAlgebra:
    """Carry the structure of w onto a relabelled carrier.

    The new operation is x->y = iso(inv(x) -> inv(y)); negation and the unit
    move the same way, so iso becomes an isomorphism onto the result and the
    result's natural order is the image of w's.
    """
    if iso.k != w.k:
        raise NotAnOrderIso(f"map size {iso.k} does not match carrier {w.k}")
    f = iso.forward
    inv = iso.inverse
    t, n = w.circ.rows, w.negation
    k = w.k
    rows = tuple(
        tuple(f[t[inv[x]][inv[y]]] for y in range(k)) for x in range(k)
    )
    negation = tuple(f[n[inv[x]]] for x in range(k))
    return WajsbergAlgebra(CayleyTable(rows), negation, f[w.one])


def _is_wajsberg_morphism(
    w1: WajsbergAlgebra, w2: WajsbergAlgebra, f: tuple[int, ...]
) -> bool:
    t1, t2 = w1.circ.rows, w2.circ.rows
    n1, n2 = w1.negation, w2.negation
    if f[w1.zero] != w2.zero:
        return False
    k = w1.k
    if any(f[n1[x]] != n2[f[x]] for x in range(k)):
        return False
    return all(
        f[t1[x][y]] == t2[f[x]][f[y]] for x in range(k) for y in range(k)
    )


def wajsberg_isomorphisms(
    w1: WajsbergAlgebra, w2: WajsbergAlgebra
) -> Iterator[tuple[int, ...]]:
    """All algebra isomorphisms, in lexicographic order of the forward maps.

    An algebra isomorphism is in particular an order isomorphism, so the
    search runs over those and keeps the maps that also preserve the
    operation and the negation.
    """
    if w1.k != w2.k:
        raise SizeMismatch(f"algebra sizes differ: {w1.k} vs {w2.k}")
    p1, p2 = natural_order(w1), natural_order(w2)
    for iso in poset_isomorphisms(p1, p2):
        if _is_wajsberg_morphism(w1, w2, iso.forward):
            yield iso.forward


def wajsberg_isomorphic(
    w1: WajsbergAlgebra, w2: WajsbergAlgebra
) -> Optional[tuple[int, ...]]:
    """First algebra isomorphism found, or None."""
    return next(wajsberg_isomorphisms(w1, w2), None)
