"""Finite algebras as Cayley tables, with exhaustive axiom verification.

Three presentations of the same kind of structure are supported: bounded
commutative BCK algebras (difference-like operation ``*`` with least element
``zero`` and greatest element ``one``), MV algebras (truncated addition ``+``
with an involutive complement), and Wajsberg algebras (implication ``->`` with
an involutive negation). Carriers are always ``{0, .., k-1}``; any element
names live in calling code.

Verification scans every axiom over the whole carrier (O(k^3) for the
three-variable axioms) and reports the lexicographically least witness per
violated axiom. Carriers stay small throughout (k <= 12 in practice), so no
algebraic shortcuts are taken.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Sequence, Union

from .errors import EquivalenceBroken, MalformedTable, NotAnAlgebra
from .order import Poset

Rows = tuple[tuple[int, ...], ...]


def _as_rows(rows) -> Rows:
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class CayleyTable:
    """A k-by-k operation table closed over ``{0, .., k-1}``."""

    rows: Rows

    def __post_init__(self):
        rows = _as_rows(self.rows)
        object.__setattr__(self, "rows", rows)
        k = len(rows)
        if k == 0:
            raise MalformedTable("empty table")
        for i, row in enumerate(rows):
            if len(row) != k:
                raise MalformedTable(f"row {i} has length {len(row)}, expected {k}")
            for j, v in enumerate(row):
                if not 0 <= v < k:
                    raise MalformedTable(f"entry ({i},{j}) = {v} out of range [0,{k})")

    @property
    def k(self) -> int:
        return len(self.rows)

    def at(self, x: int, y: int) -> int:
        return self.rows[x][y]


def _check_unary(values, k: int) -> tuple[int, ...]:
    vals = tuple(int(v) for v in values)
    if len(vals) != k:
        raise MalformedTable(f"unary map has {len(vals)} entries, expected {k}")
    for i, v in enumerate(vals):
        if not 0 <= v < k:
            raise MalformedTable(f"unary entry {i} = {v} out of range [0,{k})")
    return vals


def _check_constant(name: str, value: int, k: int) -> int:
    value = int(value)
    if not 0 <= value < k:
        raise MalformedTable(f"{name} = {value} out of range [0,{k})")
    return value


@dataclass(frozen=True)
class BckAlgebra:
    """Bounded commutative BCK presentation: operation ``*``, constants 0 and 1."""

    table: CayleyTable
    zero: int
    one: int

    def __post_init__(self):
        object.__setattr__(self, "zero", _check_constant("zero", self.zero, self.k))
        object.__setattr__(self, "one", _check_constant("one", self.one, self.k))

    @property
    def k(self) -> int:
        return self.table.k

    def star(self, x: int, y: int) -> int:
        return self.table.rows[x][y]


@dataclass(frozen=True)
class MvAlgebra:
    """MV presentation: truncated sum, involutive complement, least element."""

    oplus: CayleyTable
    complement: tuple[int, ...]
    zero: int

    def __post_init__(self):
        object.__setattr__(self, "complement", _check_unary(self.complement, self.k))
        object.__setattr__(self, "zero", _check_constant("zero", self.zero, self.k))

    @property
    def k(self) -> int:
        return self.oplus.k

    @property
    def one(self) -> int:
        return self.complement[self.zero]

    def plus(self, x: int, y: int) -> int:
        return self.oplus.rows[x][y]

    def neg(self, x: int) -> int:
        return self.complement[x]


@dataclass(frozen=True)
class WajsbergAlgebra:
    """Wajsberg presentation: implication, involutive negation, unit."""

    circ: CayleyTable
    negation: tuple[int, ...]
    one: int

    def __post_init__(self):
        object.__setattr__(self, "negation", _check_unary(self.negation, self.k))
        object.__setattr__(self, "one", _check_constant("one", self.one, self.k))

    @property
    def k(self) -> int:
        return self.circ.k

    @property
    def zero(self) -> int:
        return self.negation[self.one]

    def imp(self, x: int, y: int) -> int:
        return self.circ.rows[x][y]

    def neg(self, x: int) -> int:
        return self.negation[x]


Algebra = Union[BckAlgebra, MvAlgebra, WajsbergAlgebra]


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of a verification run; valid iff no violations."""

    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms(self) -> frozenset[str]:
        return frozenset(v.axiom for v in self.violations)

    def witness(self, axiom: str):
        for v in self.violations:
            if v.axiom == axiom:
                return v.witness
        return None


AxiomSuite = list[tuple[str, int, Callable[..., bool]]]


def bck_axiom_suite(b: BckAlgebra) -> AxiomSuite:
    """Axioms of a bounded commutative BCK algebra as (name, arity, predicate)."""
    s = b.table.rows
    z, o = b.zero, b.one
    return [
        ("bck1", 3, lambda x, y, w: s[s[s[x][y]][s[x][w]]][s[w][y]] == z),
        ("bck2", 2, lambda x, y: s[s[x][s[x][y]]][y] == z),
        ("bck3", 1, lambda x: s[x][x] == z),
        ("bck4", 2, lambda x, y: not (s[x][y] == z and s[y][x] == z) or x == y),
        ("bck5", 1, lambda x: s[z][x] == z),
        ("bounded", 1, lambda x: s[x][o] == z),
        ("commutative", 2, lambda x, y: s[y][s[y][x]] == s[x][s[x][y]]),
    ]


def mv_axiom_suite(m: MvAlgebra) -> AxiomSuite:
    """Monoid laws, the MV axioms, and the derived law x + x' = 1."""
    p = m.oplus.rows
    c = m.complement
    z, o = m.zero, m.one
    return [
        ("assoc", 3, lambda x, y, w: p[p[x][y]][w] == p[x][p[y][w]]),
        ("comm", 2, lambda x, y: p[x][y] == p[y][x]),
        ("identity", 1, lambda x: p[z][x] == x and p[x][z] == x),
        ("double-complement", 1, lambda x: c[c[x]] == x),
        ("top-absorbing", 1, lambda x: p[x][o] == o),
        ("lukasiewicz", 2, lambda x, y: p[c[p[c[x]][y]]][y] == p[c[p[c[y]][x]]][x]),
        ("excluded-middle", 1, lambda x: p[x][c[x]] == o),
    ]


def wajsberg_axiom_suite(w: WajsbergAlgebra) -> AxiomSuite:
    """The four Wajsberg axioms plus the derived involution of negation."""
    t = w.circ.rows
    n = w.negation
    o = w.one
    return [
        ("w1", 1, lambda x: t[o][x] == x),
        ("w2", 3, lambda x, y, v: t[t[x][y]][t[t[y][v]][t[x][v]]] == o),
        ("w3", 2, lambda x, y: t[t[x][y]][y] == t[t[y][x]][x]),
        ("w4", 2, lambda x, y: t[t[n[x]][n[y]]][t[y][x]] == o),
        ("involution", 1, lambda x: n[n[x]] == x),
    ]


def axiom_suite(algebra: Algebra) -> AxiomSuite:
    if isinstance(algebra, BckAlgebra):
        return bck_axiom_suite(algebra)
    if isinstance(algebra, MvAlgebra):
        return mv_axiom_suite(algebra)
    if isinstance(algebra, WajsbergAlgebra):
        return wajsberg_axiom_suite(algebra)
    raise TypeError(f"not an algebra: {algebra!r}")


def _scan(k: int, suite: AxiomSuite) -> AxiomReport:
    violations = []
    for name, arity, pred in suite:
        for witness in product(range(k), repeat=arity):
            if not pred(*witness):
                violations.append(Violation(name, witness))
                break
    return AxiomReport(tuple(violations))


def verify(algebra: Algebra) -> AxiomReport:
    """Exhaustively check every axiom of the algebra's kind."""
    return _scan(algebra.k, axiom_suite(algebra))


def verify_bck(table, zero: int, one: int) -> AxiomReport:
    table = table if isinstance(table, CayleyTable) else CayleyTable(_as_rows(table))
    return verify(BckAlgebra(table, zero, one))


def verify_mv(oplus, complement, zero: int) -> AxiomReport:
    oplus = oplus if isinstance(oplus, CayleyTable) else CayleyTable(_as_rows(oplus))
    return verify(MvAlgebra(oplus, tuple(complement), zero))


def verify_wajsberg(circ, negation, one: int) -> AxiomReport:
    circ = circ if isinstance(circ, CayleyTable) else CayleyTable(_as_rows(circ))
    return verify(WajsbergAlgebra(circ, tuple(negation), one))


def evaluate_axiom(algebra: Algebra, axiom: str, witness: Sequence[int]) -> bool:
    """Re-evaluate one named axiom at a specific witness tuple."""
    for name, arity, pred in axiom_suite(algebra):
        if name == axiom:
            if len(witness) != arity:
                raise ValueError(f"{axiom} takes {arity} variables")
            return pred(*witness)
    raise KeyError(axiom)


def kind_of(algebra: Algebra) -> str:
    if isinstance(algebra, BckAlgebra):
        return "bck"
    if isinstance(algebra, MvAlgebra):
        return "mv"
    return "wajsberg"


def ensure_verified(algebra: Algebra) -> None:
    """Raise NotAnAlgebra (with the report attached) unless verification passes."""
    report = verify(algebra)
    if not report.valid:
        axioms = ", ".join(sorted(report.axioms()))
        raise NotAnAlgebra(f"{kind_of(algebra)} verification failed: {axioms}", report)


def natural_order(algebra: Algebra) -> Poset:
    """The order x <= y given by x*y = 0 / x'+y = 1 / x->y = 1 per kind.

    Raises NotAPoset when the relation breaks an order law, which signals an
    unverified input table.
    """
    k = algebra.k
    if isinstance(algebra, BckAlgebra):
        s, z = algebra.table.rows, algebra.zero
        rows = [[s[x][y] == z for y in range(k)] for x in range(k)]
    elif isinstance(algebra, MvAlgebra):
        p, c, o = algebra.oplus.rows, algebra.complement, algebra.one
        rows = [[p[c[x]][y] == o for y in range(k)] for x in range(k)]
    else:
        t, o = algebra.circ.rows, algebra.one
        rows = [[t[x][y] == o for y in range(k)] for x in range(k)]
    return Poset(tuple(tuple(row) for row in rows))


def mv_derived_ops(m: MvAlgebra) -> tuple[CayleyTable, CayleyTable]:
    """The product x.y = (x'+y')' and difference x-y = (x'+y)', tabulated."""
    p, c = m.oplus.rows, m.complement
    k = m.k
    odot = [[c[p[c[x]][c[y]]] for y in range(k)] for x in range(k)]
    ominus = [[c[p[c[x]][y]] for y in range(k)] for x in range(k)]
    return CayleyTable(_as_rows(odot)), CayleyTable(_as_rows(ominus))


def mv_leq_equivalences(m: MvAlgebra, x: int, y: int) -> bool:
    """Evaluate the four equivalent characterisations of x <= y and agree.

    Conditions: x'+y = 1; x.y' = 0; y = x + (y-x); some z has x+z = y.
    Raises EquivalenceBroken when they disagree, which can only happen for an
    input that is not actually an MV algebra.
    """
    p, c = m.oplus.rows, m.complement
    z, o = m.zero, m.one
    cond1 = p[c[x]][y] == o
    cond2 = c[p[c[x]][c[c[y]]]] == z
    cond3 = y == p[x][c[p[c[y]][x]]]
    cond4 = any(p[x][t] == y for t in range(m.k))
    if not cond1 == cond2 == cond3 == cond4:
        raise EquivalenceBroken(
            f"order characterisations disagree at ({x},{y}): "
            f"{(cond1, cond2, cond3, cond4)}"
        )
    return cond1
