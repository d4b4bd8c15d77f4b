"""Binary block codes generated by finite algebras via cut subsets.

Each element r of a verified algebra yields one codeword: bit i is set when
element i lies in the cut subset of r (the up-set of r in the natural order).
The word order of a BlockCode is meaningful: it is the construction order,
which doubles as the row order of the associated matrix and as the carrier
indexing when an algebra is attached back onto a code. Codes generated from
an algebra list words in carrier order, which for the canonical chain-product
algebras coincides with descending lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebras import Algebra, BckAlgebra, MvAlgebra, natural_order
from .errors import DuplicateWord, LengthMismatch, MalformedTable, TooFewWords
from .order import Poset

Word = tuple[int, ...]


@dataclass(frozen=True)
class BlockCode:
    """A sequence of distinct equal-length bit words."""

    words: tuple[Word, ...]

    def __post_init__(self):
        words = tuple(tuple(int(b) for b in w) for w in self.words)
        object.__setattr__(self, "words", words)
        if not words:
            raise MalformedTable("a block code needs at least one word")
        n = len(words[0])
        for w in words:
            if len(w) != n:
                raise LengthMismatch(f"word lengths differ: {len(w)} vs {n}")
            if any(b not in (0, 1) for b in w):
                raise MalformedTable(f"non-binary word: {w}")
        if len(set(words)) != len(words):
            raise DuplicateWord("repeated codeword")

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "BlockCode":
        return cls(tuple(tuple(int(ch) for ch in s) for s in strings))

    @property
    def length(self) -> int:
        return len(self.words[0])

    @property
    def size(self) -> int:
        return len(self.words)

    def word_strings(self) -> tuple[str, ...]:
        return tuple("".join(str(b) for b in w) for w in self.words)

    def sorted_desc(self) -> "BlockCode":
        """The same word set listed in descending lexicographic order."""
        return BlockCode(tuple(sorted(self.words, reverse=True)))


def cut_subset(algebra: Algebra, r: int) -> frozenset[int]:
    """Elements x with r*x = 0 / r'+x = 1 / r->x = 1: the up-set of r."""
    k = algebra.k
    if isinstance(algebra, BckAlgebra):
        s, z = algebra.table.rows, algebra.zero
        return frozenset(x for x in range(k) if s[r][x] == z)
    if isinstance(algebra, MvAlgebra):
        p, c, o = algebra.oplus.rows, algebra.complement, algebra.one
        return frozenset(x for x in range(k) if p[c[r]][x] == o)
    t, o = algebra.circ.rows, algebra.one
    return frozenset(x for x in range(k) if t[r][x] == o)


def code_from_algebra(algebra: Algebra) -> BlockCode:
    """One codeword per element, in carrier order; bit i flags i in the cut.

    Distinct elements of a verified algebra always have distinct cuts, so the
    words are distinct; a DuplicateWord error here means the input never
    passed verification.
    """
    k = algebra.k
    words = []
    for r in range(k):
        cut = cut_subset(algebra, r)
        words.append(tuple(1 if x in cut else 0 for x in range(k)))
    return BlockCode(tuple(words))


def code_equivalent(a1: Algebra, a2: Algebra) -> bool:
    """True when both algebras generate the same set of codewords."""
    return set(code_from_algebra(a1).words) == set(code_from_algebra(a2).words)


def codeword_leq(wx: Word, wy: Word) -> bool:
    """Reverse-componentwise order: wx precedes wy iff wy's bits fit under wx's."""
    if len(wx) != len(wy):
        raise LengthMismatch(f"word lengths differ: {len(wx)} vs {len(wy)}")
    return all(b <= a for a, b in zip(wx, wy))


def code_poset(code: BlockCode) -> Poset:
    """The partial order of the code's words, over their listed positions."""
    words = code.words
    k = len(words)
    rows = tuple(
        tuple(codeword_leq(words[i], words[j]) for j in range(k)) for i in range(k)
    )
    return Poset(rows)


def hamming(wx: Word, wy: Word) -> int:
    if len(wx) != len(wy):
        raise LengthMismatch(f"word lengths differ: {len(wx)} vs {len(wy)}")
    return sum(a != b for a, b in zip(wx, wy))


def distance_D(algebra: Algebra, r: int, s: int) -> int:
    """Size of the symmetric difference of the two cut subsets.

    Equals the Hamming distance of the codewords of r and s.
    """
    return len(cut_subset(algebra, r) ^ cut_subset(algebra, s))


def min_hamming_distance(code: BlockCode) -> int:
    if code.size < 2:
        raise TooFewWords("minimum distance needs at least two words")
    words = code.words
    return min(
        hamming(words[i], words[j])
        for i in range(len(words))
        for j in range(i + 1, len(words))
    )


@dataclass(frozen=True)
class Skeleton:
    """Boolean matrix with a mark at (i, j) iff element i <= element j."""

    black: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(bool(v) for v in row) for row in self.black)
        object.__setattr__(self, "black", rows)

    @property
    def k(self) -> int:
        return len(self.black)

    def render(self) -> str:
        return "\n".join(
            "".join("#" if v else "." for v in row) for row in self.black
        )

    def permute_rows(self, perm: Sequence[int]) -> "Skeleton":
        return Skeleton(tuple(self.black[perm[i]] for i in range(self.k)))


def skeleton(algebra: Algebra) -> Skeleton:
    """The natural order of the algebra rendered as a square mark matrix."""
    return Skeleton(natural_order(algebra).leq)


def mv_sum_indicator(m: MvAlgebra) -> Skeleton:
    """Marks pairs (r, x) whose sum is the top element.

    Equals the skeleton with rows permuted by the complement map.
    """
    p, o = m.oplus.rows, m.one
    k = m.k
    return Skeleton(
        tuple(tuple(p[r][x] == o for x in range(k)) for r in range(k))
    )
