"""Bit vectors and generation matrices over GF(2).

Addresses, counter states and matrix rows are all fixed-width binary
words of at most 64 bits, held in a single Python int.  Bit positions
are 1-based from the least significant end (``v.bit(1)`` is the lowest
bit), and words render most-significant-bit first, so the leftmost
character of ``str(v)`` is bit ``width``.  Matrix rows use the same
rendering as the addresses they produce, which makes a printed row
directly comparable, character by character, with any address that row
contributes to.

A generation matrix is an ordered list of ``m`` rows of width ``m``.
Row order is semantically significant (it defines the address order of
the generated sequence), so no operation here ever reorders rows; rank
computation works on a scratch copy.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

MAX_WIDTH = 64

BitsLike = Union["BitVector", int, str]


class RankDeficiencyError(ValueError):
    """A matrix that must be invertible over GF(2) is not."""

    def __init__(self, rank: int, m: int):
        self.rank = rank
        self.m = m
        super().__init__(
            f"generation matrix must have full rank {m} but has rank {rank}"
        )


def rank_of_words(words: Iterable[int]) -> int:
    """GF(2) row rank of a collection of words, by Gaussian elimination.

    Rows are reduced against previously found pivot rows, keyed by their
    highest set bit.  The input is never mutated.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for w in words:
        while w:
            top = w.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = w
                rank += 1
                break
            w ^= p
    return rank


class BitVector:
    """An immutable binary word of fixed width (1..64 bits)."""

    __slots__ = ("width", "word")

    def __init__(self, width: int, word: int = 0):
        if not 1 <= width <= MAX_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {width}")
        if word < 0 or word >> width:
            raise ValueError(f"word {word:#x} does not fit in {width} bits")
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "word", word)

    def __setattr__(self, name, value):
        raise AttributeError("BitVector is immutable")

    @classmethod
    def from_string(cls, bits: str) -> "BitVector":
        """Parse an MSB-first string of 0s and 1s, e.g. ``"1011"``."""
        bits = bits.strip()
        if not bits or any(c not in "01" for c in bits):
            raise ValueError(f"not a binary string: {bits!r}")
        return cls(len(bits), int(bits, 2))

    @classmethod
    def zeros(cls, width: int) -> "BitVector":
        return cls(width, 0)

    def bit(self, i: int) -> int:
        """Bit at 1-based position `i` (position 1 is least significant)."""
        if not 1 <= i <= self.width:
            raise ValueError(f"bit position {i} out of range 1..{self.width}")
        return (self.word >> (i - 1)) & 1

    def weight(self) -> int:
        """Number of set bits."""
        return bin(self.word).count("1")

    def __xor__(self, other: "BitVector") -> "BitVector":
        if not isinstance(other, BitVector):
            return NotImplemented
        if other.width != self.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        return BitVector(self.width, self.word ^ other.word)

    def __int__(self) -> int:
        return self.word

    def __index__(self) -> int:
        return self.word

    def __str__(self) -> str:
        return format(self.word, f"0{self.width}b")

    def __repr__(self) -> str:
        return f"BitVector({self.width}, 0b{self})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.width == other.width
            and self.word == other.word
        )

    def __hash__(self) -> int:
        return hash((self.width, self.word))


def as_bitvector(value: BitsLike, width: int) -> BitVector:
    """Coerce an int, 0/1 string, or BitVector to a BitVector of `width`."""
    if isinstance(value, BitVector):
        if value.width != width:
            raise ValueError(f"expected width {width}, got {value.width}")
        return value
    if isinstance(value, str):
        v = BitVector.from_string(value)
        if v.width != width:
            raise ValueError(f"expected width {width}, got {v.width}")
        return v
    return BitVector(width, value)


class GenerationMatrix:
    """An m x m binary matrix whose rows generate an address sequence.

    Rows are BitVectors of width ``m``; ``rows[0]`` is the first row,
    the one selected by the lowest counter bit.  The GF(2) rank is
    computed once at construction and cached on the instance.
    """

    __slots__ = ("m", "rows", "rank", "_words")

    def __init__(self, rows: Iterable[BitsLike], m: int | None = None):
        rows = tuple(rows)
        if m is None:
            if not rows:
                raise ValueError("empty matrix and no explicit width")
            first = rows[0]
            if isinstance(first, BitVector):
                m = first.width
            elif isinstance(first, str):
                m = len(first.strip())
            else:
                m = len(rows)  # plain ints: assume square
        if not 1 <= m <= MAX_WIDTH:
            raise ValueError(f"matrix size must be in 1..{MAX_WIDTH}, got {m}")
        coerced = tuple(as_bitvector(r, m) for r in rows)
        if len(coerced) != m:
            raise ValueError(f"expected {m} rows, got {len(coerced)}")
        words = tuple(r.word for r in coerced)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", coerced)
        object.__setattr__(self, "_words", words)
        object.__setattr__(self, "rank", rank_of_words(words))

    def __setattr__(self, name, value):
        raise AttributeError("GenerationMatrix is immutable")

    @classmethod
    def identity(cls, m: int) -> "GenerationMatrix":
        return cls((1 << i for i in range(m)), m)

    @property
    def row_words(self) -> tuple[int, ...]:
        """Rows as plain ints, for bulk arithmetic."""
        return self._words

    def is_full_rank(self) -> bool:
        return self.rank == self.m

    def require_full_rank(self) -> "GenerationMatrix":
        if self.rank != self.m:
            raise RankDeficiencyError(self.rank, self.m)
        return self

    # -- matrix text format -------------------------------------------------
    #
    # First line "m=<int>", then m lines of exactly m characters from {0,1},
    # line i holding row i printed MSB-first.  Trailing whitespace on any
    # line is insignificant.

    def to_text(self) -> str:
        lines = [f"m={self.m}"]
        lines.extend(str(r) for r in self.rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "GenerationMatrix":
        lines = [ln.rstrip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln != ""]
        if not lines or not lines[0].startswith("m="):
            raise ValueError("matrix text must start with a 'm=<int>' line")
        try:
            m = int(lines[0][2:])
        except ValueError:
            raise ValueError(f"bad width declaration: {lines[0]!r}") from None
        if len(lines) - 1 != m:
            raise ValueError(f"expected {m} row lines, found {len(lines) - 1}")
        rows = []
        for i, ln in enumerate(lines[1:], start=2):
            if len(ln) != m or any(c not in "01" for c in ln):
                raise ValueError(f"line {i}: expected {m} characters of 0/1, got {ln!r}")
            rows.append(ln)
        return cls(rows, m)

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GenerationMatrix)
            and self.m == other.m
            and self._words == other._words
        )

    def __hash__(self) -> int:
        return hash((self.m, self._words))

    def __repr__(self) -> str:
        return f"GenerationMatrix([{', '.join(str(r) for r in self.rows)}])"


def matrix_rank(matrix: GenerationMatrix) -> int:
    """GF(2) row rank of the matrix (cached at construction)."""
    return matrix.rank


def linear_combination(matrix: GenerationMatrix, selector: BitsLike) -> BitVector:
    """XOR of the rows picked by the selector's bits.

    Selector bit 1 (least significant) picks the first row.  This is the
    direct evaluation of an address from a counter word: each address of
    a generated sequence is one such combination.
    """
    sel = as_bitvector(selector, matrix.m).word
    acc = 0
    words = matrix.row_words
    i = 0
    while sel:
        if sel & 1:
            acc ^= words[i]
        sel >>= 1
        i += 1
    return BitVector(matrix.m, acc)


def cumulative_basis(matrix: GenerationMatrix) -> GenerationMatrix:
    """Running-XOR transform: output row i is the XOR of rows 1..i.

    This is an invertible row operation (see `difference_basis` for the
    inverse), so rank is preserved.  A recursive generator loaded with
    ``cumulative_basis(V)`` emits the same sequence that direct
    evaluation of ``V`` produces.
    """
    out = []
    acc = 0
    for w in matrix.row_words:
        acc ^= w
        out.append(acc)
    return GenerationMatrix((BitVector(matrix.m, w) for w in out), matrix.m)


def difference_basis(matrix: GenerationMatrix) -> GenerationMatrix:
    """Adjacent-XOR transform: row 1 is kept, row i becomes rows[i-1] ^ rows[i].

    Exact inverse of `cumulative_basis` (with an implicit zero row above
    row 1).  Direct evaluation of ``difference_basis(V)`` emits the same
    sequence that a recursive generator loaded with ``V`` produces.
    """
    words = matrix.row_words
    out = [words[0]]
    out.extend(words[i - 1] ^ words[i] for i in range(1, len(words)))
    return GenerationMatrix((BitVector(matrix.m, w) for w in out), matrix.m)
