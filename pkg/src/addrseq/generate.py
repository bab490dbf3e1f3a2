"""Address sequence engines.

Two interchangeable formulations generate the same family of sequences:

* direct: address ``n`` is the XOR of the matrix rows selected by the
  bits of the counter value ``n`` itself;
* recursive: each address is the previous one XORed with the single row
  picked by the gray-code switching index of an up-counter, i.e. one
  XOR per emitted address.

The two are linked by the basis transforms in `addrseq.gf2`: a recursive
run over ``V`` equals a direct run over ``difference_basis(V)``, and a
direct run over ``V`` equals a recursive run over ``cumulative_basis(V)``.
Reversed (down) and shifted variants are derived from the recursive
form; both are set up analytically in O(m), never by iterating a full
period.

Every full-length run over a full-rank matrix visits each of the ``2^m``
addresses exactly once, for any choice of initial address and initial
counter state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .gf2 import (
    BitsLike,
    BitVector,
    GenerationMatrix,
    as_bitvector,
    difference_basis,
)
from .gray import gray_value


def _combine(words: tuple[int, ...], selector: int) -> int:
    acc = 0
    i = 0
    while selector:
        if selector & 1:
            acc ^= words[i]
        selector >>= 1
        i += 1
    return acc


@dataclass(frozen=True)
class SequenceSpec:
    """A complete generation recipe.

    `direction` describes the emitted order: "up" runs the recursive
    engine forward, "down" emits the exact reversal of that up-run.
    `count` defaults to the full period ``2^m``; shorter runs are
    allowed but only complete runs carry the balance properties.
    """

    matrix: GenerationMatrix
    a0: BitsLike = 0
    b0: BitsLike = 0
    direction: str = "up"
    count: int | None = None

    def __post_init__(self):
        self.matrix.require_full_rank()
        m = self.matrix.m
        object.__setattr__(self, "a0", as_bitvector(self.a0, m))
        object.__setattr__(self, "b0", as_bitvector(self.b0, m))
        if self.direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', got {self.direction!r}")
        count = (1 << m) if self.count is None else self.count
        if not 0 <= count <= (1 << m):
            raise ValueError(f"count must be in 0..2^{m}, got {count}")
        object.__setattr__(self, "count", count)

    @property
    def m(self) -> int:
        return self.matrix.m


class AddressStream:
    """Lazily produced sequence of addresses.

    Iterating yields BitVectors and tracks `cursor` (addresses emitted
    so far) and `current` (the last one).  `words()` is the bulk fast
    path: it drains the remaining addresses as plain ints and does not
    maintain `current`.  A stream is single-pass and single-owner.
    """

    def __init__(
        self,
        m: int,
        count: int,
        word_iter: Iterator[int],
        spec: SequenceSpec | None = None,
        engine: str | None = None,
    ):
        self.m = m
        self.count = count
        self.spec = spec
        self.engine = engine
        self.cursor = 0
        self.current: BitVector | None = None
        self._word_iter = word_iter

    @classmethod
    def from_words(cls, m: int, words: Iterable[int], count: int | None = None) -> "AddressStream":
        words = list(words)
        if count is None:
            count = len(words)
        return cls(m, count, iter(words))

    def __iter__(self) -> "AddressStream":
        return self

    def __next__(self) -> BitVector:
        w = next(self._word_iter)
        self.cursor += 1
        self.current = BitVector(self.m, w)
        return self.current

    def words(self) -> Iterator[int]:
        for w in self._word_iter:
            self.cursor += 1
            yield w

    def __repr__(self) -> str:
        return f"<AddressStream m={self.m} count={self.count} cursor={self.cursor}>"


def _direct_words(words: tuple[int, ...], count: int) -> Iterator[int]:
    # Precomputed 8-bit-chunk combination tables turn each evaluation
    # into one table lookup per chunk instead of one XOR per set bit.
    if count <= 0:
        return
    bits = (count - 1).bit_length()
    tables = []
    for base in range(0, bits, 8):
        nbits = min(8, bits - base)
        tab = [0] * (1 << nbits)
        for pat in range(1, 1 << nbits):
            low = pat & -pat
            tab[pat] = tab[pat ^ low] ^ words[base + low.bit_length() - 1]
        tables.append((base, tab, (1 << nbits) - 1))
    if len(tables) == 1:
        _, tab, mask = tables[0]
        for n in range(count):
            yield tab[n & mask]
    else:
        for n in range(count):
            acc = 0
            for base, tab, mask in tables:
                acc ^= tab[(n >> base) & mask]
            yield acc


def _recursive_words(words, m: int, a0: int, b0: int, count: int) -> Iterator[int]:
    if count <= 0:
        return
    mask = (1 << m) - 1
    acc = a0
    yield acc
    c = b0
    for _ in range(count - 1):
        c = (c + 1) & mask
        # switching index of the gray-coded counter; wrap into 0 selects row m
        idx = m if c == 0 else (c & -c).bit_length()
        acc ^= words[idx - 1]
        yield acc


def _resolve(matrix: GenerationMatrix, count: int | None) -> int:
    matrix.require_full_rank()
    full = 1 << matrix.m
    if count is None:
        return full
    if not 0 <= count <= full:
        raise ValueError(f"count must be in 0..2^{matrix.m}, got {count}")
    return count


def generate_direct(matrix: GenerationMatrix, count: int | None = None) -> AddressStream:
    """Direct sequence: address ``n`` is the row combination selected by ``n``.

    Runs the plain binary counter from zero; with the identity matrix
    the output is the counter itself.
    """
    count = _resolve(matrix, count)
    spec = SequenceSpec(matrix, 0, 0, "up", count)
    return AddressStream(
        matrix.m, count, _direct_words(matrix.row_words, count), spec, engine="direct"
    )


def generate_recursive(
    matrix: GenerationMatrix | SequenceSpec,
    a0: BitsLike = 0,
    b0: BitsLike = 0,
    count: int | None = None,
) -> AddressStream:
    """Recursive sequence: one row XOR per address after the first.

    The first address is `a0`; each step XORs in the row picked by the
    switching index of the up-counter started at `b0`.  Accepts either a
    matrix plus initial values or a ready-made up-direction SequenceSpec.
    """
    if isinstance(matrix, SequenceSpec):
        spec = matrix
        if spec.direction != "up":
            raise ValueError("generate_recursive requires an up-direction spec")
    else:
        spec = SequenceSpec(matrix, a0, b0, "up", count)
    return AddressStream(
        spec.m,
        spec.count,
        _recursive_words(spec.matrix.row_words, spec.m, spec.a0.word, spec.b0.word, spec.count),
        spec,
        engine="recursive",
    )


def generate_down(
    matrix: GenerationMatrix | SequenceSpec,
    a0: BitsLike = 0,
    b0: BitsLike = 0,
    count: int | None = None,
) -> AddressStream:
    """Exact reversal of the corresponding up-run: ``down(n) = up(2^m - 1 - n)``.

    The final up-address is computed analytically in O(m) and used as
    the starting address; the counter starts at ``-b0 mod 2^m`` so that
    the switching indices replay the up-run's indices backwards.
    """
    if isinstance(matrix, SequenceSpec):
        spec_in = matrix
        spec = SequenceSpec(spec_in.matrix, spec_in.a0, spec_in.b0, "down", spec_in.count)
    else:
        spec = SequenceSpec(matrix, a0, b0, "down", count)
    m = spec.m
    full = 1 << m
    words = spec.matrix.row_words
    b0w = spec.b0.word
    # up(n) = a0 ^ combine(V, gray(b0) ^ gray(b0 + n)); evaluate at n = 2^m - 1
    final = spec.a0.word ^ _combine(words, gray_value(b0w) ^ gray_value((b0w - 1) & (full - 1)))
    return AddressStream(
        m,
        spec.count,
        _recursive_words(words, m, final, (-b0w) & (full - 1), spec.count),
        spec,
        engine="recursive",
    )


def address_at(matrix: GenerationMatrix, position: int) -> BitVector:
    """Address at `position` of the zero-initialized recursive run, without iterating.

    Evaluated directly through the difference basis: the recursive run
    over ``V`` is the direct run over ``difference_basis(V)``, so one
    O(m) row combination answers any position.
    """
    matrix.require_full_rank()
    if not 0 <= position < (1 << matrix.m):
        raise ValueError(f"position must be in 0..2^{matrix.m}-1, got {position}")
    return BitVector(matrix.m, _combine(difference_basis(matrix).row_words, position))


def generate_shifted(matrix: GenerationMatrix, shift: int, count: int | None = None) -> AddressStream:
    """Rotation of the zero-initialized recursive run by `shift` positions.

    Sets the counter start to `shift` and the starting address to the
    unshifted run's address at that position, so
    ``shifted(n) = up((n + shift) mod 2^m)``.
    """
    count = _resolve(matrix, count)
    if not 0 <= shift < (1 << matrix.m):
        raise ValueError(f"shift must be in 0..2^{matrix.m}-1, got {shift}")
    a0 = address_at(matrix, shift)
    spec = SequenceSpec(matrix, a0, shift, "up", count)
    return generate_recursive(spec)


def generate(spec: SequenceSpec) -> AddressStream:
    """Run the engine described by a SequenceSpec (up or down)."""
    if spec.direction == "down":
        return generate_down(spec.matrix, spec.a0, spec.b0, spec.count)
    return generate_recursive(spec)
