"""Constructors for the standard generation-matrix families.

Each constructor returns a full-rank matrix whose recursive sequence has
a characteristic access pattern used in memory testing:

* linear        - plain up-counter order
* power2(j)     - counter order striding by 2^j, carries wrapping into
                  the low bits (equals a left bit-rotation of the counter)
* complement    - counter order interleaved with bitwise complements
* limited       - consecutive Hamming distances alternate m and m-1
                  (the highest sustainable switching activity)
* graycode      - consecutive Hamming distance always 1 (the lowest),
                  one matrix per permutation of the unit rows
* quasirandom   - lower-triangular with unit diagonal; the all-ones
                  default emits the base-2 van der Corput order
                  (bit-reversed counter)

Also here: seeded sampling of random full-rank matrices, the closed-form
and Monte Carlo full-rank statistics for uniform random GF(2) matrices,
and address-bit permutation of an existing stream.
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

from .gf2 import BitsLike, BitVector, GenerationMatrix, as_bitvector, rank_of_words
from .generate import AddressStream

FULLRANK_LIMIT = 0.2887880950866  # limit of prod(1 - 2^-i) as m grows
RANK_DEFICIT_LIMIT = 0.850179830874

_M64 = (1 << 64) - 1


def _check_m(m: int, low: int = 1) -> None:
    if not low <= m <= 64:
        raise ValueError(f"m must be in {low}..64, got {m}")


def _rotl(word: int, j: int, m: int) -> int:
    j %= m
    if j == 0:
        return word
    return ((word << j) | (word >> (m - j))) & ((1 << m) - 1)


def linear_matrix(m: int) -> GenerationMatrix:
    """Row i has its i lowest bits set; the recursive sequence is 0,1,2,..."""
    _check_m(m)
    return GenerationMatrix(((1 << i) - 1 for i in range(1, m + 1)), m)


def power2_matrix(m: int, j: int) -> GenerationMatrix:
    """The linear matrix with its columns cyclically rotated by `j`.

    The all-ones column moves j printed positions to the left, and the
    generated addresses are the counter values rotated left by j bits,
    i.e. the sequence strides by 2^j with carries wrapping into the low
    bits.  j = 0 is the linear matrix itself.
    """
    _check_m(m)
    if not 0 <= j <= m - 1:
        raise ValueError(f"j must be in 0..{m - 1}, got {j}")
    return GenerationMatrix((_rotl((1 << i) - 1, j, m) for i in range(1, m + 1)), m)


def complement_matrix(m: int) -> GenerationMatrix:
    """Row i has its m-i+1 highest bits set.

    Even-position addresses count 0,1,2,... and every odd-position
    address is the bitwise complement of its predecessor.
    """
    _check_m(m)
    return GenerationMatrix(((1 << m) - (1 << (i - 1)) for i in range(1, m + 1)), m)


def limited_matrix(m: int, zeros: Sequence[int] | None = None) -> GenerationMatrix:
    """All-ones first row; each later row is all ones with a single 0.

    The zero positions (1-based bit positions, one per row 2..m) are
    pairwise distinct, leaving exactly one never-zeroed unit column.
    Consecutive Hamming distances alternate m, m-1.  The default places
    row i's zero at bit position i-1, keeping the top bit as the unit
    column; any other distinct placement may be passed via `zeros`.
    """
    _check_m(m, low=2)
    if zeros is None:
        zeros = tuple(range(1, m))
    else:
        zeros = tuple(zeros)
        if len(zeros) != m - 1:
            raise ValueError(f"need {m - 1} zero positions for rows 2..{m}, got {len(zeros)}")
        if any(not 1 <= z <= m for z in zeros) or len(set(zeros)) != m - 1:
            raise ValueError(f"zero positions must be distinct values in 1..{m}: {zeros}")
    ones = (1 << m) - 1
    rows = [ones]
    rows.extend(ones ^ (1 << (z - 1)) for z in zeros)
    return GenerationMatrix(rows, m)


def graycode_matrix(m: int, perm: Sequence[int] | None = None) -> GenerationMatrix:
    """Unit rows: row i is the unit vector at position perm[i-1].

    Every consecutive pair of generated addresses differs in exactly one
    bit.  The identity permutation gives the standard reflected gray
    code; the m! permutations give the m! distinct gray-code matrices.
    """
    _check_m(m)
    perm = _check_perm(perm, m)
    return GenerationMatrix((1 << (p - 1) for p in perm), m)


def quasirandom_matrix(m: int, rows: Iterable[BitsLike] | None = None) -> GenerationMatrix:
    """Lower-triangular matrix with all 1s on the main diagonal.

    Printed row i carries a 1 in column i, anything in columns 1..i-1,
    and 0s to the right of the diagonal; such a matrix is always full
    rank.  The default sets every entry on and below the diagonal,
    which generates the base-2 van der Corput order (the bit-reversed
    counter).  Custom sub-diagonal bits may be supplied as `rows`; an
    override breaking the unit diagonal or the triangular form is
    rejected.
    """
    _check_m(m)
    if rows is None:
        return GenerationMatrix(((1 << m) - (1 << (m - i)) for i in range(1, m + 1)), m)
    coerced = [as_bitvector(r, m) for r in rows]
    if len(coerced) != m:
        raise ValueError(f"expected {m} rows, got {len(coerced)}")
    for i, row in enumerate(coerced, start=1):
        diag = m - i  # bit position of printed column i
        if not (row.word >> diag) & 1:
            raise ValueError(f"row {i} must have its diagonal bit set: {row}")
        if row.word & ((1 << diag) - 1):
            raise ValueError(f"row {i} has bits right of the diagonal: {row}")
    return GenerationMatrix(coerced, m)


# -- seeded random sampling ---------------------------------------------------


def _splitmix64(seed: int) -> int:
    z = (seed + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class XorShift64Star:
    """Small explicit PRNG (xorshift64*, state seeded through splitmix64).

    The constants are fixed and documented so that a seed identifies the
    same draw stream in any implementation; seeds are part of the
    reproducibility contract of `random_fullrank_matrix`.
    """

    def __init__(self, seed: int = 0):
        state = _splitmix64(seed & _M64)
        self._state = state if state else 0x9E3779B97F4A7C15

    def next64(self) -> int:
        x = self._state
        x ^= x >> 12
        x ^= (x << 25) & _M64
        x ^= x >> 27
        self._state = x
        return (x * 0x2545F4914F6CDD1D) & _M64

    def bits(self, k: int) -> int:
        """Low k bits of the next draw (k <= 64)."""
        return self.next64() & ((1 << k) - 1)


def _draw_rows(rng: XorShift64Star, m: int) -> tuple[int, ...]:
    return tuple(rng.bits(m) for _ in range(m))


def random_fullrank_matrix(m: int, seed: int = 0, with_attempts: bool = False):
    """Uniform random full-rank matrix by rejection sampling.

    Rows are the low m bits of consecutive xorshift64* draws; the whole
    matrix is redrawn until its rank is m (about 3.46 tries on average).
    Identical seeds reproduce identical matrices.  With
    ``with_attempts=True`` returns ``(matrix, attempts)``.
    """
    _check_m(m)
    rng = XorShift64Star(seed)
    attempts = 0
    while True:
        attempts += 1
        words = _draw_rows(rng, m)
        if rank_of_words(words) == m:
            matrix = GenerationMatrix(words, m)
            return (matrix, attempts) if with_attempts else matrix


def fullrank_probability(m: int) -> float:
    """Probability that a uniform random m x m GF(2) matrix is invertible.

    Closed form ``prod_{i=1..m} (1 - 2^-i)``; decreases monotonically to
    the limit 0.2887880950866.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    p = 1.0
    for i in range(1, m + 1):
        p *= 1.0 - 2.0 ** -i
    return p


def _sample_ranks(m: int, samples: int, seed: int) -> Iterable[int]:
    rng = XorShift64Star(seed)
    for _ in range(samples):
        yield rank_of_words(_draw_rows(rng, m))


def expected_rank_deficit(m: int, samples: int, seed: int = 0) -> float:
    """Monte Carlo estimate of E[m - rank] over uniform random matrices.

    Approaches 0.850179830874 for large m.
    """
    _check_m(m)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    total = sum(m - r for r in _sample_ranks(m, samples, seed))
    return total / samples


def fullrank_acceptance_rate(m: int, samples: int, seed: int = 0) -> float:
    """Monte Carlo fraction of uniform random matrices that are full rank."""
    _check_m(m)
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    hits = sum(1 for r in _sample_ranks(m, samples, seed) if r == m)
    return hits / samples


def exhaustive_rank_counts(m: int) -> dict[int, int]:
    """Census of ranks over all 2^(m*m) matrices (m <= 4 only)."""
    if not 1 <= m <= 4:
        raise ValueError(f"exhaustive enumeration is limited to m <= 4, got {m}")
    full = 1 << m
    counts = dict.fromkeys(range(m + 1), 0)

    def recurse(rows: list[int], depth: int):
        if depth == m:
            counts[rank_of_words(rows)] += 1
            return
        for w in range(full):
            rows.append(w)
            recurse(rows, depth + 1)
            rows.pop()

    recurse([], 0)
    return counts


# -- address-bit permutation --------------------------------------------------


def _check_perm(perm: Sequence[int] | None, m: int) -> tuple[int, ...]:
    if perm is None:
        return tuple(range(1, m + 1))
    perm = tuple(perm)
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"perm must be a permutation of 1..{m}, got {perm}")
    return perm


def permute_address_bits(stream: AddressStream, perm: Sequence[int]) -> AddressStream:
    """Rearrange the bits of every address: output bit k reads input bit perm[k-1].

    A bit permutation maps a valid address sequence to a valid address
    sequence (it is a bijection on words), which is the classic cheap
    way of multiplying one address order into m! of them.
    """
    m = stream.m
    perm = _check_perm(perm, m)
    moves = tuple((k, p - 1) for k, p in enumerate(perm))

    def mapped():
        for w in stream.words():
            out = 0
            for k, s in moves:
                out |= ((w >> s) & 1) << k
            yield out

    return AddressStream(m, stream.count, mapped())


class PermutationCount(NamedTuple):
    exact: int
    stirling: float


def permutation_count(m: int) -> PermutationCount:
    """Exact m! next to its Stirling approximation m^m e^-m sqrt(2 pi m)."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    stirling = math.exp(m * math.log(m) - m + 0.5 * math.log(2.0 * math.pi * m))
    return PermutationCount(math.factorial(m), stirling)


# -- family dispatch by name (CLI surface) ------------------------------------

FAMILY_NAMES = ("linear", "pow2", "complement", "limited", "gray", "quasi", "random")

FAMILY_HELP = (
    "linear | pow2:J | complement | limited | gray[:P1,P2,...] | quasi | "
    "random[:SEED | :seed=SEED]"
)


def family_matrix(spec: str, m: int, seed: int | None = None) -> GenerationMatrix:
    """Build a family matrix from its CLI name, e.g. ``pow2:2`` or ``random:seed=7``."""
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    arg = arg.strip()
    try:
        if name == "linear":
            if arg:
                raise ValueError("linear takes no parameter")
            return linear_matrix(m)
        if name == "pow2":
            if not arg:
                raise ValueError("pow2 needs a shift, e.g. pow2:2")
            return power2_matrix(m, int(arg))
        if name == "complement":
            if arg:
                raise ValueError("complement takes no parameter")
            return complement_matrix(m)
        if name == "limited":
            if arg:
                raise ValueError("limited takes no parameter")
            return limited_matrix(m)
        if name == "gray":
            perm = [int(x) for x in arg.split(",")] if arg else None
            return graycode_matrix(m, perm)
        if name == "quasi":
            if arg:
                raise ValueError("quasi takes no parameter")
            return quasirandom_matrix(m)
        if name == "random":
            if arg:
                seed = int(arg.removeprefix("seed="))
            if seed is None:
                raise ValueError("random needs a seed, e.g. random:7 (or --seed)")
            return random_fullrank_matrix(m, seed)
    except ValueError as exc:
        raise ValueError(f"bad family {spec!r}: {exc}") from None
    raise ValueError(f"unknown family {name!r} (expected one of {', '.join(FAMILY_NAMES)})")
