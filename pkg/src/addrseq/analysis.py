"""Verification and characterization of address sequences.

An address sequence over m bits is complete when it lists all 2^m words
exactly once.  Completeness forces the balance properties: every bit
position carries 2^(m-1) ones, and every set of r positions shows each
of the 2^r patterns exactly 2^(m-r) times.  The checks here count those
occurrences outright rather than relying on the implication, so they
serve as an independent cross-examination of any generator.

Switching activity is profiled as the Hamming distance between
consecutive addresses, plus per-bit transition counts; the sum of the
distance profile always equals the sum of the per-bit transitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .gf2 import BitVector

# pattern-extraction tables are worth precomputing up to this width
_TABLE_MAX_M = 13


class IncompleteSequenceError(ValueError):
    """Balance checks require a complete sequence (see verify_complete)."""


def _as_words(seq: Sequence, m: int | None = None) -> tuple[list[int], int]:
    seq = list(seq)
    if seq and isinstance(seq[0], BitVector):
        widths = {v.width for v in seq}
        if len(widths) > 1:
            raise ValueError(f"mixed widths in sequence: {sorted(widths)}")
        inferred = widths.pop()
        if m is not None and m != inferred:
            raise ValueError(f"sequence width {inferred} does not match m={m}")
        return [v.word for v in seq], inferred
    if m is None:
        raise ValueError("width m is required for sequences of plain ints")
    words = [int(v) for v in seq]
    for w in words:
        if not 0 <= w < (1 << m):
            raise ValueError(f"value {w} out of range for {m} bits")
    return words, m


@dataclass(frozen=True)
class Completeness:
    """Outcome of the completeness check, with first-violation diagnostics."""

    complete: bool
    m: int
    length: int
    distinct: int
    first_duplicate: BitVector | None = None
    first_missing: BitVector | None = None

    def __bool__(self) -> bool:
        return self.complete


def check_completeness(seq: Sequence, m: int | None = None) -> Completeness:
    """Scan a sequence for length 2^m with all values distinct.

    Presence is tracked in a 2^m-bit map for m <= 28 and in a set sized
    by the input otherwise, so short sequences over wide address spaces
    stay cheap.
    """
    words, m = _as_words(seq, m)
    full = 1 << m
    first_dup = None
    if m <= 28:
        seen = bytearray(max(full >> 3, 1))
        distinct = 0
        for w in words:
            bit = 1 << (w & 7)
            if seen[w >> 3] & bit:
                if first_dup is None:
                    first_dup = BitVector(m, w)
            else:
                seen[w >> 3] |= bit
                distinct += 1
        present = lambda w: seen[w >> 3] & (1 << (w & 7))
    else:
        seen_set: set[int] = set()
        for w in words:
            if w in seen_set and first_dup is None:
                first_dup = BitVector(m, w)
            seen_set.add(w)
        distinct = len(seen_set)
        present = lambda w: w in seen_set
    first_missing = None
    if distinct != full:
        # pigeonhole: some value in 0..distinct is absent
        for w in range(distinct + 1):
            if not present(w):
                first_missing = BitVector(m, w)
                break
    complete = len(words) == full and distinct == full
    return Completeness(complete, m, len(words), distinct, first_dup, first_missing)


def verify_complete(seq: Sequence, m: int | None = None) -> bool:
    """True iff the sequence contains every m-bit word exactly once."""
    return check_completeness(seq, m).complete


def _require_complete(seq: Sequence, m: int | None) -> tuple[list[int], int]:
    words, m = _as_words(seq, m)
    result = check_completeness(words, m)
    if not result.complete:
        detail = f"length {result.length} of {1 << m}, {result.distinct} distinct"
        if result.first_duplicate is not None:
            detail += f", first duplicate {result.first_duplicate}"
        if result.first_missing is not None:
            detail += f", first missing {result.first_missing}"
        raise IncompleteSequenceError(
            f"sequence fails verify_complete ({detail}); balance is defined "
            "only for complete sequences"
        )
    return words, m


def bit_balance(seq: Sequence, m: int | None = None) -> list[int]:
    """Ones count per bit position (index 0 holds position 1, the LSB).

    The sequence must be complete, which forces every count to equal
    2^(m-1); the counts are still tallied directly.
    """
    words, m = _require_complete(seq, m)
    return [sum((w >> b) & 1 for w in words) for b in range(m)]


@lru_cache(maxsize=256)
def _pattern_table(m: int, positions: tuple[int, ...]) -> tuple[int, ...]:
    # positions sorted descending; table maps every m-bit word to its pattern
    table = []
    for w in range(1 << m):
        pat = 0
        for p in positions:
            pat = (pat << 1) | ((w >> (p - 1)) & 1)
        table.append(pat)
    return tuple(table)


def tuple_balance(seq: Sequence, positions: Iterable[int], m: int | None = None) -> dict[str, int]:
    """Occurrence count of every pattern over the given bit positions.

    Patterns are keyed as bit strings ordered from the highest requested
    position to the lowest (matching the printed address order).  For a
    complete sequence each of the 2^r patterns occurs exactly 2^(m-r)
    times; the counts are tallied by direct extraction.
    """
    words, m = _require_complete(seq, m)
    pos = sorted(set(int(p) for p in positions), reverse=True)
    if not pos:
        raise ValueError("positions must be a non-empty set of bit positions")
    if pos[0] > m or pos[-1] < 1:
        raise ValueError(f"positions must lie in 1..{m}: {pos}")
    r = len(pos)
    counts = [0] * (1 << r)
    if m <= _TABLE_MAX_M:
        table = _pattern_table(m, tuple(pos))
        for w in words:
            counts[table[w]] += 1
    else:
        for w in words:
            pat = 0
            for p in pos:
                pat = (pat << 1) | ((w >> (p - 1)) & 1)
            counts[pat] += 1
    return {format(pat, f"0{r}b"): c for pat, c in enumerate(counts)}


class HammingProfile(NamedTuple):
    distances: list[int]
    per_bit_transitions: list[int]


def hamming_profile(seq: Sequence, m: int | None = None) -> HammingProfile:
    """Hamming distance between each consecutive pair, plus per-bit flip counts."""
    words, m = _as_words(seq, m)
    distances = []
    per_bit = [0] * m
    for prev, cur in zip(words, words[1:]):
        diff = prev ^ cur
        distances.append(bin(diff).count("1"))
        while diff:
            low = diff & -diff
            per_bit[low.bit_length() - 1] += 1
            diff ^= low
    return HammingProfile(distances, per_bit)


class BalanceFailure(NamedTuple):
    positions: tuple[int, ...]
    pattern: str
    count: int
    expected: int


@dataclass
class ActivityReport:
    """Aggregate verdict: completeness, balance checks, switching profile."""

    m: int
    length: int
    complete: bool
    first_duplicate: BitVector | None
    first_missing: BitVector | None
    per_bit_ones: list[int]
    per_bit_transitions: list[int]
    hamming_profile: list[int]
    min_distance: int | None
    max_distance: int | None
    mean_distance: float | None
    balance_checked: bool
    balance_r_max: int
    balance_failures: list[BalanceFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.complete and self.balance_checked and not self.balance_failures


def analyze(seq: Sequence, m: int | None = None, max_r: int = 4) -> ActivityReport:
    """Run every check on a sequence and collect the results.

    Balance is checked exhaustively over all position subsets of size
    r = 1..min(m, max_r); that cost grows as C(m, r) * length, so lower
    `max_r` for wide sequences.  Partial sequences get a report with
    ``complete=False`` and the balance checks skipped.
    """
    words, m = _as_words(seq, m)
    comp = check_completeness(words, m)
    profile = hamming_profile(words, m) if len(words) >= 2 else HammingProfile([], [0] * m)
    dist = profile.distances
    per_bit_ones = [sum((w >> b) & 1 for w in words) for b in range(m)]

    failures: list[BalanceFailure] = []
    r_max = min(m, max_r)
    if comp.complete:
        for r in range(1, r_max + 1):
            expected = 1 << (m - r)
            for pos in combinations(range(m, 0, -1), r):
                for pattern, count in tuple_balance(words, pos, m).items():
                    if count != expected:
                        failures.append(BalanceFailure(pos, pattern, count, expected))

    return ActivityReport(
        m=m,
        length=len(words),
        complete=comp.complete,
        first_duplicate=comp.first_duplicate,
        first_missing=comp.first_missing,
        per_bit_ones=per_bit_ones,
        per_bit_transitions=profile.per_bit_transitions,
        hamming_profile=dist,
        min_distance=min(dist) if dist else None,
        max_distance=max(dist) if dist else None,
        mean_distance=sum(dist) / len(dist) if dist else None,
        balance_checked=comp.complete,
        balance_r_max=r_max if comp.complete else 0,
        balance_failures=failures,
    )


def format_report(report: ActivityReport, max_failures: int = 10) -> str:
    """Flat key=value rendering with stable field names (one per line)."""
    lines = [
        f"m={report.m}",
        f"length={report.length}",
        f"complete={'true' if report.complete else 'false'}",
    ]
    if report.first_duplicate is not None:
        lines.append(f"first_duplicate={report.first_duplicate}")
    if report.first_missing is not None:
        lines.append(f"first_missing={report.first_missing}")
    lines.append("per_bit_ones=" + ",".join(map(str, report.per_bit_ones)))
    lines.append("per_bit_transitions=" + ",".join(map(str, report.per_bit_transitions)))
    if report.hamming_profile:
        hist: dict[int, int] = {}
        for d in report.hamming_profile:
            hist[d] = hist.get(d, 0) + 1
        lines.append(f"hamming_min={report.min_distance}")
        lines.append(f"hamming_max={report.max_distance}")
        lines.append(f"hamming_mean={report.mean_distance:.6f}")
        lines.append(
            "hamming_histogram=" + ",".join(f"{d}:{c}" for d, c in sorted(hist.items()))
        )
    lines.append(f"balance_checked={'true' if report.balance_checked else 'false'}")
    lines.append(f"balance_r_max={report.balance_r_max}")
    lines.append(f"balance_failures={len(report.balance_failures)}")
    for i, f in enumerate(report.balance_failures[:max_failures], start=1):
        pos = ",".join(map(str, f.positions))
        lines.append(
            f"balance_failure_{i}=positions:{pos} pattern:{f.pattern} "
            f"count:{f.count} expected:{f.expected}"
        )
    return "\n".join(lines) + "\n"
