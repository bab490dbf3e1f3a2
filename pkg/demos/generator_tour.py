#!/usr/bin/env python3
"""Tour of the two generation engines and their variants.

Walks the worked 4-bit matrix through direct evaluation, the recursive
one-XOR-per-step form, the basis transforms linking them, and the
reversed / shifted / bit-inverted variants.
"""

from addrseq import (
    GenerationMatrix,
    address_at,
    cumulative_basis,
    difference_basis,
    generate_direct,
    generate_down,
    generate_recursive,
    generate_shifted,
    switching_sequence,
    wrap_index,
)

V = GenerationMatrix(["1011", "1000", "0101", "1111"])
print("generation matrix V (rank %d):" % V.rank)
for i, row in enumerate(V.rows, start=1):
    print(f"  row {i}: {row}")

direct = list(generate_direct(V))
up = list(generate_recursive(V))
down = list(generate_down(V))
steps = [wrap_index(4, 0)] + [s.index for s in switching_sequence(4, 0, 16)]

print("\n  n  counter  direct  | step  recursive  reversed")
for n in range(16):
    print(f" {n:2d}   {n:04b}    {direct[n]}  |  {steps[n]}      {up[n]}       {down[n]}")

print("\nThe direct column applies one row per set counter bit;")
print("the recursive column applies exactly one row per step, picked by")
print("the gray-code switching index (step 0 shows the cyclic wrap entry).")

print("\nBasis transforms connect the two engines:")
W = cumulative_basis(V)
U = difference_basis(V)
print(f"  cumulative_basis(V) rows: {[str(r) for r in W.rows]}")
print(f"  difference_basis(V) rows: {[str(r) for r in U.rows]}")
assert list(generate_direct(V).words()) == list(generate_recursive(W).words())
assert list(generate_recursive(V).words()) == list(generate_direct(U).words())
print("  direct(V) == recursive(cumulative_basis(V))   [checked]")
print("  recursive(V) == direct(difference_basis(V))   [checked]")

print("\nShifted copies need no iteration to find their starting address:")
for shift in (0, 3, 11):
    start = address_at(V, shift)
    shifted = list(generate_shifted(V, shift))
    print(f"  shift {shift:2d}: starts at {start}, first four " +
          " ".join(str(v) for v in shifted[:4]))
    assert shifted == up[shift:] + up[:shift]

print("\nA nonzero initial address XORs every emitted address:")
inverted = list(generate_recursive(V, a0=0b1000))
print("  a0=1000 run:", " ".join(str(v) for v in inverted[:6]), "...")
assert [v.word for v in inverted] == [v.word ^ 0b1000 for v in up]
print("  equals the plain run with the top bit inverted  [checked]")
