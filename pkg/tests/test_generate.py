import pytest

from addrseq import (
    AddressStream,
    BitVector,
    GenerationMatrix,
    RankDeficiencyError,
    SequenceSpec,
    address_at,
    cumulative_basis,
    difference_basis,
    generate,
    generate_direct,
    generate_down,
    generate_recursive,
    generate_shifted,
    random_fullrank_matrix,
    verify_complete,
)

from _tables import (
    TABLE_B0_3,
    TABLE_DIRECT,
    TABLE_DOWN,
    TABLE_SHIFT_3,
    TABLE_UP,
    TABLE_UP_INVERTED,
)


def run(stream):
    return list(stream.words())


# -- direct engine ---------------------------------------------------------------


def test_direct_reproduces_worked_column(worked_matrix):
    assert run(generate_direct(worked_matrix)) == TABLE_DIRECT


def test_direct_with_identity_matrix_is_the_counter():
    for m in (1, 3, 6):
        assert run(generate_direct(GenerationMatrix.identity(m))) == list(range(1 << m))


def test_direct_hand_checked_prefix():
    V = GenerationMatrix(["1000", "1100", "1110", "1111"])
    assert run(generate_direct(V, 4)) == [0b0000, 0b1000, 0b1100, 0b0100]


def test_direct_rejects_rank_deficient_matrix():
    V = GenerationMatrix(["1011", "1011", "0101", "1111"])
    with pytest.raises(RankDeficiencyError, match="rank 3"):
        generate_direct(V)


def test_direct_count_validation(worked_matrix):
    assert run(generate_direct(worked_matrix, 0)) == []
    with pytest.raises(ValueError):
        generate_direct(worked_matrix, 17)


# -- recursive engine --------------------------------------------------------------


def test_recursive_reproduces_worked_up_column(worked_matrix):
    assert run(generate_recursive(worked_matrix)) == TABLE_UP


def test_recursive_with_nonzero_initial_address(worked_matrix):
    # a0 = 1000 inverts the top bit of every address of the up run
    assert run(generate_recursive(worked_matrix, a0=0b1000)) == TABLE_UP_INVERTED


def test_recursive_with_nonzero_initial_counter(worked_matrix):
    assert run(generate_recursive(worked_matrix, b0=0b0011)) == TABLE_B0_3


def test_offset_initial_address_xors_every_address(worked_matrix):
    for c in (0b0001, 0b0110, 0b1111):
        got = run(generate_recursive(worked_matrix, a0=c))
        assert got == [w ^ c for w in TABLE_UP]


def test_recursive_accepts_a_spec(worked_matrix):
    spec = SequenceSpec(worked_matrix, a0="1000", b0=3)
    got = run(generate_recursive(spec))
    assert got[0] == 0b1000
    assert got == [w ^ 0b1000 for w in TABLE_B0_3]
    assert got == TABLE_SHIFT_3


def test_recursive_rejects_down_spec(worked_matrix):
    spec = SequenceSpec(worked_matrix, direction="down")
    with pytest.raises(ValueError):
        generate_recursive(spec)


def test_recursive_one_xor_per_address(worked_matrix):
    class CountingRows(tuple):
        reads = 0

        def __getitem__(self, i):
            CountingRows.reads += 1
            return tuple.__getitem__(self, i)

    object.__setattr__(worked_matrix, "_words", CountingRows(worked_matrix.row_words))
    CountingRows.reads = 0
    assert run(generate_recursive(worked_matrix)) == TABLE_UP
    assert CountingRows.reads == 15  # one row fetch per address after the first


# -- down engine --------------------------------------------------------------------


def test_down_reproduces_worked_column(worked_matrix):
    assert run(generate_down(worked_matrix)) == TABLE_DOWN


def test_down_of_one_bit_matrix():
    V = GenerationMatrix(["1"])
    assert run(generate_recursive(V)) == [0, 1]
    assert run(generate_down(V)) == [1, 0]


@pytest.mark.parametrize("m", [2, 3, 5, 8, 10])
def test_down_is_the_exact_reversal_for_random_initials(m):
    full = 1 << m
    V = random_fullrank_matrix(m, seed=100 + m)
    rng = (3 * m + 1, 5 * m + 2)
    a0, b0 = rng[0] % full, rng[1] % full
    up = run(generate_recursive(V, a0, b0))
    down = run(generate_down(V, a0, b0))
    assert down == up[::-1]


def test_down_accepts_a_spec(worked_matrix):
    spec = SequenceSpec(worked_matrix, direction="down")
    assert run(generate(spec)) == TABLE_DOWN
    assert run(generate_down(spec)) == TABLE_DOWN


def test_partial_down_and_shift_are_prefixes_of_the_full_variant(worked_matrix):
    assert run(generate_down(worked_matrix, count=5)) == TABLE_DOWN[:5]
    assert run(generate_shifted(worked_matrix, 3, count=5)) == TABLE_SHIFT_3[:5]


# -- shifted engine -------------------------------------------------------------------


def test_shifted_by_three_reproduces_worked_column(worked_matrix):
    assert run(generate_shifted(worked_matrix, 3)) == TABLE_SHIFT_3


def test_shift_zero_is_the_plain_up_run(worked_matrix):
    assert run(generate_shifted(worked_matrix, 0)) == TABLE_UP


@pytest.mark.parametrize("m,shift", [(3, 5), (5, 17), (8, 200)])
def test_shifted_is_a_rotation(m, shift):
    V = random_fullrank_matrix(m, seed=m)
    full = 1 << m
    up = run(generate_recursive(V))
    assert run(generate_shifted(V, shift)) == [up[(n + shift) % full] for n in range(full)]


def test_shift_range_validation(worked_matrix):
    with pytest.raises(ValueError):
        generate_shifted(worked_matrix, 16)
    with pytest.raises(ValueError):
        generate_shifted(worked_matrix, -1)


# -- analytic position lookup ----------------------------------------------------------


def test_address_at_position_three(worked_matrix):
    assert str(address_at(worked_matrix, 3)) == "1000"


def test_address_at_zero_is_zero(worked_matrix):
    assert address_at(worked_matrix, 0).word == 0


def test_address_at_matches_full_enumeration(worked_matrix):
    up = run(generate_recursive(worked_matrix))
    assert [address_at(worked_matrix, n).word for n in range(16)] == up


# -- engine equivalence -----------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_recursive_equals_direct_through_difference_basis(m):
    for seed in range(5):
        V = random_fullrank_matrix(m, seed=10 * m + seed)
        assert run(generate_recursive(V)) == run(generate_direct(difference_basis(V)))


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8])
def test_direct_equals_recursive_through_cumulative_basis(m):
    for seed in range(5):
        V = random_fullrank_matrix(m, seed=10 * m + seed)
        assert run(generate_direct(V)) == run(generate_recursive(cumulative_basis(V)))


def test_engine_equivalence_on_wide_matrix_prefix():
    V = random_fullrank_matrix(16, seed=99)
    take = 2048
    rec = run(generate_recursive(V, count=take))
    assert rec == run(generate_direct(difference_basis(V), count=take))
    assert run(generate_direct(V, count=take)) == run(
        generate_recursive(cumulative_basis(V), count=take)
    )


@pytest.mark.parametrize("m", [2, 4, 7, 10])
def test_full_runs_cover_the_address_space(m):
    V = random_fullrank_matrix(m, seed=m + 40)
    for stream in (
        generate_direct(V),
        generate_recursive(V, a0=1, b0=(1 << m) - 2),
        generate_down(V, a0=3 % (1 << m)),
        generate_shifted(V, (1 << m) // 3),
    ):
        assert verify_complete(run(stream), m)


# -- SequenceSpec and AddressStream -------------------------------------------------------


def test_spec_defaults_and_coercion(worked_matrix):
    spec = SequenceSpec(worked_matrix)
    assert spec.count == 16
    assert spec.direction == "up"
    assert spec.a0 == BitVector(4, 0)
    assert spec.m == 4


def test_spec_validation(worked_matrix):
    with pytest.raises(ValueError):
        SequenceSpec(worked_matrix, direction="sideways")
    with pytest.raises(ValueError):
        SequenceSpec(worked_matrix, count=17)
    with pytest.raises(ValueError):
        SequenceSpec(worked_matrix, a0=BitVector(5, 0))
    with pytest.raises(RankDeficiencyError):
        SequenceSpec(GenerationMatrix(["11", "11"]))


def test_stream_tracks_cursor_and_current(worked_matrix):
    stream = generate_recursive(worked_matrix, count=5)
    assert stream.cursor == 0 and stream.current is None
    first = next(stream)
    assert first == BitVector(4, 0)
    assert stream.cursor == 1 and stream.current == first
    rest = list(stream)
    assert len(rest) == 4
    assert stream.cursor == 5
    assert stream.current == BitVector(4, TABLE_UP[4])
    with pytest.raises(StopIteration):
        next(stream)


def test_stream_emits_exactly_count_addresses(worked_matrix):
    assert run(generate_recursive(worked_matrix, count=7)) == TABLE_UP[:7]


def test_stream_from_words_wraps_a_list():
    stream = AddressStream.from_words(3, [1, 5, 2])
    assert stream.count == 3
    assert [v.word for v in stream] == [1, 5, 2]
