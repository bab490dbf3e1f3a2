import pytest

from addrseq import (
    ActivityReport,
    BalanceFailure,
    BitVector,
    IncompleteSequenceError,
    analyze,
    bit_balance,
    check_completeness,
    format_report,
    generate_recursive,
    graycode_matrix,
    hamming_profile,
    tuple_balance,
    verify_complete,
)

from _tables import (
    COMPLEMENT_PROFILE,
    FAMILY_COLUMNS,
    LIMITED_PROFILE,
    POW2_2_PER_BIT_TRANSITIONS,
    TABLE_UP,
)


# -- completeness -----------------------------------------------------------------


def test_worked_up_column_is_complete():
    assert verify_complete(TABLE_UP, 4)


def test_counter_is_complete():
    assert verify_complete(list(range(64)), 6)


def test_duplicate_is_reported():
    seq = list(range(16))
    seq[7] = 3
    result = check_completeness(seq, 4)
    assert not result.complete
    assert result.first_duplicate == BitVector(4, 3)
    assert result.first_missing == BitVector(4, 7)
    assert result.distinct == 15


def test_truncated_sequence_is_incomplete():
    result = check_completeness(list(range(10)), 4)
    assert not result.complete
    assert result.first_duplicate is None
    assert result.first_missing == BitVector(4, 10)


def test_completeness_accepts_bitvectors():
    seq = [BitVector(2, w) for w in (0, 1, 2, 3)]
    assert verify_complete(seq)
    with pytest.raises(ValueError):
        verify_complete([BitVector(2, 0), BitVector(3, 1)])


def test_completeness_over_wide_space_stays_cheap():
    # short input over a 2^40 space must not allocate a presence bitmap
    result = check_completeness([0, 1, 2, 2], 40)
    assert not result.complete
    assert result.first_duplicate == BitVector(40, 2)
    assert result.first_missing == BitVector(40, 3)


# -- bit balance ------------------------------------------------------------------


def test_counter_bit_balance_m3():
    assert bit_balance(list(range(8)), 3) == [4, 4, 4]


def test_every_complete_sequence_is_bit_balanced():
    assert bit_balance(TABLE_UP, 4) == [8, 8, 8, 8]


def test_gray_column_bit_balance():
    assert bit_balance(FAMILY_COLUMNS["gray"], 4)[0] == 8


def test_bit_balance_rejects_incomplete_input():
    with pytest.raises(IncompleteSequenceError, match="verify_complete"):
        bit_balance(list(range(10)), 4)


# -- tuple balance ----------------------------------------------------------------


def test_counter_two_bit_patterns_m3():
    counts = tuple_balance(list(range(8)), {3, 1}, 3)
    assert counts == {"00": 2, "01": 2, "10": 2, "11": 2}


def test_all_positions_restate_completeness():
    counts = tuple_balance(TABLE_UP, {1, 2, 3, 4}, 4)
    assert set(counts.values()) == {1}
    assert len(counts) == 16


def test_worked_column_pairs():
    counts = tuple_balance(TABLE_UP, {4, 2}, 4)
    assert counts == {"00": 4, "01": 4, "10": 4, "11": 4}


def test_tuple_balance_position_validation():
    with pytest.raises(ValueError):
        tuple_balance(TABLE_UP, {0, 2}, 4)
    with pytest.raises(ValueError):
        tuple_balance(TABLE_UP, {5}, 4)
    with pytest.raises(ValueError):
        tuple_balance(TABLE_UP, set(), 4)


def test_tuple_balance_rejects_incomplete_input():
    with pytest.raises(IncompleteSequenceError):
        tuple_balance(list(range(10)), {1, 2}, 4)


# -- switching profile ---------------------------------------------------------------


def test_gray_profile_is_all_ones():
    profile = hamming_profile(FAMILY_COLUMNS["gray"], 4)
    assert profile.distances == [1] * 15
    assert sum(profile.per_bit_transitions) == 15


def test_limited_profile_alternates():
    assert hamming_profile(FAMILY_COLUMNS["limited"], 4).distances == LIMITED_PROFILE


def test_complement_profile_matches_frozen_column():
    assert hamming_profile(FAMILY_COLUMNS["complement"], 4).distances == COMPLEMENT_PROFILE


def test_constant_input_has_zero_profile():
    profile = hamming_profile([5, 5, 5, 5], 4)
    assert profile.distances == [0, 0, 0]
    assert profile.per_bit_transitions == [0, 0, 0, 0]


def test_profile_sums_agree_everywhere():
    for column in FAMILY_COLUMNS.values():
        profile = hamming_profile(column, 4)
        assert sum(profile.distances) == sum(profile.per_bit_transitions)


# -- aggregate report -----------------------------------------------------------------


def test_analyze_worked_column():
    report = analyze(TABLE_UP, 4)
    assert report.complete
    assert report.ok
    assert report.balance_failures == []
    assert report.balance_r_max == 4
    assert report.per_bit_ones == [8, 8, 8, 8]
    assert report.length == 16
    assert sum(report.hamming_profile) == sum(report.per_bit_transitions)


def test_analyze_empty_input():
    report = analyze([], 4)
    assert not report.complete
    assert report.length == 0
    assert report.min_distance is None
    assert report.mean_distance is None
    assert not report.balance_checked
    assert not report.ok


def test_analyze_power2_transition_concentration():
    report = analyze(FAMILY_COLUMNS["pow2_2"], 4)
    assert report.per_bit_transitions == POW2_2_PER_BIT_TRANSITIONS


def test_analyze_partial_sequence_skips_balance():
    report = analyze(TABLE_UP[:9], 4)
    assert not report.complete
    assert not report.balance_checked
    assert report.balance_r_max == 0
    assert report.hamming_profile == [
        bin(a ^ b).count("1") for a, b in zip(TABLE_UP, TABLE_UP[1:9])
    ]


def test_analyze_respects_max_r():
    report = analyze(TABLE_UP, 4, max_r=2)
    assert report.balance_r_max == 2
    assert report.ok


def test_analyze_is_order_sensitive_in_profile_only():
    rotated = TABLE_UP[5:] + TABLE_UP[:5]
    a, b = analyze(TABLE_UP, 4), analyze(rotated, 4)
    assert a.complete and b.complete
    assert a.hamming_profile != b.hamming_profile


def test_generated_sequences_analyze_clean():
    V = graycode_matrix(5, (3, 1, 5, 2, 4))
    report = analyze(list(generate_recursive(V).words()), 5)
    assert report.ok
    assert set(report.hamming_profile) == {1}


# -- report rendering --------------------------------------------------------------------


def test_format_report_stable_keys():
    text = format_report(analyze(TABLE_UP, 4))
    for key in (
        "m=4",
        "length=16",
        "complete=true",
        "per_bit_ones=8,8,8,8",
        "balance_checked=true",
        "balance_r_max=4",
        "balance_failures=0",
        "hamming_min=",
        "hamming_histogram=",
    ):
        assert key in text


def test_format_report_lists_failures():
    report = ActivityReport(
        m=2,
        length=4,
        complete=True,
        first_duplicate=None,
        first_missing=None,
        per_bit_ones=[2, 2],
        per_bit_transitions=[2, 1],
        hamming_profile=[1, 2, 1],
        min_distance=1,
        max_distance=2,
        mean_distance=4 / 3,
        balance_checked=True,
        balance_r_max=2,
        balance_failures=[BalanceFailure((2, 1), "01", 3, 1)],
    )
    text = format_report(report)
    assert "balance_failures=1" in text
    assert "balance_failure_1=positions:2,1 pattern:01 count:3 expected:1" in text


def test_format_report_incomplete_diagnostics():
    seq = list(range(16))
    seq[5] = 9
    text = format_report(analyze(seq, 4))
    assert "complete=false" in text
    assert "first_duplicate=1001" in text
    assert "first_missing=0101" in text
