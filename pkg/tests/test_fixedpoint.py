from concurrent.futures import ThreadPoolExecutor

import numpy
import pytest
from hypothesis import given
from hypothesis import strategies as st

from apw.exceptions import (ConstantTooLarge, NotASeed, NotGrowing,
                            NotRecurrentInWindow)
from apw.fixedpoint import (FixedPointStream, aperiodicity_check,
                            factor_complexity, occurrences, recurrence_bound,
                            shared_factor_set)
from apw.substitution import parse_spec
from tests.utils import (as_text, naive_factors, naive_fixed_point,
                         naive_occurrences)

TM_RULES = {"0": "01", "1": "10"}


class TestFixedPointStream:
    def test_prefix(self, tm_stream, cantor_stream):
        assert as_text(tm_stream.prefix(8)) == "01101001"
        assert as_text(cantor_stream.prefix(9)) == "010111010"
        assert tm_stream.prefix(0).size == 0

    def test_prefix_matches_strings(self, tm_stream, pd_stream):
        assert as_text(tm_stream.prefix(1000)) == \
            naive_fixed_point(TM_RULES, "0", 1000)
        assert as_text(pd_stream.prefix(1000)) == \
            naive_fixed_point({"0": "01", "1": "00"}, "0", 1000)

    def test_prefix_read_only(self, tm_stream):
        with pytest.raises(ValueError):
            tm_stream.prefix(4)[0] = 1

    def test_from_symbol(self, thue_morse):
        stream = FixedPointStream.from_symbol(thue_morse, "1")
        assert as_text(stream.prefix(4)) == "1001"

        assert FixedPointStream.from_symbol(thue_morse).seed == 0

    def test_not_a_seed(self):
        substitution = parse_spec("0 -> 10\n1 -> 01")

        with pytest.raises(NotASeed):
            FixedPointStream(substitution, 0)
        with pytest.raises(NotASeed):
            FixedPointStream.from_symbol(substitution)

    def test_not_growing(self):
        with pytest.raises(NotGrowing):
            FixedPointStream(parse_spec("0 -> 0\n1 -> 1"), 0)

    def test_length_cap(self, thue_morse):
        stream = FixedPointStream(thue_morse, 0, max_length=100)

        assert stream.prefix(100).size == 100
        with pytest.raises(ConstantTooLarge):
            stream.prefix(101)

    def test_length_cap_not_exceeded(self):
        stream = FixedPointStream(parse_spec("0 -> 001\n1 -> 011"), 0,
                                  max_length=100)

        prefix = stream.prefix(100)
        assert stream.materialized == 100
        assert numpy.array_equal(
            stream.substitution.apply(prefix[:33]), prefix[:99]
        )
        with pytest.raises(ConstantTooLarge):
            stream.prefix(243)

    def test_length_cap_from_environment(self, thue_morse, monkeypatch):
        monkeypatch.setenv("APW_MAX_WINDOW", "64")
        stream = FixedPointStream(thue_morse, 0)

        assert stream.length_cap == 64
        with pytest.raises(ConstantTooLarge):
            stream.prefix(65)

    @pytest.mark.parametrize(
        "stream_name", ["tm_stream", "pd_stream", "cantor_stream"]
    )
    def test_fixed_point_law(self, request, stream_name):
        stream = request.getfixturevalue(stream_name)
        n = 100000 // stream.m

        assert numpy.array_equal(
            stream.substitution.apply(stream.prefix(n)),
            stream.prefix(stream.m * n)
        )

    def test_concurrent_readers(self, thue_morse):
        stream = FixedPointStream(thue_morse, 0)
        lengths = [2 ** exponent for exponent in range(4, 18)] * 4

        with ThreadPoolExecutor(max_workers=8) as executor:
            prefixes = list(executor.map(stream.prefix, lengths))

        expected = stream.prefix(2 ** 17)
        for length, prefix in zip(lengths, prefixes):
            assert numpy.array_equal(prefix, expected[:length])


class TestLetterAt:
    def test_examples(self, tm_stream, cantor_stream):
        assert tm_stream.letter_at(0) == 0
        assert tm_stream.letter_at(5) == 0
        assert cantor_stream.letter_at(4) == 1

    def test_large_position(self, tm_stream):
        # Letter is the parity of the binary digit sum
        position = 10 ** 12 + 7
        assert tm_stream.letter_at(position) == bin(position).count("1") % 2

    @given(st.integers(min_value=0, max_value=99999))
    def test_matches_prefix(self, tm_stream, cantor_stream, pd_stream,
                            position):
        for stream in (tm_stream, cantor_stream, pd_stream):
            assert stream.letter_at(position) == \
                stream.prefix(position + 1)[position]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "stream_name", ["tm_stream", "pd_stream", "cantor_stream"]
    )
    def test_matches_prefix_exhaustive(self, request, stream_name):
        stream = request.getfixturevalue(stream_name)
        prefix = stream.prefix(100000)

        assert all(
            stream.letter_at(position) == prefix[position]
            for position in range(100000)
        )


class TestOccurrences:
    def test_examples(self, tm_stream):
        assert list(occurrences(tm_stream, [0, 1, 1, 0], 16)) == [0, 6, 12]
        assert list(occurrences(tm_stream, [0, 0, 0], 4096)) == []
        assert list(occurrences(tm_stream, [0], 1)) == [0]

    def test_window_bound(self, tm_stream):
        # 0110 also starts at 12, which ends exactly at the window
        assert list(occurrences(tm_stream, [0, 1, 1, 0], 15)) == [0, 6]

    @given(st.text(alphabet="01", min_size=1, max_size=12))
    def test_matches_naive(self, tm_stream, factor):
        text = as_text(tm_stream.prefix(2048))
        result = occurrences(tm_stream, [int(c) for c in factor], 2048)

        assert list(result) == naive_occurrences(text, factor)

    def test_invalid(self, tm_stream):
        with pytest.raises(ValueError):
            occurrences(tm_stream, [], 16)
        with pytest.raises(ValueError):
            occurrences(tm_stream, [0, 1, 1], 2)


class TestFactorComplexity:
    def test_examples(self, tm_stream, alternating_stream):
        assert factor_complexity(tm_stream, 1, 64) == 2
        assert factor_complexity(tm_stream, 2, 64) == 4
        assert factor_complexity(alternating_stream, 3, 64) == 2

    def test_matches_naive(self, pd_stream):
        text = as_text(pd_stream.prefix(4096))
        for length in range(1, 20):
            assert factor_complexity(pd_stream, length, 4096) == \
                len(naive_factors(text, length))

    def test_nondecreasing(self, tm_stream):
        complexities = [
            factor_complexity(tm_stream, length, 4096)
            for length in range(1, 40)
        ]
        assert complexities == sorted(complexities)

    def test_shared_factor_set(self, tm_stream, tm_stream_1, cantor):
        assert shared_factor_set([tm_stream, tm_stream_1], 8, 4096)

        # 1 -> 111 generates 1^∞
        assert not shared_factor_set(
            [FixedPointStream(cantor, 0), FixedPointStream(cantor, 1)],
            2, 729
        )


class TestAperiodicity:
    def test_periodic(self, alternating_stream):
        verdict = aperiodicity_check(alternating_stream, 64, 4096)

        assert verdict.periodic
        assert verdict.length == 2

    @pytest.mark.parametrize("stream_name", ["tm_stream", "cantor_stream"])
    def test_aperiodic(self, request, stream_name):
        stream = request.getfixturevalue(stream_name)
        verdict = aperiodicity_check(stream, 64, 4096)

        assert not verdict.periodic
        assert verdict.length == 64

    def test_invalid(self, tm_stream):
        with pytest.raises(ValueError):
            aperiodicity_check(tm_stream, 65, 64)


class TestRecurrenceBound:
    def test_thue_morse(self, tm_stream):
        result = recurrence_bound(tm_stream, 1, 4096)

        assert result.bound == 3
        assert not result.growing

    def test_alternating(self, alternating_stream):
        assert recurrence_bound(alternating_stream, 2, 64).bound == 3

    def test_cantor(self, cantor_stream):
        result = recurrence_bound(cantor_stream, 1, 243)

        # The run of 81 ones between positions 81 and 161
        assert result.bound == 82
        assert result.half_bound == 41
        assert result.growing

    @pytest.mark.parametrize("window", [243, 729, 2187])
    def test_cantor_keeps_growing(self, cantor_stream, window):
        assert recurrence_bound(cantor_stream, 1, window).growing

    @pytest.mark.parametrize("length", [1, 2, 3, 4, 8])
    @pytest.mark.parametrize("stream_name", ["tm_stream", "pd_stream"])
    def test_primitive_stabilizes(self, request, stream_name, length):
        stream = request.getfixturevalue(stream_name)

        small = recurrence_bound(stream, length, 4096)
        large = recurrence_bound(stream, length, 16384)

        assert not small.growing
        assert small.bound == large.bound

    def test_period_doubling(self, pd_stream):
        # Longest run of zeros is 000
        assert recurrence_bound(pd_stream, 1, 4096).bound == 4

    def test_matches_naive(self, pd_stream):
        text = as_text(pd_stream.prefix(2048))
        length = 5
        expected = max(
            max(
                numpy.diff(
                    [-1] + naive_occurrences(text, factor)
                    + [2048 - length + 1]
                )
            )
            for factor in naive_factors(text, length)
        ) + length - 1

        assert recurrence_bound(pd_stream, length, 2048).bound == expected

    def test_single_occurrence(self, tm_stream):
        with pytest.raises(NotRecurrentInWindow):
            recurrence_bound(tm_stream, 4, 6)
