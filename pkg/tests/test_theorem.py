import pytest

from apw.exceptions import NotPrimitive, PeriodicInput, SearchExhausted
from apw.recognizability import derive_N_prime
from apw.theorem import (construction_exponent, empirical_constant,
                         proof_constant, verify_bound, verify_construction,
                         verify_constructions)
from tests.utils import as_text, naive_is_anti_power


@pytest.fixture(scope="module")
def tm_report(tm_stream):
    return derive_N_prime(tm_stream, window=2 ** 16)


@pytest.fixture(scope="module")
def pd_report(pd_stream):
    return derive_N_prime(pd_stream, window=2 ** 16)


@pytest.mark.parametrize(
    "k,m,expected",
    [(1, 2, 1), (2, 2, 2), (3, 2, 2), (7, 2, 3), (8, 2, 4), (2, 3, 1),
     (3, 3, 2)]
)
def test_construction_exponent(k, m, expected):
    assert construction_exponent(k, m) == expected


class TestProofConstant:
    def test_thue_morse(self, tm_stream, tm_report):
        assert proof_constant(tm_stream, tm_report) == \
            (tm_report.N_prime + 1) * 2

    def test_not_primitive(self, cantor_stream):
        with pytest.raises(NotPrimitive):
            proof_constant(cantor_stream, window=4096)

    def test_periodic(self, alternating_stream):
        with pytest.raises(PeriodicInput):
            proof_constant(alternating_stream, window=4096)


class TestVerifyConstruction:
    def test_examples(self, tm_stream, tm_report):
        N_prime = tm_report.N_prime

        verdict = verify_construction(tm_stream, 0, 3, N_prime)
        assert verdict.holds
        assert verdict.i == 2
        assert verdict.block_len == N_prime * 4 + 1

        verdict = verify_construction(tm_stream, 17, 7, N_prime)
        assert verdict.holds
        assert verdict.i == 3

        assert verify_construction(tm_stream, 5, 1, N_prime).holds

    def test_matches_naive(self, tm_stream, tm_report):
        N_prime = tm_report.N_prime
        text = as_text(tm_stream.prefix(20000))

        for n in (0, 3, 100):
            for k in (2, 4, 5):
                verdict = verify_construction(tm_stream, n, k, N_prime)
                assert verdict.holds == naive_is_anti_power(
                    text[n:], k, verdict.block_len
                )

    def test_grid_matches_single(self, pd_stream, pd_report):
        verdicts = verify_constructions(
            pd_stream, range(0, 60, 3), range(1, 10), pd_report.N_prime
        )

        assert len(verdicts) == 20 * 9
        for verdict in verdicts:
            single = verify_construction(
                pd_stream, verdict.n, verdict.k, pd_report.N_prime
            )
            assert (verdict.i, verdict.block_len, verdict.holds) == \
                (single.i, single.block_len, single.holds)

    def test_grid_empty(self, tm_stream):
        assert verify_constructions(tm_stream, range(0), range(1, 4), 10) == []


class TestVerifyBound:
    def test_thue_morse(self, tm_stream, tm_report):
        C = proof_constant(tm_stream, tm_report)
        report = verify_bound(
            tm_stream, range(512), range(1, 17), C,
            N_prime=tm_report.N_prime
        )

        assert len(report.rows) == 512 * 16
        assert report.violations == []
        assert report.construction_failures == []
        assert report.ok
        assert report.C_empirical <= C

    def test_alternating(self, alternating_stream):
        report = verify_bound(alternating_stream, range(16), [3], 10)

        assert report.violations == [(n, 3) for n in range(16)]
        assert not report.ok
        assert report.C_empirical == 0

    def test_empty(self, tm_stream):
        report = verify_bound(tm_stream, range(0), range(1, 4), 10)

        assert report.rows == []
        assert report.violations == []
        assert report.C_empirical == 0

    def test_rows(self, tm_stream, tm_report):
        report = verify_bound(
            tm_stream, [0], [3], 10, N_prime=tm_report.N_prime
        )
        row = report.rows[0]

        assert (row.n, row.k, row.i, row.min_ell) == (0, 3, 2, 5)
        assert row.block_len == tm_report.N_prime * 4 + 1
        assert row.ratio == pytest.approx(5 / 3)
        assert row.ok

    def test_without_construction(self, tm_stream):
        row = verify_bound(tm_stream, [0], [3], 10).rows[0]

        assert row.block_len is None
        assert row.construction is None
        assert row.ok

    def test_jobs_deterministic(self, pd_stream, pd_report):
        C = proof_constant(pd_stream, pd_report)
        single = verify_bound(pd_stream, range(200), range(1, 17), C, jobs=1)
        threaded = verify_bound(
            pd_stream, range(200), range(1, 17), C, jobs=4
        )

        assert [
            (row.n, row.k, row.min_ell) for row in single.rows
        ] == [
            (row.n, row.k, row.min_ell) for row in threaded.rows
        ]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "stream_name,report_name",
        [("tm_stream", "tm_report"), ("pd_stream", "pd_report")]
    )
    def test_full_grid(self, request, stream_name, report_name):
        stream = request.getfixturevalue(stream_name)
        recognizability = request.getfixturevalue(report_name)
        C = proof_constant(stream, recognizability)

        report = verify_bound(
            stream, range(2000), range(1, 33), C,
            N_prime=recognizability.N_prime, jobs=4
        )

        assert report.violations == []
        assert report.construction_failures == []
        assert report.C_empirical <= C

        # The first k blocks of a (k+1)-anti-power form a k-anti-power
        min_ells = {(row.n, row.k): row.min_ell for row in report.rows}
        for (n, k), min_ell in min_ells.items():
            if k < 32:
                assert min_ell <= min_ells[(n, k + 1)]


class TestEmpiricalConstant:
    def test_thue_morse(self, tm_stream):
        assert empirical_constant(tm_stream, [0], [2, 3], 64) == 2

    def test_alternating(self, alternating_stream):
        assert empirical_constant(alternating_stream, range(64), [2], 64) == 1

    def test_exhausted(self, alternating_stream):
        with pytest.raises(SearchExhausted):
            empirical_constant(alternating_stream, range(4), [3], 64)

    def test_empty(self, tm_stream):
        assert empirical_constant(tm_stream, range(0), [2], 64) == 0

    def test_below_proof_constant(self, pd_stream, pd_report):
        C = proof_constant(pd_stream, pd_report)
        assert empirical_constant(
            pd_stream, range(300), range(1, 17), lambda k: C * k
        ) <= C
