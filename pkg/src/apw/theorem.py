"""
Anti-power bounds for fixed points of primitive aperiodic uniform
substitutions.

Every element of the shift orbit closure contains, at every starting
position n, a k-anti-power whose block length is at most C*k with
C = (N' + 1) * m. The witness used for this is the k consecutive blocks of
length N' * m^i + 1 starting at n, where m^(i-1) <= k < m^i.
"""
import numpy

from apw.antipower import (default_ell_max, distinct_prefix_lengths,
                           is_anti_power, scan)
from apw.config import CONFIG
from apw.exceptions import SearchExhausted
from apw.fixedpoint import FixedPointStream
from apw.gates import raise_for_failed_gate
from apw.logger import logger
from apw.naming import factor_names
from apw.recognizability import RecognizabilityReport, derive_N_prime


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def construction_exponent(k: int, m: int) -> int:
    """
    Return the least i >= 1 with k < m^i
    """
    if k < 1:
        raise ValueError(f"{k} is not a valid block count")

    i = 1
    while k >= m ** i:
        i += 1

    return i


def construction_block_length(k: int, m: int, N_prime: int) -> int:
    return N_prime * m ** construction_exponent(k, m) + 1


class ConstructionVerdict:
    """
    Whether the k blocks of length N' * m^i + 1 starting at n are pairwise
    distinct
    """
    def __init__(self, n: int, k: int, i: int, block_len: int, holds: bool):
        self.n = n
        self.k = k
        self.i = i
        self.block_len = block_len
        self.holds = holds

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return (
            f"<ConstructionVerdict n={self.n} k={self.k} i={self.i} "
            f"block_len={self.block_len} holds={self.holds}>"
        )


class TheoremRow:
    """
    Result of a single (n, k) cell of a bound verification
    """
    def __init__(self, n: int, k: int, i: int, min_ell: int = None,
                 block_len: int = None, construction: bool = None):
        self.n = n
        self.k = k
        self.i = i
        self.min_ell = min_ell
        self.block_len = block_len
        self.construction = construction

    @property
    def bound_holds(self) -> bool:
        return self.min_ell is not None

    @property
    def ratio(self) -> float:
        if self.min_ell is None:
            return None

        return self.min_ell / self.k

    @property
    def ok(self) -> bool:
        return self.bound_holds and self.construction is not False

    def __repr__(self):
        return (
            f"<TheoremRow n={self.n} k={self.k} min_ell={self.min_ell} "
            f"ok={self.ok}>"
        )


class TheoremReport:
    """
    Outcome of verifying the anti-power bound over a grid of (n, k)
    """
    def __init__(self, C, n_range, k_range, rows: list,
                 N_prime: int = None):
        self.C = C
        self.n_range = n_range
        self.k_range = k_range
        self.rows = rows
        self.N_prime = N_prime

    @property
    def violations(self) -> list:
        """
        Cells where no anti-power was found within block length ceil(C*k)
        """
        return [(row.n, row.k) for row in self.rows if not row.bound_holds]

    @property
    def construction_failures(self) -> list:
        return [
            (row.n, row.k) for row in self.rows
            if row.construction is False
        ]

    @property
    def C_empirical(self) -> int:
        """
        Largest ceil(min_ell / k) over the cells that succeeded, or 0
        """
        return max(
            (
                _ceil_div(row.min_ell, row.k) for row in self.rows
                if row.bound_holds
            ),
            default=0
        )

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def __repr__(self):
        return (
            f"<TheoremReport C={self.C} cells={len(self.rows)} "
            f"violations={len(self.violations)} "
            f"C_empirical={self.C_empirical}>"
        )


def proof_constant(stream: FixedPointStream,
                   report: RecognizabilityReport = None,
                   window: int = None) -> int:
    """
    Return C = (N' + 1) * m, deriving the recognizability report first if
    none is given
    """
    if window is None:
        window = report.window if report else \
            int(CONFIG["recognizability"]["window"])

    raise_for_failed_gate(stream, window)

    if report is None:
        report = derive_N_prime(stream, window=window)

    return (report.N_prime + 1) * stream.m


def verify_construction(stream: FixedPointStream, n: int, k: int,
                        N_prime: int) -> ConstructionVerdict:
    """
    Check the explicit anti-power witness at position n directly
    """
    if n < 0:
        raise ValueError(f"{n} is not a valid position")

    i = construction_exponent(k, stream.m)
    block_len = N_prime * stream.m ** i + 1

    if k == 1:
        return ConstructionVerdict(n, k, i, block_len, True)

    word = stream.prefix(n + k * block_len)[n:]
    return ConstructionVerdict(
        n, k, i, block_len, is_anti_power(word, k, block_len)
    )


def verify_constructions(stream: FixedPointStream, n_range, k_range,
                         N_prime: int) -> list:
    """
    Check the explicit witness on every cell of a grid.

    Block counts sharing an exponent i share a block length, so factor
    names are computed once per exponent.

    :returns: List of ConstructionVerdict ordered by n, then by k
    """
    ns = list(n_range)
    ks = list(k_range)
    if not ns or not ks:
        return []
    if min(ns) < 0:
        raise ValueError(f"{min(ns)} is not a valid position")

    starts = numpy.array(ns, dtype=numpy.int64)
    exponents = {k: construction_exponent(k, stream.m) for k in ks}
    runs_by_exponent = {}

    for i in sorted(set(exponents.values())):
        block_len = N_prime * stream.m ** i + 1
        k_top = max(k for k in ks if exponents[k] == i)

        word = stream.prefix(int(starts.max()) + k_top * block_len)
        names = factor_names(word, block_len)
        blocks = names[
            starts[:, None] + block_len * numpy.arange(k_top)[None, :]
        ]
        runs_by_exponent[i] = distinct_prefix_lengths(blocks)
        logger.debug(
            "Checked witnesses with %d blocks of length %d", k_top, block_len
        )

    verdicts = []
    for index, n in enumerate(ns):
        for k in ks:
            i = exponents[k]
            verdicts.append(ConstructionVerdict(
                n, k, i, N_prime * stream.m ** i + 1,
                bool(runs_by_exponent[i][index] >= k)
            ))

    return verdicts


def verify_bound(stream: FixedPointStream, n_range, k_range, C,
                 N_prime: int = None, jobs: int = 1) -> TheoremReport:
    """
    Search for an anti-power with block length at most ceil(C*k) on every
    cell of a grid. Cells without one are reported as violations rather
    than raised.

    :param N_prime: If given, the explicit witness is checked on every cell
                    as well
    """
    results = scan(
        stream, n_range, k_range,
        ell_max=lambda k: default_ell_max(k, C), jobs=jobs
    )

    constructions = {}
    if N_prime is not None:
        constructions = {
            (verdict.n, verdict.k): verdict
            for verdict in verify_constructions(
                stream, n_range, k_range, N_prime
            )
        }

    rows = []
    for result in results:
        verdict = constructions.get((result.n, result.k))
        rows.append(TheoremRow(
            n=result.n, k=result.k,
            i=construction_exponent(result.k, stream.m),
            min_ell=result.min_ell,
            block_len=verdict.block_len if verdict else None,
            construction=verdict.holds if verdict else None
        ))

    report = TheoremReport(C, n_range, k_range, rows, N_prime=N_prime)

    if report.violations:
        logger.warning(
            "%d cells have no anti-power within C*k for C=%s",
            len(report.violations), C
        )

    return report


def empirical_constant(stream: FixedPointStream, n_range, k_range,
                       ell_cap, jobs: int = 1) -> int:
    """
    Return the smallest integer C such that every cell of the grid has an
    anti-power with block length at most C*k.

    :raises SearchExhausted: If some cell has no anti-power within ell_cap
    """
    results = scan(stream, n_range, k_range, ell_max=ell_cap, jobs=jobs)

    for result in results:
        if not result.found:
            raise SearchExhausted(
                f"No {result.k}-anti-power at position {result.n} with "
                f"block length up to {result.query.ell_max}"
            )

    return max(
        (_ceil_div(result.min_ell, result.k) for result in results),
        default=0
    )
