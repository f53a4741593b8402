"""
k-anti-powers: words made of k consecutive, pairwise distinct blocks of
equal length
"""
import math

import numpy

from apw.exceptions import InsufficientLength
from apw.fixedpoint import FixedPointStream
from apw.logger import logger
from apw.naming import factor_names
from apw.utils import partition, run_partitioned


class AntiPowerQuery:
    """
    Search for the shortest block length giving a k-anti-power at position n
    """
    def __init__(self, n: int, k: int, ell_max: int):
        if n < 0:
            raise ValueError(f"{n} is not a valid position")
        if k < 1:
            raise ValueError(f"{k} is not a valid block count")
        if ell_max < 1:
            raise ValueError(f"{ell_max} is not a valid block length cap")

        self.n = n
        self.k = k
        self.ell_max = ell_max

    def __eq__(self, other):
        if not isinstance(other, AntiPowerQuery):
            return NotImplemented

        return (self.n, self.k, self.ell_max) == \
            (other.n, other.k, other.ell_max)

    def __repr__(self):
        return (
            f"<AntiPowerQuery n={self.n} k={self.k} ell_max={self.ell_max}>"
        )


class AntiPowerResult:
    """
    Outcome of an anti-power query. `min_ell` is None when no block length
    up to the query's cap works.
    """
    def __init__(self, query: AntiPowerQuery, min_ell: int = None):
        self.query = query
        self.min_ell = min_ell

    @property
    def n(self) -> int:
        return self.query.n

    @property
    def k(self) -> int:
        return self.query.k

    @property
    def found(self) -> bool:
        return self.min_ell is not None

    @property
    def ratio(self) -> float:
        if self.min_ell is None:
            return None

        return self.min_ell / self.query.k

    def __eq__(self, other):
        if not isinstance(other, AntiPowerResult):
            return NotImplemented

        return self.query == other.query and self.min_ell == other.min_ell

    def __repr__(self):
        return (
            f"<AntiPowerResult n={self.n} k={self.k} min_ell={self.min_ell}>"
        )


def default_ell_max(k: int, constant) -> int:
    """
    Block length cap ceil(C*k) guaranteed to suffice when C is the proof
    constant of a primitive, aperiodic substitution
    """
    return math.ceil(constant * k)


def is_anti_power(word, k: int, ell: int) -> bool:
    """
    Check whether the first k blocks of length ell of a word are pairwise
    distinct.

    :raises InsufficientLength: If the word is shorter than k*ell
    """
    if k < 1 or ell < 1:
        raise ValueError(f"Invalid block count {k} or block length {ell}")

    word = numpy.asarray(word)
    if word.size < k * ell:
        raise InsufficientLength(
            f"Word of length {word.size} can't hold {k} blocks of "
            f"length {ell}"
        )

    # Set membership falls back to comparing the blocks themselves when
    # their hashes match, so collisions never give a wrong answer
    seen = set()
    for index in range(k):
        block = word[index * ell:(index + 1) * ell].tobytes()
        if block in seen:
            return False
        seen.add(block)

    return True


def min_block_length(stream: FixedPointStream,
                     query: AntiPowerQuery) -> AntiPowerResult:
    """
    Find the smallest block length ell <= ell_max for which the k blocks
    starting at position n form an anti-power.

    Block lengths are tried in ascending order since a success at ell
    says nothing about ell + 1.
    """
    for ell in range(1, query.ell_max + 1):
        word = stream.prefix(query.n + query.k * ell)[query.n:]
        if is_anti_power(word, query.k, ell):
            return AntiPowerResult(query, ell)

    return AntiPowerResult(query, None)


def distinct_prefix_lengths(blocks: numpy.ndarray) -> numpy.ndarray:
    """
    For each row of block names, return the largest j such that the first
    j blocks are pairwise distinct
    """
    rows, columns = blocks.shape
    runs = numpy.full(rows, columns, dtype=numpy.int64)

    for column in range(1, columns):
        repeated = (blocks[:, :column] == blocks[:, column:column + 1]).any(
            axis=1
        )
        runs[repeated & (runs == columns)] = column

    return runs


def _scan_chunk(stream: FixedPointStream, ns: list, ks: list,
                caps: dict) -> list:
    """
    Resolve every (n, k) cell of a chunk by ascending ell once for all
    cells. A cell is resolved at the first ell where the first k block
    names starting at n are distinct.
    """
    starts_all = numpy.array(ns, dtype=numpy.int64)
    distinct_ks = sorted(set(ks))
    found = {
        k: numpy.zeros(len(ns), dtype=numpy.int64) for k in distinct_ks
    }

    ell = 0
    while True:
        ell += 1
        active = [
            k for k in distinct_ks
            if ell <= caps[k] and not found[k].all()
        ]
        if not active:
            break

        k_top = max(active)
        pending = numpy.zeros(len(ns), dtype=bool)
        for k in active:
            pending |= found[k] == 0
        rows = numpy.flatnonzero(pending)
        starts = starts_all[rows]

        word = stream.prefix(int(starts.max()) + k_top * ell)
        names = factor_names(word, ell)
        blocks = names[
            starts[:, None] + ell * numpy.arange(k_top)[None, :]
        ]
        runs = distinct_prefix_lengths(blocks)

        for k in active:
            hits = (found[k][rows] == 0) & (runs >= k)
            found[k][rows[hits]] = ell

    results = []
    for index, n in enumerate(ns):
        for k in ks:
            min_ell = int(found[k][index]) or None
            results.append(
                AntiPowerResult(AntiPowerQuery(n, k, caps[k]), min_ell)
            )

    return results


def scan(stream: FixedPointStream, n_range, k_range, ell_max,
         jobs: int = 1) -> list:
    """
    Compute minimal block lengths for every (n, k) pair of a grid.

    :param ell_max: Block length cap, either an integer or a callable
                    returning the cap for a given k
    :param jobs: Number of worker threads; the positions are split into
                 contiguous chunks and the results merged in order
    :returns: List of AntiPowerResult ordered by n, then by k
    """
    ns = list(n_range)
    ks = list(k_range)

    if not ns or not ks:
        return []
    if min(ns) < 0:
        raise ValueError(f"{min(ns)} is not a valid position")
    if min(ks) < 1:
        raise ValueError(f"{min(ks)} is not a valid block count")

    caps = {
        k: ell_max(k) if callable(ell_max) else ell_max
        for k in ks
    }

    logger.info(
        "Scanning %d positions and %d block counts on %d workers",
        len(ns), len(ks), jobs
    )
    chunk_results = run_partitioned(
        lambda chunk: _scan_chunk(stream, chunk, ks, caps),
        partition(ns, jobs),
        jobs=jobs
    )

    return [result for results in chunk_results for result in results]
