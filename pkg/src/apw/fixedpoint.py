"""
Fixed points x = σ^∞(a) of uniform substitutions: prefixes, random access,
occurrences, factor statistics and recurrence evidence
"""
import threading

import numpy

from apw.config import get_max_window
from apw.exceptions import (ConstantTooLarge, NotASeed, NotGrowing,
                            NotRecurrentInWindow)
from apw.logger import logger
from apw.naming import factor_names, iter_factor_names, return_gaps
from apw.substitution import Substitution, fixed_point_seeds


class FixedPointStream:
    """
    Lazily materialized fixed point of a uniform substitution.

    The cached prefix only ever grows by applying the substitution to
    itself; once a prefix has been materialized it is never modified, so
    concurrent readers may use any prefix returned earlier.
    """
    def __init__(self, substitution: Substitution, seed: int,
                 max_length: int = None):
        """
        :param substitution: Substitution with image length m >= 2
        :param seed: Letter whose image starts with the letter itself
        :param max_length: Largest prefix that may be materialized.
                           Defaults to the configured resource cap.
        """
        if substitution.m < 2:
            raise NotGrowing(
                f"Substitution has image length {substitution.m}; "
                f"fixed points require m >= 2"
            )
        if seed not in fixed_point_seeds(substitution):
            raise NotASeed(
                f"Image of '{substitution.symbols[seed]}' does not begin "
                f"with '{substitution.symbols[seed]}'"
            )

        self.substitution = substitution
        self.seed = seed
        self.max_length = max_length

        self._cache = numpy.array([seed], dtype=substitution.dtype)
        self._cache.setflags(write=False)
        self._lock = threading.Lock()

    @classmethod
    def from_symbol(cls, substitution: Substitution, symbol: str = None,
                    max_length: int = None) -> "FixedPointStream":
        """
        Create a stream seeded with the given symbol, or with the first
        available seed if no symbol is given
        """
        if symbol is None:
            seeds = fixed_point_seeds(substitution)
            if not seeds:
                raise NotASeed("No letter's image begins with the letter")
            seed = seeds[0]
        else:
            seed = substitution.letter_index(symbol)

        return cls(substitution, seed, max_length=max_length)

    def __repr__(self):
        return (
            f"<FixedPointStream seed={self.seed_symbol!r} "
            f"materialized={self.materialized}>"
        )

    @property
    def m(self) -> int:
        return self.substitution.m

    @property
    def seed_symbol(self) -> str:
        return self.substitution.symbols[self.seed]

    @property
    def materialized(self) -> int:
        return self._cache.size

    @property
    def length_cap(self) -> int:
        if self.max_length is not None:
            return self.max_length

        return get_max_window()

    def _materialize(self, n: int) -> numpy.ndarray:
        cap = self.length_cap

        with self._lock:
            cache = self._cache
            while cache.size < n:
                # σ(x[:j]) = x[:m*j], so growth stops at the cap
                source = cache[:-(-cap // self.m)]
                cache = self.substitution.apply(source)[:cap]

            if cache is not self._cache:
                cache.setflags(write=False)
                self._cache = cache
                logger.debug(
                    "Materialized %d letters of the fixed point from '%s'",
                    cache.size, self.seed_symbol
                )

        return cache

    def prefix(self, n: int) -> numpy.ndarray:
        """
        Return the length-n prefix of the fixed point as a read-only array
        """
        if n < 0:
            raise ValueError(f"{n} is not a valid prefix length")
        if n > self.length_cap:
            raise ConstantTooLarge(
                f"Prefix of length {n} exceeds the cap of "
                f"{self.length_cap} letters"
            )

        cache = self._cache
        if cache.size < n:
            cache = self._materialize(n)

        return cache[:n]

    def letter_at(self, i: int) -> int:
        """
        Return x_i without materializing the prefix, using
        x[q*m + d] = σ(x[q])[d] on the base-m digits of i
        """
        if i < 0:
            raise ValueError(f"{i} is not a valid position")

        digits = []
        while i:
            i, digit = divmod(i, self.m)
            digits.append(digit)

        letter = self.seed
        for digit in reversed(digits):
            letter = self.substitution.images[letter][digit]

        return letter


class OccurrenceList:
    """
    Ascending start positions of a factor within the prefix of length
    `window`
    """
    def __init__(self, factor: numpy.ndarray, positions: numpy.ndarray,
                 window: int):
        self.factor = factor
        self.positions = positions
        self.window = window

    def __len__(self):
        return self.positions.size

    def __iter__(self):
        return (int(position) for position in self.positions)

    def __repr__(self):
        return (
            f"<OccurrenceList length={self.factor.size} "
            f"count={len(self)} window={self.window}>"
        )


def occurrences(stream: FixedPointStream, factor,
                window: int) -> OccurrenceList:
    """
    Find every occurrence of a factor starting at p <= window - |factor|.

    Candidates are narrowed letter by letter, so every reported position
    has been compared against the whole factor.
    """
    factor = numpy.asarray(factor, dtype=stream.substitution.dtype)
    if factor.size < 1:
        raise ValueError("Factor must not be empty")
    if window < factor.size:
        raise ValueError(
            f"Window {window} is shorter than the factor ({factor.size})"
        )

    word = stream.prefix(window)
    candidates = numpy.flatnonzero(
        word[:window - factor.size + 1] == factor[0]
    )
    for offset in range(1, factor.size):
        if not candidates.size:
            break
        candidates = candidates[word[candidates + offset] == factor[offset]]

    return OccurrenceList(factor, candidates, window)


def factor_complexity(stream: FixedPointStream, length: int,
                      window: int) -> int:
    """
    Count the distinct factors of the given length in the prefix of length
    `window`
    """
    if not 1 <= length <= window:
        raise ValueError(
            f"Factor length {length} must be between 1 and the window"
        )

    names = factor_names(stream.prefix(window), length)
    return int(numpy.unique(names).size)


def factor_set(stream: FixedPointStream, length: int,
               window: int) -> frozenset:
    """
    Return the set of length-`length` factors of the prefix as tuples of
    letters
    """
    word = stream.prefix(window)
    names = factor_names(word, length)
    _, first = numpy.unique(names, return_index=True)

    return frozenset(
        tuple(int(letter) for letter in word[position:position + length])
        for position in first
    )


def shared_factor_set(streams, length: int, window: int) -> bool:
    """
    Check whether the fixed points of different seeds have the same
    length-`length` factors within the window. For a primitive substitution
    all fixed points generate the same shift orbit closure.
    """
    sets = [factor_set(stream, length, window) for stream in streams]
    return all(factors == sets[0] for factors in sets[1:])


class PeriodicDetected:
    """
    Some length n has at most n distinct factors, so the fixed point is
    eventually periodic
    """
    periodic = True

    def __init__(self, length: int):
        self.length = length

    def __repr__(self):
        return f"<PeriodicDetected length={self.length}>"


class AperiodicUpTo:
    """
    Every length up to `length` has more than n distinct factors
    """
    periodic = False

    def __init__(self, length: int):
        self.length = length

    def __repr__(self):
        return f"<AperiodicUpTo length={self.length}>"


def aperiodicity_check(stream: FixedPointStream, n_max: int, window: int):
    """
    Look for a length n <= n_max with factor complexity at most n.

    Finding one proves eventual periodicity; not finding one only certifies
    aperiodicity for the lengths tried. The window must be long enough to
    contain every factor of length n_max.
    """
    if not 1 <= n_max <= window:
        raise ValueError(
            f"Factor length {n_max} must be between 1 and the window"
        )

    word = stream.prefix(window)

    for length, names in iter_factor_names(word, n_max):
        complexity = int(names.max()) + 1
        if complexity <= length:
            logger.info(
                "Found %d factors of length %d; fixed point is periodic",
                complexity, length
            )
            return PeriodicDetected(length)

    return AperiodicUpTo(n_max)


class RecurrenceBound:
    """
    Smallest R such that every length-R window of the scanned prefix
    contains every length-L factor seen in the prefix.

    `growing` is set when the bound measured on the first half of the
    window is smaller, which is evidence that the fixed point is not
    uniformly recurrent.
    """
    def __init__(self, length: int, bound: int, window: int,
                 half_bound: int = None):
        self.length = length
        self.bound = bound
        self.window = window
        self.half_bound = half_bound

    @property
    def growing(self) -> bool:
        return self.half_bound is None or self.bound > self.half_bound

    def __repr__(self):
        return (
            f"<RecurrenceBound length={self.length} bound={self.bound} "
            f"window={self.window} growing={self.growing}>"
        )


def _window_recurrence(word: numpy.ndarray, length: int):
    """
    Return (bound, singleton_position) for one window; the second value is
    the position of a factor occurring only once, or None
    """
    names = factor_names(word, length)
    if not names.size:
        return None, 0

    max_gaps, counts, first_positions = return_gaps(names)
    bound = length - 1 + int(max_gaps.max())

    singletons = numpy.flatnonzero(counts == 1)
    if singletons.size:
        return bound, int(first_positions[singletons].min())

    return bound, None


def recurrence_bound(stream: FixedPointStream, length: int,
                     window: int) -> RecurrenceBound:
    """
    Measure the recurrence bound R(L) within the prefix of length `window`.

    :raises NotRecurrentInWindow: If some length-L factor occurs only once
                                  in the window
    """
    if not 1 <= length <= window:
        raise ValueError(
            f"Factor length {length} must be between 1 and the window"
        )

    word = stream.prefix(window)
    bound, singleton = _window_recurrence(word, length)

    if singleton is not None:
        factor = stream.substitution.format_word(
            word[singleton:singleton + length]
        )
        raise NotRecurrentInWindow(
            f"Factor {factor} of length {length} occurs only once in the "
            f"first {window} letters"
        )

    half_bound, half_singleton = _window_recurrence(word[:window // 2], length)
    if half_singleton is not None:
        half_bound = None

    result = RecurrenceBound(length, bound, window, half_bound)

    if result.growing:
        logger.warning(
            "Recurrence bound for length %d is still growing: %s at window "
            "%d, %d at window %d",
            length, half_bound, window // 2, bound, window
        )

    return result
