"""
Empirical recognizability constants of primitive uniform substitutions.

All constants are estimated from a finite prefix of the fixed point (the
"window") and reported together with it. Before a census is trusted the
window is checked to contain every factor of the lengths involved, using
the measured recurrence bound.
"""
import numpy
import toml

from apw.config import CONFIG
from apw.exceptions import (CensusIncomplete, ConstantTooLarge,
                            NoConstantFound, NotRecurrentInWindow)
from apw.fixedpoint import FixedPointStream, occurrences, recurrence_bound
from apw.gates import raise_for_failed_gate
from apw.logger import logger
from apw.naming import (factor_names, group_positions, iter_factor_names,
                        occurrence_gaps)


class Counterexample:
    """
    A factor occurring at two positions that are not congruent
    """
    def __init__(self, factor: numpy.ndarray, first: int, second: int):
        self.factor = factor
        self.first = first
        self.second = second

    def __repr__(self):
        return (
            f"<Counterexample length={self.factor.size} "
            f"positions=({self.first}, {self.second})>"
        )


class RecognizabilityConstant:
    """
    Estimated recognizability constant N. `counterexample` shows a factor
    of length N - 1 occurring both at an aligned and a non-aligned
    position (None when N = 1).
    """
    def __init__(self, value: int, window: int,
                 counterexample: Counterexample = None):
        self.value = value
        self.window = window
        self.counterexample = counterexample

    def __repr__(self):
        return (
            f"<RecognizabilityConstant N={self.value} window={self.window}>"
        )


class RecognizabilityReport:
    """
    Constants used to bound the recognizability constant of every power
    of σ: N, N1, the exponent r with m^(N1+r) >= N + m, the prefix
    p = σ^(N1+r)(a), the recurrence bound M of p and N' = 2M
    """
    def __init__(self, N: int, N1: int, r: int, p: numpy.ndarray, M: int,
                 window: int, counterexample: Counterexample = None,
                 p_occurrences: int = 0, p_desubstitutes: bool = None):
        self.N = N
        self.N1 = N1
        self.r = r
        self.p = p
        self.M = M
        self.window = window
        self.counterexample = counterexample
        self.p_occurrences = p_occurrences
        self.p_desubstitutes = p_desubstitutes

    @property
    def N_prime(self) -> int:
        return 2 * self.M

    @property
    def p_len(self) -> int:
        return int(self.p.size)

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "N1": self.N1,
            "r": self.r,
            "p_len": self.p_len,
            "M": self.M,
            "N_prime": self.N_prime,
            "window": self.window,
        }

    def to_text(self) -> str:
        """
        Serialize the report as a flat block of 'key = value' lines
        """
        return toml.dumps(self.as_dict())

    def __repr__(self):
        fields = " ".join(
            f"{key}={value}" for key, value in self.as_dict().items()
        )
        return f"<RecognizabilityReport {fields}>"


class PowerRecognizabilityVerdict:
    """
    Whether every factor of length >= bound has all of its occurrences in
    the window congruent modulo m^i
    """
    def __init__(self, i: int, bound: int, window: int,
                 counterexample: Counterexample = None):
        self.i = i
        self.bound = bound
        self.window = window
        self.counterexample = counterexample

    @property
    def holds(self) -> bool:
        return self.counterexample is None

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return (
            f"<PowerRecognizabilityVerdict i={self.i} bound={self.bound} "
            f"holds={self.holds}>"
        )


def require_complete_census(stream: FixedPointStream, length: int,
                            extra: int, window: int):
    """
    Ensure the window contains every factor of the given length, i.e.
    R(length) + extra <= window with a recurrence bound that has stopped
    growing.

    :raises CensusIncomplete: If the window is too short
    """
    if length > window:
        raise CensusIncomplete(
            f"Window {window} is shorter than the factor length {length}"
        )

    try:
        bound = recurrence_bound(stream, length, window)
    except NotRecurrentInWindow as exc:
        raise CensusIncomplete(exc.detail) from exc

    if bound.growing:
        raise CensusIncomplete(
            f"Recurrence bound for length {length} is still growing at "
            f"window {window}"
        )
    if bound.bound + extra > window:
        raise CensusIncomplete(
            f"Window {window} is shorter than R({length}) + {extra} = "
            f"{bound.bound + extra}"
        )

    return bound


def estimate_recognizability_constant(
        stream: FixedPointStream, L_max: int = None,
        window: int = None) -> RecognizabilityConstant:
    """
    Find the least length L <= L_max such that no length-L factor occurring
    at a position divisible by m also occurs at a position that isn't.

    If a factor has both kinds of occurrences so does each of its prefixes,
    so every length above the returned one passes as well.
    """
    if L_max is None:
        L_max = int(CONFIG["recognizability"]["max_length"])
    if window is None:
        window = int(CONFIG["recognizability"]["window"])

    raise_for_failed_gate(stream, window)
    require_complete_census(stream, L_max + stream.m, L_max, window)

    word = stream.prefix(window)
    counterexample = None

    for length, names in iter_factor_names(word, L_max):
        aligned = numpy.arange(names.size) % stream.m == 0
        shared = numpy.intersect1d(names[aligned], names[~aligned])

        if not shared.size:
            logger.info(
                "Recognizability constant N=%d found within window %d",
                length, window
            )
            return RecognizabilityConstant(length, window, counterexample)

        first = int(numpy.flatnonzero(
            aligned & numpy.isin(names, shared)
        )[0])
        second = int(numpy.flatnonzero(
            ~aligned & (names == names[first])
        )[0])
        counterexample = Counterexample(
            word[first:first + length].copy(), first, second
        )

    raise NoConstantFound(
        f"Factors of every length up to {L_max} occur at both aligned and "
        f"non-aligned positions within window {window}"
    )


def _desubstitutes(stream: FixedPointStream, level: int, depth: int,
                   window: int) -> bool:
    """
    Check that every occurrence q of σ^level(a) in the window is divisible
    by m^depth and that σ^(level-depth)(a) occurs at q / m^depth
    """
    step = stream.m ** depth
    positions = occurrences(
        stream, stream.prefix(stream.m ** level), window
    ).positions

    if (positions % step).any():
        return False

    # names[0] is the name of the prefix σ^(level-depth)(a) at position 0
    names = factor_names(stream.prefix(window), stream.m ** (level - depth))
    return bool((names[positions // step] == names[0]).all())


def estimate_N1(stream: FixedPointStream, l_max: int = None,
                window: int = None) -> int:
    """
    Find the least l <= l_max such that every occurrence of σ^l(a) in the
    window is the image under σ of an occurrence of σ^(l-1)(a), checking
    the same property at l + 1 as well
    """
    if l_max is None:
        l_max = int(CONFIG["recognizability"]["max_power"])
    if window is None:
        window = int(CONFIG["recognizability"]["window"])

    raise_for_failed_gate(stream, window)

    for level in range(1, l_max + 1):
        if stream.m ** (level + 1) > window:
            raise NoConstantFound(
                f"Window {window} is too short to check σ^{level + 1}"
            )

        if _desubstitutes(stream, level, 1, window) \
                and _desubstitutes(stream, level + 1, 1, window):
            logger.info("Constant N1=%d found within window %d", level, window)
            return level

    raise NoConstantFound(
        f"No power up to {l_max} desubstitutes within window {window}"
    )


def derive_N_prime(
        stream: FixedPointStream, window: int = None, L_max: int = None,
        l_max: int = None) -> RecognizabilityReport:
    """
    Derive N' = 2M, where M is the smallest length such that every factor
    of length M in the window contains p = σ^(N1+r)(a)

    :raises ConstantTooLarge: If p or M exceeds the configured resource cap
    """
    if window is None:
        window = int(CONFIG["recognizability"]["window"])

    recognizability = estimate_recognizability_constant(
        stream, L_max=L_max, window=window
    )
    N = recognizability.value
    N1 = estimate_N1(stream, l_max=l_max, window=window)

    r = 0
    while stream.m ** (N1 + r) < N + stream.m:
        r += 1

    p_length = stream.m ** (N1 + r)
    if p_length > stream.length_cap:
        raise ConstantTooLarge(
            f"Prefix p of length {p_length} exceeds the cap of "
            f"{stream.length_cap} letters"
        )
    if p_length > window:
        raise CensusIncomplete(
            f"Window {window} is shorter than p ({p_length} letters)"
        )

    p = stream.prefix(p_length).copy()
    positions = occurrences(stream, p, window).positions
    if positions.size < 2:
        raise NotRecurrentInWindow(
            f"Prefix p of length {p_length} occurs only once in the first "
            f"{window} letters"
        )

    gaps = occurrence_gaps(positions, window - p_length + 1)
    M = p_length - 1 + int(gaps.max())
    if M > stream.length_cap:
        raise ConstantTooLarge(
            f"Recurrence bound M={M} exceeds the cap of "
            f"{stream.length_cap} letters"
        )

    report = RecognizabilityReport(
        N=N, N1=N1, r=r, p=p, M=M, window=window,
        counterexample=recognizability.counterexample,
        p_occurrences=int(positions.size),
        p_desubstitutes=_desubstitutes(stream, N1 + r, r, window)
    )
    logger.info("Derived %r", report)

    return report


def check_power_recognizability(stream: FixedPointStream, i: int,
                                bound: int,
                                window: int) -> PowerRecognizabilityVerdict:
    """
    Check that any two occurrences of a factor of length >= bound in the
    window are congruent modulo m^i.

    It's enough to look at factors of length exactly `bound`, since a longer
    counterexample would make its prefix one too.
    """
    if i < 0:
        raise ValueError(f"{i} is not a valid exponent")
    if bound < 1:
        raise ValueError(f"{bound} is not a valid factor length")

    modulus = stream.m ** i
    if modulus == 1:
        return PowerRecognizabilityVerdict(i, bound, window)

    raise_for_failed_gate(stream, window)
    require_complete_census(stream, bound + modulus, bound, window)

    word = stream.prefix(window)
    positions, starts = group_positions(factor_names(word, bound))
    residues = positions % modulus

    low = numpy.minimum.reduceat(residues, starts)
    high = numpy.maximum.reduceat(residues, starts)
    failing = numpy.flatnonzero(low != high)

    if not failing.size:
        return PowerRecognizabilityVerdict(i, bound, window)

    # Report the failing factor that occurs earliest
    group = failing[numpy.argmin(positions[starts[failing]])]
    end = starts[group + 1] if group + 1 < starts.size else positions.size
    members = positions[starts[group]:end]
    first = int(members[0])
    second = int(members[members % modulus != first % modulus][0])

    return PowerRecognizabilityVerdict(
        i, bound, window,
        Counterexample(word[first:first + bound].copy(), first, second)
    )


def check_aligned_congruence(stream: FixedPointStream, N: int,
                            window: int) -> PowerRecognizabilityVerdict:
    """
    Check that factors of length >= N + m have all of their occurrences
    congruent modulo m
    """
    return check_power_recognizability(stream, 1, N + stream.m, window)
