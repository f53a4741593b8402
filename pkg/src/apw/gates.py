"""
Preconditions shared by the recognizability and theorem computations.

Each gate checks one hypothesis and raises the matching AnalysisError if it
fails. Gates run in a fixed order and the first failure wins, so a failed
run always names exactly one gate.
"""
from apw.config import CONFIG
from apw.exceptions import NotPrimitive, PeriodicInput
from apw.fixedpoint import FixedPointStream, aperiodicity_check
from apw.substitution import is_primitive


def aperiodicity_limit(window: int) -> int:
    """
    Longest factor length checked for periodicity within a window.

    Lengths up to the configured limit are checked, but no further than a
    quarter of the window; a prefix of length n has at most n - L + 1
    factors of length L, so longer lengths would look periodic.
    """
    return max(
        1,
        min(int(CONFIG["fixedpoint"]["aperiodicity_length"]), window // 4)
    )


class Gate:
    """
    Base class for a gate that checks a fixed point and raises
    an AnalysisError if the hypothesis doesn't hold
    """
    def check(self, stream: FixedPointStream, window: int):
        raise NotImplementedError


class PrimitivityGate(Gate):
    """
    The substitution must be primitive
    """
    def check(self, stream, window):
        if not is_primitive(stream.substitution):
            raise NotPrimitive(
                f"No power of the incidence matrix of "
                f"{stream.substitution!r} is positive"
            )


class AperiodicityGate(Gate):
    """
    The fixed point must not be eventually periodic
    """
    def check(self, stream, window):
        n_max = aperiodicity_limit(window)
        verdict = aperiodicity_check(stream, n_max=n_max, window=window)

        if verdict.periodic:
            raise PeriodicInput(
                f"Fixed point from '{stream.seed_symbol}' has at most "
                f"{verdict.length} factors of length {verdict.length}"
            )


GATES = (PrimitivityGate, AperiodicityGate)


def raise_for_failed_gate(stream: FixedPointStream, window: int):
    """
    Run every gate in order and raise the first failure
    """
    for gate_cls in GATES:
        gate = gate_cls()
        gate.check(stream, window)
