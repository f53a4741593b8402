class AnalysisError(Exception):
    """
    Domain error that prevents an analysis step from producing a result.

    The command-line tools catch this error and print a one-line diagnostic
    naming the failed gate.
    """
    error = "analysis failed"

    def __init__(self, detail: str, error: str = None):
        """
        :param detail: Descriptive error message
        :param error: Short error message that should be identical between
                      multiple occurrences. Defaults to the gate name of
                      the exception class.
        """
        super().__init__(detail)
        self.detail = detail
        if error is not None:
            self.error = error

    def __str__(self):
        return f"{self.error}: {self.detail}"


class SubstitutionError(AnalysisError):
    """
    Substitution specification is invalid
    """
    error = "invalid substitution"


class NonUniform(SubstitutionError):
    error = "non-uniform"


class UnknownLetter(SubstitutionError):
    error = "unknown letter"


class DuplicateRule(SubstitutionError):
    error = "duplicate rule"


class EmptyImage(SubstitutionError):
    error = "empty image"


class MalformedRule(SubstitutionError):
    error = "malformed rule"


class NotASeed(SubstitutionError):
    """
    The letter's image does not begin with the letter itself, so iterating
    the substitution from it does not converge to a fixed point
    """
    error = "not a fixed point seed"


class NotGrowing(SubstitutionError):
    """
    The substitution has image length 1 and does not generate an infinite
    fixed point
    """
    error = "fixed point does not grow"


class NotPrimitive(AnalysisError):
    error = "not primitive"


class PeriodicInput(AnalysisError):
    error = "periodic input"


class NoConstantFound(AnalysisError):
    error = "no constant found"


class ConstantTooLarge(AnalysisError):
    """
    A derived constant or a requested prefix exceeds the configured
    resource cap
    """
    error = "constant too large"


class NotRecurrentInWindow(AnalysisError):
    """
    A factor occurs only once in the scanned window, so no return time
    can be measured for it
    """
    error = "not recurrent in window"


class CensusIncomplete(AnalysisError):
    """
    The scanned window is too short for the factor census to contain every
    factor of the requested length
    """
    error = "census incomplete"


class InsufficientLength(AnalysisError):
    error = "insufficient length"


class SearchExhausted(AnalysisError):
    error = "search exhausted"
