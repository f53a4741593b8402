"""
Exact names for the factors of a word.

`factor_names(word, L)` assigns an integer to every start position so that
two positions get the same name exactly when the length-L factors starting
there are equal. Names are built by prefix doubling: factors of length 2s
are named by the pair of names of their two halves, and any other length by
two overlapping power-of-two names. Unlike rolling fingerprints the names
never collide, so no verification pass is needed afterwards.
"""
import numpy


def _compact(keys: numpy.ndarray) -> numpy.ndarray:
    """
    Replace keys with dense names 0..d-1 preserving equality
    """
    if keys.size == 0:
        return numpy.zeros(0, dtype=numpy.int64)

    _, inverse = numpy.unique(keys, return_inverse=True)
    return inverse.reshape(-1).astype(numpy.int64)


def _pair_names(left: numpy.ndarray, right: numpy.ndarray) -> numpy.ndarray:
    if left.size == 0:
        return numpy.zeros(0, dtype=numpy.int64)

    base = int(right.max()) + 1
    return _compact(left * base + right)


def factor_names(word, length: int) -> numpy.ndarray:
    """
    Name every factor of the given length.

    :param word: Word as a sequence of letter indices
    :param length: Factor length, at least 1
    :returns: Array of len(word) - length + 1 names (empty if the word is
              shorter than the factor length)
    """
    if length < 1:
        raise ValueError(f"{length} is not a valid factor length")

    word = numpy.asarray(word)
    if word.size < length:
        return numpy.zeros(0, dtype=numpy.int64)

    names = _compact(word.astype(numpy.int64))
    span = 1

    while span * 2 <= length:
        names = _pair_names(names[:-span], names[span:])
        span *= 2

    shift = length - span
    if shift:
        names = _pair_names(names[:-shift], names[shift:])

    return names


def group_positions(names: numpy.ndarray):
    """
    Group positions by name.

    :returns: Tuple (positions, starts) where `positions` lists the
              positions ordered by name and then ascending, and `starts`
              holds the index in `positions` where each name's group begins
    """
    positions = numpy.argsort(names, kind="stable")
    sorted_names = names[positions]

    if sorted_names.size == 0:
        return positions, numpy.zeros(0, dtype=numpy.int64)

    boundaries = numpy.flatnonzero(sorted_names[1:] != sorted_names[:-1]) + 1
    starts = numpy.concatenate(([0], boundaries)).astype(numpy.int64)

    return positions, starts


def occurrence_gaps(positions: numpy.ndarray, count: int) -> numpy.ndarray:
    """
    Return the gaps between consecutive occurrences of one factor, including
    the leading gap from a virtual occurrence at -1 and the trailing gap to
    a virtual occurrence at `count` (the number of valid start positions)
    """
    padded = numpy.concatenate(([-1], positions, [count]))
    return numpy.diff(padded)


def return_gaps(names: numpy.ndarray):
    """
    Compute the largest gap for every factor named in `names`.

    :returns: Tuple (max_gaps, counts, first_positions), indexed by group
              in name order
    """
    count = names.size
    positions, starts = group_positions(names)

    if count == 0:
        empty = numpy.zeros(0, dtype=numpy.int64)
        return empty, empty, empty

    ends = numpy.concatenate((starts[1:], [count]))
    counts = ends - starts

    # Gap preceding each occurrence; the first occurrence of a group is
    # measured from the virtual occurrence at -1
    previous = numpy.empty(count, dtype=numpy.int64)
    previous[1:] = positions[:-1]
    previous[starts] = -1
    gaps = positions - previous

    max_gaps = numpy.maximum.reduceat(gaps, starts)
    trailing = count - positions[ends - 1]

    return numpy.maximum(max_gaps, trailing), counts, positions[starts]


def iter_factor_names(word, max_length: int):
    """
    Yield (length, names) for lengths 1..max_length, extending the previous
    names by one letter at each step
    """
    word = numpy.asarray(word)
    letters = _compact(word.astype(numpy.int64))
    names = letters

    for length in range(1, max_length + 1):
        if length > 1:
            names = _pair_names(names[:-1], letters[length - 1:])
        if names.size == 0:
            return

        yield length, names
