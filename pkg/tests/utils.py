"""
Brute-force oracles working directly on strings and sets
"""


def as_text(word) -> str:
    """
    Convert a word over letters 0-9 into a string
    """
    return "".join(str(int(letter)) for letter in word)


def naive_fixed_point(rules: dict, seed: str, length: int) -> str:
    """
    Iterate a substitution given as {symbol: image} on strings
    """
    word = seed
    while len(word) < length:
        word = "".join(rules[letter] for letter in word)

    return word[:length]


def naive_is_anti_power(word, k: int, ell: int) -> bool:
    blocks = [tuple(word[s * ell:(s + 1) * ell]) for s in range(k)]
    return all(
        blocks[a] != blocks[b]
        for a in range(k) for b in range(a + 1, k)
    )


def naive_min_ell(text: str, n: int, k: int, ell_max: int):
    for ell in range(1, ell_max + 1):
        if naive_is_anti_power(text[n:n + k * ell], k, ell):
            return ell

    return None


def naive_occurrences(text: str, factor: str) -> list:
    return [
        position for position in range(len(text) - len(factor) + 1)
        if text.startswith(factor, position)
    ]


def naive_factors(text: str, length: int) -> set:
    return {
        text[position:position + length]
        for position in range(len(text) - length + 1)
    }


def naive_primitivity_exponent(images: list, bound: int):
    """
    Find the least n <= bound such that σ^n(a) contains every letter for
    every letter a, by tracking the set of letters in each σ^n(a)
    """
    alphabet = set(range(len(images)))
    letters = [set(image) for image in images]

    for exponent in range(1, bound + 1):
        if all(letter_set == alphabet for letter_set in letters):
            return exponent

        letters = [
            set().union(*(set(images[b]) for b in letter_set))
            for letter_set in letters
        ]

    return None


def naive_aligned_split_length(text: str, m: int, max_length: int):
    """
    Least length L such that no length-L factor occurs both at a position
    divisible by m and at one that isn't
    """
    for length in range(1, max_length + 1):
        aligned = set()
        unaligned = set()
        for position in range(len(text) - length + 1):
            factor = text[position:position + length]
            (aligned if position % m == 0 else unaligned).add(factor)

        if not aligned & unaligned:
            return length

    return None
