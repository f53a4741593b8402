"""
Uniform substitutions, their text specifications and structural properties
"""
import re
from pathlib import Path

import numpy

from apw.exceptions import (DuplicateRule, EmptyImage, MalformedRule,
                            NonUniform, UnknownLetter)

# A rule is a single (possibly quoted) symbol, an arrow and the image
RULE_RE = re.compile(r'^\s*("[^"]*"|\S)\s*->(.*)$')
TOKEN_RE = re.compile(r'"([^"]*)"|(\S)')

# Symbols that can't be written bare in a specification
RESERVED_CHARACTERS = set('"#')


def letter_dtype(alphabet_size: int):
    """
    Return the smallest unsigned integer dtype able to hold every letter
    index of an alphabet of the given size
    """
    return numpy.min_scalar_type(max(alphabet_size - 1, 0))


def tokenize(text: str, line_number: int = None) -> list:
    """
    Split text into symbols. Each symbol is either a single non-whitespace
    character or a double-quoted string; whitespace between symbols is
    ignored.
    """
    location = f"Line {line_number}: " if line_number else ""
    tokens = []
    for match in TOKEN_RE.finditer(text):
        quoted, bare = match.groups()
        if bare == '"':
            raise MalformedRule(f"{location}unbalanced quote in '{text}'")
        if quoted is not None and not quoted:
            raise MalformedRule(f"{location}empty quoted symbol in '{text}'")

        tokens.append(quoted if quoted is not None else bare)

    return tokens


def needs_quotes(symbol: str) -> bool:
    return (
        len(symbol) != 1
        or symbol in RESERVED_CHARACTERS
        or symbol.isspace()
    )


class Substitution:
    """
    Uniform substitution over a finite alphabet.

    Letters are handled as integer indices into `symbols`; the symbol names
    are only used when reading and writing text. Instances are immutable.
    """
    def __init__(self, symbols, images):
        """
        :param symbols: Symbol names in alphabet order
        :param images: One image per letter, each a sequence of letter
                       indices. Every image must have the same length.
        """
        symbols = tuple(str(symbol) for symbol in symbols)

        if not symbols:
            raise MalformedRule("Substitution has an empty alphabet")
        if len(set(symbols)) != len(symbols):
            raise DuplicateRule(f"Symbols are not distinct: {symbols}")
        if len(images) != len(symbols):
            raise MalformedRule(
                f"Expected {len(symbols)} images, got {len(images)}"
            )

        images = tuple(
            tuple(int(letter) for letter in image) for image in images
        )

        for symbol, image in zip(symbols, images):
            if not image:
                raise EmptyImage(f"Symbol '{symbol}' has an empty image")

        lengths = sorted(set(len(image) for image in images))
        if len(lengths) > 1:
            raise NonUniform(
                f"Image lengths differ: {', '.join(str(l) for l in lengths)}"
            )

        for symbol, image in zip(symbols, images):
            for letter in image:
                if not 0 <= letter < len(symbols):
                    raise UnknownLetter(
                        f"Image of '{symbol}' uses letter index {letter} "
                        f"outside the alphabet"
                    )

        self.symbols = symbols
        self.images = images
        self.m = lengths[0]

        self.image_array = numpy.array(images, dtype=self.dtype)
        self.image_array.setflags(write=False)

    @property
    def alphabet_size(self) -> int:
        return len(self.symbols)

    @property
    def dtype(self):
        return letter_dtype(self.alphabet_size)

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented

        return self.symbols == other.symbols and self.images == other.images

    def __hash__(self):
        return hash((self.symbols, self.images))

    def __repr__(self):
        rules = ", ".join(
            f"{symbol}->{self.format_word(image)}"
            for symbol, image in zip(self.symbols, self.images)
        )
        return f"<Substitution m={self.m} {rules}>"

    def letter_index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise UnknownLetter(f"Symbol '{symbol}' is not in the alphabet")

    def parse_word(self, text: str) -> numpy.ndarray:
        """
        Parse a word written with the alphabet's symbols
        """
        return numpy.array(
            [self.letter_index(token) for token in tokenize(text)],
            dtype=self.dtype
        )

    def format_word(self, word, quoted: bool = False) -> str:
        """
        Format a word using the symbol names. Words over single-character
        alphabets are written without separators, others separated by
        spaces.

        :param quoted: Quote multi-character symbols so that the result can
                       be read back with `parse_word`
        """
        if not any(needs_quotes(symbol) for symbol in self.symbols):
            return "".join(self.symbols[letter] for letter in word)

        return " ".join(
            f'"{self.symbols[letter]}"'
            if quoted and needs_quotes(self.symbols[letter])
            else self.symbols[letter]
            for letter in word
        )

    def to_spec(self) -> str:
        """
        Serialize the substitution into the specification format accepted
        by `parse_spec`
        """
        lines = []
        for symbol, image in zip(self.symbols, self.images):
            name = f'"{symbol}"' if needs_quotes(symbol) else symbol
            lines.append(f"{name} -> {self.format_word(image, quoted=True)}")

        return "\n".join(lines) + "\n"

    def apply(self, word) -> numpy.ndarray:
        """
        Apply the substitution to a word
        """
        word = numpy.asarray(word, dtype=self.dtype)
        return self.image_array[word].reshape(-1)

    def iterate(self, letter: int, n: int) -> numpy.ndarray:
        """
        Return σ^n(letter)
        """
        word = numpy.array([letter], dtype=self.dtype)
        for _ in range(n):
            word = self.apply(word)

        return word

    def power(self, i: int) -> "Substitution":
        """
        Return σ^i as an m^i-uniform substitution over the same alphabet
        """
        if i < 0:
            raise ValueError(f"{i} is not a valid exponent")

        return Substitution(
            self.symbols,
            [self.iterate(letter, i) for letter in range(self.alphabet_size)]
        )

    def incidence_matrix(self) -> numpy.ndarray:
        """
        Return the incidence matrix; entry (i, j) is the number of
        occurrences of letter j in the image of letter i
        """
        return numpy.array([
            numpy.bincount(image, minlength=self.alphabet_size)
            for image in self.images
        ], dtype=numpy.int64)


class PrimitivityVerdict:
    """
    Result of the primitivity test. `exponent` is the least n for which
    every letter occurs in σ^n of every letter.
    """
    def __init__(self, primitive: bool, exponent: int = None):
        self.primitive = primitive
        self.exponent = exponent

    def __bool__(self):
        return self.primitive

    def __repr__(self):
        return (
            f"<PrimitivityVerdict primitive={self.primitive} "
            f"exponent={self.exponent}>"
        )


def wielandt_bound(alphabet_size: int) -> int:
    """
    Return the largest exponent a primitive r×r matrix may need before
    its power becomes positive
    """
    return alphabet_size ** 2 - 2 * alphabet_size + 2


def is_primitive(substitution: Substitution) -> PrimitivityVerdict:
    """
    Decide primitivity using boolean powers of the incidence matrix up to
    the Wielandt bound, which makes the answer exact
    """
    reachable = (substitution.incidence_matrix() > 0).astype(numpy.int64)
    power = reachable

    for exponent in range(1, wielandt_bound(substitution.alphabet_size) + 1):
        if power.all():
            return PrimitivityVerdict(True, exponent)

        power = ((power @ reachable) > 0).astype(numpy.int64)

    return PrimitivityVerdict(False)


def fixed_point_seeds(substitution: Substitution) -> list:
    """
    Return the letters whose image begins with the letter itself. For m >= 2
    each of them generates the fixed point σ^∞(a).
    """
    return [
        letter for letter, image in enumerate(substitution.images)
        if image[0] == letter
    ]


def parse_spec(text: str) -> Substitution:
    """
    Parse a substitution specification.

    Each non-empty line that doesn't start with '#' is a rule of the form
    'SYMBOL -> IMAGE'. The alphabet order is the order in which the
    left-hand sides appear.
    """
    symbols = []
    images = []

    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue

        match = RULE_RE.match(line)
        if not match:
            raise MalformedRule(
                f"Line {line_number}: expected 'SYMBOL -> IMAGE', "
                f"got '{line}'"
            )

        symbol = tokenize(match.group(1), line_number)[0]
        image = tokenize(match.group(2), line_number)

        if symbol in symbols:
            raise DuplicateRule(
                f"Line {line_number}: symbol '{symbol}' already has a rule"
            )
        if not image:
            raise EmptyImage(
                f"Line {line_number}: symbol '{symbol}' has an empty image"
            )

        symbols.append(symbol)
        images.append(image)

    if not symbols:
        raise MalformedRule("Specification contains no rules")

    index = {symbol: i for i, symbol in enumerate(symbols)}
    for symbol, image in zip(symbols, images):
        unknown = [token for token in image if token not in index]
        if unknown:
            raise UnknownLetter(
                f"Image of '{symbol}' uses undeclared symbol '{unknown[0]}'"
            )

    return Substitution(
        symbols, [[index[token] for token in image] for image in images]
    )


def load_spec(path) -> Substitution:
    """
    Read and parse a substitution specification file
    """
    return parse_spec(Path(path).read_text(encoding="utf-8"))
