"""Binary words as plain strings over the alphabet {0, 1}.

Words are immutable values; every operation returns a new string.  The
external format is one ASCII character per letter, no separators.  A
five-letter alphabet {0,...,4} appears as an intermediate coding alphabet
for some morphisms; the same helpers accept it via the ``alphabet``
argument.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator

BINARY_ALPHABET = "01"
CODING_ALPHABET = "01234"

#: Default hard ceiling for generated word lengths, in letters.
DEFAULT_CAP = 1 << 20


class WordFormatError(ValueError):
    """A word contained a character outside its alphabet."""

    def __init__(self, text: str, position: int, alphabet: str = BINARY_ALPHABET):
        self.position = position
        self.character = text[position]
        super().__init__(
            f"invalid character {self.character!r} at index {position}; "
            f"expected one of {alphabet!r}"
        )


class CapExceeded(RuntimeError):
    """A requested or generated word would exceed the configured length cap."""


def check_cap(length: int, cap: int) -> None:
    """Raise :class:`CapExceeded` when ``length`` letters exceed ``cap``."""
    if length > cap:
        raise CapExceeded(f"requested {length} letters, cap is {cap}")


def parse_word(text: str, alphabet: str = BINARY_ALPHABET) -> str:
    """Validate ``text`` as a word over ``alphabet`` and return it."""
    for i, ch in enumerate(text):
        if ch not in alphabet:
            raise WordFormatError(text, i, alphabet)
    return text


def format_word(word: str) -> str:
    """Serialize a word to its ASCII text form."""
    return word


_COMPLEMENT = str.maketrans("01", "10")


def complement(word: str) -> str:
    """Flip every 0 to 1 and every 1 to 0."""
    return word.translate(_COMPLEMENT)


def conjugates(word: str) -> set[str]:
    """All distinct rotations of ``word``; always contains ``word`` itself."""
    if not word:
        return {""}
    return {word[i:] + word[:i] for i in range(len(word))}


def enumerate_words(
    length: int,
    predicate: Callable[[str], bool] | None = None,
    alphabet: str = BINARY_ALPHABET,
) -> Iterator[str]:
    """Yield every word of ``length`` over ``alphabet`` that satisfies
    ``predicate`` (all words when it is None), in lexicographic order."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    for letters in product(alphabet, repeat=length):
        word = "".join(letters)
        if predicate is None or predicate(word):
            yield word
