"""The square atlas: classifying the squares that can live inside an
infinite overlap-free binary word.

Two finite base sets generate everything under the Thue-Morse morphism:

* family "A" (bases 00, 11, 010010, 101101): the squares occurring in
  the Thue-Morse word itself, anywhere;
* family "B" (bases 001001, 110110): the extra squares that occur in
  some infinite overlap-free word, but only as its prefix.

Membership is decided by repeated 2-block decoding; a word belongs to
the atlas exactly when decoding bottoms out in a base word.  Squares
outside both families (for example 00110011) are overlap-free but kill
every sufficiently long extension, which the bounded depth-first search
:func:`max_overlap_free_extension` makes observable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .morphism import MU, mu_decode
from .repetition import _letters, is_power_free
from .words import DEFAULT_CAP

FAMILY_A_BASES = ("00", "11", "010010", "101101")
FAMILY_B_BASES = ("001001", "110110")

_A_SET = frozenset(FAMILY_A_BASES)
_B_SET = frozenset(FAMILY_B_BASES)


@dataclass(frozen=True)
class AtlasMembership:
    """Result of an atlas lookup.

    ``family`` is "A", "B" or None; when a family is present,
    ``MU.iterate(base, level)`` reconstructs the queried word.
    """

    family: str | None
    level: int | None
    base: str | None

    @property
    def in_atlas(self) -> bool:
        return self.family is not None


NOT_IN_ATLAS = AtlasMembership(None, None, None)


def atlas_membership(word: str) -> AtlasMembership:
    """Decode down to a base word, or report non-membership.

    The (family, level, base) triple is unique when it exists, because
    the Thue-Morse morphism is injective and no base word is itself
    decodable.
    """
    level = 0
    current = word
    while current:
        if current in _A_SET:
            return AtlasMembership("A", level, current)
        if current in _B_SET:
            return AtlasMembership("B", level, current)
        decoded = mu_decode(current)
        if decoded is None:
            return NOT_IN_ATLAS
        current = decoded
        level += 1
    return NOT_IN_ATLAS


def atlas_members(max_length: int, families: str = "AB") -> list[str]:
    """Every atlas square of length <= max_length, by forward iteration
    of the base sets.  Must agree with :func:`atlas_membership`."""
    bases: list[str] = []
    if "A" in families:
        bases.extend(FAMILY_A_BASES)
    if "B" in families:
        bases.extend(FAMILY_B_BASES)
    out = []
    for base in bases:
        word = base
        while len(word) <= max_length:
            out.append(word)
            word = MU.apply(word)
    return sorted(out, key=lambda w: (len(w), w))


def squares_in(word: str) -> list[tuple[int, str]]:
    """Every square occurrence (position, xx) in ``word``, sorted by
    (position, length).

    A square here is any factor of the form xx, reported at period |x|
    even when the factor happens to have a smaller period.
    """
    n = len(word)
    out: list[tuple[int, str]] = []
    if n < 2:
        return out
    arr = _letters(word)
    for half in range(1, n // 2 + 1):
        eq = arr[:-half] == arr[half:]
        if len(eq) < half:
            break
        sums = np.cumsum(eq, dtype=np.int64)
        windows = sums[half - 1 :].copy()
        windows[1:] -= sums[:-half]
        for i in np.flatnonzero(windows == half):
            out.append((int(i), word[i : i + 2 * half]))
    out.sort(key=lambda item: (item[0], len(item[1])))
    return out


def is_extendable_square(word: str) -> bool:
    """Whether an overlap-free square can occur in an infinite
    overlap-free word (equivalently: whether it is in the atlas).

    Rejects inputs that are not squares or not overlap-free.
    """
    n = len(word)
    if n == 0 or n % 2 or word[: n // 2] != word[n // 2 :]:
        raise ValueError("input is not a square")
    if not is_power_free(word, 2, plus=True):
        raise ValueError("square is not overlap-free")
    return atlas_membership(word).in_atlas


def _appending_creates_overlap(word: str) -> bool:
    # Any new overlap in (old word + letter) must end at the last letter;
    # walk each period backwards, at most period+1 steps.
    n = len(word)
    for p in range(1, n // 2 + 1):
        m = 0
        while m <= p and n - 1 - p - m >= 0 and word[n - 1 - m] == word[n - 1 - p - m]:
            m += 1
        if m > p:
            return True
    return False


def max_overlap_free_extension(word: str, cap: int) -> int:
    """Largest L <= cap such that some overlap-free word of length L has
    ``word`` as a prefix (depth-first search; returns cap when reached).

    The search tree of overlap-free words grows polynomially, so the
    exhaustion below cap is cheap at desk scale.
    """
    if cap < len(word):
        raise ValueError("cap must be at least the word length")
    if not is_power_free(word, 2, plus=True):
        raise ValueError("word must be overlap-free")
    best = len(word)
    stack = [word]
    while stack:
        current = stack.pop()
        if len(current) > best:
            best = len(current)
        if best >= cap:
            return cap
        for letter in "01":
            candidate = current + letter
            if len(candidate) <= cap and not _appending_creates_overlap(candidate):
                stack.append(candidate)
    return best


def check_extension_lemma(k: int, cap: int = DEFAULT_CAP) -> bool:
    """Whether both one-letter extensions of the k-th Thue-Morse images
    of 011011 and 100100 contain an overlap (all four must)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    for seed in ("011011", "100100"):
        image = MU.iterate(seed, k, cap=cap)
        for letter in "01":
            if is_power_free(image + letter, 2, plus=True):
                return False
    return True
