"""Morphisms on words: substitution tables, iteration, fixed-point
prefixes, and the two-block code of the Thue-Morse morphism.

The Thue-Morse morphism ``mu`` (0 -> 01, 1 -> 10) is the workhorse: it
is injective, its images decode greedily in 2-blocks, and it transports
repetitions both ways (doubling them forward, halving them backward).
The module also carries the 5-letter tables ``h``, ``g`` and ``f`` used
by the 4-automatic presentation in :mod:`wordpower.constructions`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .repetition import PowerOccurrence, is_power_free
from .words import DEFAULT_CAP, CapExceeded


class Morphism:
    """A letter-to-word substitution over a small alphabet."""

    def __init__(self, images: Mapping[str, str]):
        for letter in images:
            if len(letter) != 1:
                raise ValueError(f"domain entries must be single letters, got {letter!r}")
        self._images = dict(images)
        self._table = {ord(letter): image for letter, image in self._images.items()}

    @property
    def images(self) -> dict[str, str]:
        return dict(self._images)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Morphism) and self._images == other._images

    def __hash__(self) -> int:
        return hash(frozenset(self._images.items()))

    def __repr__(self) -> str:
        rules = ", ".join(f"{a}:{w}" for a, w in sorted(self._images.items()))
        return f"Morphism({rules})"

    def _check_domain(self, word: str) -> None:
        foreign = set(word) - self._images.keys()
        if foreign:
            raise ValueError(f"letter {min(foreign)!r} outside morphism domain")

    def apply(self, word: str) -> str:
        """Concatenate the images of the letters of ``word`` in order."""
        self._check_domain(word)
        return word.translate(self._table)

    __call__ = apply

    def image_length(self, word: str) -> int:
        """Length of ``apply(word)`` without materializing it."""
        self._check_domain(word)
        counts = Counter(word)
        return sum(n * len(self._images[letter]) for letter, n in counts.items())

    def iterate(self, seed: str, n: int, cap: int = DEFAULT_CAP) -> str:
        """Apply the morphism ``n`` times to ``seed`` (n=0 returns the seed)."""
        if n < 0:
            raise ValueError("iteration count must be nonnegative")
        word = seed
        for _ in range(n):
            if self.image_length(word) > cap:
                raise CapExceeded(
                    f"iterate would produce {self.image_length(word)} letters, cap is {cap}"
                )
            word = self.apply(word)
        return word

    def is_prolongable(self, letter: str) -> bool:
        """True when image(letter) starts with the letter and has length >= 2,
        so the iteration converges to a unique infinite fixed point."""
        image = self._images.get(letter)
        return image is not None and len(image) >= 2 and image[0] == letter

    def fixed_point_prefix(self, letter: str, n: int, cap: int = DEFAULT_CAP) -> str:
        """First ``n`` letters of the fixed point starting with ``letter``.

        Prefix-consistent: the result for n is a prefix of the result for
        any m >= n.
        """
        if n < 0:
            raise ValueError("prefix length must be nonnegative")
        if n > cap:
            raise CapExceeded(f"requested {n} letters, cap is {cap}")
        if not self.is_prolongable(letter):
            raise ValueError(f"morphism is not prolongable on {letter!r}")
        word = letter
        while len(word) < n:
            grown = self.apply(word)
            if len(grown) <= len(word):
                raise ValueError("fixed point is finite; some image erases")
            word = grown
        return word[:n]

    def compose(self, inner: "Morphism") -> "Morphism":
        """Table of self-after-inner: apply ``inner`` first, then self."""
        return Morphism({a: self.apply(image) for a, image in inner._images.items()})


#: Thue-Morse morphism.
MU = Morphism({"0": "01", "1": "10"})

#: 4-uniform morphism on {0..4} whose fixed point codes the word `a`.
H = Morphism({"0": "0134", "1": "2134", "2": "3234", "3": "2321", "4": "3421"})

#: Coding {0,1,2} -> 0, {3,4} -> 1.
G = Morphism({"0": "0", "1": "0", "2": "0", "3": "1", "4": "1"})

#: Reparsing table satisfying g(f(a)) = mu^2(g(a)) on every letter.
F = Morphism({"0": "1342", "1": "1342", "2": "2342", "3": "3213", "4": "4213"})

NAMED_MORPHISMS: dict[str, Morphism] = {"mu": MU, "h": H, "g": G, "f": F}


def named_morphism(name: str) -> Morphism:
    try:
        return NAMED_MORPHISMS[name]
    except KeyError:
        known = ", ".join(sorted(NAMED_MORPHISMS))
        raise ValueError(f"unknown morphism {name!r}; known: {known}") from None


def parse_morphism(text: str) -> Morphism:
    """Parse a table from "letter:image" lines (blank lines ignored)."""
    images: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        letter, sep, image = line.partition(":")
        if not sep or len(letter) != 1:
            raise ValueError(f"line {lineno}: expected 'letter:image', got {raw!r}")
        if letter in images:
            raise ValueError(f"line {lineno}: duplicate rule for {letter!r}")
        images[letter] = image
    if not images:
        raise ValueError("empty morphism table")
    return Morphism(images)


_MU_BLOCKS = {"01": "0", "10": "1"}


def mu_decode(word: str) -> str | None:
    """Invert the Thue-Morse morphism, or None when ``word`` is not an image.

    Succeeds exactly when the length is even and every 2-block is 01 or 10.
    """
    if len(word) % 2:
        return None
    letters = []
    for i in range(0, len(word), 2):
        letter = _MU_BLOCKS.get(word[i : i + 2])
        if letter is None:
            return None
        letters.append(letter)
    return "".join(letters)


def descend_power(word: str, occurrence: PowerOccurrence) -> PowerOccurrence:
    """Pull a repetition in ``MU.apply(word)`` back into ``word``.

    Given an occurrence of even period p and exponent above 2 in the
    image, returns an occurrence in ``word`` of period p/2 and length at
    least ceil(occurrence.length / 2), found by search (leftmost maximal
    run of the half period that is long enough).
    """
    if occurrence.period % 2:
        raise ValueError("occurrence period must be even")
    if occurrence.exponent <= 2:
        raise ValueError("occurrence exponent must exceed 2")
    image = MU.apply(word)
    if not occurrence.is_valid_in(image):
        raise ValueError("occurrence is not a valid repetition in the image word")
    period = occurrence.period // 2
    need = -(-occurrence.length // 2)
    n = len(word)
    for i in range(n - period):
        if word[i] != word[i + period]:
            continue
        if i and word[i - 1] == word[i - 1 + period]:
            continue  # inside a run; its start was already tried
        m = 1
        while i + period + m < n and word[i + m] == word[i + period + m]:
            m += 1
        if period + m >= need:
            return PowerOccurrence(i, period, period + m)
    raise RuntimeError("descent target not found; this is a bug")


#: Allowed edge words of a factorization around the Thue-Morse morphism.
EDGE_WORDS = ("", "0", "1", "00", "11")


@dataclass(frozen=True)
class Factorization:
    """A decomposition word = head + MU.apply(core) + tail with head and
    tail drawn from :data:`EDGE_WORDS`."""

    head: str
    core: str
    tail: str

    def reconstruct(self) -> str:
        return self.head + MU.apply(self.core) + self.tail


def factorize(
    word: str, threshold: Fraction | int = Fraction(7, 3)
) -> list[Factorization]:
    """All short-edge factorizations of a power-free word.

    Every word that is threshold-power-free for a threshold in (2, 7/3]
    splits as head + mu(core) + tail with short edges and a power-free
    core; this returns every such split, sorted by (len(head), len(tail)).
    The first element is the canonical one.
    """
    thr = Fraction(threshold)
    if not 2 < thr <= Fraction(7, 3):
        raise ValueError(f"threshold must lie in (2, 7/3], got {thr}")
    if not is_power_free(word, thr, plus=False):
        raise ValueError("word is not power-free at the given threshold")
    found = []
    for head in EDGE_WORDS:
        if not word.startswith(head):
            continue
        for tail in EDGE_WORDS:
            if len(word) - len(head) - len(tail) < 0 or not word.endswith(tail):
                continue
            core = mu_decode(word[len(head) : len(word) - len(tail)])
            if core is None or not is_power_free(core, thr, plus=False):
                continue
            found.append(Factorization(head, core, tail))
    found.sort(key=lambda f: (len(f.head), len(f.tail)))
    return found
