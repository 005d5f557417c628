"""Prefix generators for the toolkit's infinite words.

Every infinite word is exposed as a prefix function of ``n`` with a hard
length cap (default 2^20); all generators are prefix-consistent, so
requesting n and then m >= n letters agrees on the first n.

* ``word_t``: the overlap-free Thue-Morse word.
* ``word_s``: 001001 followed by the complement of ``word_t``; still
  overlap-free, and the only home of the prefix-only squares.
* ``word_a``: the 7/3-power-free word with infinitely many overlaps,
  grown by the recursion A_0 = 00, A_{n+1} = 0 mu^2(A_n).
* ``word_a_automatic``: the same word as a coded fixed point (a
  4-automatic presentation); equality is a cross-check, not a definition.
* ``word_wb``: the uncountable family steered by a bit stream, where
  bit 0 applies mu^2 and bit 1 prepends an extra 0.
* ``beta_word``: for any rational alpha > 2, a nearby beta so that the
  word is beta-plus-power-free yet starts (and keeps starting, at every
  scale) with beta powers.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exponents import parse_exponent
from .morphism import G, H, MU
from .words import DEFAULT_CAP, check_cap, complement


def word_t(n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of the Thue-Morse word 0110100110010110..."""
    return MU.fixed_point_prefix("0", n, cap=cap)


def word_s(n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of 001001 followed by the complemented Thue-Morse word."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    check_cap(n, cap)
    if n <= 6:
        return "001001"[:n]
    return "001001" + complement(word_t(n - 6, cap=cap))


def word_a_finite(level: int, cap: int = DEFAULT_CAP) -> str:
    """The level-th word of the recursion A_0 = 00, A_{k+1} = 0 mu^2(A_k).

    Its length is (4^(level+1) + 3 * 4^level - 1) / 3.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    expected = (4 ** (level + 1) + 3 * 4**level - 1) // 3
    check_cap(expected, cap)
    word = "00"
    for _ in range(level):
        word = "0" + MU.apply(MU.apply(word))
    return word


def word_a(n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of the limit of the A_k recursion."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    check_cap(n, cap)
    word = "00"
    while len(word) < n:
        word = "0" + MU.apply(MU.apply(word))
    return word[:n]


def word_a_automatic(n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of the coded fixed point g(h^omega(0)).

    Independent of :func:`word_a`; the two must agree letter for letter.
    """
    return G.apply(H.fixed_point_prefix("0", n, cap=cap))


def g_b(bits: str, word: str, cap: int = DEFAULT_CAP) -> str:
    """Apply the bit-steered operator: reading ``bits`` left to right,
    the first bit acts outermost; 0 maps x to mu^2(x), 1 to 0 mu^2(x)."""
    if set(bits) - {"0", "1"}:
        raise ValueError("bits must be over 0/1")
    length = len(word)
    for bit in reversed(bits):
        length = 4 * length + (1 if bit == "1" else 0)
    check_cap(length, cap)
    out = word
    for bit in reversed(bits):
        out = MU.apply(MU.apply(out))
        if bit == "1":
            out = "0" + out
    return out


_BIT_SPEC_RE = re.compile(r"^([01]*)\(([01]+)\)$")


@dataclass(frozen=True)
class BitSpec:
    """Eventually-periodic bit stream: a finite prefix plus a repeated block."""

    prefix: str
    block: str

    def bits(self, count: int) -> str:
        if count <= len(self.prefix):
            return self.prefix[:count]
        repeats = -(-(count - len(self.prefix)) // len(self.block))
        return (self.prefix + self.block * repeats)[:count]

    def __str__(self) -> str:
        return f"{self.prefix}({self.block})"


def parse_bit_spec(text: str) -> BitSpec:
    """Parse "prefix(block)", e.g. "(0)", "1(10)", "01(1)"."""
    m = _BIT_SPEC_RE.match(text)
    if m is None:
        raise ValueError(f"malformed bit spec {text!r}; expected like '01(10)'")
    return BitSpec(m.group(1), m.group(2))


def _steered_length(bits: str, base_length: int) -> int:
    length = base_length
    for bit in reversed(bits):
        length = 4 * length + (1 if bit == "1" else 0)
    return length


def word_wb(spec: str | BitSpec, n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of the limit word steered by the bit stream.

    The words ``g_b(0)`` over growing stream prefixes form a genuine
    prefix chain (every operator output starts with 0, and both
    operators preserve prefixes), so the limit is well-defined and the
    generator is prefix-consistent.  Seeding with 00 instead would not
    chain: mu^2(00) does not start with 00.  The pointwise limit of the
    00-seeded sequence is this same word.
    """
    if isinstance(spec, str):
        spec = parse_bit_spec(spec)
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    check_cap(n, cap)
    k = 0
    while _steered_length(spec.bits(k), 1) < n:
        k += 1
    return g_b(spec.bits(k), "0", cap=4 * max(n, 1) + 1)[:n]


class BetaSearchError(ValueError):
    """No drop length satisfies both beta-power conditions."""


@dataclass(frozen=True)
class BetaParams:
    """Parameters of the beta-power construction.

    ``beta = r - t / 2**s`` sits strictly above ``alpha`` and within
    8 / 2**s of it; dropping ``t`` letters from the s-th Thue-Morse
    image of 0 leaves a word beginning 00.
    """

    alpha: Fraction
    s: int
    r: int
    t: int
    beta: Fraction


def beta_params(alpha: Fraction | int, s: int, cap: int = DEFAULT_CAP) -> BetaParams:
    """Search downward for the largest valid drop length t.

    Raises :class:`BetaSearchError` when no positive t works, which does
    happen when alpha is close to r and s is small (the earliest 00 in
    the s-th image of 0 starts at index 5).
    """
    alpha = Fraction(alpha)
    if alpha <= 2:
        raise ValueError(f"alpha must exceed 2, got {alpha}")
    if s < 3:
        raise ValueError(f"s must be at least 3, got {s}")
    block = 1 << s
    check_cap(block, cap)
    r = math.floor(alpha) + 1
    base = MU.iterate("0", s, cap=cap)
    margin = (r - alpha) * block
    highest = min((margin.numerator - 1) // margin.denominator, block - 2)
    for t in range(highest, 0, -1):
        if base.startswith("00", t):
            return BetaParams(alpha, s, r, t, r - Fraction(t, block))
    raise BetaSearchError(
        f"no valid drop length for alpha={alpha}, s={s}; try a larger s"
    )


def beta_word(params: BetaParams, n: int, cap: int = DEFAULT_CAP) -> str:
    """First n letters of the limit of the beta-power recursion.

    Each round pads with 0^(r-2), applies the Thue-Morse morphism s
    times and drops the first t letters; the result always begins with a
    beta power of period 2**s.  Intermediate words are trimmed to the
    needed prefix, which the construction's prefix-consistency allows.
    """
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    check_cap(n, cap)
    keep = max(n, 2) + params.t
    word = "00"
    while len(word) < n:
        expanded = "0" * (params.r - 2) + word
        for _ in range(params.s):
            expanded = MU.apply(expanded)[:keep]
        if not expanded.startswith("00", params.t):
            raise RuntimeError("construction invariant broken; this is a bug")
        word = expanded[params.t :]
    return word[:n]


class UnknownGeneratorError(ValueError):
    """Generator name not recognized."""


def generator(name: str, cap: int = DEFAULT_CAP) -> Callable[[int], str]:
    """Resolve a generator name to a prefix function.

    Known names: "t", "s", "a", "a-automatic", "wb:<bits spec>",
    "beta:<alpha>:<s>".
    """
    if name == "t":
        return lambda n: word_t(n, cap=cap)
    if name == "s":
        return lambda n: word_s(n, cap=cap)
    if name == "a":
        return lambda n: word_a(n, cap=cap)
    if name == "a-automatic":
        return lambda n: word_a_automatic(n, cap=cap)
    if name.startswith("wb:"):
        try:
            spec = parse_bit_spec(name[3:])
        except ValueError as exc:
            raise UnknownGeneratorError(str(exc)) from None
        return lambda n: word_wb(spec, n, cap=cap)
    if name.startswith("beta:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise UnknownGeneratorError(
                f"malformed beta generator {name!r}; expected 'beta:<alpha>:<s>'"
            )
        try:
            alpha = parse_exponent(parts[1])
            s = int(parts[2])
        except ValueError as exc:
            raise UnknownGeneratorError(str(exc)) from None
        params = beta_params(alpha, s, cap=cap)
        return lambda n: beta_word(params, n, cap=cap)
    raise UnknownGeneratorError(
        f"unknown generator {name!r}; known: t, s, a, a-automatic, wb:<bits>, beta:<alpha>:<s>"
    )
