"""Fractional-power repetition analysis with exact rational exponents.

A factor of a word has period ``p`` when each of its letters equals the
letter ``p`` positions later inside the factor; its exponent is
``length / p``.  A square is a factor of exponent 2, an overlap anything
strictly above 2 (such as 01010).  Thresholds come in two flavours:

* ``find_power(w, a, strict=False)`` looks for exponent >= a, and a word
  is *a-power-free* when no such factor exists;
* ``strict=True`` looks for exponent > a, and a word is *a+-power-free*
  ("a-plus", e.g. overlap-free = 2+) when no such factor exists.

All comparisons are exact: thresholds are ``fractions.Fraction`` values
and the kernel compares cross-multiplied integers, never floats.  The
scan is quadratic in the word length, vectorized per period with numpy;
desk-scale inputs (up to a few times 2^14 letters) finish in well under a
second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True, order=True)
class PowerOccurrence:
    """A repetition witness: the factor ``word[start : start+length]``
    repeats with the given period."""

    start: int
    period: int
    length: int

    @property
    def end(self) -> int:
        return self.start + self.length

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def factor(self, word: str) -> str:
        return word[self.start : self.end]

    def is_valid_in(self, word: str) -> bool:
        """Check bounds and the letter[i] == letter[i+period] condition."""
        if self.start < 0 or self.period < 1 or self.length < self.period:
            return False
        if self.end > len(word):
            return False
        return all(
            word[i] == word[i + self.period]
            for i in range(self.start, self.end - self.period)
        )


def _letters(word: str) -> np.ndarray:
    return np.frombuffer(word.encode("ascii"), dtype=np.uint8)


def _as_threshold(value: Fraction | int) -> Fraction:
    threshold = Fraction(value)
    if threshold < 1:
        raise ValueError(f"threshold must be at least 1, got {threshold}")
    return threshold


def _min_extension(num: int, den: int, period: int, strict: bool) -> int:
    # Least m such that (period + m) / period exceeds (or reaches) num/den.
    if strict:
        return (num - den) * period // den + 1
    q, r = divmod((num - den) * period, den)
    return q + (1 if r else 0)


def _true_runs(eq: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Starts and lengths of the maximal runs of True in a boolean array."""
    padded = np.zeros(len(eq) + 2, dtype=np.int8)
    padded[1:-1] = eq
    delta = np.diff(padded)
    starts = np.flatnonzero(delta == 1)
    ends = np.flatnonzero(delta == -1)
    return starts, ends - starts


def _window_hit(eq: np.ndarray, width: int) -> int | None:
    """Index of the first all-True window of ``width``, or None.

    The first such index is always the start of a maximal run of length
    >= width (an earlier True would move the window left).
    """
    if len(eq) < width:
        return None
    sums = np.cumsum(eq, dtype=np.int64)
    windows = sums[width - 1 :].copy()
    windows[1:] -= sums[:-width]
    hits = windows == width
    if not hits.any():
        return None
    return int(np.argmax(hits))


def smallest_period(word: str) -> int:
    """The least p >= 1 with word[i] == word[i+p] for all in-range i."""
    if not word:
        raise ValueError("empty word has no period")
    arr = _letters(word)
    for p in range(1, len(word)):
        if (arr[:-p] == arr[p:]).all():
            return p
    return len(word)


def exponent_of(word: str) -> Fraction:
    """length / smallest_period, the exponent of the whole word."""
    return Fraction(len(word), smallest_period(word))


def max_exponent(word: str) -> tuple[Fraction, PowerOccurrence]:
    """The largest exponent over all factors and all their periods.

    Returns the exponent with one witnessing occurrence; ties are broken
    by smallest start, then smallest period.  Every nonempty word has
    maximum at least 1 (witnessed by a single letter).
    """
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no factors")
    best_exp = Fraction(1)
    best = (0, 1, 1)
    arr = _letters(word)
    for p in range(1, n):
        starts, lengths = _true_runs(arr[:-p] == arr[p:])
        if len(starts) == 0:
            continue
        top = int(lengths.max())
        exp = Fraction(p + top, p)
        if exp < best_exp:
            continue
        i = int(starts[int(np.argmax(lengths == top))])
        if exp > best_exp or (i, p) < (best[0], best[1]):
            best_exp, best = exp, (i, p, p + top)
    return best_exp, PowerOccurrence(*best)


def find_power(
    word: str, threshold: Fraction | int, strict: bool = False
) -> PowerOccurrence | None:
    """Leftmost repetition meeting the threshold, or None.

    With ``strict=False`` the witness has exponent >= threshold, with
    ``strict=True`` strictly above it.  Among qualifying occurrences the
    one with the smallest start wins, then the smallest period; its
    length is maximal for that (start, period) pair.
    """
    thr = _as_threshold(threshold)
    n = len(word)
    if n == 0:
        return None
    num, den = thr.numerator, thr.denominator
    if num == den and not strict:
        # Exponent 1 is reached by any single letter; extend at period 1.
        m = 0
        while 1 + m < n and word[m] == word[m + 1]:
            m += 1
        return PowerOccurrence(0, 1, 1 + m)
    arr = _letters(word)
    best: tuple[int, int, int] | None = None
    for p in range(1, n):
        need = _min_extension(num, den, p, strict)
        if p + need > n:
            break
        eq = arr[:-p] == arr[p:]
        i = _window_hit(eq, need)
        if i is None:
            continue
        tail = eq[i:]
        gaps = np.flatnonzero(~tail)
        run = int(gaps[0]) if gaps.size else len(tail)
        if best is None or (i, p) < (best[0], best[1]):
            best = (i, p, p + run)
    return PowerOccurrence(*best) if best is not None else None


def _has_power(word: str, threshold: Fraction, strict: bool) -> bool:
    # Same scan as find_power without the leftmost-witness bookkeeping.
    n = len(word)
    if n == 0:
        return False
    num, den = threshold.numerator, threshold.denominator
    if num == den and not strict:
        return True
    arr = _letters(word)
    for p in range(1, n):
        need = _min_extension(num, den, p, strict)
        if p + need > n:
            break
        if _window_hit(arr[:-p] == arr[p:], need) is not None:
            return True
    return False


def is_power_free(word: str, threshold: Fraction | int, plus: bool = False) -> bool:
    """Whether no factor reaches the threshold.

    ``plus=False``: no factor of exponent >= threshold (threshold-power-
    free).  ``plus=True``: no factor of exponent > threshold (the "plus"
    form; overlap-free is ``is_power_free(w, 2, plus=True)``).
    """
    return not _has_power(word, _as_threshold(threshold), strict=plus)


def list_repetitions(
    word: str, min_exponent: Fraction | int, strict: bool = False
) -> list[PowerOccurrence]:
    """All maximal repetitions meeting the threshold, sorted by
    (start, period).

    An occurrence is maximal when it cannot be extended left or right at
    the same period; there is at most one per (start, period) pair.  Only
    factors longer than their period are reported.
    """
    thr = _as_threshold(min_exponent)
    num, den = thr.numerator, thr.denominator
    n = len(word)
    out: list[PowerOccurrence] = []
    if n < 2:
        return out
    arr = _letters(word)
    for p in range(1, n):
        starts, lengths = _true_runs(arr[:-p] == arr[p:])
        if len(starts) == 0:
            continue
        totals = lengths + p
        if strict:
            keep = den * totals > num * p
        else:
            keep = den * totals >= num * p
        for j in np.flatnonzero(keep):
            out.append(PowerOccurrence(int(starts[j]), p, int(totals[j])))
    out.sort(key=lambda occ: (occ.start, occ.period))
    return out
