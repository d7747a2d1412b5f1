"""Maximal subword occurrences, most frequent subwords and subword entropy.

Candidates are enumerated as run tuples that start with the first letter of
the word; a candidate is only scored if it also ends with the word's last
letter. A most frequent subword of that shape always exists, so the search
stays exact.

Scoring shares work between candidates with a common prefix. For a prefix
``u`` the scanner keeps ``D[j]``, the number of occurrences of ``u`` whose
last letter sits at position ``j``, packed into one integer with a fixed
number of bits per position. Appending a letter ``c`` is then a prefix sum
(one multiplication by ``1 + 2**B + 2**(2B) + ...``), a one-lane shift and a
mask of the positions holding ``c``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import config
from .occurrence import OccCache, binomial, occ_runs
from .words import Word, WordLike, as_text


@dataclass(frozen=True)
class MaxoccResult:
    word: Word
    maxocc: int
    witnesses: list[Word]
    entropy_bits: float
    searched_lengths: list[int] = field(repr=False)
    heuristic: bool = False

    @property
    def witness(self) -> Word:
        return self.witnesses[0]


def scan_order(n: int, center: int | None = None, max_length: int | None = None) -> list[int]:
    """Candidate lengths ``1..max_length``, starting at ``center`` and expanding outward.

    The default center is ``round(0.4 * n)``; the order only changes how fast
    a large count is found, never which lengths are covered.
    """
    top = n if max_length is None else max(1, min(max_length, n))
    if center is None:
        center = round(0.4 * n)
    center = min(max(center, 1), top)
    order = [center]
    step = 1
    while len(order) < top:
        if center + step <= top:
            order.append(center + step)
        if center - step >= 1:
            order.append(center - step)
        step += 1
    return order


class _Scanner:
    """Branch-and-bound enumeration of the subwords of one word."""

    def __init__(self, text: str):
        n = len(text)
        self.text = text
        self.n = n
        # lanes hold products of two counts below 2**n, summed over n positions
        width = 2 * n + n.bit_length() + 2
        self.width = width
        self.lane = (1 << width) - 1
        self.ones = sum(1 << (width * j) for j in range(n))
        self.all_lanes = self.ones * self.lane
        self.masks = {
            c: sum(self.lane << (width * j) for j in range(n) if text[j] == c) for c in "01"
        }
        self.top_shift = width * (n - 1)
        # lane n-1 of (D * tails[rem]) is sum_j D[j] * binom(n-1-j, rem)
        self.tails = [
            sum(binomial(n - 1 - j, rem) << (width * (n - 1 - j)) for j in range(n))
            for rem in range(n + 1)
        ]

    def count(self, packed: int) -> int:
        return ((packed * self.ones) >> self.top_shift) & self.lane

    def run(self, lengths: Iterable[int], floor: int, first_only: bool):
        """Scan candidates whose count is at least ``floor``.

        With ``first_only`` the first such candidate is returned as
        ``(count, [u])``; otherwise the floor rises to the best count seen and
        all candidates reaching it are collected.
        """
        text = self.text
        first, last = text[0], text[-1]
        ones, all_lanes, masks = self.ones, self.all_lanes, self.masks
        width, lane, top, tails = self.width, self.lane, self.top_shift, self.tails
        root = ones & masks[first]
        best = floor
        found: list[str] = []
        for length in lengths:
            stack = [(root, first, 1)]
            while stack:
                packed, u, depth = stack.pop()
                prefix_sums = packed * ones
                if depth == length:
                    if u[-1] != last:
                        continue
                    value = (prefix_sums >> top) & lane
                    if value >= best:
                        if first_only:
                            return value, [u]
                        if value > best:
                            best = value
                            found = [u]
                        else:
                            found.append(u)
                    continue
                if ((packed * tails[length - depth]) >> top) & lane < best:
                    continue
                shifted = (prefix_sums << width) & all_lanes
                for c in "10":
                    child = shifted & masks[c]
                    if child:
                        stack.append((child, u + c, depth + 1))
        return best, found


def _check_nonempty(text: str) -> None:
    if not text:
        raise ValueError("maxocc is undefined for the empty word")


def _sort_key(u: str):
    return (len(u), u)


def maxocc(
    w: WordLike,
    assume_half_length: bool = False,
    max_witnesses: int | None = None,
) -> MaxoccResult:
    """Exact maximal number of occurrences of a subword of ``w``.

    With ``assume_half_length`` only subwords of length at most
    ``ceil(|w|/2)`` are examined; the result is then flagged as heuristic,
    since that restriction is unproven.
    """
    text = as_text(w)
    _check_nonempty(text)
    cap = config.max_witnesses() if max_witnesses is None else max_witnesses
    n = len(text)
    limit = -(-n // 2) if assume_half_length else n
    lengths = scan_order(n, max_length=limit)
    value, found = _Scanner(text).run(lengths, 1, first_only=False)
    witnesses = sorted(set(found), key=_sort_key)[:cap]
    return MaxoccResult(
        word=Word(text),
        maxocc=value,
        witnesses=[Word(u) for u in witnesses],
        entropy_bits=math.log2(value),
        searched_lengths=lengths,
        heuristic=assume_half_length and limit < n,
    )


def _exceeds_text(
    text: str,
    bound: int,
    hints: Sequence[str] = (),
    cache: OccCache | None = None,
    scanner: _Scanner | None = None,
) -> tuple[str | None, bool]:
    """Return ``(u, from_hint)`` with ``occ(text, u) > bound``, or ``(None, False)``."""
    for hint in hints:
        if hint and occ_runs(text, hint, cache) > bound:
            return hint, True
    center = len(hints[0]) if hints and hints[0] else None
    scanner = scanner or _Scanner(text)
    _, found = scanner.run(scan_order(len(text), center), bound + 1, first_only=True)
    return (found[0] if found else None), False


def maxocc_exceeds(
    w: WordLike,
    bound: int,
    hints: Iterable[WordLike] = (),
    cache: OccCache | None = None,
) -> Word | None:
    """Find a subword occurring more than ``bound`` times, or prove none exists.

    Hints are tried first; otherwise the ordered candidate scan stops at the
    first count above ``bound``. ``None`` means ``maxocc(w) <= bound``.
    """
    text = as_text(w)
    _check_nonempty(text)
    found, _ = _exceeds_text(text, bound, [as_text(h) for h in hints], cache)
    return None if found is None else Word(found)


def subword_entropy(w: WordLike) -> float:
    return maxocc(w).entropy_bits


def maxocc_upper_bound(n: int) -> int:
    """``binom(n, ceil(n/2))``, attained exactly by constant words."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return binomial(n, -(-n // 2))


def maxocc_lower_bound(n: int, k: int = 2) -> Fraction:
    """``max_l binom(n, l) / k**l``: the mean count of a uniformly random subword of length l."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if k < 2:
        raise ValueError(f"alphabet size must be at least 2, got {k}")
    return max(Fraction(binomial(n, ell), k**ell) for ell in range(n + 1))


def lower_bound_argmax(n: int, k: int = 2) -> int:
    values = [Fraction(binomial(n, ell), k**ell) for ell in range(n + 1)]
    return max(range(n + 1), key=values.__getitem__)
