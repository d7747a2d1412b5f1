"""Exact subword occurrence counting.

Two independent counters are provided: :func:`occ_dp`, the textbook
subsequence-counting recurrence, and :func:`occ_runs`, a divide-and-conquer
counter on run-length tuples that pivots on the middle run of the subword.
"""
from __future__ import annotations

import threading
from functools import lru_cache
from math import comb

from . import config
from .words import WordLike, as_text, text_runs

RunKey = tuple[int, ...]


@lru_cache(maxsize=1 << 16)
def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _binom(n: int, k: int) -> int:
    # internal variant tolerating negative n (inclusion-exclusion terms)
    if k < 0 or n < k:
        return 0
    return binomial(n, k)


def occ_dp(w: WordLike, u: WordLike) -> int:
    """Number of index sets realizing ``u`` as a subword of ``w``."""
    w, u = as_text(w), as_text(u)
    k = len(u)
    if k > len(w):
        return 0
    dp = [1] + [0] * k
    positions = {c: [j for j in range(k, 0, -1) if u[j - 1] == c] for c in "01"}
    for c in w:
        for j in positions[c]:
            dp[j] += dp[j - 1]
    return dp[k]


def pinned_run_placements(L: int, first_run: int, last_run: int, size: int, same_run: bool = False) -> int:
    """Ways to place ``size`` equal letters in ``L`` same-letter positions.

    The positions span runs ``k..k'`` of the text; at least one letter must
    fall in run ``k`` (``first_run`` letters) and one in run ``k'``
    (``last_run`` letters). With ``same_run`` the span is a single run and
    the count is ``binom(first_run, size)``.
    """
    if same_run:
        return _binom(first_run, size)
    return (
        _binom(L, size)
        - _binom(L - first_run, size)
        - _binom(L - last_run, size)
        + _binom(L - first_run - last_run, size)
    )


class OccCache:
    """Memo table for :func:`occ_runs`, keyed by normalized run tuples.

    Only pairs where both operands have at most ``threshold`` runs are
    stored; ``threshold=0`` disables caching. Concurrent writers always
    store identical values, so the lock only protects the dict itself and
    can be dropped with ``thread_safe=False``.
    """

    def __init__(self, threshold: int | None = None, thread_safe: bool = True):
        self.threshold = config.cache_threshold() if threshold is None else threshold
        self._data: dict = {}
        self._lock = threading.Lock() if thread_safe else None
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._data)

    def admits(self, w_runs: RunKey, u_runs: RunKey) -> bool:
        return len(w_runs) <= self.threshold and len(u_runs) <= self.threshold

    def get(self, key):
        value = self._data.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key, value: int) -> None:
        if self._lock is None:
            self._data[key] = value
        else:
            with self._lock:
                self._data[key] = value

    def clear(self) -> None:
        self._data.clear()
        self.hits = self.misses = 0


_default_cache = OccCache()


def default_cache() -> OccCache:
    return _default_cache


def _letter_total(w_first: int, w_runs: RunKey, letter: int) -> int:
    start = 0 if letter == w_first else 1
    return sum(w_runs[start::2])


def _occ_rt(w_first: int, w_runs: RunKey, u_first: int, u_runs: RunKey, cache: OccCache | None) -> int:
    if not u_runs:
        return 1
    if not w_runs:
        return 0
    # normalize so the text starts with 0; occ is invariant under swapping letters
    if w_first:
        u_first ^= 1
    if sum(u_runs) > sum(w_runs):
        return 0
    if len(u_runs) == 1:
        return _binom(_letter_total(0, w_runs, u_first), u_runs[0])

    key = None
    if cache is not None and cache.admits(w_runs, u_runs):
        key = (w_runs, u_first, u_runs)
        hit = cache.get(key)
        if hit is not None:
            return hit

    r = len(u_runs)
    p = (r + 1) // 2 - 1
    size = u_runs[p]
    pivot_letter = u_first ^ (p & 1)
    left_u = u_runs[:p]
    right_u = u_runs[p + 1:]
    right_first = pivot_letter ^ 1
    m = len(w_runs)
    start = 0 if pivot_letter == 0 else 1

    total = 0
    for k in range(start, m, 2):
        left = _occ_rt(0, w_runs[:k], u_first, left_u, cache)
        if not left:
            continue
        L = 0
        for k2 in range(k, m, 2):
            L += w_runs[k2]
            if L < size:
                continue
            ways = pinned_run_placements(L, w_runs[k], w_runs[k2], size, same_run=(k2 == k))
            if not ways:
                continue
            # run k2 + 1 of the text carries the letter after the pivot
            right = _occ_rt(right_first, w_runs[k2 + 1:], right_first, right_u, cache)
            total += left * ways * right
    if key is not None:
        cache.put(key, total)
    return total


def occ_runs(w: WordLike, u: WordLike, cache: OccCache | None = None) -> int:
    """Count occurrences of ``u`` in ``w`` by divide and conquer on runs.

    ``cache=None`` uses the module-wide cache; pass ``OccCache(0)`` to
    disable memoization.
    """
    w, u = as_text(w), as_text(u)
    if not u:
        return 1
    if len(u) > len(w):
        return 0
    if cache is None:
        cache = _default_cache
    return _occ_rt(int(w[0]), text_runs(w), int(u[0]), text_runs(u), cache)
