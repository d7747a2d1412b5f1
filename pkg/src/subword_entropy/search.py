"""Search for binary words of minimal subword entropy.

The exhaustive search walks the words of length ``n`` that start with ``0``
in integer-code order, split into contiguous chunks. A word is discarded as
soon as some subword occurs more often than the best maxocc found so far;
the most frequent subword of the previous fully scanned word (and its
reverse) is tried first, since neighbouring codes tend to share them.
"""
from __future__ import annotations

import json
import logging
import math
import multiprocessing
import os
import random
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field, fields
from typing import Iterable, Mapping

from . import config
from .entropy import _exceeds_text, _Scanner, _sort_key, maxocc, maxocc_upper_bound, scan_order
from .occurrence import OccCache, occ_runs
from .words import Word, WordLike, as_text, canonical_text

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
DEFAULT_CHUNK_SIZE = 1 << 10


class SearchInterrupted(RuntimeError):
    """Raised when a search stops early; the checkpoint (if any) is up to date."""

    def __init__(self, message: str, checkpoint: "Checkpoint"):
        super().__init__(message)
        self.checkpoint = checkpoint


@dataclass
class SearchStats:
    words_scanned: int = 0
    pruned_by_hints: int = 0
    pruned_by_scan: int = 0
    full_scans: int = 0
    chunks: int = 0
    wall_time: float = 0.0

    def add(self, other: "SearchStats") -> None:
        for f in fields(self):
            if f.name != "wall_time":
                setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    @property
    def hint_hit_rate(self) -> float:
        tried = self.words_scanned
        return self.pruned_by_hints / tried if tried else 0.0

    def as_dict(self) -> dict:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["hint_hit_rate"] = round(self.hint_hit_rate, 4)
        return out


@dataclass
class SearchResult:
    """Minimal maxocc over the words of length ``n``.

    ``stats`` is excluded from equality: it depends on scheduling and on
    whether hint pruning was enabled, the rest does not.
    """

    n: int
    min_maxocc: int
    min_entropy_bits: float
    achievers: list[Word]
    witnesses: dict[Word, list[Word]]
    stats: SearchStats = field(default_factory=SearchStats, compare=False)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "min_maxocc": str(self.min_maxocc),
            "min_entropy_bits": round(self.min_entropy_bits, 3),
            "achievers": [str(a) for a in self.achievers],
            "witnesses": {str(a): [str(u) for u in ws] for a, ws in self.witnesses.items()},
        }


@dataclass
class Checkpoint:
    """Progress of an exhaustive search.

    ``ranges`` lists the completed half-open code ranges; ``achievers`` holds
    every word of those ranges whose maxocc equals ``bound``.
    """

    n: int
    bound: int
    ranges: list[list[int]] = field(default_factory=list)
    achievers: list[str] = field(default_factory=list)
    version: int = CHECKPOINT_VERSION

    def to_json(self) -> dict:
        return {
            "version": self.version,
            "n": self.n,
            "bound": str(self.bound),
            "ranges": [list(r) for r in self.ranges],
            "achievers": list(self.achievers),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Checkpoint":
        version = data.get("version")
        if version != CHECKPOINT_VERSION:
            raise ValueError(f"checkpoint version {version!r} is not supported (expected {CHECKPOINT_VERSION})")
        return cls(
            n=int(data["n"]),
            bound=int(data["bound"]),
            ranges=[[int(lo), int(hi)] for lo, hi in data["ranges"]],
            achievers=[as_text(a) for a in data["achievers"]],
            version=version,
        )

    def save(self, path: str | os.PathLike) -> None:
        path = os.fspath(path)
        folder = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=folder, prefix=".ckpt-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.to_json(), fh)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Checkpoint":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def mark_done(self, lo: int, hi: int) -> None:
        spans = sorted(self.ranges + [[lo, hi]])
        merged = [spans[0]]
        for a, b in spans[1:]:
            if a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        self.ranges = merged

    def pending(self, total: int, chunk_size: int) -> list[tuple[int, int]]:
        out = []
        cursor = 0
        for a, b in sorted(self.ranges) + [[total, total]]:
            for lo in range(cursor, a, chunk_size):
                out.append((lo, min(lo + chunk_size, a)))
            cursor = max(cursor, b)
        return out


@dataclass
class _ChunkOutcome:
    lo: int
    hi: int
    best: int | None
    achievers: list[str]
    stats: SearchStats


_SHARED_BOUND = None
_WORKER_CACHE: OccCache | None = None


def _init_worker(shared_bound, cache_threshold: int) -> None:
    global _SHARED_BOUND, _WORKER_CACHE
    _SHARED_BOUND = shared_bound
    _WORKER_CACHE = OccCache(cache_threshold)


def _publish(value: int) -> None:
    shared = _SHARED_BOUND
    if shared is None:
        return
    with shared.get_lock():
        if value < shared.value:
            shared.value = value


def _scan_chunk(n: int, lo: int, hi: int, bound: int, use_hints: bool, cache: OccCache | None = None) -> _ChunkOutcome:
    if cache is None:
        cache = _WORKER_CACHE
    shared = _SHARED_BOUND
    stats = SearchStats(chunks=1)
    best = None
    achievers: list[str] = []
    hint = None
    full_order = scan_order(n)
    for code in range(lo, hi):
        text = format(code, f"0{n}b")
        stats.words_scanned += 1
        limit = bound if best is None else min(bound, best)
        if shared is not None:
            limit = min(limit, shared.value)
        if use_hints and hint and (occ_runs(text, hint, cache) > limit or occ_runs(text, hint[::-1], cache) > limit):
            stats.pruned_by_hints += 1
            continue
        scanner = _Scanner(text)
        _, beaten = scanner.run(scan_order(n, len(hint) if use_hints and hint else None), limit + 1, first_only=True)
        if beaten:
            stats.pruned_by_scan += 1
            hint = beaten[0]
            continue
        stats.full_scans += 1
        value, found = scanner.run(full_order, 1, first_only=False)
        hint = min(found, key=_sort_key)
        if best is None or value < best:
            best = value
            achievers = [text]
            _publish(value)
        else:
            achievers.append(text)
    return _ChunkOutcome(lo, hi, best, achievers, stats)


def _merge(state: Checkpoint, outcome: _ChunkOutcome) -> None:
    state.mark_done(outcome.lo, outcome.hi)
    if outcome.best is None or outcome.best > state.bound:
        return
    if outcome.best < state.bound:
        state.bound = outcome.best
        state.achievers = list(outcome.achievers)
    else:
        state.achievers.extend(outcome.achievers)


_SEED_PERIODS = ("0011", "000111", "0001100111", "0111000101")


def seed_bound(n: int, rng_seed: int = 0) -> tuple[Word, int]:
    """A word of length ``n`` with small maxocc, to start the search with a tight bound."""
    candidates = set()
    for period in _SEED_PERIODS:
        repeated = period * (n // len(period) + 2)
        candidates.update(repeated[shift:shift + n] for shift in range(len(period)))
    best = min(candidates, key=lambda t: (maxocc(t).maxocc, t))
    if n >= 4:
        return local_search_adaptive(best, max_flip_rate=0.25, attempts_per_rate=2, rng_seed=rng_seed)
    return Word(best), maxocc(best).maxocc


def min_entropy_exhaustive(
    n: int,
    workers: int = 1,
    checkpoint_path: str | os.PathLike | None = None,
    resume: bool = False,
    use_hints: bool = True,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    time_limit: float | None = None,
    max_chunks: int | None = None,
    use_seed: bool = True,
    max_length: int | None = None,
) -> SearchResult:
    """Exact minimal maxocc over all binary words of length ``n``.

    Achievers are reported once per symmetry class. ``time_limit`` (seconds)
    and ``max_chunks`` stop the search early with :class:`SearchInterrupted`
    after writing the checkpoint; resuming from it gives the same result as
    an uninterrupted run.
    """
    cap = config.max_search_length() if max_length is None else max_length
    if n < 1:
        raise ValueError(f"search length must be at least 1, got {n}")
    if n > cap:
        raise ValueError(f"search length {n} exceeds the configured maximum {cap}")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    start = time.monotonic()
    total = 1 << (n - 1)

    state = None
    if resume and checkpoint_path is not None and os.path.exists(checkpoint_path):
        state = Checkpoint.load(checkpoint_path)
        if state.n != n:
            raise ValueError(f"checkpoint is for n={state.n}, not n={n}")
    if state is None:
        state = Checkpoint(n=n, bound=maxocc_upper_bound(n))
    if use_seed:
        _, seeded = seed_bound(n)
        if seeded < state.bound:
            # no completed range holds a word this good, so nothing is lost
            state.bound = seeded
            state.achievers = []

    stats = SearchStats()
    pending = state.pending(total, chunk_size)
    processed = 0
    interrupted = None

    def should_stop() -> str | None:
        if max_chunks is not None and processed >= max_chunks:
            return f"stopped after {processed} chunks"
        if time_limit is not None and time.monotonic() - start > time_limit:
            return f"time limit of {time_limit}s reached"
        return None

    def record(outcome: _ChunkOutcome) -> None:
        nonlocal processed
        _merge(state, outcome)
        stats.add(outcome.stats)
        processed += 1
        if checkpoint_path is not None:
            state.save(checkpoint_path)

    if workers == 1:
        cache = OccCache(thread_safe=False)
        for lo, hi in pending:
            if (interrupted := should_stop()):
                break
            record(_scan_chunk(n, lo, hi, state.bound, use_hints, cache))
    else:
        ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else None)
        shared = ctx.Value("q", state.bound)
        pool = ProcessPoolExecutor(
            max_workers=workers, mp_context=ctx, initializer=_init_worker,
            initargs=(shared, config.cache_threshold()),
        )
        try:
            futures = [pool.submit(_scan_chunk, n, lo, hi, state.bound, use_hints) for lo, hi in pending]
            for fut in as_completed(futures):
                record(fut.result())
                with shared.get_lock():
                    shared.value = min(shared.value, state.bound)
                if (interrupted := should_stop()):
                    break
        finally:
            pool.shutdown(wait=True, cancel_futures=True)

    if checkpoint_path is not None:
        state.save(checkpoint_path)
    if interrupted and state.pending(total, chunk_size):
        raise SearchInterrupted(interrupted, state)

    stats.wall_time = time.monotonic() - start
    reps = sorted({canonical_text(a) for a in state.achievers}, key=_sort_key)
    achievers = [Word(a) for a in reps]
    witnesses = {a: maxocc(a).witnesses for a in achievers}
    log.info("n=%d min maxocc %d, %d classes, %s", n, state.bound, len(achievers), stats.as_dict())
    return SearchResult(
        n=n,
        min_maxocc=state.bound,
        min_entropy_bits=math.log2(state.bound),
        achievers=achievers,
        witnesses=witnesses,
        stats=stats,
    )


def _improves(text: str, value: int) -> int | None:
    """Exact maxocc of ``text`` if it is below ``value``, else None."""
    beaten, _ = _exceeds_text(text, value - 1)
    if beaten is not None:
        return None
    return maxocc(text).maxocc


_OTHER = {"0": "1", "1": "0"}


def _flip(text: str, i: int) -> str:
    return text[:i] + _OTHER[text[i]] + text[i + 1:]


def _descend(text: str, value: int) -> tuple[str, int]:
    # steepest descent over single-bit flips, ties to the smallest word
    while True:
        best = None
        for i in range(len(text)):
            cand = _flip(text, i)
            cand_value = _improves(cand, value if best is None else best[1] + 1)
            if cand_value is not None and (best is None or (cand_value, cand) < best[::-1]):
                best = (cand, cand_value)
        if best is None:
            return text, value
        text, value = best


def local_search_adaptive(
    seed: WordLike,
    max_flip_rate: float = 0.5,
    attempts_per_rate: int = 4,
    rng_seed: int = 0,
    rate_step: float | None = None,
) -> tuple[Word, int]:
    """Bit-flip descent with random jumps whose flip rate adapts to stagnation.

    After each descent a jump flips every bit of the best word with
    probability ``rate``. ``attempts_per_rate`` failed jumps raise the rate
    by ``rate_step`` (default ``1/n``); an improvement resets it. The search
    ends once the rate passes ``max_flip_rate``.
    """
    text = as_text(seed)
    if not text:
        raise ValueError("seed word must be non-empty")
    n = len(text)
    rng = random.Random(rng_seed)
    step = rate_step if rate_step is not None else 1.0 / n
    best, best_value = _descend(text, maxocc(text).maxocc)
    rate = step
    failures = 0
    while rate <= max_flip_rate + 1e-12:
        jumped = "".join(_OTHER[c] if rng.random() < rate else c for c in best)
        if jumped == best:
            i = rng.randrange(n)
            jumped = _flip(best, i)
        cand, value = _descend(jumped, maxocc(jumped).maxocc)
        if value < best_value:
            best, best_value = cand, value
            rate = step
            failures = 0
        else:
            failures += 1
            if failures >= attempts_per_rate:
                rate += step
                failures = 0
    return Word(best), best_value


def insertion_extend(words: Iterable[WordLike]) -> tuple[Word, int]:
    """Best single-letter insertion into any of ``words``, ties to the smallest code."""
    texts = [as_text(w) for w in words]
    if not texts:
        raise ValueError("insertion_extend needs at least one word")
    if len({len(t) for t in texts}) != 1:
        raise ValueError("all words must have the same length")
    candidates = sorted({t[:i] + c + t[i:] for t in texts for i in range(len(t) + 1) for c in "01"})
    best_text = candidates[0]
    best_value = maxocc(best_text).maxocc
    for cand in candidates[1:]:
        value = _improves(cand, best_value)
        if value is not None:
            best_text, best_value = cand, value
    return Word(best_text), best_value


def verify_superadditivity(results: Mapping[int, int]) -> list[tuple[int, int, int, int]]:
    """Pairs ``(n, m)`` with ``min(n+m) < min(n) * min(m)``, as ``(n, m, lhs, rhs)``."""
    violations = []
    for n in sorted(results):
        for m in sorted(results):
            if m < n or n + m not in results:
                continue
            lhs, rhs = results[n + m], results[n] * results[m]
            if lhs < rhs:
                violations.append((n, m, lhs, rhs))
    return violations


def limit_lower_bound(results: Mapping[int, int]) -> float:
    """Largest ``log2(min maxocc(n)) / n``; a certified lower bound on the entropy limit."""
    if not results:
        raise ValueError("no results given")
    return max(math.log2(v) / n for n, v in results.items())
