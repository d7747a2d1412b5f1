"""Binary words, run-length tuples and the letter/reversal symmetries."""
from __future__ import annotations

from functools import cached_property
from typing import Iterator, NamedTuple, Sequence, Union

ALPHABET = "01"
_FLIP = str.maketrans("01", "10")


class WordParseError(ValueError):
    """Raised when a word or run tuple cannot be parsed."""

    def __init__(self, text: str, index: int, reason: str = "invalid letter"):
        self.text = text
        self.index = index
        super().__init__(f"{reason} at index {index} in {text!r}")


class RunTuple(NamedTuple):
    """A word given by its first letter and the lengths of its runs."""

    first_letter: int
    runs: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.first_letter}:" + ",".join(map(str, self.runs))

    @property
    def length(self) -> int:
        return sum(self.runs)

    @classmethod
    def parse(cls, text: str) -> "RunTuple":
        """Parse the ``s:l1,l2,...`` format, e.g. ``0:4,2,1,3,2,1``."""
        head, sep, body = text.partition(":")
        if not sep or head not in ("0", "1"):
            raise WordParseError(text, 0, "expected first letter '0:' or '1:'")
        runs = []
        pos = len(head) + 1
        if body:
            for part in body.split(","):
                try:
                    value = int(part)
                except ValueError:
                    raise WordParseError(text, pos, "invalid run length") from None
                if value <= 0:
                    raise WordParseError(text, pos, "run length must be positive")
                runs.append(value)
                pos += len(part) + 1
        return cls(int(head), tuple(runs))


class Word:
    """An immutable binary word.

    The dense view is the ``'0'/'1'`` text; :attr:`code` packs it into an
    integer with the first letter as the most significant bit, so that for
    a fixed length the integer order and the lexicographic order agree.
    """

    __slots__ = ("text", "__dict__")

    def __init__(self, text: str = ""):
        if isinstance(text, Word):
            text = text.text
        bad = _first_bad_index(text)
        if bad is not None:
            raise WordParseError(text, bad)
        object.__setattr__(self, "text", text)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __reduce__(self):
        return (Word, (self.text,))

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self) -> Iterator[int]:
        return (int(c) for c in self.text)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.text[item])
        return int(self.text[item])

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"Word({self.text!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.text == other.text
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Word", self.text))

    def __lt__(self, other: "Word") -> bool:
        return (len(self), self.text) < (len(other), other.text)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.text + as_text(other))

    def __mul__(self, times: int) -> "Word":
        return Word(self.text * times)

    @property
    def code(self) -> int:
        return int(self.text, 2) if self.text else 0

    @classmethod
    def from_code(cls, code: int, length: int) -> "Word":
        if length == 0:
            return cls("")
        return cls(format(code, f"0{length}b"))

    def count(self, letter: int) -> int:
        return self.text.count(str(letter))

    @cached_property
    def runs(self) -> RunTuple:
        return to_runs(self)

    def complement(self) -> "Word":
        return Word(self.text.translate(_FLIP))

    def reverse(self) -> "Word":
        return Word(self.text[::-1])


WordLike = Union[Word, str]


def _first_bad_index(text: str):
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    if text.strip("01"):
        for i, c in enumerate(text):
            if c not in ALPHABET:
                return i
    return None


def as_text(w: WordLike) -> str:
    """Return the dense text of a word, validating plain strings."""
    if isinstance(w, Word):
        return w.text
    bad = _first_bad_index(w)
    if bad is not None:
        raise WordParseError(w, bad)
    return w


def parse_word(text: str) -> Word:
    return Word(text)


def text_runs(text: str) -> tuple[int, ...]:
    runs = []
    prev = None
    for c in text:
        if c == prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = c
    return tuple(runs)


def to_runs(w: WordLike) -> RunTuple:
    """Run-length tuple of ``w``; the empty word has first letter 0 and no runs."""
    text = as_text(w)
    first = int(text[0]) if text else 0
    return RunTuple(first, text_runs(text))


def runs_to_text(first_letter: int, runs: Sequence[int]) -> str:
    parts = []
    letter = first_letter
    for length in runs:
        if length <= 0:
            raise ValueError(f"run lengths must be positive, got {length}")
        parts.append(str(letter) * length)
        letter ^= 1
    return "".join(parts)


def from_runs(rt: RunTuple | str, runs: Sequence[int] | None = None) -> Word:
    """Build a word from a :class:`RunTuple` (or ``first_letter, runs``)."""
    if isinstance(rt, str):
        rt = RunTuple.parse(rt)
    elif runs is not None:
        rt = RunTuple(int(rt), tuple(runs))
    if rt.first_letter not in (0, 1):
        raise ValueError(f"first letter must be 0 or 1, got {rt.first_letter}")
    return Word(runs_to_text(rt.first_letter, rt.runs))


def complement(w: WordLike) -> Word:
    return Word(as_text(w).translate(_FLIP))


def reverse(w: WordLike) -> Word:
    return Word(as_text(w)[::-1])


def symmetry_orbit(w: WordLike) -> set[str]:
    text = as_text(w)
    comp = text.translate(_FLIP)
    return {text, comp, text[::-1], comp[::-1]}


def canonical_text(text: str) -> str:
    # all orbit members share a length, so the smallest code is the smallest string
    return min(symmetry_orbit(text))


def symmetry_class_representative(w: WordLike) -> Word:
    """Smallest word by integer code among w, its complement, reverse and reverse-complement."""
    return Word(canonical_text(as_text(w)))


def words_of_length(n: int, start_letter: int = 0, allow_empty: bool = False) -> Iterator[Word]:
    """Yield the ``2**(n-1)`` words of length ``n`` starting with ``start_letter``.

    Words come in increasing integer-code order. ``n == 0`` is only accepted
    with ``allow_empty=True`` and then yields the empty word alone.
    """
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    if n == 0:
        if not allow_empty:
            raise ValueError("n = 0 requires allow_empty=True")
        yield Word("")
        return
    if start_letter not in (0, 1):
        raise ValueError(f"start letter must be 0 or 1, got {start_letter}")
    offset = start_letter << (n - 1)
    for code in range(1 << (n - 1)):
        yield Word.from_code(offset | code, n)
