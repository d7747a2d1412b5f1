"""Published minimal-entropy rows for binary words of length 1 to 40.

``MINIMAL_WORDS[n]`` holds the least value of maxocc over binary words of
length ``n`` and one representative per symmetry class of the words reaching
it. ``FREQUENT_SUBWORDS[n][w]`` lists most frequent subwords of ``w`` that
start and end with the letters of ``w``; where ``w`` is its own mirror image
but a listed subword is not, only one of the pair is given.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .occurrence import occ_runs
from .words import canonical_text, text_runs


MINIMAL_WORDS: dict[int, tuple[int, tuple[str, ...]]] = {
    1: (1, ('0',)),
    2: (1, ('01',)),
    3: (2, ('001', '010')),
    4: (2, ('0110',)),
    5: (3, ('01110',)),
    6: (5, ('011001',)),
    7: (6, ('0110001',)),
    8: (9, ('01110001',)),
    9: (16, ('011000110',)),
    10: (22, ('0110001110',)),
    11: (33, ('01110001110',)),
    12: (52, ('011000111001',)),
    13: (72, ('0111001001110',)),
    14: (108, ('01100010111001',)),
    15: (162, ('011000101110001',)),
    16: (252, ('0111000101110001',)),
    17: (390, ('01100011111000110',)),
    18: (588, ('011100100101110001',)),
    19: (900, ('0110001011101000110', '0110001110110001110')),
    20: (1320, ('01110001011011000110',)),
    21: (2049, ('011100011011010001110',)),
    22: (2958, ('0110001110101000111001',)),
    23: (4473, ('01110001011011010001110',)),
    24: (6979, ('011000111010101000111001',)),
    25: (10602, ('0111000101101101000111001',)),
    26: (15962, ('01110001011011001000111001',)),
    27: (24150, ('011100010101110101000111001',)),
    28: (36450, ('0110001111010010010111000110', '0111000101110101000101110001')),
    29: (53671, ('01100011101010001010111000110',)),
    30: (83862, ('011000111001100010101111000110',)),
    31: (127998, ('0110001110101000101011110001110',)),
    32: (189131, ('01100011101010001010111010001110',)),
    33: (288900, ('011000111101010001011011010001110',)),
    34: (442386, ('0110001110101000101011101001001110',)),
    35: (681966, ('01110001011011001000110111001001110',)),
    36: (1047330, ('011100010111010100010110111001001110',)),
    37: (1581150, ('0111000101101011000011011011010001110',)),
    38: (2387054, ('01110001011011011000100111011001001110',)),
    39: (3626580, ('011000110110010011101100010010111000110',)),
    40: (5500610, ('0110001110101000101011101010001110010110',)),
}

FREQUENT_SUBWORDS: dict[int, dict[str, tuple[str, ...]]] = {
    1: {'0': ('0',)},
    2: {'01': ('01',)},
    3: {'001': ('0', '01'), '010': ('0',)},
    4: {'0110': ('0',)},
    5: {'01110': ('010', '0110')},
    6: {'011001': ('01',)},
    7: {'0110001': ('01', '001', '0101', '01001')},
    8: {'01110001': ('0101', '01001', '011001')},
    9: {'011000110': ('010',)},
    10: {'0110001110': ('0110',)},
    11: {'01110001110': ('0110',)},
    12: {'011000111001': ('0101',)},
    13: {'0111001001110': ('01010', '010010', '010110', '0100110', '0110110', '01100110')},
    14: {'01100010111001': ('010101', '0100101', '01001101')},
    15: {'011000101110001': ('0101101', '01001101', '01011001', '010011001')},
    16: {'0111000101110001': ('011001',)},
    17: {'01100011111000110': ('0100110', '0101110')},
    18: {'011100100101110001': ('01001101', '010011001')},
    19: {'0110001011101000110': ('01011010', '010011010', '0100110010'), '0110001110110001110': ('010110110',)},
    20: {'01110001011011000110': ('010011010',)},
    21: {'011100011011010001110': ('01100110',)},
    22: {'0110001110101000111001': ('010011001',)},
    23: {'01110001011011010001110': ('0100110010',)},
    24: {'011000111010101000111001': ('010101001',)},
    25: {'0111000101101101000111001': ('0110011001',)},
    26: {'01110001011011001000111001': ('01001100101',)},
    27: {'011100010101110101000111001': ('0100110101',)},
    28: {'0110001111010010010111000110': ('01100110010',), '0111000101110101000101110001': ('010011001101',)},
    29: {'01100011101010001010111000110': ('0101001010',)},
    30: {'011000111001100010101111000110': ('010110010110',)},
    31: {'0110001110101000101011110001110': ('0110100110110',)},
    32: {'01100011101010001010111010001110': ('0101000110010',)},
    33: {'011000111101010001011011010001110': ('0101101010110',)},
    34: {'0110001110101000101011101001001110': ('0110101010110',)},
    35: {'01110001011011001000110111001001110': ('01100101100110',)},
    36: {'011100010111010100010110111001001110': ('0110011010110110',)},
    37: {'0111000101101011000011011011010001110': ('0100101001110010',)},
    38: {'01110001011011011000100111011001001110': ('0100111001110110',)},
    39: {'011000110110010011101100010010111000110': ('01010110001010',)},
    40: {'0110001110101000101011101010001110010110': ('010100101100110',)},
}
def min_maxocc(n: int) -> int:
    return MINIMAL_WORDS[n][0]


def achiever_classes(n: int) -> set[str]:
    """Canonical symmetry-class representatives of the listed achievers."""
    return {canonical_text(w) for w in MINIMAL_WORDS[n][1]}


@dataclass(frozen=True)
class TableRow:
    n: int
    word: str
    maxocc: int
    entropy_bits: float
    runs: int

    @property
    def per_letter(self) -> float:
        return self.entropy_bits / self.n

    def as_dict(self, digits: int = 3) -> dict:
        return {
            "n": self.n,
            "word": self.word,
            "maxocc": str(self.maxocc),
            "entropy_bits": f"{self.entropy_bits:.{digits}f}",
            "per_letter": f"{self.per_letter:.{digits}f}",
            "runs": self.runs,
        }


def published_rows(start: int = 1, stop: int = 40) -> list[TableRow]:
    rows = []
    for n in range(start, stop + 1):
        value, words = MINIMAL_WORDS[n]
        for w in words:
            rows.append(TableRow(n, w, value, math.log2(value), len(text_runs(w))))
    return rows


def check_subword_rows(start: int = 1, stop: int = 40) -> list[tuple[int, str, str, int]]:
    """Listed subwords whose count differs from the row value, as ``(n, w, u, count)``."""
    bad = []
    for n in range(start, stop + 1):
        value = MINIMAL_WORDS[n][0]
        for w, subwords in FREQUENT_SUBWORDS[n].items():
            for u in subwords:
                count = occ_runs(w, u)
                if count != value:
                    bad.append((n, w, u, count))
    return bad


def rows_to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def rows_to_json(rows: list[dict]) -> str:
    return json.dumps(rows, indent=2)
