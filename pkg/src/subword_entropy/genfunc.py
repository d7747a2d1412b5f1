"""Rational generating functions of occurrences of ``v^r`` in ``w^m``.

The construction follows the cluster decomposition of an occurrence of
``v`` across consecutive copies of ``w``:

1. For every factor ``v'`` of ``v`` and positions ``s <= t`` of ``w``, count
   the occurrences of ``v'`` in one copy of ``w`` that start at ``s`` and end
   at ``t``.
2. Summing over the compositions of ``|v|`` gives, for each ``(s, t)``, the
   series of occurrences of ``v`` in ``w^m`` pinned to position ``s`` of the
   first copy and ``t`` of the last copy, as a polynomial over
   ``(1 - x)^(|v| - 1)``.
3. The series ``f_t`` of occurrences of ``v^r`` ending at position ``t`` of
   the last copy satisfy a linear system ``A f = b`` whose entries are
   polynomials in ``x`` and linear in ``y``; only positions holding the last
   letter of ``v`` take part.
4. ``sum_t f_t`` is a ratio of two determinants of the bordered matrix
   ``[[A, b], [1, 0]]``, computed fraction-free.
5. ``f = 1/(1 - x) + x/(1 - x) * sum_t f_t``, reduced to lowest terms.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterator

from . import config
from .occurrence import binomial
from .poly import BivariatePoly, Recursive, _r_add, _r_mul, _r_sub, bareiss_determinant
from .words import WordLike, as_text


class BudgetExceeded(ValueError):
    pass


# -- occurrence tables ------------------------------------------------------

@dataclass
class OccMatrix:
    """``table[m][r] = occ(w^m, v^r)`` for ``0 <= m <= M``, ``0 <= r <= R``."""

    w: str
    v: str
    table: list[list[int]]

    @property
    def M(self) -> int:
        return len(self.table) - 1

    @property
    def R(self) -> int:
        return len(self.table[0]) - 1

    def __getitem__(self, index: tuple[int, int]) -> int:
        m, r = index
        return self.table[m][r]

    def __eq__(self, other) -> bool:
        if not isinstance(other, OccMatrix):
            return NotImplemented
        return self.table == other.table


def _check_budget(cost: int, budget: int | None, what: str) -> None:
    limit = config.series_budget() if budget is None else budget
    if cost > limit:
        raise BudgetExceeded(f"{what} needs about {cost} operations, over the budget of {limit}")


def occ_table_periodic(w: WordLike, v: WordLike, M: int, R: int, budget: int | None = None) -> OccMatrix:
    """Exact ``occ(w^m, v^r)`` by one subsequence DP over ``w^M`` against ``v^R``."""
    w, v = as_text(w), as_text(v)
    if not w or not v:
        raise ValueError("w and v must be non-empty")
    if M < 0 or R < 0:
        raise ValueError("M and R must be non-negative")
    _check_budget(M * len(w) * R * len(v), budget, f"table of w^{M} (|w|={len(w)}) against v^{R} (|v|={len(v)})")
    pattern = v * R
    k = len(pattern)
    dp = [1] + [0] * k
    positions = {c: [j for j in range(k, 0, -1) if pattern[j - 1] == c] for c in "01"}
    step = len(v)
    table = [dp[::step]]
    for _ in range(M):
        for c in w:
            for j in positions[c]:
                dp[j] += dp[j - 1]
        table.append(dp[::step])
    return OccMatrix(w, v, table)


# -- compositions -------------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise ValueError(f"composition parts must be positive, got {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def clusters(self, v: WordLike) -> list[str]:
        text = as_text(v)
        if sum(self.parts) != len(text):
            raise ValueError("composition does not match the word length")
        cuts = [0, *accumulate(self.parts)]
        return [text[a:b] for a, b in zip(cuts, cuts[1:])]


def compositions(n: int) -> Iterator[Composition]:
    """All ``2**(n-1)`` compositions of ``n``."""
    if n < 1:
        raise ValueError("compositions need n >= 1")
    for mask in range(1 << (n - 1)):
        parts = []
        size = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(size)
                size = 1
            else:
                size += 1
        parts.append(size)
        yield Composition(tuple(parts))


# -- rational functions -------------------------------------------------------

@dataclass(frozen=True)
class RationalGF:
    """``num / den`` in lowest terms, jointly primitive, ``den(0, 0) > 0``."""

    num: BivariatePoly
    den: BivariatePoly = field(default_factory=lambda: BivariatePoly.const(1))

    @classmethod
    def canonical(cls, num: BivariatePoly, den: BivariatePoly) -> "RationalGF":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.coeff(0, 0) == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if num.is_zero():
            return cls(BivariatePoly(), BivariatePoly.const(1))
        g = num.gcd(den)
        if not (g.deg_x <= 0 and g.deg_y <= 0):
            num, den = num.divexact(g), den.divexact(g)
        c = math.gcd(num.content(), den.content())
        if den.coeff(0, 0) < 0:
            c = -c
        if c != 1:
            num, den = num.scale_down(c), den.scale_down(c)
        return cls(num, den)

    def normalized(self) -> "RationalGF":
        return RationalGF.canonical(self.num, self.den)

    def equivalent(self, other: "RationalGF") -> bool:
        return self.num * other.den == other.num * self.den

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    @classmethod
    def parse(cls, text: str) -> "RationalGF":
        depth = 0
        for i, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "/" and depth == 0:
                return cls(BivariatePoly.parse(text[:i]), BivariatePoly.parse(text[i + 1:]))
        return cls(BivariatePoly.parse(text))

    def to_json(self) -> dict:
        def enc(p: BivariatePoly):
            return [[dx, dy, str(c)] for dx, dy, c in p.sorted_terms()]

        return {"num": enc(self.num), "den": enc(self.den)}

    @classmethod
    def from_json(cls, data: dict | str) -> "RationalGF":
        if isinstance(data, str):
            data = json.loads(data)

        def dec(rows):
            return BivariatePoly({(int(dx), int(dy)): int(c) for dx, dy, c in rows})

        return cls(dec(data["num"]), dec(data["den"]))


# -- construction ---------------------------------------------------------------

def _pinned_counts(w: str, piece: str) -> dict[tuple[int, int], int]:
    """Occurrences of ``piece`` in ``w`` keyed by (first position, last position)."""
    n, k = len(w), len(piece)
    out: dict[tuple[int, int], int] = {}
    for s in range(n):
        if w[s] != piece[0]:
            continue
        ends = [0] * n
        ends[s] = 1
        for j in range(1, k):
            running = 0
            nxt = [0] * n
            for t in range(n):
                if w[t] == piece[j]:
                    nxt[t] = running
                running += ends[t]
            ends = nxt
        for t, c in enumerate(ends):
            if c:
                out[(s, t)] = c
    return out


def _one_minus_x_power(e: int) -> list[int]:
    return [(-1) ** i * binomial(e, i) for i in range(e + 1)]


def _poly_add_into(acc: list[int], poly: list[int], scale: int, shift: int) -> None:
    for i, c in enumerate(poly):
        acc[i + shift] += scale * c


def _pinned_numerators(w: str, v: str, max_composition_length: int | None) -> dict[tuple[int, int], list[int]]:
    """Numerators ``N[s, t](x)`` of the pinned series over ``(1 - x)^(|v| - 1)``."""
    cap = config.max_composition_length() if max_composition_length is None else max_composition_length
    k = len(v)
    if k > cap:
        raise BudgetExceeded(f"|v| = {k} exceeds the composition cap of {cap}")
    n = len(w)
    e = k - 1
    pinned = {(i, j): _pinned_counts(w, v[i:j]) for i in range(k) for j in range(i + 1, k + 1)}
    occ_piece = {key: sum(counts.values()) for key, counts in pinned.items()}

    # group compositions with at least two parts by (first part, last part, number of parts)
    weights: dict[tuple[int, int, int], int] = {}
    for comp in compositions(k):
        parts = comp.parts
        if len(parts) < 2:
            continue
        product = 1
        offset = parts[0]
        for p in parts[1:-1]:
            product *= occ_piece[(offset, offset + p)]
            offset += p
            if not product:
                break
        if product:
            key = (parts[0], parts[-1], len(parts))
            weights[key] = weights.get(key, 0) + product

    starts: dict[int, list[int]] = {}
    for p in {key[0] for key in weights}:
        totals = [0] * n
        for (s, _), c in pinned[(0, p)].items():
            totals[s] += c
        starts[p] = totals
    finishes: dict[int, list[int]] = {}
    for q in {key[1] for key in weights}:
        totals = [0] * n
        for (_, t), c in pinned[(k - q, k)].items():
            totals[t] += c
        finishes[q] = totals

    shapes = {ell: _one_minus_x_power(e - (ell - 1)) for ell in range(2, k + 1)}
    base = _one_minus_x_power(e)
    whole = pinned[(0, k)]
    numerators = {}
    for s in range(n):
        for t in range(n):
            acc = [0] * (e + 1)
            if (s, t) in whole:
                _poly_add_into(acc, base, whole[(s, t)], 0)
            for (p, q, ell), weight in weights.items():
                c = weight * starts[p][s] * finishes[q][t]
                if c:
                    _poly_add_into(acc, shapes[ell], c, ell - 1)
            if any(acc):
                numerators[(s, t)] = acc
    return numerators


def _lift(coeffs: list[int], y_power: int = 0) -> Recursive:
    """Univariate polynomial in ``x`` as a recursive dense poly times ``y^y_power``."""
    out = [([0] * y_power + [c]) if c else [] for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def gf_construct(w: WordLike, v: WordLike, max_composition_length: int | None = None) -> RationalGF:
    """Canonical rational form of ``sum_{m,r >= 0} occ(w^m, v^r) x^m y^r``."""
    w, v = as_text(w), as_text(v)
    if not w or not v:
        raise ValueError("w and v must be non-empty")
    e = len(v) - 1
    numer = _pinned_numerators(w, v, max_composition_length)
    ends = [t for t in range(len(w)) if w[t] == v[-1]]
    one_minus_x = BivariatePoly.from_univariate_x([1, -1])
    if not ends or not numer:
        return RationalGF.canonical(BivariatePoly.const(1), one_minus_x)

    zero = [0] * (e + 1)
    n_t = {}
    h = {}
    for t in ends:
        n_t[t] = [sum(col) for col in zip(*(numer.get((s, t), zero) for s in range(len(w))))]
        for t_prev in ends:
            h[(t_prev, t)] = [
                sum(col) for col in zip(*(numer.get((s, t), zero) for s in range(t_prev + 1, len(w))))
            ]

    diag = _lift(_one_minus_x_power(e + 1))
    size = len(ends)
    matrix: list[list[Recursive]] = []
    for t in ends:
        x_n = _lift([0] + n_t[t], 1)  # x * y * N_t
        row = []
        for t_prev in ends:
            entry = _r_sub([], x_n)
            h_term = _lift(h[(t_prev, t)], 1)
            if h_term:
                entry = _r_sub(entry, _r_mul(h_term, _lift([1, -1])))
            if t_prev == t:
                entry = _r_add(entry, diag)
            row.append(entry)
        row.append(_lift(n_t[t], 1))
        matrix.append(row)
    matrix.append([[[1]] for _ in range(size)] + [[]])

    try:
        det_bordered, pivots = bareiss_determinant(matrix)
    except ArithmeticError as exc:  # the system matrix is non-singular by construction
        raise AssertionError(f"singular system for w={w!r}, v={v!r}") from exc
    det_a = BivariatePoly.from_dense(pivots[size - 1])
    det_m = BivariatePoly.from_dense(det_bordered)
    x = BivariatePoly.x()
    return RationalGF.canonical(det_a - x * det_m, one_minus_x * det_a)


def gf_series(gf: RationalGF, M: int, R: int, budget: int | None = None) -> OccMatrix:
    """Taylor coefficients of ``gf`` at the origin up to ``x^M y^R``."""
    den = gf.den.terms()
    q0 = den.pop((0, 0), 0)
    if q0 == 0:
        raise ValueError("denominator constant term must be nonzero")
    _check_budget((M + 1) * (R + 1) * max(len(den), 1), budget, f"series up to ({M}, {R})")
    num = gf.num.terms()
    rest = sorted(den.items())
    table = [[0] * (R + 1) for _ in range(M + 1)]
    for m in range(M + 1):
        row = table[m]
        for r in range(R + 1):
            acc = num.get((m, r), 0)
            for (i, j), c in rest:
                if i <= m and j <= r:
                    acc -= c * table[m - i][r - j]
            value, rem = divmod(acc, q0)
            if rem:
                raise ArithmeticError(f"series coefficient at ({m}, {r}) is not an integer")
            row[r] = value
    return OccMatrix("", "", table)


# -- closed forms and estimates ------------------------------------------------

@dataclass
class ClosedFormReport:
    checked: int = 0
    mismatches: list[tuple[str, int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def check(self, label: str, m: int, r: int, expected: int, actual: int) -> None:
        self.checked += 1
        if expected != actual:
            self.mismatches.append((label, m, r, expected, actual))


def _binom_or_zero(n: int, k: int) -> int:
    return binomial(n, k) if n >= 0 and 0 <= k <= n else 0


def c_recurrence_value(c, m: int, r: int, c3_coefficient: int = 36) -> int:
    """Right-hand side of the recurrence for ``c[m][r] = occ((000111)^m, (0011)^r)``.

    Holds for ``r >= 1`` and every ``m``, with ``c`` zero at negative indices.
    The coefficients are those of the denominator ``(1-x)^4 - 9x(1+2x)^2 y``;
    ``c3_coefficient`` multiplies ``c[m-3][r-1]`` and is exposed so that other
    sign conventions can be tested against the exact table.
    """

    def at(i, j):
        return c[i][j] if i >= 0 and j >= 0 else 0

    return (
        4 * at(m - 1, r) - 6 * at(m - 2, r) + 4 * at(m - 3, r) - at(m - 4, r)
        + c3_coefficient * at(m - 3, r - 1) + 36 * at(m - 2, r - 1) + 9 * at(m - 1, r - 1)
    )


def verify_closed_forms(limit: int = 20, c_limit: int | None = None) -> ClosedFormReport:
    """Check the closed forms for ``(0011)^m``, ``(01)^m`` and the ``(000111)^m`` recurrence."""
    c_limit = limit if c_limit is None else c_limit
    report = ClosedFormReport()
    a = occ_table_periodic("0011", "01", limit, limit)
    b = occ_table_periodic("01", "01", limit, limit)
    c = occ_table_periodic("000111", "0011", c_limit, c_limit)
    for m in range(limit + 1):
        for r in range(limit + 1):
            closed_b = _binom_or_zero(m + r, m - r)
            report.check("a = 4^r binom(m+r, m-r)", m, r, 4**r * closed_b, a[m, r])
            report.check("b = binom(m+r, m-r)", m, r, closed_b, b[m, r])
            report.check("a = 4^r b", m, r, 4**r * b[m, r], a[m, r])
    for m in range(c_limit + 1):
        report.check("c(m, 0) = 1", m, 0, 1, c[m, 0])
        for r in range(1, c_limit + 1):
            report.check("c recurrence", m, r, c_recurrence_value(c.table, m, r), c[m, r])
    return report


CERTIFIED_FAMILIES = {("0011", "01"), ("01", "01"), ("000111", "0011")}


@dataclass(frozen=True)
class PeriodicEstimate:
    """Largest ``occ(w^m, v^r)`` over ``r``, normalized per letter of ``w^m``.

    ``certified`` marks families where a most frequent subword of ``w^m`` is
    known to be a power of ``v``, so ``max_occ`` equals ``maxocc(w^m)``.
    """

    w: str
    v: str
    m: int
    r_star: int
    max_occ: int
    per_letter_bits: float
    ratio: float
    certified: bool


def periodic_entropy_estimate(w: WordLike, v: WordLike, m: int, budget: int | None = None) -> PeriodicEstimate:
    w, v = as_text(w), as_text(v)
    if m < 1:
        raise ValueError("m must be at least 1")
    R = m * len(w) // len(v)
    row = occ_table_periodic(w, v, m, R, budget).table[m]
    best = max(row)
    r_star = row.index(best)
    return PeriodicEstimate(
        w=w,
        v=v,
        m=m,
        r_star=r_star,
        max_occ=best,
        per_letter_bits=math.log2(best) / (m * len(w)),
        ratio=r_star / m,
        certified=(w, v) in CERTIFIED_FAMILIES,
    )


def series_matches_table(w: WordLike, v: WordLike, M: int = 12, R: int = 12) -> bool:
    return gf_series(gf_construct(w, v), M, R) == occ_table_periodic(w, v, M, R)


__all__ = [
    "BudgetExceeded",
    "ClosedFormReport",
    "Composition",
    "OccMatrix",
    "PeriodicEstimate",
    "RationalGF",
    "compositions",
    "gf_construct",
    "gf_series",
    "occ_table_periodic",
    "periodic_entropy_estimate",
    "series_matches_table",
    "verify_closed_forms",
]
