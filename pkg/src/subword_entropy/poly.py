"""Bivariate integer polynomials in ``x`` and ``y``.

:class:`BivariatePoly` stores a sparse ``{(deg_x, deg_y): coeff}`` map.
Exact division, GCD and determinants work on a recursive dense form: a list
indexed by the power of ``x`` whose entries are coefficient lists in ``y``
(lowest degree first, no trailing zeros).
"""
from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Mapping, Sequence

Univariate = list  # list[int], Z[y]
Recursive = list  # list[Univariate], Z[y][x]


class PolynomialDivisionError(ArithmeticError):
    pass


# -- Z[y] ---------------------------------------------------------------

def _u_trim(a: Univariate) -> Univariate:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_add(a: Univariate, b: Univariate) -> Univariate:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _u_trim(out)


def _u_neg(a: Univariate) -> Univariate:
    return [-c for c in a]


def _u_sub(a: Univariate, b: Univariate) -> Univariate:
    return _u_add(a, _u_neg(b))


def _u_mul(a: Univariate, b: Univariate) -> Univariate:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _u_trim(out)


def _u_content(a: Univariate) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _u_divexact_int(a: Univariate, c: int) -> Univariate:
    return [x // c for x in a]


def _u_divexact(a: Univariate, b: Univariate) -> Univariate:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        coeff, rem = divmod(r[-1], lb)
        if rem:
            raise PolynomialDivisionError("inexact division in Z[y]")
        q[shift] = coeff
        for i, c in enumerate(b):
            r[i + shift] -= coeff * c
        _u_trim(r)
    if r:
        raise PolynomialDivisionError("inexact division in Z[y]")
    return _u_trim(q)


def _u_prem(a: Univariate, b: Univariate) -> Univariate:
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        _u_trim(r)
    return r


def _u_primitive(a: Univariate) -> Univariate:
    c = _u_content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return _u_divexact_int(a, c)


def _u_gcd(a: Univariate, b: Univariate) -> Univariate:
    if not a:
        return _u_normal(b)
    if not b:
        return _u_normal(a)
    c = gcd(_u_content(a), _u_content(b))
    a, b = _u_primitive(a), _u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _u_primitive(_u_prem(a, b))
    return [c * x for x in _u_primitive(a)]


def _u_normal(a: Univariate) -> Univariate:
    return _u_neg(a) if a and a[-1] < 0 else list(a)


# -- Z[y][x] ------------------------------------------------------------

def _r_trim(a: Recursive) -> Recursive:
    while a and not a[-1]:
        a.pop()
    return a


def _r_add(a: Recursive, b: Recursive) -> Recursive:
    if len(a) < len(b):
        a, b = b, a
    out = [list(c) for c in a]
    for i, c in enumerate(b):
        out[i] = _u_add(out[i], c)
    return _r_trim(out)


def _r_neg(a: Recursive) -> Recursive:
    return [_u_neg(c) for c in a]


def _r_sub(a: Recursive, b: Recursive) -> Recursive:
    return _r_add(a, _r_neg(b))


def _r_mul(a: Recursive, b: Recursive) -> Recursive:
    if not a or not b:
        return []
    out: Recursive = [[] for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = _u_add(out[i + j], _u_mul(ca, cb))
    return _r_trim(out)


def _r_scale(a: Recursive, c: Univariate) -> Recursive:
    return _r_trim([_u_mul(x, c) for x in a])


def _r_content(a: Recursive) -> Univariate:
    g: Univariate = []
    for c in a:
        if c:
            g = _u_gcd(g, c)
            if len(g) == 1 and abs(g[0]) == 1:
                break
    return g


def _r_divexact_u(a: Recursive, c: Univariate) -> Recursive:
    return [_u_divexact(x, c) if x else [] for x in a]


def _r_divexact(a: Recursive, b: Recursive) -> Recursive:
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [list(c) for c in a]
    db, lb = len(b) - 1, b[-1]
    q: Recursive = [[] for _ in range(max(len(a) - db, 0))]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        coeff = _u_divexact(r[-1], lb)
        q[shift] = coeff
        for i, c in enumerate(b):
            if c:
                r[i + shift] = _u_sub(r[i + shift], _u_mul(coeff, c))
        _r_trim(r)
    if r:
        raise PolynomialDivisionError("inexact division in Z[x, y]")
    return _r_trim(q)


def _r_prem(a: Recursive, b: Recursive) -> Recursive:
    r = [list(c) for c in a]
    db, lb = len(b) - 1, b[-1]
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [_u_mul(lb, c) for c in r]
        for i, c in enumerate(b):
            if c:
                r[i + shift] = _u_sub(r[i + shift], _u_mul(lr, c))
        _r_trim(r)
    return r


def _r_primitive(a: Recursive) -> Recursive:
    if not a:
        return []
    out = _r_divexact_u(a, _r_content(a))
    if out[-1][-1] < 0:
        out = _r_neg(out)
    return out


def _r_gcd(a: Recursive, b: Recursive) -> Recursive:
    """GCD in Z[y][x] by the primitive remainder sequence, positive leading coefficient."""
    if not a:
        return _r_primitive(b) if b else []
    if not b:
        return _r_primitive(a)
    content = _u_gcd(_r_content(a), _r_content(b))
    a, b = _r_primitive(a), _r_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _r_primitive(_r_prem(a, b))
    return _r_scale(_r_primitive(a), content)


def bareiss_determinant(matrix: Sequence[Sequence[Recursive]], strict: bool = True) -> tuple[Recursive, list[Recursive]]:
    """Fraction-free determinant over Z[x, y].

    Returns the determinant and the successive pivots (leading principal
    minors). No row exchanges are made; with ``strict`` a vanishing pivot
    raises ``ArithmeticError``.
    """
    m = [[list(map(list, entry)) for entry in row] for row in matrix]
    size = len(m)
    if size == 0:
        return [[1]], []
    prev: Recursive = [[1]]
    pivots = []
    for k in range(size - 1):
        pivot = m[k][k]
        if not pivot:
            if strict:
                raise ArithmeticError(f"zero pivot at step {k}")
            return [], pivots
        pivots.append(pivot)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _r_sub(_r_mul(pivot, m[i][j]), _r_mul(m[i][k], m[k][j]))
                m[i][j] = _r_divexact(num, prev)
        prev = pivot
    pivots.append(m[size - 1][size - 1])
    return m[size - 1][size - 1], pivots


# -- public type ----------------------------------------------------------

def _monomial_key(exps: tuple[int, int]):
    dx, dy = exps
    return (dx + dy, dy)


class BivariatePoly:
    """Immutable polynomial in ``x, y`` with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (dx, dy), c in (terms or {}).items():
            if dx < 0 or dy < 0:
                raise ValueError("negative exponent")
            if c:
                clean[(int(dx), int(dy))] = int(c)
        self._terms = clean
        self._hash = None

    # construction
    @classmethod
    def const(cls, c: int) -> "BivariatePoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    @classmethod
    def from_dense(cls, rec: Recursive) -> "BivariatePoly":
        return cls({(i, j): c for i, col in enumerate(rec) for j, c in enumerate(col) if c})

    @classmethod
    def from_univariate_x(cls, coeffs: Iterable[int]) -> "BivariatePoly":
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    def to_dense(self) -> Recursive:
        if not self._terms:
            return []
        out: Recursive = [[] for _ in range(self.deg_x + 1)]
        for (dx, dy), c in self._terms.items():
            col = out[dx]
            if len(col) <= dy:
                col.extend([0] * (dy + 1 - len(col)))
            col[dy] = c
        return out

    # inspection
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def coeff(self, dx: int, dy: int) -> int:
        return self._terms.get((dx, dy), 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def deg_x(self) -> int:
        return max((dx for dx, _ in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((dy for _, dy in self._terms), default=-1)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def __call__(self, x, y):
        return sum(c * x**dx * y**dy for (dx, dy), c in self._terms.items())

    # arithmetic
    def _coerce(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, int):
            return BivariatePoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (ax, ay), ca in self._terms.items():
            for (bx, by), cb in other._terms.items():
                key = (ax + bx, ay + by)
                out[key] = out.get(key, 0) + ca * cb
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = BivariatePoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divexact(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly.from_dense(_r_divexact(self.to_dense(), other.to_dense()))

    def divides(self, other: "BivariatePoly") -> bool:
        try:
            other.divexact(self)
        except PolynomialDivisionError:
            return False
        return True

    def gcd(self, other: "BivariatePoly") -> "BivariatePoly":
        return BivariatePoly.from_dense(_r_gcd(self.to_dense(), other.to_dense()))

    def scale_down(self, c: int) -> "BivariatePoly":
        return BivariatePoly({k: v // c for k, v in self._terms.items()})

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePoly.const(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text
    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms in graded order, ties broken by the degree in ``y``."""
        return [(dx, dy, self._terms[(dx, dy)]) for dx, dy in sorted(self._terms, key=_monomial_key)]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (dx, dy, c) in enumerate(self.sorted_terms()):
            factors = []
            if dx:
                factors.append("x" if dx == 1 else f"x^{dx}")
            if dy:
                factors.append("y" if dy == 1 else f"y^{dy}")
            mag = abs(c)
            body = "*".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r})"

    _TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*((?:[xy](?:\^\d+)?\s*\*?\s*)*)")

    @classmethod
    def parse(cls, text: str) -> "BivariatePoly":
        """Parse an expanded sum of monomials such as ``1 - 2*x + x^2 - 4*x*y``."""
        src = text.strip()
        if src.startswith("(") and src.endswith(")"):
            src = src[1:-1]
        terms: dict = {}
        pos = 0
        if not src:
            raise ValueError("empty polynomial")
        while pos < len(src):
            m = cls._TERM.match(src, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial at {src[pos:]!r}")
            sign, digits, mono = m.groups()
            if pos > 0 and sign is None:
                raise ValueError(f"missing operator at {src[pos:]!r}")
            if digits is None and not mono.strip():
                raise ValueError(f"empty term at {src[pos:]!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            dx = dy = 0
            for var, exp in re.findall(r"([xy])(?:\^(\d+))?", mono):
                e = int(exp) if exp else 1
                if var == "x":
                    dx += e
                else:
                    dy += e
            terms[(dx, dy)] = terms.get((dx, dy), 0) + c
            pos = m.end()
        return cls(terms)
