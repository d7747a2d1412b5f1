import random

import pytest
import sympy as sp

from subword_entropy.poly import BivariatePoly, PolynomialDivisionError, bareiss_determinant

X, Y = sp.symbols("x y")


def to_sympy(p):
    return sum(c * X**i * Y**j for (i, j), c in p.terms().items())


def random_poly(rng, dx=3, dy=2, terms=5):
    return BivariatePoly({(rng.randint(0, dx), rng.randint(0, dy)): rng.randint(-6, 6) for _ in range(rng.randint(1, terms))})


def test_arithmetic_against_sympy():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_poly(rng), random_poly(rng)
        assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
        assert sp.expand(to_sympy(a - b) - (to_sympy(a) - to_sympy(b))) == 0
        assert sp.expand(to_sympy(a**2) - to_sympy(a) ** 2) == 0


def test_gcd_against_sympy():
    rng = random.Random(7)
    for _ in range(150):
        a, b, g = random_poly(rng), random_poly(rng), random_poly(rng)
        A, B = a * g, b * g
        if A.is_zero() or B.is_zero():
            continue
        ours = to_sympy(A.gcd(B))
        theirs = sp.gcd(to_sympy(A), to_sympy(B))
        assert sp.expand(ours - theirs) == 0 or sp.expand(ours + theirs) == 0


def test_exact_division():
    x, y = BivariatePoly.x(), BivariatePoly.y()
    p = (1 - x) ** 3 * (1 + 2 * x * y)
    assert p.divexact(1 - x) == (1 - x) ** 2 * (1 + 2 * x * y)
    assert (1 - x).divides(p)
    with pytest.raises(PolynomialDivisionError):
        p.divexact(1 + y)


def test_text_round_trip():
    rng = random.Random(9)
    for _ in range(100):
        p = random_poly(rng)
        assert BivariatePoly.parse(str(p)) == p
    x, y = BivariatePoly.x(), BivariatePoly.y()
    assert str((1 - x) ** 2 - 4 * x * y) == "1 - 2*x + x^2 - 4*x*y"
    assert BivariatePoly.parse("(1 - 2*x + x^2 - 4*x*y)") == (1 - x) ** 2 - 4 * x * y


def test_evaluation_and_degrees():
    x, y = BivariatePoly.x(), BivariatePoly.y()
    p = 3 * x**2 * y - y + 5
    assert p(2, 3) == 3 * 4 * 3 - 3 + 5
    assert (p.deg_x, p.deg_y) == (2, 1)
    assert p.coeff(2, 1) == 3 and p.coeff(1, 1) == 0


def test_bareiss_matches_sympy():
    rng = random.Random(1)
    for size in range(1, 5):
        for _ in range(4):
            entries = [[random_poly(rng, 2, 1, 3) for _ in range(size)] for _ in range(size)]
            # force a non-vanishing diagonal so no pivoting is needed
            for i in range(size):
                entries[i][i] = entries[i][i] + BivariatePoly.const(50)
            det, _ = bareiss_determinant([[e.to_dense() for e in row] for row in entries])
            expected = sp.Matrix([[to_sympy(e) for e in row] for row in entries]).det()
            assert sp.expand(to_sympy(BivariatePoly.from_dense(det)) - expected) == 0
