import random
from fractions import Fraction

import pytest

from chernmather.linsolve import (
    InconsistentSystem,
    NonIntegerSolution,
    NonUniqueSolution,
    exact_solve,
    solve_integer,
)


def test_identity_system():
    sol = exact_solve([[1, 0], [0, 1]], [5, -7])
    assert sol == [5, -7]


def test_overdetermined_consistent():
    assert exact_solve([[1], [2], [3]], [2, 4, 6]) == [2]


def test_overdetermined_inconsistent():
    with pytest.raises(InconsistentSystem, match="inconsistent"):
        exact_solve([[1], [2], [3]], [2, 4, 7], context="the system")


def test_context_tag_in_message():
    with pytest.raises(InconsistentSystem, match=r"\[row 3 of table\]"):
        exact_solve([[1], [1]], [1, 2], context="row 3 of table")


def test_random_invertible_roundtrip():
    rng = random.Random(31)
    for _ in range(20):
        n = 5
        while True:
            a = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            # ensure invertibility by checking the solve works end to end
            x = [rng.randint(-20, 20) for _ in range(n)]
            b = [sum(ai * xi for ai, xi in zip(row, x)) for row in a]
            try:
                sol = exact_solve(a, b)
            except NonUniqueSolution:
                continue
            break
        assert sol == [Fraction(v) for v in x]


def test_rational_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(-2, 5)]]
    x = [Fraction(3, 7), Fraction(-5, 2)]
    b = [sum(a * v for a, v in zip(row, x)) for row in rows]
    assert exact_solve(rows, b) == x


def test_rank_deficiency():
    with pytest.raises(NonUniqueSolution):
        exact_solve([[1, 1], [2, 2], [3, 3]], [2, 4, 6])


def test_zero_unknowns():
    assert exact_solve([[], []], [0, 0]) == []
    with pytest.raises(InconsistentSystem):
        exact_solve([[], []], [0, 1])


def test_more_unknowns_than_equations():
    with pytest.raises(ValueError):
        exact_solve([[1, 2]], [3])


def test_solve_integer():
    assert solve_integer([[2, 0], [0, 3], [2, 3]], [4, 9, 13]) == [2, 3]
    with pytest.raises(NonIntegerSolution):
        solve_integer([[2]], [3])
