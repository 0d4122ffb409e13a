"""Exact solving of small dense linear systems over the rationals.

Systems here are typically overdetermined (one equation per coefficient of
H, a handful of unknowns) and arithmetic is exact, so inconsistency is a
diagnostic, never noise: every row must be satisfied on the nose.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


class LinearSystemError(Exception):
    """Base class for solver failures."""


class InconsistentSystem(LinearSystemError):
    """The equations admit no solution."""


class NonUniqueSolution(LinearSystemError):
    """The equations do not pin the unknowns down (rank deficiency)."""


class NonIntegerSolution(LinearSystemError):
    """The unique rational solution fails to be integral."""


def _as_integer_rows(rows, rhs):
    """Clear denominators row by row; returns integer matrix and vector."""
    out = []
    for row, b in zip(rows, rhs):
        ents = [Fraction(x) for x in row] + [Fraction(b)]
        scale = 1
        for e in ents:
            scale = scale * e.denominator // gcd(scale, e.denominator)
        ints = [int(e * scale) for e in ents]
        out.append(ints)
    return out


def exact_solve(
    rows: Sequence[Sequence], rhs: Sequence, context: str = ""
) -> list[Fraction]:
    """Unique exact solution of A.x = b, fraction-free elimination.

    A must have at least as many rows as columns; the system may be
    overdetermined but has to be consistent on every row.  The returned
    solution is re-substituted into all original equations as a final check.

    Raises InconsistentSystem or NonUniqueSolution, tagging the message with
    `context` so callers can name the offending subsystem.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged coefficient matrix")
    if len(rhs) != m:
        raise ValueError("right-hand side length does not match row count")
    if m < ncols:
        raise ValueError("need at least as many equations as unknowns")

    tag = f" [{context}]" if context else ""
    aug = _as_integer_rows(rows, rhs)

    if ncols == 0:
        if any(r[-1] != 0 for r in aug):
            raise InconsistentSystem(f"no unknowns but nonzero residual{tag}")
        return []

    # Bareiss fraction-free forward elimination; pivot for column k ends
    # up in row k, failure to find one means a free unknown.
    prev = 1
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, m):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            raise NonUniqueSolution(
                f"unknown #{col} is not determined by the equations{tag}"
            )
        aug[rank], aug[sel] = aug[sel], aug[rank]
        p = aug[rank][col]
        for i in range(rank + 1, m):
            fi = aug[i][col]
            for j in range(col, ncols + 1):
                aug[i][j] = (p * aug[i][j] - fi * aug[rank][j]) // prev
        prev = p
        rank += 1

    for i in range(rank, m):
        if aug[i][ncols] != 0:
            raise InconsistentSystem(f"equations are mutually inconsistent{tag}")

    # Back substitution over the echelon rows.
    sol: list[Fraction] = [Fraction(0)] * ncols
    for col in range(ncols - 1, -1, -1):
        row = aug[col]
        acc = Fraction(row[ncols])
        for j in range(col + 1, ncols):
            acc -= row[j] * sol[j]
        sol[col] = acc / row[col]

    # Verify every original equation exactly.
    for row, b in zip(rows, rhs):
        lhs = sum(Fraction(a) * x for a, x in zip(row, sol))
        if lhs != Fraction(b):
            raise InconsistentSystem(f"residual check failed{tag}")
    return sol


def solve_integer(
    rows: Sequence[Sequence], rhs: Sequence, context: str = ""
) -> list[int]:
    """exact_solve plus the demand that every entry clears to an integer."""
    sol = exact_solve(rows, rhs, context)
    tag = f" [{context}]" if context else ""
    for k, x in enumerate(sol):
        if x.denominator != 1:
            raise NonIntegerSolution(f"unknown #{k} solves to {x}, not an integer{tag}")
    return [int(x) for x in sol]
