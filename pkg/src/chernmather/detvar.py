"""Rank strata of square matrices: class polynomials and Euler obstructions.

For the space of n x n matrices, projectivized in P^(n^2 - 1), the locus
tau_{n,r} of matrices with kernel of dimension at least r has codimension
r^2.  Its Chern-Mather class polynomial q_{n,r}(H) comes from a weighted
integral over the Grassmannian G(r, n):

    q_{n,r}(d) = integral over G(r,n) of  c(S^v tensor Q)
        * sum_k (1+d)^(n(n-r)-k) c_k((Q^v)^n)
        * sum_k d^(nr-k)        c_k((S^v)^n)
        minus d^(n^2) * C(n, r),

computed here with d symbolic in one exact pass.  Alternating binomial
sums of the q polynomials give the class polynomials of the open rank
strata, and feeding those to the strata solver reproduces the binomial
table of local Euler obstructions Eu = C(r, k) together with the origin
column C(n, k).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .classpoly import ClassPoly, involute
from .grassmann import (
    BundleChern,
    ChowElement,
    IntPoly,
    chern_dual,
    chern_power,
    chern_tensor,
    integrate,
    taut_quot,
    taut_sub_dual,
)
from .strata import EulerTable, StratifiedPair, Stratum, chern_mather, euler_table


def stratum_dim(n: int, k: int) -> int:
    """Projective dimension of tau_{n,k}: n^2 - k^2 - 1."""
    return n * n - k * k - 1


def _weighted_total(bundle: BundleChern, weights: list[IntPoly]) -> ChowElement:
    """sum_k weights[k] * c_k(bundle)."""
    r, n = bundle.classes[0].r, bundle.classes[0].n
    out = ChowElement.zero(r, n)
    for w, c in zip(weights, bundle.classes):
        out = out + c.scale(w)
    return out


@lru_cache(maxsize=None)
def q_poly(n: int, r: int) -> ClassPoly:
    """The degree-weighted Grassmannian integral for tau_{n,r}, as a class
    polynomial mod H^(n^2)."""
    if not 0 <= r <= n:
        raise ValueError(f"rank parameter {r} out of range for n={n}")
    d = IntPoly.var()
    s_dual_n = chern_power(taut_sub_dual(r, n), n)
    q_dual_n = chern_power(chern_dual(taut_quot(r, n)), n)
    tangent = chern_tensor(taut_sub_dual(r, n), taut_quot(r, n)).total()

    a = n * (n - r)
    f1 = _weighted_total(q_dual_n, [(1 + d) ** (a - k) for k in range(a + 1)])
    b = n * r
    f2 = _weighted_total(s_dual_n, [d ** (b - k) for k in range(b + 1)])

    total = integrate(tangent * f1 * f2)
    if isinstance(total, int):
        total = IntPoly.const(total)
    q = total - IntPoly.monomial(n * n, comb(n, r))
    if q.degree >= n * n:
        raise ArithmeticError(
            f"top-degree terms failed to cancel for q_({n},{r})"
        )
    coeffs = [q.coeff(k) for k in range(n * n)]
    return ClassPoly(coeffs, n * n)


@lru_cache(maxsize=None)
def csm_stratum(n: int, k: int) -> ClassPoly:
    """Class polynomial of the open stratum (kernel dimension exactly k):
    the alternating binomial combination of the q polynomials."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"stratum index {k} out of range for n={n}")
    out = ClassPoly.zero(n * n)
    for r in range(k, n):
        term = comb(r, k) * q_poly(n, r)
        out = out + (term if (r - k) % 2 == 0 else -term)
    return out


def duality_check(n: int, r: int) -> bool:
    """Whether the duality transform carries the signed q polynomial of
    tau_{n,r} to the signed one of tau_{n,n-r}."""
    if not 1 <= r <= n - 1:
        raise ValueError(f"rank parameter {r} out of range for n={n}")
    lhs = involute(q_poly(n, r).signed(), n * n - 1)
    return lhs == q_poly(n, n - r).signed()


def build_pair(n: int) -> StratifiedPair:
    """Solver input for the rank stratification; the family is self-dual
    with tau_{n,k} paired to tau_{n,n-k}."""
    if n < 2:
        raise ValueError("need n >= 2")
    strata = [
        Stratum(f"tau_{n}_{k}", csm_stratum(n, k), stratum_dim(n, k))
        for k in range(n)
    ]
    dual = [
        Stratum(f"tau_{n}_{k}_dual", csm_stratum(n, k), stratum_dim(n, k))
        for k in range(n)
    ]
    pairing = [(k, n - k) for k in range(1, n)]
    return StratifiedPair(n * n, strata, dual, pairing)


def eu_table_det(n: int) -> EulerTable:
    """Euler obstruction table of the rank strata, through the solver.

    The binomial values are reproduced, not assumed: the table is checked
    against Eu = C(r, k) and origin column C(n, k) after solving.
    """
    table = euler_table(build_pair(n))
    for k in range(n):
        for r in range(n):
            expect = comb(r, k) if r >= k else 0
            assert table.primal[k][r] == expect, (
                f"entry ({k},{r}) is {table.primal[k][r]}, expected {expect}"
            )
        assert table.origin[k] == comb(n, k), (
            f"origin entry {k} is {table.origin[k]}, expected {comb(n, k)}"
        )
    return table


def chern_mather_det(n: int, r: int) -> ClassPoly:
    """q_{n,r}(H), cross-validated against the solver's weighted sum."""
    if not 0 <= r <= n - 1:
        raise ValueError(f"rank parameter {r} out of range for n={n}")
    q = q_poly(n, r)
    pair = build_pair(n)
    table = euler_table(pair)
    alpha = table.primal[r][r:]
    assert chern_mather(pair, r, alpha) == q, (
        f"solver Chern-Mather class disagrees with q_({n},{r})"
    )
    return q
