"""Homology of the singular set A from its Mayer-Vietoris first page.

Only the differential d1_{1,2} is built explicitly.  It maps the Lambda^2
homology of every incidence pair (alpha, theta) into the Lambda^2 homology
of the four-torus alpha (sign +1) and of the two-torus theta (sign -1).
The remaining bookkeeping collapses into the count formulas for f and chi.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement
from .exactlin import (
    AbelianGroup,
    IntMatrix,
    NotPrimeError,
    cokernel,
    is_prime,
    rank,
    rank_mod_p,
)
from .wedgelat import wedge_vectors


class IncidenceBroken(ValueError):
    pass


class NegativeF(ValueError):
    pass


@dataclass(frozen=True)
class D1Matrix:
    matrix: IntMatrix
    row_blocks: tuple[tuple[str, int, int, int], ...]  # (kind, index, start, stop)
    col_blocks: tuple[tuple[int, int], ...]  # (alpha, theta) per column


@dataclass(frozen=True)
class AHomology:
    h: tuple[AbelianGroup, ...]
    f: int
    chi: int
    coker_d1: AbelianGroup
    ker_d1_rank: int
    d1_rank: int


def build_d1(arr: Arrangement) -> D1Matrix:
    l2, l1 = arr.L2, arr.L1
    nrows = 6 * l2 + l1
    row_blocks = [("alpha", a, 6 * a, 6 * a + 6) for a in range(l2)]
    row_blocks += [("theta", t, 6 * l2 + t, 6 * l2 + t + 1) for t in range(l1)]
    columns = []
    col_blocks = []
    for a, inc in enumerate(arr.incidence_12):
        big = arr.four_tori[a].stabilizer
        for t in inc:
            small = arr.two_tori[t].stabilizer
            try:
                coeffs = [big.coordinates(b) for b in small.basis]
            except ValueError as exc:
                raise IncidenceBroken(f"two-torus {t} is not inside four-torus {a}") from exc
            col = [0] * nrows
            col[6 * a: 6 * a + 6] = wedge_vectors(coeffs, 4)
            col[6 * l2 + t] = -1
            columns.append(col)
            col_blocks.append((a, t))
    return D1Matrix(IntMatrix.from_columns(columns, nrows), tuple(row_blocks), tuple(col_blocks))


def euler_characteristic(arr: Arrangement) -> int:
    c = arr.counts()
    return c["L0"] - c["sum_L0_alpha"] + c["sum_alpha_theta_L0_theta"] - c["sum_L0_theta"]


def f_correction(arr: Arrangement, chi: int | None = None) -> int:
    if chi is None:
        chi = euler_characteristic(arr)
    return -3 * arr.L2 - arr.L1 + sum(arr.L1_alpha) + 5 + chi


def homology_of_A(arr: Arrangement, d1: D1Matrix | None = None) -> AHomology:
    if d1 is None:
        d1 = build_d1(arr)
    chi = euler_characteristic(arr)
    f = f_correction(arr, chi)
    if f < 0:
        raise NegativeF(f"f = {f} < 0; the arrangement violates the hypotheses")
    coker = cokernel(d1.matrix)
    r = rank(d1.matrix) if d1.matrix.cols else 0
    ker = d1.matrix.cols - r
    h = (
        AbelianGroup(1),
        AbelianGroup(6),
        coker + AbelianGroup(f),
        AbelianGroup(4 * arr.L2 + ker),
        AbelianGroup(arr.L2),
    )
    return AHomology(h, f, chi, coker, ker, r)


def homology_of_A_mod_p(arr: Arrangement, p: int, d1: D1Matrix | None = None) -> list[int]:
    """Ranks of H_0..H_4(A; F_p), using elimination mod p only."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if d1 is None:
        d1 = build_d1(arr)
    f = f_correction(arr)
    m = d1.matrix
    r = rank_mod_p(m, p) if m.cols else 0
    return [1, 6, m.rows - r + f, 4 * arr.L2 + m.cols - r, arr.L2]
