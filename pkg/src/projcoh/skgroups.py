"""The cokernels S_k of the map H_{5-k}(A) -> H_{5-k}(T^6).

S_0 and S_1 are forced (Z and Z^6), S_k vanishes above 3, S_2 is the
quotient of Lambda^4 Z^6 by the top wedges of the four-torus stabilizers.
S_3 is only pinned down by bounds on the image of the map in Lambda^3 Z^6:

    M1 = <Lambda^3 G_alpha>  <=  image  <=  saturate(M1) = M2

plus the extra cycles b1 ^ b2 ^ v built from pairs of four-tori meeting in
a two-torus with stabilizer <b1, b2>.  Whenever a lower bound reaches M2
the quotient Lambda^3 Z^6 / M2 is S_3 and it is free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arrangement import Arrangement
from .exactlin import AbelianGroup, IntMatrix, Sublattice, cokernel, lattice_sum, saturate
from .wedgelat import wedge_generators, wedge_vectors

LAMBDA3 = 20
LAMBDA4 = 15


class S3Status(str, Enum):
    FREE_BY_M1 = "FreeByM1"
    FREE_BY_M1_PRIME = "FreeByM1Prime"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class S3Verdict:
    m1: Sublattice
    m1prime: Sublattice
    m2: Sublattice
    status: S3Status
    s3: AbelianGroup | None

    @property
    def lower(self) -> Sublattice:
        return lattice_sum(self.m1, self.m1prime)

    @property
    def free_rank(self) -> int:
        return LAMBDA3 - self.m2.rank


@dataclass(frozen=True)
class SkGroups:
    s0: AbelianGroup
    s1: AbelianGroup
    s2: AbelianGroup
    s3_verdict: S3Verdict

    def free_ranks(self) -> list[int]:
        """Free ranks of S_0..S_4 (S_3 from the rational rank, valid in every case)."""
        return [self.s0.free_rank, self.s1.free_rank, self.s2.free_rank,
                self.s3_verdict.free_rank, 0]


def lambda4_matrix(arr: Arrangement) -> IntMatrix:
    cols = [wedge_generators(t.stabilizer, 4)[0] for t in arr.four_tori]
    return IntMatrix.from_columns(cols, LAMBDA4)


def compute_s2(arr: Arrangement) -> AbelianGroup:
    return cokernel(lambda4_matrix(arr))


def m1_generators(arr: Arrangement) -> list[list[int]]:
    return [w for t in arr.four_tori for w in wedge_generators(t.stabilizer, 3)]


def m1prime_generators(arr: Arrangement) -> list[list[int]]:
    out = []
    for th in arr.two_tori:
        b1, b2 = th.stabilizer.basis
        for i in range(6):
            e = [0] * 6
            e[i] = 1
            out.append(wedge_vectors([b1, b2, e]))
    return out


def compute_s3(arr: Arrangement) -> S3Verdict:
    m1 = Sublattice.span(m1_generators(arr), LAMBDA3)
    m2 = saturate(m1)
    m1p = Sublattice.span(m1prime_generators(arr), LAMBDA3)
    if m1 == m2:
        status = S3Status.FREE_BY_M1
    elif lattice_sum(m1, m1p) == m2:
        status = S3Status.FREE_BY_M1_PRIME
    else:
        status = S3Status.INDETERMINATE
    s3 = None
    if status is not S3Status.INDETERMINATE:
        s3 = cokernel(m2.matrix) if m2.rank else AbelianGroup(LAMBDA3)
    return S3Verdict(m1, m1p, m2, status, s3)


def compute_sk(arr: Arrangement) -> SkGroups:
    return SkGroups(AbelianGroup(1), AbelianGroup(6), compute_s2(arr), compute_s3(arr))
