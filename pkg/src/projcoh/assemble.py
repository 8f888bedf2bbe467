"""Cohomology of the tiling space from H_*(A) and the groups S_k.

For k = 0..3 the free rank of H^k is

    rk H_{5-k}(A) + rk S_k + rk S_{k+1} - C(6, k+1),

the torsion of H^2 is that of S_2, and the torsion of H^3 is that of
H_2(A), the latter only once S_3 is known to be free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

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
from .mvss import AHomology, build_d1, homology_of_A, homology_of_A_mod_p
from .skgroups import (
    LAMBDA3,
    LAMBDA4,
    S3Status,
    SkGroups,
    compute_sk,
    lambda4_matrix,
    m1_generators,
    m1prime_generators,
)


class InconsistentRanks(ValueError):
    pass


@dataclass
class CohomologyResult:
    h: tuple[AbelianGroup, ...]
    chi: int
    chi_betti: int
    s3_status: S3Status
    homology_A: AHomology
    sk: SkGroups
    counts: dict
    rank_table: dict = field(default_factory=dict)
    torsion_sources: dict = field(default_factory=dict)
    h3_torsion_bracket: dict | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def h0(self) -> AbelianGroup:
        return self.h[0]

    @property
    def h1(self) -> AbelianGroup:
        return self.h[1]

    @property
    def h2(self) -> AbelianGroup:
        return self.h[2]

    @property
    def h3(self) -> AbelianGroup:
        return self.h[3]


def _free_ranks(h_a: list[int], s: list[int]) -> list[int]:
    # h_a[j] = rank of H_j(A) for j = 0..4; H_5(A) = 0
    h_a = list(h_a) + [0]
    return [h_a[5 - k] + s[k] + s[k + 1] - comb(6, k + 1) for k in range(4)]


def cohomology(arr: Arrangement, primes: tuple[int, ...] = ()) -> CohomologyResult:
    d1 = build_d1(arr)
    ha = homology_of_A(arr, d1)
    sk = compute_sk(arr)
    verdict = sk.s3_verdict
    ranks = _free_ranks([g.free_rank for g in ha.h], sk.free_ranks())
    if any(r < 0 for r in ranks):
        raise InconsistentRanks(f"negative free rank in {ranks}")

    warnings = list(arr.warnings)
    h2 = AbelianGroup(ranks[2], sk.s2.invariant_factors)
    # under an undecided S_3 the H_2(A) part is still a lower bound on the torsion
    h3 = AbelianGroup(ranks[3], ha.h[2].invariant_factors)
    bracket = None
    if verdict.status is S3Status.INDETERMINATE:
        lower_quotient = cokernel(verdict.lower.matrix)
        bracket = {
            "from_H2A": list(ha.h[2].invariant_factors),
            "possible_S3_torsion": list(lower_quotient.invariant_factors),
            "note": "S_3 lies between Lambda^3/M2 (free) and Lambda^3/(M1+M1'); "
                    "H^3 torsion is not determined",
        }
        warnings.append("S_3 freeness undecided: H^3 torsion shown is only the H_2(A) part")
    h = (AbelianGroup(ranks[0]), AbelianGroup(ranks[1]), h2, h3)

    chi_betti = ranks[3] - ranks[2] + ranks[1] - ranks[0]
    if chi_betti != ha.chi:
        warnings.append(
            f"alternating Betti sum {chi_betti} differs from count-formula chi {ha.chi}"
        )

    result = CohomologyResult(
        h=h,
        chi=ha.chi,
        chi_betti=chi_betti,
        s3_status=verdict.status,
        homology_A=ha,
        sk=sk,
        counts=arr.counts(),
        torsion_sources={
            "H2": {"source": "S_2", "factors": list(sk.s2.invariant_factors)},
            "H3": {"source": "coker d1_{1,2}", "factors": list(ha.coker_d1.invariant_factors)},
        },
        h3_torsion_bracket=bracket,
        warnings=warnings,
    )
    result.rank_table["Q"] = ranks
    for p in primes:
        result.rank_table[str(p)] = ranks_mod_p(arr, p, d1=d1)["H"]
    return result


def ranks_mod_p(arr: Arrangement, p: int, d1=None) -> dict:
    """All F_p ranks from elimination mod p; no integral normal form is used."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if d1 is None:
        d1 = build_d1(arr)
    h_a = homology_of_A_mod_p(arr, p, d1)
    l4 = lambda4_matrix(arr)
    s2 = LAMBDA4 - (rank_mod_p(l4, p) if l4.cols else 0)
    lower = m1_generators(arr) + m1prime_generators(arr)
    s3 = LAMBDA3 - (rank_mod_p(IntMatrix.from_columns(lower, LAMBDA3), p) if lower else 0)
    s = [1, 6, s2, s3, 0]
    return {"H_A": h_a, "S": s, "H": _free_ranks(h_a, s)}


@dataclass
class VerificationReport:
    prime: int
    checks: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        # skipped checks carry passed=None and do not count either way
        return all(c["passed"] is not False for c in self.checks)

    def add(self, name: str, lhs: int, rhs: int, skip: bool = False):
        self.checks.append({"prime": self.prime, "identity": name, "lhs": lhs, "rhs": rhs,
                            "passed": None if skip else lhs == rhs})


def verify_mod_p(arr: Arrangement, result: CohomologyResult, p: int) -> VerificationReport:
    """Check the universal-coefficient identities over F_p against the integral result."""
    fp = ranks_mod_p(arr, p)
    rep = VerificationReport(p)
    ha = result.homology_A.h
    for k in range(5):
        tp = ha[k].p_torsion_rank(p) + (ha[k - 1].p_torsion_rank(p) if k else 0)
        rep.add(f"rk H_{k}(A;F_p) - rk H_{k}(A;Q) = T_p(H_{k}(A)) + T_p(H_{k-1}(A))",
                fp["H_A"][k] - ha[k].free_rank, tp)

    # these presuppose a free S_3; with an undecided S_3 they are recorded but skipped
    open_s3 = result.s3_status is S3Status.INDETERMINATE
    m1 = m1_generators(arr)
    s3_q = LAMBDA3 - (rank(IntMatrix.from_columns(m1, LAMBDA3)) if m1 else 0)
    rep.add("rk S_3(Q) = rk S_3(F_p)", s3_q, fp["S"][3], skip=open_s3)
    rep.add("rk S_2(F_p) - rk S_2(Q) = T_p(S_2(Z))",
            fp["S"][2] - result.sk.s2.free_rank, result.sk.s2.p_torsion_rank(p))

    h = result.h
    q = result.rank_table["Q"]
    rep.add("rk H^3(F_p) - rk H^3(Q) = T_p(H_2(A;Z))",
            fp["H"][3] - q[3], ha[2].p_torsion_rank(p), skip=open_s3)
    for k in range(4):
        nxt = h[k + 1].p_torsion_rank(p) if k < 3 else 0
        rep.add(f"rk H^{k}(F_p) - rk H^{k}(Q) = T_p(H^{k}) + T_p(H^{k + 1})",
                fp["H"][k] - q[k], h[k].p_torsion_rank(p) + nxt, skip=open_s3 and k >= 2)
    return rep


def check_invariants(arr: Arrangement, result: CohomologyResult) -> list[str]:
    """Internal consistency checks; returns a list of violated statements."""
    bad = []
    ha = result.homology_A
    if ha.h[0] != AbelianGroup(1):
        bad.append("H_0(A) != Z")
    if ha.h[1] != AbelianGroup(6):
        bad.append("H_1(A) != Z^6")
    if not ha.h[3].is_free() or not ha.h[4].is_free():
        bad.append("H_3(A) or H_4(A) has torsion")
    if ha.f < 0:
        bad.append("f < 0")
    if ha.h[4].free_rank != arr.L2:
        bad.append("rk H_4(A) != L2")
    if ha.d1_rank + ha.ker_d1_rank != sum(arr.L1_alpha):
        bad.append("rank + nullity of d1 != number of incidences")
    if result.h0 != AbelianGroup(1):
        bad.append("H^0 != Z")
    if not result.h0.is_free() or not result.h1.is_free():
        bad.append("H^0 or H^1 has torsion")
    if result.h2.invariant_factors != result.sk.s2.invariant_factors:
        bad.append("torsion of H^2 differs from torsion of S_2")
    if result.s3_status is not S3Status.INDETERMINATE:
        if result.h3.invariant_factors != ha.coker_d1.invariant_factors:
            bad.append("torsion of H^3 differs from torsion of coker d1")
        if result.sk.s3_verdict.s3 is None or not result.sk.s3_verdict.s3.is_free():
            bad.append("S_3 reported free but has torsion")
    v = result.sk.s3_verdict
    if not (v.m1 <= v.lower and v.lower <= v.m2):
        bad.append("M1 <= M1 + M1' <= M2 fails")
    return bad
