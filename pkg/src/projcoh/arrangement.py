"""Arrangements of rational subtori of the 6-torus R^6 / Z^6.

A subtorus is ``offset + span_R(stabilizer)`` taken modulo Z^6, where the
stabilizer is a saturated sublattice.  Offsets are kept in a canonical
form so that subtori can be deduplicated by plain equality.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import floor
from typing import Sequence

from .exactlin import (
    IntMatrix,
    Sublattice,
    lattice_intersect,
    lattice_sum,
    rank,
    saturate,
    snf,
    solve_rational,
    unimodular_completion,
)

log = logging.getLogger(__name__)

AMBIENT = 6


class ArrangementError(ValueError):
    pass


class NonGenericArrangement(ArrangementError):
    pass


class EmptySeed(ArrangementError):
    pass


def _frac_vector(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _mat_vec(rows: Sequence[Sequence[int]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((a * x for a, x in zip(r, v)), Fraction(0)) for r in rows]


@dataclass(frozen=True)
class Subtorus:
    stabilizer: Sublattice
    offset: tuple[Fraction, ...]

    @classmethod
    def make(cls, stabilizer_vectors, offset=None, n: int = AMBIENT) -> Subtorus:
        """Build and canonicalize from raw generators and an offset."""
        stab = Sublattice.span(stabilizer_vectors, n)
        off = _frac_vector(offset if offset is not None else [0] * n)
        return canonicalize(cls(stab, off))

    @property
    def dim(self) -> int:
        return self.stabilizer.rank

    def __repr__(self) -> str:
        off = "(" + ", ".join(str(x) for x in self.offset) + ")"
        return f"Subtorus(dim={self.dim}, basis={[list(b) for b in self.stabilizer.basis]}, offset={off})"


def _complement_rows(stab: Sublattice) -> tuple[tuple[int, ...], ...]:
    # rows of the adapted unimodular matrix; cached on the sublattice value
    hit = _COMPLETION_CACHE.get(stab)
    if hit is None:
        hit = tuple(tuple(r) for r in unimodular_completion(stab).tolist())
        _COMPLETION_CACHE[stab] = hit
    return hit


_COMPLETION_CACHE: dict[Sublattice, tuple[tuple[int, ...], ...]] = {}


def _inverse_unimodular(rows) -> list[list[Fraction]]:
    n = len(rows)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        cols.append(solve_rational([[rows[i][k] for i in range(n)] for k in range(n)], e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


_INVERSE_CACHE: dict[tuple, list[list[Fraction]]] = {}


def canonicalize(t: Subtorus) -> Subtorus:
    """Saturate the stabilizer and reduce the offset to its canonical representative.

    With W unimodular and W @ B = [I; 0], the offset's W-coordinates split into
    stabilizer directions (set to zero) and transverse directions (reduced
    into [0, 1)).  The representative is W^{-1} applied to that vector.
    """
    stab = saturate(t.stabilizer) if t.stabilizer.rank else t.stabilizer
    n = stab.ambient_rank
    w = _complement_rows(stab)
    coords = _mat_vec(w, t.offset)
    r = stab.rank
    reduced = [Fraction(0)] * r + [x - floor(x) for x in coords[r:]]
    winv = _INVERSE_CACHE.get(w)
    if winv is None:
        winv = _inverse_unimodular(w)
        _INVERSE_CACHE[w] = winv
    off = tuple(sum((a * x for a, x in zip(row, reduced)), Fraction(0)) for row in winv)
    return Subtorus(stab, off)


def transverse_coordinates(t: Subtorus) -> tuple[Fraction, ...]:
    """Offset coordinates along the directions transverse to the stabilizer, in [0,1)."""
    w = _complement_rows(t.stabilizer)
    coords = _mat_vec(w, t.offset)
    return tuple(x - floor(x) for x in coords[t.stabilizer.rank:])


def _in_span_plus_integers(v: Sequence[Fraction], s: Sublattice) -> bool:
    """Is v in span_R(s) + Z^n, for saturated s?"""
    w = _complement_rows(s)
    coords = _mat_vec(w, v)
    return all(x.denominator == 1 for x in coords[s.rank:])


def contains(big: Subtorus, small: Subtorus) -> bool:
    """Is ``small`` a subset of ``big`` inside the torus?"""
    if small.dim > big.dim:
        return False
    vbig = big.stabilizer
    if small.dim and any(
        solve_rational(vbig.basis, b) is None for b in small.stabilizer.basis
    ):
        return False
    diff = [a - b for a, b in zip(small.offset, big.offset)]
    return _in_span_plus_integers(diff, vbig)


def act_on_subtorus(g: IntMatrix, t: Subtorus) -> Subtorus:
    """Image of t under the torus automorphism x -> g x."""
    n = t.stabilizer.ambient_rank
    if g.shape != (n, n):
        raise ValueError(f"group element of shape {g.shape} acting on Z^{n}")
    rows = g.tolist()
    basis = [g.apply(b) for b in t.stabilizer.basis]
    off = _mat_vec(rows, t.offset)
    return canonicalize(Subtorus(Sublattice.span(basis, n), tuple(off)))


def intersect_subtori(t1: Subtorus, t2: Subtorus) -> list[Subtorus]:
    """Connected components of t1 meet t2, sorted canonically.

    Components are indexed by the finite group (Z^n meet (V1+V2)) / (G1+G2),
    where Vi are the real spans and Gi the stabilizers.
    """
    n = t1.stabilizer.ambient_rank
    g1, g2 = t1.stabilizer, t2.stabilizer
    if t1 == t2:
        return [t1]
    joint = lattice_sum(g1, g2)
    sat = saturate(joint)
    diff = [a - b for a, b in zip(t1.offset, t2.offset)]
    w = _complement_rows(sat)
    coords = _mat_vec(w, diff)
    r = sat.rank
    if any(x.denominator != 1 for x in coords[r:]):
        return []
    # move diff into V1 + V2 by an integer shift, then split it
    shift = [Fraction(0)] * r + [Fraction(x) for x in coords[r:]]
    winv = _INVERSE_CACHE.get(w) or _inverse_unimodular(w)
    shift_vec = [sum((a * x for a, x in zip(row, shift)), Fraction(0)) for row in winv]
    d = [a - b for a, b in zip(diff, shift_vec)]  # in V1 + V2
    # t1.offset - t2.offset = d + integer; d = v2 - v1, base point t1.offset + v1
    coeff = solve_rational(g1.basis + g2.basis, d)
    k1 = g1.rank
    v1 = [-sum((c * b[i] for c, b in zip(coeff[:k1], g1.basis)), Fraction(0)) for i in range(n)]
    base = [a + b for a, b in zip(t1.offset, v1)]
    stab = lattice_intersect(g1, g2)
    if stab.rank:
        stab = saturate(stab)
    reps = _coset_representatives(joint, sat)
    out = set()
    for m in reps:
        # m = y - v with y in V1, v in V2
        c = solve_rational(g1.basis + g2.basis, m)
        y = [sum((x * b[i] for x, b in zip(c[:k1], g1.basis)), Fraction(0)) for i in range(n)]
        point = [a + b for a, b in zip(base, y)]
        out.add(canonicalize(Subtorus(stab, tuple(point))))
    return sorted(out, key=subtorus_sort_key)


def _coset_representatives(sub: Sublattice, sat: Sublattice) -> list[list[int]]:
    """Representatives of sat / sub for a full-rank sublattice sub of sat."""
    r = sat.rank
    coords = IntMatrix.from_columns([sat.coordinates(b) for b in sub.basis], r)
    d, u, _ = snf(coords)
    diag = [d[i, i] for i in range(r)]
    # U coords sub-coords V = D, so sat / sub ~ sum Z/d_i via x -> U x
    uinv = _inverse_unimodular(u.tolist())
    reps = []
    for t in product(*(range(x) for x in diag)):
        x = [sum((a * b for a, b in zip(row, t)), Fraction(0)) for row in uinv]
        assert all(v.denominator == 1 for v in x)
        reps.append([sum(int(xi) * b[i] for xi, b in zip(x, sat.basis)) for i in range(sat.ambient_rank)])
    return reps


def subtorus_sort_key(t: Subtorus):
    return (t.dim, t.stabilizer.basis, t.offset)


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    four_tori: tuple[Subtorus, ...]
    two_tori: tuple[Subtorus, ...]
    points: tuple[Subtorus, ...]
    incidence_12: tuple[tuple[int, ...], ...]
    incidence_02: tuple[tuple[int, ...], ...]
    incidence_01: tuple[tuple[int, ...], ...]
    warnings: tuple[str, ...] = field(default=())

    @property
    def L2(self) -> int:
        return len(self.four_tori)

    @property
    def L1(self) -> int:
        return len(self.two_tori)

    @property
    def L0(self) -> int:
        return len(self.points)

    @property
    def L1_alpha(self) -> list[int]:
        return [len(x) for x in self.incidence_12]

    @property
    def L0_alpha(self) -> list[int]:
        return [len(x) for x in self.incidence_02]

    @property
    def L0_theta(self) -> list[int]:
        return [len(x) for x in self.incidence_01]

    def counts(self) -> dict:
        l0t = self.L0_theta
        return {
            "L2": self.L2,
            "L1": self.L1,
            "L0": self.L0,
            "sum_L1_alpha": sum(self.L1_alpha),
            "sum_L0_alpha": sum(self.L0_alpha),
            "sum_L0_theta": sum(l0t),
            "sum_alpha_theta_L0_theta": sum(l0t[t] for inc in self.incidence_12 for t in inc),
        }

    def stabilizer_span_rank(self) -> int:
        vecs = [b for t in self.four_tori for b in t.stabilizer.basis]
        return rank(IntMatrix.from_columns(vecs, AMBIENT)) if vecs else 0


def orbit(group, seeds: Sequence[Subtorus]) -> list[Subtorus]:
    seen = set()
    for s in seeds:
        for g in group:
            seen.add(act_on_subtorus(g, s))
    return sorted(seen, key=subtorus_sort_key)


def _pairwise(items, fn, threads: int):
    pairs = list(combinations(range(len(items)), 2))
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(lambda ij: fn(items[ij[0]], items[ij[1]]), pairs))
    else:
        results = [fn(items[i], items[j]) for i, j in pairs]
    return pairs, results


def build_arrangement(group, seeds: Sequence[Subtorus], threads: int = 1) -> Arrangement:
    """Orbit the seed 4-tori and compute all 2-dimensional and point intersections."""
    if not seeds:
        raise EmptySeed("no seed tori given")
    for s in seeds:
        if s.dim != 4:
            raise ArrangementError(f"seed torus has stabilizer rank {s.dim}, expected 4")
    four = orbit(group, seeds)
    log.info("orbit: %d four-tori", len(four))

    pairs, results = _pairwise(four, intersect_subtori, threads)
    two: set[Subtorus] = set()
    for (i, j), comps in zip(pairs, results):
        for c in comps:
            if c.dim == 2:
                two.add(c)
            elif c.dim != 0:
                raise NonGenericArrangement(
                    f"four-tori {i} and {j} meet in a {c.dim}-dimensional component"
                )
    two_l = sorted(two, key=subtorus_sort_key)
    log.info("%d two-tori", len(two_l))

    pairs, results = _pairwise(two_l, intersect_subtori, threads)
    pts: set[Subtorus] = set()
    for (i, j), comps in zip(pairs, results):
        for c in comps:
            if c.dim != 0:
                raise NonGenericArrangement(
                    f"two-tori {i} and {j} meet in a {c.dim}-dimensional component"
                )
            pts.add(c)
    pts_l = sorted(pts, key=subtorus_sort_key)
    log.info("%d points", len(pts_l))

    inc12 = tuple(
        tuple(t for t, th in enumerate(two_l) if contains(a, th)) for a in four
    )
    inc02 = tuple(tuple(p for p, pt in enumerate(pts_l) if contains(a, pt)) for a in four)
    inc01 = tuple(tuple(p for p, pt in enumerate(pts_l) if contains(th, pt)) for th in two_l)

    # every lower-dimensional piece came from a pair, so it must have two parents
    for t in range(len(two_l)):
        if sum(1 for inc in inc12 if t in inc) < 2:
            raise ArrangementError(f"two-torus {t} lies in fewer than two four-tori")
    for p in range(len(pts_l)):
        if sum(1 for inc in inc01 if p in inc) < 2:
            raise ArrangementError(f"point {p} lies in fewer than two two-tori")

    warnings = []
    span = Arrangement(tuple(four), (), (), (), (), ()).stabilizer_span_rank()
    if span < AMBIENT:
        warnings.append(
            f"stabilizers of the four-tori span rank {span} < {AMBIENT}; "
            "H_1(A) = Z^6 is not guaranteed"
        )
    return Arrangement(tuple(four), tuple(two_l), tuple(pts_l), inc12, inc02, inc01, tuple(warnings))
