"""Brute-force cross-checks on a finite covering grid of the torus.

Every subtorus with saturated stabilizer G and offset o meets the grid
(1/q)Z^6 / Z^6, for q a multiple of o's denominators, exactly in the coset
q*o + (G mod q).  Intersections of two subtori can then be enumerated as
plain set intersections, with no normal forms involved.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd, lcm

from .arrangement import Subtorus, contains, intersect_subtori
from .exactlin import IntMatrix, det

GridPoint = tuple[int, ...]


def grid_points(t: Subtorus, q: int) -> set[GridPoint]:
    """Points k/q (k mod q) of the covering grid that lie on t."""
    start = []
    for x in t.offset:
        y = x * q
        if y.denominator != 1:
            raise ValueError(f"offset {t.offset} is not on the 1/{q} grid")
        start.append(int(y) % q)
    gens = [tuple(b_i % q for b_i in b) for b in t.stabilizer.basis]
    seen = {tuple(start)}
    frontier = [tuple(start)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = tuple((a + b) % q for a, b in zip(p, g))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def _rank_and_minor_gcd(columns) -> tuple[int, int]:
    n = len(columns[0]) if columns else 0
    for r in range(min(n, len(columns)), 0, -1):
        g = 0
        for cols in combinations(columns, r):
            for rows in combinations(range(n), r):
                g = gcd(g, det(IntMatrix.from_rows([[c[i] for c in cols] for i in rows])))
        if g:
            return r, g
    return 0, 1


def oracle_denominator(t1: Subtorus, t2: Subtorus) -> int:
    """Grid size fine enough to see every component of t1 meet t2.

    Offsets' common denominator times the index of G1 + G2 in its
    saturation, the latter as the gcd of maximal minors.
    """
    den = 1
    for x in t1.offset + t2.offset:
        den = lcm(den, x.denominator)
    cols = [list(b) for b in t1.stabilizer.basis + t2.stabilizer.basis]
    _, index = _rank_and_minor_gcd(cols) if cols else (0, 1)
    return den * index


def point_subtorus(p: GridPoint, q: int, n: int = 6) -> Subtorus:
    from fractions import Fraction
    from .exactlin import Sublattice

    return Subtorus(Sublattice.zero(n), tuple(Fraction(x, q) for x in p))


def check_intersection(t1: Subtorus, t2: Subtorus, components=None, q: int | None = None) -> list[str]:
    """Compare an algebraic component list with the grid enumeration.

    Returns a list of problems; empty means the two agree.
    """
    if components is None:
        components = intersect_subtori(t1, t2)
    if q is None:
        q = oracle_denominator(t1, t2)
    common = grid_points(t1, q) & grid_points(t2, q)
    problems = []
    for c in components:
        if not (contains(t1, c) and contains(t2, c)):
            problems.append(f"component {c} not inside both tori")
    hits = [0] * len(components)
    for p in common:
        pt = point_subtorus(p, q)
        owners = [i for i, c in enumerate(components) if contains(c, pt)]
        if len(owners) != 1:
            problems.append(f"grid point {p}/{q} lies in {len(owners)} components")
        for i in owners:
            hits[i] += 1
    for i, h in enumerate(hits):
        if h == 0:
            problems.append(f"component {i} has no grid points at q={q}")
    if not common and components:
        problems.append("grid sees an empty intersection")
    return problems


def sample_pair_checks(tori, k: int, seed: int = 0, max_q: int = 12) -> list[dict]:
    """Run check_intersection on up to k random pairs whose grid fits under max_q."""
    rng = random.Random(seed)
    pairs = list(combinations(range(len(tori)), 2))
    rng.shuffle(pairs)
    out = []
    for i, j in pairs:
        if len(out) >= k:
            break
        q = oracle_denominator(tori[i], tori[j])
        if q > max_q:
            continue
        # any multiple of q also sees every component; a finer grid tests more points
        q *= max_q // q
        problems = check_intersection(tori[i], tori[j], q=q)
        out.append({"pair": [i, j], "q": q, "passed": not problems, "problems": problems})
    return out
