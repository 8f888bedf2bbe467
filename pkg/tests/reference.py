"""Slow, independent reference implementations used as test oracles.

Nothing here imports projcoh.  The algorithms are deliberately different
from the library's: Euclid on the first nonzero entry instead of smallest
pivots, a gcd/lcm pass to build the divisibility chain, determinantal
divisors for small matrices, brute-force lattice points in boxes.
"""

from itertools import combinations, product
from math import gcd


def det_cofactor(a):
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * det_cofactor(minor)
    return total


def diagonal_by_elementary_ops(m):
    """Diagonalize with row/column Euclid steps; returns the unsorted diagonal."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(i, j) for j in range(t, cols) for i in range(t, rows) if a[i][j]]
        if not nz:
            break
        i, j = nz[0]
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                while a[i][t]:
                    if a[i][t] % a[t][t] == 0:
                        q = a[i][t] // a[t][t]
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                        break
                    q = a[t][t] // a[i][t]
                    a[t] = [x - q * y for x, y in zip(a[t], a[i])]
                    a[t], a[i] = a[i], a[t]
            for j in range(t + 1, cols):
                while a[t][j]:
                    done = False
                    if a[t][j] % a[t][t] == 0:
                        q = a[t][j] // a[t][t]
                        for r in a:
                            r[j] -= q * r[t]
                        break
                    q = a[t][t] // a[t][j]
                    for r in a:
                        r[t] -= q * r[j]
                    for r in a:
                        r[t], r[j] = r[j], r[t]
            if done and all(a[i][t] == 0 for i in range(t + 1, rows)):
                break
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def chain(diag):
    """Turn any diagonal into the Smith divisibility chain by gcd/lcm swaps."""
    d = sorted(x for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    return sorted(d)


def smith_diagonal(m):
    return chain(diagonal_by_elementary_ops(m))


def determinantal_divisors(m):
    """gcd of k x k minors for k = 1..; invariant factors are successive ratios."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    out = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in combinations(range(rows), k):
            for ci in combinations(range(cols), k):
                g = gcd(g, det_cofactor([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def cokernel_reference(m):
    """(free rank, torsion orders > 1) of Z^rows / image(m)."""
    d = smith_diagonal(m)
    rows = len(m)
    return rows - len(d), [x for x in d if x > 1]


def rank_fraction(m):
    from fractions import Fraction

    a = [[Fraction(x) for x in r] for r in m]
    r = 0
    cols = len(a[0]) if a else 0
    for j in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][j]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][j]:
                f = a[i][j] / a[r][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def box_points(basis, n, radius):
    """All integer combinations of basis vectors with coefficients in [-radius, radius]."""
    pts = set()
    for coeffs in product(range(-radius, radius + 1), repeat=len(basis)):
        pts.add(tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(n)))
    return pts


def naive_column_hnf(m):
    """Column Hermite form by smallest-entry Euclid, one row at a time."""
    rows = len(m)
    cols = [list(c) for c in zip(*m)] if m and m[0] else []
    c = 0
    for i in range(rows):
        if c == len(cols):
            break
        while True:
            live = [j for j in range(c, len(cols)) if cols[j][i]]
            if not live:
                break
            j = min(live, key=lambda j: abs(cols[j][i]))
            cols[c], cols[j] = cols[j], cols[c]
            others = [j for j in range(c + 1, len(cols)) if cols[j][i]]
            if not others:
                break
            for j in others:
                q = cols[j][i] // cols[c][i]
                cols[j] = [y - q * x for x, y in zip(cols[c], cols[j])]
        if c < len(cols) and cols[c][i]:
            if cols[c][i] < 0:
                cols[c] = [-x for x in cols[c]]
            for j in range(c):
                q = cols[j][i] // cols[c][i]
                cols[j] = [y - q * x for x, y in zip(cols[c], cols[j])]
            c += 1
    return [list(r) for r in zip(*cols)] if cols else [[] for _ in range(rows)]


# --------------------------------------------------------------------------
# covering-grid oracle for subtorus intersections


def grid_set(basis, offset, q):
    """Points of (1/q)Z^n / Z^n on the torus offset + span(basis), as integer q-multiples.

    The basis must be saturated, so the grid points of the subtorus are
    exactly the coset q*offset + span_Z(basis) mod q.
    """
    n = len(offset)
    start = []
    for x in offset:
        y = x * q
        if y.denominator != 1:
            return None
        start.append(int(y) % q)
    seen = {tuple(start)}
    stack = [tuple(start)]
    gens = [tuple(b) for b in basis] + [tuple(-x for x in b) for b in basis]
    while stack:
        p = stack.pop()
        for g in gens:
            r = tuple((a + b) % q for a, b in zip(p, g))
            if r not in seen:
                seen.add(r)
                stack.append(r)
    return seen


def maximal_minor_gcd(vectors, n):
    r = rank_fraction(vectors) if vectors else 0
    if r == 0:
        return 0, 1
    g = 0
    for vs in combinations(vectors, r):
        for rows in combinations(range(n), r):
            g = gcd(g, det_cofactor([[v[i] for v in vs] for i in rows]))
    return r, g


def grid_denominator(b1, o1, b2, o2):
    n = len(o1)
    den = 1
    for x in list(o1) + list(o2):
        den = den * x.denominator // gcd(den, x.denominator)
    _, idx = maximal_minor_gcd([list(v) for v in b1] + [list(v) for v in b2], n)
    return den * idx


def intersection_mismatches(b1, o1, b2, o2, components, q):
    """Problems with a claimed component list (each a (basis, offset) pair)."""
    n = len(o1)
    g1, g2 = grid_set(b1, o1, q), grid_set(b2, o2, q)
    common = g1 & g2
    problems = []
    expected_dim = None
    if components:
        r1 = rank_fraction([list(v) for v in b1]) if b1 else 0
        r2 = rank_fraction([list(v) for v in b2]) if b2 else 0
        r12 = rank_fraction([list(v) for v in b1] + [list(v) for v in b2]) if b1 or b2 else 0
        expected_dim = r1 + r2 - r12
    covered = set()
    for k, (basis, offset) in enumerate(components):
        if len(basis) != expected_dim:
            problems.append(f"component {k} has dimension {len(basis)}, expected {expected_dim}")
        if basis:
            _, idx = maximal_minor_gcd([list(v) for v in basis], n)
            if idx != 1:
                problems.append(f"component {k} stabilizer not saturated")
            for v in basis:
                for big in (b1, b2):
                    if rank_fraction([list(w) for w in big] + [list(v)]) != rank_fraction(
                        [list(w) for w in big]
                    ):
                        problems.append(f"component {k} direction {v} leaves an input torus")
        pts = grid_set(basis, offset, q)
        if pts is None:
            problems.append(f"component {k} offset is off the 1/{q} grid")
            continue
        if not pts:
            problems.append(f"component {k} is empty on the grid")
        if not pts <= common:
            problems.append(f"component {k} has grid points outside the intersection")
        if pts & covered:
            problems.append(f"component {k} overlaps an earlier component")
        covered |= pts
    if covered != common:
        problems.append(f"{len(common - covered)} intersection grid points not covered")
    return problems


def rank_gf(m, p):
    """Rank over F_p by Gauss-Jordan on a dict-of-rows copy."""
    rows = [[x % p for x in r] for r in m]
    r = 0
    cols = len(rows[0]) if rows else 0
    for j in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][j], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][j]:
                f = rows[i][j]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
    return r
