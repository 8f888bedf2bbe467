"""Exact integer linear algebra.

Everything here works on Python ints, so entries never overflow or round.
Matrices are small dense objects; the heavy lifting (Hermite and Smith
normal forms) is done on plain lists of lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


class DimensionError(ValueError):
    pass


class NotPrimeError(ValueError):
    pass


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = x*a + y*b = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise DimensionError("column length does not match row count")
        return cls(
            nrows,
            len(columns),
            tuple(int(columns[j][i]) for i in range(nrows) for j in range(len(columns))),
        )

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        m = [[0] * cols for _ in range(rows)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls.from_rows(m, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [[self[i, j] for i in range(self.rows)] for j in range(self.cols)]

    def column(self, j: int) -> list[int]:
        return [self[i, j] for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_columns(self.tolist(), self.cols)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.tolist()
        bt = other.columns()
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a], other.cols
        )

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match column count")
        return [sum(x * y for x, y in zip(r, v)) for r in self.tolist()]

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return IntMatrix.from_columns(self.columns() + other.columns(), self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r})"


def as_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


# --------------------------------------------------------------------------
# Abelian groups


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank + sum of Z/d_i."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2, got {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_torsion(cls, free_rank: int, torsion: Iterable[int]) -> AbelianGroup:
        """Build from an arbitrary list of cyclic orders (not necessarily a chain)."""
        return cls(free_rank, _chain_from_cyclic(torsion))

    @property
    def torsion(self) -> tuple[int, ...]:
        return self.invariant_factors

    def is_free(self) -> bool:
        return not self.invariant_factors

    def p_torsion_rank(self, p: int) -> int:
        """Number of cyclic p-primary summands, i.e. dim of the p-torsion over F_p."""
        return sum(1 for d in self.invariant_factors if d % p == 0)

    def rank_mod_p(self, p: int) -> int:
        """dim over F_p of the group tensored with F_p."""
        return self.free_rank + self.p_torsion_rank(p)

    def __add__(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup.from_torsion(
            self.free_rank + other.free_rank,
            self.invariant_factors + other.invariant_factors,
        )

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        counts: dict[int, int] = {}
        for d in self.invariant_factors:
            counts[d] = counts.get(d, 0) + 1
        for d, k in counts.items():
            parts.append(f"Z_{d}" if k == 1 else f"Z_{d}^{k}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "factors": list(self.invariant_factors)}

    @classmethod
    def from_dict(cls, d: dict) -> AbelianGroup:
        return cls(d["free_rank"], tuple(d["factors"]))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _chain_from_cyclic(orders: Iterable[int]) -> tuple[int, ...]:
    # collect prime powers, then recombine largest-with-largest
    powers: dict[int, list[int]] = {}
    for d in orders:
        d = abs(int(d))
        if d == 0:
            raise ValueError("zero is not a torsion order")
        for p, e in _factorize(d).items():
            powers.setdefault(p, []).append(p**e)
    if not powers:
        return ()
    length = max(len(v) for v in powers.values())
    chain = [1] * length
    for p, v in powers.items():
        v.sort(reverse=True)
        for i, q in enumerate(v):
            chain[length - 1 - i] *= q
    return tuple(d for d in chain if d > 1)


# --------------------------------------------------------------------------
# Normal forms


def _hnf_columns(cols: list[list[int]], nrows: int, track: bool):
    """Column Hermite form in place.

    Returns (cols, U_columns, pivot_rows).  Column c of the result has its
    topmost nonzero entry (positive) in row pivot_rows[c]; pivot rows strictly
    increase; entries of earlier columns in a pivot row lie in [0, pivot).
    """
    k = len(cols)
    ucols = [[int(i == j) for i in range(k)] for j in range(k)] if track else None
    pivots: list[int] = []
    c = 0
    for i in range(nrows):
        if c == k:
            break
        # combine columns c..k-1 so that only column c is nonzero in row i
        for j in range(c + 1, k):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[c][i]
            if a == 0:
                cols[c], cols[j] = cols[j], cols[c]
                if track:
                    ucols[c], ucols[j] = ucols[j], ucols[c]
                continue
            if b % a == 0:
                q = b // a
                cj, cc = cols[j], cols[c]
                cols[j] = [y - q * x for x, y in zip(cc, cj)]
                if track:
                    uj, uc = ucols[j], ucols[c]
                    ucols[j] = [y - q * x for x, y in zip(uc, uj)]
                continue
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            cc, cj = cols[c], cols[j]
            cols[c] = [x * s + y * t for s, t in zip(cc, cj)]
            cols[j] = [-bg * s + ag * t for s, t in zip(cc, cj)]
            if track:
                uc, uj = ucols[c], ucols[j]
                ucols[c] = [x * s + y * t for s, t in zip(uc, uj)]
                ucols[j] = [-bg * s + ag * t for s, t in zip(uc, uj)]
        piv = cols[c][i]
        if piv == 0:
            continue
        if piv < 0:
            cols[c] = [-x for x in cols[c]]
            if track:
                ucols[c] = [-x for x in ucols[c]]
            piv = -piv
        for j in range(c):
            q = cols[j][i] // piv
            if q:
                cc = cols[c]
                cols[j] = [y - q * x for x, y in zip(cc, cols[j])]
                if track:
                    uc = ucols[c]
                    ucols[j] = [y - q * x for x, y in zip(uc, ucols[j])]
        pivots.append(i)
        c += 1
    return cols, ucols, pivots


def hnf(m) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form: returns (H, U) with M @ U == H, U unimodular.

    Nonzero columns of H come first, each with a positive leading entry;
    the leading rows strictly increase from left to right, and entries to
    the left of a leading entry are reduced into [0, leading entry).
    """
    m = as_matrix(m)
    cols, ucols, _ = _hnf_columns(m.columns(), m.rows, track=True)
    return IntMatrix.from_columns(cols, m.rows), IntMatrix.from_columns(ucols, m.cols)


def hnf_basis(columns: Sequence[Sequence[int]], nrows: int) -> tuple[tuple[int, ...], ...]:
    """Nonzero HNF columns of the lattice spanned by ``columns``."""
    cols, _, pivots = _hnf_columns([list(map(int, c)) for c in columns], nrows, track=False)
    return tuple(tuple(c) for c in cols[: len(pivots)])


def _snf_work(a: list[list[int]], track: bool):
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    # V is stored transposed (as a list of columns) so column ops are row ops
    vt = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if track:
            vt[i], vt[j] = vt[j], vt[i]

    def row_axpy(dst, src, q):  # row dst -= q * row src
        rs, rd = a[src], a[dst]
        a[dst] = [y - q * x for x, y in zip(rs, rd)]
        if track:
            us, ud = u[src], u[dst]
            u[dst] = [y - q * x for x, y in zip(us, ud)]

    def col_axpy(dst, src, q):  # col dst -= q * col src
        for r in a:
            if r[src]:
                r[dst] -= q * r[src]
        if track:
            vs, vd = vt[src], vt[dst]
            vt[dst] = [y - q * x for x, y in zip(vs, vd)]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            piv = a[t][t]
            moved = False
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    row_axpy(i, t, x // piv)
                    if a[i][t]:
                        moved = True
            for j in range(t + 1, n):
                x = a[t][j]
                if x:
                    col_axpy(j, t, x // piv)
                    if a[t][j]:
                        moved = True
            if moved:
                # a smaller remainder appeared; move it to the pivot spot
                best = None
                for i in range(t, m):
                    x = a[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, n):
                    x = a[t][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), t, j)
                _, i, j = best
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            if abs(piv) > 1:
                for i in range(t + 1, m):
                    if any(x % piv for x in a[i][t + 1:]):
                        bad = i
                        break
            if bad is None:
                break
            row_axpy(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if track:
                u[t] = [-x for x in u[t]]
        t += 1
    return a, u, vt


def snf(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (D, U, V) with U @ M @ V == D.

    D is diagonal with nonnegative entries d_1 | d_2 | ...; U and V are
    unimodular.  Pivoting always takes the smallest nonzero entry, first in
    row-major order, so results are reproducible.
    """
    m = as_matrix(m)
    a, u, vt = _snf_work(m.tolist(), track=True)
    d = IntMatrix.from_rows(a, m.cols)
    return d, IntMatrix.from_rows(u, m.rows), IntMatrix.from_columns(vt, m.cols)


def invariant_factors(m) -> list[int]:
    """Nonzero diagonal of the Smith form (including the 1s)."""
    m = as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return []
    # drop zero rows/columns up front; they do not change the result
    rows = [r for r in m.tolist() if any(r)]
    if not rows:
        return []
    keep = [j for j in range(m.cols) if any(r[j] for r in rows)]
    a = [[r[j] for j in keep] for r in rows]
    if len(a) > len(keep):
        a = [list(c) for c in zip(*a)]
    a, _, _ = _snf_work(a, track=False)
    return [a[i][i] for i in range(min(len(a), len(a[0]))) if a[i][i]]


def rank(m) -> int:
    """Rank over the rationals."""
    m = as_matrix(m)
    rows = [r[:] for r in m.tolist() if any(r)]
    r = 0
    ncols = m.cols
    for j in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            x = rows[i][j]
            if x:
                g = gcd(x, p[j])
                a, b = p[j] // g, x // g
                new = [a * y - b * z for y, z in zip(rows[i], p)]
                c = 0
                for y in new:
                    c = gcd(c, y)
                if c > 1:
                    new = [y // c for y in new]
                rows[i] = new
        r += 1
        if r == len(rows):
            break
    return r


def rank_mod_p(m, p: int) -> int:
    """Rank of M with entries reduced modulo the prime p."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    m = as_matrix(m)
    rows = [[x % p for x in r] for r in m.tolist()]
    rows = [r for r in rows if any(r)]
    r = 0
    for j in range(m.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][j], -1, p)
        prow = [(x * inv) % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, len(rows)):
            x = rows[i][j]
            if x:
                rows[i] = [(y - x * z) % p for y, z in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    return r


def cokernel(m) -> AbelianGroup:
    """Cokernel of M : Z^cols -> Z^rows."""
    m = as_matrix(m)
    d = invariant_factors(m)
    return AbelianGroup(m.rows - len(d), tuple(x for x in d if x > 1))


# --------------------------------------------------------------------------
# Sublattices


@dataclass(frozen=True)
class Sublattice:
    """Sublattice of Z^n, stored by its column Hermite basis.

    Equality of two sublattices is equality of the stored bases.
    """

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...] = field(default=())

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_rank: int) -> Sublattice:
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_rank:
                raise DimensionError(f"vector of length {len(v)} in Z^{ambient_rank}")
        return cls(ambient_rank, hnf_basis(vectors, ambient_rank))

    @classmethod
    def full(cls, n: int) -> Sublattice:
        return cls.span(IntMatrix.identity(n).columns(), n)

    @classmethod
    def zero(cls, n: int) -> Sublattice:
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.basis, self.ambient_rank)

    def __contains__(self, v) -> bool:
        return member(self, v)

    def __le__(self, other: Sublattice) -> bool:
        return all(member(other, b) for b in self.basis)

    def index_in_saturation(self) -> int:
        d = invariant_factors(self.matrix)
        out = 1
        for x in d:
            out *= x
        return out

    def is_saturated(self) -> bool:
        return self.index_in_saturation() == 1

    def coordinates(self, v: Sequence[int]) -> list[int]:
        """Integer coefficients of v in the stored basis (ValueError if v is not in S)."""
        coeffs = _hnf_solve(self.basis, list(v), self.ambient_rank)
        if coeffs is None:
            raise ValueError(f"{list(v)} is not in the sublattice")
        return coeffs

    def __repr__(self) -> str:
        return f"Sublattice(n={self.ambient_rank}, basis={[list(b) for b in self.basis]})"


def _hnf_solve(basis, v, n) -> list[int] | None:
    v = list(v)
    coeffs = []
    for b in basis:
        lead = next(i for i in range(n) if b[i])
        if any(v[i] for i in range(lead)):
            return None
        q, r = divmod(v[lead], b[lead])
        if r:
            return None
        coeffs.append(q)
        if q:
            v = [x - q * y for x, y in zip(v, b)]
    if any(v):
        return None
    return coeffs


def member(s: Sublattice, v: Sequence[int]) -> bool:
    """True iff v is an integer combination of the basis of s."""
    if len(v) != s.ambient_rank:
        raise DimensionError(f"vector of length {len(v)} vs ambient rank {s.ambient_rank}")
    return _hnf_solve(s.basis, v, s.ambient_rank) is not None


def kernel(m) -> Sublattice:
    """Integer kernel {v : M v = 0}; always saturated."""
    m = as_matrix(m)
    cols, ucols, pivots = _hnf_columns(m.columns(), m.rows, track=True)
    r = len(pivots)
    return Sublattice.span(ucols[r:], m.cols)


def saturate(s: Sublattice) -> Sublattice:
    """(Q-span of s) intersected with Z^n."""
    n = s.ambient_rank
    if s.rank == 0:
        return s
    # vectors orthogonal to s, then everything orthogonal to those
    ortho = kernel(IntMatrix.from_rows(s.basis, n))
    if ortho.rank == 0:
        return Sublattice.full(n)
    return kernel(IntMatrix.from_rows(ortho.basis, n))


def _check_same_ambient(s: Sublattice, t: Sublattice):
    if s.ambient_rank != t.ambient_rank:
        raise DimensionError(f"ambient ranks differ: {s.ambient_rank} vs {t.ambient_rank}")


def lattice_sum(s: Sublattice, t: Sublattice) -> Sublattice:
    _check_same_ambient(s, t)
    return Sublattice.span(s.basis + t.basis, s.ambient_rank)


def lattice_intersect(s: Sublattice, t: Sublattice) -> Sublattice:
    _check_same_ambient(s, t)
    n = s.ambient_rank
    if s.rank == 0 or t.rank == 0:
        return Sublattice.zero(n)
    rel = IntMatrix.from_columns(s.basis + tuple(tuple(-x for x in b) for b in t.basis), n)
    k = kernel(rel)
    vecs = [
        [sum(c * b[i] for c, b in zip(v[: s.rank], s.basis)) for i in range(n)]
        for v in k.basis
    ]
    return Sublattice.span(vecs, n)


def solve_rational(columns: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Some rational x with sum_j x_j * columns[j] == target, or None."""
    k = len(columns)
    n = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for j in range(k):
        piv = next((i for i in range(r, n) if aug[i][j] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][j]
        aug[r] = [x / p for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][j] != 0:
                f = aug[i][j]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(j)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, n)):
        return None
    x = [Fraction(0)] * k
    for i, j in enumerate(piv_cols):
        x[j] = aug[i][k]
    return x


def unimodular_completion(s: Sublattice) -> IntMatrix:
    """Unimodular W with W @ B = [I; 0] for the basis B of a saturated s.

    Rows r.. of W annihilate s; W is a deterministic function of s.
    """
    n = s.ambient_rank
    # row-reduce B^T: B^T @ U = [I | 0] in column form when B is saturated
    bt = IntMatrix.from_rows(s.basis, n) if s.rank else IntMatrix.zeros(0, n)
    h, u = hnf(bt)
    hc = h.columns()
    r = s.rank
    # h[:, :r] is lower-triangular with unit diagonal iff s is saturated
    for j in range(r):
        if hc[j][j] != 1:
            raise ValueError("sublattice is not saturated")
    # B^T U = [L | 0] with L unit lower triangular; fold L^{-1} into U
    ucols = u.columns()
    for j in range(r - 1, -1, -1):
        for i in range(j + 1, r):
            q = hc[j][i]
            if q:
                ucols[j] = [a - q * b for a, b in zip(ucols[j], ucols[i])]
                hc[j] = [a - q * b for a, b in zip(hc[j], hc[i])]
    # columns of U now satisfy B^T U = [I | 0], so W = U^T
    return IntMatrix.from_rows(ucols, n)


def det(m) -> int:
    m = as_matrix(m)
    if m.rows != m.cols:
        raise DimensionError("determinant of a non-square matrix")
    a = m.tolist()
    n = m.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
