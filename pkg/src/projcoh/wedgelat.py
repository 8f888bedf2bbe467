"""Exterior powers of sublattices and finite unimodular matrix groups.

Coordinates on Lambda^m Z^n are indexed by the m-subsets of {0..n-1} in
lexicographic order; ``wedge_index(n, m)`` returns that ordering.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .exactlin import IntMatrix, Sublattice, det


class GroupClosureError(ValueError):
    pass


@lru_cache(maxsize=None)
def wedge_index(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(n), m))


@lru_cache(maxsize=None)
def _position(n: int, m: int) -> dict[tuple[int, ...], int]:
    return {s: i for i, s in enumerate(wedge_index(n, m))}


def _minor(vs: Sequence[Sequence[int]], rows: Sequence[int]) -> int:
    m = len(vs)
    if m == 1:
        return vs[0][rows[0]]
    if m == 2:
        a, b = vs
        i, j = rows
        return a[i] * b[j] - a[j] * b[i]
    return det(IntMatrix.from_rows([[v[r] for v in vs] for r in rows]))


def wedge_vectors(vs: Sequence[Sequence[int]], n: int | None = None) -> list[int]:
    """Coordinates of v_1 ^ ... ^ v_m in the lexicographic m-subset basis.

    The coordinate for the subset I is the m x m minor of [v_1 ... v_m]
    on the rows I.
    """
    vs = [list(v) for v in vs]
    if n is None:
        n = len(vs[0])
    m = len(vs)
    if m > n:
        raise ValueError(f"cannot wedge {m} vectors in dimension {n}")
    if m == 0:
        return [1]
    return [_minor(vs, rows) for rows in wedge_index(n, m)]


def wedge_power(s: Sublattice, m: int) -> Sublattice:
    """Lambda^m of s, as a sublattice of Z^C(n, m)."""
    k = s.rank
    if not 1 <= m <= k:
        raise ValueError(f"degree {m} out of range for a rank-{k} sublattice")
    n = s.ambient_rank
    gens = [wedge_vectors([s.basis[i] for i in idx], n) for idx in combinations(range(k), m)]
    return Sublattice.span(gens, len(wedge_index(n, m)))


def wedge_generators(s: Sublattice, m: int) -> list[list[int]]:
    """The C(k, m) wedges of basis subsets, in lexicographic subset order."""
    n = s.ambient_rank
    return [wedge_vectors([s.basis[i] for i in idx], n) for idx in combinations(range(s.rank), m)]


def plucker_coordinates(coeffs: Sequence[Sequence[int]], k: int) -> list[int]:
    """Wedge of coefficient vectors living in Z^k (used for Lambda^m of a basis)."""
    return wedge_vectors(coeffs, k)


# --------------------------------------------------------------------------
# finite matrix groups


def _key(m: IntMatrix) -> tuple[int, ...]:
    return m.entries


class MatrixGroup:
    """Finite group of unimodular integer matrices, closed under products."""

    def __init__(self, elements: Iterable[IntMatrix]):
        self.elements: tuple[IntMatrix, ...] = tuple(sorted(elements, key=_key))
        self._keys = {_key(g) for g in self.elements}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].rows

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: IntMatrix) -> bool:
        return _key(g) in self._keys

    def is_closed(self) -> bool:
        return all(g @ h in self for g in self.elements for h in self.elements)


def group_closure(generators: Sequence, bound: int = 1024) -> MatrixGroup:
    """Breadth-first closure of the generators under multiplication."""
    gens = [g if isinstance(g, IntMatrix) else IntMatrix.from_rows(g) for g in generators]
    if not gens:
        raise GroupClosureError("no generators")
    n = gens[0].rows
    for g in gens:
        if g.shape != (n, n):
            raise GroupClosureError(f"generator of shape {g.shape}, expected {(n, n)}")
        if abs(det(g)) != 1:
            raise GroupClosureError(f"generator is not unimodular: {g.tolist()}")
    ident = IntMatrix.identity(n)
    seen = {_key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                x = g @ h
                k = _key(x)
                if k not in seen:
                    seen[k] = x
                    nxt.append(x)
                    if len(seen) > bound:
                        raise GroupClosureError(f"closure exceeds bound {bound}")
        frontier = nxt
    return MatrixGroup(seen.values())


def act_on_subtorus(g, t):
    """Image of a subtorus under a lattice automorphism (lives with the torus type)."""
    from .arrangement import act_on_subtorus as _act

    return _act(g if isinstance(g, IntMatrix) else IntMatrix.from_rows(g), t)
