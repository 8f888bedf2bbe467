"""Exact icosahedral data on the hypercubic lattice Z^6.

The six basis vectors project onto the six five-fold axes.  Writing the
internal-space Gram matrix as I + S/sqrt(5) with S a symmetric sign matrix,
everything becomes integral:

* the icosahedral group (with inversion) is the set of signed permutation
  matrices commuting with S;
* for an internal-space normal n = sum c_i b_i, the lattice vectors whose
  internal projection is orthogonal to n are the integer solutions of
  c . x = 0 and (S c) . x = 0.

Used to derive the bundled presets; the pipeline itself never needs it.
"""

from __future__ import annotations

from itertools import permutations, product

from .exactlin import IntMatrix, Sublattice, kernel

# internal-space Gram matrix is I + SIGNS / sqrt(5)
SIGNS = (
    (0, -1, 1, 1, -1, -1),
    (-1, 0, -1, 1, 1, -1),
    (1, -1, 0, -1, 1, -1),
    (1, 1, -1, 0, -1, -1),
    (-1, 1, 1, -1, 0, -1),
    (-1, -1, -1, -1, -1, 0),
)

# columns: a basis of the face-centred lattice D6 = {x : sum(x) even}
D6_BASIS = (
    (1, -1, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0),
    (0, 0, 1, -1, 0, 0),
    (0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 1, -1),
    (0, 0, 0, 0, 1, 1),
)

FIVEFOLD_NORMAL = (0, 0, 0, 0, 0, 1)
THREEFOLD_NORMAL = (1, -1, 1, 0, 0, 0)
TWOFOLD_NORMAL = (1, 0, 1, 0, 0, 0)


def _s_times(c):
    return [sum(s * x for s, x in zip(row, c)) for row in SIGNS]


def icosahedral_group() -> list[IntMatrix]:
    """The 120 signed permutation matrices commuting with SIGNS."""
    out = []
    for perm in permutations(range(6)):
        for signs in product((1, -1), repeat=6):
            # g e_i = signs[i] e_perm[i]; g S g^-1 == S entrywise
            if all(
                signs[i] * signs[j] * SIGNS[i][j] == SIGNS[perm[i]][perm[j]]
                for i in range(6)
                for j in range(i + 1, 6)
            ):
                rows = [[0] * 6 for _ in range(6)]
                for i, (p, sg) in enumerate(zip(perm, signs)):
                    rows[p][i] = sg
                out.append(IntMatrix.from_rows(rows))
    return out


def chart_matrix(lattice_type: str) -> IntMatrix:
    if lattice_type == "P":
        return IntMatrix.identity(6)
    if lattice_type == "F":
        return IntMatrix.from_columns(D6_BASIS, 6)
    raise ValueError(f"unknown icosahedral lattice type {lattice_type!r}")


def _inverse(m: IntMatrix) -> list[list]:
    from .exactlin import solve_rational

    cols = m.columns()
    inv_cols = [solve_rational(cols, [int(i == j) for i in range(6)]) for j in range(6)]
    return [[inv_cols[j][i] for j in range(6)] for i in range(6)]


def to_chart(g: IntMatrix, chart: IntMatrix) -> IntMatrix:
    """Matrix of g in the coordinates given by the chart's columns."""
    inv = _inverse(chart)
    gc = (g @ chart).tolist()
    rows = [[sum(inv[i][k] * gc[k][j] for k in range(6)) for j in range(6)] for i in range(6)]
    if any(x.denominator != 1 for r in rows for x in r):
        raise ValueError("group element does not preserve the lattice")
    return IntMatrix.from_rows([[int(x) for x in r] for r in rows])


def plane_stabilizer(normal, lattice_type: str = "P") -> Sublattice:
    """Lattice vectors (chart coordinates) whose internal projection is orthogonal to the normal."""
    chart = chart_matrix(lattice_type)
    rows = IntMatrix.from_rows([list(normal), _s_times(normal)])
    return kernel(rows @ chart)


def small_generating_set(group: list[IntMatrix]) -> list[IntMatrix]:
    """Deterministic short list of elements whose closure is the whole group."""
    from .wedgelat import group_closure

    n = len(group)
    for g in group:
        for h in group:
            try:
                if group_closure([g, h], bound=n).order == n:
                    return [g, h]
            except ValueError:
                continue
    raise ValueError("no two-element generating set found")
