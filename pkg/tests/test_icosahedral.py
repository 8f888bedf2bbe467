from collections import Counter

import sympy

from projcoh.exactlin import IntMatrix
from projcoh.icosahedral import (
    FIVEFOLD_NORMAL,
    SIGNS,
    THREEFOLD_NORMAL,
    TWOFOLD_NORMAL,
    chart_matrix,
    icosahedral_group,
    plane_stabilizer,
)
from projcoh.wedgelat import group_closure

from conftest import preset_arrangement


def internal_gram():
    return sympy.eye(6) + sympy.Matrix(SIGNS) / sympy.sqrt(5)


def test_gram_matrices_are_complementary_projections():
    s = sympy.Matrix(SIGNS)
    assert s * s == 5 * sympy.eye(6)
    g = internal_gram()
    # (I + S/sqrt5)/2 is an orthogonal projection of rank 3
    p = g / 2
    assert sympy.simplify(p * p - p) == sympy.zeros(6)
    assert p.rank(simplify=True) == 3


def test_group_order_and_element_orders():
    grp = icosahedral_group()
    assert len(grp) == 120
    assert IntMatrix.from_rows([[-int(i == j) for j in range(6)] for i in range(6)]) in set(grp)

    def order(g):
        k, h = 1, g
        while h != IntMatrix.identity(6):
            h, k = h @ g, k + 1
        return k

    counts = Counter(order(g) for g in grp)
    # rotations have orders 1, 2, 3, 5; times the inversion adds 6 and 10
    assert set(counts) == {1, 2, 3, 5, 6, 10}
    assert counts[5] == 24 and counts[3] == 20


def test_group_preserves_internal_metric():
    s = sympy.Matrix(SIGNS)
    for g in icosahedral_group():
        m = sympy.Matrix(g.tolist())
        assert m.T * s * m == s


def test_preset_generators_close_to_the_group():
    from projcoh.config import load_preset

    for name in ("danzer", "ammann-kramer"):
        cfg = load_preset(name)
        assert group_closure(cfg.generator_matrices()).order == 120


def test_plane_stabilizers_are_orthogonal_in_internal_space():
    g = internal_gram()
    for normal in (FIVEFOLD_NORMAL, THREEFOLD_NORMAL, TWOFOLD_NORMAL):
        for lt in ("P", "F"):
            stab = plane_stabilizer(normal, lt)
            assert stab.rank == 4 and stab.is_saturated()
            chart = sympy.Matrix(chart_matrix(lt).tolist())
            n = sympy.Matrix(normal)
            for b in stab.basis:
                x = chart * sympy.Matrix(b)
                assert sympy.simplify((n.T * g * x)[0]) == 0


def test_orbit_sizes_match_axis_counts():
    # six five-fold axes, fifteen two-fold axes; the canonical D6 seeds add ten three-fold axes
    assert preset_arrangement("danzer").L2 == 6
    assert preset_arrangement("ammann-kramer").L2 == 15
    assert preset_arrangement("dual-canonical-d6").L2 == 15
    assert preset_arrangement("canonical-d6").L2 == 16
