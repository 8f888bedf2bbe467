# Deciding whether S_3 is free: the lattices M1 <= M1 + M1' <= M2 inside Lambda^3 Z^6.
# Run: python demos/s3_bounds.py

from projcoh.arrangement import Subtorus, build_arrangement
from projcoh.config import load_preset
from projcoh.exactlin import IntMatrix
from projcoh.skgroups import compute_s3
from projcoh.wedgelat import group_closure


def show(label, arr):
    v = compute_s3(arr)
    print(label)
    print("  rank M1 =", v.m1.rank, " [M2 : M1] =", v.m1.index_in_saturation())
    print("  [M2 : M1 + M1'] =", v.lower.index_in_saturation(), " ->", v.status.value)


# for the dual canonical D6 tiling M1 alone is not saturated,
# but adding the wedges b1 ^ b2 ^ e_i of the 2-tori closes the gap
cfg = load_preset("dual-canonical-d6")
arr = build_arrangement(list(group_closure(cfg.generator_matrices())), cfg.seed_subtori())
show("dual canonical D6", arr)

# four generic 4-tori where neither bound decides
seeds = [
    [[1, 0, 0, 0, 5, 0], [0, 1, 0, 0, 4, -1], [0, 0, 1, 0, 2, -1], [0, 0, 0, 0, 6, -1]],
    [[1, 0, 0, 1, 3, 3], [0, 1, 0, 1, 2, 1], [0, 0, 1, 2, 2, 3], [0, 0, 0, 3, 4, 5]],
    [[0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, -1], [0, 0, 0, 0, 1, 0]],
    [[1, 1, 0, 0, 1, 0], [0, 2, 0, 0, 1, 2], [0, 0, 1, 0, 0, -1], [0, 0, 0, 1, -1, 0]],
]
arr = build_arrangement([IntMatrix.identity(6)], [Subtorus.make(s) for s in seeds])
show("four generic tori (the CLI exits with code 4 here)", arr)
