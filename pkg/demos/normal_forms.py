# Integer normal forms: the exact linear algebra underneath everything else.
# Run: python demos/normal_forms.py

from projcoh.exactlin import (
    AbelianGroup, IntMatrix, Sublattice, cokernel, hnf, kernel,
    lattice_intersect, lattice_sum, rank_mod_p, saturate, snf,
)

m = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])

# Hermite form acts on columns: M @ U == H, U unimodular
h, u = hnf(m)
print("H =", h.tolist())
print("M @ U == H:", m @ u == h)

# Smith form: U @ M @ V == D with d1 | d2 | d3
d, u, v = snf(m)
print("D =", d.tolist())
print("U @ M @ V == D:", u @ m @ v == d)

# the cokernel Z^3 / image(M) is read off the diagonal
print("coker M =", cokernel(m))

# reducing mod p kills exactly the invariant factors divisible by p
for p in (2, 3, 5):
    print(f"rank over F_{p}:", rank_mod_p(m, p))

# sublattices are stored by their Hermite basis, so equality is structural
a = Sublattice.span([[2, 0, 0], [0, 2, 2]], 3)
b = Sublattice.span([[1, 1, 1], [0, 0, 3]], 3)
print("a + b =", lattice_sum(a, b))
print("a meet b =", lattice_intersect(a, b))
print("saturation of a:", saturate(a), "index", a.index_in_saturation())

# integer kernels are always saturated
print("ker [1 1 1] =", kernel([[1, 1, 1]]))

# abelian groups print as free part plus torsion
print(AbelianGroup.from_torsion(3, [4, 6, 2]))
