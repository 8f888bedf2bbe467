# Rational subtori of T^6 and how they meet.
# A subtorus is a saturated stabilizer lattice plus a rational offset;
# two of them meet in a disjoint union of translates of a common subtorus.
# Run: python demos/torus_intersections.py

from fractions import Fraction

from projcoh.arrangement import Subtorus, contains, intersect_subtori
from projcoh.oracles import check_intersection

e = [[int(i == j) for i in range(6)] for j in range(6)]
half = Fraction(1, 2)

a = Subtorus.make(e[0:4])                        # x5 = x6 = 0
b = Subtorus.make(e[2:6])                        # x1 = x2 = 0
print(intersect_subtori(a, b))                   # one 2-torus, <e3, e4>

# shifting b by e1/2 moves it off the origin but not off a
b_shift = Subtorus.make(e[2:6], [half, 0, 0, 0, 0, 0])
print(intersect_subtori(a, b_shift))

# <e3, e4, e1 + 2 e5, e6> together with a spans an index-2 sublattice of Z^6,
# so the intersection falls into two parallel components
c = Subtorus.make([e[2], e[3], [1, 0, 0, 0, 2, 0], e[5]])
comps = intersect_subtori(a, c)
for t in comps:
    print("component:", t, "inside a:", contains(a, t), "inside c:", contains(c, t))

# brute force on the grid (1/q)Z^6 / Z^6 confirms the component list
print("grid check problems:", check_intersection(a, c))

# offsets are canonical: shifting by lattice vectors or along the torus changes nothing
moved = Subtorus.make(e[0:4], [3, half, -1, 0, 0, 0])
print("canonical offset:", moved.offset, moved == a)
