"""Walk through the combinatorics of a small arrangement.

Faces are sign vectors, flats are intersections, and the characteristic
polynomial falls out of the Mobius function of the flat semilattice.
"""

from fractions import Fraction

from titskit import (
    build_family,
    build_lattice,
    enumerate_faces,
    make_arrangement,
    poly_str,
    signs_to_str,
    zaslavsky_counts,
)

arr = build_family("braid", n=3)
faces = enumerate_faces(arr)
lattice = build_lattice(arr, faces)

print("braid arrangement on 3 letters:", arr.m, "hyperplanes in R^3")
print(len(faces), "faces,", len(faces.chambers()), "chambers")
for f in faces:
    tag = "chamber" if f.is_chamber() else f"dim {f.dim}"
    print(f"  {signs_to_str(f.signs):<6} {tag}")

print()
print(len(lattice), "flats; chi =", poly_str(lattice.charpoly()))
for i in range(len(lattice)):
    fl = lattice.flat(i)
    print(f"  flat {i}: rank {fl.rank}, closure {sorted(fl.closure)}")

# an affine triangle: three lines, one bounded chamber
tri = make_arrangement(
    2,
    [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)],
)
tfaces = enumerate_faces(tri)
tlat = build_lattice(tri, tfaces)
rep = zaslavsky_counts(tfaces, tlat)
print()
print("triangle: chi =", poly_str(tlat.charpoly()))
print(
    "chambers", rep.chambers_census,
    "(chi at -1 predicts", str(rep.chambers_from_chi) + ");",
    "bounded", rep.bounded_census,
    "(chi at 1 predicts", str(rep.bounded_from_chi) + ")",
)

chi = tlat.charpoly()
assert chi(Fraction(-1)) == 7 and chi(Fraction(1)) == 1
