"""Deletion-restriction and Kung's convolution identity.

Both identities are exact statements about the characteristic polynomial
and are checked here with rational arithmetic only.
"""

from fractions import Fraction

from titskit import (
    build_family,
    build_lattice,
    enumerate_faces,
    make_arrangement,
    poly_str,
    verify_deletion_restriction,
    verify_kung,
)

tri = make_arrangement(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), 1)])
faces = enumerate_faces(tri)
lattice = build_lattice(tri, faces)
print("triangle chi =", poly_str(lattice.charpoly()))

for h in range(tri.m):
    rep = verify_deletion_restriction(tri, faces, lattice, h)
    if not rep.rank_ok:
        print(f"hyperplane {h}: deletion drops the rank, identity not stated")
        continue
    print(
        f"hyperplane {h}: chi = {poly_str(rep.chi_deleted)}"
        f" - ({poly_str(rep.chi_restriction)})  ok={rep.ok}"
    )

# Kung: chi(st) = sum over flats X of t^rank(X) chi_under(X)(s) chi_over(X)(t)
arr = build_family("braid", n=4)
bl = build_lattice(arr, enumerate_faces(arr))
for s, t in ((Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(7, 3))):
    rep = verify_kung(bl, s, t)
    print(
        f"braid4 kung at ({s}, {t}): chi(st) = {rep.lhs},"
        f" flat sum = {rep.flat_sum}, pair sum = {rep.pair_sum}"
    )
    assert rep.ok
