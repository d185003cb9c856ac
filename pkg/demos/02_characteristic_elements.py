"""Characteristic elements of the face semigroup algebra.

An element w is characteristic for a parameter t when every character
chi_X sends it to t^rank(X).  The unit and Takeuchi elements are the
t = 1 and t = -1 cases; the Adams elements realize a polynomial t.
"""

from fractions import Fraction

from titskit import (
    T,
    adams_a,
    adams_a_normalized,
    build_family,
    build_lattice,
    character,
    enumerate_faces,
    is_characteristic,
    multiply,
    poly_str,
    signs_to_str,
    takeuchi_element,
    unit_element,
)

arr = build_family("braid", n=3)
faces = enumerate_faces(arr)
lattice = build_lattice(arr, faces)

u = unit_element(faces)
tau = takeuchi_element(faces)
print("unit element:", {signs_to_str(s): str(c) for s, c in u.coeffs.items()})
print("tau has", len(tau.coeffs), "terms, one per face")

for w, t, name in ((u, Fraction(1), "unit"), (tau, Fraction(-1), "takeuchi")):
    rep = is_characteristic(lattice, w, t)
    print(f"{name} characteristic for {t}: {rep.ok}")

# tau * tau recovers the unit: (-1)^2 = 1
square = multiply(faces, tau, tau)
assert square.coeffs == u.coeffs
print("tau * tau = unit")

# the braid Adams element has polynomial coefficients; after dividing by
# t it is characteristic for t itself
alpha = adams_a_normalized(faces)
print("normalized adams coefficients by face:")
for s, c in sorted(alpha.coeffs.items()):
    print(f"  {signs_to_str(s):<6} {poly_str(c)}")
rep = is_characteristic(lattice, alpha, T)
print("characteristic for t:", rep.ok)

# characters are multiplicative, so evaluating at rational points
# composes: chi_top of alpha at 5 equals 5^rank
a5 = adams_a(faces).evaluate(Fraction(5))
top = character(lattice, a5, lattice.top)
print("chi_top(alpha_5) =", top, "= 5 *", Fraction(top, 5))
