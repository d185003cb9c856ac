"""Conic intrinsic volumes and the volume-weighted characteristic element.

The intrinsic volume v_k of a polyhedral cone C is the Gaussian measure of
the set of points whose nearest point in C lies in a k-dimensional face.
Two evaluation paths:

* exact, when the cone has essential dimension at most two (subspaces,
  rays and planar wedges modulo lineality); the wedge angle comes from the
  exact extreme rays, with one arccos at the very end;
* Monte Carlo otherwise.  Gaussian samples are rationalized to dyadic
  rationals, so nearest-point classification is exact integer arithmetic:
  the projection matrices onto the spans of all cone faces are scaled to a
  common integer denominator, each sample picks the feasible candidate at
  minimal distance, and ties resolve to the largest active set, which is
  the face whose relative interior actually contains the projection.
  Chunked substreams keyed by (seed, chunk index) make runs reproducible
  bit for bit regardless of execution order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import acos, gcd, lcm, sqrt

import numpy as np

from .geometry import HomogeneousCone, recession_cone
from .lattice import charpoly
from .linalg import (
    common_denominator,
    dot,
    matvec,
    nullspace,
    projection_matrix,
)
from .lp import lp_feasible
from .scalars import Poly
from .tits import TitsElement, multiply

DEFAULT_SAMPLES = 10**6
DEFAULT_SEED = 0
CHUNK = 1 << 14
_SCALE = 1 << 12
_BIG = 1 << 62
_FLOAT_FLOOR = 1e-9


@dataclass(frozen=True)
class ConeFace:
    active: frozenset
    dim: int
    proj: tuple  # n x n Fraction matrix, orthogonal projection onto the span


def cone_faces(cone):
    """All faces of the cone, each with its exact active set.

    A subset S of inequality indices defines a face when the system
    {equalities, a_i x = 0 for i in S, a_j x > 0 for j outside S} is
    feasible; the strictness pins S to the full active set, so faces come
    out without duplicates.  Sorted largest active set first.
    """
    n = cone.dim
    idx = range(len(cone.inequalities))
    eq_rows = [(e, Fraction(0)) for e in cone.equalities]
    out = []
    for mask in range(1 << len(cone.inequalities)):
        subset = [i for i in idx if mask >> i & 1]
        eqs = eq_rows + [(cone.inequalities[i], Fraction(0)) for i in subset]
        stricts = [
            (cone.inequalities[j], Fraction(0))
            for j in idx
            if not mask >> j & 1
        ]
        if lp_feasible(n, equalities=eqs, strict_inequalities=stricts) is None:
            continue
        span_rows = list(cone.equalities) + [
            cone.inequalities[i] for i in subset
        ]
        basis = nullspace(span_rows, n)
        proj = projection_matrix(basis, n)
        out.append(
            ConeFace(
                active=frozenset(subset),
                dim=len(basis),
                proj=tuple(tuple(row) for row in proj),
            )
        )
    out.sort(key=lambda f: (-len(f.active), sorted(f.active)))
    return out


def project_to_cone(cone, point, faces=None):
    """Exact nearest point of the cone, with the face dimension it lies in.

    The projection is the feasible candidate of minimal distance among the
    orthogonal projections onto the spans of all faces; ties share the same
    point and the largest active set names the face containing it in its
    relative interior.  The characterizing conditions (membership,
    orthogonality to the face span, and the residual lying in the outward
    normal cone) are all verified before returning.
    """
    p = tuple(Fraction(c) for c in point)
    if faces is None:
        faces = cone_faces(cone)
    best = None
    for face in faces:
        q = matvec(face.proj, p)
        if any(dot(a, q) < 0 for a in cone.inequalities):
            continue
        dist = sum((a - b) ** 2 for a, b in zip(p, q))
        if best is None or dist < best[0]:
            best = (dist, face, q)
    _, face, q = best
    residual = tuple(a - b for a, b in zip(p, q))
    assert all(c == 0 for c in matvec(face.proj, residual))
    assert all(dot(e, q) == 0 for e in cone.equalities)
    nvars = len(cone.equalities) + len(face.active)
    active = sorted(face.active)
    coeff_rows = []
    for k in range(cone.dim):
        row = [Fraction(e[k]) for e in cone.equalities]
        row += [Fraction(-cone.inequalities[i][k]) for i in active]
        coeff_rows.append((row, residual[k]))
    lam_rows = []
    for j in range(len(active)):
        lam = [Fraction(0)] * nvars
        lam[len(cone.equalities) + j] = Fraction(1)
        lam_rows.append((lam, Fraction(0)))
    assert (
        nvars == 0
        and all(c == 0 for c in residual)
        or lp_feasible(nvars, equalities=coeff_rows, weak_inequalities=lam_rows)
        is not None
    )
    return q, face.dim


@dataclass(frozen=True)
class ConicVolumeProfile:
    """Intrinsic volumes v_0..v_n of a cone in R^n."""

    values: tuple
    half_width: tuple
    method: str
    samples: int | None = None
    seed: int | None = None

    def essential_values(self, lineality_dim):
        return self.values[lineality_dim:]

    def total(self):
        return sum(self.values)

    def euler_alternation(self):
        return sum(((-1) ** k) * v for k, v in enumerate(self.values))


def _lineality_basis(cone):
    rows = list(cone.equalities) + list(cone.inequalities)
    return nullspace(rows, cone.dim)


def _implicit_equalities(cone):
    """Inequality indices that hold with equality on the whole cone."""
    n = cone.dim
    eqs = [(e, Fraction(0)) for e in cone.equalities]
    weaks = [(a, Fraction(0)) for a in cone.inequalities]
    out = set()
    for i, a in enumerate(cone.inequalities):
        probe = weaks + [(a, Fraction(1))]
        if lp_feasible(n, equalities=eqs, weak_inequalities=probe) is None:
            out.add(i)
    return out


def _planar_angle(cone, lin_basis, implicit):
    """Opening angle of a pointed planar cone sitting above its lineality."""
    n = cone.dim
    span_rows = list(cone.equalities) + [
        cone.inequalities[i] for i in implicit
    ]
    w_rows = span_rows + [tuple(v) for v in lin_basis]
    w_basis = nullspace(w_rows, n)
    assert len(w_basis) == 2
    w1, w2 = w_basis
    coords = []
    for i, a in enumerate(cone.inequalities):
        if i in implicit:
            continue
        c = (dot(a, w1), dot(a, w2))
        if c != (0, 0):
            coords.append(c)
    assert coords
    rays = []
    for c in coords:
        for cand in ((-c[1], c[0]), (c[1], -c[0])):
            if all(u * cand[0] + v * cand[1] >= 0 for u, v in coords):
                den = common_denominator(cand)
                a0, b0 = int(cand[0] * den), int(cand[1] * den)
                g = gcd(abs(a0), abs(b0))
                rays.append((a0 // g, b0 // g))
    rays = sorted(set(rays))
    assert len(rays) == 2, f"expected a wedge, found {len(rays)} extreme rays"
    ambient = [
        tuple(r[0] * u + r[1] * v for u, v in zip(w1, w2)) for r in rays
    ]
    r1, r2 = ambient
    cosine = float(dot(r1, r2)) / sqrt(float(dot(r1, r1)) * float(dot(r2, r2)))
    return acos(max(-1.0, min(1.0, cosine)))


def _exact_profile(cone):
    """Exact volumes for essential dimension <= 2, else None."""
    n = cone.dim
    lin = _lineality_basis(cone)
    implicit = _implicit_equalities(cone)
    span_rows = list(cone.equalities) + [
        cone.inequalities[i] for i in implicit
    ]
    span_dim = len(nullspace(span_rows, n))
    ell = len(lin)
    ess = span_dim - ell
    values = [0.0] * (n + 1)
    if ess == 0:
        values[ell] = 1.0
    elif ess == 1:
        values[ell] = 0.5
        values[ell + 1] = 0.5
    elif ess == 2:
        alpha = _planar_angle(cone, lin, implicit)
        frac = alpha / (2 * np.pi)
        values[ell] = 0.5 - frac
        values[ell + 1] = 0.5
        values[ell + 2] = frac
    else:
        return None
    return tuple(values)


def _mc_profile(cone, samples, seed):
    n = cone.dim
    faces = cone_faces(cone)
    den = 1
    for f in faces:
        for row in f.proj:
            den = lcm(den, common_denominator(row))
    mats = []
    diffs = []
    for f in faces:
        m = np.array(
            [[int(c * den) for c in row] for row in f.proj], dtype=np.int64
        )
        mats.append(m)
        diffs.append(den * np.eye(n, dtype=np.int64) - m)
    ineq = (
        np.array(cone.inequalities, dtype=np.int64)
        if cone.inequalities
        else None
    )
    dims = np.array([f.dim for f in faces])
    counts = np.zeros(n + 1, dtype=np.int64)
    max_a = int(np.abs(ineq).max()) if ineq is not None else 1

    done = 0
    chunk_index = 0
    while done < samples:
        cnt = min(CHUNK, samples - done)
        rng = np.random.default_rng([seed, chunk_index])
        x = rng.standard_normal((cnt, n))
        ints = np.rint(x * _SCALE)
        bound = int(np.abs(ints).max()) if cnt else 0
        worst = n * (den * bound * (n + 1)) ** 2
        worst = max(worst, n * n * max_a * den * bound)
        ints = ints.astype(np.int64)
        big = _BIG
        if worst >= _BIG:
            # exact squared distances would overflow; box to Python ints
            # and grow the infeasibility sentinel past every real distance
            ints = ints.astype(object)
            big = worst + 1
        dist_rows = []
        for m, dmat in zip(mats, diffs):
            q = ints @ m.T
            if ineq is not None:
                feasible = (q @ ineq.T >= 0).all(axis=1)
            else:
                feasible = np.ones(cnt, dtype=bool)
            delta = ints @ dmat.T
            dist = (delta * delta).sum(axis=1)
            dist_rows.append(np.where(feasible, dist, big))
        winner = np.stack(dist_rows).argmin(axis=0)
        counts += np.bincount(dims[winner], minlength=n + 1)
        done += cnt
        chunk_index += 1

    values = tuple(float(c) / samples for c in counts)
    return values


def try_exact_profile(cone):
    """Exact profile when available (essential dimension <= 2), else None."""
    values = _exact_profile(cone)
    if values is None:
        return None
    return ConicVolumeProfile(
        values=values,
        half_width=tuple(0.0 for _ in values),
        method="exact",
    )


def conic_intrinsic_volumes(
    cone, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, force_mc=False
):
    """Intrinsic volume profile of a homogeneous cone.

    Cones of essential dimension <= 2 are evaluated exactly unless force_mc
    is set; everything else falls to the seeded Monte Carlo path with a
    conservative 3-sigma half-width of 1.5/sqrt(samples) per entry.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    if not force_mc:
        exact = try_exact_profile(cone)
        if exact is not None:
            return exact
    values = _mc_profile(cone, samples, seed)
    hw = 3 * 0.5 / sqrt(samples)
    return ConicVolumeProfile(
        values=values,
        half_width=tuple(hw for _ in values),
        method="monte-carlo",
        samples=samples,
        seed=seed,
    )


def face_intrinsic_volumes(arr, face, **config):
    """Profile of the recession cone of an arrangement face."""
    return conic_intrinsic_volumes(recession_cone(arr, face), **config)


@dataclass(frozen=True)
class IntrinsicElement:
    """Volume-weighted element; characteristic for its polynomial parameter.

    The coefficient of a face F is
    (-1)^dim(F) * sum_k (-1)^k v_k(F) t^(k-d), a real polynomial of degree
    at most rank(F), built from the intrinsic volumes of F's recession cone.
    """

    element: TitsElement
    profiles: dict

    def evaluate(self, value):
        return self.element.evaluate(value)

    def character_tolerance(self):
        """Conservative bound for character residuals, from MC half-widths."""
        return _FLOAT_FLOOR + sum(
            max(p.half_width) for p in self.profiles.values()
        )


def intrinsic_element(
    arr, faces, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, force_mc=False
):
    d = faces.min_dim
    profiles = {}
    coeffs = {}
    for f in faces:
        prof = face_intrinsic_volumes(
            arr, f, samples=samples, seed=seed, force_mc=force_mc
        )
        profiles[f.signs] = prof
        sign = (-1) ** f.dim
        cs = [
            sign * ((-1) ** k) * prof.values[k] for k in range(d, f.dim + 1)
        ]
        coeffs[f.signs] = Poly(cs)
    return IntrinsicElement(
        element=TitsElement(arr, coeffs), profiles=profiles
    )


@dataclass(frozen=True)
class KlivansSwartzReport:
    """chi reconstructed from chamber volumes vs the lattice computation."""

    estimate: tuple
    exact: tuple
    deviations: tuple
    half_widths: tuple

    def ok(self, tol=None):
        if tol is not None:
            return all(d <= tol for d in self.deviations)
        return all(
            d <= hw + _FLOAT_FLOOR
            for d, hw in zip(self.deviations, self.half_widths)
        )


def klivans_swartz_charpoly(
    faces, lattice, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED, force_mc=False
):
    """Coefficients of chi from chamber cone volumes:

    [t^j] chi = (-1)^(rank - j) * sum over chambers C of v_(j+d)(C).
    """
    d = lattice.d
    r = lattice.rank_top()
    arr = faces.arr
    sums = [0.0] * (r + 1)
    hw = [0.0] * (r + 1)
    for c in faces.chambers():
        prof = face_intrinsic_volumes(
            arr, c, samples=samples, seed=seed, force_mc=force_mc
        )
        for j in range(r + 1):
            sums[j] += prof.values[j + d]
            hw[j] += prof.half_width[j + d]
    estimate = tuple(((-1) ** (r - j)) * sums[j] for j in range(r + 1))
    chi = charpoly(lattice)
    exact = tuple(float(chi.coefficient(j)) for j in range(r + 1))
    deviations = tuple(abs(a - b) for a, b in zip(estimate, exact))
    return KlivansSwartzReport(
        estimate=estimate,
        exact=exact,
        deviations=tuple(deviations),
        half_widths=tuple(hw),
    )


@dataclass(frozen=True)
class ProductReport:
    s: float
    t: float
    max_deviation: float
    tolerance: float

    @property
    def ok(self):
        return self.max_deviation <= self.tolerance


def verify_intrinsic_product(
    faces,
    s,
    t,
    samples=DEFAULT_SAMPLES,
    seed=DEFAULT_SEED,
    force_mc=False,
    base=None,
):
    """Numeric check of multiplicativity: nu_s nu_t = nu_(s t).

    All three elements come from one set of volume profiles, so the
    comparison isolates the algebra.  The tolerance scales the summed MC
    half-widths by a crude bound on the coefficient growth of the product.
    """
    if base is None:
        base = intrinsic_element(
            faces.arr, faces, samples=samples, seed=seed, force_mc=force_mc
        )
    left = multiply(faces, base.evaluate(float(s)), base.evaluate(float(t)))
    right = base.evaluate(float(s) * float(t))
    keys = set(left.coeffs) | set(right.coeffs)
    dev = 0.0
    for k in keys:
        dev = max(dev, abs(left.coeffs.get(k, 0.0) - right.coeffs.get(k, 0.0)))
    growth = (max(1.0, abs(float(s))) * max(1.0, abs(float(t)))) ** max(
        (f.dim for f in faces), default=1
    )
    tol = _FLOAT_FLOOR + growth * len(faces) * sum(
        max(p.half_width) for p in base.profiles.values()
    )
    return ProductReport(
        s=float(s), t=float(t), max_deviation=dev, tolerance=tol
    )
