"""Real affine hyperplane arrangements and their face decompositions.

A hyperplane is stored in a canonical form (integer coprime normal, first
nonzero entry positive), so equality of hyperplanes is structural equality.
Faces are the relatively open cells of the induced decomposition of R^n,
identified with their sign vectors over the hyperplane list.  Enumeration
is incremental: hyperplanes are inserted one at a time and every existing
cell is split into the parts on which the new hyperplane is negative, zero,
or positive.  Each face keeps an exact rational witness point in its
relative interior and a basis of the direction space of its affine hull,
which makes sign classification mostly a matter of linear algebra; a single
exact LP decides the genuine splitting cases.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .linalg import common_denominator, dot, matrix_rank, nullspace
from .lp import lp_feasible


class ZeroNormal(ValueError):
    """The zero vector does not define a hyperplane."""


class DuplicateHyperplane(ValueError):
    """Two input hyperplanes canonicalize to the same hyperplane."""


class NotAFace(ValueError):
    """A sign vector that no point of the ambient space realizes."""


@dataclass(frozen=True)
class Hyperplane:
    """Affine hyperplane {x : normal . x = offset} in canonical form."""

    normal: tuple
    offset: Fraction

    def value(self, point):
        return dot(self.normal, point) - self.offset

    def side(self, point):
        v = self.value(point)
        return 0 if v == 0 else (1 if v > 0 else -1)


def canonicalize(normal, offset):
    """Scale (normal, offset) to coprime integer normal, first nonzero > 0."""
    fs = [Fraction(c) for c in normal]
    if all(f == 0 for f in fs):
        raise ZeroNormal("hyperplane normal is the zero vector")
    den = common_denominator(fs)
    ints = [int(f * den) for f in fs]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    lead = next(v for v in ints if v != 0)
    sign = 1 if lead > 0 else -1
    scale = Fraction(sign * den, g)
    return Hyperplane(
        normal=tuple(sign * v // g for v in ints),
        offset=Fraction(offset) * scale,
    )


@dataclass(frozen=True, eq=False)
class Arrangement:
    """A finite list of distinct hyperplanes in R^dim."""

    dim: int
    hyperplanes: tuple
    kind: str = "custom"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("ambient dimension must be positive")
        seen = {}
        for i, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.dim:
                raise ValueError(f"hyperplane {i} lives in dimension {len(h.normal)}")
            key = (h.normal, h.offset)
            if key in seen:
                raise DuplicateHyperplane(
                    f"hyperplanes {seen[key]} and {i} coincide after canonicalization"
                )
            seen[key] = i

    @property
    def m(self):
        return len(self.hyperplanes)

    def value(self, i, point):
        return self.hyperplanes[i].value(point)

    def sign_vector(self, point):
        return tuple(h.side(point) for h in self.hyperplanes)

    def fingerprint(self):
        """Stable short hash of the canonical hyperplane data."""
        blob = json.dumps(arrangement_to_json(self), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def make_arrangement(dim, rows, kind="custom", params=None):
    """Build an Arrangement from raw (normal, offset) pairs."""
    hps = tuple(canonicalize(a, b) for a, b in rows)
    return Arrangement(dim=dim, hyperplanes=hps, kind=kind, params=dict(params or {}))


def arrangement_to_json(arr):
    return {
        "dim": arr.dim,
        "hyperplanes": [
            {
                "normal": [str(c) for c in h.normal],
                "offset": str(h.offset),
            }
            for h in arr.hyperplanes
        ],
    }


def arrangement_from_json(data, kind="file", params=None):
    dim = int(data["dim"])
    rows = [
        (
            [Fraction(str(c)) for c in entry["normal"]],
            Fraction(str(entry.get("offset", 0))),
        )
        for entry in data["hyperplanes"]
    ]
    return make_arrangement(dim, rows, kind=kind, params=params)


def load_arrangement(path):
    with open(path) as fh:
        return arrangement_from_json(json.load(fh), kind="file", params={"path": str(path)})


def signs_to_str(signs):
    return "".join("+" if s > 0 else ("-" if s < 0 else "0") for s in signs)


def str_to_signs(text):
    table = {"+": 1, "0": 0, "-": -1}
    try:
        return tuple(table[ch] for ch in text)
    except KeyError as exc:
        raise ValueError(f"bad sign character in {text!r}") from exc


@dataclass(frozen=True)
class Face:
    """A relatively open cell: sign vector, witness, and affine-hull data."""

    signs: tuple
    witness: tuple
    dim: int
    essentially_bounded: bool
    hull_basis: tuple

    def is_chamber(self):
        return all(s != 0 for s in self.signs)


@dataclass(frozen=True)
class HomogeneousCone:
    """Polyhedral cone {x : eq . x = 0, ineq . x >= 0} with integer normals."""

    dim: int
    equalities: tuple
    inequalities: tuple


class FaceSet:
    """All faces of an arrangement, keyed by sign vector."""

    def __init__(self, arr, faces):
        self.arr = arr
        self._faces = {f.signs: f for f in faces}
        self._order = sorted(self._faces, key=lambda s: (self._faces[s].dim, s))

    def __len__(self):
        return len(self._faces)

    def __iter__(self):
        return (self._faces[s] for s in self._order)

    def __contains__(self, signs):
        return tuple(signs) in self._faces

    def face(self, signs):
        try:
            return self._faces[tuple(signs)]
        except KeyError:
            raise NotAFace(f"{signs_to_str(signs)} is not a face") from None

    def chambers(self):
        return [f for f in self if f.is_chamber()]

    def sign_vectors(self):
        return list(self._order)

    @property
    def min_dim(self):
        return min(f.dim for f in self)

    def counts_by_dim(self):
        out = {}
        for f in self:
            out[f.dim] = out.get(f.dim, 0) + 1
        return out


def _reduce_basis(basis, rates):
    """Intersect span(basis) with the kernel of the functional whose values
    on the basis are `rates` (some rate nonzero)."""
    p = next(i for i, r in enumerate(rates) if r != 0)
    vp, rp = basis[p], rates[p]
    out = []
    for i, (v, r) in enumerate(zip(basis, rates)):
        if i == p:
            continue
        out.append(tuple(a - (r / rp) * b for a, b in zip(v, vp)))
    return out


def _step_witness(arr, signs, witness, direction):
    """Move from a relative-interior witness along a hull direction, staying
    strictly inside every already-assigned nonzero sign."""
    eps = None
    for j, s in enumerate(signs):
        if s == 0:
            continue
        margin = s * arr.value(j, witness)
        rate = s * dot(arr.hyperplanes[j].normal, direction)
        if rate < 0:
            bound = margin / (-rate)
            eps = bound if eps is None else min(eps, bound)
    eps = Fraction(1) if eps is None else eps / 2
    return tuple(w + eps * d for w, d in zip(witness, direction))


def _split_constraints(arr, signs, upto):
    eqs, stricts = [], []
    for j in range(upto):
        h = arr.hyperplanes[j]
        s = signs[j]
        if s == 0:
            eqs.append((h.normal, h.offset))
        else:
            stricts.append(
                (tuple(s * c for c in h.normal), s * h.offset)
            )
    return eqs, stricts


def enumerate_faces(arr):
    """All faces of the arrangement, by incremental hyperplane insertion."""
    n = arr.dim
    origin = tuple(Fraction(0) for _ in range(n))
    identity = [
        tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)
    ]
    state = [((), origin, identity)]

    for i, h in enumerate(arr.hyperplanes):
        new_state = []
        for signs, witness, basis in state:
            val = h.value(witness)
            sigma = 0 if val == 0 else (1 if val > 0 else -1)
            rates = [dot(h.normal, v) for v in basis]
            crosses_hull = any(r != 0 for r in rates)

            if not crosses_hull:
                # The hyperplane is constant on the affine hull of the face.
                new_state.append((signs + (sigma,), witness, basis))
                continue

            if sigma == 0:
                # Witness sits on the hyperplane and the hull crosses it, so
                # both open sides are nonempty; walk along a hull direction.
                p = next(k for k, r in enumerate(rates) if r != 0)
                v = basis[p] if rates[p] > 0 else tuple(-c for c in basis[p])
                w_plus = _step_witness(arr, signs, witness, v)
                w_minus = _step_witness(
                    arr, signs, witness, tuple(-c for c in v)
                )
                sub = _reduce_basis(basis, rates)
                new_state.append((signs + (1,), w_plus, basis))
                new_state.append((signs + (0,), witness, sub))
                new_state.append((signs + (-1,), w_minus, basis))
                continue

            eqs, stricts = _split_constraints(arr, signs, i)
            stricts.append(
                (tuple(-sigma * c for c in h.normal), -sigma * h.offset)
            )
            other = lp_feasible(n, equalities=eqs, strict_inequalities=stricts)
            if other is None:
                new_state.append((signs + (sigma,), witness, basis))
                continue
            # Both strict sides are inhabited; the zero part is the exact
            # segment crossing between the two witnesses.
            val2 = h.value(other)
            lam = val / (val - val2)
            crossing = tuple(
                a + lam * (b - a) for a, b in zip(witness, other)
            )
            sub = _reduce_basis(basis, rates)
            new_state.append((signs + (sigma,), witness, basis))
            new_state.append((signs + (0,), crossing, sub))
            new_state.append((signs + (-sigma,), other, basis))
        state = new_state

    faces = []
    for signs, witness, basis in state:
        faces.append(
            Face(
                signs=signs,
                witness=witness,
                dim=len(basis),
                essentially_bounded=_essentially_bounded(arr, signs),
                hull_basis=tuple(basis),
            )
        )
    fs = FaceSet(arr, faces)
    assert all(arr.sign_vector(f.witness) == f.signs for f in fs)
    return fs


def _essentially_bounded(arr, signs):
    """Whether the recession cone of the face is a linear subspace."""
    nonzero = [j for j, s in enumerate(signs) if s != 0]
    if not nonzero:
        return True
    n = arr.dim
    eqs = [
        (arr.hyperplanes[j].normal, Fraction(0))
        for j, s in enumerate(signs)
        if s == 0
    ]
    weaks = [
        (tuple(signs[j] * c for c in arr.hyperplanes[j].normal), Fraction(0))
        for j in nonzero
    ]
    total = [Fraction(0)] * n
    for coeffs, _ in weaks:
        total = [t + c for t, c in zip(total, coeffs)]
    weaks.append((tuple(total), Fraction(1)))
    return lp_feasible(n, equalities=eqs, weak_inequalities=weaks) is None


def face_dimension(arr, signs):
    """Dimension of the face with the given sign vector (NotAFace if none)."""
    signs = tuple(signs)
    if len(signs) != arr.m:
        raise NotAFace(f"sign vector has length {len(signs)}, expected {arr.m}")
    eqs, stricts = _split_constraints(arr, signs, arr.m)
    if lp_feasible(arr.dim, equalities=eqs, strict_inequalities=stricts) is None:
        raise NotAFace(f"{signs_to_str(signs)} is not realizable")
    zero_normals = [
        arr.hyperplanes[j].normal for j, s in enumerate(signs) if s == 0
    ]
    return arr.dim - matrix_rank(zero_normals)


def recession_cone(arr, face):
    """Directions along which the face recedes, as a homogeneous cone."""
    signs = face.signs if isinstance(face, Face) else tuple(face)
    eqs = []
    ineqs = []
    for j, s in enumerate(signs):
        normal = arr.hyperplanes[j].normal
        if s == 0:
            eqs.append(normal)
        else:
            ineqs.append(tuple(s * c for c in normal))
    return HomogeneousCone(
        dim=arr.dim, equalities=tuple(eqs), inequalities=tuple(ineqs)
    )


def is_essentially_bounded(arr, signs):
    """Whether the (realizable) face with this sign vector is essentially
    bounded, i.e. bounded modulo the lineality space of the arrangement."""
    return _essentially_bounded(arr, tuple(signs))


def lineality_space(arr):
    """Basis of the common lineality space of all hyperplanes."""
    return nullspace([h.normal for h in arr.hyperplanes], arr.dim)
