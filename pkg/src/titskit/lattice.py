"""The join-semilattice of flats and its Mobius/characteristic machinery.

A flat is a nonempty intersection of hyperplanes (including the empty
intersection, the ambient space).  Flats are keyed by their closures: the
set of ALL hyperplane indices containing the subspace.  Under the inclusion
order the ambient space is the top element; joins always exist (the closure
of the join is the intersection of the closures) while meets may not in the
affine case.  Ranks are dimensions shifted by the common lineality
dimension d, which equals the minimal face dimension; gradedness of the
poset by this rank is validated explicitly when the lattice is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import FaceSet, lineality_space
from .linalg import dot, matrix_rank
from .scalars import Poly, T


class NotComparable(ValueError):
    """Mobius function queried on an incomparable pair of flats."""


class IndexOutOfRange(IndexError):
    """A hyperplane or flat index outside the valid range."""


class UngradedLattice(RuntimeError):
    """A cover relation that does not raise rank by one."""


@dataclass(frozen=True)
class Flat:
    """A flat: the set of hyperplanes containing it, plus dimension data."""

    closure: frozenset
    dim: int
    rank: int


class FlatLattice:
    """Flats of one arrangement with order, joins, and Mobius function."""

    def __init__(self, arr, flats, face_support=None):
        self.arr = arr
        self.flats = tuple(flats)
        self._index = {f.closure: i for i, f in enumerate(self.flats)}
        self.top = self._index[frozenset()]
        self.d = self.flats[0].dim - self.flats[0].rank
        self.face_support = face_support or {}
        self._mobius = self._mobius_table()
        self._validate_graded()

    # -- order ----------------------------------------------------------

    def __len__(self):
        return len(self.flats)

    def flat(self, x):
        if not 0 <= x < len(self.flats):
            raise IndexOutOfRange(f"no flat with index {x}")
        return self.flats[x]

    def index_of(self, closure):
        return self._index[frozenset(closure)]

    def leq(self, y, x):
        """Whether flat y is contained in flat x."""
        return self.flat(y).closure >= self.flat(x).closure

    def join(self, x, y):
        """Smallest flat containing both x and y."""
        return self._index[self.flat(x).closure & self.flat(y).closure]

    def below(self, x):
        return [y for y in range(len(self.flats)) if self.leq(y, x)]

    def above(self, x):
        return [y for y in range(len(self.flats)) if self.leq(x, y)]

    def rank_top(self):
        return self.flats[self.top].rank

    # -- Mobius function --------------------------------------------------

    def _mobius_table(self):
        order = sorted(range(len(self.flats)), key=lambda i: self.flats[i].rank)
        table = {}
        for yi in order:
            interval = [x for x in order if self.leq(yi, x)]
            table[(yi, yi)] = 1
            for xi in sorted(interval, key=lambda i: self.flats[i].rank):
                if xi == yi:
                    continue
                acc = 0
                for zi in interval:
                    if zi != xi and self.leq(zi, xi):
                        acc += table[(yi, zi)]
                table[(yi, xi)] = -acc
        return table

    def mobius(self, y, x):
        self.flat(y), self.flat(x)
        if not self.leq(y, x):
            raise NotComparable(f"flat {y} is not below flat {x}")
        return self._mobius[(y, x)]

    def _validate_graded(self):
        n = len(self.flats)
        for y in range(n):
            for x in range(n):
                if x == y or not self.leq(y, x):
                    continue
                covered = not any(
                    z != x and z != y and self.leq(y, z) and self.leq(z, x)
                    for z in range(n)
                )
                if covered and self.flats[x].rank != self.flats[y].rank + 1:
                    raise UngradedLattice(
                        f"cover {y} < {x} jumps rank "
                        f"{self.flats[y].rank} -> {self.flats[x].rank}"
                    )

    # -- characteristic polynomials ---------------------------------------

    def charpoly(self):
        """chi(t) = sum over flats Y of mu(Y, top) t^rank(Y)."""
        acc = Poly()
        for y in range(len(self.flats)):
            acc = acc + self.mobius(y, self.top) * T ** self.flats[y].rank
        return acc

    def support(self, face):
        """The flat spanned by a face (its support)."""
        signs = face.signs if hasattr(face, "signs") else tuple(face)
        return self.flats[self.face_support[signs]]

    def support_index(self, face):
        signs = face.signs if hasattr(face, "signs") else tuple(face)
        return self.face_support[signs]


def support_closure(arr, face):
    """Indices of all hyperplanes containing the affine hull of the face."""
    out = []
    for j, h in enumerate(arr.hyperplanes):
        if h.value(face.witness) != 0:
            continue
        if all(dot(h.normal, v) == 0 for v in face.hull_basis):
            out.append(j)
    return frozenset(out)


def _flats_from_closures(arr, closures, d):
    flats = []
    for c in sorted(closures, key=lambda c: (len(c), sorted(c))):
        normals = [arr.hyperplanes[j].normal for j in c]
        dim = arr.dim - matrix_rank(normals)
        flats.append(Flat(closure=c, dim=dim, rank=dim - d))
    flats.sort(key=lambda f: (f.rank, sorted(f.closure)))
    return flats


def build_lattice(arr, faces):
    """Flat lattice of an arrangement, from the supports of its faces."""
    assert isinstance(faces, FaceSet) and faces.arr is arr
    d = len(lineality_space(arr))
    support_of = {f.signs: support_closure(arr, f) for f in faces}
    closures = set(support_of.values())
    flats = _flats_from_closures(arr, closures, d)
    index = {f.closure: i for i, f in enumerate(flats)}
    face_support = {signs: index[c] for signs, c in support_of.items()}
    lat = FlatLattice(arr, flats, face_support)
    assert faces.min_dim == d
    return lat


def support(arr, faces, face):
    """Support of a face, computed against a fresh lattice if needed."""
    lat = build_lattice(arr, faces)
    return lat.support(face)


def join(lattice, x, y):
    return lattice.join(x, y)


def mobius(lattice, y, x):
    return lattice.mobius(y, x)


def charpoly(lattice):
    return lattice.charpoly()


def charpoly_under(lattice, x):
    """chi of the restriction to flat x: sum_{Y <= x} mu(Y, x) t^rank(Y).

    Ranks are taken in the ambient arrangement, so for affine arrangements
    this matches the convention in which the interval below x is never
    re-embedded in the subspace x.
    """
    acc = Poly()
    for y in lattice.below(x):
        acc = acc + lattice.mobius(y, x) * T ** lattice.flat(y).rank
    return acc


def charpoly_over(lattice, x):
    """chi of the localization at flat x, on the interval above x:
    sum_{Y >= x} mu(Y, top) t^(rank(Y) - rank(x))."""
    rx = lattice.flat(x).rank
    acc = Poly()
    for y in lattice.above(x):
        acc = acc + lattice.mobius(y, lattice.top) * T ** (
            lattice.flat(y).rank - rx
        )
    return acc


@dataclass(frozen=True)
class SubarrangementMap:
    """Restriction of sign vectors to a subset of hyperplane indices."""

    source: object
    indices: tuple
    target: object

    def __call__(self, signs):
        return tuple(signs[i] for i in self.indices)


def subarrangement_map(arr, indices):
    from .geometry import Arrangement

    indices = tuple(indices)
    for i in indices:
        if not 0 <= i < arr.m:
            raise IndexOutOfRange(f"hyperplane index {i} out of range")
    if len(set(indices)) != len(indices):
        raise ValueError("repeated hyperplane index")
    target = Arrangement(
        dim=arr.dim,
        hyperplanes=tuple(arr.hyperplanes[i] for i in indices),
        kind="custom",
        params={"subset_of": arr.kind},
    )
    return SubarrangementMap(source=arr, indices=indices, target=target)


def deletion_lattice(arr, lattice, h):
    """Flat lattice of the arrangement with hyperplane h removed.

    Flats of the deletion are exactly the flats of the full arrangement that
    are still cut out by their closure minus h; this avoids re-running face
    enumeration.  Returns (deleted_arrangement, its_lattice).
    """
    from .geometry import Arrangement

    if not 0 <= h < arr.m:
        raise IndexOutOfRange(f"hyperplane index {h} out of range")
    keep = [i for i in range(arr.m) if i != h]
    reindex = {old: new for new, old in enumerate(keep)}
    sub = Arrangement(
        dim=arr.dim,
        hyperplanes=tuple(arr.hyperplanes[i] for i in keep),
        kind="custom",
        params={"deleted": h, "from": arr.kind},
    )
    closures = set()
    for f in lattice.flats:
        trimmed = f.closure - {h}
        normals = [arr.hyperplanes[j].normal for j in trimmed]
        if arr.dim - matrix_rank(normals) == f.dim:
            closures.add(frozenset(reindex[j] for j in trimmed))
    d = len(lineality_space(sub))
    flats = _flats_from_closures(sub, closures, d)
    return sub, FlatLattice(sub, flats)
