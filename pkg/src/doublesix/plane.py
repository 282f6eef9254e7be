"""Configurations of six labelled points in the projective plane.

A configuration is stored with an explicit 6x3 matrix of coordinate
representatives.  Most geometric predicates only depend on the points,
but the invariant calculus is a polynomial in the representatives, so
they are never normalized behind the caller's back: scaling a row or
hitting everything with a matrix transforms the representatives
exactly.

"General position" means no three of the six points are collinear and
no conic passes through all six.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .forms import TernaryForm, monomials_of_degree
from .linalg import Matrix, determinant, inverse, kernel_basis, rat
from .perms import Perm, all_perms


class PointP2:
    """Point of the projective plane, stored in canonical scale.

    The representative is rescaled so the first nonzero coordinate is 1;
    equality and hashing use that canonical triple.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence) -> None:
        c = tuple(rat(x) for x in coords)
        if len(c) != 3:
            raise ValueError("a plane point needs three coordinates")
        lead = next((x for x in c if x != 0), None)
        if lead is None:
            raise ValueError("(0 : 0 : 0) is not a point")
        self.coords = tuple(x / lead for x in c)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointP2) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __repr__(self) -> str:
        return "(" + " : ".join(str(x) for x in self.coords) + ")"


class Config6:
    """Six labelled, pairwise distinct plane points with fixed representatives."""

    __slots__ = ("reps", "points")

    def __init__(self, reps: Iterable[Iterable]) -> None:
        rows = tuple(tuple(rat(x) for x in row) for row in reps)
        if len(rows) != 6 or any(len(r) != 3 for r in rows):
            raise ValueError("a configuration is six coordinate triples")
        pts = tuple(PointP2(r) for r in rows)
        if len(set(pts)) != 6:
            raise ValueError("configuration points must be pairwise distinct")
        self.reps = rows
        self.points = pts

    def rep_matrix(self) -> Matrix:
        return Matrix(self.reps)

    def apply(self, g: Matrix) -> "Config6":
        """Transform every representative by the invertible matrix g, exactly."""
        return Config6(tuple(g.apply(row) for row in self.reps))

    def rescale(self, factors: Sequence) -> "Config6":
        return Config6(
            tuple(tuple(rat(f) * x for x in row) for f, row in zip(factors, self.reps))
        )

    def relabel(self, sigma: Perm) -> "Config6":
        """Row i of the result is row sigma(i) of self (same representatives)."""
        return Config6(tuple(self.reps[sigma(i)] for i in range(6)))

    def canonicalized(self) -> "Config6":
        return Config6(tuple(p.coords for p in self.points))

    def __eq__(self, other) -> bool:
        return isinstance(other, Config6) and self.reps == other.reps

    def __hash__(self) -> int:
        return hash(self.reps)

    def __repr__(self) -> str:
        return "Config6(" + ", ".join(repr(p) for p in self.points) + ")"

    def to_json(self) -> dict:
        return {"points": [[str(x) for x in row] for row in self.reps]}

    @classmethod
    def from_json(cls, data: dict) -> "Config6":
        if not isinstance(data, dict) or "points" not in data:
            raise ValueError('expected an object with a "points" key')
        return cls(data["points"])


#: Fixed reference configuration used by the test-suite and the CLI.
#: General position and trivial projective stabilizer are verified by
#: the test-suite, not assumed.
REF6 = Config6(
    [
        (1, 0, 0),
        (0, 1, 0),
        (0, 0, 1),
        (1, 1, 1),
        (1, 2, 3),
        (2, 5, 1),
    ]
)


def veronese_row(point: Sequence, degree: int) -> list[Fraction]:
    """Values of the degree-d monomials at the point, in the fixed order."""
    px, py, pz = (rat(x) for x in point)
    return [px**i * py**j * pz**k for (i, j, k) in monomials_of_degree(degree)]


@dataclass(frozen=True)
class GeneralPositionVerdict:
    ok: bool
    collinear_triple: tuple[int, int, int] | None = None  # 1-based labels
    conic: TernaryForm | None = None

    def describe(self) -> str:
        if self.ok:
            return "general position"
        if self.collinear_triple is not None:
            return "points %d, %d, %d are collinear" % self.collinear_triple
        return f"all six points lie on the conic {self.conic!r}"


def is_general_position(c: Config6) -> GeneralPositionVerdict:
    """No three collinear, no conic through all six; returns a witness on failure."""
    from itertools import combinations

    for triple in combinations(range(6), 3):
        rows = [c.reps[i] for i in triple]
        if determinant(Matrix(rows)) == 0:
            labels = tuple(i + 1 for i in triple)
            return GeneralPositionVerdict(False, collinear_triple=labels)
    ver = Matrix([veronese_row(row, 2) for row in c.reps])
    if determinant(ver) == 0:
        coeffs = kernel_basis(ver)[0]
        conic = TernaryForm.from_coefficient_vector(2, coeffs).canonical()
        return GeneralPositionVerdict(False, conic=conic)
    return GeneralPositionVerdict(True)


class DegenerateFiveTupleError(ValueError):
    """More than one conic passes through the five given points."""


def conic_through(pts: Sequence[PointP2]) -> TernaryForm:
    """The unique conic through five points, canonically scaled.

    Raises :class:`DegenerateFiveTupleError` when the five points fail
    to determine the conic (kernel dimension above one).
    """
    if len(pts) != 5:
        raise ValueError("a conic is determined by five points")
    ver = Matrix([veronese_row(p, 2) for p in pts])
    basis = kernel_basis(ver)
    if len(basis) != 1:
        raise DegenerateFiveTupleError(
            f"five-point system has a {len(basis)}-dimensional space of conics"
        )
    return TernaryForm.from_coefficient_vector(2, basis[0]).canonical()


# -- linear systems with assigned base multiplicities ----------------


def chart_matrix(p: PointP2) -> Matrix:
    """Deterministic projectivity A with A (0:0:1) = p.

    The first two columns are the standard basis vectors other than the
    pivot coordinate of p, in ascending order; substituting A into a
    form moves p to the coordinate vertex so multiplicities can be read
    off chart coefficients.
    """
    pivot = next(i for i in range(3) if p.coords[i] != 0)
    cols = [i for i in range(3) if i != pivot]
    e = [[Fraction(1) if r == c else Fraction(0) for r in range(3)] for c in range(3)]
    a_cols = [e[cols[0]], e[cols[1]], list(p.coords)]
    return Matrix([[a_cols[c][r] for c in range(3)] for r in range(3)])


def _low_monomials(degree: int, mult: int) -> list[tuple[int, int, int]]:
    """Chart monomials of order < mult at the vertex (0:0:1)."""
    return [
        (i, s - i, degree - s) for s in range(mult) for i in range(s, -1, -1)
    ]


def multiplicity_rows(degree: int, p: PointP2, mult: int) -> list[list[Fraction]]:
    """Linear conditions on a degree-d coefficient vector forcing
    multiplicity >= mult at p: one row per chart monomial of order
    below mult, i.e. mult(mult+1)/2 rows."""
    a = chart_matrix(p)
    monos = monomials_of_degree(degree)
    substituted = [TernaryForm.monomial(m).substitute(a) for m in monos]
    rows = []
    for target in _low_monomials(degree, mult):
        rows.append([s.coefficient(target) for s in substituted])
    return rows


@dataclass(frozen=True)
class CurveSystem:
    """Basis of the degree-d forms vanishing to assigned multiplicities."""

    degree: int
    conditions: tuple[tuple[PointP2, int], ...]
    basis: tuple[TernaryForm, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def linear_system(
    degree: int, conditions: Sequence[tuple[PointP2, int]] = ()
) -> CurveSystem:
    """All degree-d forms with multiplicity >= m_i at each point p_i.

    A point of multiplicity m imposes m(m+1)/2 conditions: after moving
    it to a coordinate vertex, every chart coefficient of order below m
    must vanish.  The basis comes from the kernel of the stacked
    condition matrix and is deterministic.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    for p, m in conditions:
        if m < 1:
            raise ValueError("multiplicities must be positive")
    monos = monomials_of_degree(degree)
    rows: list[list[Fraction]] = []
    for p, m in conditions:
        rows.extend(multiplicity_rows(degree, p, m))
    if rows:
        vectors = kernel_basis(Matrix(rows))
    else:
        n = len(monos)
        vectors = [
            tuple(Fraction(1) if i == j else Fraction(0) for i in range(n))
            for j in range(n)
        ]
    basis = tuple(TernaryForm.from_coefficient_vector(degree, v) for v in vectors)
    return CurveSystem(degree, tuple((p, m) for p, m in conditions), basis)


# -- tangent cones ---------------------------------------------------


@dataclass(frozen=True)
class TangentCone:
    """Local data of a form at a point, read in the deterministic chart.

    quadric is the degree-2 chart part (u^2, uv, v^2 coefficients) and
    is only populated when the multiplicity is exactly 2; is_node then
    says whether it is nondegenerate (two distinct tangent directions).
    """

    multiplicity: int
    quadric: tuple[Fraction, Fraction, Fraction] | None
    is_node: bool


def chart_coefficients(f: TernaryForm, p: PointP2, order: int) -> tuple[Fraction, ...]:
    """Chart coefficients of f at p of the given total order, as the
    (order+1)-tuple of u^i v^(order-i) coefficients, i descending."""
    g = f.substitute(chart_matrix(p))
    d = f.degree
    return tuple(g.coefficient((i, order - i, d - order)) for i in range(order, -1, -1))


def chart_quadratic_part(f: TernaryForm, p: PointP2) -> tuple[Fraction, Fraction, Fraction]:
    a, b, c = chart_coefficients(f, p, 2)
    return (a, b, c)


def tangent_cone(f: TernaryForm, p: PointP2) -> TangentCone:
    """Multiplicity of f at p plus the degree-2 cone when applicable."""
    if f.is_zero:
        raise ValueError("the zero form has no well-defined multiplicity")
    g = f.substitute(chart_matrix(p))
    d = f.degree
    for s in range(d + 1):
        coeffs = tuple(g.coefficient((i, s - i, d - s)) for i in range(s, -1, -1))
        if any(c != 0 for c in coeffs):
            if s == 2:
                a, b, c = coeffs
                disc = b * b - 4 * a * c
                return TangentCone(2, (a, b, c), disc != 0)
            return TangentCone(s, None, False)
    raise AssertionError("nonzero form with no nonzero chart coefficient")


# -- projectivities --------------------------------------------------


def frame_map(source: Sequence[PointP2], target: Sequence[PointP2]) -> Matrix | None:
    """The projectivity sending four source points to four target points.

    Returns None when either quadruple has three collinear members (no
    valid frame).  The matrix is scaled so its first nonzero entry is 1.
    """

    def basis_matrix(pts: Sequence[PointP2]) -> Matrix | None:
        cols = Matrix([[pts[j][i] for j in range(3)] for i in range(3)])
        if determinant(cols) == 0:
            return None
        lam = inverse(cols).apply(pts[3].coords)
        if any(l == 0 for l in lam):
            return None
        return Matrix([[lam[j] * pts[j][i] for j in range(3)] for i in range(3)])

    ms = basis_matrix(source)
    mt = basis_matrix(target)
    if ms is None or mt is None:
        return None
    g = mt @ inverse(ms)
    lead = next(x for x in g.entries if x != 0)
    return g.scale(1 / lead)


def _maps_point(g: Matrix, p: PointP2, q: PointP2) -> bool:
    image = g.apply(p.coords)
    if all(x == 0 for x in image):
        return False
    return PointP2(image) == q


def projective_stabilizer(c: Config6) -> list[tuple[Perm, Matrix]]:
    """All (permutation, matrix) pairs with g p_i proportional to p_sigma(i).

    Requires general position (any four points then form a frame).  The
    identity is always present; the list is sorted by image tuple.
    """
    out = []
    pts = c.points
    for sigma in all_perms(6):
        targets = [pts[sigma(i)] for i in range(4)]
        g = frame_map(pts[:4], targets)
        if g is None:
            continue
        if all(_maps_point(g, pts[i], pts[sigma(i)]) for i in range(4, 6)):
            out.append((sigma, g))
    return out


def projective_equivalence(
    c1: Config6, c2: Config6, respect_labels: bool = True
) -> tuple[Matrix, Perm] | None:
    """A projectivity g (and relabelling sigma) with g p_i ~ q_sigma(i).

    With respect_labels the permutation is forced to be the identity.
    Returns the first match in permutation order, or None.
    """
    pts1, pts2 = c1.points, c2.points
    candidates = [Perm.identity(6)] if respect_labels else list(all_perms(6))
    for sigma in candidates:
        targets = [pts2[sigma(i)] for i in range(4)]
        g = frame_map(pts1[:4], targets)
        if g is None:
            continue
        if all(_maps_point(g, pts1[i], pts2[sigma(i)]) for i in range(4, 6)):
            return g, sigma
    return None


# -- sampling --------------------------------------------------------


def random_general_config(
    rng: random.Random, bound: int = 20, max_tries: int = 1000
) -> Config6:
    """Rejection-sample a general-position configuration with integer
    coordinates in [-bound, bound]."""
    for _ in range(max_tries):
        rows = []
        while len(rows) < 6:
            row = tuple(rng.randint(-bound, bound) for _ in range(3))
            if any(row):
                rows.append(row)
        try:
            c = Config6(rows)
        except ValueError:
            continue
        if is_general_position(c).ok:
            return c
    raise RuntimeError("failed to sample a general-position configuration")
