"""Homogeneous polynomials in three variables over the rationals.

A :class:`TernaryForm` of degree d is a sparse map from exponent
triples (i, j, k) with i + j + k = d to nonzero Fraction coefficients.
The monomial order used everywhere (serialization, canonical scaling,
linear-system columns) is descending lexicographic on the exponent
triple, e.g. for conics: x^2, xy, xz, y^2, yz, z^2.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

from . import _poly
from .linalg import Matrix, rat

VARS = ("x", "y", "z")

Mono = tuple[int, int, int]


def monomials_of_degree(d: int) -> list[Mono]:
    """All exponent triples of total degree d, descending lex."""
    out = [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]
    return sorted(out, reverse=True)


class TernaryForm:
    """Exact homogeneous form in x, y, z.  Immutable."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Mono, object] | Iterable) -> None:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[Mono, Fraction] = {}
        for mono, c in items:
            i, j, k = mono
            if i < 0 or j < 0 or k < 0 or i + j + k != degree:
                raise ValueError(f"exponent triple {mono} is not degree {degree}")
            c = rat(c)
            if c != 0:
                store[(i, j, k)] = store.get((i, j, k), Fraction(0)) + c
                if store[(i, j, k)] == 0:
                    del store[(i, j, k)]
        self.degree = degree
        self._coeffs = store

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "TernaryForm":
        return cls(degree, {})

    @classmethod
    def monomial(cls, mono: Mono, c=1) -> "TernaryForm":
        return cls(sum(mono), {mono: c})

    @classmethod
    def variable(cls, var: int) -> "TernaryForm":
        mono = tuple(1 if i == var else 0 for i in range(3))
        return cls(1, {mono: 1})

    @classmethod
    def from_coefficient_vector(cls, degree: int, vec: Sequence) -> "TernaryForm":
        monos = monomials_of_degree(degree)
        if len(vec) != len(monos):
            raise ValueError("coefficient vector has wrong length")
        return cls(degree, dict(zip(monos, vec)))

    # -- structure ---------------------------------------------------

    def coefficient(self, mono: Mono) -> Fraction:
        return self._coeffs.get(tuple(mono), Fraction(0))

    def terms(self) -> list[tuple[Mono, Fraction]]:
        """Nonzero terms in descending lex order."""
        return sorted(self._coeffs.items(), reverse=True)

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        return tuple(self.coefficient(m) for m in monomials_of_degree(self.degree))

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree_in(self, var: int) -> int:
        """Largest exponent of the given variable; -1 for the zero form."""
        if not self._coeffs:
            return -1
        return max(m[var] for m in self._coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TernaryForm)
            and self.degree == other.degree
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self._coeffs.items()))))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"TernaryForm(0, degree={self.degree})"
        parts = []
        for (i, j, k), c in self.terms():
            mono = "".join(v * e for v, e in zip(VARS, (i, j, k)))
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "TernaryForm(" + " + ".join(parts) + ")"

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "TernaryForm") -> "TernaryForm":
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return TernaryForm(self.degree, out)

    def __neg__(self) -> "TernaryForm":
        return TernaryForm(self.degree, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: "TernaryForm") -> "TernaryForm":
        return self + (-other)

    def __mul__(self, other) -> "TernaryForm":
        if isinstance(other, TernaryForm):
            out: dict[Mono, Fraction] = {}
            for (a, b, c), u in self._coeffs.items():
                for (d, e, f), v in other._coeffs.items():
                    m = (a + d, b + e, c + f)
                    out[m] = out.get(m, Fraction(0)) + u * v
            return TernaryForm(self.degree + other.degree, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "TernaryForm":
        c = rat(c)
        return TernaryForm(self.degree, {m: c * v for m, v in self._coeffs.items()})

    def eval(self, point: Sequence) -> Fraction:
        px, py, pz = (rat(u) for u in point)
        total = Fraction(0)
        for (i, j, k), c in self._coeffs.items():
            total += c * px**i * py**j * pz**k
        return total

    def partial(self, var: int) -> "TernaryForm":
        """Formal partial derivative; degree drops by one."""
        if self.degree == 0:
            raise ValueError("cannot differentiate a degree-0 form to a form")
        out: dict[Mono, Fraction] = {}
        for m, c in self._coeffs.items():
            e = m[var]
            if e == 0:
                continue
            new = list(m)
            new[var] = e - 1
            out[tuple(new)] = c * e
        return TernaryForm(self.degree - 1, out)

    def substitute(self, m: Matrix) -> "TernaryForm":
        """The composite form f(M v), for a 3x3 matrix acting on coordinates."""
        if m.nrows != 3 or m.ncols != 3:
            raise ValueError("substitution needs a 3x3 matrix")
        lins = [
            TernaryForm(1, {(1, 0, 0): m.at(r, 0), (0, 1, 0): m.at(r, 1), (0, 0, 1): m.at(r, 2)})
            for r in range(3)
        ]
        powers: list[dict[int, TernaryForm]] = [
            {0: TernaryForm(0, {(0, 0, 0): 1})} for _ in range(3)
        ]

        def power(v: int, e: int) -> TernaryForm:
            memo = powers[v]
            if e not in memo:
                memo[e] = power(v, e - 1) * lins[v]
            return memo[e]

        total = TernaryForm.zero(self.degree)
        for (i, j, k), c in self._coeffs.items():
            total = total + (power(0, i) * power(1, j) * power(2, k)).scale(c)
        return total

    def canonical(self) -> "TernaryForm":
        """Rescale so the first nonzero coefficient (descending lex) is 1."""
        if self.is_zero:
            return self
        lead = self.terms()[0][1]
        return self.scale(1 / lead)

    # -- serialization -----------------------------------------------

    def to_json(self) -> list[list]:
        return [[i, j, k, str(c)] for (i, j, k), c in self.terms()]

    @classmethod
    def from_json(cls, records: Iterable) -> "TernaryForm":
        terms = [((int(i), int(j), int(k)), Fraction(str(c))) for i, j, k, c in records]
        if not terms:
            raise ValueError("cannot infer the degree of an empty form")
        degree = sum(terms[0][0])
        return cls(degree, terms)


class DegenerateEliminationError(ValueError):
    """The eliminated variable's leading coefficient is not constant.

    Resultant-based elimination only projects faithfully when both
    forms have full degree in the variable being eliminated; the caller
    should apply a coordinate change and retry.
    """


def _coefficient_polys(f: TernaryForm, var: int, u: int, v: int) -> list[list[Fraction]]:
    """Coefficient of var^k as a dehomogenized poly in u (with v -> 1).

    Entry k of the result is the coefficient form of var^k, written as
    a univariate list in the variable u; index = exponent of u.
    """
    d = f.degree
    out: list[list[Fraction]] = [[] for _ in range(d + 1)]
    for mono, c in f._coeffs.items():
        k = mono[var]
        i = mono[u]
        col = out[k]
        while len(col) <= i:
            col.append(Fraction(0))
        col[i] += c
    return [_poly.ptrim(col) for col in out]


def resultant_eliminate(f: TernaryForm, g: TernaryForm, var: int) -> TernaryForm:
    """Sylvester resultant of f and g with respect to one variable.

    Returns a form in the two remaining variables (exponent 0 on var),
    homogeneous of degree deg(f) * deg(g).  It vanishes at exactly the
    (u : v) admitting a common root in the eliminated variable.  Both
    inputs must have constant leading coefficient in var, otherwise
    :class:`DegenerateEliminationError` is raised.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero form")
    m, n = f.degree, g.degree
    if f.degree_in(var) < m or g.degree_in(var) < n:
        raise DegenerateEliminationError(
            f"leading coefficient in {VARS[var]} is not constant; change coordinates"
        )
    u, v = (w for w in range(3) if w != var)

    # Clear denominators so Bareiss runs over Z[t]; undo the scaling at the end.
    def to_int(form: TernaryForm) -> tuple[list[list[int]], int]:
        den = lcm(*(c.denominator for _, c in form.terms()))
        cols = _coefficient_polys(form.scale(den), var, u, v)
        return [[int(x) for x in col] for col in cols], den

    fc, fden = to_int(f)
    gc, gden = to_int(g)

    size = m + n
    rows: list[list[list[int]]] = []
    for shift in range(n):  # n rows of f coefficients, descending in var
        row = [[] for _ in range(size)]
        for k in range(m + 1):
            row[shift + (m - k)] = fc[k]
        rows.append(row)
    for shift in range(m):
        row = [[] for _ in range(size)]
        for k in range(n + 1):
            row[shift + (n - k)] = gc[k]
        rows.append(row)

    det = _poly.pdet_bareiss(rows)
    scale = Fraction(1, fden**n * gden**m)
    total_degree = m * n
    coeffs: dict[Mono, Fraction] = {}
    for i, c in enumerate(det):
        if c == 0:
            continue
        mono = [0, 0, 0]
        mono[u] = i
        mono[v] = total_degree - i
        coeffs[tuple(mono)] = Fraction(c) * scale
    return TernaryForm(total_degree, coeffs)
