"""Three-torsion detection on six-nodal plane sextics.

A plane sextic with ordinary nodes exactly at the six points of a
general-position configuration pulls back, on the associated double
cover, to a divisor class that is either trivial or of order three.
The certificates built here decide which, in exact arithmetic:

* ``node_profile`` checks that a candidate form really has six nodes,
* ``torsion_rank`` computes the matching space of nodal sextics whose
  local data agree with the candidate along each node (side ``"E"``)
  or along each exceptional conic (side ``"F"``),
* ``smooth_elsewhere`` certifies the curve has no singular points
  beyond the six nodes,
* ``certify`` bundles the above into an accept/reject verdict, and
  ``certify_pencil`` sweeps the distinguished pencil of products of
  complementary conic triples until a member certifies.

Rank two on side ``"E"`` is the torsion signature: the candidate then
moves in a pencil whose two distinguished members cut out the two
nontrivial torsion classes, inverse to one another.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import _modp
from ._poly import pdiv_exact, peval, pgcd, ptrim
from .association import DoubleSixRealization, exceptional_conics
from .forms import DegenerateEliminationError, TernaryForm, resultant_eliminate
from .linalg import Matrix, Rational, determinant, inverse, kernel_basis, rat
from .plane import (
    Config6,
    chart_quadratic_part,
    is_general_position,
    linear_system,
    tangent_cone,
)

_ZERO = Fraction(0)


# ----------------------------------------------------------------------
# Node profiles


@dataclass(frozen=True)
class NodeDiagnosis:
    """First failure found while checking the six required nodes."""

    point_label: int  # 1-based index of the offending configuration point
    multiplicity: int
    kind: str  # "smooth-point", "multiplicity-m", "degenerate-tangent-cone"

    @property
    def ok(self) -> bool:
        return False

    def describe(self) -> str:
        return f"point {self.point_label}: {self.kind}"


@dataclass(frozen=True)
class NodalSextic:
    """A degree-six form with ordinary nodes at all six configuration points."""

    config: Config6
    form: TernaryForm
    cones: tuple[tuple[Rational, Rational, Rational], ...]

    @property
    def ok(self) -> bool:
        return True


def node_profile(config: Config6, form: TernaryForm) -> Union[NodalSextic, NodeDiagnosis]:
    """Check that ``form`` has an ordinary node at every point of ``config``.

    Returns a ``NodalSextic`` carrying the six tangent-cone quadrics on
    success, or a ``NodeDiagnosis`` describing the first failure.
    """
    if form.degree != 6:
        raise ValueError("node profiles are defined for degree-six forms")
    if form.is_zero:
        raise ValueError("zero form has no node profile")
    cones = []
    for label, p in enumerate(config.points, start=1):
        tc = tangent_cone(form, p)
        if tc.multiplicity != 2:
            kind = (
                "smooth-point"
                if tc.multiplicity < 2
                else f"multiplicity-{tc.multiplicity}"
            )
            return NodeDiagnosis(label, tc.multiplicity, kind)
        if not tc.is_node:
            return NodeDiagnosis(label, 2, "degenerate-tangent-cone")
        cones.append(tc.quadric)
    return NodalSextic(config, form, tuple(cones))


# ----------------------------------------------------------------------
# Matching spaces and torsion rank


@dataclass(frozen=True)
class TorsionRank:
    """Dimension and basis of a matching space of nodal sextics."""

    side: str  # "E" or "F"
    dimension: int
    basis: tuple[TernaryForm, ...]

    @property
    def nontrivial(self) -> bool:
        # The candidate itself always matches, so dimension two means a
        # genuinely independent partner exists.
        return self.dimension == 2


def _proportionality_rows(
    vectors: Sequence[Sequence[Rational]], reference: Sequence[Rational]
) -> list[list[Rational]]:
    """Linear conditions forcing a combination of ``vectors`` onto the line
    spanned by ``reference``.

    Each vector and the reference live in Q^3.  When the reference is zero
    the conditions force every coordinate of the combination to vanish.
    """
    rows = []
    if all(x == 0 for x in reference):
        for t in range(3):
            rows.append([vec[t] for vec in vectors])
        return rows
    r0, r1, r2 = reference
    rows.append([r1 * vec[0] - r0 * vec[1] for vec in vectors])
    rows.append([r2 * vec[0] - r0 * vec[2] for vec in vectors])
    rows.append([r2 * vec[1] - r1 * vec[2] for vec in vectors])
    return rows


# Binary forms in (u, v) are full-length coefficient lists: entry i is the
# coefficient of u^i v^(d-i), so the length always equals degree + 1.


def _binary_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out

def _binary_div_exact(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Exact quotient of binary forms, preserving the degree convention."""
    deg = len(num) - len(den)
    if deg < 0:
        raise ArithmeticError("binary division with quotient of negative degree")
    pn = ptrim(list(num))
    pd = ptrim(list(den))
    if not pd:
        raise ZeroDivisionError("division of binary forms by zero")
    if not pn:
        return [_ZERO] * (deg + 1)
    # Trailing zeros are powers of the second variable; split them off,
    # divide the dehomogenized parts, and restore the degree.
    vn = len(num) - len(pn)
    vd = len(den) - len(pd)
    if vn < vd:
        raise ArithmeticError("binary division is not exact")
    q = pdiv_exact([Fraction(x) for x in pn], [Fraction(x) for x in pd])
    q = [Fraction(x) for x in q]
    return q + [_ZERO] * (deg + 1 - len(q))


def _compose_binary(form: TernaryForm, theta: tuple[list[Fraction], ...]) -> list[Fraction]:
    """Coefficients of form(theta_0, theta_1, theta_2) as a binary form."""
    target = 2 * form.degree
    powers: list[list[list[Fraction]]] = []
    for comp in theta:
        table = [[Fraction(1)]]
        for _ in range(form.degree):
            table.append(_binary_mul(table[-1], comp))
        powers.append(table)
    out = [_ZERO] * (target + 1)
    for (i, j, k), c in form.terms():
        piece = _binary_mul(powers[0][i], powers[1][j])
        piece = _binary_mul(piece, powers[2][k])
        for t, val in enumerate(piece):
            out[t] += c * val
    return out


def _det3(a: Sequence[Rational], b: Sequence[Rational], c: Sequence[Rational]) -> Rational:
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


_DIRECTION_CATALOG = (
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(1), Fraction(0)),
    (Fraction(1), Fraction(0), Fraction(1)),
    (Fraction(0), Fraction(1), Fraction(1)),
    (Fraction(1), Fraction(1), Fraction(1)),
    (Fraction(1), Fraction(2), Fraction(3)),
    (Fraction(2), Fraction(1), Fraction(5)),
)


@dataclass(frozen=True)
class ConicChart:
    """Rational parametrization data for one exceptional conic.

    ``theta`` maps a parameter point (u : v) to the conic; ``forced``
    is the squared product of the parameter values of the five
    configuration points lying on the conic, the factor every matching
    sextic restriction must contain.
    """

    conic_index: int  # 0-based index of the omitted configuration point
    base_index: int  # 0-based index of the configuration point used as base
    theta: tuple[list[Fraction], list[Fraction], list[Fraction]]
    forced: list[Fraction]


def conic_chart(config: Config6, conic: TernaryForm, conic_index: int) -> ConicChart:
    """Build a parametrization of an exceptional conic through a config point.

    The base point is the first configuration point on the conic.  A line
    through the base with direction d(u, v) = u r1 + v r2 meets the conic
    again at theta(u, v); the five configuration points on the conic then
    sit at explicit parameter values, giving the forced vanishing divisor.
    """
    if conic.degree != 2:
        raise ValueError("conic chart requires a degree-two form")
    base_index = next(
        j for j in range(6) if j != conic_index and conic.eval(config.points[j].coords) == 0
    )
    base = config.points[base_index].coords
    chart = None
    for a in range(len(_DIRECTION_CATALOG)):
        for b in range(a + 1, len(_DIRECTION_CATALOG)):
            r1, r2 = _DIRECTION_CATALOG[a], _DIRECTION_CATALOG[b]
            if _det3(base, r1, r2) == 0:
                continue
            # Secant coefficients along d = u r1 + v r2: the residual
            # intersection of the line through base is
            #   theta = c2 base - c1 d,
            # with c2 = conic(d) and c1 the polar pairing of base with d.
            f_r1 = conic.eval(r1)
            f_r2 = conic.eval(r2)
            mid = conic.eval(tuple(x + y for x, y in zip(r1, r2))) - f_r1 - f_r2
            c2 = [f_r2, mid, f_r1]
            c1 = [
                conic.eval(tuple(x + y for x, y in zip(base, r2))) - f_r2,
                conic.eval(tuple(x + y for x, y in zip(base, r1))) - f_r1,
            ]
            if all(x == 0 for x in c1):
                continue  # base is the vertex of this secant family
            theta = []
            for m in range(3):
                d_m = [r2[m], r1[m]]
                prod = _binary_mul(c1, d_m)
                theta.append([c2[t] * base[m] - prod[t] for t in range(3)])
            chart = ConicChart(conic_index, base_index, tuple(theta), [])
            break
        if chart is not None:
            break
    if chart is None:
        raise ValueError("no admissible secant frame for the conic")

    forced = [Fraction(1)]
    for k in range(6):
        if k == conic_index:
            continue
        if k == base_index:
            param = c1
        else:
            xk = config.points[k].coords
            param = [_det3(base, xk, r2), _det3(base, xk, r1)]
        if all(x == 0 for x in param):
            raise ValueError("degenerate parameter for a configuration point")
        forced = _binary_mul(forced, _binary_mul(param, param))
    return ConicChart(conic_index, base_index, chart.theta, forced)


def _conic_restriction(form: TernaryForm, chart: ConicChart) -> tuple[Fraction, Fraction, Fraction]:
    """Quotient of the conic restriction by the forced divisor, a binary quadric."""
    composed = _compose_binary(form, chart.theta)
    q = _binary_div_exact(composed, chart.forced)
    return (q[0], q[1], q[2])


def torsion_rank(
    sextic: NodalSextic,
    side: str,
    realization: DoubleSixRealization | None = None,
) -> TorsionRank:
    """Dimension of the space of nodal sextics matching ``sextic`` locally.

    Side ``"E"`` matches tangent cones at the six nodes; side ``"F"``
    matches restrictions to the six exceptional conics.  Both sides must
    agree, and dimension two signals nontrivial three-torsion.
    """
    if side not in ("E", "F"):
        raise ValueError("side must be 'E' or 'F'")
    system = linear_system(6, [(p, 2) for p in sextic.config.points])
    rows: list[list[Rational]] = []
    if side == "E":
        for i, p in enumerate(sextic.config.points):
            vectors = [chart_quadratic_part(g, p) for g in system.basis]
            rows.extend(_proportionality_rows(vectors, sextic.cones[i]))
    else:
        conics = (
            realization.conics if realization is not None else exceptional_conics(sextic.config)
        )
        for i in range(6):
            chart = conic_chart(sextic.config, conics[i], i)
            vectors = [_conic_restriction(g, chart) for g in system.basis]
            reference = _conic_restriction(sextic.form, chart)
            rows.extend(_proportionality_rows(vectors, reference))
    kernel = kernel_basis(Matrix(rows))
    basis = []
    for vec in kernel:
        g = TernaryForm.zero(6)
        for coeff, member in zip(vec, system.basis):
            if coeff != 0:
                g = g + member.scale(coeff)
        basis.append(g.canonical())
    return TorsionRank(side, len(kernel), tuple(basis))


# ----------------------------------------------------------------------
# Smoothness away from the nodes


@dataclass(frozen=True)
class SmoothnessVerdict:
    """Outcome of the singular-locus certification."""

    certified: bool
    attempts: int
    detail: str
    node_orders: tuple[int, ...] | None = None  # gcd multiplicity per node

    def describe(self) -> str:
        status = "smooth away from the nodes" if self.certified else "not certified"
        return f"{status} ({self.detail})"


def _coordinate_changes(attempts: int) -> list[Matrix]:
    mats = [Matrix.identity(3)]
    attempt = 1
    while len(mats) < attempts:
        rng = random.Random(f"doublesix-smooth:{attempt}")
        entries = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        m = Matrix(entries)
        if determinant(m) != 0:
            mats.append(m)
        attempt += 1
    return mats


def _binary_coefficients(form: TernaryForm) -> list[Fraction]:
    """Coefficient list of a form in (y, z) only, indexed by the y-degree."""
    out = [_ZERO] * (form.degree + 1)
    for (i, j, k), c in form.terms():
        if i != 0:
            raise ValueError("form still involves the eliminated variable")
        out[j] += c
    return out


def _restrict_line(form: TernaryForm, y: Fraction, z: Fraction) -> list[Fraction]:
    """Univariate coefficients of form(x, y, z) as a polynomial in x."""
    out = [_ZERO] * (form.degree + 1)
    for (i, j, k), c in form.terms():
        out[i] += c * y**j * z**k
    return ptrim(out)


def _divide_out_root(poly: list, root: Fraction) -> tuple[list, int]:
    """Divide an integer u-polynomial by (u - root) to exhaustion."""
    count = 0
    current = [Fraction(c) for c in poly]
    while current and peval(current, root) == 0:
        quotient = [_ZERO] * (len(current) - 1)
        carry = _ZERO
        for i in range(len(current) - 1, 0, -1):
            carry = current[i] + carry * root
            quotient[i - 1] = carry
        current = ptrim(quotient)
        count += 1
    return current, count


def _trailing_v_split(coeffs: list[Fraction]) -> tuple[list[Fraction], int]:
    """Split a binary form into (dehomogenized u-poly, power of v)."""
    trimmed = ptrim(list(coeffs))
    return trimmed, len(coeffs) - len(trimmed)


def _node_factor_audit(
    gcd_poly: list,
    v_power: int,
    projections: list[tuple[Fraction, Fraction]],
) -> tuple[bool, tuple[int, ...], str]:
    """Divide node-projection linears out of a common factor.

    Returns (ok, per-node orders, detail).  The factor is explained by the
    nodes exactly when every node absorbs at least one linear and nothing
    of positive degree remains.
    """
    current = [Fraction(c) for c in gcd_poly]
    orders = []
    for y, z in projections:
        if z == 0:
            if v_power < 1:
                return False, (), "node projection missing from the common factor"
            orders.append(v_power)
            v_power = 0
            continue
        current, count = _divide_out_root(current, y / z)
        if count < 1:
            return False, (), "node projection missing from the common factor"
        orders.append(count)
    if v_power > 0:
        return False, tuple(orders), "unexplained common root at infinity"
    if len(ptrim(current)) > 1:
        degree = len(ptrim(current)) - 1
        return False, tuple(orders), f"residual common factor of degree {degree}"
    return True, tuple(orders), "common factor fully explained by the nodes"


def _admissible_frames(form: TernaryForm, node_coords: list, attempts: int):
    """Coordinate frames in which the vertical projection is usable.

    Yields (moved form, moved nodes) for each catalog transform under
    which the projection vertex avoids the curve, the eliminations stay
    proper, and the nodes project to distinct points.
    """
    for transform in _coordinate_changes(attempts):
        moved = form.substitute(transform)
        if (
            moved.coefficient((6, 0, 0)) == 0
            or moved.coefficient((5, 1, 0)) == 0
            or moved.coefficient((5, 0, 1)) == 0
        ):
            yield None, "projection center or axis meets the curve"
            continue
        undo = inverse(transform)
        moved_nodes = [undo.apply(p) for p in node_coords]
        projections = [(q[1], q[2]) for q in moved_nodes]
        seen = set()
        distinct = True
        for y, z in projections:
            key = (Fraction(0), Fraction(1)) if y == 0 else (Fraction(1), z / y)
            if key in seen:
                distinct = False
                break
            seen.add(key)
        if not distinct:
            yield None, "two nodes share a projection line"
            continue
        yield (moved, moved_nodes), ""


def smooth_elsewhere(
    form: TernaryForm,
    nodes: Sequence,
    attempts: int = 4,
) -> SmoothnessVerdict:
    """Certify that ``form`` is singular only at the given node points.

    Projects the singular locus away from a coordinate vertex by
    eliminating the first variable from two partial-derivative pairs,
    takes the gcd of the two eliminants, and insists the gcd consist of
    node projections only, with a unique singular point on each node's
    vertical line.  Coordinate changes from a fixed catalog retry any
    coincidental failure.
    """
    if form.degree != 6:
        raise ValueError("smoothness certification targets degree-six forms")
    node_coords = [getattr(p, "coords", p) for p in nodes]
    last_detail = "no admissible coordinate system found"
    used = 0
    for frame, why in _admissible_frames(form, node_coords, attempts):
        used += 1
        if frame is None:
            last_detail = why
            continue
        moved, moved_nodes = frame
        projections = [(q[1], q[2]) for q in moved_nodes]
        fx = moved.partial(0)
        fy = moved.partial(1)
        fz = moved.partial(2)
        try:
            elim_y = resultant_eliminate(fx, fy, 0)
            elim_z = resultant_eliminate(fx, fz, 0)
        except DegenerateEliminationError:
            last_detail = "elimination degenerated in this coordinate system"
            continue
        if elim_y.is_zero or elim_z.is_zero:
            return SmoothnessVerdict(
                False, used, "partial derivatives share a factor: the curve is not reduced"
            )
        a_poly, a_v = _trailing_v_split(_binary_coefficients(elim_y))
        b_poly, b_v = _trailing_v_split(_binary_coefficients(elim_z))
        common = pgcd(a_poly, b_poly)
        ok, orders, detail = _node_factor_audit(common, min(a_v, b_v), projections)
        if not ok:
            last_detail = detail
            continue
        # Each node's vertical line may contain no second singular point.
        line_ok = True
        for q in moved_nodes:
            polys = [_restrict_line(g, q[1], q[2]) for g in (fx, fy, fz)]
            gcd_line = pgcd(pgcd(polys[0], polys[1]), polys[2])
            if not gcd_line:
                line_ok = False
                last_detail = "a node line lies in the singular locus"
                break
            reduced, count = _divide_out_root(gcd_line, q[0])
            if count < 1 or len(reduced) > 1:
                line_ok = False
                last_detail = "extra singular point on a node line"
                break
        if not line_ok:
            continue
        return SmoothnessVerdict(True, used, "only the six nodes are singular", orders)
    return SmoothnessVerdict(False, used, last_detail)


# ----------------------------------------------------------------------
# GF(p) screen for the smoothness check


def _modp_x_poly(form: TernaryForm, t: int, p: int) -> list[int] | None:
    """form(x, t, 1) mod p as an x-coefficient list, or None on bad reduction."""
    out = [0] * (form.degree + 1)
    tpow = [1] * (form.degree + 1)
    for j in range(1, form.degree + 1):
        tpow[j] = tpow[j - 1] * t % p
    for (i, j, k), c in form.terms():
        cm = _modp.frac_mod(Fraction(c), p)
        if cm is None:
            return None
        out[i] = (out[i] + cm * tpow[j]) % p
    return out


def _modp_resultant_x(f: TernaryForm, g: TernaryForm, p: int) -> list[int] | None:
    """Res_x(f, g) mod p as a binary coefficient list, by evaluation."""
    m = f.degree
    n = g.degree
    bound = m * n
    samples = []
    for t in range(bound + 1):
        fu = _modp_x_poly(f, t, p)
        gu = _modp_x_poly(g, t, p)
        if fu is None or gu is None:
            return None
        if fu[m] == 0 or gu[n] == 0:
            return None  # leading coefficient degenerates mod p
        size = m + n
        rows = []
        for shift in range(n):
            row = [0] * size
            for k in range(m + 1):
                row[shift + (m - k)] = fu[k]
            rows.append(row)
        for shift in range(m):
            row = [0] * size
            for k in range(n + 1):
                row[shift + (n - k)] = gu[k]
            rows.append(row)
        samples.append((t, _modp.det_mod(rows, p)))
    poly = _modp.interpolate_mod(samples, p)
    return poly + [0] * (bound + 1 - len(poly))


def _screen_frame(moved: TernaryForm, moved_nodes: list, primes: Sequence[int]) -> bool | None:
    """Node audit mod every prime for one coordinate frame."""
    fx = moved.partial(0)
    fy = moved.partial(1)
    fz = moved.partial(2)
    for p in primes:
        elim_y = _modp_resultant_x(fx, fy, p)
        elim_z = _modp_resultant_x(fx, fz, p)
        if elim_y is None or elim_z is None:
            return None
        a_poly = _modp.ptrim_mod(list(elim_y))
        b_poly = _modp.ptrim_mod(list(elim_z))
        if not a_poly or not b_poly:
            return False
        a_v = len(elim_y) - len(a_poly)
        b_v = len(elim_z) - len(b_poly)
        common = _modp.gcd_mod(a_poly, b_poly, p)
        v_power = min(a_v, b_v)
        ok = True
        for q in moved_nodes:
            ym = _modp.frac_mod(Fraction(q[1]), p)
            zm = _modp.frac_mod(Fraction(q[2]), p)
            if ym is None or zm is None:
                return None
            if zm == 0:
                if ym == 0 or v_power < 1:
                    ok = False
                    break
                v_power = 0
                continue
            root = ym * pow(zm, -1, p) % p
            common, count = _modp.divide_out_root_mod(common, root, p)
            if count < 1:
                ok = False
                break
        if ok and (v_power > 0 or len(common) > 1):
            ok = False
        if not ok:
            return False
    return True


def smooth_screen(
    form: TernaryForm,
    nodes: Sequence,
    primes: Sequence[int] = _modp.SCREEN_PRIMES[:2],
    attempts: int = 4,
) -> bool | None:
    """Fast mod-p screen for ``smooth_elsewhere``.

    Returns True when some coordinate frame passes the node audit mod
    every prime, False when two independent frames (or the only
    admissible one) report a persistent extra factor, None when no frame
    is conclusive.  Never a substitute for the exact check.
    """
    if form.degree != 6:
        raise ValueError("smoothness screens target degree-six forms")
    node_coords = [getattr(p, "coords", p) for p in nodes]
    alarms = 0
    for frame, _ in _admissible_frames(form, node_coords, attempts):
        if frame is None:
            continue
        verdict = _screen_frame(*frame, primes)
        if verdict is True:
            return True
        if verdict is False:
            alarms += 1
            if alarms >= 2:
                return False
    return False if alarms else None


# ----------------------------------------------------------------------
# Pencils and certificates


@dataclass(frozen=True)
class Pencil:
    """The pencil spanned by the two products of complementary conic triples."""

    config: Config6
    first: TernaryForm  # product of the conics omitting points 4, 5, 6
    second: TernaryForm  # product of the conics omitting points 1, 2, 3

    def member(self, lam: object, mu: object) -> TernaryForm:
        lam_r, mu_r = rat(lam), rat(mu)
        if lam_r == 0 and mu_r == 0:
            raise ValueError("pencil member requires a nonzero parameter pair")
        return self.first.scale(lam_r) + self.second.scale(mu_r)


def conic_product_pencil(
    config: Config6, realization: DoubleSixRealization | None = None
) -> Pencil:
    """Products of the two complementary triples of exceptional conics.

    Every member has multiplicity two at all six configuration points, so
    the pencil lives inside the ten-dimensional nodal system; its general
    member is the torsion candidate swept by ``certify_pencil``.
    """
    conics = realization.conics if realization is not None else exceptional_conics(config)
    first = (conics[3] * conics[4] * conics[5]).canonical()
    second = (conics[0] * conics[1] * conics[2]).canonical()
    return Pencil(config, first, second)


@dataclass(frozen=True)
class TorsionCertificate:
    """Accept/reject verdict for nontrivial three-torsion, with evidence."""

    config: Config6
    form: TernaryForm | None
    accepted: bool
    reasons: tuple[str, ...]
    rank_node_side: TorsionRank | None = None
    rank_conic_side: TorsionRank | None = None
    smoothness: SmoothnessVerdict | None = None
    member: tuple[str, str] | None = None  # pencil parameters when swept
    screened: bool = False

    def to_json(self) -> dict:
        data = {
            "accepted": self.accepted,
            "reasons": list(self.reasons),
            "config": self.config.to_json(),
            "screened": self.screened,
        }
        if self.form is not None:
            data["form"] = self.form.to_json()
        if self.rank_node_side is not None:
            data["rank_node_side"] = self.rank_node_side.dimension
        if self.rank_conic_side is not None:
            data["rank_conic_side"] = self.rank_conic_side.dimension
        if self.smoothness is not None:
            data["smooth_elsewhere"] = {
                "certified": self.smoothness.certified,
                "attempts": self.smoothness.attempts,
                "detail": self.smoothness.detail,
            }
        if self.member is not None:
            data["member"] = list(self.member)
        return data


def certify(
    config: Config6,
    form: TernaryForm,
    screen: bool = True,
    realization: DoubleSixRealization | None = None,
) -> TorsionCertificate:
    """Full three-torsion certificate for one candidate sextic.

    Acceptance requires general position, six ordinary nodes, matching
    rank two on the node side, and certified smoothness elsewhere.  The
    conic-side rank is computed as a cross-check and reported.
    """
    verdict = is_general_position(config)
    if not verdict.ok:
        return TorsionCertificate(
            config, form, False, ("configuration is not in general position",)
        )
    profile = node_profile(config, form)
    if not profile.ok:
        return TorsionCertificate(
            config, form, False, (f"node profile failed: {profile.describe()}",)
        )
    rank_e = torsion_rank(profile, "E", realization)
    rank_f = torsion_rank(profile, "F", realization)
    reasons = []
    screened = False
    if screen:
        hint = smooth_screen(form, config.points)
        screened = hint is not None
        if hint is False:
            reasons.append("prime screen predicts extra singular points")
    smooth = smooth_elsewhere(form, config.points)
    if rank_e.dimension != rank_f.dimension:
        reasons.append(
            "matching ranks disagree between the node and conic sides: "
            f"{rank_e.dimension} vs {rank_f.dimension}"
        )
    if rank_e.dimension < 2:
        reasons.append("no independent matching partner: torsion class is trivial")
    elif rank_e.dimension > 2:
        reasons.append("matching space too large: candidate is degenerate")
    if not smooth.certified:
        reasons.append(f"smoothness not certified: {smooth.detail}")
    accepted = (
        rank_e.dimension == 2 and rank_f.dimension == 2 and smooth.certified
    )
    if accepted:
        reasons = ["six ordinary nodes, matching rank two on both sides, smooth elsewhere"]
    return TorsionCertificate(
        config,
        form,
        accepted,
        tuple(reasons),
        rank_e,
        rank_f,
        smooth,
        screened=screened,
    )


def certify_pencil(
    config: Config6,
    screen: bool = True,
    max_members: int = 25,
    realization: DoubleSixRealization | None = None,
) -> TorsionCertificate:
    """Sweep the conic-product pencil until a member certifies.

    Members (1 : k) for k = 1, 2, ... are screened cheaply and then
    certified exactly; the first accepted member is returned.  A few
    members can fail by coincidence (an extra singular point), so the
    sweep continues past rejections up to ``max_members``.
    """
    verdict = is_general_position(config)
    if not verdict.ok:
        return TorsionCertificate(
            config, None, False, ("configuration is not in general position",)
        )
    pencil = conic_product_pencil(config, realization)
    last: TorsionCertificate | None = None
    for k in range(1, max_members + 1):
        candidate = pencil.member(1, k).canonical()
        profile = node_profile(config, candidate)
        if not profile.ok:
            last = TorsionCertificate(
                config,
                candidate,
                False,
                (f"node profile failed: {profile.describe()}",),
                member=("1", str(k)),
            )
            continue
        if screen and smooth_screen(candidate, config.points) is False:
            last = TorsionCertificate(
                config,
                candidate,
                False,
                ("prime screen predicts extra singular points",),
                member=("1", str(k)),
                screened=True,
            )
            continue
        cert = certify(config, candidate, screen=screen, realization=realization)
        cert = TorsionCertificate(
            cert.config,
            cert.form,
            cert.accepted,
            cert.reasons,
            cert.rank_node_side,
            cert.rank_conic_side,
            cert.smoothness,
            member=("1", str(k)),
            screened=cert.screened,
        )
        if cert.accepted:
            return cert
        last = cert
    if last is None:
        return TorsionCertificate(
            config, None, False, ("no pencil member was admissible",)
        )
    return last


def random_nodal_sextic(config: Config6, rng: random.Random, bound: int = 9) -> TernaryForm:
    """Random member of the ten-dimensional nodal system, for trials."""
    system = linear_system(6, [(p, 2) for p in config.points])
    while True:
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in system.basis]
        if not any(coeffs):
            continue
        g = TernaryForm.zero(6)
        for c, member in zip(coeffs, system.basis):
            if c != 0:
                g = g + member.scale(c)
        if not g.is_zero:
            return g.canonical()
