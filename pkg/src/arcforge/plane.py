"""The projective plane over GF(q): normalized points and lines, incidence.

Points and lines are homogeneous triples of field codes, normalized so the
first nonzero coordinate is 1.  The canonical enumeration order is
(1:y:z) by code, then (0:1:z), then (0:0:1), which gives every point and
line a closed-form index in [0, q^2+q+1).  Arc verification works on those
indices and on per-line bitmasks of member points, so the O(q^3) incidence
scans never touch field arithmetic in their inner loops.
"""

from __future__ import annotations

import os

from .errors import SamePointError, TooLargeError
from .gf import FieldElement, FieldSpec

DEFAULT_QMAX = 1 << 10


def plane_qmax() -> int:
    """Size cap for full-plane enumeration; override with ARCFORGE_QMAX."""
    env = os.environ.get("ARCFORGE_QMAX")
    return int(env) if env else DEFAULT_QMAX


def normalize_triple(field: FieldSpec, codes) -> tuple[int, int, int] | None:
    """Scale so the first nonzero coordinate is 1; None for (0,0,0)."""
    x0, x1, x2 = codes
    if x0 == 0 and x1 == 0 and x2 == 0:
        return None
    if x0 != 0:
        if x0 == 1:
            return (x0, x1, x2)
        s = field.inv(x0)
        return (1, field.mul(s, x1), field.mul(s, x2))
    if x1 != 0:
        if x1 == 1:
            return (0, 1, x2)
        return (0, 1, field.div(x2, x1))
    return (0, 0, 1)


class _ProjTriple:
    """Shared behaviour of normalized points and lines."""

    __slots__ = ("field", "codes")

    def __init__(self, field: FieldSpec, codes, normalize: bool = True):
        if normalize:
            norm = normalize_triple(field, codes)
            if norm is None:
                raise ValueError("(0, 0, 0) is not projective")
            codes = norm
        self.field = field
        self.codes = tuple(codes)

    @property
    def index(self) -> int:
        """Position in the canonical enumeration of the plane."""
        q = self.field.q
        x0, x1, x2 = self.codes
        if x0 == 1:
            return x1 * q + x2
        if x1 == 1:
            return q * q + x2
        return q * q + q

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return tuple(FieldElement(self.field, c) for c in self.codes)

    def coeff_lists(self) -> list[list[int]]:
        """Serialized form: triple of coefficient vectors."""
        return [list(self.field.digits(c)) for c in self.codes]

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and self.field == other.field
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.field.key, self.codes))

    def __repr__(self) -> str:
        parts = ":".join(str(list(self.field.digits(c))) for c in self.codes)
        return f"{type(self).__name__}({parts})"


class ProjPoint(_ProjTriple):
    """A point of PG(2, q), in normalized homogeneous coordinates."""


class ProjLine(_ProjTriple):
    """A line of PG(2, q), as the normalized dual triple of its equation."""

    def incident(self, point: ProjPoint) -> bool:
        return incidence_form(self.field, self.codes, point.codes) == 0


def incidence_form(field: FieldSpec, a, x) -> int:
    """a0*x0 + a1*x1 + a2*x2 as a field code."""
    s = field.mul(a[0], x[0])
    s = field.add(s, field.mul(a[1], x[1]))
    return field.add(s, field.mul(a[2], x[2]))


def _index_to_codes(q: int, i: int) -> tuple[int, int, int]:
    if i < q * q:
        return (1, i // q, i % q)
    if i < q * q + q:
        return (0, 1, i - q * q)
    return (0, 0, 1)


def _solve_linear_form(field: FieldSpec, a) -> list[tuple[int, int, int]]:
    """All normalized triples x with a.x = 0, in canonical index order."""
    a0, a1, a2 = a
    out = []
    if a2 != 0:
        inv2 = field.inv(a2)
        for y in range(field.q):
            rhs = field.neg(field.add(a0, field.mul(a1, y)))
            out.append((1, y, field.mul(rhs, inv2)))
        out.append((0, 1, field.mul(field.neg(a1), inv2)))
    elif a1 != 0:
        inv1 = field.inv(a1)
        y = field.mul(field.neg(a0), inv1)
        for z in range(field.q):
            out.append((1, y, z))
        out.append((0, 0, 1))
    else:
        for z in range(field.q):
            out.append((0, 1, z))
        out.append((0, 0, 1))
    return out


class ProjectivePlane:
    """PG(2, q) with cached enumeration and incidence tables."""

    def __init__(self, field: FieldSpec, qmax: int | None = None):
        cap = qmax if qmax is not None else plane_qmax()
        if field.q > cap:
            raise TooLargeError(f"q = {field.q} exceeds plane cap {cap}")
        self.field = field
        self.q = field.q
        self.size = field.q**2 + field.q + 1
        self._points: list[ProjPoint] | None = None
        self._lines: list[ProjLine] | None = None
        self._line_points: list[tuple[int, ...]] | None = None
        self._line_masks: list[int] | None = None
        self._point_lines: list[tuple[int, ...]] | None = None

    # -- enumeration ---------------------------------------------------------

    @property
    def points(self) -> list[ProjPoint]:
        if self._points is None:
            self._points = [
                ProjPoint(self.field, _index_to_codes(self.q, i), normalize=False)
                for i in range(self.size)
            ]
        return self._points

    @property
    def lines(self) -> list[ProjLine]:
        if self._lines is None:
            self._lines = [
                ProjLine(self.field, _index_to_codes(self.q, i), normalize=False)
                for i in range(self.size)
            ]
        return self._lines

    def point_at(self, i: int) -> ProjPoint:
        return self.points[i]

    def line_at(self, i: int) -> ProjLine:
        return self.lines[i]

    def iter_point_codes(self):
        """Canonical point triples without materializing ProjPoint objects."""
        for i in range(self.size):
            yield _index_to_codes(self.q, i)

    # -- incidence -----------------------------------------------------------

    def line_through(self, P: ProjPoint, Q: ProjPoint) -> ProjLine:
        """The unique line incident with two distinct points (cross product)."""
        f = self.field
        p, r = P.codes, Q.codes
        a = (
            f.sub(f.mul(p[1], r[2]), f.mul(p[2], r[1])),
            f.sub(f.mul(p[2], r[0]), f.mul(p[0], r[2])),
            f.sub(f.mul(p[0], r[1]), f.mul(p[1], r[0])),
        )
        if a == (0, 0, 0):
            raise SamePointError(f"{P} and {Q} coincide")
        return ProjLine(f, a)

    def points_on_line(self, line: ProjLine) -> list[ProjPoint]:
        """The q+1 points incident with a line, in canonical order."""
        return [
            ProjPoint(self.field, c, normalize=False)
            for c in _solve_linear_form(self.field, line.codes)
        ]

    def pencil(self, P: ProjPoint) -> list[ProjLine]:
        """The q+1 lines through a point, in canonical order."""
        return [
            ProjLine(self.field, c, normalize=False)
            for c in _solve_linear_form(self.field, P.codes)
        ]

    # -- index tables for arc scans -------------------------------------------

    def _build_incidence(self) -> None:
        line_points = []
        masks = []
        point_lines: list[list[int]] = [[] for _ in range(self.size)]
        for j in range(self.size):
            a = _index_to_codes(self.q, j)
            idxs = tuple(
                ProjPoint(self.field, c, normalize=False).index
                for c in _solve_linear_form(self.field, a)
            )
            line_points.append(idxs)
            mask = 0
            for i in idxs:
                mask |= 1 << i
                point_lines[i].append(j)
            masks.append(mask)
        self._line_points = line_points
        self._line_masks = masks
        self._point_lines = [tuple(v) for v in point_lines]

    @property
    def line_point_indices(self) -> list[tuple[int, ...]]:
        if self._line_points is None:
            self._build_incidence()
        return self._line_points

    @property
    def line_masks(self) -> list[int]:
        if self._line_masks is None:
            self._build_incidence()
        return self._line_masks

    @property
    def point_line_indices(self) -> list[tuple[int, ...]]:
        """For each point index, the sorted indices of its pencil lines."""
        if self._point_lines is None:
            self._build_incidence()
        return self._point_lines


_PLANE_CACHE: dict[tuple, ProjectivePlane] = {}


def plane_for(field: FieldSpec) -> ProjectivePlane:
    if field.key not in _PLANE_CACHE:
        _PLANE_CACHE[field.key] = ProjectivePlane(field)
    return _PLANE_CACHE[field.key]


def enumerate_points(field: FieldSpec) -> list[ProjPoint]:
    """All q^2+q+1 points of PG(2, q) in canonical order."""
    return plane_for(field).points
