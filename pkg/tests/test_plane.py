"""Projective plane invariants: counts, incidence, duality, determinism."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcforge.errors import SamePointError, TooLargeError
from arcforge.gf import field_create
from arcforge.plane import (
    ProjLine,
    ProjPoint,
    ProjectivePlane,
    enumerate_points,
    incidence_form,
    plane_for,
)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]


@pytest.mark.parametrize("p,n,count", [(2, 1, 7), (3, 2, 91), (3, 3, 757), (2, 2, 21)])
def test_point_counts(p, n, count):
    field = field_create(p, n)
    assert len(enumerate_points(field)) == count


def test_enumeration_is_stable():
    field = field_create(3, 2)
    first = [P.codes for P in enumerate_points(field)]
    second = [P.codes for P in ProjectivePlane(field).points]
    assert first == second
    assert first[0] == (1, 0, 0)
    assert first[-1] == (0, 0, 1)


def test_point_index_roundtrip():
    field = field_create(3, 2)
    for i, P in enumerate(enumerate_points(field)):
        assert P.index == i


def test_normalization_gives_unique_representatives():
    field = field_create(2, 2)
    seen = set()
    for x0 in range(4):
        for x1 in range(4):
            for x2 in range(4):
                if (x0, x1, x2) == (0, 0, 0):
                    continue
                seen.add(ProjPoint(field, (x0, x1, x2)).codes)
    assert len(seen) == 21


def test_line_through_axis_points():
    field = field_create(3, 2)
    pl = plane_for(field)
    P = ProjPoint(field, (1, 0, 0))
    Q = ProjPoint(field, (0, 1, 0))
    assert pl.line_through(P, Q).codes == (0, 0, 1)  # Z = 0


def test_line_through_111_and_100():
    field = field_create(3, 1)
    pl = plane_for(field)
    P = ProjPoint(field, (1, 1, 1))
    Q = ProjPoint(field, (1, 0, 0))
    line = pl.line_through(P, Q)
    assert line.codes == (0, 1, 2)  # Y - Z = 0 normalized
    assert line.incident(P) and line.incident(Q)


def test_line_through_same_point_raises():
    field = field_create(3, 2)
    pl = plane_for(field)
    P = ProjPoint(field, (1, 2, 0))
    scaled = ProjPoint(field, (2, field.mul(2, 2), 0))
    with pytest.raises(SamePointError):
        pl.line_through(P, scaled)


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_line_through_incidence_postcondition(p, n):
    field = field_create(p, n)
    pl = plane_for(field)
    pts = pl.points
    for i in range(0, len(pts), 7):
        for j in range(0, len(pts), 11):
            if pts[i] == pts[j]:
                continue
            line = pl.line_through(pts[i], pts[j])
            assert line.incident(pts[i]) and line.incident(pts[j])


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_points_on_line_count_and_incidence(p, n):
    field = field_create(p, n)
    pl = plane_for(field)
    for line in pl.lines:
        pts = pl.points_on_line(line)
        assert len(pts) == field.q + 1
        assert all(line.incident(P) for P in pts)
        idxs = [P.index for P in pts]
        assert idxs == sorted(idxs)


def test_points_on_z_equals_0_gf9():
    field = field_create(3, 2)
    pl = plane_for(field)
    pts = pl.points_on_line(ProjLine(field, (0, 0, 1)))
    assert len(pts) == 10
    assert ProjPoint(field, (1, 0, 0)) in pts
    assert ProjPoint(field, (0, 1, 0)) in pts


def test_pencil_covers_plane_and_meets_in_p():
    field = field_create(3, 2)
    pl = plane_for(field)
    P = ProjPoint(field, (1, 2, 5))
    lines = pl.pencil(P)
    assert len(lines) == 10
    assert all(line.incident(P) for line in lines)
    covered = set()
    for line in lines:
        covered.update(Q.index for Q in pl.points_on_line(line))
    assert len(covered) == 91
    # pairwise intersections are exactly {P}
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            common = set(Q.index for Q in pl.points_on_line(lines[i])) & set(
                Q.index for Q in pl.points_on_line(lines[j])
            )
            assert common == {P.index}


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_incidence_duality_exhaustive(p, n):
    # the incidence matrix in canonical order is symmetric: point i on line j
    # iff point j on line i (both reduce to the same bilinear form)
    field = field_create(p, n)
    pl = plane_for(field)
    pts = pl.points
    for i in range(pl.size):
        for j in range(pl.size):
            a = incidence_form(field, pts[i].codes, pts[j].codes)
            b = incidence_form(field, pts[j].codes, pts[i].codes)
            assert (a == 0) == (b == 0)


@pytest.mark.parametrize("p,n", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_two_points_one_line_two_lines_one_point(p, n):
    field = field_create(p, n)
    pl = plane_for(field)
    # every line has q+1 points and every point q+1 lines; double counting
    line_pts = pl.line_point_indices
    assert all(len(t) == field.q + 1 for t in line_pts)
    assert all(len(t) == field.q + 1 for t in pl.point_line_indices)
    # distinct point pairs covered exactly once
    pair_count = sum(len(t) * (len(t) - 1) // 2 for t in line_pts)
    assert pair_count == pl.size * (pl.size - 1) // 2


def test_line_masks_match_point_lists():
    field = field_create(3, 2)
    pl = plane_for(field)
    for j, idxs in enumerate(pl.line_point_indices):
        mask = pl.line_masks[j]
        assert mask.bit_count() == field.q + 1
        assert all(mask >> i & 1 for i in idxs)


def test_too_large_plane_rejected():
    field = field_create(2, 11)
    with pytest.raises(TooLargeError):
        ProjectivePlane(field, qmax=1024)


def test_qmax_env_override(monkeypatch):
    monkeypatch.setenv("ARCFORGE_QMAX", "8")
    field = field_create(3, 2)
    with pytest.raises(TooLargeError):
        ProjectivePlane(field)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8))
@settings(max_examples=100)
def test_normalization_is_scale_invariant(x0, x1, x2):
    field = field_create(3, 2)
    if (x0, x1, x2) == (0, 0, 0):
        return
    P = ProjPoint(field, (x0, x1, x2))
    for s in range(1, 9):
        scaled = tuple(field.mul(s, c) for c in (x0, x1, x2))
        assert ProjPoint(field, scaled).codes == P.codes
