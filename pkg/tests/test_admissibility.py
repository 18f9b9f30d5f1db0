from fractions import Fraction as F

import pytest

from corpus import CUBE, SQUARE, random_invariant_polytopes
from reductive_ih.admissibility import (admissibility_report, admissible_faces, face_symmetry,
                                        image_vertex_set, is_admissible)
from reductive_ih.polyhedra import polytope_from_vertices
from reductive_ih.rootdatum import generate_weyl, preset, torus

GL2 = preset("GL2")
W_GL2 = generate_weyl(GL2)


def _P(vs):
    return polytope_from_vertices(2, vs)


def _pts(vs):
    return sorted(tuple(F(x) for x in v) for v in vs)


def test_examples():
    assert not is_admissible(GL2, W_GL2, _P([(0, 1)]))
    assert is_admissible(GL2, W_GL2, _P(SQUARE))
    assert is_admissible(GL2, W_GL2, _P([(1, 0), (0, 1)]))


def test_failure_reports():
    r = admissibility_report(GL2, W_GL2, _P([(0, 1)]))
    assert r.failed_condition == "i" and "condition i" in r.describe()
    # an edge crossing the diagonal, not symmetric: its mirror overlaps it
    r = admissibility_report(GL2, W_GL2, _P([(2, 0), (0, 1)]))
    assert r.failed_condition == "ii" and r.witness_element is not None
    wP = polytope_from_vertices(2, [tuple(sum(a * x for a, x in zip(row, v)) for row in r.witness_element)
                                    for v in _P([(2, 0), (0, 1)]).vertices])
    assert wP.contains(r.witness_point) and _P([(2, 0), (0, 1)]).contains(r.witness_point)


def test_symmetry_data_of_square_faces():
    sq = _P(SQUARE)
    faces = {tuple(af.vertices): af.symmetry for af in admissible_faces(GL2, W_GL2, sq)}
    s11 = faces[tuple(_pts([(1, 1)]))]
    assert (s11.I, s11.J, s11.K) == ((0,), (0,), ())
    s10 = faces[tuple(_pts([(1, 0)]))]
    assert (s10.I, s10.J, s10.K) == ((), (), ())


def test_symmetry_of_diagonal_edge():
    seg = _P([(1, 0), (0, 1)])
    s = face_symmetry(GL2, W_GL2, seg)
    assert (s.I, s.J, s.K) == ((0,), (), (0,))
    assert s.normalizer_order == 2 and s.centralizer_order == 1


def test_toric_all_faces_admissible():
    P = polytope_from_vertices(3, CUBE)
    T = torus(3)
    assert len(admissible_faces(T, generate_weyl(T), P)) == 27


def test_square_has_six_admissible_faces():
    faces = admissible_faces(GL2, W_GL2, _P(SQUARE))
    got = sorted(tuple(af.vertices) for af in faces)
    expected = sorted(tuple(_pts(vs)) for vs in [SQUARE, [(0, 0), (1, 0)], [(1, 0), (1, 1)],
                                                  [(0, 0)], [(1, 0)], [(1, 1)]])
    assert got == expected


def test_two_orbit_example():
    faces = admissible_faces(GL2, W_GL2, _P([(2, 0), (0, 2)]))
    assert sorted(tuple(af.vertices) for af in faces) == sorted(
        [tuple(_pts([(0, 2), (2, 0)])), tuple(_pts([(2, 0)]))])


def test_one_admissible_face_per_orbit():
    """Every face is W-conjugate to exactly one admissible face."""
    for name, verts in random_invariant_polytopes(12, seed=3):
        rd = preset(name)
        W = generate_weyl(rd)
        P = polytope_from_vertices(rd.rank, verts)
        admissible = {frozenset(af.vertices) for af in admissible_faces(rd, W, P)}
        for face in P.faces:
            orbit = {image_vertex_set(W, w, face.vertices) for w in range(len(W))}
            assert len(orbit & admissible) == 1, (name, face)


def test_admissible_faces_respect_symmetry_invariants():
    for name, verts in random_invariant_polytopes(12, seed=4):
        rd = preset(name)
        W = generate_weyl(rd)
        for af in admissible_faces(rd, W, polytope_from_vertices(rd.rank, verts)):
            s = af.symmetry
            assert set(s.J) <= set(s.I) and set(s.K) == set(s.I) - set(s.J)
            assert all(rd.cartan[k][j] == 0 for k in s.K for j in s.J)
