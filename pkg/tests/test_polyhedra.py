import random
from fractions import Fraction as F

import pytest

from corpus import CUBE, OCTAHEDRON, PYRAMID, SQUARE, TESSERACT, random_lattice_polytope
from reductive_ih.polyhedra import (NotPointed, NotPositive, cone_facet_normals,
                                    cone_from_generators, difference_lattice, link_slice,
                                    normal_cone, polytope_from_vertices, quotient_map,
                                    relint_point, relints_disjoint, scale, transform)


def _face(P, verts):
    target = {tuple(F(x) for x in v) for v in verts}
    return next(f for f in P.faces if set(f.vertices) == target)


def _pts(vs):
    return {tuple(F(x) for x in v) for v in vs}


def test_square():
    P = polytope_from_vertices(2, SQUARE)
    assert P.dim == 2 and len(P.facets) == 4 and len(P.vertices) == 4


def test_midpoint_removed():
    P = polytope_from_vertices(2, [(0, 0), (1, 0), ("1/2", 0)])
    assert set(P.vertices) == _pts([(0, 0), (1, 0)])
    assert P.dim == 1


def test_square_pyramid_facets():
    P = polytope_from_vertices(3, PYRAMID)
    assert len(P.facets) == 5
    assert sorted(sum(1 for v in P.vertices if f.value(v) == 0) for f in P.facets) == [3, 3, 3, 3, 4]


def test_face_counts():
    assert polytope_from_vertices(2, SQUARE).face_counts() == [4, 4, 1]
    assert polytope_from_vertices(3, PYRAMID).face_counts() == [5, 8, 5, 1]
    assert polytope_from_vertices(2, [(3, 3)]).face_counts() == [1]
    assert polytope_from_vertices(3, CUBE).face_counts() == [8, 12, 6, 1]
    assert polytope_from_vertices(3, OCTAHEDRON).face_counts() == [6, 12, 8, 1]
    assert polytope_from_vertices(4, TESSERACT).face_counts() == [16, 32, 24, 8, 1]


def test_euler_relation_random():
    rng = random.Random(3)
    for _ in range(25):
        d = rng.choice([2, 3, 3, 4])
        P = polytope_from_vertices(d, random_lattice_polytope(rng, d, d + 3, 2 if d < 4 else 1))
        counts = P.face_counts()
        # sum_{k<d} (-1)^k f_k = 1 - (-1)^d
        assert sum((-1) ** k * f for k, f in enumerate(counts[:-1])) == 1 - (-1) ** d


def test_lower_dimensional_polytope_has_hull_equations():
    P = polytope_from_vertices(3, [(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert P.dim == 2 and len(P.equalities) == 1 and len(P.facets) == 3
    assert P.contains((F(1, 4), F(1, 4), 1)) and not P.contains((F(1, 4), F(1, 4), 0))
    # facet normals lie in the direction space of the hull
    for f in P.facets:
        assert f.normal[2] == 0


def test_relint_points():
    seg = polytope_from_vertices(2, [(0, 0), (1, 0)])
    assert relint_point(seg) == (F(1, 2), 0)
    assert relint_point(polytope_from_vertices(2, [(2, 5)])) == (2, 5)
    assert relint_point(polytope_from_vertices(2, SQUARE)) == (F(1, 2), F(1, 2))


def test_relints_disjoint():
    P = polytope_from_vertices(2, [(1, 0), (2, 0)])
    Q = polytope_from_vertices(2, [(0, 1), (0, 2)])
    assert relints_disjoint(P, Q)
    assert not relints_disjoint(P, P)
    assert relints_disjoint(polytope_from_vertices(1, [(0,), (1,)]), polytope_from_vertices(1, [(1,), (2,)]))


SWAP = [[0, 1], [1, 0]]


def test_transform():
    sq = polytope_from_vertices(2, SQUARE)
    assert transform(sq, SWAP) == sq
    assert transform(polytope_from_vertices(2, [(1, 0), (2, 0)]), SWAP) == polytope_from_vertices(2, [(0, 1), (0, 2)])
    assert transform(sq, [[1, 0], [0, 1]]) == sq
    # pulled-back facets still describe the image
    img = transform(polytope_from_vertices(2, [(0, 0), (2, 0), (0, 1)]), [[1, 1], [0, 1]])
    for v in img.vertices:
        assert all(f.value(v) >= 0 for f in img.facets)
        assert sum(1 for f in img.facets if f.value(v) == 0) == 2


def test_scale():
    P = scale(polytope_from_vertices(2, SQUARE), 3)
    assert set(P.vertices) == _pts([(0, 0), (3, 0), (0, 3), (3, 3)])


def test_difference_lattice():
    sq = polytope_from_vertices(2, SQUARE)
    assert difference_lattice(_face(sq, [(0, 0)])) == []
    seg = polytope_from_vertices(2, [(0, 0), (2, 0)])
    assert [tuple(abs(x) for x in b) for b in difference_lattice(seg)] == [(1, 0)]
    basis = difference_lattice(sq)
    assert len(basis) == 2 and abs(basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]) == 1


def _check_quotient(qm):
    for b in qm.kernel_basis:
        assert not any(qm.project(b))
    for k in range(qm.target_rank):
        e = tuple(int(i == k) for i in range(qm.target_rank))
        assert qm.project(qm.lift(e)) == e


def test_quotient_maps():
    qm = quotient_map([(1, 0)], 2)
    assert qm.target_rank == 1
    assert qm.project((0, 1)) in ((1,), (-1,)) and qm.project((5, 0)) == (0,)
    _check_quotient(qm)
    ident = quotient_map([], 3)
    assert ident.project((1, 2, 3)) == (1, 2, 3)
    full = quotient_map([(1, 0), (0, 1)], 2)
    assert full.target_rank == 0 and full.project((4, 5)) == ()
    _check_quotient(quotient_map([(1, 2, 3)], 3))
    _check_quotient(quotient_map([(1, 1, 0), (0, 1, 1)], 3))


def test_quotient_rejects_unsaturated_kernel():
    with pytest.raises(ValueError):
        quotient_map([(2, 0)], 2)


def test_normal_cone_of_square_corner():
    sq = polytope_from_vertices(2, SQUARE)
    cone = normal_cone(sq, _face(sq, [(0, 0)]), quotient_map([], 2))
    assert set(cone.extreme_rays) == {(1, 0), (0, 1)}


def test_normal_cone_of_pyramid_apex():
    P = polytope_from_vertices(3, PYRAMID)
    cone = normal_cone(P, _face(P, [(0, 0, 1)]), quotient_map([], 3))
    assert set(cone.extreme_rays) == {(1, 0, -1), (0, 1, -1), (0, 0, -1), (1, 1, -1)}


def test_normal_cone_of_whole_segment_is_zero():
    seg = polytope_from_vertices(1, [(0,), (1,)])
    face = seg.faces[-1]
    assert face.is_whole()
    cone = normal_cone(seg, face, quotient_map(difference_lattice(face), 1))
    assert cone.ambient_rank == 0 and cone.extreme_rays == ()


def test_cone_pointedness():
    assert not cone_from_generators(2, [(1, 0), (-1, 0)]).pointed
    assert cone_from_generators(2, [(1, 0), (1, 1), (0, 1)]).extreme_rays == ((0, 1), (1, 0))
    with pytest.raises(NotPointed):
        P = polytope_from_vertices(2, SQUARE)
        normal_cone(P, P.faces[-1], quotient_map([], 2))


def test_link_slice_examples():
    quadrant = cone_from_generators(2, [(1, 0), (0, 1)])
    P, n = link_slice(quadrant, (1, 1))
    assert n == 1 and set(P.vertices) == _pts([(1, 0), (0, 1)])

    ray = cone_from_generators(1, [(1,)])
    P, n = link_slice(ray, (1,))
    assert n == 1 and set(P.vertices) == _pts([(1,)])

    apex = cone_from_generators(3, [(1, 0, -1), (0, 1, -1), (0, 0, -1), (1, 1, -1)])
    P, n = link_slice(apex, (0, 0, -1))
    assert n == 1 and P.dim == 2
    assert set(P.vertices) == _pts([(1, 0, -1), (0, 1, -1), (0, 0, -1), (1, 1, -1)])


def test_link_slice_level_is_lcm():
    cone = cone_from_generators(2, [(1, 0), (0, 1)])
    P, n = link_slice(cone, (2, 3))
    assert n == 6 and set(P.vertices) == _pts([(3, 0), (0, 2)])
    P2, n2 = link_slice(cone, (2, 3), multiple=2)
    assert n2 == 12 and set(P2.vertices) == _pts([(6, 0), (0, 4)])


def test_link_slice_needs_positive_functional():
    with pytest.raises(NotPositive):
        link_slice(cone_from_generators(2, [(1, 0), (0, 1)]), (1, -1))


def test_cone_facet_normals():
    quadrant = cone_from_generators(2, [(1, 0), (0, 1)])
    assert sorted(cone_facet_normals(quadrant)) == [(0, 1), (1, 0)]
    apex = cone_from_generators(3, [(1, 0, -1), (0, 1, -1), (0, 0, -1), (1, 1, -1)])
    normals = cone_facet_normals(apex)
    assert len(normals) == 4
    for nrm in normals:
        assert all(sum(a * b for a, b in zip(nrm, rho)) >= 0 for rho in apex.extreme_rays)


def test_rejects_too_many_dimensions():
    with pytest.raises(ValueError):
        polytope_from_vertices(7, [(0,) * 7])
