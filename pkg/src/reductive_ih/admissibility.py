"""W-admissibility of lattice polytopes and the symmetry data J <= I of faces."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactmath import Constraint, StrictSystem, solve, GE
from .polyhedra import (Face, QuotientMap, RationalPolytope, difference_lattice, quotient_map,
                        relint_point, transform)
from .rootdatum import RootDatum, WeylGroup


class NonParabolicSymmetry(RuntimeError):
    pass


class ConjugateFaces(RuntimeError):
    pass


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    failed_condition: str | None = None  # "i" or "ii"
    witness_element: tuple | None = None  # Weyl matrix for a condition (ii) failure
    witness_point: tuple | None = None    # common relative-interior point, or a dominant relint point

    def describe(self) -> str:
        if self.admissible:
            return "admissible: true"
        if self.failed_condition == "i":
            return "admissible: false (condition i: relative interior misses the dominant chamber)"
        return (f"admissible: false (condition ii: w = {self.witness_element} overlaps the relative "
                f"interior at {tuple(str(x) for x in self.witness_point)})")


def _act(w, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in w)


def image_vertex_set(W: WeylGroup, w: int, vertices) -> frozenset:
    m = W.elements[w]
    return frozenset(_act(m, v) for v in vertices)


def admissibility_report(rd: RootDatum, W: WeylGroup, P: RationalPolytope) -> AdmissibilityReport:
    if rd.n_simple == 0:
        # no chamber walls and no reflections: both conditions hold
        return AdmissibilityReport(True, witness_point=relint_point(P))
    cons = P.relint_constraints()
    cons += [Constraint.make(c, GE, 0) for c in rd.simple_coroots]
    point = solve(StrictSystem(tuple(cons))) if cons else [Fraction(0)] * P.ambient_rank
    if point is None:
        return AdmissibilityReport(False, "i")
    verts = P.vertex_set
    for w in range(1, len(W)):
        if image_vertex_set(W, w, P.vertices) == verts:
            continue
        wP = transform(P, W.elements[w])
        common = solve(StrictSystem(tuple(P.relint_constraints() + wP.relint_constraints())))
        if common is not None:
            return AdmissibilityReport(False, "ii", W.elements[w], tuple(common))
    return AdmissibilityReport(True, witness_point=tuple(point))


def is_admissible(rd: RootDatum, W: WeylGroup, P: RationalPolytope) -> bool:
    return admissibility_report(rd, W, P).admissible


def wall_roots(rd: RootDatum, vertices) -> tuple[int, ...]:
    """Simple roots whose coroots vanish on every vertex."""
    return tuple(i for i in range(rd.n_simple) if all(rd.pairing(i, v) == 0 for v in vertices))


@dataclass(frozen=True)
class FaceSymmetry:
    I: tuple[int, ...]
    J: tuple[int, ...]
    K: tuple[int, ...]
    normalizer_order: int
    centralizer_order: int


def setwise_stabilizer(W: WeylGroup, vertices) -> list[int]:
    S = frozenset(vertices)
    return [w for w in range(len(W)) if image_vertex_set(W, w, vertices) == S]


def pointwise_stabilizer(W: WeylGroup, vertices) -> list[int]:
    return [w for w in range(len(W)) if all(_act(W.elements[w], v) == tuple(v) for v in vertices)]


def face_symmetry(rd: RootDatum, W: WeylGroup, phi) -> FaceSymmetry:
    verts = [tuple(v) for v in phi.vertices]
    N = set(setwise_stabilizer(W, verts))
    C = set(pointwise_stabilizer(W, verts))
    I = tuple(i for i, s in enumerate(W.generators) if s in N)
    J = tuple(i for i, s in enumerate(W.generators) if s in C)
    if set(W.parabolic_elements(I)) != N:
        raise NonParabolicSymmetry(f"setwise stabilizer of {verts} is not the parabolic W_I, I={I}")
    if set(W.parabolic_elements(J)) != C:
        raise NonParabolicSymmetry(f"pointwise stabilizer of {verts} is not the parabolic W_J, J={J}")
    walls = wall_roots(rd, verts)
    if walls != J:
        raise NonParabolicSymmetry(f"wall roots {walls} differ from centralizer roots {J}")
    K = tuple(i for i in I if i not in J)
    for k in K:
        for j in J:
            if rd.cartan[k][j] or rd.cartan[j][k]:
                raise NonParabolicSymmetry(f"simple roots {k} in K and {j} in J are not orthogonal")
    return FaceSymmetry(I, J, K, len(N), len(C))


@dataclass
class AdmissibleFace:
    face: Face
    symmetry: FaceSymmetry
    diff_lattice: list[tuple[int, ...]]
    quotient: QuotientMap

    @property
    def dim(self) -> int:
        return self.face.dim

    @property
    def vertices(self):
        return self.face.vertices


def _attach(rd: RootDatum, W: WeylGroup, F: Face) -> AdmissibleFace:
    lattice = difference_lattice(F)
    return AdmissibleFace(F, face_symmetry(rd, W, F), lattice,
                          quotient_map(lattice, F.parent.ambient_rank))


def admissible_faces(rd: RootDatum, W: WeylGroup, delta: RationalPolytope,
                     check_conjugacy: bool = True) -> list[AdmissibleFace]:
    out = [_attach(rd, W, F) for F in delta.faces
           if F.is_whole() or is_admissible(rd, W, F.polytope)]
    if check_conjugacy and len(W) > 1:
        orbits = {}
        for af in out:
            for w in range(len(W)):
                img = image_vertex_set(W, w, af.vertices)
                other = orbits.get(img)
                if other is not None and other is not af:
                    raise ConjugateFaces(f"admissible faces {other.face} and {af.face} are W-conjugate")
            orbits[frozenset(af.vertices)] = af
    return out
