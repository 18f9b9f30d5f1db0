"""Exact rational polytopes and cones.

Polytopes are stored with both representations: irredundant vertices and
an H-representation (facet inequalities ``a . x >= b`` plus the equations
of the affine hull).  Facets are found by brute force over hyperplanes
spanned by point subsets, which is fine at the sizes this package targets
(ambient rank <= 6, a few dozen vertices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .exactmath import (Constraint, StrictSystem, dot, feasible, integer_inverse, matmul, matvec,
                        nullspace, primitive, rank, row_reduce, saturate, column_echelon,
                        to_fraction, transpose, inverse, GE, GT, EQ)

MAX_AMBIENT_RANK = 6
MAX_VERTICES = 64

Point = tuple[Fraction, ...]


class NotPointed(ValueError):
    pass


class NotPositive(ValueError):
    pass


class NoLatticePoint(ValueError):
    pass


@dataclass(frozen=True)
class Facet:
    """Inequality ``normal . x >= constant`` (normal primitive integral)."""

    normal: tuple[int, ...]
    constant: Fraction

    def value(self, x) -> Fraction:
        return dot(self.normal, x) - self.constant


def _as_point(v, r: int) -> Point:
    p = tuple(to_fraction(x) for x in v)
    if len(p) != r:
        raise ValueError(f"point {v} is not of dimension {r}")
    return p


def _hyperplane(normal, point) -> Facet:
    a = primitive(normal)
    return Facet(a, dot(a, point))


class RationalPolytope:
    """Convex hull of finitely many rational points."""

    def __init__(self, ambient_rank: int, vertices, facets, equalities, dim: int):
        self.ambient_rank = ambient_rank
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self.facets: tuple[Facet, ...] = tuple(facets)
        # equalities of the affine hull, as Facets read with "=" instead of ">="
        self.equalities: tuple[Facet, ...] = tuple(equalities)
        self.dim = dim

    def __repr__(self):
        vs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"RationalPolytope(dim={self.dim}, vertices=[{vs}])"

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __eq__(self, other):
        return isinstance(other, RationalPolytope) and self.vertex_set == other.vertex_set

    def __hash__(self):
        return hash(self.vertex_set)

    def key(self) -> tuple:
        return tuple(sorted(self.vertices))

    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def contains(self, x) -> bool:
        return (all(e.value(x) == 0 for e in self.equalities)
                and all(f.value(x) >= 0 for f in self.facets))

    def relint_constraints(self) -> list[Constraint]:
        """Affine hull equations plus strict facet inequalities."""
        cons = [Constraint.make(e.normal, EQ, e.constant) for e in self.equalities]
        cons += [Constraint.make(f.normal, GT, f.constant) for f in self.facets]
        return cons

    @cached_property
    def faces(self) -> list["Face"]:
        return enumerate_faces(self)

    def face_counts(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for F in self.faces:
            counts[F.dim] += 1
        return counts

    def to_json(self) -> dict:
        return {"vertices": [[str(x) for x in v] for v in self.vertices]}


def _affine_rank(points: Sequence[Point]) -> int:
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]], len(p0))


def polytope_from_vertices(ambient_rank: int, points: Iterable) -> RationalPolytope:
    r = ambient_rank
    pts = tuple(sorted({_as_point(p, r) for p in points}))
    if not pts:
        raise ValueError("a polytope needs at least one point")
    if r > MAX_AMBIENT_RANK:
        raise ValueError(f"ambient rank {r} exceeds the supported maximum {MAX_AMBIENT_RANK}")
    return _build_polytope(r, pts)


@lru_cache(maxsize=4096)
def _build_polytope(r: int, pts: tuple[Point, ...]) -> RationalPolytope:
    p0 = pts[0]
    den = lcm(*(x.denominator for p in pts for x in p))
    ipts = [tuple(int(x * den) for x in p) for p in pts]
    B, pivots = _int_echelon([[a - b for a, b in zip(p, ipts[0])] for p in ipts[1:]], r)
    dim = len(B)
    equalities = [_hyperplane(e, p0) for e in nullspace(B, r)] if dim < r else []
    if dim == 0:
        return RationalPolytope(r, [p0], [], equalities, 0)

    # integer coordinates on the hull: pivot coordinates, denominators cleared
    coords = [tuple(p[k] for k in pivots) for p in ipts]
    if len(pts) > MAX_VERTICES and dim > 1:
        raise ValueError(f"{len(pts)} points exceed the supported maximum {MAX_VERTICES}")

    found: list[tuple[tuple[int, ...], frozenset]] = []
    for combo in combinations(range(len(pts)), dim):
        cs = set(combo)
        if any(cs <= tight for _, tight in found):
            continue
        base = coords[combo[0]]
        span = [[a - b for a, b in zip(coords[k], base)] for k in combo[1:]]
        n = _cofactor_normal(span, dim)
        if not any(n):
            continue
        vals = [sum(a * b for a, b in zip(n, c)) for c in coords]
        level = vals[combo[0]]
        if all(v >= level for v in vals):
            pass
        elif all(v <= level for v in vals):
            n = [-x for x in n]
            vals = [-v for v in vals]
            level = -level
        else:
            continue
        found.append((tuple(n), frozenset(i for i, v in enumerate(vals) if v == level)))

    # the canonical normal lies in the direction space of the hull
    proj = matmul(transpose(B), matmul(inverse(matmul(B, transpose(B))), B)) if dim < r else None
    facets = []
    for n, tight in found:
        a0 = [0] * r
        for k, x in zip(pivots, n):
            a0[k] = x
        a = primitive(matvec(proj, a0) if proj is not None else a0)
        facets.append(Facet(a, Fraction(dot(a, ipts[min(tight)]), den)))
    facets.sort(key=lambda f: (f.normal, f.constant))
    vertices = []
    everything = frozenset(range(len(pts)))
    for i, p in enumerate(pts):
        meet = everything
        for _, tight in found:
            if i in tight:
                meet = meet & tight
        if meet == {i}:
            vertices.append(p)
    return RationalPolytope(r, vertices, facets, equalities, dim)


def _int_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form: (independent integer rows, pivot columns)."""
    M = [list(row) for row in rows if any(row)]
    out, pivots = [], []
    for c in range(ncols):
        p = next((i for i, row in enumerate(M) if row[c]), None)
        if p is None:
            continue
        piv = M.pop(p)
        M = [[piv[c] * x - row[c] * y for x, y in zip(row, piv)] if row[c] else row for row in M]
        M = [list(_reduce_gcd(row)) for row in M if any(row)]
        out.append(piv)
        pivots.append(c)
    return out, pivots


def _reduce_gcd(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    return [x // g for x in row] if g > 1 else row


def _int_det(M: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _cofactor_normal(rows: list[list[int]], d: int) -> list[int]:
    """Integer vector orthogonal to d-1 vectors in Z^d (zero if they are dependent)."""
    if d == 1:
        return [1]
    return [(-1) ** i * _int_det([row[:i] + row[i + 1:] for row in rows]) for i in range(d)]


@dataclass(frozen=True)
class Face:
    parent: RationalPolytope = field(repr=False, compare=False, hash=False)
    vertex_indices: frozenset
    dim: int
    tight_facets: frozenset = field(compare=False)

    @property
    def vertices(self) -> list[Point]:
        return [self.parent.vertices[i] for i in sorted(self.vertex_indices)]

    @cached_property
    def polytope(self) -> RationalPolytope:
        if len(self.vertex_indices) == len(self.parent.vertices):
            return self.parent
        return polytope_from_vertices(self.parent.ambient_rank, self.vertices)

    def is_whole(self) -> bool:
        return len(self.vertex_indices) == len(self.parent.vertices)

    def __repr__(self):
        vs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"Face(dim={self.dim}, vertices=[{vs}])"


def enumerate_faces(P: RationalPolytope) -> list[Face]:
    """All nonempty faces (P included), as intersections of facet subsets."""
    n = len(P.vertices)
    tight = [frozenset(i for i in range(n) if f.value(P.vertices[i]) == 0) for f in P.facets]
    found = {frozenset(range(n))}
    frontier = [frozenset(range(n))]
    while frontier:
        nxt = []
        for F in frontier:
            for T in tight:
                G = F & T
                if G and G != F and G not in found:
                    found.add(G)
                    nxt.append(G)
        frontier = nxt
    faces = []
    for S in found:
        pts = [P.vertices[i] for i in sorted(S)]
        tf = frozenset(k for k, T in enumerate(tight) if S <= T)
        faces.append(Face(P, S, _affine_rank(pts), tf))
    faces.sort(key=lambda F: (F.dim, sorted(F.vertex_indices)))
    return faces


def relint_point(F) -> Point:
    verts = F.vertices
    k = len(verts)
    return tuple(sum(v[i] for v in verts) / k for i in range(len(verts[0])))


def relints_disjoint(P: RationalPolytope, Q: RationalPolytope) -> bool:
    if P.ambient_rank != Q.ambient_rank:
        raise ValueError("polytopes live in different ambient ranks")
    cons = P.relint_constraints() + Q.relint_constraints()
    if not cons:
        return False
    return not feasible(StrictSystem(tuple(cons)))


def transform(P: RationalPolytope, w) -> RationalPolytope:
    """Image of P under the lattice automorphism with integer matrix w."""
    winv = integer_inverse(w)
    verts = sorted(tuple(sum(Fraction(a) * x for a, x in zip(row, v)) for row in w) for v in P.vertices)

    def pull(f: Facet) -> Facet:
        a = [sum(f.normal[i] * winv[i][k] for i in range(len(f.normal))) for k in range(len(winv))]
        return Facet(tuple(a), f.constant)

    return RationalPolytope(P.ambient_rank, verts, [pull(f) for f in P.facets],
                            [pull(e) for e in P.equalities], P.dim)


def scale(P: RationalPolytope, k) -> RationalPolytope:
    k = to_fraction(k)
    return polytope_from_vertices(P.ambient_rank, [tuple(k * x for x in v) for v in P.vertices])


# ---------------------------------------------------------------------------
# lattices

def difference_lattice(F) -> list[tuple[int, ...]]:
    """Saturated basis of the lattice spanned by differences of lattice points of F."""
    verts = F.vertices
    if any(x.denominator != 1 for v in verts for x in v):
        # TODO(lattice-points): enumerate interior lattice points for rational faces
        raise NoLatticePoint("difference lattices are only supported for lattice faces")
    v0 = verts[0]
    r = len(v0)
    return saturate([[int(a - b) for a, b in zip(v, v0)] for v in verts[1:]], r)


@dataclass(frozen=True)
class QuotientMap:
    """Z^source -> Z^source / span(kernel_basis) = Z^target, with a chosen splitting."""

    source_rank: int
    target_rank: int
    projection: tuple[tuple[int, ...], ...]  # target x source
    section: tuple[tuple[int, ...], ...]     # source x target
    kernel_basis: tuple[tuple[int, ...], ...]

    def project(self, v) -> tuple:
        return tuple(dot(row, v) for row in self.projection)

    def lift(self, v) -> tuple:
        return tuple(dot(row, v) for row in self.section)

    def pull_covector(self, c) -> tuple:
        """Covector on the target induced by a covector on the source vanishing on the kernel."""
        return tuple(sum(c[i] * self.section[i][j] for i in range(self.source_rank))
                     for j in range(self.target_rank))


def quotient_map(kernel_basis: Sequence[Sequence[int]], ambient_rank: int) -> QuotientMap:
    r = ambient_rank
    K = [list(map(int, b)) for b in kernel_basis]
    k = len(K)
    if k == 0:
        I = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        return QuotientMap(r, r, I, I, ())
    H, V, rk = column_echelon(K, r)
    if rk != k or any(H[i][i] != 1 for i in range(k)):
        raise ValueError("kernel basis is not a basis of a saturated sublattice")
    Vinv = integer_inverse(V)
    # K V = [H | 0] with H unimodular, so the rows b_1..b_r of V^-1 form a basis
    # of Z^r with b_1..b_k spanning the kernel;
    # x = sum c_i b_i  <=>  c = V^T x
    proj = tuple(tuple(V[row][col] for row in range(r)) for col in range(k, r))
    sect = tuple(tuple(Vinv[i][row] for i in range(k, r)) for row in range(r))
    return QuotientMap(r, r - k, proj, sect, tuple(tuple(b) for b in K))


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True)
class Cone:
    ambient_rank: int
    generators: tuple[tuple[int, ...], ...]
    extreme_rays: tuple[tuple[int, ...], ...]
    pointed: bool
    dim: int


def _in_cone(v, gens) -> bool:
    """Farkas: v in cone(gens) iff no y with y.g >= 0 for all g and y.v < 0."""
    if not gens:
        return not any(v)
    cons = [Constraint.make(g, GE, 0) for g in gens] + [Constraint.make(v, "<", 0)]
    return not feasible(StrictSystem(tuple(cons)))


def is_pointed(gens, r: int) -> bool:
    gens = [g for g in gens if any(g)]
    if not gens:
        return True
    return feasible(StrictSystem(tuple(Constraint.make(g, GT, 0) for g in gens)))


def cone_from_generators(ambient_rank: int, generators) -> Cone:
    r = ambient_rank
    gens = sorted({primitive(g) for g in generators if any(g)})
    pointed = is_pointed(gens, r)
    rays = ()
    if pointed:
        rays = tuple(g for j, g in enumerate(gens) if not _in_cone(g, gens[:j] + gens[j + 1:]))
    return Cone(r, tuple(gens), rays, pointed, rank(gens, r) if gens else 0)


def normal_cone(delta: RationalPolytope, phi, qm: QuotientMap) -> Cone:
    """Image in the quotient lattice of the cone spanned by delta - phi."""
    gens = []
    for v in delta.vertices:
        for w in phi.vertices:
            d = [a - b for a, b in zip(v, w)]
            if any(x.denominator != 1 for x in d):
                raise NoLatticePoint("normal cones need lattice polytopes")
            gens.append(qm.project([int(x) for x in d]))
    cone = cone_from_generators(qm.target_rank, gens)
    if not cone.pointed:
        raise NotPointed("normal cone contains a line")
    return cone


def link_slice(sigma: Cone, f: Sequence[int], multiple: int = 1) -> tuple[RationalPolytope, int]:
    """The lattice polytope sigma cap {f = n} with the least valid n (times ``multiple``)."""
    if not sigma.extreme_rays:
        raise NotPositive("the zero cone has no link")
    vals = [dot(f, rho) for rho in sigma.extreme_rays]
    if any(v <= 0 for v in vals):
        raise NotPositive(f"functional {tuple(f)} is not positive on every extreme ray")
    n = lcm(*vals) * multiple
    verts = [tuple(Fraction(n // v * x) for x in rho) for v, rho in zip(vals, sigma.extreme_rays)]
    return polytope_from_vertices(sigma.ambient_rank, verts), n


def cone_facet_normals(sigma: Cone) -> list[tuple[int, ...]]:
    """Primitive inner normals of the facets of a pointed cone (within its span)."""
    r = sigma.ambient_rank
    origin = tuple(Fraction(0) for _ in range(r))
    P = polytope_from_vertices(r, [origin] + [tuple(Fraction(x) for x in g) for g in sigma.extreme_rays])
    return [f.normal for f in P.facets if f.constant == 0 and f.value(origin) == 0]
