"""Intersection cohomology Poincare polynomials of projective reductive varieties.

The global polynomial is a sum over G x G-orbits, i.e. over admissible
faces phi of the polytope delta, of

    (virtual Poincare polynomial of the orbit) * (stalk polynomial at the orbit),

and the stalk is read off from the global polynomial of the link of phi
in delta, a smaller reductive variety for the quotient root datum:

    stalk = truncate_t((1 - q) * IP(link), d_x - 1)      (1 if d_x <= 1)

with d_x the codimension of the orbit.  All polynomials are in q = t^2.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .admissibility import (AdmissibleFace, AdmissibilityReport, admissibility_report, wall_roots,
                            admissible_faces, is_admissible)
from .exactmath import primitive, dot
from .polyhedra import (Cone, RationalPolytope, cone_facet_normals, link_slice, normal_cone,
                        polytope_from_vertices, scale)
from .qpoly import ONE, Q, QPolynomial, QSeries, classifying_series
from .rootdatum import (RootDatum, WeylGroup, generate_weyl, parabolic_poincare,
                        quotient_poincare, validate)


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; carries the offending face."""

    def __init__(self, message: str, face=None, invariant: str = ""):
        super().__init__(message)
        self.face = face
        self.invariant = invariant


class DegreeMismatch(InvariantViolation):
    pass


class LinkNotAdmissible(InvariantViolation):
    pass


class NotAdmissible(ValueError):
    def __init__(self, report: AdmissibilityReport):
        super().__init__(report.describe())
        self.report = report


@dataclass
class VarietyDescriptor:
    rd: RootDatum
    W: WeylGroup
    delta: RationalPolytope

    @classmethod
    def build(cls, rd: RootDatum, vertices, max_weyl_order: int = 2048,
              W: WeylGroup | None = None, check: bool = True) -> "VarietyDescriptor":
        validate(rd)
        W = W or generate_weyl(rd, max_weyl_order)
        delta = vertices if isinstance(vertices, RationalPolytope) else polytope_from_vertices(rd.rank, vertices)
        if not delta.is_lattice():
            raise ValueError("the polytope must have integral vertices")
        if check:
            report = admissibility_report(rd, W, delta)
            if not report.admissible:
                raise NotAdmissible(report)
        return cls(rd, W, delta)

    def key(self) -> tuple:
        return (self.rd.key(), self.delta.key())

    def scaled(self, k: int) -> "VarietyDescriptor":
        return VarietyDescriptor(self.rd, self.W, scale(self.delta, k))


@dataclass
class SliceDescriptor:
    parent_face: AdmissibleFace
    quotient_rd: RootDatum
    cone: Cone
    functional: tuple[int, ...]
    n: int
    link: VarietyDescriptor
    d_x: int


@dataclass
class OrbitReport:
    face: AdmissibleFace
    orbit_dim: int
    virtual_poincare: QPolynomial
    stalk: QPolynomial
    d_x: int

    def row(self) -> dict:
        s = self.face.symmetry
        return {"vertices": [[str(x) for x in v] for v in self.face.vertices],
                "face_dim": self.face.dim,
                "I": list(s.I), "J": list(s.J), "K": list(s.K),
                "orbit_dim": self.orbit_dim, "d_x": self.d_x,
                "virtual_poincare": self.virtual_poincare.to_list(),
                "stalk": self.stalk.to_list()}


@dataclass
class IHResult:
    variety_dim: int
    global_poly: QPolynomial
    orbits: list[OrbitReport]
    trace: list[dict] | None = None

    def to_json(self, admissible: bool = True) -> dict:
        out = {"admissible": admissible, "dim": self.variety_dim,
               "global": self.global_poly.to_list(),
               "global_t": self.global_poly.to_t_string(),
               "orbits": [o.row() for o in self.orbits]}
        if self.trace is not None:
            out["trace"] = self.trace
        return out


def _n_roots(W: WeylGroup, S) -> int:
    """|Phi_S| (positive and negative roots)."""
    return 2 * len(W.positive_roots_in(S))


class IHEngine:
    """Recursive evaluator with a memo table keyed by (root datum, polytope).

    ``link_multiple`` replaces the level n of every link slice by a multiple
    of the minimal one; results must not depend on it.
    """

    def __init__(self, link_multiple: int = 1, check_conjugacy: bool = True, trace: bool = False):
        self.link_multiple = link_multiple
        self.check_conjugacy = check_conjugacy
        self.trace = trace
        self._memo: dict[tuple, IHResult] = {}
        self._faces: dict[tuple, list[AdmissibleFace]] = {}
        self._lock = threading.Lock()

    # -- faces and dimensions ---------------------------------------------
    def faces(self, V: VarietyDescriptor) -> list[AdmissibleFace]:
        key = V.key()
        faces = self._faces.get(key)
        if faces is None:
            faces = admissible_faces(V.rd, V.W, V.delta, self.check_conjugacy)
            with self._lock:
                self._faces[key] = faces
        return faces

    def top_face(self, V: VarietyDescriptor) -> AdmissibleFace:
        return next(af for af in self.faces(V) if af.face.is_whole())

    def variety_dim(self, V: VarietyDescriptor) -> int:
        J = wall_roots(V.rd, V.delta.vertices)
        return 2 * V.W.n_positive - _n_roots(V.W, J) + V.delta.dim

    def orbit_dim(self, V: VarietyDescriptor, af: AdmissibleFace) -> int:
        return 2 * V.W.n_positive - _n_roots(V.W, af.symmetry.J) + af.dim

    def orbit_virtual_poincare(self, V: VarietyDescriptor, af: AdmissibleFace) -> QPolynomial:
        """(W^I)^2 * q^{N_K} * (q-1)^{dim phi} * W_K, the point count of the orbit."""
        W, s = V.W, af.symmetry
        n_k = len(W.positive_roots_in(s.K))
        poly = (quotient_poincare(W, s.I) ** 2 * QPolynomial.monomial(n_k)
                * QPolynomial([-1, 1]) ** af.dim * parabolic_poincare(W, s.K))
        expected = self.orbit_dim(V, af)
        if poly.degree != expected:
            raise DegreeMismatch(f"orbit polynomial {poly} of {af.face} has degree {poly.degree}, "
                                 f"expected {expected}", af.face, "degree guard")
        return poly

    # -- slices ----------------------------------------------------------------
    def slice_descriptor(self, V: VarietyDescriptor, af: AdmissibleFace) -> SliceDescriptor:
        if af.face.is_whole():
            raise ValueError("the open orbit has no slice")
        rd, qm, J = V.rd, af.quotient, af.symmetry.J
        qrd = validate(RootDatum(
            qm.target_rank,
            tuple(qm.project(rd.simple_roots[j]) for j in J),
            tuple(qm.pull_covector(rd.simple_coroots[j]) for j in J),
            f"{rd.label}/face" if rd.label else ""))
        sub_cartan = tuple(tuple(rd.cartan[a][b] for b in J) for a in J)
        if qrd.cartan != sub_cartan:
            raise InvariantViolation("quotient root datum changed the Cartan matrix", af.face, "quotient datum")
        qW = generate_weyl(qrd, max(len(V.W), 1))
        sigma = normal_cone(V.delta, af.face, qm)
        f = self._invariant_functional(qW, sigma, af)
        link_poly, n = link_slice(sigma, f, self.link_multiple)
        if not is_admissible(qrd, qW, link_poly):
            raise LinkNotAdmissible(f"link {link_poly} of {af.face} is not admissible", af.face, "link admissible")
        link = VarietyDescriptor(qrd, qW, link_poly)
        d_x = self.variety_dim(V) - self.orbit_dim(V, af)
        d_alt = (_n_roots(V.W, J) - _n_roots(V.W, wall_roots(rd, V.delta.vertices))) + V.delta.dim - af.dim
        d_link = self.variety_dim(link) + 1
        if not d_x == d_alt == d_link:
            raise InvariantViolation(f"codimension mismatch at {af.face}: {d_x}, {d_alt}, {d_link}",
                                     af.face, "d_x consistency")
        return SliceDescriptor(af, qrd, sigma, f, n, link, d_x)

    @staticmethod
    def _invariant_functional(qW: WeylGroup, sigma: Cone, af) -> tuple[int, ...]:
        """Sum of the facet normals of sigma, averaged over its stabilizer in the quotient Weyl group."""
        r = sigma.ambient_rank
        normals = cone_facet_normals(sigma)
        f = [sum(nrm[k] for nrm in normals) for k in range(r)]
        rays = frozenset(sigma.extreme_rays)
        stab = [w for w in range(len(qW)) if frozenset(qW.act(w, rho) for rho in rays) == rays]
        avg = [sum(f[i] * qW.elements[w][i][k] for w in stab for i in range(r)) for k in range(r)]
        if not any(avg):
            raise InvariantViolation("averaged link functional vanished", af.face, "link functional")
        avg = primitive(avg)
        if any(dot(avg, rho) <= 0 for rho in rays):
            raise InvariantViolation("link functional is not positive on the normal cone", af.face, "link functional")
        return avg

    # -- recursion -----------------------------------------------------------
    def local_stalk(self, V: VarietyDescriptor, af: AdmissibleFace) -> QPolynomial:
        return self._orbit(V, af)[0]

    def _orbit(self, V: VarietyDescriptor, af: AdmissibleFace):
        """(stalk, d_x, trace node) for one admissible face."""
        if af.face.is_whole():
            return ONE, 0, None
        sl = self.slice_descriptor(V, af)
        node = None
        if sl.d_x <= 1:
            stalk = ONE
            link_result = None
        else:
            link_result = self.global_ih(sl.link)
            stalk = ((1 - Q) * link_result.global_poly).truncate_t(sl.d_x - 1)
        if stalk[0] != 1 or not stalk.is_nonnegative() or (stalk.degree or 0) > (sl.d_x - 1) // 2:
            raise InvariantViolation(f"bad stalk {stalk} at {af.face}", af.face, "stalk shape")
        if self.trace:
            node = {"face": [[str(x) for x in v] for v in af.vertices],
                    "d_x": sl.d_x,
                    "link": {"root_datum": sl.quotient_rd.to_json(),
                             "functional": list(sl.functional), "n": sl.n,
                             "vertices": sl.link.delta.to_json()["vertices"],
                             "global": link_result.global_poly.to_list() if link_result else [1],
                             "trace": link_result.trace if link_result else []},
                    "stalk": stalk.to_list()}
        return stalk, sl.d_x, node

    def global_ih(self, V: VarietyDescriptor) -> IHResult:
        key = V.key()
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        dim = self.variety_dim(V)
        total = QPolynomial()
        orbits, trace = [], ([] if self.trace else None)
        for af in self.faces(V):
            vp = self.orbit_virtual_poincare(V, af)
            stalk, d_x, node = self._orbit(V, af)
            total = total + vp * stalk
            orbits.append(OrbitReport(af, self.orbit_dim(V, af), vp, stalk, d_x))
            if node is not None:
                trace.append(node)
        self._check_global(total, dim, V)
        result = IHResult(dim, total, orbits, trace)
        with self._lock:
            self._memo.setdefault(key, result)
        return result

    @staticmethod
    def _check_global(p: QPolynomial, dim: int, V: VarietyDescriptor):
        problems = []
        if p.degree != dim:
            problems.append(f"degree {p.degree} != dim {dim}")
        if not p.is_palindromic(2 * dim):
            problems.append("not palindromic")
        if not p.is_nonnegative():
            problems.append("negative coefficient")
        if p[0] != 1:
            problems.append("constant term is not 1")
        if problems:
            raise InvariantViolation(f"global polynomial {p} of {V.delta}: " + "; ".join(problems),
                                     V.delta, "global duality/positivity")

    def equivariant_series(self, V: VarietyDescriptor, order: int, doubled: bool | None = None) -> QSeries:
        """Series P^H(q) * IP(q) for the acting group H.

        H is G x G when the datum has roots and the torus T otherwise,
        unless ``doubled`` says which.
        """
        if doubled is None:
            doubled = V.rd.n_simple > 0
        copies = 2 if doubled else 1
        flag = parabolic_poincare(V.W, range(V.rd.n_simple)) ** copies
        series = classifying_series(copies * V.rd.rank, flag, order)
        return series * self.global_ih(V).global_poly

    def full_report(self, V: VarietyDescriptor) -> IHResult:
        return self.global_ih(V)


_default = IHEngine()


def default_engine() -> IHEngine:
    return _default


def variety_dim(V: VarietyDescriptor) -> int:
    return _default.variety_dim(V)


def orbit_virtual_poincare(V: VarietyDescriptor, af: AdmissibleFace) -> QPolynomial:
    return _default.orbit_virtual_poincare(V, af)


def slice_descriptor(V: VarietyDescriptor, af: AdmissibleFace) -> SliceDescriptor:
    return _default.slice_descriptor(V, af)


def local_stalk(V: VarietyDescriptor, af: AdmissibleFace) -> QPolynomial:
    return _default.local_stalk(V, af)


def global_ih(V: VarietyDescriptor) -> IHResult:
    return _default.global_ih(V)


def equivariant_series(V: VarietyDescriptor, order: int, doubled: bool | None = None) -> QSeries:
    return _default.equivariant_series(V, order, doubled)


def full_report(V: VarietyDescriptor, trace: bool = False) -> IHResult:
    return (IHEngine(trace=True) if trace else _default).full_report(V)


def orbit_table(result: IHResult) -> str:
    header = ["face", "dim", "I", "J", "K", "orbit dim", "d_x", "virtual Poincare", "stalk"]
    rows = []
    for o in result.orbits:
        s = o.face.symmetry
        verts = " ".join("(" + ",".join(str(x) for x in v) + ")" for v in o.face.vertices)
        rows.append([verts, str(o.face.dim), str(list(s.I)), str(list(s.J)), str(list(s.K)),
                     str(o.orbit_dim), str(o.d_x), o.virtual_poincare.to_q_string(), o.stalk.to_q_string()])
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    lines = [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]
    lines.append(f"dim X = {result.variety_dim}")
    lines.append(f"IP_X = {result.global_poly.to_t_string()}   (q-coefficients {result.global_poly.to_list()})")
    return "\n".join(lines)
