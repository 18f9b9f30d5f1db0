"""Root data and fully enumerated Weyl groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exactmath import dot, rank, solve_square, transpose, matmul
from .qpoly import QPolynomial, ONE

Matrix = tuple[tuple[int, ...], ...]


class InvalidCartan(ValueError):
    pass


class DependentRoots(ValueError):
    pass


class OrderExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class RootDatum:
    """Simple roots in Z^rank and simple coroots as covectors on Z^rank."""

    rank: int
    simple_roots: tuple[tuple[int, ...], ...] = ()
    simple_coroots: tuple[tuple[int, ...], ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "simple_roots", tuple(tuple(int(x) for x in a) for a in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(tuple(int(x) for x in a) for a in self.simple_coroots))

    @property
    def n_simple(self) -> int:
        return len(self.simple_roots)

    def pairing(self, i: int, v) -> Fraction | int:
        """<alpha_i^vee, v>"""
        return dot(self.simple_coroots[i], v)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = <alpha_i^vee, alpha_j>"""
        return tuple(tuple(dot(c, a) for a in self.simple_roots) for c in self.simple_coroots)

    def key(self) -> tuple:
        return (self.rank, self.simple_roots, self.simple_coroots)

    def to_json(self) -> dict:
        return {"rank": self.rank,
                "simple_roots": [list(a) for a in self.simple_roots],
                "simple_coroots": [list(a) for a in self.simple_coroots],
                "label": self.label}

    @classmethod
    def from_json(cls, data: dict) -> "RootDatum":
        return validate(cls(int(data["rank"]),
                            tuple(map(tuple, data.get("simple_roots", []))),
                            tuple(map(tuple, data.get("simple_coroots", []))),
                            str(data.get("label", ""))))


def validate(rd: RootDatum) -> RootDatum:
    if len(rd.simple_roots) != len(rd.simple_coroots):
        raise InvalidCartan("number of roots and coroots differ")
    for v in rd.simple_roots + rd.simple_coroots:
        if len(v) != rd.rank:
            raise InvalidCartan(f"vector {v} does not have length {rd.rank}")
    C = rd.cartan
    n = rd.n_simple
    for i in range(n):
        if C[i][i] != 2:
            raise InvalidCartan(f"<alpha_{i}^vee, alpha_{i}> = {C[i][i]}, expected 2")
        for j in range(n):
            if i != j:
                if C[i][j] > 0:
                    raise InvalidCartan(f"positive off-diagonal Cartan entry C[{i}][{j}]")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise InvalidCartan(f"C[{i}][{j}] and C[{j}][{i}] not simultaneously zero")
    if n and rank(rd.simple_roots, rd.rank) < n:
        raise DependentRoots("simple roots are linearly dependent")
    if n and rank(rd.simple_coroots, rd.rank) < n:
        raise DependentRoots("simple coroots are linearly dependent")
    return rd


def reflection_matrix(root, coroot) -> Matrix:
    """Matrix of x -> x - <coroot, x> root."""
    r = len(root)
    return tuple(tuple(int(i == j) - root[i] * coroot[j] for j in range(r)) for i in range(r))


def _mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*B)) for row in A) if A else A


def _apply(A: Matrix, v) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


@dataclass
class WeylGroup:
    """All elements of W as integer matrices acting on the weight lattice.

    ``elements[0]`` is the identity; ``generators[i]`` is the index of the
    simple reflection s_i.
    """

    rd: RootDatum
    elements: list[Matrix]
    lengths: list[int]
    positive_roots: list[tuple[int, ...]]
    positive_root_coords: list[tuple[Fraction, ...]]  # in the simple-root basis
    generators: list[int]
    cayley_distance: list[int] = field(repr=False, default_factory=list)

    def __post_init__(self):
        self.index = {m: i for i, m in enumerate(self.elements)}
        self._root_set = set(self.positive_roots)

    def __len__(self):
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    def act(self, w: int, v):
        return _apply(self.elements[w], v)

    def is_positive_root(self, v) -> bool:
        return tuple(v) in self._root_set

    def is_negative_root(self, v) -> bool:
        return tuple(-x for x in v) in self._root_set

    def parabolic_elements(self, S: Iterable[int]) -> list[int]:
        """Indices of the elements of W_S (closure of the simple reflections in S)."""
        gens = [self.elements[self.generators[i]] for i in S]
        ident = self.elements[0]
        seen = {ident}
        queue = deque([ident])
        while queue:
            m = queue.popleft()
            for g in gens:
                x = _mul(m, g)
                if x not in seen:
                    seen.add(x)
                    queue.append(x)
        return sorted(self.index[m] for m in seen)

    def positive_roots_in(self, S: Iterable[int]) -> list[int]:
        """Indices of the positive roots whose simple-root support lies in S."""
        S = set(S)
        return [k for k, c in enumerate(self.positive_root_coords)
                if all(x == 0 for i, x in enumerate(c) if i not in S)]

    def minimal_coset_representatives(self, I: Iterable[int]) -> list[int]:
        """W^I = {w : w(alpha) > 0 for all alpha in I}."""
        I = list(I)
        roots = [self.rd.simple_roots[i] for i in I]
        return [w for w in range(len(self)) if all(self.is_positive_root(self.act(w, a)) for a in roots)]


def _root_coordinates(rd: RootDatum, v) -> tuple[Fraction, ...] | None:
    """Coordinates of v in the simple-root basis (None if v is outside the span)."""
    n = rd.n_simple
    if n == 0:
        return () if not any(v) else None
    A = [list(a) for a in rd.simple_roots]  # n x r
    # least-squares-free exact solve: Gram system (A A^T) c = A v
    gram = matmul(A, transpose(A))
    rhs = [dot(a, v) for a in A]
    c = solve_square(gram, rhs)
    recon = [sum(c[i] * A[i][k] for i in range(n)) for k in range(rd.rank)]
    if any(recon[k] != v[k] for k in range(rd.rank)):
        return None
    return tuple(c)


def generate_weyl(rd: RootDatum, max_order: int = 2048) -> WeylGroup:
    validate(rd)
    r = rd.rank
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    refl = [reflection_matrix(a, c) for a, c in zip(rd.simple_roots, rd.simple_coroots)]
    elements = [ident]
    dist = {ident: 0}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for s in refl:
            x = _mul(m, s)
            if x not in dist:
                dist[x] = dist[m] + 1
                elements.append(x)
                if len(elements) > max_order:
                    raise OrderExceeded(f"Weyl group of {rd.label or 'datum'} exceeds {max_order} elements")
                queue.append(x)

    roots = set()
    for m in elements:
        for a in rd.simple_roots:
            roots.add(_apply(m, a))
    positive, coords = [], []
    for beta in sorted(roots):
        c = _root_coordinates(rd, beta)
        if c is None:
            raise InvalidCartan(f"root {beta} leaves the span of the simple roots")
        if all(x >= 0 for x in c):
            positive.append(beta)
            coords.append(c)
        elif not all(x <= 0 for x in c):
            raise InvalidCartan(f"root {beta} is neither positive nor negative")
    pos_set = set(positive)
    lengths = [sum(1 for b in positive if tuple(-x for x in _apply(m, b)) in pos_set) for m in elements]
    index = {m: i for i, m in enumerate(elements)}
    return WeylGroup(rd, elements, lengths, positive, coords,
                     [index[s] for s in refl], [dist[m] for m in elements])


def length_polynomial(W: WeylGroup, indices: Iterable[int]) -> QPolynomial:
    out = [0] * (W.n_positive + 1)
    for w in indices:
        out[W.lengths[w]] += 1
    return QPolynomial(out)


def parabolic_poincare(W: WeylGroup, S: Iterable[int]) -> QPolynomial:
    """sum over W_S of q^length"""
    return length_polynomial(W, W.parabolic_elements(S))


def quotient_poincare(W: WeylGroup, I: Iterable[int]) -> QPolynomial:
    """sum over minimal coset representatives W^I of q^length"""
    return length_polynomial(W, W.minimal_coset_representatives(I))


def dominant_side(rd: RootDatum, point: Sequence) -> bool:
    if len(point) != rd.rank:
        raise ValueError("point has the wrong dimension")
    return all(dot(c, point) >= 0 for c in rd.simple_coroots)


# ---------------------------------------------------------------------------
# presets

def _cartan_type(kind: str, n: int) -> list[list[int]]:
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind in "ABCD":
        for i in range(n - 1):
            C[i][i + 1] = C[i + 1][i] = -1
    if kind == "B" and n >= 2:
        C[n - 1][n - 2] = -2  # alpha_n short
    elif kind == "C" and n >= 2:
        C[n - 2][n - 1] = -2  # alpha_n long
    elif kind == "D":
        if n < 4:
            raise ValueError("type D needs rank >= 4")
        C[n - 2][n - 1] = C[n - 1][n - 2] = 0
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
    elif kind == "G":
        if n != 2:
            raise ValueError("type G has rank 2")
        C = [[2, -1], [-3, 2]]
    elif kind not in "ABC":
        raise ValueError(f"unsupported Cartan type {kind}")
    return C


def from_cartan(C: Sequence[Sequence[int]], label: str = "") -> RootDatum:
    """Simply connected datum: lattice of fundamental weights, alpha_j = column j of C."""
    n = len(C)
    roots = tuple(tuple(C[i][j] for i in range(n)) for j in range(n))
    coroots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return validate(RootDatum(n, roots, coroots, label))


def cartan_type(kind: str, n: int) -> RootDatum:
    return from_cartan(_cartan_type(kind, n), f"{kind}{n}")


def torus(r: int) -> RootDatum:
    return RootDatum(r, (), (), f"T{r}")


def gl(n: int) -> RootDatum:
    """GL(n): Z^n with simple roots e_i - e_{i+1} (coroots the same covectors)."""
    roots = tuple(tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1))
    return validate(RootDatum(n, roots, roots, f"GL{n}"))


def product(*data: RootDatum) -> RootDatum:
    r = sum(d.rank for d in data)
    roots, coroots, off = [], [], 0
    for d in data:
        pad = lambda v: (0,) * off + tuple(v) + (0,) * (r - off - d.rank)
        roots += [pad(a) for a in d.simple_roots]
        coroots += [pad(c) for c in d.simple_coroots]
        off += d.rank
    return validate(RootDatum(r, tuple(roots), tuple(coroots), "x".join(d.label for d in data)))


PRESETS = {
    **{f"T{r}": (lambda r=r: torus(r)) for r in range(0, 5)},
    "A1": lambda: cartan_type("A", 1),
    "SL2": lambda: cartan_type("A", 1),
    "GL2": lambda: gl(2),
    "A2": lambda: cartan_type("A", 2),
    "A1xA1": lambda: product(cartan_type("A", 1), cartan_type("A", 1)),
    "B2": lambda: cartan_type("B", 2),
    "C2": lambda: cartan_type("C", 2),
    "G2": lambda: cartan_type("G", 2),
    "A3": lambda: cartan_type("A", 3),
    "GL3": lambda: gl(3),
}


def preset(name: str) -> RootDatum:
    try:
        rd = PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; available: {', '.join(sorted(PRESETS))}") from None
    return rd
