"""Stanley's g/h recursion on Eulerian posets.

Used as an independent check of the engine on toric input: it only sees the
combinatorics of the face lattice, never cones, quotients or links.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyhedra import RationalPolytope
from .qpoly import QPolynomial


class NotEulerian(ValueError):
    pass


@dataclass
class EulerianPoset:
    """Graded poset with a least element (rank 0) and a greatest element.

    ``below[x]`` is the set of elements strictly less than ``x``.
    """

    ranks: list[int]
    below: list[frozenset]

    def __post_init__(self):
        self.bottom = min(range(len(self.ranks)), key=lambda x: self.ranks[x])
        self.top = max(range(len(self.ranks)), key=lambda x: self.ranks[x])

    @classmethod
    def from_sets(cls, sets: list[frozenset], ranks: list[int], reverse: bool = False):
        """Poset of the given sets ordered by inclusion (reversed if asked)."""
        n = len(sets)
        if reverse:
            below = [frozenset(y for y in range(n) if sets[x] < sets[y]) for x in range(n)]
            top_rank = max(ranks)
            ranks = [top_rank - r for r in ranks]
        else:
            below = [frozenset(y for y in range(n) if sets[y] < sets[x]) for x in range(n)]
        return cls(list(ranks), below)

    @classmethod
    def of_polytope(cls, P: RationalPolytope, dual: bool = False) -> "EulerianPoset":
        """Face lattice of P including the empty face; rank = dim + 1."""
        sets = [frozenset()] + [F.vertex_indices for F in P.faces]
        ranks = [0] + [F.dim + 1 for F in P.faces]
        return cls.from_sets(sets, ranks, reverse=dual)

    def check(self):
        n = len(self.ranks)
        for y in range(n):
            for x in self.below[y]:
                if self.ranks[y] - self.ranks[x] == 2:
                    middle = [z for z in self.below[y] if x in self.below[z]]
                    if len(middle) != 2:
                        raise NotEulerian(f"interval of rank 2 with {len(middle) + 2} elements")
        return self


def _g_from_h(h: QPolynomial, d: int) -> QPolynomial:
    """g = h_0 + sum_{1 <= j <= d/2} (h_j - h_{j-1}) q^j for a face of dimension d."""
    return QPolynomial([h[0]] + [h[j] - h[j - 1] for j in range(1, d // 2 + 1)])


def gh(P: EulerianPoset, element: int | None = None) -> tuple[QPolynomial, QPolynomial]:
    """Toric (h, g) polynomials of the interval [bottom, element] (default: top)."""
    P.check()
    order = sorted(range(len(P.ranks)), key=lambda x: P.ranks[x])
    g: dict[int, QPolynomial] = {}
    h: dict[int, QPolynomial] = {}
    q1 = QPolynomial([-1, 1])
    for x in order:
        if x == P.bottom:
            h[x] = g[x] = QPolynomial([1])
            continue
        rx = P.ranks[x]
        hx = QPolynomial()
        for y in P.below[x]:
            hx = hx + g[y] * q1 ** (rx - P.ranks[y] - 1)
        h[x] = hx
        g[x] = _g_from_h(hx, rx - 1)
    target = P.top if element is None else element
    return h[target], g[target]


def toric_ih_oracle(delta: RationalPolytope) -> QPolynomial:
    """IH Poincare polynomial of the toric variety of delta's normal fan."""
    if delta.dim == 0:
        return QPolynomial([1])
    return gh(EulerianPoset.of_polytope(delta, dual=True))[0]


def simple_h_polynomial(delta: RationalPolytope) -> QPolynomial:
    """sum_k f_k (q-1)^k; equals the IH polynomial when delta is a simple polytope."""
    q1 = QPolynomial([-1, 1])
    out = QPolynomial()
    for k, fk in enumerate(delta.face_counts()):
        out = out + fk * q1 ** k
    return out


def is_simple(delta: RationalPolytope) -> bool:
    d = delta.dim
    return all(sum(1 for f in delta.facets if f.value(v) == 0) == d for v in delta.vertices)
