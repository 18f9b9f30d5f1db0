"""Exact integer/rational linear algebra.

Everything here works over Python ints and :class:`fractions.Fraction`;
there is no floating point anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
Vector = Sequence[Fraction]


class DimensionMismatch(ValueError):
    pass


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction or a decimal/fraction string exactly."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing float input {x!r}; pass a string instead")
    return Fraction(x)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(A))]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A, cols: int | None = None):
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*A)]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def determinant(A) -> Fraction:
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / M[c][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def row_reduce(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form over Q. Returns (rref_rows, pivot_columns)."""
    M = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        lead = M[r][c]
        M[r] = [x / lead for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} over Q."""
    R, pivots = row_reduce(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve_square(A, b) -> list[Fraction]:
    """Solve A x = b for square invertible A over Q."""
    n = len(A)
    R, piv = row_reduce([list(A[i]) + [b[i]] for i in range(n)], n + 1)
    if piv != list(range(n)):
        raise ValueError("singular system")
    return [R[i][n] for i in range(n)]


def inverse(A) -> list[list[Fraction]]:
    n = len(A)
    R, piv = row_reduce([list(A[i]) + [int(i == j) for j in range(n)]
                         for i in range(n)], 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def integer_inverse(A) -> IntMatrix:
    """Inverse of a unimodular integer matrix, by integer row operations only."""
    n = len(A)
    M = [[int(x) for x in A[i]] + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            raise ValueError("matrix is not unimodular")
        M[c], M[p] = M[p], M[c]
        for i in range(c + 1, n):
            if M[i][c]:
                a, b, cc, d = _clearing_move(M[c][c], M[i][c])
                M[c], M[i] = ([a * x + b * y for x, y in zip(M[c], M[i])],
                              [cc * x + d * y for x, y in zip(M[c], M[i])])
        if abs(M[c][c]) != 1:
            raise ValueError("matrix is not unimodular")
    for c in reversed(range(n)):
        if M[c][c] < 0:
            M[c] = [-x for x in M[c]]
        for i in range(c):
            if M[i][c]:
                k = M[i][c]
                M[i] = [x - k * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def primitive(v: Iterable) -> tuple[int, ...]:
    """Positive rational multiple of ``v`` with coprime integer entries."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def _clearing_move(p: int, x: int) -> tuple[int, int, int, int]:
    """Unimodular (a, b, c, d) sending (p, x) to (g, 0) via (a p + b x, c p + d x)."""
    if x % p == 0:
        return 1, 0, -(x // p), 1
    g, s, u = _egcd(p, x)
    return s, u, -x // g, p // g


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def smith_normal_form(M: Sequence[Sequence[int]], cols: int | None = None):
    """Smith normal form ``U @ M @ V == S``.

    ``U`` and ``V`` are unimodular and ``S`` is diagonal with nonnegative
    entries d1 | d2 | ... .  ``cols`` is only needed when ``M`` has no rows.
    Entries are cleared with 2x2 extended-gcd moves, which keeps coefficient
    growth in check.
    """
    m = len(M)
    n = len(M[0]) if m else (cols or 0)
    A = [[int(x) for x in row] for row in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def mix_rows(i, j, a, b, c, d):  # (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j)
        for X in (A, U):
            X[i], X[j] = ([a * x + b * y for x, y in zip(X[i], X[j])],
                          [c * x + d * y for x, y in zip(X[i], X[j])])

    def mix_cols(i, j, a, b, c, d):
        for X in (A, V):
            for row in X:
                row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]

    for t in range(min(m, n)):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            for i in range(t + 1, m):
                if A[i][t]:
                    mix_rows(t, i, *_clearing_move(A[t][t], A[i][t]))
            for j in range(t + 1, n):
                if A[t][j]:
                    mix_cols(t, j, *_clearing_move(A[t][t], A[t][j]))
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            mix_rows(t, bad, 1, 1, 0, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return U, A, V


def column_echelon(M: Sequence[Sequence[int]], cols: int | None = None):
    """Unimodular ``V`` with ``M @ V = [H | 0]``, H in column echelon form.

    Returns (H_full, V, rank) where H_full = M @ V.
    """
    m = len(M)
    n = len(M[0]) if m else (cols or 0)
    A = [[int(x) for x in row] for row in M]
    V = identity(n)

    def mix_cols(i, j, a, b, c, d):
        for X in (A, V):
            for row in X:
                row[i], row[j] = a * row[i] + b * row[j], c * row[i] + d * row[j]

    c = 0
    for i in range(m):
        if c == n:
            break
        for j in range(c + 1, n):
            if A[i][j]:
                if A[i][c]:
                    mix_cols(c, j, *_clearing_move(A[i][c], A[i][j]))
                else:
                    mix_cols(c, j, 0, 1, 1, 0)
        if not A[i][c]:
            continue
        if A[i][c] < 0:
            for X in (A, V):
                for row in X:
                    row[c] = -row[c]
        for j in range(c):  # keep earlier columns reduced
            q = A[i][j] // A[i][c]
            if q:
                mix_cols(j, c, 1, -q, 0, 1)
        c += 1
    return A, V, c


def saturate(generators: Sequence[Sequence[int]], ambient_rank: int) -> list[tuple[int, ...]]:
    """Basis of the saturation of the lattice spanned by ``generators`` in Z^r."""
    gens = [list(map(int, g)) for g in generators]
    for g in gens:
        if len(g) != ambient_rank:
            raise DimensionMismatch(f"vector {g} is not of length {ambient_rank}")
    gens = [g for g in gens if any(g)]
    if not gens:
        return []
    _, V, k = column_echelon(gens, ambient_rank)
    # rows of V^-1 form a basis of Z^r whose first k rows span the saturation
    Vinv = integer_inverse(V)
    return [tuple(Vinv[i]) for i in range(k)]


# ---------------------------------------------------------------------------
# Linear feasibility with strict inequalities (Fourier-Motzkin)

GE, EQ, GT = ">=", "=", ">"
_FLIP = {"<=": GE, "<": GT}


@dataclass(frozen=True)
class Constraint:
    """``coefficients . x  relation  constant`` with relation in {>=, =, >}."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction
    relation: str

    @classmethod
    def make(cls, coefficients, relation: str, constant=0) -> "Constraint":
        a = tuple(to_fraction(x) for x in coefficients)
        c = to_fraction(constant)
        if relation in _FLIP:
            return cls(tuple(-x for x in a), -c, _FLIP[relation])
        if relation not in (GE, EQ, GT):
            raise ValueError(f"unknown relation {relation!r}")
        return cls(a, c, relation)


@dataclass(frozen=True)
class StrictSystem:
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        dims = {len(c.coefficients) for c in self.constraints}
        if len(dims) > 1:
            raise DimensionMismatch(f"constraints of differing dimensions {sorted(dims)}")

    @property
    def dim(self) -> int:
        return len(self.constraints[0].coefficients) if self.constraints else 0

    @classmethod
    def of(cls, *constraints) -> "StrictSystem":
        out = []
        for c in constraints:
            out.append(c if isinstance(c, Constraint) else Constraint.make(*c))
        return cls(tuple(out))

    def satisfied_by(self, x: Vector) -> bool:
        for c in self.constraints:
            v = dot(c.coefficients, x)
            if c.relation == EQ and v != c.constant:
                return False
            if c.relation == GE and v < c.constant:
                return False
            if c.relation == GT and v <= c.constant:
                return False
        return True


def _int_row(a, c) -> list[int]:
    """Clear denominators of the row (a, c) by a positive factor."""
    den = 1
    for x in list(a) + [c]:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in a] + [int(c * den)]


def _reduce(row: list[int]) -> tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, x)
    return tuple(x // g for x in row) if g > 1 else tuple(row)


def _prune(ineqs):
    """Keep the tightest bound per direction; drops only implied rows.

    Rows are integer tuples (a_1..a_n, c) meaning a.x >= c (strict when flagged).
    """
    best = {}
    trivial = []
    for row, strict in ineqs:
        a = row[:-1]
        g = 0
        for x in a:
            g = gcd(g, x)
        if g == 0:
            trivial.append((row, strict))
            continue
        key = tuple(x // g for x in a)
        c = Fraction(row[-1], g)
        old = best.get(key)
        if old is None or c > old[0] or (c == old[0] and strict and not old[1]):
            best[key] = (c, strict, row)
    return trivial + [(row, s) for _, s, row in best.values()]


def solve(system: StrictSystem) -> list[Fraction] | None:
    """A rational point satisfying every constraint, or None if infeasible.

    Fourier-Motzkin elimination on integer rows, carrying a strictness flag;
    the witness is rebuilt by back-substitution.
    """
    n = system.dim
    eqs = [_int_row(c.coefficients, c.constant) for c in system.constraints if c.relation == EQ]
    ineqs = [(_reduce(_int_row(c.coefficients, c.constant)), c.relation == GT)
             for c in system.constraints if c.relation != EQ]

    substitutions = []  # (variable, equality row) in elimination order
    while eqs:
        e = eqs.pop()
        p = next((j for j in range(n) if e[j]), None)
        if p is None:
            if e[n] != 0:
                return None
            continue
        substitutions.append((p, e))
        ep = e[p]
        sign = 1 if ep > 0 else -1

        def sub(row):
            k = row[p]
            if not k:
                return row
            return _reduce([abs(ep) * x - sign * k * y for x, y in zip(row, e)])

        eqs = [list(sub(r)) for r in eqs]
        ineqs = [(sub(r), s) for r, s in ineqs]

    eliminated = {p for p, _ in substitutions}
    order = [j for j in range(n) if j not in eliminated]
    history = []  # (variable, rows that mention it)
    ineqs = _prune(ineqs)
    for j in reversed(order):
        pos = [t for t in ineqs if t[0][j] > 0]
        neg = [t for t in ineqs if t[0][j] < 0]
        rest = [t for t in ineqs if t[0][j] == 0]
        history.append((j, pos + neg))
        combined = []
        for rp, sp in pos:
            for rn, sn in neg:
                lp, ln = rp[j], -rn[j]
                combined.append((_reduce([ln * x + lp * y for x, y in zip(rp, rn)]), sp or sn))
        ineqs = _prune(rest + combined)

    for row, strict in ineqs:
        c = row[-1]  # all coefficients vanish: need 0 >= c (or 0 > c)
        if (strict and c >= 0) or (not strict and c > 0):
            return None

    x = [Fraction(0)] * n
    for j, rows in reversed(history):
        lo = hi = None
        lo_strict = hi_strict = False
        for row, strict in rows:
            rest = row[n] - sum(row[k] * x[k] for k in range(n) if k != j and row[k])
            bound = Fraction(rest, 1) / row[j]
            if row[j] > 0:
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
            else:
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
        if lo is not None and hi is not None:
            x[j] = lo if lo == hi else (lo + hi) / 2
        elif lo is not None:
            x[j] = lo + 1 if lo_strict else lo
        elif hi is not None:
            x[j] = hi - 1 if hi_strict else hi
    for p, e in reversed(substitutions):
        x[p] = (e[n] - sum(e[k] * x[k] for k in range(n) if k != p)) / Fraction(e[p])
    assert system.satisfied_by(x), "Fourier-Motzkin back-substitution failed"
    return x


def feasible(system: StrictSystem) -> bool:
    return solve(system) is not None
