"""Integer polynomials in q = t^2.

Every Poincare polynomial handled by the package vanishes in odd t-degree,
so coefficient ``j`` of a :class:`QPolynomial` is the coefficient of
``q**j == t**(2*j)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class NonDivisible(ArithmeticError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"integer coefficients only, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "QPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, j: int, c: int = 1) -> "QPolynomial":
        return cls([0] * j + [c])

    @classmethod
    def coerce(cls, other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return cls([other])
        return cls(other)

    # inspection -----------------------------------------------------------
    @property
    def degree(self) -> int | None:
        """q-degree; ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def t_degree(self) -> int | None:
        return None if not self.coeffs else 2 * (len(self.coeffs) - 1)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, list, tuple)):
            other = QPolynomial.coerce(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, q):
        return sum(c * q ** j for j, c in enumerate(self.coeffs))

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = QPolynomial.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[j] + other[j] for j in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other):
        return QPolynomial.coerce(other) - self

    def __mul__(self, other):
        other = QPolynomial.coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = QPolynomial([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other) -> "QPolynomial":
        """``s`` with ``self == other * s``; raises NonDivisible otherwise."""
        other = QPolynomial.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) for c in self.coeffs]
        d = other.degree
        lead = Fraction(other.coeffs[-1])
        if len(rem) - 1 < d:
            if any(rem):
                raise NonDivisible(f"{self} is not divisible by {other}")
            return QPolynomial()
        quot = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] / lead
            quot[k - d] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - d + j] -= c * b
        if any(rem) or any(c.denominator != 1 for c in quot):
            raise NonDivisible(f"{self} is not divisible by {other}")
        return QPolynomial(int(c) for c in quot)

    def truncate_t(self, m: int) -> "QPolynomial":
        """Keep the terms of t-degree <= m, i.e. q^j with 2j <= m."""
        if m < -1:
            raise ValueError("truncation bound must be >= -1")
        return QPolynomial(self.coeffs[: m // 2 + 1] if m >= 0 else ())

    def is_palindromic(self, half_t_degree: int) -> bool:
        """Symmetry c_j == c_{d-j} for the q-degree d = half_t_degree / 2."""
        if half_t_degree % 2:
            raise ValueError("half_t_degree must be even")
        d = half_t_degree // 2
        if self.degree is not None and self.degree > d:
            return False
        return all(self[j] == self[d - j] for j in range(d + 1))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    # display --------------------------------------------------------------
    def _fmt(self, var: str, step: int) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            e = j * step
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in terms[1:]])

    def to_q_string(self) -> str:
        return self._fmt("q", 1)

    def to_t_string(self) -> str:
        return self._fmt("t", 2)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.to_q_string()


ONE = QPolynomial([1])
Q = QPolynomial([0, 1])


def add(p, r) -> QPolynomial:
    return QPolynomial.coerce(p) + r


def mul(p, r) -> QPolynomial:
    return QPolynomial.coerce(p) * r


def exact_div(p, r) -> QPolynomial:
    return QPolynomial.coerce(p).exact_div(r)


def truncate_t(p, m: int) -> QPolynomial:
    return QPolynomial.coerce(p).truncate_t(m)


def is_palindromic(p, half_t_degree: int) -> bool:
    return QPolynomial.coerce(p).is_palindromic(half_t_degree)


class QSeries:
    """Power series in q known up to (and including) q**order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        c = list(coeffs)[: order + 1]
        c += [0] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            other = QSeries(other.coeffs, self.order)
        order = min(self.order, other.order)
        out = [sum(self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1))
               for k in range(order + 1)]
        return QSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == list(other)
        return NotImplemented

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"QSeries({list(self.coeffs)}, order={self.order})"


def inverse_series(p: QPolynomial, order: int) -> QSeries:
    """Expansion of 1/p to the given order; p must have constant term +-1."""
    c0 = p[0]
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit")
    out = [0] * (order + 1)
    for k in range(order + 1):
        s = (1 if k == 0 else 0) - sum(p[i] * out[k - i] for i in range(1, k + 1))
        out[k] = s * c0
    return QSeries(out, order)


def classifying_series(r: int, flag_poly: QPolynomial, order: int) -> QSeries:
    """Poincare series 1 / ((1-q)^r * flag_poly) of a classifying space."""
    flag_poly = QPolynomial.coerce(flag_poly)
    if flag_poly[0] != 1:
        raise ValueError("flag polynomial must have constant term 1")
    return inverse_series(QPolynomial([1, -1]) ** r * flag_poly, order)
