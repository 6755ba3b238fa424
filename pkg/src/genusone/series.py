"""Truncated power series in ``x`` with polynomial-in-``y`` coefficients.

Coefficients are exact (``int`` or ``fractions.Fraction``); no floating
point is used anywhere.  A series carries ``trunc``, the largest power of
``x`` whose coefficient is known, and every operation propagates the
smallest truncation of its operands.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterator, Mapping, Sequence

from .errors import DomainError

__all__ = [
    "NAMES",
    "BivariateSeries",
    "coefficient",
    "d_from_radical",
    "divide",
    "expand_named",
    "inv_sqrt",
    "lift_reduced_to_full",
    "partial_x",
    "solve_D",
    "substitute_x",
]

Row = tuple  # y-coefficients of one power of x, no trailing zeros


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(row: list) -> Row:
    while row and row[-1] == 0:
        row.pop()
    return tuple(_norm(c) for c in row)


def _padd(p: Sequence, q: Sequence, sign: int = 1) -> list:
    out = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        out[i] += sign * c
    return out


def _pmul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


class BivariateSeries:
    """``sum_{i <= trunc} x^i * P_i(y)`` with exact coefficients."""

    __slots__ = ("trunc", "rows")

    def __init__(self, rows: Sequence[Sequence], trunc: int):
        if trunc < 0:
            raise ValueError("truncation must be non-negative")
        padded = [list(r) for r in rows[: trunc + 1]]  # later rows are dropped
        padded += [[] for _ in range(trunc + 1 - len(padded))]
        self.trunc = trunc
        self.rows: tuple[Row, ...] = tuple(_trim(r) for r in padded)

    # construction ------------------------------------------------------
    @classmethod
    def from_dict(cls, coeffs: Mapping[tuple[int, int], object], trunc: int) -> "BivariateSeries":
        rows: list[list] = [[] for _ in range(trunc + 1)]
        for (i, j), c in coeffs.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if i > trunc:
                continue
            row = rows[i]
            row.extend([0] * (j + 1 - len(row)))
            row[j] += c
        return cls(rows, trunc)

    @classmethod
    def constant(cls, c, trunc: int) -> "BivariateSeries":
        return cls([[c]], trunc)

    @classmethod
    def monomial(cls, i: int, j: int, trunc: int, c=1) -> "BivariateSeries":
        return cls.from_dict({(i, j): c}, trunc)

    @classmethod
    def x(cls, trunc: int) -> "BivariateSeries":
        return cls.monomial(1, 0, trunc)

    @classmethod
    def y(cls, trunc: int) -> "BivariateSeries":
        return cls.monomial(0, 1, trunc)

    # inspection ----------------------------------------------------------
    def coefficient(self, n: int, k: int):
        if n > self.trunc:
            raise DomainError(f"x^{n} is beyond the truncation x^{self.trunc}")
        if n < 0 or k < 0:
            return 0
        row = self.rows[n]
        return row[k] if k < len(row) else 0

    def items(self) -> Iterator[tuple[int, int, object]]:
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def to_dict(self) -> dict[tuple[int, int], object]:
        return {(i, j): c for i, j, c in self.items()}

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for _, _, c in self.items())

    def x_order(self) -> int | None:
        for i, row in enumerate(self.rows):
            if row:
                return i
        return None

    def truncate(self, trunc: int) -> "BivariateSeries":
        if trunc > self.trunc:
            raise DomainError(f"cannot extend truncation from {self.trunc} to {trunc}")
        return BivariateSeries(self.rows[: trunc + 1], trunc)

    def shift_x(self, k: int) -> "BivariateSeries":
        """Multiply by ``x^k``; negative ``k`` divides by ``x^-k`` exactly."""
        if k >= 0:
            return BivariateSeries([()] * k + list(self.rows), self.trunc + k)
        if any(self.rows[: -k]):
            raise DomainError(f"series is not divisible by x^{-k}")
        if self.trunc + k < 0:
            raise DomainError("no coefficients left after division by x")
        return BivariateSeries(self.rows[-k:], self.trunc + k)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{i}*y^{j}" for i, j, c in self.items()]
        return f"BivariateSeries({' + '.join(terms) or '0'} + O(x^{self.trunc + 1}))"

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariateSeries):
            t = min(self.trunc, other.trunc)
            return self.rows[: t + 1] == other.rows[: t + 1]
        if isinstance(other, Rational):
            return self == BivariateSeries.constant(other, self.trunc)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # ring operations -----------------------------------------------------
    def _coerce(self, other) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, Rational):
            return BivariateSeries.constant(other, self.trunc)
        raise TypeError(f"cannot combine series with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        t = min(self.trunc, other.trunc)
        return BivariateSeries([_padd(self.rows[i], other.rows[i]) for i in range(t + 1)], t)

    __radd__ = __add__

    def __neg__(self):
        return BivariateSeries([[-c for c in r] for r in self.rows], self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        t = min(self.trunc, other.trunc)
        return BivariateSeries([_padd(self.rows[i], other.rows[i], -1) for i in range(t + 1)], t)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return BivariateSeries([[c * other for c in r] for r in self.rows], self.trunc)
        other = self._coerce(other)
        t = min(self.trunc, other.trunc)
        out: list[list] = [[] for _ in range(t + 1)]
        for i, p in enumerate(self.rows[: t + 1]):
            if not p:
                continue
            for j in range(t - i + 1):
                q = other.rows[j]
                if q:
                    out[i + j] = _padd(out[i + j], _pmul(p, q))
        return BivariateSeries(out, t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result = BivariateSeries.constant(1, self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return BivariateSeries([[Fraction(c) / other for c in r] for r in self.rows], self.trunc)
        return divide(self, self._coerce(other))


def coefficient(f: BivariateSeries, n: int, k: int):
    return f.coefficient(n, k)


def divide(f: BivariateSeries, g: BivariateSeries) -> BivariateSeries:
    """``f / g`` for ``g`` whose ``x^0`` coefficient is a nonzero constant."""
    g0 = g.rows[0]
    if len(g0) != 1:
        raise DomainError("divisor needs a nonzero constant x^0 coefficient")
    c = g0[0]
    t = min(f.trunc, g.trunc)
    h: list[list] = []
    for i in range(t + 1):
        acc = list(f.rows[i])
        for s in range(1, i + 1):
            if g.rows[s] and h[i - s]:
                acc = _padd(acc, _pmul(g.rows[s], h[i - s]), -1)
        h.append([_norm(Fraction(a, 1) / c) if c != 1 else a for a in acc])
    return BivariateSeries(h, t)


def inv_sqrt(f: BivariateSeries) -> BivariateSeries:
    """``f^(-1/2)`` by Newton iteration ``h <- h (3 - f h^2) / 2``.

    Each step doubles the number of correct powers of ``x``.
    """
    if f.rows[0] != (1,):
        raise DomainError("inv_sqrt needs constant term exactly 1")
    target = f.trunc
    h = BivariateSeries.constant(1, 0)
    prec = 0
    while prec < target:
        prec = min(2 * prec + 1, target)
        fp = f.truncate(prec)
        hp = BivariateSeries(h.rows, prec)
        h = hp * (3 - fp * hp * hp) * Fraction(1, 2)
    return BivariateSeries(h.rows, target)


def partial_x(f: BivariateSeries) -> BivariateSeries:
    """Formal ``d/dx``; the result is known one power of ``x`` less."""
    if f.trunc == 0:
        raise DomainError("derivative of a series truncated at x^0 carries no coefficients")
    return BivariateSeries([[i * c for c in f.rows[i]] for i in range(1, f.trunc + 1)], f.trunc - 1)


def x_partial_x(f: BivariateSeries) -> BivariateSeries:
    """``x * d/dx f`` at the same truncation as ``f``."""
    return BivariateSeries([[i * c for c in r] for i, r in enumerate(f.rows)], f.trunc)


def substitute_x(f: BivariateSeries, g: BivariateSeries) -> BivariateSeries:
    """``f(g(x, y), y)``; ``g`` must have no ``x^0`` terms."""
    if g.rows[0]:
        raise DomainError("substituted series must have x-order at least 1")
    t = min(f.trunc, g.trunc)
    g = g.truncate(t)
    result = BivariateSeries([f.rows[t]], t)
    for i in range(t - 1, -1, -1):
        result = result * g + BivariateSeries([f.rows[i]], t)
    return result


def solve_D(trunc: int) -> BivariateSeries:
    """Noncrossing-partition series, the power series root of
    ``D = 1 + x*y*D + x*(D - 1)*D`` with constant term 1."""
    one = BivariateSeries.constant(1, trunc)
    x = BivariateSeries.x(trunc)
    xy = BivariateSeries.monomial(1, 1, trunc)
    D = one
    for _ in range(trunc + 1):
        nxt = one + xy * D + x * (D - one) * D
        if nxt == D:
            break
        D = nxt
    return D


def discriminant(trunc: int) -> BivariateSeries:
    """``(x + xy - 1)^2 - 4 x^2 y``, equal to ``1 - 2(1+y)x + x^2 (1-y)^2``."""
    x = BivariateSeries.x(trunc)
    xy = BivariateSeries.monomial(1, 1, trunc)
    return (x + xy - 1) ** 2 - 4 * BivariateSeries.monomial(2, 1, trunc)


def d_from_radical(trunc: int) -> BivariateSeries:
    """``D`` from its closed form ``(1 - x - xy - sqrt(disc)) / (2x) + 1``."""
    t = trunc + 1
    disc = discriminant(t)
    root = disc * inv_sqrt(disc)
    x = BivariateSeries.x(t)
    xy = BivariateSeries.monomial(1, 1, t)
    num = 1 - x - xy - root
    return (num.shift_x(-1) * Fraction(1, 2)) + 1


def _reduced_denominator(trunc: int) -> BivariateSeries:
    # ((1-x)^2 - y x^2)^4
    x = BivariateSeries.x(trunc)
    return ((1 - x) ** 2 - BivariateSeries.monomial(2, 1, trunc)) ** 4


def _named_builders() -> dict[str, Callable[[int], BivariateSeries]]:
    def mono(i, j, t):
        return BivariateSeries.monomial(i, j, t)

    def one_minus_x(t):
        return 1 - BivariateSeries.x(t)

    def r0(t):
        return divide(mono(4, 2, t) * one_minus_x(t) ** 3, _reduced_denominator(t))

    def r2(t):
        return divide(mono(4, 1, t) * one_minus_x(t) ** 3, _reduced_denominator(t))

    def r1(t):
        num = mono(3, 1, t) * one_minus_x(t) ** 2 * (one_minus_x(t) ** 2 + mono(2, 1, t))
        return divide(num, _reduced_denominator(t))

    def rstar(t):
        num = mono(3, 1, t) * one_minus_x(t) ** 2 * (one_minus_x(t) + mono(1, 1, t))
        return divide(num, _reduced_denominator(t))

    def five_halves(t):
        return inv_sqrt(discriminant(t)) ** 5

    def p0(t):
        return mono(4, 2, t) * five_halves(t)

    def p2(t):
        return mono(4, 1, t) * five_halves(t)

    def p1(t):
        return mono(3, 1, t) * (1 - mono(1, 1, t) - BivariateSeries.x(t)) * five_halves(t)

    def pstar(t):
        return mono(3, 1, t) * five_halves(t)

    def dfactor(t):
        D = solve_D(t)
        return (1 - D.shift_x(1).truncate(t)) * inv_sqrt(discriminant(t))

    return {
        "R0": r0, "R1": r1, "R2": r2, "Rstar": rstar,
        "P0": p0, "P1": p1, "P2": p2, "Pstar": pstar,
        "Dfactor": dfactor, "D": solve_D,
    }


_BUILDERS = _named_builders()
NAMES = tuple(_BUILDERS)


def expand_named(name: str, trunc: int) -> BivariateSeries:
    """Expand one of the named closed forms to ``x^trunc``.

    ``R*`` are the reduced generating functions, ``P*`` the full ones,
    ``Dfactor`` is ``(1 - xD) / sqrt(disc)`` and ``D`` the noncrossing series.
    """
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; choose from {', '.join(NAMES)}") from None
    return build(trunc)


def lift_reduced_to_full(R: BivariateSeries, trunc: int | None = None) -> BivariateSeries:
    """Count a reduction-closed class from its reduced members.

    Returns ``R(x D, y) * (1 + x D_x / D)``.
    """
    t = R.trunc if trunc is None else trunc
    if t > R.trunc:
        raise DomainError(f"reduced series known to x^{R.trunc}, cannot lift to x^{t}")
    D = solve_D(t)
    xD = D.shift_x(1).truncate(t)
    return substitute_x(R.truncate(t), xD) * (1 + divide(x_partial_x(D), D))
