"""Exact scalars: arbitrary-precision rationals and the cyclotomic fields Q(zeta_l).

The base scalar is ``fractions.Fraction``.  ``CycQ`` is an element of Q(zeta_l)
for a prime l >= 3, stored in the power basis 1, zeta, ..., zeta^(l-2).  The
top power is eliminated through 1 + zeta + ... + zeta^(l-1) = 0, so equality
is a plain coordinate comparison.  Inverses are computed by solving the
(l-1) x (l-1) linear system of multiplication-by-a over the rationals, which
is exact and entirely adequate at degree <= 12.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


def rational_str(x: Fraction) -> str:
    """Encode a rational as the canonical "num/den" string."""
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


class CycQ:
    """An element of Q(zeta_l) as l-1 rational coordinates in the power basis."""

    __slots__ = ("ell", "coeffs")

    def __init__(self, ell: int, coeffs):
        self.ell = ell
        self.coeffs = tuple(coeffs)

    # -- construction -------------------------------------------------

    @staticmethod
    def from_raw(ell: int, raw) -> "CycQ":
        """Reduce a length-l vector of coefficients of 1, zeta, ..., zeta^(l-1)."""
        raw = [as_rational(c) for c in raw]
        if len(raw) != ell:
            raise ValueError(f"need {ell} coefficients, got {len(raw)}")
        top = raw[-1]
        if top:
            return CycQ(ell, tuple(c - top for c in raw[:-1]))
        return CycQ(ell, tuple(raw[:-1]))

    def _coerce(self, other):
        if isinstance(other, CycQ):
            if other.ell != self.ell:
                raise ValueError(f"mixed cyclotomic orders {self.ell} and {other.ell}")
            return other
        if isinstance(other, (int, Fraction)):
            n = self.ell - 1
            return CycQ(self.ell, (as_rational(other),) + (_ZERO,) * (n - 1))
        return None

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            c = list(self.coeffs)
            c[0] = c[0] + other
            return CycQ(self.ell, c)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycQ(self.ell, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycQ(self.ell, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            c = list(self.coeffs)
            c[0] = c[0] - other
            return CycQ(self.ell, c)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycQ(self.ell, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycQ(self.ell, (_ZERO,) * (self.ell - 1))
            return CycQ(self.ell, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ell = self.ell
        raw = [_ZERO] * ell
        b = other.coeffs
        for i, ai in enumerate(self.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                k = i + j
                if k >= ell:
                    k -= ell
                raw[k] += ai * bj
        top = raw[-1]
        if top:
            return CycQ(ell, tuple(c - top for c in raw[:-1]))
        return CycQ(ell, tuple(raw[:-1]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycQ(self.ell, (_ONE,) + (_ZERO,) * (self.ell - 2))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def _times_zeta(self) -> "CycQ":
        # (c0, ..., c_{n-1}) * zeta, reducing zeta^n = -(1 + ... + zeta^(n-1))
        c = self.coeffs
        top = c[-1]
        shifted = (_ZERO,) + c[:-1]
        if top:
            return CycQ(self.ell, tuple(s - top for s in shifted))
        return CycQ(self.ell, shifted)

    def inverse(self) -> "CycQ":
        """Multiplicative inverse via an exact linear solve."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        n = self.ell - 1
        # Augmented system M x = e0 where column j of M is self * zeta^j.
        col = self
        rows = [[_ZERO] * (n + 1) for _ in range(n)]
        for j in range(n):
            for i in range(n):
                rows[i][j] = col.coeffs[i]
            if j + 1 < n:
                col = col._times_zeta()
        rows[0][n] = _ONE
        for c in range(n):
            pivot = next((r for r in range(c, n) if rows[r][c]), None)
            if pivot is None:
                raise ArithmeticError("singular multiplication matrix")
            rows[c], rows[pivot] = rows[pivot], rows[c]
            inv = 1 / rows[c][c]
            rows[c] = [v * inv for v in rows[c]]
            for r in range(n):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[c])]
        return CycQ(self.ell, tuple(rows[i][n] for i in range(n)))

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycQ):
            return self.ell == other.ell and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ell, self.coeffs))

    # -- conversions ----------------------------------------------------

    def complex_value(self) -> complex:
        """Float embedding zeta -> exp(2*pi*i/l); a sanity check, not an oracle."""
        root = cmath.exp(2j * cmath.pi / self.ell)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * root + complex(c)
        return acc

    def __repr__(self):
        return f"CycQ({self.ell}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                base = "zeta" if k == 1 else f"zeta^{k}"
                body = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


class RationalField:
    """Coefficient-ring adapter for plain rationals."""

    _rank = 0
    name = "QQ"
    zero = _ZERO
    one = _ONE

    @staticmethod
    def of(x):
        return as_rational(x)

    @staticmethod
    def invert(x):
        x = as_rational(x)
        if not x:
            raise ZeroDivisionError("division by zero")
        return 1 / x

    @staticmethod
    def is_zero(x):
        return not x

    @staticmethod
    def encode(x):
        return rational_str(x)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class CyclotomicField:
    """Coefficient-ring adapter for Q(zeta_l), l prime."""

    _rank = 1

    def __init__(self, ell: int):
        if ell < 3 or not is_prime(ell):
            raise ValueError(f"cyclotomic order must be a prime >= 3, got {ell}")
        self.ell = ell
        self.name = f"QQ(zeta_{ell})"
        n = ell - 1
        self.zero = CycQ(ell, (_ZERO,) * n)
        self.one = CycQ(ell, (_ONE,) + (_ZERO,) * (n - 1))

    def zeta(self, power: int = 1) -> CycQ:
        """The root of unity zeta^power, reduced into the power basis."""
        k = power % self.ell
        n = self.ell - 1
        if k < n:
            return CycQ(self.ell, tuple(_ONE if i == k else _ZERO for i in range(n)))
        return CycQ(self.ell, (-_ONE,) * n)

    def of(self, x) -> CycQ:
        if isinstance(x, CycQ):
            if x.ell != self.ell:
                raise ValueError(f"element of Q(zeta_{x.ell}) given to {self.name}")
            return x
        return CycQ(self.ell, (as_rational(x),) + (_ZERO,) * (self.ell - 2))

    def invert(self, x) -> CycQ:
        return self.of(x).inverse()

    @staticmethod
    def is_zero(x):
        if isinstance(x, CycQ):
            return x.is_zero()
        return not x

    def encode(self, x):
        return [rational_str(c) for c in self.of(x).coeffs]

    def __repr__(self):
        return self.name


@lru_cache(maxsize=None)
def cyclotomic_field(ell: int) -> CyclotomicField:
    return CyclotomicField(ell)


def cyc_make(ell: int, raw) -> CycQ:
    """Canonical element of Q(zeta_l) from l coefficients of 1, zeta, ..., zeta^(l-1)."""
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"cyclotomic order must be a prime >= 3, got {ell}")
    return CycQ.from_raw(ell, raw)


def cyc_mul(a: CycQ, b: CycQ) -> CycQ:
    if a.ell != b.ell:
        raise ValueError(f"mixed cyclotomic orders {a.ell} and {b.ell}")
    return a * b


def cyc_invert(a: CycQ) -> CycQ:
    return a.inverse()


def residue_vector_is_constant(ell: int, c) -> bool:
    """True iff all l entries agree, i.e. sum_k c_k zeta^k = 0."""
    c = list(c)
    if len(c) != ell:
        raise ValueError(f"need {ell} entries, got {len(c)}")
    first = c[0]
    return all(x == first for x in c)
