"""Generalized Lambert series T(a,b,l) and the P/E product shorthands.

T(a,b,l) = sum_{n in Z} (-1)^n q^(l^2 n(n+1)/2 + l b n) / (1 - q^(l^2 n + l a)),
with a not divisible by l so no denominator vanishes.  E(a) = (q^a; q^a)_inf.
P(a) = (q^(l a); q^(l^2))_inf (q^(l^2 - l a); q^(l^2))_inf for 0 < a < l; out
of that range the symmetries P(-a) = -q^(-l a) P(a) and P(l + a) = P(-a)
reduce the argument first, producing honest Laurent series with negative
valuation where identities demand them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import QQ, is_prime
from .series import INF, LaurentSeries, jacprod, poch


@dataclass(frozen=True)
class TSpec:
    """Parameters of a generalized Lambert series T(a, b, ell)."""

    a: int
    b: int
    ell: int

    def __post_init__(self):
        if self.ell < 3 or not is_prime(self.ell):
            raise ValueError(f"ell must be a prime >= 3, got {self.ell}")
        if self.a % self.ell == 0:
            raise ValueError(f"a = {self.a} is divisible by ell = {self.ell}; the denominator would vanish")


def _t_term_exponents(spec: TSpec, n: int):
    """(sign, valuation, step) of the n-th term after normalizing the denominator.

    For denominator exponent m = l^2 n + l a: if m > 0 the term is
    sign * q^E * sum_k q^(m k); if m < 0 we rewrite 1/(1-q^m) =
    -q^(-m)/(1-q^(-m)), flipping the sign and lifting the valuation by |m|.
    """
    ell = spec.ell
    e = ell * ell * n * (n + 1) // 2 + ell * spec.b * n
    m = ell * ell * n + ell * spec.a
    sign = 1 if n % 2 == 0 else -1
    if m > 0:
        return sign, e, m
    return -sign, e - m, -m


@lru_cache(maxsize=None)
def lambert_T(spec: TSpec, prec: int) -> LaurentSeries:
    """The bilateral sum T(a,b,ell) truncated below prec, over the rationals."""
    ell = spec.ell
    # Term valuations are quadratics in n with positive leading coefficient
    # l^2/2; stop a direction only once past the vertex of both branch
    # quadratics, guarding against early non-monotonicity for large |b|.
    vertex_hi = abs(spec.b) // ell + 2
    items = []

    def emit(n: int) -> int:
        sign, val, step = _t_term_exponents(spec, n)
        e = val
        while e < prec:
            items.append((e, QQ.one if sign > 0 else -QQ.one))
            e += step
        return val

    n = 0
    while True:
        val = emit(n)
        if val >= prec and n > vertex_hi:
            break
        n += 1
    n = -1
    while True:
        val = emit(n)
        if val >= prec and -n > vertex_hi:
            break
        n -= 1
    return LaurentSeries.from_items(QQ, items, prec)


def lambert_t(a: int, b: int, ell: int, prec: int) -> LaurentSeries:
    return lambert_T(TSpec(a, b, ell), prec)


@lru_cache(maxsize=None)
def E_series(a: int, prec: int) -> LaurentSeries:
    """Euler product E(a) = (q^a; q^a)_inf."""
    if a < 1:
        raise ValueError(f"E(a) needs a >= 1, got {a}")
    return poch(QQ, 1, a, a, INF, prec)


def _reduce_p_argument(a: int, ell: int):
    """Fold a into (0, ell) via the P symmetries; returns (sign, q-shift, a)."""
    sign, shift = 1, 0
    while not 0 < a < ell:
        if a >= ell:
            # P(a) = -q^(-l(a-l)) P(a-l)
            a -= ell
            sign = -sign
            shift -= ell * a
        else:
            # P(a) = -q^(l a) P(-a) for a < 0
            sign = -sign
            shift += ell * a
            a = -a
    return sign, shift, a


@lru_cache(maxsize=None)
def P_series(a: int, ell: int, prec: int) -> LaurentSeries:
    """The theta block P(a) over the rationals, argument reduced by symmetry."""
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell must be a prime >= 3, got {ell}")
    if a % ell == 0:
        raise ValueError(f"P({a}) is degenerate for ell = {ell} (argument divisible by ell)")
    sign, shift, a0 = _reduce_p_argument(a, ell)
    base = jacprod(QQ, 1, ell * a0, ell * ell, prec - shift)
    if sign < 0:
        base = -base
    return base.shift(shift)


def _p_or_zero(a: int, ell: int, prec: int) -> LaurentSeries:
    # P(a) with the vanishing convention for arguments divisible by ell: the
    # second jacprod factor acquires (1 - q^0) = 0.  Only identity residual
    # builders use this; the public P_series rejects such arguments.
    if a % ell == 0:
        return LaurentSeries.zero(QQ, prec)
    return P_series(a, ell, prec)


def chan_identity_residual(variant: int, ell: int, a: int, b1: int, b2=None, prec: int = 60) -> LaurentSeries:
    """LHS minus RHS of the two T/P transformation identities; contract: zero.

    variant 1 (three-parameter form):
        T(b2, a-b1, l) = q^(l(b1-b2)) P(a-b1)/P(a-b2) T(b1, a-b2, l)
                         - q^(l(b1-b2)) P(a) P(b2-b1) E(l^2)^2 / (P(b1) P(b2) P(a-b2))
    variant 2 (b1 = -b, b2 = b collapsed):
        T(b, a+b, l) = -q^(-l b) P(a+b)/P(a-b) T(b, b-a, l)
                       + q^(-l b) P(a) P(2b) E(l^2)^2 / (P(b)^2 P(a-b))
    """
    pad = 4 * ell * ell
    work = prec + pad
    e2 = E_series(ell * ell, work)
    e2sq = e2 * e2
    if variant == 1:
        if b2 is None:
            raise ValueError("variant 1 needs both b1 and b2")
        lhs = lambert_t(b2, a - b1, ell, work)
        main = _p_or_zero(a - b1, ell, work) * lambert_t(b1, a - b2, ell, work) \
            * P_series(a - b2, ell, work).inverse()
        corr = _p_or_zero(a, ell, work) * _p_or_zero(b2 - b1, ell, work) * e2sq \
            * (P_series(b1, ell, work) * P_series(b2, ell, work) * P_series(a - b2, ell, work)).inverse()
        rhs = (main - corr).shift(ell * (b1 - b2))
    elif variant == 2:
        b = b1
        lhs = lambert_t(b, a + b, ell, work)
        main = _p_or_zero(a + b, ell, work) * lambert_t(b, b - a, ell, work) \
            * P_series(a - b, ell, work).inverse()
        corr = _p_or_zero(a, ell, work) * _p_or_zero(2 * b, ell, work) * e2sq \
            * (P_series(b, ell, work) ** 2 * P_series(a - b, ell, work)).inverse()
        rhs = (corr - main).shift(-ell * b)
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant}")
    residual = (lhs - rhs).truncate(prec)
    if residual.prec < prec:
        raise ValueError(f"internal precision shortfall: {residual.prec} < {prec}")
    return residual


def chan_suite_parameters():
    """Parameter tuples (variant, ell, a, b1, b2) exercised by the identity suite."""
    tuples = []
    for k in (3, 4):
        for c in (-1, 0, 1, 2):
            tuples.append((1, 5, 2 + k + c, 2, k))
    for k in (2, 4):
        for c in (-2, -1, 0, 1):
            tuples.append((1, 5, 3 + k + c, 3, k))
    for k in (2, 4, 5, 6):
        for c in (-2, -1, 0, 1, 2, 3):
            tuples.append((1, 7, 3 + k + c, 3, k))
    tuples += [(2, 5, 1, 2, None), (2, 5, 1, 3, None), (2, 7, 1, 3, None), (2, 7, 2, 3, None)]
    return tuples
