"""The generating functions behind u(n) and v(n), by independent routes.

Three routes compute the rank generating functions RU(z,q), RV(z,q):

* the hypergeometric-style double products ``eval_f`` / ``eval_g`` with
  (rho1, rho2, z) specialized to roots of unity,
* ``ru_at_root`` / ``rv_at_root``, a bilateral Lambert-form sum over Q(zeta_l)
  divided by the prefactor (1+z)(q, z, 1/z; q)_inf,
* ``ru_bivariate`` / ``rv_bivariate``, an exact expansion in both z and q
  built from a single sum plus a Gaussian-binomial double sum.

The z -> 1 specializations are the plain counting series ``u_series`` and
``v_series``, computed directly from their smallest-part decompositions.
``rhs_identity`` assembles the E/P/T product forms the five root-of-unity
identities equate these to.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import QQ, CycQ, cyclotomic_field, is_prime
from .lambert import E_series, P_series, lambert_t
from .series import (INF, LaurentSeries, ZPOLY, ZLaurentPoly, gauss_binomial,
                     geometric, poch)

IDENTITY_NAMES = ("RU3", "RV3", "RU5", "RV5", "RU7")
ROUTES = ("DEFINITION", "LAMBERT", "QBINOMIAL", "ENUMERATION")


# -- the counting series ------------------------------------------------------


@lru_cache(maxsize=None)
def _counting_series(power: int, prec: int) -> LaurentSeries:
    # sum over the smallest part n of p1: q^(power*n) / ((q^n;q)_inf^3 (q^n;q)_{n+1})
    acc = LaurentSeries.zero(QQ, prec)
    n = 1
    while power * n < prec:
        base = power * n
        rel = prec - base
        block = poch(QQ, 1, n, 1, INF, rel)
        den = block * block * block * poch(QQ, 1, n, 1, n + 1, rel)
        acc = acc + den.inverse().shift(base)
        n += 1
    return acc


def u_series(prec: int) -> LaurentSeries:
    """U(q) = sum u(n) q^n."""
    return _counting_series(1, prec)


def v_series(prec: int) -> LaurentSeries:
    """V(q) = sum v(n) q^n."""
    return _counting_series(2, prec)


# -- route 1: the bilateral Lambert form at z = zeta_l ------------------------


@lru_cache(maxsize=None)
def root_prefactor(ell: int, prec: int) -> LaurentSeries:
    """(1+z)(q, z, 1/z; q)_inf at z = zeta_ell, over Q(zeta_ell)."""
    field = cyclotomic_field(ell)
    z = field.zeta(1)
    prod = poch(QQ, 1, 1, 1, INF, prec) \
        * poch(field, z, 0, 1, INF, prec) \
        * poch(field, field.zeta(-1), 0, 1, INF, prec)
    return prod.scale(field.one + z)


def _bilateral_rank_sum(ell: int, prec: int, offset: int) -> LaurentSeries:
    """sum_j (1-z^j)(1-z^(j-1)) z^(1-j) (-1)^j q^(j(j+offset)/2) / ((1-z^2 q^j)(1-z^-2 q^j)).

    offset is 3 for the u-family and 1 for the v-family.  Terms with
    j = 0, 1 mod ell vanish.  Denominators at negative j are normalized to
    positive exponents, which lifts the term valuation by 2|j|.
    """
    field = cyclotomic_field(ell)
    z2, z2i = field.zeta(2), field.zeta(-2)
    acc = LaurentSeries.zero(field, prec)

    def add_term(j: int):
        nonlocal acc
        e = j * (j + offset) // 2
        eff = e if j > 0 else e + 2 * (-j)
        if eff >= prec or j % ell in (0, 1):
            return
        step = abs(j)
        rel = prec - eff
        g = geometric(field, z2, step, rel) * geometric(field, z2i, step, rel)
        c = (field.one - field.zeta(j)) * (field.one - field.zeta(j - 1)) * field.zeta(1 - j)
        if j % 2:
            c = -c
        acc = acc + g.scale(c).shift(eff)

    j = 2
    while j * (j + offset) // 2 < prec:
        add_term(j)
        j += 1
    j = -1
    while j * (j + offset) // 2 + 2 * (-j) < prec:
        add_term(j)
        j -= 1
    return acc


@lru_cache(maxsize=None)
def ru_at_root(ell: int, prec: int) -> LaurentSeries:
    """RU(zeta_ell, q): coefficients are the rank-class sums over Q(zeta_ell)."""
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell must be a prime >= 3, got {ell}")
    return _bilateral_rank_sum(ell, prec, 3) * root_prefactor(ell, prec).inverse()


@lru_cache(maxsize=None)
def rv_at_root(ell: int, prec: int) -> LaurentSeries:
    """RV(zeta_ell, q), the v-family analog of ru_at_root."""
    if ell < 3 or not is_prime(ell):
        raise ValueError(f"ell must be a prime >= 3, got {ell}")
    return _bilateral_rank_sum(ell, prec, 1) * root_prefactor(ell, prec).inverse()


# -- route 2: the two-parameter transform -------------------------------------


def _fg_series(rho1: CycQ, rho2: CycQ, z: CycQ, prec: int, power: int) -> LaurentSeries:
    ell = z.ell
    if rho1.ell != ell or rho2.ell != ell:
        raise ValueError("rho1, rho2 and z must live in the same cyclotomic field")
    field = cyclotomic_field(ell)
    one = field.one
    zinv = z.inverse()
    for label, c in (("z", z), ("1/z", zinv), ("rho1", rho1), ("rho2", rho2)):
        if c == one:
            raise ValueError(
                f"{label} = 1 makes the prefactor vanish; use the direct counting series for that case")
    pref_den = poch(field, z, 0, 1, INF, prec) * poch(field, zinv, 0, 1, INF, prec) \
        * poch(field, rho1, 0, 1, INF, prec) * poch(field, rho2, 0, 1, INF, prec)
    pref = poch(QQ, 1, 1, 1, INF, prec) * pref_den.inverse()
    s = (rho1 * rho2).inverse()
    num = LaurentSeries.const(field, one, prec)
    inv_den = LaurentSeries.const(QQ, 1, prec)
    spow = one
    acc = LaurentSeries.zero(field, prec)
    n = 1
    while power * n < prec:
        for c in (z, zinv, rho1, rho2):
            num = num * LaurentSeries.from_items(field, [(0, one), (n - 1, -c)], prec)
        inv_den = inv_den * geometric(QQ, 1, 2 * n - 1, prec) * geometric(QQ, 1, 2 * n, prec)
        spow = spow * s
        acc = acc + (num * inv_den).scale(spow).shift(power * n)
        n += 1
    return pref * acc


def eval_f(rho1: CycQ, rho2: CycQ, z: CycQ, prec: int) -> LaurentSeries:
    """F(rho1, rho2, z; q): (q;q)_inf/(z,1/z,rho1,rho2;q)_inf times the q^n sum."""
    return _fg_series(rho1, rho2, z, prec, 1)


def eval_g(rho1: CycQ, rho2: CycQ, z: CycQ, prec: int) -> LaurentSeries:
    """G(rho1, rho2, z; q), the q^(2n) analog of eval_f."""
    return _fg_series(rho1, rho2, z, prec, 2)


def ru_via_transform(ell: int, prec: int) -> LaurentSeries:
    field = cyclotomic_field(ell)
    return eval_f(field.zeta(2), field.zeta(-2), field.zeta(1), prec)


def rv_via_transform(ell: int, prec: int) -> LaurentSeries:
    field = cyclotomic_field(ell)
    return eval_g(field.zeta(2), field.zeta(-2), field.zeta(1), prec)


# -- route 3: the exact bivariate expansion -----------------------------------


@lru_cache(maxsize=None)
def _bivariate(power: int, prec: int) -> LaurentSeries:
    ring = ZPOLY
    one = ring.one
    z = ZLaurentPoly.monomial(1)
    z2 = ZLaurentPoly.monomial(2)
    z2i = ZLaurentPoly.monomial(-2)
    acc = LaurentSeries.zero(ring, prec)
    n = 1
    while power * n < prec:
        base = power * n
        rel = prec - base
        # p4 empty: q^(power n) / (z q^n, z^2 q^n, z^-2 q^n; q)_inf
        head = poch(ring, z, n, 1, INF, rel) * poch(ring, z2, n, 1, INF, rel) \
            * poch(ring, z2i, n, 1, INF, rel)
        acc = acc + head.inverse().shift(base)
        # p4 with m parts, each in [n, 2n]: the z^-m q^(nm) Gaussian-binomial block
        m = 1
        while base + n * m < prec:
            rel2 = prec - base - n * m
            den = LaurentSeries.from_items(ring, [(0, one), (n, ZLaurentPoly.monomial(1, -1))], rel2)
            den = den * poch(QQ, 1, n + 1, 1, m, rel2)
            den = den * poch(ring, z, n + m + 1, 1, INF, rel2)
            den = den * poch(ring, z2, n, 1, INF, rel2)
            den = den * poch(ring, z2i, n, 1, INF, rel2)
            term = den.inverse() * gauss_binomial(n, m)
            acc = acc + term.scale(ZLaurentPoly.monomial(-m)).shift(base + n * m)
            m += 1
        n += 1
    return acc


def ru_bivariate(prec: int) -> LaurentSeries:
    """RU(z, q) with ZLaurentPoly coefficients: exact rank generating function."""
    return _bivariate(1, prec)


def rv_bivariate(prec: int) -> LaurentSeries:
    """RV(z, q) with ZLaurentPoly coefficients."""
    return _bivariate(2, prec)


def specialize_root(bivariate: LaurentSeries, ell: int) -> LaurentSeries:
    """Substitute z -> zeta_ell coefficient-wise into a bivariate series."""
    field = cyclotomic_field(ell)
    items = [(e, c.eval_at_root(field)) for e, c in bivariate.nonzero_items()]
    return LaurentSeries.from_items(field, items, bivariate.prec)


def specialize_one(bivariate: LaurentSeries) -> LaurentSeries:
    """Substitute z -> 1 coefficient-wise, recovering the counting series."""
    items = [(e, c.eval_at_one()) for e, c in bivariate.nonzero_items()]
    return LaurentSeries.from_items(QQ, items, bivariate.prec)


# -- uniform route access ------------------------------------------------------


@dataclass(frozen=True)
class RankSeries:
    """A rank generating function tagged with how it was computed.

    ``ell`` is the cyclotomic order when z is specialized at zeta_ell, or
    None when z stays formal (QBINOMIAL/ENUMERATION) or equals 1 (DEFINITION).
    """

    ell: int | None
    route: str
    series: LaurentSeries


def rank_series(kind: str, route: str, prec: int, ell: int | None = None) -> RankSeries:
    """Compute RU (kind "u") or RV (kind "v") by the named route.

    DEFINITION is the q-hypergeometric transform at z = zeta_ell, or the
    plain counting series when ell is None (the z = 1 case).  LAMBERT is the
    bilateral sum divided by the root prefactor.  QBINOMIAL and ENUMERATION
    carry formal z when ell is None and specialize coefficient-wise otherwise.
    """
    if kind not in ("u", "v"):
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")
    if route not in ROUTES:
        raise ValueError(f"route must be one of {ROUTES}, got {route!r}")
    if route == "DEFINITION":
        if ell is None:
            return RankSeries(None, route, u_series(prec) if kind == "u" else v_series(prec))
        fn = ru_via_transform if kind == "u" else rv_via_transform
        return RankSeries(ell, route, fn(ell, prec))
    if route == "LAMBERT":
        if ell is None:
            raise ValueError("the bilateral route needs z specialized; pass ell")
        fn = ru_at_root if kind == "u" else rv_at_root
        return RankSeries(ell, route, fn(ell, prec))
    if route == "QBINOMIAL":
        biv = ru_bivariate(prec) if kind == "u" else rv_bivariate(prec)
        if ell is None:
            return RankSeries(None, route, biv)
        return RankSeries(ell, route, specialize_root(biv, ell))
    # ENUMERATION: brute-force histograms assembled into a series
    from .quadruples import rank_counts
    field = cyclotomic_field(ell) if ell is not None else None
    items = []
    for n in range(1, prec):
        hist = rank_counts(n, kind)
        if not hist:
            continue
        if field is None:
            coeff = ZPOLY.zero
            for m, count in hist.items():
                coeff = coeff + ZLaurentPoly.monomial(m, count)
        else:
            coeff = field.zero
            for m, count in hist.items():
                coeff = coeff + field.zeta(m) * QQ.of(count)
        items.append((n, coeff))
    ring = ZPOLY if field is None else field
    return RankSeries(ell, route, LaurentSeries.from_items(ring, items, prec))


# -- the right-hand sides of the five root-of-unity identities ----------------


def _zeta_combo(field, pairs) -> CycQ:
    acc = field.zero
    for coeff, power in pairs:
        acc = acc + field.zeta(power) * QQ.of(coeff)
    return acc


@lru_cache(maxsize=None)
def rhs_identity(name: str, prec: int) -> LaurentSeries:
    """The E/P/T product-and-Lambert form equated to RU/RV at zeta_ell."""
    if name == "RU3":
        e3inv = E_series(3, prec).inverse()
        out = (lambert_t(2, 3, 3, prec).shift(7) - lambert_t(2, 2, 3, prec).shift(5)) * e3inv
    elif name == "RV3":
        e3inv = E_series(3, prec).inverse()
        out = (lambert_t(2, 2, 3, prec).shift(5) - lambert_t(2, 1, 3, prec).shift(3)) * e3inv
    elif name == "RU5":
        e25 = E_series(25, prec)
        e25inv = e25.inverse()
        p1, p2 = P_series(1, 5, prec), P_series(2, 5, prec)
        out = (e25 * (p1 * p1).inverse()).shift(1) \
            - (lambert_t(2, 2, 5, prec) * e25inv * p2.inverse()).shift(7) \
            - (lambert_t(2, 1, 5, prec) * e25inv * p1.inverse()).shift(4)
    elif name == "RV5":
        e25 = E_series(25, prec)
        e25inv = e25.inverse()
        p1, p2 = P_series(1, 5, prec), P_series(2, 5, prec)
        out = (lambert_t(3, 3, 5, prec) * e25inv * p2.inverse()).shift(12) \
            - (lambert_t(3, 1, 5, prec) * e25inv * p1.inverse()).shift(5) \
            + (e25 * (p1 * p2).inverse()).shift(2) \
            - (e25 * (p2 * p2).inverse()).shift(3)
    elif name == "RU7":
        field = cyclotomic_field(7)
        c25 = _zeta_combo(field, [(1, 2), (1, 5)])          # zeta^2 + zeta^5
        c34 = _zeta_combo(field, [(1, 3), (1, 4)])          # zeta^3 + zeta^4
        c16 = _zeta_combo(field, [(1, 1), (1, 6)])          # zeta + zeta^6
        c134 = _zeta_combo(field, [(1, 0), (1, 3), (1, 4)])  # 1 + zeta^3 + zeta^4
        e49 = E_series(49, prec)
        e49inv = e49.inverse()
        p1, p2, p3 = (P_series(a, 7, prec) for a in (1, 2, 3))
        out = (e49 * p3 * (p1 * p2 * p2).inverse()).shift(1) \
            - (lambert_t(3, 3, 7, prec) * e49inv * p3.inverse()).shift(15).scale(c25) \
            - (e49 * (p1 * p2).inverse()).shift(2).scale(c34) \
            + (e49 * (p1 * p3).inverse()).shift(3) \
            + (e49 * (p2 * p2).inverse()).shift(4).scale(c16) \
            + (lambert_t(3, 2, 7, prec) * e49inv * p2.inverse()).shift(11).scale(c16) \
            + (e49 * (p3 * p3).inverse()).shift(6).scale(c134) \
            - (lambert_t(3, 1, 7, prec) * e49inv * p1.inverse()).shift(6).scale(c134)
    else:
        raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")
    out = out.truncate(prec)
    if out.prec < prec:
        raise ValueError(f"internal precision shortfall building {name}: {out.prec} < {prec}")
    return out


def identity_lhs(name: str, prec: int) -> LaurentSeries:
    """The matching left-hand side, via the bilateral Lambert route."""
    ell = int(name[2:])
    return ru_at_root(ell, prec) if name[1] == "U" else rv_at_root(ell, prec)


# -- supporting identities ----------------------------------------------------


def partial_fraction_residual(which: str, z: CycQ, j: int, prec: int) -> LaurentSeries:
    """LHS minus RHS of the two denominator-splitting identities; contract: zero.

    u-kind:  (1 - (z^2+z^-2)q^j + (z^2+z^-2)q^(3j-1) - q^(4j-2)) / D
             = 1/((1-z^2 q^(j-1))(1-z^-2 q^(j-1))) - q^(2j)/((1-z^2 q^j)(1-z^-2 q^j))
    v-kind:  (1-q)(1-q^(2j-1)) / D with q^(2j) replaced by q on the right,
    where D is the product of all four denominator factors.
    """
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    if which not in ("u", "v"):
        raise ValueError(f"kind must be 'u' or 'v', got {which!r}")
    field = cyclotomic_field(z.ell)
    one = field.one
    z2 = z * z
    if z2 == one or z2 == -one:
        raise ValueError("z^4 = 1 makes the denominators degenerate")
    z2i = z2.inverse()

    def inv_factor(c, e):
        if e == 0:
            return LaurentSeries.const(field, (one - c).inverse(), prec)
        return geometric(field, c, e, prec)

    lower = inv_factor(z2, j - 1) * inv_factor(z2i, j - 1)
    upper = inv_factor(z2, j) * inv_factor(z2i, j)
    zsum = z2 + z2i
    if which == "u":
        num = LaurentSeries.from_items(
            field,
            [(0, one), (j, -zsum), (3 * j - 1, zsum), (4 * j - 2, -one)], prec)
        rhs = lower - upper.shift(2 * j)
    else:
        num = LaurentSeries.from_items(
            field, [(0, one), (1, -one), (2 * j - 1, -one), (2 * j, one)], prec)
        rhs = lower - upper.shift(1)
    return (num * lower * upper - rhs).truncate(prec)


def prod_dissection_residual(ell: int, prec: int) -> LaurentSeries:
    """(q, zeta, 1/zeta; q)_inf minus its E(l^2)/P dissection; contract: zero."""
    field = cyclotomic_field(ell)
    z = field.zeta(1)
    lhs = poch(QQ, 1, 1, 1, INF, prec) * poch(field, z, 0, 1, INF, prec) \
        * poch(field, field.zeta(-1), 0, 1, INF, prec)
    acc = LaurentSeries.zero(field, prec)
    for k in range((ell - 3) // 2 + 1):
        c = field.zeta(k) - field.zeta(-k - 1)
        if k % 2:
            c = -c
        acc = acc + P_series((ell - 1) // 2 - k, ell, prec).shift(k * (k + 1) // 2).scale(c)
    rhs = (E_series(ell * ell, prec) * acc).scale(field.one - z)
    return (lhs - rhs).truncate(prec)


def prefactor_residual(ell: int, prec: int) -> LaurentSeries:
    """(1+zeta)(q, zeta, 1/zeta; q)_inf minus its closed E/P combination."""
    field = cyclotomic_field(ell)
    lhs = root_prefactor(ell, prec)
    if ell == 5:
        rhs = (P_series(2, 5, prec).scale(_zeta_combo(field, [(2, 0), (2, 1), (1, 3)]))
               - P_series(1, 5, prec).shift(1).scale(_zeta_combo(field, [(1, 0), (1, 1), (-2, 3)])))
        rhs = rhs * E_series(25, prec)
    elif ell == 7:
        rhs = (P_series(3, 7, prec).scale(_zeta_combo(field, [(2, 0), (2, 1), (1, 3), (1, 4), (1, 5)]))
               + P_series(2, 7, prec).shift(1).scale(_zeta_combo(field, [(-1, 0), (-1, 1), (1, 3), (1, 5)]))
               - P_series(1, 7, prec).shift(3).scale(_zeta_combo(field, [(1, 0), (1, 1), (1, 3), (3, 4), (1, 5)])))
        rhs = rhs * E_series(49, prec)
    else:
        raise ValueError(f"closed prefactor forms exist for ell in (5, 7), got {ell}")
    return (lhs - rhs).truncate(prec)
