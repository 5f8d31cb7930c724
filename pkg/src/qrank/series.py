"""Truncated Laurent series in q over an exact coefficient ring.

A series carries its valuation, a dense coefficient block, and a precision
``prec``: coefficients of q^e are known exactly for every e < prec.  prec may
be ``INF`` for objects that are exact polynomials (monomials, Gaussian
binomials).  Operations never claim coefficients they cannot know.

Coefficient rings are small adapter objects (``QQ``, ``cyclotomic_field(l)``,
``ZPOLY``) supplying zero/one, coercion, and scalar inversion.  A rational
series combines freely with a series over a larger ring; the coefficients
themselves carry the arithmetic via operator dispatch.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclotomic import QQ, CycQ, as_rational, cyclotomic_field, rational_str

INF = math.inf


class PrecisionError(ValueError):
    """A coefficient beyond the known precision was requested."""


def join_rings(r1, r2):
    if r1 is r2:
        return r1
    if r1._rank == 0:
        return r2
    if r2._rank == 0:
        return r1
    raise ValueError(f"incompatible coefficient rings {r1.name} and {r2.name}")


class ZLaurentPoly:
    """Laurent polynomial in the auxiliary variable z with rational coefficients."""

    __slots__ = ("lowest", "coeffs")

    def __init__(self, lowest: int, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
            lowest += 1
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.lowest = lowest if coeffs else 0
        self.coeffs = tuple(coeffs)

    @staticmethod
    def monomial(power: int, coeff=1) -> "ZLaurentPoly":
        return ZLaurentPoly(power, (as_rational(coeff),))

    @staticmethod
    def constant(value) -> "ZLaurentPoly":
        return ZLaurentPoly(0, (as_rational(value),))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs or (self.lowest == 0 and len(self.coeffs) == 1)

    def constant_value(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0]

    def _coerce(self, other):
        if isinstance(other, ZLaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return ZLaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lowest, other.lowest)
        hi = max(self.lowest + len(self.coeffs), other.lowest + len(other.coeffs))
        acc = [Fraction(0)] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            acc[self.lowest - lo + i] += c
        for i, c in enumerate(other.coeffs):
            acc[other.lowest - lo + i] += c
        return ZLaurentPoly(lo, acc)

    __radd__ = __add__

    def __neg__(self):
        return ZLaurentPoly(self.lowest, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZLaurentPoly(0, ())
            return ZLaurentPoly(self.lowest, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZLaurentPoly(0, ())
        acc = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[i + j] += a * b
        return ZLaurentPoly(self.lowest + other.lowest, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ZLaurentPoly):
            return self.lowest == other.lowest and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return self.is_constant() and bool(self.coeffs) and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.lowest, self.coeffs))

    def items(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.lowest + i, c

    def eval_at_root(self, field) -> CycQ:
        """Substitute z -> zeta_l, landing in Q(zeta_l)."""
        acc = field.zero
        for k, c in self.items():
            acc = acc + field.zeta(k) * c
        return acc

    def eval_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            if k == 0:
                body = str(abs(c))
            else:
                var = "z" if k == 1 else f"z^{k}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __repr__ = __str__


class ZPolyRing:
    """Coefficient-ring adapter for Laurent polynomials in z."""

    _rank = 1
    name = "QQ[z, 1/z]"
    zero = ZLaurentPoly(0, ())
    one = ZLaurentPoly.constant(1)

    @staticmethod
    def of(x):
        if isinstance(x, ZLaurentPoly):
            return x
        return ZLaurentPoly.constant(as_rational(x))

    @staticmethod
    def invert(x):
        if isinstance(x, (int, Fraction)):
            return ZLaurentPoly.constant(1 / as_rational(x))
        if x.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if len(x.coeffs) == 1:
            # Unit monomials c*z^k invert exactly.
            return ZLaurentPoly(-x.lowest, (1 / x.coeffs[0],))
        raise ValueError("leading coefficient is a non-unit polynomial; clear denominators instead")

    @staticmethod
    def is_zero(x):
        if isinstance(x, ZLaurentPoly):
            return x.is_zero()
        return not x

    @staticmethod
    def encode(x):
        return {"lowest": x.lowest, "coeffs": [rational_str(c) for c in x.coeffs]}

    def __repr__(self):
        return self.name


ZPOLY = ZPolyRing()


class LaurentSeries:
    """Truncated Laurent series over an exact ring, exact below ``prec``."""

    __slots__ = ("ring", "valuation", "coeffs", "prec")

    def __init__(self, ring, valuation, coeffs, prec=INF):
        coeffs = list(coeffs)
        if prec != INF and coeffs:
            keep = prec - valuation
            if keep <= 0:
                coeffs = []
            elif len(coeffs) > keep:
                del coeffs[int(keep):]
        iz = ring.is_zero
        while coeffs and iz(coeffs[0]):
            coeffs.pop(0)
            valuation += 1
        while coeffs and iz(coeffs[-1]):
            coeffs.pop()
        self.ring = ring
        self.coeffs = coeffs
        self.valuation = valuation if coeffs else prec
        self.prec = prec

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(ring, prec=INF) -> "LaurentSeries":
        return LaurentSeries(ring, prec, (), prec)

    @staticmethod
    def const(ring, value, prec=INF) -> "LaurentSeries":
        return LaurentSeries(ring, 0, (ring.of(value),), prec)

    @staticmethod
    def monomial(ring, exponent: int, coeff=1, prec=INF) -> "LaurentSeries":
        return LaurentSeries(ring, exponent, (ring.of(coeff),), prec)

    @staticmethod
    def from_items(ring, items, prec=INF) -> "LaurentSeries":
        """Series from (exponent, coefficient) pairs; duplicate exponents add."""
        acc = {}
        for e, c in items:
            if prec != INF and e >= prec:
                continue
            acc[e] = acc[e] + c if e in acc else c
        if not acc:
            return LaurentSeries.zero(ring, prec)
        lo = min(acc)
        hi = max(acc)
        dense = [ring.zero] * (hi - lo + 1)
        for e, c in acc.items():
            dense[e - lo] = c
        return LaurentSeries(ring, lo, dense, prec)

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, e: int):
        """Exact coefficient of q^e; raises PrecisionError for e >= prec."""
        if e >= self.prec:
            raise PrecisionError(f"coefficient of q^{e} is beyond precision {self.prec}")
        if not self.coeffs or e < self.valuation or e >= self.valuation + len(self.coeffs):
            return self.ring.zero
        return self.coeffs[e - self.valuation]

    def nonzero_items(self):
        iz = self.ring.is_zero
        for i, c in enumerate(self.coeffs):
            if not iz(c):
                yield self.valuation + i, c

    def coefficient_range(self, lo: int, hi: int) -> list:
        """Coefficients of q^lo .. q^(hi-1); all must be below prec."""
        return [self.coefficient(e) for e in range(lo, hi)]

    # -- ring operations --------------------------------------------------

    def _promote_coeffs(self, ring):
        if self.ring is ring:
            return self.coeffs
        of = ring.of
        return [of(c) for c in self.coeffs]

    def _combine(self, other, minus: bool) -> "LaurentSeries":
        ring = join_rings(self.ring, other.ring)
        prec = min(self.prec, other.prec)
        a, b = self._promote_coeffs(ring), other._promote_coeffs(ring)
        if not a and not b:
            return LaurentSeries.zero(ring, prec)
        if not a:
            return LaurentSeries(ring, other.valuation, [-c for c in b] if minus else b, prec)
        if not b:
            return LaurentSeries(ring, self.valuation, a, prec)
        lo = min(self.valuation, other.valuation)
        hi = max(self.valuation + len(a), other.valuation + len(b))
        acc = [ring.zero] * (hi - lo)
        off = self.valuation - lo
        for i, c in enumerate(a):
            acc[off + i] = c
        off = other.valuation - lo
        if minus:
            for i, c in enumerate(b):
                acc[off + i] = acc[off + i] - c
        else:
            for i, c in enumerate(b):
                acc[off + i] = acc[off + i] + c
        return LaurentSeries(ring, lo, acc, prec)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._combine(other, False)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self._combine(other, True)

    def __neg__(self):
        return LaurentSeries(self.ring, self.valuation, [-c for c in self.coeffs], self.prec)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        ring = join_rings(self.ring, other.ring)
        prec = min(self.prec + other.valuation, other.prec + self.valuation)
        if not self.coeffs or not other.coeffs:
            return LaurentSeries.zero(ring, prec)
        val = self.valuation + other.valuation
        length = len(self.coeffs) + len(other.coeffs) - 1
        if prec != INF:
            length = min(length, int(prec - val))
            if length <= 0:
                return LaurentSeries.zero(ring, prec)
        a, b = self.coeffs, other.coeffs
        iza, izb = self.ring.is_zero, other.ring.is_zero
        if sum(1 for c in a if not iza(c)) > sum(1 for c in b if not izb(c)):
            a, b = b, a
            iza, izb = izb, iza
        acc = [ring.zero] * length
        for i, ca in enumerate(a):
            if i >= length:
                break
            if iza(ca):
                continue
            jmax = min(len(b), length - i)
            for j in range(jmax):
                cb = b[j]
                if not izb(cb):
                    acc[i + j] = acc[i + j] + ca * cb
        return LaurentSeries(ring, val, acc, prec)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentSeries.const(self.ring, self.ring.one, self.prec if k == 0 else INF)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c) -> "LaurentSeries":
        """Multiply every coefficient by the scalar c."""
        ring = self.ring
        if isinstance(c, CycQ):
            ring = join_rings(ring, cyclotomic_field(c.ell))
        elif isinstance(c, ZLaurentPoly):
            ring = join_rings(ring, ZPOLY)
        else:
            c = as_rational(c)
        if ring.is_zero(c):
            return LaurentSeries.zero(ring, self.prec)
        return LaurentSeries(ring, self.valuation, [c * x for x in self.coeffs], self.prec)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k."""
        return LaurentSeries(self.ring, self.valuation + k, self.coeffs, self.prec + k)

    def inverse(self, prec=None) -> "LaurentSeries":
        """Multiplicative inverse to precision ``self.prec - 2*valuation``.

        Requires an invertible leading coefficient.  ``prec`` overrides the
        output precision (never upward past what the input supports unless the
        input is exact).
        """
        if not self.coeffs:
            raise ZeroDivisionError("inverting a series with no known nonzero coefficient")
        v = self.valuation
        native = self.prec - 2 * v if self.prec != INF else INF
        out_prec = native if prec is None else (prec if native == INF else min(prec, native))
        if out_prec == INF:
            raise PrecisionError("cannot invert an exact polynomial to infinite precision; pass prec")
        lead_inv = self.ring.invert(self.coeffs[0])
        count = int(out_prec + v)
        if count <= 0:
            return LaurentSeries.zero(self.ring, out_prec)
        iz = self.ring.is_zero
        rest = [(i, c) for i, c in enumerate(self.coeffs) if i and not iz(c)]
        out = [lead_inv]
        for k in range(1, count):
            s = None
            for i, c in rest:
                if i > k:
                    break
                t = c * out[k - i]
                s = t if s is None else s + t
            out.append(self.ring.zero if s is None else -(lead_inv * s))
        return LaurentSeries(self.ring, -v, out, out_prec)

    # -- structural operations ------------------------------------------

    def truncate(self, prec) -> "LaurentSeries":
        if prec >= self.prec:
            return self
        return LaurentSeries(self.ring, self.valuation, self.coeffs, prec)

    def with_prec(self, prec) -> "LaurentSeries":
        """Assert a precision (used when a result is known to be exact)."""
        return LaurentSeries(self.ring, self.valuation, self.coeffs, prec)

    def substitute_qk(self, k: int) -> "LaurentSeries":
        """q -> q^k; precision becomes k*(prec-1)+1."""
        if k < 1:
            raise ValueError(f"substitution power must be >= 1, got {k}")
        prec = self.prec if self.prec == INF else k * (self.prec - 1) + 1
        if k == 1 or not self.coeffs:
            return LaurentSeries(self.ring, self.valuation * k if self.coeffs else prec,
                                 self.coeffs, prec)
        spread = [self.ring.zero] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * k] = c
        return LaurentSeries(self.ring, self.valuation * k, spread, prec)

    def dissect(self, modulus: int, residue: int) -> "LaurentSeries":
        """Keep only the exponents congruent to residue mod modulus."""
        if modulus < 1 or not 0 <= residue < modulus:
            raise ValueError(f"need 0 <= residue < modulus, got {residue} mod {modulus}")
        kept = [(e, c) for e, c in self.nonzero_items() if e % modulus == residue]
        return LaurentSeries.from_items(self.ring, kept, self.prec)

    def promote(self, ring) -> "LaurentSeries":
        target = join_rings(self.ring, ring)
        if target is self.ring:
            return self
        return LaurentSeries(target, self.valuation, self._promote_coeffs(target), self.prec)

    # -- comparison -------------------------------------------------------

    def equal_upto(self, other, limit=None):
        """First differing (exponent, lhs, rhs) below min precision, or None."""
        bound = min(self.prec, other.prec)
        if limit is not None:
            bound = min(bound, limit)
        diff = self - other
        for e, _ in diff.nonzero_items():
            if e >= bound:
                break
            return e, self.coefficient(e), other.coefficient(e)
        return None

    def first_nonzero_below(self, limit=None):
        bound = self.prec if limit is None else min(limit, self.prec)
        for e, c in self.nonzero_items():
            if e >= bound:
                break
            return e, c
        return None

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.ring is other.ring and self.prec == other.prec
                and self.valuation == other.valuation and self.coeffs == other.coeffs)

    # -- output -----------------------------------------------------------

    def to_json(self):
        return {
            "valuation": None if self.valuation == INF else int(self.valuation),
            "prec": None if self.prec == INF else int(self.prec),
            "coeffs": [self.ring.encode(c) for c in self.coeffs],
        }

    def __repr__(self):
        terms = []
        for e, c in self.nonzero_items():
            if len(terms) == 6:
                terms.append("...")
                break
            cs = str(c)
            if not (cs.lstrip("-").replace("/", "").isdigit()):
                cs = f"({cs})"
            if e == 0:
                terms.append(cs)
            else:
                qs = "q" if e == 1 else f"q^{e}"
                terms.append(qs if cs == "1" else f"{cs}*{qs}")
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.prec == INF else f" + O(q^{int(self.prec)})"
        return body + tail


# -- product and sum builders ------------------------------------------------


def geometric(ring, c, step: int, prec) -> "LaurentSeries":
    """1/(1 - c*q^step) = sum_{k>=0} c^k q^(k*step), step >= 1."""
    if step < 1:
        raise ValueError(f"geometric step must be >= 1, got {step}")
    if prec == INF:
        raise PrecisionError("geometric expansion needs a finite precision")
    c = ring.of(c)
    out = [ring.zero] * max(int(prec), 1)
    power = ring.one
    e = 0
    while e < prec:
        out[e] = power
        power = power * c
        e += step
    return LaurentSeries(ring, 0, out, prec)


def poch(ring, c, a: int, b: int, count, prec) -> "LaurentSeries":
    """q-Pochhammer (c*q^a; q^b)_count = prod_{j<count} (1 - c*q^(a+j*b)).

    ``count`` is a non-negative integer or INF.  Infinite products require
    a >= 1, or a = 0 with c != 1 (the leading factor is then the scalar 1-c).
    """
    if b < 1:
        raise ValueError(f"Pochhammer step must be >= 1, got {b}")
    c = ring.of(c)
    if count == INF:
        if a < 0:
            raise ValueError(f"infinite product with leading exponent {a} < 0 does not converge formally")
        if a == 0 and c == ring.one:
            raise ValueError("infinite product (1;q)_inf vanishes identically; handle the z=1 case separately")
        if prec == INF:
            raise PrecisionError("infinite product needs a finite precision")
        size = int(prec)
        arr = [ring.zero] * size
        arr[0] = ring.one
        iz = ring.is_zero
        e = a if a >= 1 else b
        while e < prec:
            for i in range(size - 1, e - 1, -1):
                src = arr[i - e]
                if not iz(src):
                    arr[i] = arr[i] - c * src
            e += b
        if a == 0:
            s = ring.one - c
            arr = [s * x for x in arr]
        return LaurentSeries(ring, 0, arr, prec)
    if not isinstance(count, int) or count < 0:
        raise ValueError(f"Pochhammer count must be a non-negative integer or INF, got {count}")
    result = LaurentSeries.const(ring, ring.one, prec)
    for j in range(count):
        e = a + j * b
        if prec != INF and e >= prec and e > 0:
            break
        factor = LaurentSeries.from_items(ring, [(0, ring.one), (e, -c)], prec)
        result = result * factor
    return result


def jacprod(ring, c, a: int, b: int, prec) -> "LaurentSeries":
    """Theta-style product (c*q^a; q^b)_inf * (q^(b-a)/c; q^b)_inf, 0 < a < b."""
    if not 0 < a < b:
        raise ValueError(f"jacprod needs 0 < a < b, got a={a}, b={b}")
    cinv = ring.invert(c)
    return poch(ring, c, a, b, INF, prec) * poch(ring, cinv, b - a, b, INF, prec)


def theta_jtp_sum(ring, c, prec) -> "LaurentSeries":
    """Bilateral theta sum sum_n (-1)^n c^n q^(n(n+1)/2), truncated below prec."""
    if prec == INF:
        raise PrecisionError("theta sum needs a finite precision")
    c = ring.of(c)
    items = []
    power = ring.one
    n = 0
    while n * (n + 1) // 2 < prec:
        items.append((n * (n + 1) // 2, power if n % 2 == 0 else -power))
        power = power * c
        n += 1
    cinv = ring.invert(c)
    power = ring.one
    t = 1
    while t * (t - 1) // 2 < prec:
        power = power * cinv
        items.append((t * (t - 1) // 2, -power if t % 2 else power))
        t += 1
    return LaurentSeries.from_items(ring, items, prec)


def gauss_binomial(n: int, m: int) -> "LaurentSeries":
    """Gaussian binomial (q;q)_{n+m} / ((q;q)_n (q;q)_m) as an exact polynomial."""
    if n < 0 or m < 0:
        raise ValueError("Gaussian binomial needs non-negative arguments")
    if n == 0 or m == 0:
        return LaurentSeries.const(QQ, 1)
    work = n * m + 1
    num = poch(QQ, 1, 1, 1, n + m, work)
    den = poch(QQ, 1, 1, 1, n, work) * poch(QQ, 1, 1, 1, m, work)
    quot = num * den.inverse()
    # The quotient is a polynomial of degree exactly n*m, so it is exact.
    return quot.with_prec(INF)
