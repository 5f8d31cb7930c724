"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately written without the package's series
machinery: plain dicts keyed by exponent, plain loops.  These implementations
stay naive so they can arbitrate against the fast paths they check.
"""

from fractions import Fraction


def pentagonal_coeffs(prec: int) -> dict[int, int]:
    """Coefficients of prod (1-q^n) via the bilateral pentagonal sum."""
    out = {0: 1}
    k = 1
    while True:
        hit = False
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < prec:
                out[e] = out.get(e, 0) + (1 if k % 2 == 0 else -1)
                hit = True
        if not hit:
            break
        k += 1
    return {e: c for e, c in out.items() if c}


def partition_counts(limit: int) -> list[int]:
    """p(0), ..., p(limit-1) by bounded-part dynamic programming."""
    table = [1] + [0] * (limit - 1)
    for part in range(1, limit):
        for total in range(part, limit):
            table[total] += table[total - part]
    return table


def partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""
    found = []

    def go(prefix, remaining_rows, hi):
        found.append(tuple(prefix))
        if remaining_rows == 0:
            return
        for p in range(1, hi + 1):
            go(prefix + [p], remaining_rows - 1, p)

    go([], rows, cols)
    return found


def poly_mul(a: dict, b: dict, prec) -> dict:
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e < prec:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def product_expansion(factor_exponents, prec: int) -> dict[int, int]:
    """Expand prod (1 - q^e) over the given exponents, truncated below prec."""
    out = {0: 1}
    for e in factor_exponents:
        if e >= prec:
            continue
        out = poly_mul(out, {0: 1, e: -1}, prec)
    return out


def jac_reference(a: int, b: int, prec: int) -> dict[int, int]:
    """(q^a; q^b)_inf (q^(b-a); q^b)_inf by direct factor expansion."""
    exps = []
    e = a
    while e < prec:
        exps.append(e)
        e += b
    e = b - a
    while e < prec:
        exps.append(e)
        e += b
    return product_expansion(exps, prec)


def lambert_reference(a: int, b: int, ell: int, prec: int, n_range: int = 6) -> dict[int, Fraction]:
    """T(a,b,ell) by direct per-term expansion over |n| <= n_range."""
    out = {}
    for n in range(-n_range, n_range + 1):
        sign = 1 if n % 2 == 0 else -1
        e = ell * ell * n * (n + 1) // 2 + ell * b * n
        m = ell * ell * n + ell * a
        if m > 0:
            k = 0
            while e + m * k < prec:
                key = e + m * k
                out[key] = out.get(key, 0) + sign
                k += 1
        else:
            # 1/(1-q^m) = -q^(-m) / (1 - q^(-m)) for m < 0
            k = 1
            while e + (-m) * k < prec:
                key = e + (-m) * k
                out[key] = out.get(key, 0) - sign
                k += 1
    return {e: Fraction(c) for e, c in out.items() if c}


def as_coeff_dict(series, lo: int, hi: int) -> dict:
    """Nonzero coefficients of a LaurentSeries on [lo, hi) for comparisons."""
    out = {}
    for e in range(lo, hi):
        c = series.coefficient(e)
        if c:
            out[e] = c
    return out
