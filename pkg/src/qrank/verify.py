"""Named-check registry: every verified identity and congruence as a runnable check.

Each check produces a CheckReport: PASS, or FAIL with the first offending
exponent and both coefficient values.  ``run_all`` executes the registry for a
precision profile; the exit status of the CLI wrapper reflects any FAIL.

Check identifiers are grouped by family:

* ``THM11:*``  coefficient congruence scans of the counting series,
* ``THM12:*``  the five root-of-unity series identities (LHS minus RHS),
* ``THM13:*``  rank-refinement combinatorics (route agreement, equal classes),
* ``INFRA:*``  supporting product/Lambert identities,
* ``SEC5:*``   mod-13 boundary facts (the nonvanishing coefficients).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .cyclotomic import cyclotomic_field
from .lambert import P_series, chan_identity_residual, chan_suite_parameters, lambert_t
from .quadruples import class_counts, rank_counts
from .rankgen import (eval_f, identity_lhs, partial_fraction_residual,
                      prefactor_residual, prod_dissection_residual,
                      rhs_identity, ru_at_root, ru_bivariate, ru_via_transform,
                      rv_at_root, rv_bivariate, rv_via_transform,
                      specialize_one, specialize_root, u_series, v_series)

PROFILES = ("fast", "default", "deep")

CONGRUENCES = {
    "u3": ("u", 3, 0), "u5a": ("u", 5, 0), "u5b": ("u", 5, 3),
    "u7a": ("u", 7, 0), "u7b": ("u", 7, 5), "u13": ("u", 13, 0),
    "v3": ("v", 3, 1), "v5a": ("v", 5, 1), "v5b": ("v", 5, 4),
    "v13": ("v", 13, 10),
}

CLASS_FAMILIES = {
    "u3": ("u", 3, (0,)), "v3": ("v", 3, (1,)),
    "u5": ("u", 5, (0, 3)), "v5": ("v", 5, (1, 4)),
    "u7": ("u", 7, (0, 5)),
}


@dataclass
class CheckReport:
    name: str
    prec: int
    status: str                  # PASS | FAIL | SKIPPED
    first_failure: tuple | None  # (exponent, lhs, rhs)
    runtime_ms: float
    detail: str = ""

    def to_json(self) -> dict:
        failure = None
        if self.first_failure is not None:
            e, lhs, rhs = self.first_failure
            failure = {"exponent": e, "lhs": str(lhs), "rhs": str(rhs)}
        return {
            "name": self.name, "prec": self.prec, "status": self.status,
            "first_failure": failure, "runtime_ms": round(self.runtime_ms, 3),
            "detail": self.detail,
        }


@dataclass
class _Check:
    run: callable               # prec -> (status, first_failure, detail)
    default_prec: int
    fast_prec: int
    long: bool = field(default=False)
    # enumeration- and bivariate-backed checks stay desk-scale however large
    # a --prec override is; the report carries the precision actually used
    max_prec: int | None = field(default=None)


def _series_pair(lhs, rhs, prec):
    mismatch = lhs.equal_upto(rhs, prec)
    if mismatch is None:
        return "PASS", None, ""
    e, lc, rc = mismatch
    return "FAIL", (e, str(lc), str(rc)), ""


def _zero_residual(residual, prec, context=""):
    if residual.prec < prec:
        raise ValueError(f"residual precision {residual.prec} below requested {prec}")
    hit = residual.first_nonzero_below(prec)
    if hit is None:
        return "PASS", None, context
    e, c = hit
    return "FAIL", (e, str(c), "0"), context


def _congruence_check(family, mod, residue):
    def run(prec):
        series = u_series(prec) if family == "u" else v_series(prec)
        checked = 0
        for e in range(residue, prec, mod):
            c = series.coefficient(e)
            if c.denominator != 1:
                return "FAIL", (e, str(c), "an integer"), ""
            if c.numerator % mod:
                return "FAIL", (e, str(c), f"0 (mod {mod})"), ""
            checked += 1
        return "PASS", None, f"{family}({mod}n+{residue}) = 0 mod {mod} at {checked} coefficients"
    return run


def _identity_check(name):
    def run(prec):
        return _series_pair(identity_lhs(name, prec), rhs_identity(name, prec), prec)
    return run


def _bivariate_agreement(prec):
    n_max = min(12, prec - 1)
    biv_u, biv_v = ru_bivariate(prec), rv_bivariate(prec)
    for kind, biv in (("u", biv_u), ("v", biv_v)):
        for n in range(1, n_max + 1):
            hist = rank_counts(n, kind)
            got = {k: int(c) for k, c in biv.coefficient(n).items()}
            if got != hist:
                return "FAIL", (n, str(hist), str(got)), f"{kind}-rank histogram at n={n}"
    spez_bound = min(prec, 15)
    for kind, biv, direct in (("u", biv_u, u_series(prec)), ("v", biv_v, v_series(prec))):
        mismatch = specialize_one(biv).equal_upto(direct, spez_bound)
        if mismatch is not None:
            e, lc, rc = mismatch
            return "FAIL", (e, str(lc), str(rc)), f"z->1 against the {kind} counting series"
    return "PASS", None, f"rank histograms to n={n_max}; z->1 to order {spez_bound}"


def _class_equality_check(key):
    kind, ell, residues = CLASS_FAMILIES[key]
    def run(n_limit):
        checked = []
        for n in range(1, n_limit + 1):
            if n % ell not in residues:
                continue
            counts = class_counts(n, kind, ell)
            if len(set(counts)) != 1:
                return "FAIL", (n, str(counts), "a constant vector"), ""
            checked.append(n)
        return "PASS", None, f"equal {ell}-classes at n in {checked}"
    return run


def _t_symmetry(prec):
    rng = random.Random(1789)
    cases = []
    for ell in (3, 5, 7):
        picked = 0
        while picked < 4:
            a = rng.randint(-10, 10)
            b = rng.randint(-10, 10)
            if a == 0 or a % ell == 0:
                continue
            cases.append((a, b, ell))
            picked += 1
    for a, b, ell in cases:
        residual = lambert_t(-a, b, ell, prec) + lambert_t(a, -b, ell, prec).shift(ell * a)
        hit = residual.first_nonzero_below(prec)
        if hit is not None:
            e, c = hit
            return "FAIL", (e, str(c), "0"), f"T(-a,b,l) + q^(la) T(a,-b,l) at (a,b,l)={(a,b,ell)}"
    return "PASS", None, f"{len(cases)} sampled (a,b,l) triples"


def _chan_suite(variant):
    def run(prec):
        for params in chan_suite_parameters():
            v, ell, a, b1, b2 = params
            if v != variant:
                continue
            residual = chan_identity_residual(v, ell, a, b1, b2, prec)
            hit = residual.first_nonzero_below(prec)
            if hit is not None:
                e, c = hit
                return "FAIL", (e, str(c), "0"), f"parameters {params}"
        count = sum(1 for p in chan_suite_parameters() if p[0] == variant)
        return "PASS", None, f"{count} parameter tuples"
    return run


def _jtp_check(prec):
    from .cyclotomic import QQ
    from .series import INF, poch, theta_jtp_sum
    specials = [(cyclotomic_field(3), cyclotomic_field(3).zeta(1), "zeta_3"),
                (cyclotomic_field(5), cyclotomic_field(5).zeta(1), "zeta_5"),
                (cyclotomic_field(7), cyclotomic_field(7).zeta(1), "zeta_7"),
                (QQ, QQ.of(2), "2"), (QQ, QQ.of(-1), "-1")]
    for ring, c, label in specials:
        theta = theta_jtp_sum(ring, c, prec)
        prod = poch(ring, c, 1, 1, INF, prec) \
            * poch(ring, ring.invert(c), 0, 1, INF, prec) \
            * poch(QQ, 1, 1, 1, INF, prec)
        mismatch = theta.equal_upto(prod, prec)
        if mismatch is not None:
            e, lc, rc = mismatch
            return "FAIL", (e, str(lc), str(rc)), f"triple product at z = {label}"
    return "PASS", None, "z in {zeta_3, zeta_5, zeta_7, 2, -1}"


def _prod_dissection(ell):
    def run(prec):
        return _zero_residual(prod_dissection_residual(ell, prec), prec)
    return run


def _prefactor(ell):
    def run(prec):
        return _zero_residual(prefactor_residual(ell, prec), prec)
    return run


def _as_lemma(prec):
    p1, p2, p3 = (P_series(a, 7, prec) for a in (1, 2, 3))
    residual = p3 ** 3 * p1 - p2 ** 3 * p3 + (p1 ** 3 * p2).shift(7)
    return _zero_residual(residual, prec, "P(3)^3 P(1) - P(2)^3 P(3) + q^7 P(1)^3 P(2)")


def _q7_rewrites(prec):
    p1, p2, p3 = (P_series(a, 7, prec) for a in (1, 2, 3))
    rewrites = [
        ("q P(2)/P(1)^2 - q^8 P(1)/(P(2)P(3)) = q P(3)^2/(P(1)P(2)^2)",
         (p2 * (p1 * p1).inverse()).shift(1) - (p1 * (p2 * p3).inverse()).shift(8)
         - (p3 * p3 * (p1 * p2 * p2).inverse()).shift(1)),
        ("q^11 P(1)^2/(P(2)P(3)^2) = q^4 P(2)/(P(1)P(3)) - q^4 P(3)/P(2)^2",
         (p1 * p1 * (p2 * p3 * p3).inverse()).shift(11)
         - (p2 * (p1 * p3).inverse()).shift(4) + (p3 * (p2 * p2).inverse()).shift(4)),
        ("q^14 P(1)^3/(P(2)P(3)^3) = -q^7 P(1)/P(2)^2 + q^7 P(2)/P(3)^2",
         (p1 ** 3 * (p2 * p3 ** 3).inverse()).shift(14)
         + (p1 * (p2 * p2).inverse()).shift(7) - (p2 * (p3 * p3).inverse()).shift(7)),
    ]
    for label, residual in rewrites:
        status, failure, _ = _zero_residual(residual, prec)
        if status != "PASS":
            return status, failure, label
    return "PASS", None, "three rewrites"


def _partial_fractions(which):
    def run(prec):
        for ell in (3, 5, 7):
            z = cyclotomic_field(ell).zeta(1)
            for j in (1, 2, 3):
                residual = partial_fraction_residual(which, z, j, prec)
                hit = residual.first_nonzero_below(prec)
                if hit is not None:
                    e, c = hit
                    return "FAIL", (e, str(c), "0"), f"z = zeta_{ell}, j = {j}"
        return "PASS", None, "z in {zeta_3, zeta_5, zeta_7}, j in {1, 2, 3}"
    return run


def _three_routes(prec):
    biv_u, biv_v = ru_bivariate(prec), rv_bivariate(prec)
    for ell in (3, 5, 7):
        for label, base, transform, biv in (
                ("RU", ru_at_root(ell, prec), ru_via_transform(ell, prec), biv_u),
                ("RV", rv_at_root(ell, prec), rv_via_transform(ell, prec), biv_v)):
            for route, other in (("transform", transform), ("bivariate", specialize_root(biv, ell))):
                mismatch = base.equal_upto(other, prec)
                if mismatch is not None:
                    e, lc, rc = mismatch
                    return "FAIL", (e, str(lc), str(rc)), f"{label} at zeta_{ell}, {route} route"
    return "PASS", None, "RU and RV, ell in {3, 5, 7}, both alternate routes"


def _ru13_nonzero(prec):
    c = ru_at_root(13, max(prec, 14)).coefficient(13)
    if c.is_zero():
        return "FAIL", (13, "0", "a nonzero element"), ""
    return "PASS", None, f"coefficient of q^13 is {c}"


def _f13_grid(prec):
    field = cyclotomic_field(13)
    prec = max(prec, 14)
    skipped = checked = 0
    for a in range(13):
        for b in range(13):
            for c in range(13):
                if a == 0 or b == 0 or c == 0:
                    skipped += 1  # an argument equals 1: prefactor degenerates
                    continue
                series = eval_f(field.zeta(a), field.zeta(b), field.zeta(c), prec)
                if series.coefficient(13).is_zero():
                    return "FAIL", (13, "0", f"nonzero at (a,b,c)=({a},{b},{c})"), ""
                checked += 1
    return "PASS", None, f"{checked} triples nonzero, {skipped} degenerate triples skipped"


def _build_registry() -> dict[str, _Check]:
    registry: dict[str, _Check] = {}
    for key, (family, mod, residue) in CONGRUENCES.items():
        registry[f"THM11:{key}"] = _Check(_congruence_check(family, mod, residue), 105, 40)
    for name in ("RU3", "RV3", "RU5", "RV5", "RU7"):
        registry[f"THM12:{name}"] = _Check(_identity_check(name), 120 if name == "RU7" else 60, 40)
    registry["THM13:bivariate-agreement"] = _Check(_bivariate_agreement, 21, 9, max_prec=23)
    for key in CLASS_FAMILIES:
        registry[f"THM13:classes-{key}"] = _Check(_class_equality_check(key), 14, 8, max_prec=16)
    registry["INFRA:T-symmetry"] = _Check(_t_symmetry, 80, 40)
    registry["INFRA:EqChan1-suite"] = _Check(_chan_suite(1), 100, 40)
    registry["INFRA:EqChan2-suite"] = _Check(_chan_suite(2), 100, 40)
    registry["INFRA:JTP"] = _Check(_jtp_check, 60, 40)
    for ell in (3, 5, 7):
        registry[f"INFRA:ProdDissection-{ell}"] = _Check(_prod_dissection(ell), 60, 40)
    registry["INFRA:AS-Lemma4"] = _Check(_as_lemma, 120, 40)
    registry["INFRA:q7-rewrites"] = _Check(_q7_rewrites, 120, 40)
    registry["INFRA:PartialFractions-U"] = _Check(_partial_fractions("u"), 60, 40)
    registry["INFRA:PartialFractions-V"] = _Check(_partial_fractions("v"), 60, 40)
    registry["INFRA:Prefactor-5"] = _Check(_prefactor(5), 60, 40)
    registry["INFRA:Prefactor-7"] = _Check(_prefactor(7), 60, 40)
    registry["INFRA:three-routes"] = _Check(_three_routes, 21, 11, max_prec=23)
    registry["SEC5:RU13-q13-nonzero"] = _Check(_ru13_nonzero, 14, 14)
    registry["SEC5:F13-grid-q13-nonzero"] = _Check(_f13_grid, 14, 14, long=True)
    return registry


_REGISTRY = _build_registry()


def check_names(include_long: bool = True) -> list[str]:
    names = [n for n, c in _REGISTRY.items() if include_long or not c.long]
    return sorted(names)


def run_check(name: str, prec: int | None = None, profile: str = "default") -> CheckReport:
    """Execute one named check; ``prec`` overrides the profile precision."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    if name not in _REGISTRY:
        raise KeyError(f"unknown check {name!r}")
    check = _REGISTRY[name]
    used_prec = prec if prec is not None else (
        check.fast_prec if profile == "fast" else check.default_prec)
    if check.max_prec is not None:
        used_prec = min(used_prec, check.max_prec)
    start = time.perf_counter()
    status, failure, detail = check.run(used_prec)
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckReport(name, used_prec, status, failure, elapsed, detail)


def run_all(profile: str = "default", only=None, prec: int | None = None) -> list[CheckReport]:
    """Run the registry (long checks only under the deep profile), in name order."""
    if only is not None:
        names = list(only)
        for n in names:
            if n not in _REGISTRY:
                raise KeyError(f"unknown check {n!r}")
    else:
        names = check_names(include_long=(profile == "deep"))
    return [run_check(n, prec=prec, profile=profile) for n in sorted(names)]
