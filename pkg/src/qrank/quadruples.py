"""Brute-force enumeration of the partition quadruples behind u(n) and v(n).

A quadruple (p1, p2, p3, p4) of partitions belongs to the family U when p1 is
non-empty, the smallest part of p1 is minimal among all four partitions, and
the largest part of p4 is at most twice that smallest part.  V additionally
requires the smallest part of p1 to repeat.  The omega statistic counts the
parts of p1 that equal s(p1) or exceed s(p1) + #(p4); the u-rank and v-rank
are omega - 1 (resp. omega - 2) + 2#(p2) - 2#(p3) - #(p4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

UNBOUNDED = math.inf  # smallest part of the empty partition


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    @staticmethod
    def of(parts) -> "Partition":
        parts = tuple(parts)
        if any(p < 1 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be positive and non-increasing, got {parts}")
        return Partition(parts)

    def smallest(self):
        return self.parts[-1] if self.parts else UNBOUNDED

    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def total(self) -> int:
        return sum(self.parts)

    def count(self) -> int:
        return len(self.parts)

    def is_empty(self) -> bool:
        return not self.parts

    def label(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "-"

    def __str__(self):
        return self.label()


EMPTY = Partition(())


@dataclass(frozen=True)
class Quadruple:
    p1: Partition
    p2: Partition
    p3: Partition
    p4: Partition

    def total(self) -> int:
        return self.p1.total() + self.p2.total() + self.p3.total() + self.p4.total()

    def in_family(self, kind: str) -> bool:
        if self.p1.is_empty():
            return False
        s = self.p1.smallest()
        if not (s <= self.p2.smallest() and s <= self.p3.smallest() and s <= self.p4.smallest()):
            return False
        if self.p4.largest() > 2 * s:
            return False
        if kind == "v":
            return self.p1.count() >= 2 and self.p1.parts[-2] == s
        return True

    def omega(self) -> int:
        s = self.p1.smallest()
        cutoff = s + self.p4.count()
        return sum(1 for p in self.p1.parts if p == s or p > cutoff)

    def rank(self, kind: str) -> int:
        base = 1 if kind == "u" else 2
        return (self.omega() - base + 2 * self.p2.count()
                - 2 * self.p3.count() - self.p4.count())

    def sort_key(self):
        return (self.p1.smallest(), self.p1.parts, self.p2.parts, self.p3.parts, self.p4.parts)


def _check_kind(kind: str):
    if kind not in ("u", "v"):
        raise ValueError(f"kind must be 'u' or 'v', got {kind!r}")


@lru_cache(maxsize=None)
def _partitions(total: int, min_part: int, max_part) -> tuple:
    if total == 0:
        return ((),)
    out = []
    hi = total if max_part is None else min(max_part, total)
    for p in range(hi, min_part - 1, -1):
        for rest in _partitions(total - p, min_part, p):
            out.append((p,) + rest)
    return tuple(out)


def partitions_bounded(total: int, min_part: int = 1, max_part=None) -> list[Partition]:
    """All partitions of ``total`` with parts in [min_part, max_part]."""
    if total < 0:
        raise ValueError("total must be non-negative")
    if min_part < 1:
        raise ValueError("min_part must be >= 1")
    if max_part is not None and (max_part is UNBOUNDED or max_part == UNBOUNDED):
        max_part = None
    return [Partition(p) for p in _partitions(total, min_part, max_part)]


def enumerate_quadruples(n: int, kind: str = "u") -> list[Quadruple]:
    """All family members with total part-sum n, in deterministic order.

    Members are generated by the smallest part s of p1: p1 runs over
    partitions with smallest part exactly s (twice for the v family), p2 and
    p3 over partitions with parts >= s, and p4 over partitions with parts in
    [s, 2s].  Output is sorted lexicographically by (s, p1, p2, p3, p4).
    """
    _check_kind(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    forced = 1 if kind == "u" else 2
    quads = []
    for s in range(1, n // forced + 1):
        anchor = (s,) * forced
        for t1 in range(forced * s, n + 1):
            for core in _partitions(t1 - forced * s, s, None):
                p1 = Partition(core + anchor)
                rem = n - t1
                for t2 in range(rem + 1):
                    for c2 in _partitions(t2, s, None):
                        for t3 in range(rem - t2 + 1):
                            for c3 in _partitions(t3, s, None):
                                for c4 in _partitions(rem - t2 - t3, s, 2 * s):
                                    quads.append(Quadruple(p1, Partition(c2),
                                                           Partition(c3), Partition(c4)))
    quads.sort(key=Quadruple.sort_key)
    return quads


def rank_counts(n: int, kind: str = "u") -> dict[int, int]:
    """Histogram rank -> number of family members of n with that rank."""
    counts: dict[int, int] = {}
    for qd in enumerate_quadruples(n, kind):
        r = qd.rank(kind)
        counts[r] = counts.get(r, 0) + 1
    return counts


def class_counts(n: int, kind: str, ell: int) -> list[int]:
    """Residue-class totals of the rank mod ell; sums to u(n) or v(n)."""
    if ell < 2:
        raise ValueError("modulus must be >= 2")
    out = [0] * ell
    for r, c in rank_counts(n, kind).items():
        out[r % ell] += c
    return out


@dataclass(frozen=True)
class RankTableRow:
    quadruple: Quadruple
    omega: int
    rank: int
    mod3: int
    mod5: int
    mod7: int

    def as_dict(self) -> dict:
        qd = self.quadruple
        return {
            "p1": qd.p1.label(), "p2": qd.p2.label(),
            "p3": qd.p3.label(), "p4": qd.p4.label(),
            "omega": self.omega, "rank": self.rank,
            "mod3": self.mod3, "mod5": self.mod5, "mod7": self.mod7,
        }


RANK_TABLE_COLUMNS = ("p1", "p2", "p3", "p4", "omega", "rank", "mod3", "mod5", "mod7")


def rank_table(n: int, kind: str = "u") -> list[RankTableRow]:
    """Full rank table for the family members of n, in enumeration order."""
    rows = []
    for qd in enumerate_quadruples(n, kind):
        r = qd.rank(kind)
        rows.append(RankTableRow(qd, qd.omega(), r, r % 3, r % 5, r % 7))
    return rows
