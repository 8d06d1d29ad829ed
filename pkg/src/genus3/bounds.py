"""Upper bounds for the maximal number of points on a genus-3 curve."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .algebra import prime_power

LEMMA_LABEL = "lemma"

KNOWN = {
    2: 7, 3: 10, 4: 14, 5: 16, 7: 20, 8: 24, 9: 28,
    11: 28, 13: 32, 16: 38, 17: 40, 19: 44, 23: 48, 25: 56,
    27: 56, 29: 60, 31: 62, 32: 64, 37: 72, 41: 78, 43: 80,
    47: 87, 49: 92, 53: 96, 59: 102, 61: 107, 64: 113, 67: 116,
    71: 120, 73: 122, 79: 131, 81: 136, 83: 136, 89: 144, 97: 155,
}

# Items quoted as sufficient for each q; q = 32 needs the lemma.
ATTRIBUTION = {
    2: "ad", 3: "f", 4: "b", 5: "bd", 7: "bf", 8: "c", 9: "c",
    11: "be", 13: "bf", 16: "b", 17: "bd", 19: "bc", 23: "g", 25: "bc",
    27: "e", 29: "c", 31: "f", 32: "", 37: "d", 41: "c", 43: "f",
    47: "c", 49: "c", 53: "c", 59: "g", 61: "c", 64: "c", 67: "c",
    71: "c", 73: "f", 79: "c", 81: "c", 83: "e", 89: "c", 97: "c",
}


def serre_m(q: int) -> int:
    """floor(2 sqrt(q))."""
    if q < 1:
        raise ValueError("q must be positive")
    return isqrt(4 * q)


def _solve(q: int, shape) -> int | None:
    """Smallest a >= 0 with shape(a) == q, if any (shape increasing)."""
    for a in range(isqrt(q) + 2):
        v = shape(a)
        if v == q:
            return a
        if v > q:
            break
    return None


def applicable_items(q: int) -> dict[str, int]:
    prime_power(q)
    m = serre_m(q)
    items = {"a": q * q + q + 1}
    if q not in (8, 9):
        items["b"] = 2 * q + 6
    items["c"] = q + 1 + 3 * m
    if _solve(q, lambda a: a * a + 1) is not None:
        items["d"] = q + 3 * m - 1
    a = _solve(q, lambda a: a * a + 2)
    if a is not None and a >= 2:
        items["e"] = q + 3 * m - 1
    if _solve(q, lambda a: a * a + a + 1) is not None:
        items["f"] = q + 3 * m - 2
    a = _solve(q, lambda a: a * a + a + 3)
    if a is not None and a >= 3:
        items["g"] = q + 3 * m - 2
    return items


def lemma_applies_unguarded(q: int) -> bool:
    m = serre_m(q)
    return 4 * q - m * m <= 11


def lemma_guard(q: int) -> bool:
    """Squares and q = 8 are excluded: there the bound is beaten by actual curves."""
    return isqrt(q) ** 2 != q and q != 8


def serre_lemma_bound(q: int) -> int | None:
    prime_power(q)
    if lemma_applies_unguarded(q) and lemma_guard(q):
        return q + 3 * serre_m(q) - 1
    return None


def serre_lemma_bound_unguarded(q: int) -> int | None:
    prime_power(q)
    if lemma_applies_unguarded(q):
        return q + 3 * serre_m(q) - 1
    return None


@dataclass(frozen=True)
class BoundReport:
    q: int
    m: int
    items: dict
    lemma_bound: int | None
    lemma_unguarded: int | None
    best: int
    achieved_by: tuple
    known: int | None

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "items": dict(sorted(self.items.items())),
            "lemma_bound": self.lemma_bound,
            "lemma_unguarded": self.lemma_unguarded,
            "best": self.best,
            "achieved_by": list(self.achieved_by),
            "known": self.known,
        }


def best_upper_bound(q: int) -> BoundReport:
    items = applicable_items(q)
    lemma = serre_lemma_bound(q)
    candidates = dict(items)
    if lemma is not None:
        candidates[LEMMA_LABEL] = lemma
    best = min(candidates.values())
    achieved = tuple(sorted(k for k, v in candidates.items() if v == best))
    return BoundReport(
        q=q,
        m=serre_m(q),
        items=items,
        lemma_bound=lemma,
        lemma_unguarded=serre_lemma_bound_unguarded(q),
        best=best,
        achieved_by=achieved,
        known=KNOWN.get(q),
    )


def known_table() -> dict[int, int]:
    return dict(KNOWN)
