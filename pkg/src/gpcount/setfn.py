"""Set functions on the subsets of {1, ..., d}.

Subsets are bitmasks (bit i set means element i+1 is in the subset) over a
dense value table of length 2^d.  The module covers the submodularity test,
the greedy vertex rule, pointwise sums, and reconstruction of a set function
from a vertex set by maximizing coordinate sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputFormatError, NotSubmodularError
from .rational import RatVec, format_rat, parse_rat

MAX_GROUND_SET = 8


@dataclass(frozen=True)
class SetFn:
    d: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not 1 <= self.d <= MAX_GROUND_SET:
            raise ValueError(f"ground-set size must be in 1..{MAX_GROUND_SET}, got {self.d}")
        values = tuple(Fraction(v) for v in self.values)
        if len(values) != 1 << self.d:
            raise ValueError(f"need {1 << self.d} values, got {len(values)}")
        if values[0] != 0:
            raise ValueError("the empty set must map to 0")
        object.__setattr__(self, "values", values)

    def value(self, mask: int) -> Fraction:
        return self.values[mask]

    def of_set(self, subset: Iterable[int]) -> Fraction:
        mask = 0
        for i in subset:
            if not 1 <= i <= self.d:
                raise ValueError(f"element {i} outside 1..{self.d}")
            mask |= 1 << (i - 1)
        return self.values[mask]

    @cached_property
    def is_submodular(self) -> bool:
        """Local diminishing-returns criterion over all (A, i, j) with i, j not in A."""
        v = self.values
        for mask in range(1 << self.d):
            free = [i for i in range(self.d) if not mask >> i & 1]
            for pos, i in enumerate(free):
                bi = 1 << i
                for j in free[pos + 1:]:
                    bj = 1 << j
                    if v[mask | bi] + v[mask | bj] < v[mask | bi | bj] + v[mask]:
                        return False
        return True


def standard_perm_setfn(d: int) -> SetFn:
    """z(A) = d + (d-1) + ... + (d-|A|+1), the base function whose polytope is
    the convex hull of the permutations of (1, ..., d)."""
    if not 1 <= d <= MAX_GROUND_SET:
        raise ValueError(f"d must be in 1..{MAX_GROUND_SET}")
    values = []
    for mask in range(1 << d):
        k = mask.bit_count()
        values.append(Fraction(k * d - k * (k - 1) // 2))
    return SetFn(d, tuple(values))


def _check_perm(d: int, perm: Sequence[int]) -> None:
    if sorted(perm) != list(range(1, d + 1)):
        raise ValueError(f"not a permutation of 1..{d}: {tuple(perm)}")


def greedy_vertex(z: SetFn, perm: Sequence[int]) -> RatVec:
    """Vertex selected by the chain {perm[0]} c {perm[0], perm[1]} c ...

    Coordinate perm[j] receives the marginal value of adding perm[j] to the
    chain prefix.  Submodularity is required: only then is the resulting point
    guaranteed to lie in the polytope and maximize the chain's directions.
    """
    _check_perm(z.d, perm)
    if not z.is_submodular:
        raise NotSubmodularError("set function is not submodular")
    coords = [Fraction(0)] * z.d
    mask = 0
    for i in perm:
        prev = z.values[mask]
        mask |= 1 << (i - 1)
        coords[i - 1] = z.values[mask] - prev
    return tuple(coords)


def setfn_sum(z1: SetFn, z2: SetFn) -> SetFn:
    if z1.d != z2.d:
        raise ValueError("mismatched ground-set sizes")
    return SetFn(z1.d, tuple(a + b for a, b in zip(z1.values, z2.values)))


def setfn_from_vertices(vertex_set: Iterable[Sequence[Fraction]]) -> SetFn:
    """Reconstruct z(A) = max over the vertex set of the coordinate sum on A."""
    pts = [tuple(Fraction(c) for c in v) for v in vertex_set]
    if not pts:
        raise ValueError("need at least one vertex")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("vertices of mixed length")
    total = sum(pts[0])
    if any(sum(p) != total for p in pts):
        raise ValueError("vertices do not share a coordinate sum")
    if all(c.denominator == 1 for p in pts for c in p):
        # integer fast path; subset sums stay exact either way
        pts = [tuple(int(c) for c in p) for p in pts]
    n = 1 << d
    best: list = [None] * n
    for p in pts:
        sums = [0] * n
        for mask in range(1, n):
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + p[low.bit_length() - 1]
        for mask in range(n):
            if best[mask] is None or sums[mask] > best[mask]:
                best[mask] = sums[mask]
    return SetFn(d, tuple(Fraction(b) for b in best))


def setfn_to_json(z: SetFn) -> dict:
    return {"d": z.d, "values": [format_rat(v) for v in z.values]}


def setfn_from_json(doc: object) -> SetFn:
    if not isinstance(doc, dict) or "d" not in doc or "values" not in doc:
        raise InputFormatError("set-function document needs 'd' and 'values'")
    d, raw = doc["d"], doc["values"]
    if not isinstance(d, int) or isinstance(d, bool) or not isinstance(raw, list):
        raise InputFormatError("'d' must be an integer and 'values' a list")
    values = []
    for v in raw:
        if isinstance(v, str):
            try:
                values.append(parse_rat(v))
            except ValueError as exc:
                raise InputFormatError(str(exc)) from exc
        elif isinstance(v, int) and not isinstance(v, bool):
            values.append(Fraction(v))
        else:
            raise InputFormatError(f"set-function value must be a rational literal: {v!r}")
    try:
        return SetFn(d, tuple(values))
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
