"""Exact lattice-point counting in dilated rational polytopes and in their
intersections with complete fans.

A polytope is a halfspace description (rows may be non-strict, strict, or
equalities) together with a trusted integer bounding box at dilation 1; the
t-th dilate keeps every normal vector and scales the right-hand sides by t,
and counting scans only the dilated box.  Rows are rescaled once to integer
coefficients, and rows involving a single coordinate are folded into the axis
ranges, so boxes and simplices are scanned without slack.

A full-dimensional fan is a list of closed cones (homogeneous non-strict
rows).  The multiplicity of a point is the number of closed cones containing
it; the inner pruned count keeps the points of multiplicity exactly one, the
cumulative pruned count sums multiplicities.  A counted point with
multiplicity zero means the fan does not cover space and is a hard error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, lcm
from typing import Iterator, Sequence

from .errors import IncompleteFanError, InputFormatError
from .permutahedron import GPerm
from .polynomial import QuasiPolynomial, interpolate_quasipoly
from .rational import format_rat, parse_rat
from .report import Report

RELATIONS = ("<=", "<", "=")

Row = tuple[tuple[Fraction, ...], str, Fraction]


@dataclass(frozen=True)
class HPolytope:
    d: int
    rows: tuple[Row, ...]
    bbox: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")
        rows = []
        for a, rel, b in self.rows:
            a = tuple(Fraction(c) for c in a)
            if len(a) != self.d:
                raise ValueError("row length mismatch")
            if rel not in RELATIONS:
                raise ValueError(f"unknown relation {rel!r}")
            rows.append((a, rel, Fraction(b)))
        object.__setattr__(self, "rows", tuple(rows))
        if self.bbox is not None:
            box_ = tuple((int(lo), int(hi)) for lo, hi in self.bbox)
            if len(box_) != self.d:
                raise ValueError("bbox length mismatch")
            if any(lo > hi for lo, hi in box_):
                raise ValueError("bbox bounds out of order")
            object.__setattr__(self, "bbox", box_)

    def interior(self) -> "HPolytope":
        """Relative interior: inequality rows become strict, equalities stay."""
        return HPolytope(
            self.d,
            tuple((a, "<" if rel == "<=" else rel, b) for a, rel, b in self.rows),
            self.bbox)

    def with_rows(self, extra: Sequence[Row]) -> "HPolytope":
        return HPolytope(self.d, self.rows + tuple(extra), self.bbox)


def _unit_row(d: int, i: int, sign: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(sign if j == i else 0) for j in range(d))


def unit_cube(d: int) -> HPolytope:
    rows = []
    for i in range(d):
        rows.append((_unit_row(d, i, -1), "<=", Fraction(0)))
        rows.append((_unit_row(d, i, 1), "<=", Fraction(1)))
    return HPolytope(d, tuple(rows), tuple((0, 1) for _ in range(d)))


def box(bounds: Sequence[tuple[Fraction, Fraction]]) -> HPolytope:
    d = len(bounds)
    rows = []
    bbox = []
    for i, (lo, hi) in enumerate(bounds):
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("box bounds out of order")
        rows.append((_unit_row(d, i, -1), "<=", -lo))
        rows.append((_unit_row(d, i, 1), "<=", hi))
        bbox.append((floor(lo), ceil(hi)))
    return HPolytope(d, tuple(rows), tuple(bbox))


def standard_simplex(d: int, scale: Fraction = Fraction(1)) -> HPolytope:
    """x_i >= 0 and sum x_i <= scale."""
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    rows = [(_unit_row(d, i, -1), "<=", Fraction(0)) for i in range(d)]
    rows.append((tuple(Fraction(1) for _ in range(d)), "<=", scale))
    return HPolytope(d, tuple(rows), tuple((0, ceil(scale)) for _ in range(d)))


def single_point(coords: Sequence[Fraction]) -> HPolytope:
    coords = tuple(Fraction(c) for c in coords)
    d = len(coords)
    rows = tuple((_unit_row(d, i, 1), "=", c) for i, c in enumerate(coords))
    bbox = tuple((floor(c), ceil(c)) for c in coords)
    return HPolytope(d, rows, bbox)


@lru_cache(maxsize=None)
def _integer_rows(poly: HPolytope) -> tuple[tuple[tuple[int, ...], str, int], ...]:
    out = []
    for a, rel, b in poly.rows:
        mult = lcm(b.denominator, *(c.denominator for c in a))
        out.append((tuple(int(c * mult) for c in a), rel, int(b * mult)))
    return tuple(out)


def _dilate_frame(poly: HPolytope, t: int):
    """Axis ranges of the t-dilate with single-coordinate rows folded in, plus
    the remaining rows as (coeffs, rel, t*b).  None signals an empty dilate."""
    ranges = [[lo * t, hi * t] for lo, hi in poly.bbox]
    rows = []
    for a, rel, b in _integer_rows(poly):
        nz = [i for i, c in enumerate(a) if c]
        tb = t * b
        if not nz:
            ok = (0 <= tb) if rel == "<=" else (0 < tb) if rel == "<" else (tb == 0)
            if not ok:
                return None, None
        elif len(nz) == 1:
            i = nz[0]
            c = a[i]
            bound = Fraction(tb, c)
            if rel == "=":
                if bound.denominator != 1:
                    return None, None
                v = int(bound)
                ranges[i][0] = max(ranges[i][0], v)
                ranges[i][1] = min(ranges[i][1], v)
            elif (c > 0) == (rel == "<="):
                # c>0 non-strict or c<0 strict tightens from the matching side
                if c > 0:
                    ranges[i][1] = min(ranges[i][1], floor(bound))
                else:
                    ranges[i][0] = max(ranges[i][0], floor(bound) + 1)
            else:
                if c > 0:
                    ranges[i][1] = min(ranges[i][1], ceil(bound) - 1)
                else:
                    ranges[i][0] = max(ranges[i][0], ceil(bound))
        else:
            rows.append((a, rel, tb))
    if any(lo > hi for lo, hi in ranges):
        return None, None
    return [tuple(r) for r in ranges], rows


def _lattice_points(poly: HPolytope, t: int) -> Iterator[tuple[int, ...]]:
    if t < 1:
        raise ValueError("dilation must be a positive integer")
    if poly.bbox is None:
        raise ValueError("counting requires a bounding box")
    ranges, rows = _dilate_frame(poly, t)
    if ranges is None:
        return
    for x in itertools.product(*[range(lo, hi + 1) for lo, hi in ranges]):
        ok = True
        for a, rel, tb in rows:
            s = 0
            for c, xi in zip(a, x):
                if c:
                    s += c * xi
            if rel == "<=":
                if s > tb:
                    ok = False
                    break
            elif rel == "<":
                if s >= tb:
                    ok = False
                    break
            elif s != tb:
                ok = False
                break
        if ok:
            yield x


def count_lattice(poly: HPolytope, t: int) -> int:
    """Number of integer points in the t-th dilate."""
    return sum(1 for _ in _lattice_points(poly, t))


def ehrhart_quasipoly(poly: HPolytope, degree: int, period: int) -> QuasiPolynomial:
    """Quasipolynomial fitted to the dilation counts.

    Degree and period are declared by the caller; each constituent is verified
    against a direct count at one extra node, so a wrong declaration raises.
    """
    return interpolate_quasipoly(lambda t: count_lattice(poly, t), degree, period)


def em_reciprocity_check(poly: HPolytope, degree: int, period: int,
                         t_max: int) -> Report:
    """Sign-alternating closed count at -t against the direct open count at t.

    The closed description must be irredundant (caller responsibility), so the
    relative interior is exactly the strict version of the inequality rows.
    """
    qp = ehrhart_quasipoly(poly, degree, period)
    open_poly = poly.interior()
    sign = (-1) ** degree
    report = Report()
    for t in range(1, t_max + 1):
        report.check(f"t={t}", sign * qp(-t), count_lattice(open_poly, t))
    return report


@dataclass(frozen=True)
class FullDimFan:
    """Closed full-dimensional cones, rows `a . y <= 0`, intended to cover space."""

    cones: tuple[HPolytope, ...]

    def __post_init__(self):
        cones = tuple(self.cones)
        if not cones:
            raise ValueError("a fan needs at least one cone")
        d = cones[0].d
        for cone in cones:
            if cone.d != d:
                raise ValueError("cones of mixed ambient dimension")
            for _a, rel, b in cone.rows:
                if rel != "<=" or b != 0:
                    raise ValueError("cone rows must be homogeneous non-strict inequalities")
        object.__setattr__(self, "cones", cones)

    @property
    def d(self) -> int:
        return self.cones[0].d


def normal_fan_of(P: GPerm) -> FullDimFan:
    """One closed cone per vertex v, cut out by (u - v) . y <= 0 over the
    other vertices u: the directions maximized at v."""
    cones = []
    for v in P.vertices:
        rows = []
        for u in P.vertices:
            if u == v:
                continue
            rows.append((tuple(uc - vc for uc, vc in zip(u, v)), "<=", Fraction(0)))
        cones.append(HPolytope(P.d, tuple(rows), None))
    return FullDimFan(tuple(cones))


@lru_cache(maxsize=None)
def _compiled_fan(fan: FullDimFan):
    return tuple(tuple(a for a, _rel, _b in _integer_rows(cone)) for cone in fan.cones)


def multiplicity(fan: FullDimFan, point: Sequence[int]) -> int:
    """Number of closed cones of the fan containing the point."""
    if len(point) != fan.d:
        raise ValueError("point length mismatch")
    count = 0
    for cone_rows in _compiled_fan(fan):
        inside = True
        for a in cone_rows:
            s = 0
            for c, x in zip(a, point):
                if c:
                    s += c * x
            if s > 0:
                inside = False
                break
        if inside:
            count += 1
    return count


def _check_fan_poly(poly: HPolytope, fan: FullDimFan) -> None:
    if poly.d != fan.d:
        raise ValueError("polytope and fan live in different dimensions")


def inner_pruned_count(poly: HPolytope, fan: FullDimFan, t: int) -> int:
    """Integer points of the t-dilate lying in exactly one closed cone."""
    _check_fan_poly(poly, fan)
    total = 0
    for x in _lattice_points(poly, t):
        mult = multiplicity(fan, x)
        if mult == 0:
            raise IncompleteFanError(f"point {x} lies in no cone of the fan")
        if mult == 1:
            total += 1
    return total


def cumulative_pruned_count(poly: HPolytope, fan: FullDimFan, t: int) -> int:
    """Sum of cone multiplicities over the integer points of the t-dilate."""
    _check_fan_poly(poly, fan)
    total = 0
    for x in _lattice_points(poly, t):
        mult = multiplicity(fan, x)
        if mult == 0:
            raise IncompleteFanError(f"point {x} lies in no cone of the fan")
        total += mult
    return total


def pruned_reciprocity_check(poly: HPolytope, fan: FullDimFan, degree: int,
                             period: int, t_max: int) -> Report:
    """Fit the inner pruned count of the interior, then test its
    sign-alternating value at -t against the cumulative count of the closed
    polytope, for t = 1..t_max."""
    _check_fan_poly(poly, fan)
    open_poly = poly.interior()
    inner = interpolate_quasipoly(
        lambda t: inner_pruned_count(open_poly, fan, t), degree, period)
    sign = (-1) ** degree
    report = Report()
    for t in range(1, t_max + 1):
        report.check(f"t={t}", sign * inner(-t), cumulative_pruned_count(poly, fan, t))
    return report


def _row_to_json(row: Row) -> dict:
    a, rel, b = row
    return {"a": [format_rat(c) for c in a], "rel": rel, "b": format_rat(b)}


def hpolytope_to_json(poly: HPolytope) -> dict:
    doc = {"d": poly.d, "rows": [_row_to_json(r) for r in poly.rows]}
    if poly.bbox is not None:
        doc["bbox"] = [[lo, hi] for lo, hi in poly.bbox]
    return doc


def _parse_rat_field(value) -> Fraction:
    if isinstance(value, str):
        return parse_rat(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise InputFormatError(f"expected a rational literal, got {value!r}")


def hpolytope_from_json(doc: object, *, require_bbox: bool = True) -> HPolytope:
    if not isinstance(doc, dict) or "d" not in doc or "rows" not in doc:
        raise InputFormatError("polytope document needs 'd' and 'rows'")
    d, raw_rows = doc["d"], doc["rows"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InputFormatError("'d' must be a positive integer")
    if not isinstance(raw_rows, list):
        raise InputFormatError("'rows' must be a list")
    rows = []
    for raw in raw_rows:
        if not isinstance(raw, dict) or not {"a", "rel", "b"} <= set(raw):
            raise InputFormatError("each row needs 'a', 'rel' and 'b'")
        if not isinstance(raw["a"], list):
            raise InputFormatError("row 'a' must be a list")
        try:
            a = tuple(_parse_rat_field(c) for c in raw["a"])
            b = _parse_rat_field(raw["b"])
        except ValueError as exc:
            raise InputFormatError(str(exc)) from exc
        rows.append((a, raw["rel"], b))
    bbox = None
    if "bbox" in doc and doc["bbox"] is not None:
        raw_box = doc["bbox"]
        if (not isinstance(raw_box, list)
                or not all(isinstance(p, list) and len(p) == 2
                           and all(isinstance(v, int) and not isinstance(v, bool) for v in p)
                           for p in raw_box)):
            raise InputFormatError("'bbox' must be a list of [lo, hi] integer pairs")
        bbox = tuple((p[0], p[1]) for p in raw_box)
    elif require_bbox:
        raise InputFormatError("polytope document needs a 'bbox'")
    try:
        return HPolytope(d, tuple(rows), bbox)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def fan_to_json(fan: FullDimFan) -> dict:
    return {"cones": [hpolytope_to_json(c) for c in fan.cones]}


def fan_from_json(doc: object) -> FullDimFan:
    if not isinstance(doc, dict) or "cones" not in doc or not isinstance(doc["cones"], list):
        raise InputFormatError("fan document needs a 'cones' list")
    cones = tuple(hpolytope_from_json(c, require_bbox=False) for c in doc["cones"])
    try:
        return FullDimFan(cones)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
