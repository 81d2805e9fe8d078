"""Bott localization sums over the fixed points.

For d >= 5 the degree of the locus of degree-d surfaces containing an
elliptic quartic is the sum over fixed points of

    e_16(weights of the degree-d standard monomials) / prod(tangent weights),

all specialized at an admissible integer weight vector.  For d = 4 the
forgetful map contracts a pair of pencils, and the count becomes one quarter
of the sum of Pluecker-weight times e_15 over the same denominators.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction

from .fixpoints import StructuralError
from .ideals import standard_monomials
from .torus import CharBag, WeightSpec, check_generic, elem_sym, specialize

DIM = 16  # dimension of the blown-up parameter space


@dataclass(frozen=True)
class DegreeResult:
    d: int
    degree: int
    spec: WeightSpec
    fixpoint_count: int

    def to_json(self):
        return {
            "d": self.d,
            "degree": str(self.degree),
            "spec": list(self.spec.values),
            "fixpointCount": self.fixpoint_count,
        }


def ed_weights(fp, d):
    """Characters of the degree-d standard monomials at a fixed point.

    This is the fiber of the rank-4d quotient bundle: the degree-d monomials
    surviving modulo the quartic system.  A size other than 4d means the
    4-regularity of the limit ideal failed, which is a structural bug.
    """
    if d < 4:
        raise ValueError(f"fiber weights need d >= 4, got {d}")
    std = standard_monomials(fp.quartics, d)
    if len(std) != 4 * d:
        raise StructuralError(
            f"fiber rank {len(std)} != {4 * d} at {fp.tag}{fp.provenance}, d={d}"
        )
    return CharBag(std)


def _fiber_values(fp, d, values):
    """Specialized weights of the degree-d fiber, unsorted."""
    std = standard_monomials(fp.quartics, d)
    if len(std) != 4 * d:
        raise StructuralError(
            f"fiber rank {len(std)} != {4 * d} at {fp.tag}{fp.provenance}, d={d}"
        )
    w0, w1, w2, w3 = values
    return [a0 * w0 + a1 * w1 + a2 * w2 + a3 * w3 for a0, a1, a2, a3 in std]


def _tangent_denominator(fp, spec):
    den = 1
    for c in fp.tangent_chars():
        v = specialize(c, spec)
        if v == 0:
            raise ValueError(
                f"weight spec {spec.values} kills a tangent character at"
                f" {fp.tag}{fp.provenance}; run check_generic first"
            )
        den *= v
    return den


def contribution(fp, d, spec):
    """One Bott summand for d >= 5: c_16 of the fiber over c_16 of the tangent."""
    if d < 5:
        raise ValueError("plain localization applies for d >= 5 only")
    num = elem_sym(DIM, _fiber_values(fp, d, spec.values))
    return Fraction(num, _tangent_denominator(fp, spec))


def contribution_d4(fp, spec):
    """One summand of the quartic-surface count: Pi * c_15(E_4) / c_16(T)."""
    plucker = -(
        specialize(fp.pencil_chars[0], spec) + specialize(fp.pencil_chars[1], spec)
    )
    num = plucker * elem_sym(DIM - 1, _fiber_values(fp, 4, spec.values))
    return Fraction(num, _tangent_denominator(fp, spec))


def _sum_chunk(args):
    points, ds, spec = args
    totals = {d: Fraction(0) for d in ds}
    for fp in points:
        den = _tangent_denominator(fp, spec)
        for d in ds:
            if d == 4:
                plucker = -(
                    specialize(fp.pencil_chars[0], spec)
                    + specialize(fp.pencil_chars[1], spec)
                )
                num = plucker * elem_sym(DIM - 1, _fiber_values(fp, 4, spec.values))
            else:
                num = elem_sym(DIM, _fiber_values(fp, d, spec.values))
            totals[d] += Fraction(num, den)
    return totals


def _localize(points, ds, spec, workers):
    """Exact Bott sums for each degree in ds (4 means the Pluecker-twisted sum)."""
    if workers <= 1 or len(points) < 2 * workers:
        return _sum_chunk((points, ds, spec))
    chunk = (len(points) + workers - 1) // workers
    jobs = [
        (points[i : i + chunk], ds, spec) for i in range(0, len(points), chunk)
    ]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_sum_chunk, jobs)
    totals = {d: Fraction(0) for d in ds}
    for part in parts:
        for d, v in part.items():
            totals[d] += v
    return totals


def degree_nl(d, spec, points, workers=1):
    """Degree of the locus of degree-d surfaces containing an elliptic quartic."""
    if d < 5:
        raise ValueError("degree_nl needs d >= 5; d = 4 goes through degree_nl_d4")
    total = _localize(points, [d], spec, workers)[d]
    if total.denominator != 1:
        raise StructuralError(f"localization sum for d={d} is not an integer: {total}")
    if total < 0:
        raise StructuralError(f"localization sum for d={d} is negative: {total}")
    return DegreeResult(d, int(total), spec, len(points))


def degree_nl_d4(spec, points, workers=1):
    """The quartic-surface count: one quarter of the Pluecker-twisted Bott sum."""
    raw = _localize(points, [4], spec, workers)[4]
    if raw.denominator != 1:
        raise StructuralError(f"raw d=4 sum is not an integer: {raw}")
    if int(raw) % 4 != 0:
        raise StructuralError(f"raw d=4 sum {raw} is not divisible by 4")
    return DegreeResult(4, int(raw) // 4, spec, len(points))


def raw_d4_sum(spec, points, workers=1):
    """The d=4 Bott sum before the quarter factor (divisible by 4)."""
    raw = _localize(points, [4], spec, workers)[4]
    if raw.denominator != 1:
        raise StructuralError(f"raw d=4 sum is not an integer: {raw}")
    return int(raw)


def degree_range(dmin, dmax, spec, points, workers=1):
    """DegreeResults for every d in dmin..dmax (all >= 5), one localization pass."""
    if dmin < 5:
        raise ValueError("degree_range needs dmin >= 5")
    ds = list(range(dmin, dmax + 1))
    totals = _localize(points, ds, spec, workers)
    results = []
    for d in ds:
        total = totals[d]
        if total.denominator != 1:
            raise StructuralError(f"localization sum for d={d} is not an integer")
        results.append(DegreeResult(d, int(total), spec, len(points)))
    return results


def localization_self_test(points, spec):
    """Sum of c_16(T)/c_16(T) over the fixed points: must equal their number."""
    total = Fraction(0)
    for fp in points:
        den = _tangent_denominator(fp, spec)
        total += Fraction(den, den)
    return total


def admissible_spec(points, preferred, strict=False, seed=0):
    """Validate a spec against every tangent bag, with documented fallbacks.

    With strict=True an inadmissible preferred spec raises instead of
    falling back (used when the spec was given explicitly on the CLI).
    """
    from .torus import find_admissible

    bags = [fp.tangent for fp in points]
    if check_generic(preferred, bags):
        return preferred
    if strict:
        raise ValueError(
            f"weight spec {preferred.values} is not admissible: some tangent"
            " character specializes to zero"
        )
    return find_admissible(bags, preferred=preferred, seed=seed)
