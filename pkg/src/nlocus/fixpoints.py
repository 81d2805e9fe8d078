"""Torus-fixed points of the blown-up parameter space of elliptic quartics.

The parameter space starts as the Grassmannian of pencils of quadrics in P^3
and is blown up twice: first along the locus Z of pencils with a fixed plane,
then along the locus of degenerate cubic systems given by a plane and a
doublet.  Three strata of fixed points contribute to localization sums:

  G2    pencils of coprime quadric monomials                (21 points)
  G2E1  exceptional points over Z with curvilinear limit   (180 points)
  E2    exceptional points over the plane/doublet locus    (324 points)

Each fixed point carries 16 tangent characters, a 19-dimensional system of
quartic monomials cutting out the limit curve, and the characters of the
limiting pencil (the Pluecker weight data needed for the degree-4 count).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .ideals import (
    HilbertPoly,
    Ideal,
    hilbert_polynomial,
    monomial_gb,
    reduce_gb,
    saturate_t,
    set_t_zero,
)
from .poly import (
    Polynomial,
    mono_div,
    mono_key,
    mono_mul,
    monomial_gcd,
    monomials_of_degree,
    parse,
    render,
)
from .torus import CharBag, blowup_tangent, char_add, char_of, grass_tangent

SCHEMA_VERSION = 1

QUADRICS = monomials_of_degree(2)
LINEARS = monomials_of_degree(1)
CUBICS = monomials_of_degree(3)
QUADRIC_BAG = CharBag.of_monomials(QUADRICS)
LINEAR_BAG = CharBag.of_monomials(LINEARS)

G2, G2E1, E2 = "G2", "G2E1", "E2"
STRATA = (G2, G2E1, E2)


class StructuralError(RuntimeError):
    """An invariant of the fixed-point cascade failed; indicates a bug."""


@dataclass(frozen=True)
class PencilPair:
    """A torus-fixed pencil of quadrics with its Grassmannian tangent bag."""

    index: int
    q1: tuple
    q2: tuple
    tangent: CharBag


@dataclass(frozen=True)
class ZPoint:
    """A fixed pencil with a common plane p: q1 = p*l1, q2 = p*l2."""

    plane: tuple
    l1: tuple
    l2: tuple
    tangent_z: CharBag
    normal: CharBag
    pair_index: int

    def is_y_incident(self):
        """True when the plane divides one of the pencil lines (p in {l1,l2})."""
        return self.plane in (self.l1, self.l2)


@dataclass(frozen=True)
class E1Record:
    """One exceptional direction over a ZPoint, with its limit cubic system."""

    direction_index: int
    direction: tuple
    limit_cubics: tuple
    tangent: CharBag


@dataclass(frozen=True)
class WPoint:
    """A degenerate cubic system: plane * (quadrics through a doublet)."""

    plane: tuple
    line: tuple
    doublet: tuple
    tangent_w: CharBag
    normal: CharBag
    cubic_system: tuple
    provenance: tuple


@dataclass(frozen=True)
class FixedPoint:
    """One Bott summand: stratum tag, tangent characters, quartic system."""

    tag: str
    tangent: CharBag
    quartics: tuple
    pencil_chars: tuple
    provenance: tuple

    def quartic_ideal(self):
        return Ideal([Polynomial.monomial(m + (0,)) for m in self.quartics])

    def quartic_gb(self):
        return monomial_gb([m + (0,) for m in self.quartics])

    def tangent_chars(self):
        """The 16 tangent characters with multiplicity, sorted."""
        return self.tangent.expand()


def enumerate_pairs():
    """All 45 pencils of distinct quadric monomials with their tangents."""
    pairs = []
    for i in range(len(QUADRICS)):
        for j in range(i + 1, len(QUADRICS)):
            q1, q2 = QUADRICS[i], QUADRICS[j]
            tangent = grass_tangent(CharBag.of_monomials([q1, q2]), QUADRIC_BAG)
            if tangent.size() != 16:
                raise StructuralError(f"pencil tangent size {tangent.size()} != 16")
            pairs.append(PencilPair(len(pairs), q1, q2, tangent))
    return pairs


def _pencil_quartics(q1, q2):
    """Degree-4 monomials of the pencil times the quadrics; must be 19."""
    out = set()
    for q in (q1, q2):
        for m in QUADRICS:
            out.add(mono_mul(q, m)[:4])
    return _sort_monos(out)


def _sort_monos(monos):
    return tuple(sorted(monos, key=lambda m: mono_key(m + (0,)), reverse=True))


def split_strata(pairs):
    """Coprime pairs become G2 fixed points; pairs with a common plane, ZPoints."""
    g2, zs = [], []
    for pair in pairs:
        g = monomial_gcd(pair.q1, pair.q2)
        if not any(g):
            quartics = _pencil_quartics(pair.q1, pair.q2)
            if len(quartics) != 19:
                raise StructuralError(
                    f"pencil ({render(Polynomial.monomial(pair.q1))},"
                    f" {render(Polynomial.monomial(pair.q2))}) spans"
                    f" {len(quartics)} quartics, expected 19"
                )
            g2.append(
                FixedPoint(
                    tag=G2,
                    tangent=pair.tangent,
                    quartics=quartics,
                    pencil_chars=(char_of(pair.q1), char_of(pair.q2)),
                    provenance=(pair.index,),
                )
            )
        else:
            if sum(g) != 1:
                raise StructuralError("distinct quadric monomials share a quadratic factor")
            l1, l2 = mono_div(pair.q1, g), mono_div(pair.q2, g)
            tangent_z = grass_tangent(
                CharBag.of_monomials([l1, l2]), LINEAR_BAG
            ) + grass_tangent(CharBag.of_monomials([g]), LINEAR_BAG)
            if tangent_z.size() != 7:
                raise StructuralError(f"Z tangent size {tangent_z.size()} != 7")
            normal = pair.tangent - tangent_z
            if not normal.is_effective() or normal.size() != 9:
                raise StructuralError("Z normal bag is not an effective bag of size 9")
            zs.append(ZPoint(g, l1, l2, tangent_z, normal, pair.index))
    return g2, zs


def _limit_cubics(other, deformed):
    """Flat limit of the cubic system <other, deformed> * (x0..x3) as t -> 0.

    Multiplies the pencil by the linear forms, saturates with respect to t,
    sets t = 0, and returns the degree-3 monomials of the resulting ideal,
    which must be monomial of rank 8.
    """
    limit = set_t_zero(saturate_t(deformation_ideal(other, deformed)))
    gb = reduce_gb(limit)
    for g in gb.basis:
        if not g.is_monomial():
            raise StructuralError(f"t=0 limit ideal is not monomial: {g}")
    cubics = [
        m[:4]
        for m in CUBICS
        if any(lt[4] == 0 and all(a <= b for a, b in zip(lt[:4], m[:4])) for lt in gb.leading_terms)
    ]
    if len(cubics) != 8:
        raise StructuralError(f"limit cubic system has rank {len(cubics)}, expected 8")
    return _sort_monos(cubics), gb


def _deformations(pencil, e):
    """(other generator, deformed generator) for each monomial presentation of e.

    A presentation deforms the pencil generator q whose character makes
    e + char(q) a genuine quadric monomial m', giving q + t*m'.
    """
    out = []
    for j, qj in enumerate(pencil):
        shift = char_add(e, char_of(qj))
        if all(v >= 0 for v in shift):
            out.append((pencil[1 - j], Polynomial({qj: 1, shift + (1,): 1})))
    return out


def deformation_ideal(other, deformed):
    """The deformed pencil times the linear forms: 8 cubic generators."""
    gens = []
    for pencil_gen in (Polynomial.monomial(other), deformed):
        for x in LINEARS:
            gens.append(pencil_gen.mul_monomial(x))
    return Ideal(gens)


def e1_deformation_ideals():
    """All 216 E1 deformation ideals, first presentation per direction."""
    pairs = enumerate_pairs()
    _, zs = split_strata(pairs)
    out = []
    for z in zs:
        pair = pairs[z.pair_index]
        for e, _ in z.normal.entries():
            other, deformed = _deformations((pair.q1, pair.q2), e)[0]
            out.append(deformation_ideal(other, deformed))
    return out


def e1_points(z, pair):
    """The 9 exceptional fixed-point records over a ZPoint.

    For each normal character e, the pencil generator whose character admits
    the monomial presentation of e is deformed by t times the corresponding
    quadric monomial; the limit cubic system is the t -> 0 flat limit.  When
    both generators admit a presentation the limits are computed for both
    and must agree (the fixed point only depends on the character).
    """
    pencil = (pair.q1, pair.q2)
    records = []
    for index, (e, mult) in enumerate(z.normal.entries()):
        if mult != 1:
            raise StructuralError("normal character with multiplicity > 1 over Z")
        limits = [
            _limit_cubics(other, deformed)
            for other, deformed in _deformations(pencil, e)
        ]
        if not limits:
            raise StructuralError(f"no pencil generator admits direction {e}")
        cubics = limits[0][0]
        for other_cubics, _ in limits[1:]:
            if other_cubics != cubics:
                raise StructuralError(f"limit ideal depends on the presentation of {e}")
        tangent = blowup_tangent(z.tangent_z, z.normal, e)
        if not tangent.is_effective() or tangent.size() != 16:
            raise StructuralError("E1 tangent bag is not effective of size 16")
        records.append(E1Record(index, e, cubics, tangent))
    return records


_HILB_4T = HilbertPoly((Fraction(0), Fraction(4)))


def _is_curve_hilb(monos):
    """True when the monomial system cuts a curve with Hilbert polynomial 4t."""
    return hilbert_polynomial(monomial_gb([m + (0,) for m in monos])) == _HILB_4T


def classify_e1(record, z, pair, z_index):
    """Sort an E1 record into a G2E1 fixed point or a WPoint.

    The limit cubic system either cuts out a curve with the elliptic-quartic
    Hilbert polynomial (then its product with the linear forms is the
    19-dimensional quartic system) or is a plane times an 8-dimensional
    system of quadrics through a doublet.
    """
    if _is_curve_hilb(record.limit_cubics):
        quartics = set()
        for c in record.limit_cubics:
            for x in LINEARS:
                quartics.add(mono_mul(c + (0,), x)[:4])
        quartics = _sort_monos(quartics)
        if len(quartics) != 19:
            raise StructuralError(
                f"G2E1 quartic system has rank {len(quartics)}, expected 19"
            )
        return FixedPoint(
            tag=G2E1,
            tangent=record.tangent,
            quartics=quartics,
            pencil_chars=(char_of(pair.q1), char_of(pair.q2)),
            provenance=(z_index, record.direction_index),
        )

    plane = record.limit_cubics[0][:4]
    for c in record.limit_cubics[1:]:
        plane = monomial_gcd(plane, c)
    if sum(plane) != 1:
        raise StructuralError("degenerate cubic system has no common plane")
    plane5 = plane + (0,)
    if plane5 != z.plane:
        raise StructuralError("common factor of the limit cubics is not the Z plane")
    if not z.is_y_incident():
        raise StructuralError("degenerate limit over a ZPoint outside Y")
    line = z.l2 if z.l1 == z.plane else z.l1
    quadrics = [mono_div(c, plane) for c in record.limit_cubics]
    i_plane = plane.index(1)
    i_line = line[:4].index(1)
    survivors = [q for q in quadrics if q[i_plane] == 0 and q[i_line] == 0]
    if len(survivors) != 1:
        raise StructuralError(f"doublet is not unique: {survivors}")
    doublet = survivors[0] + (0,)
    rest = [v for v in range(4) if v not in (i_plane, i_line)]
    a, b = rest
    doublet_ambient = CharBag.of_monomials(
        [_quadric_in(a, a), _quadric_in(a, b), _quadric_in(b, b)]
    )
    tangent_w = (
        grass_tangent(CharBag.of_monomials([plane5]), LINEAR_BAG)
        + grass_tangent(
            CharBag.of_monomials([line]), LINEAR_BAG - CharBag.of_monomials([plane5])
        )
        + grass_tangent(CharBag.of_monomials([doublet]), doublet_ambient)
    )
    if tangent_w.size() != 7:
        raise StructuralError(f"W tangent size {tangent_w.size()} != 7")
    normal = record.tangent - tangent_w
    if not normal.is_effective() or normal.size() != 9:
        raise StructuralError("W normal bag is not an effective bag of size 9")
    return WPoint(
        plane=plane5,
        line=line,
        doublet=doublet,
        tangent_w=tangent_w,
        normal=normal,
        cubic_system=record.limit_cubics,
        provenance=(z_index, record.direction_index),
    )


def _quadric_in(a, b):
    e = [0, 0, 0, 0, 0]
    e[a] += 1
    e[b] += 1
    return tuple(e)


def e2_points(w, w_index):
    """The 9 fixed points of the plane-quartic fiber over a WPoint.

    Each normal character e picks the quartic monomial g of character
    e + char(plane * line * doublet); the quartic system is the cubic system
    times the linear forms plus g, of rank 19.
    """
    base = set()
    for c in w.cubic_system:
        for x in LINEARS:
            base.add(mono_mul(c + (0,), x)[:4])
    if len(base) != 18:
        raise StructuralError(f"W quartic base has rank {len(base)}, expected 18")
    anchor = char_add(char_add(char_of(w.plane), char_of(w.line)), char_of(w.doublet))
    pencil_chars = (
        char_add(char_of(w.plane), char_of(w.plane)),
        char_add(char_of(w.plane), char_of(w.line)),
    )
    points = []
    for index, (e, mult) in enumerate(w.normal.entries()):
        if mult != 1:
            raise StructuralError("normal character with multiplicity > 1 over W")
        g = char_add(e, anchor)
        if any(v < 0 for v in g) or sum(g) != 4:
            raise StructuralError(f"direction {e} has no quartic presentation over W")
        if g in base:
            raise StructuralError(f"extra quartic {g} already in the cubic system")
        tangent = blowup_tangent(w.tangent_w, w.normal, e)
        if not tangent.is_effective() or tangent.size() != 16:
            raise StructuralError("E2 tangent bag is not effective of size 16")
        points.append(
            FixedPoint(
                tag=E2,
                tangent=tangent,
                quartics=_sort_monos(base | {g}),
                pencil_chars=pencil_chars,
                provenance=(w_index, index),
            )
        )
    return points


def enumerate_all(validate=True):
    """All fixed points, in deterministic order G2, G2E1, E2.

    With validate=True each point's quartic system is checked to cut out a
    curve with Hilbert polynomial 4t.
    """
    pairs = enumerate_pairs()
    g2, zs = split_strata(pairs)
    g2e1, ws = [], []
    for z_index, z in enumerate(zs):
        pair = pairs[z.pair_index]
        for record in e1_points(z, pair):
            classified = classify_e1(record, z, pair, z_index)
            if isinstance(classified, FixedPoint):
                g2e1.append(classified)
            else:
                ws.append(classified)
    e2 = []
    for w_index, w in enumerate(ws):
        e2.extend(e2_points(w, w_index))
    points = g2 + g2e1 + e2
    counts = stratum_counts(points)
    if counts != (21, 180, 324):
        raise StructuralError(f"stratum counts {counts} != (21, 180, 324)")
    if validate:
        for fp in points:
            if not _is_curve_hilb(fp.quartics):
                raise StructuralError(
                    f"fixed point {fp.tag}{fp.provenance} fails the 4t Hilbert check"
                )
    return points


def stratum_counts(points):
    return tuple(sum(1 for p in points if p.tag == tag) for tag in STRATA)


def euler_characteristic_oracle():
    """chi of the double blow-up: 45 + 24*8 + 36*8, independent of the cascade."""
    chi_grassmannian = 45
    blowup_z = 24 * (9 - 1)
    blowup_w = 36 * (9 - 1)
    return chi_grassmannian + blowup_z + blowup_w


# ---------------------------------------------------------------------------
# JSON cache


def _bag_to_json(bag):
    return [[*c, k] for c, k in bag.entries()]


def _bag_from_json(data):
    return CharBag([(tuple(row[:4]), row[4]) for row in data])


def point_to_json(fp):
    return {
        "tag": fp.tag,
        "tangent": _bag_to_json(fp.tangent),
        "quartics": [render(Polynomial.monomial(m + (0,))) for m in fp.quartics],
        "pencil": [list(c) for c in fp.pencil_chars],
        "provenance": list(fp.provenance),
    }


def point_from_json(data):
    quartics = []
    for text in data["quartics"]:
        p = parse(text)
        if not p.is_monomial():
            raise ValueError(f"cached quartic is not a monomial: {text}")
        quartics.append(p.lm()[:4])
    return FixedPoint(
        tag=data["tag"],
        tangent=_bag_from_json(data["tangent"]),
        quartics=tuple(quartics),
        pencil_chars=tuple(tuple(c) for c in data["pencil"]),
        provenance=tuple(data["provenance"]),
    )


def cache_bytes(points):
    doc = {
        "schema": SCHEMA_VERSION,
        "counts": dict(zip(STRATA, stratum_counts(points))),
        "points": [point_to_json(fp) for fp in points],
    }
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()


def save_cache(points, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(cache_bytes(points))


def load_cache(path):
    """Points from a cache file, or None when absent or schema-stale."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if doc.get("schema") != SCHEMA_VERSION:
        return None
    return [point_from_json(p) for p in doc["points"]]


def load_or_enumerate(path=None, validate=True):
    """Cached fixed points when fresh, otherwise enumerate (and cache)."""
    if path is not None:
        cached = load_cache(path)
        if cached is not None:
            return cached
    points = enumerate_all(validate=validate)
    if path is not None:
        save_cache(points, path)
    return points
